//
// Copyright (C) 2026 The xassoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef XASSOC_NUMERICS_HPP_
#define XASSOC_NUMERICS_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace xassoc {

/// Dense row-major float64 matrix. Weight matrices, dictionaries and
/// user-by-topic stacks all use this type.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Derived>
bool all_finite(const Eigen::DenseBase<Derived>& x) {
  return x.derived().array().isFinite().all();
}

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

Vector sigmoid(const Vector& x);

/// Elementwise logistic function applied in place.
template <class Derived>
void sigmoid_inplace(Eigen::DenseBase<Derived>& x) {
  x.derived() = (1.0 + (-x.derived().array()).exp()).inverse().matrix();
}

struct AdamConfig {
  double learning_rate = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// First/second moment estimates for a flat parameter vector. Owned by a
/// single training loop.
class AdamState {
 public:
  AdamState() = default;
  AdamState(std::size_t size, AdamConfig config);

  std::size_t size() const { return first_moment_.size(); }
  std::uint64_t step() const { return step_; }
  const AdamConfig& config() const { return config_; }
  const std::vector<double>& first_moment() const { return first_moment_; }
  const std::vector<double>& second_moment() const { return second_moment_; }

 private:
  friend void adam_update(std::span<double>, std::span<const double>, AdamState&);

  AdamConfig config_;
  std::vector<double> first_moment_;
  std::vector<double> second_moment_;
  std::uint64_t step_ = 0;
};

/// One bias-corrected Adam step. Throws on length mismatch.
void adam_update(std::span<double> params, std::span<const double> grads, AdamState& state);

/// Central-difference gradient of `loss` at `params`. Test oracle only.
Vector numerical_gradient(const std::function<double(const Vector&)>& loss, const Vector& params,
                          double eps);

/// Rows of `m` gathered into a new matrix in the order given by `rows`.
Matrix gather_rows(const Matrix& m, std::span<const std::size_t> rows);

}  // namespace xassoc

#endif  // XASSOC_NUMERICS_HPP_
