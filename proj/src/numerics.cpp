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

#include "xassoc/numerics.hpp"

#include <cmath>
#include <string>

namespace xassoc {

Vector sigmoid(const Vector& x) {
  Vector out = x;
  sigmoid_inplace(out);
  return out;
}

AdamState::AdamState(std::size_t size, AdamConfig config)
    : config_(config), first_moment_(size, 0.0), second_moment_(size, 0.0) {}

void adam_update(std::span<double> params, std::span<const double> grads, AdamState& state) {
  if (params.size() != grads.size() || params.size() != state.size()) {
    throw Error("adam_update: shape mismatch (params " + std::to_string(params.size()) +
                ", grads " + std::to_string(grads.size()) + ", state " +
                std::to_string(state.size()) + ")");
  }
  const AdamConfig& c = state.config_;
  ++state.step_;
  const double t = static_cast<double>(state.step_);
  const double correction1 = 1.0 - std::pow(c.beta1, t);
  const double correction2 = 1.0 - std::pow(c.beta2, t);
  double* m = state.first_moment_.data();
  double* v = state.second_moment_.data();
  for (std::size_t j = 0; j < params.size(); ++j) {
    const double g = grads[j];
    m[j] = c.beta1 * m[j] + (1.0 - c.beta1) * g;
    v[j] = c.beta2 * v[j] + (1.0 - c.beta2) * g * g;
    const double m_hat = m[j] / correction1;
    const double v_hat = v[j] / correction2;
    params[j] -= c.learning_rate * m_hat / (std::sqrt(v_hat) + c.epsilon);
  }
}

Vector numerical_gradient(const std::function<double(const Vector&)>& loss, const Vector& params,
                          double eps) {
  if (!(eps > 0.0)) throw Error("numerical_gradient: eps must be positive");
  Vector grad(params.size());
  Vector probe = params;
  for (Eigen::Index j = 0; j < params.size(); ++j) {
    probe[j] = params[j] + eps;
    const double up = loss(probe);
    probe[j] = params[j] - eps;
    const double down = loss(probe);
    probe[j] = params[j];
    if (!std::isfinite(up) || !std::isfinite(down)) {
      throw Error("numerical_gradient: non-finite loss at coordinate " + std::to_string(j));
    }
    grad[j] = (up - down) / (2.0 * eps);
  }
  return grad;
}

Matrix gather_rows(const Matrix& m, std::span<const std::size_t> rows) {
  Matrix out(static_cast<Eigen::Index>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = m.row(static_cast<Eigen::Index>(rows[i]));
  }
  return out;
}

}  // namespace xassoc
