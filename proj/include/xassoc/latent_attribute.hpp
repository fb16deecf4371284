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

#ifndef XASSOC_LATENT_ATTRIBUTE_HPP_
#define XASSOC_LATENT_ATTRIBUTE_HPP_

#include <cstdint>
#include <vector>

#include "xassoc/numerics.hpp"
#include "xassoc/repr.hpp"

namespace xassoc {

/// Shared sparse codes over two coupled dictionaries:
///   min ||U_T - D_T S||_F^2 + ||U_Y - D_Y S||_F^2 + lambda ||S||_1
///   s.t. every column of D_T and of D_Y has L2 norm <= 1.
struct LatentAttribute {
  Matrix dict_twitter;  // dim_T x atoms
  Matrix dict_youtube;  // dim_Y x atoms
  double lambda = 0.0;
  /// Objective at init and after every code and dictionary half-step.
  std::vector<double> objective_trace;

  std::size_t atoms() const { return static_cast<std::size_t>(dict_twitter.cols()); }
  const Matrix& dict(Platform p) const {
    return p == Platform::Twitter ? dict_twitter : dict_youtube;
  }
};

struct LaConfig {
  std::size_t atoms = 40;
  double lambda = 0.01;
  std::size_t iterations = 30;
  /// Coordinate-descent sweeps per code step.
  std::size_t code_sweeps = 50;
  /// Projected-gradient steps per dictionary step.
  std::size_t dict_steps = 20;
  std::uint64_t seed = 0;
};

double la_objective(const Matrix& u_twitter, const Matrix& u_youtube, const Matrix& dict_twitter,
                    const Matrix& dict_youtube, const Matrix& codes, double lambda);

/// Lasso code argmin_s ||u - D s||^2 + lambda ||s||_1 by cyclic coordinate
/// descent from `start` (zeros if empty). Each coordinate update is exact, so
/// the objective never increases.
Vector lasso_code(const Matrix& dict, const Vector& u, double lambda, Vector start = {},
                  std::size_t max_sweeps = 1000, double tol = 1e-12);

/// Alternating minimization. Columns of the inputs are users. Throws if the
/// objective rises by more than 1e-10 between half-steps.
LatentAttribute la_fit(const Matrix& u_twitter, const Matrix& u_youtube, const LaConfig& cfg);

/// Codes `u_src` against the source dictionary alone and decodes with the
/// other platform's dictionary.
Vector la_predict(const LatentAttribute& model, const Vector& u_src, Platform src);

}  // namespace xassoc

#endif  // XASSOC_LATENT_ATTRIBUTE_HPP_
