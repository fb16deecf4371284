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

#ifndef XASSOC_RIDGE_HPP_
#define XASSOC_RIDGE_HPP_

#include "xassoc/autoencoder.hpp"
#include "xassoc/numerics.hpp"

namespace xassoc {

/// Explicit linear transfer u_dst = W u_src.
struct RidgeTransfer {
  Matrix weights;  // dst_dim x src_dim
  double lambda = 0.0;
  Direction direction = Direction::TwitterToYouTube;
};

/// Closed-form minimizer of ||W U_src - U_dst||_F^2 + lambda ||W||_F^2.
/// Columns of `src` and `dst` are users. Throws when lambda == 0 and the
/// Gram matrix is singular.
RidgeTransfer ridge_fit(const Matrix& src, const Matrix& dst, double lambda,
                        Direction direction = Direction::TwitterToYouTube);

Vector ridge_predict(const RidgeTransfer& model, const Vector& u_src);

}  // namespace xassoc

#endif  // XASSOC_RIDGE_HPP_
