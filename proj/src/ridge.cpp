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

#include "xassoc/ridge.hpp"

#include <string>

namespace xassoc {

RidgeTransfer ridge_fit(const Matrix& src, const Matrix& dst, double lambda, Direction direction) {
  if (src.cols() != dst.cols()) {
    throw Error("ridge_fit: source has " + std::to_string(src.cols()) + " users, target has " +
                std::to_string(dst.cols()));
  }
  if (!(lambda >= 0.0)) throw Error("ridge_fit: lambda must be >= 0");
  if (!all_finite(src) || !all_finite(dst)) throw Error("ridge_fit: non-finite input");

  const Eigen::Index n = src.rows();
  Eigen::MatrixXd gram = src * src.transpose();
  gram.diagonal().array() += lambda;
  const Eigen::MatrixXd rhs = src * dst.transpose();  // src_dim x dst_dim

  // Solve gram * W^T = src * dst^T.
  Eigen::MatrixXd weights_t;
  if (lambda > 0.0) {
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    if (llt.info() == Eigen::Success) weights_t = llt.solve(rhs);
  }
  if (weights_t.size() == 0) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(gram);
    if (qr.rank() < n) {
      throw Error("ridge_fit: Gram matrix is singular (rank " + std::to_string(qr.rank()) + " < " +
                  std::to_string(n) + "); use lambda > 0");
    }
    weights_t = qr.solve(rhs);
  }
  RidgeTransfer model;
  model.weights = weights_t.transpose();
  model.lambda = lambda;
  model.direction = direction;
  if (!all_finite(model.weights)) throw Error("ridge_fit: solution is not finite");
  return model;
}

Vector ridge_predict(const RidgeTransfer& model, const Vector& u_src) {
  if (u_src.size() != model.weights.cols()) {
    throw Error("ridge_predict: input has " + std::to_string(u_src.size()) + " entries, expected " +
                std::to_string(model.weights.cols()));
  }
  return model.weights * u_src;
}

}  // namespace xassoc
