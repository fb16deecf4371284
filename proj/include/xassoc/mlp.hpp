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

#ifndef XASSOC_MLP_HPP_
#define XASSOC_MLP_HPP_

#include <string_view>
#include <vector>

#include "xassoc/autoencoder.hpp"
#include "xassoc/numerics.hpp"

namespace xassoc {

enum class MlpOutput { Linear, Sigmoid };

std::string_view mlp_output_name(MlpOutput o);
MlpOutput parse_mlp_output(std::string_view s);

/// One sigmoid hidden layer; the output layer is linear or sigmoid.
struct MlpParams {
  Matrix hidden_weights;  // hidden x src_dim
  Vector hidden_bias;
  Matrix output_weights;  // dst_dim x hidden
  Vector output_bias;

  static MlpParams zeros(std::size_t src_dim, std::size_t hidden, std::size_t dst_dim);
  std::size_t size() const;
  Vector flatten() const;
  void assign(const Vector& flat);
};

struct MlpMapper {
  MlpParams params;
  Direction direction = Direction::TwitterToYouTube;
  MlpOutput output = MlpOutput::Sigmoid;
  double weight_decay = 0.0;
  double initial_loss = 0.0;
  std::vector<double> loss_trace;

  std::size_t src_dim() const { return static_cast<std::size_t>(params.hidden_weights.cols()); }
  std::size_t dst_dim() const { return static_cast<std::size_t>(params.output_weights.rows()); }
  std::size_t hidden() const { return static_cast<std::size_t>(params.hidden_weights.rows()); }
};

/// sum_u ||f(u_src) - u_dst||^2 + weight_decay * (||W1||^2 + ||W2||^2).
/// Columns of `src` / `dst` are users.
double mlp_loss(const MlpMapper& model, const Matrix& src, const Matrix& dst);
MlpParams mlp_grad(const MlpMapper& model, const Matrix& src, const Matrix& dst);

/// Hidden weights uniform in +-init_scale, output weights zero and output
/// bias chosen so the untrained mapper predicts the target mean.
/// Training is minibatch Adam; cfg.weight_decay applies, cfg.sparsity is unused.
MlpMapper mlp_fit(const Matrix& src, const Matrix& dst, std::size_t hidden, const TrainConfig& cfg,
                  Direction direction = Direction::TwitterToYouTube,
                  MlpOutput output = MlpOutput::Sigmoid);

Vector mlp_predict(const MlpMapper& model, const Vector& u_src);

}  // namespace xassoc

#endif  // XASSOC_MLP_HPP_
