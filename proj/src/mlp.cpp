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

#include "xassoc/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "xassoc/rng.hpp"

namespace xassoc {

namespace {

using Index = Eigen::Index;

template <class Params, class Fn>
void for_each_block(Params& p, Fn&& fn) {
  fn(p.hidden_weights.data(), p.hidden_weights.size());
  fn(p.hidden_bias.data(), p.hidden_bias.size());
  fn(p.output_weights.data(), p.output_weights.size());
  fn(p.output_bias.data(), p.output_bias.size());
}

// Rows are users here.
double loss_and_grad_rows(const MlpMapper& model, const Matrix& x, const Matrix& y,
                          MlpParams* grad) {
  const MlpParams& p = model.params;
  if (x.cols() != p.hidden_weights.cols() || y.cols() != p.output_weights.rows() ||
      x.rows() != y.rows()) {
    throw Error("mlp: input dimensions do not match the model");
  }
  Matrix hidden = x * p.hidden_weights.transpose();
  hidden.rowwise() += p.hidden_bias.transpose();
  sigmoid_inplace(hidden);
  Matrix out = hidden * p.output_weights.transpose();
  out.rowwise() += p.output_bias.transpose();
  if (model.output == MlpOutput::Sigmoid) sigmoid_inplace(out);
  const Matrix residual = out - y;
  const double loss = residual.squaredNorm() +
                      model.weight_decay * (p.hidden_weights.squaredNorm() +
                                            p.output_weights.squaredNorm());
  if (grad) {
    Matrix d_out = 2.0 * residual;
    if (model.output == MlpOutput::Sigmoid) d_out.array() *= out.array() * (1.0 - out.array());
    grad->output_weights.noalias() = d_out.transpose() * hidden;
    grad->output_weights += 2.0 * model.weight_decay * p.output_weights;
    grad->output_bias = d_out.colwise().sum().transpose();
    Matrix d_hidden = d_out * p.output_weights;
    d_hidden.array() *= hidden.array() * (1.0 - hidden.array());
    grad->hidden_weights.noalias() = d_hidden.transpose() * x;
    grad->hidden_weights += 2.0 * model.weight_decay * p.hidden_weights;
    grad->hidden_bias = d_hidden.colwise().sum().transpose();
  }
  return loss;
}

}  // namespace

std::string_view mlp_output_name(MlpOutput o) {
  return o == MlpOutput::Linear ? "linear" : "sigmoid";
}

MlpOutput parse_mlp_output(std::string_view s) {
  if (s == "linear") return MlpOutput::Linear;
  if (s == "sigmoid") return MlpOutput::Sigmoid;
  throw Error("unknown MLP output activation '" + std::string(s) + "' (expected linear or sigmoid)");
}

MlpParams MlpParams::zeros(std::size_t src_dim, std::size_t hidden, std::size_t dst_dim) {
  const auto m = static_cast<Index>(hidden);
  return MlpParams{Matrix::Zero(m, static_cast<Index>(src_dim)), Vector::Zero(m),
                   Matrix::Zero(static_cast<Index>(dst_dim), m),
                   Vector::Zero(static_cast<Index>(dst_dim))};
}

std::size_t MlpParams::size() const {
  return static_cast<std::size_t>(hidden_weights.size() + hidden_bias.size() +
                                  output_weights.size() + output_bias.size());
}

Vector MlpParams::flatten() const {
  Vector flat(static_cast<Index>(size()));
  Index offset = 0;
  for_each_block(*this, [&](const double* data, Index n) {
    std::copy(data, data + n, flat.data() + offset);
    offset += n;
  });
  return flat;
}

void MlpParams::assign(const Vector& flat) {
  if (static_cast<std::size_t>(flat.size()) != size()) {
    throw Error("MlpParams::assign: wrong parameter count");
  }
  Index offset = 0;
  for_each_block(*this, [&](double* data, Index n) {
    std::copy(flat.data() + offset, flat.data() + offset + n, data);
    offset += n;
  });
}

double mlp_loss(const MlpMapper& model, const Matrix& src, const Matrix& dst) {
  return loss_and_grad_rows(model, src.transpose(), dst.transpose(), nullptr);
}

MlpParams mlp_grad(const MlpMapper& model, const Matrix& src, const Matrix& dst) {
  MlpParams g = MlpParams::zeros(model.src_dim(), model.hidden(), model.dst_dim());
  loss_and_grad_rows(model, src.transpose(), dst.transpose(), &g);
  return g;
}

MlpMapper mlp_fit(const Matrix& src, const Matrix& dst, std::size_t hidden, const TrainConfig& cfg,
                  Direction direction, MlpOutput output) {
  if (src.cols() != dst.cols()) throw Error("mlp_fit: user counts differ");
  if (src.cols() == 0) throw Error("mlp_fit: no training users");
  if (hidden < 1) throw Error("mlp_fit: hidden layer is empty");
  cfg.validate();

  MlpMapper model;
  model.direction = direction;
  model.output = output;
  model.weight_decay = cfg.weight_decay;
  model.params = MlpParams::zeros(static_cast<std::size_t>(src.rows()), hidden,
                                  static_cast<std::size_t>(dst.rows()));
  Rng init(derive_seed(cfg.seed, "mlp-init"));
  for (Index i = 0; i < model.params.hidden_weights.rows(); ++i)
    for (Index j = 0; j < model.params.hidden_weights.cols(); ++j)
      model.params.hidden_weights(i, j) = init.uniform(-cfg.init_scale, cfg.init_scale);
  model.params.output_bias = dst.rowwise().mean();
  if (output == MlpOutput::Sigmoid) {
    static constexpr double kEdge = 1e-6;
    model.params.output_bias = model.params.output_bias.unaryExpr([](double m) {
      const double q = std::clamp(m, kEdge, 1.0 - kEdge);
      return std::log(q / (1.0 - q));
    });
  }

  const Matrix x = src.transpose();
  const Matrix y = dst.transpose();
  model.initial_loss = loss_and_grad_rows(model, x, y, nullptr);

  const auto n = static_cast<std::size_t>(x.rows());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng shuffler(derive_seed(cfg.seed, "mlp-batches"));
  AdamState adam(model.params.size(), cfg.adam);
  MlpParams grad = MlpParams::zeros(model.src_dim(), hidden, model.dst_dim());

  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    shuffler.shuffle(std::span<std::size_t>(order));
    double epoch_loss = 0.0;
    for (std::size_t start = 0; start < n; start += cfg.batch_size) {
      const std::size_t stop = std::min(n, start + cfg.batch_size);
      const std::span<const std::size_t> idx(order.data() + start, stop - start);
      model.weight_decay =
          cfg.weight_decay * static_cast<double>(stop - start) / static_cast<double>(n);
      const double loss = loss_and_grad_rows(model, gather_rows(x, idx), gather_rows(y, idx), &grad);
      model.weight_decay = cfg.weight_decay;
      if (!std::isfinite(loss)) {
        std::ostringstream msg;
        msg << "mlp_fit: non-finite loss at epoch " << epoch << ", batch starting at " << start;
        throw Error(msg.str());
      }
      epoch_loss += loss;
      Vector flat = model.params.flatten();
      const Vector flat_grad = grad.flatten();
      adam_update(std::span<double>(flat.data(), static_cast<std::size_t>(flat.size())),
                  std::span<const double>(flat_grad.data(), static_cast<std::size_t>(flat_grad.size())),
                  adam);
      model.params.assign(flat);
    }
    model.loss_trace.push_back(epoch_loss);
  }
  return model;
}

Vector mlp_predict(const MlpMapper& model, const Vector& u_src) {
  if (static_cast<std::size_t>(u_src.size()) != model.src_dim()) {
    throw Error("mlp_predict: input has " + std::to_string(u_src.size()) + " entries, expected " +
                std::to_string(model.src_dim()));
  }
  const MlpParams& p = model.params;
  Vector hidden = p.hidden_weights * u_src + p.hidden_bias;
  sigmoid_inplace(hidden);
  Vector out = p.output_weights * hidden + p.output_bias;
  if (model.output == MlpOutput::Sigmoid) sigmoid_inplace(out);
  return out;
}

}  // namespace xassoc
