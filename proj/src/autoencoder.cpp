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

#include "xassoc/autoencoder.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "xassoc/rng.hpp"

namespace xassoc {

namespace {

using Index = Eigen::Index;

struct BatchForward {
  Matrix hidden;
  Matrix twitter;
  Matrix youtube;
};

BatchForward forward_batch(const AutoencoderParams& p, const Matrix& x_twitter,
                           const Matrix& x_youtube) {
  BatchForward f;
  f.hidden = x_twitter * p.encoder_twitter.transpose() + x_youtube * p.encoder_youtube.transpose();
  f.hidden.rowwise() += p.hidden_bias.transpose();
  sigmoid_inplace(f.hidden);
  f.twitter = f.hidden * p.decoder_twitter.transpose();
  f.twitter.rowwise() += p.output_bias_twitter.transpose();
  sigmoid_inplace(f.twitter);
  f.youtube = f.hidden * p.decoder_youtube.transpose();
  f.youtube.rowwise() += p.output_bias_youtube.transpose();
  sigmoid_inplace(f.youtube);
  return f;
}

double weight_penalty(const AutoencoderParams& p) {
  return p.encoder_twitter.squaredNorm() + p.encoder_youtube.squaredNorm() +
         p.decoder_twitter.squaredNorm() + p.decoder_youtube.squaredNorm();
}

double batch_loss(const MaskedAutoencoderModel& model, const ExampleBatch& batch,
                  const BatchForward& f) {
  return (f.twitter - batch.target_twitter).squaredNorm() +
         (f.youtube - batch.target_youtube).squaredNorm() +
         model.weight_decay * weight_penalty(model.params) +
         model.sparsity * f.hidden.cwiseAbs().sum();
}

void check_batch(const MaskedAutoencoderModel& model, const ExampleBatch& batch) {
  const auto& l = model.layout;
  if (static_cast<std::size_t>(batch.input_twitter.cols()) != l.input_twitter ||
      static_cast<std::size_t>(batch.target_twitter.cols()) != l.input_twitter ||
      static_cast<std::size_t>(batch.input_youtube.cols()) != l.input_youtube ||
      static_cast<std::size_t>(batch.target_youtube.cols()) != l.input_youtube) {
    throw Error("autoencoder: example dimensions do not match layout");
  }
}

void uniform_fill(Matrix& m, double scale, Rng& rng) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = rng.uniform(-scale, scale);
}

template <class Params, class Fn>
void for_each_block(Params& p, Fn&& fn) {
  fn(p.encoder_twitter.data(), p.encoder_twitter.size());
  fn(p.encoder_youtube.data(), p.encoder_youtube.size());
  fn(p.decoder_twitter.data(), p.decoder_twitter.size());
  fn(p.decoder_youtube.data(), p.decoder_youtube.size());
  fn(p.hidden_bias.data(), p.hidden_bias.size());
  fn(p.output_bias_twitter.data(), p.output_bias_twitter.size());
  fn(p.output_bias_youtube.data(), p.output_bias_youtube.size());
}

}  // namespace

std::string_view direction_name(Direction d) {
  return d == Direction::TwitterToYouTube ? "t2y" : "y2t";
}

Direction parse_direction(std::string_view s) {
  if (s == "t2y") return Direction::TwitterToYouTube;
  if (s == "y2t") return Direction::YouTubeToTwitter;
  throw Error("unknown direction '" + std::string(s) + "' (expected t2y or y2t)");
}

Platform source_platform(Direction d) {
  return d == Direction::TwitterToYouTube ? Platform::Twitter : Platform::YouTube;
}

Platform target_platform(Direction d) { return other(source_platform(d)); }

void AutoencoderLayout::validate() const {
  if (input_twitter == 0 || input_youtube == 0) throw Error("layout: input dims must be positive");
  if (hidden() == 0) throw Error("layout: hidden layer is empty");
}

void TrainConfig::validate() const {
  if (epochs < 1) throw Error("train config: epochs must be >= 1");
  if (batch_size < 1) throw Error("train config: batch size must be >= 1");
  if (!(weight_decay >= 0.0) || !(sparsity >= 0.0)) {
    throw Error("train config: lambda and mu must be >= 0");
  }
  if (!(init_scale >= 0.0)) throw Error("train config: init scale must be >= 0");
}

AutoencoderParams AutoencoderParams::zeros(const AutoencoderLayout& l) {
  const auto m = static_cast<Index>(l.hidden());
  const auto nt = static_cast<Index>(l.input_twitter);
  const auto ny = static_cast<Index>(l.input_youtube);
  return AutoencoderParams{Matrix::Zero(m, nt), Matrix::Zero(m, ny), Matrix::Zero(nt, m),
                           Matrix::Zero(ny, m), Vector::Zero(m),     Vector::Zero(nt),
                           Vector::Zero(ny)};
}

std::size_t AutoencoderParams::size() const {
  return static_cast<std::size_t>(encoder_twitter.size() + encoder_youtube.size() +
                                  decoder_twitter.size() + decoder_youtube.size() +
                                  hidden_bias.size() + output_bias_twitter.size() +
                                  output_bias_youtube.size());
}

Vector AutoencoderParams::flatten() const {
  Vector flat(static_cast<Index>(size()));
  Index offset = 0;
  for_each_block(*this, [&](const double* data, Index n) {
    std::copy(data, data + n, flat.data() + offset);
    offset += n;
  });
  return flat;
}

void AutoencoderParams::assign(const Vector& flat) {
  if (static_cast<std::size_t>(flat.size()) != size()) {
    throw Error("AutoencoderParams::assign: expected " + std::to_string(size()) + " values, got " +
                std::to_string(flat.size()));
  }
  Index offset = 0;
  for_each_block(*this, [&](double* data, Index n) {
    std::copy(flat.data() + offset, flat.data() + offset + n, data);
    offset += n;
  });
}

AutoencoderMasks build_mask(const AutoencoderLayout& l) {
  l.validate();
  const auto m = static_cast<Index>(l.hidden());
  const auto nt = static_cast<Index>(l.input_twitter);
  const auto ny = static_cast<Index>(l.input_youtube);
  const auto t_end = static_cast<Index>(l.hidden_twitter);
  const auto my = static_cast<Index>(l.hidden_youtube);

  AutoencoderMasks masks{Matrix::Ones(m, nt), Matrix::Ones(m, ny), Matrix::Ones(nt, m),
                         Matrix::Ones(ny, m)};
  masks.encoder_twitter.bottomRows(my).setZero();   // x_T -> h_Y
  masks.encoder_youtube.topRows(t_end).setZero();   // x_Y -> h_T
  masks.decoder_twitter.rightCols(my).setZero();    // h_Y -> x̂_T
  masks.decoder_youtube.leftCols(t_end).setZero();  // h_T -> x̂_Y
  return masks;
}

void apply_mask(const AutoencoderMasks& masks, AutoencoderParams& p) {
  p.encoder_twitter.array() *= masks.encoder_twitter.array();
  p.encoder_youtube.array() *= masks.encoder_youtube.array();
  p.decoder_twitter.array() *= masks.decoder_twitter.array();
  p.decoder_youtube.array() *= masks.decoder_youtube.array();
}

MaskedAutoencoderModel MaskedAutoencoderModel::zeros(const AutoencoderLayout& layout,
                                                     double weight_decay, double sparsity) {
  MaskedAutoencoderModel model;
  model.layout = layout;
  model.masks = build_mask(layout);
  model.params = AutoencoderParams::zeros(layout);
  model.weight_decay = weight_decay;
  model.sparsity = sparsity;
  return model;
}

bool MaskedAutoencoderModel::mask_respected() const {
  auto ok = [](const Matrix& w, const Matrix& mask) {
    return ((mask.array() == 0.0) <= (w.array() == 0.0)).all();
  };
  return ok(params.encoder_twitter, masks.encoder_twitter) &&
         ok(params.encoder_youtube, masks.encoder_youtube) &&
         ok(params.decoder_twitter, masks.decoder_twitter) &&
         ok(params.decoder_youtube, masks.decoder_youtube);
}

ExampleBatch ExampleBatch::rows(std::span<const std::size_t> idx) const {
  return ExampleBatch{gather_rows(input_twitter, idx), gather_rows(input_youtube, idx),
                      gather_rows(target_twitter, idx), gather_rows(target_youtube, idx)};
}

ExampleBatch make_batch(std::span<const AugmentedExample> examples) {
  if (examples.empty()) throw Error("make_batch: empty batch");
  const auto n = static_cast<Index>(examples.size());
  const Index nt = examples.front().target_twitter.size();
  const Index ny = examples.front().target_youtube.size();
  ExampleBatch b{Matrix(n, nt), Matrix(n, ny), Matrix(n, nt), Matrix(n, ny)};
  for (Index i = 0; i < n; ++i) {
    const auto& ex = examples[static_cast<std::size_t>(i)];
    if (ex.input_twitter.size() != nt || ex.target_twitter.size() != nt ||
        ex.input_youtube.size() != ny || ex.target_youtube.size() != ny) {
      throw Error("make_batch: inconsistent example dimensions at row " + std::to_string(i));
    }
    b.input_twitter.row(i) = ex.input_twitter.transpose();
    b.input_youtube.row(i) = ex.input_youtube.transpose();
    b.target_twitter.row(i) = ex.target_twitter.transpose();
    b.target_youtube.row(i) = ex.target_youtube.transpose();
  }
  return b;
}

ForwardResult ae_forward(const MaskedAutoencoderModel& model, const Vector& x_twitter,
                         const Vector& x_youtube) {
  const auto& l = model.layout;
  if (static_cast<std::size_t>(x_twitter.size()) != l.input_twitter ||
      static_cast<std::size_t>(x_youtube.size()) != l.input_youtube) {
    throw Error("ae_forward: input dimensions do not match layout");
  }
  const auto& p = model.params;
  Vector hidden = p.encoder_twitter * x_twitter + p.encoder_youtube * x_youtube + p.hidden_bias;
  sigmoid_inplace(hidden);
  ForwardResult out = ae_decode(model, hidden);
  out.hidden = std::move(hidden);
  return out;
}

ForwardResult ae_decode(const MaskedAutoencoderModel& model, const Vector& hidden) {
  if (static_cast<std::size_t>(hidden.size()) != model.layout.hidden()) {
    throw Error("ae_decode: hidden vector has the wrong size");
  }
  const auto& p = model.params;
  ForwardResult out;
  out.hidden = hidden;
  out.twitter = p.decoder_twitter * hidden + p.output_bias_twitter;
  sigmoid_inplace(out.twitter);
  out.youtube = p.decoder_youtube * hidden + p.output_bias_youtube;
  sigmoid_inplace(out.youtube);
  return out;
}

double ae_loss(const MaskedAutoencoderModel& model, const ExampleBatch& batch) {
  check_batch(model, batch);
  return batch_loss(model, batch,
                    forward_batch(model.params, batch.input_twitter, batch.input_youtube));
}

double ae_loss(const MaskedAutoencoderModel& model, std::span<const AugmentedExample> batch) {
  if (batch.empty()) throw Error("ae_loss: empty batch");
  return ae_loss(model, make_batch(batch));
}

double ae_loss_and_grad(const MaskedAutoencoderModel& model, const ExampleBatch& batch,
                        AutoencoderParams& g) {
  check_batch(model, batch);
  const auto& p = model.params;
  const BatchForward f = forward_batch(p, batch.input_twitter, batch.input_youtube);
  const double loss = batch_loss(model, batch, f);
  const double two_lambda = 2.0 * model.weight_decay;

  // Output pre-activation deltas: d/dz of ||sigmoid(z) - target||^2.
  const Matrix d_twitter =
      (2.0 * (f.twitter - batch.target_twitter).array() * f.twitter.array() *
       (1.0 - f.twitter.array()))
          .matrix();
  const Matrix d_youtube =
      (2.0 * (f.youtube - batch.target_youtube).array() * f.youtube.array() *
       (1.0 - f.youtube.array()))
          .matrix();

  g.decoder_twitter.noalias() = d_twitter.transpose() * f.hidden;
  g.decoder_twitter += two_lambda * p.decoder_twitter;
  g.decoder_youtube.noalias() = d_youtube.transpose() * f.hidden;
  g.decoder_youtube += two_lambda * p.decoder_youtube;
  g.output_bias_twitter = d_twitter.colwise().sum().transpose();
  g.output_bias_youtube = d_youtube.colwise().sum().transpose();

  // L1 subgradient at 0 is 0; sigmoid hidden units are never exactly 0 in practice.
  Matrix d_hidden = d_twitter * p.decoder_twitter + d_youtube * p.decoder_youtube;
  d_hidden.array() += model.sparsity * f.hidden.array().sign();
  d_hidden.array() *= f.hidden.array() * (1.0 - f.hidden.array());

  g.encoder_twitter.noalias() = d_hidden.transpose() * batch.input_twitter;
  g.encoder_twitter += two_lambda * p.encoder_twitter;
  g.encoder_youtube.noalias() = d_hidden.transpose() * batch.input_youtube;
  g.encoder_youtube += two_lambda * p.encoder_youtube;
  g.hidden_bias = d_hidden.colwise().sum().transpose();

  apply_mask(model.masks, g);
  return loss;
}

AutoencoderParams ae_grad(const MaskedAutoencoderModel& model,
                          std::span<const AugmentedExample> batch) {
  if (batch.empty()) throw Error("ae_grad: empty batch");
  AutoencoderParams g = AutoencoderParams::zeros(model.layout);
  ae_loss_and_grad(model, make_batch(batch), g);
  return g;
}

MaskedAutoencoderModel ae_train(std::span<const AugmentedExample> examples,
                                const AutoencoderLayout& layout, const TrainConfig& cfg) {
  if (examples.empty()) throw Error("ae_train: no training examples");
  layout.validate();
  cfg.validate();

  MaskedAutoencoderModel model =
      MaskedAutoencoderModel::zeros(layout, cfg.weight_decay, cfg.sparsity);
  Rng init(derive_seed(cfg.seed, "ae-init"));
  uniform_fill(model.params.encoder_twitter, cfg.init_scale, init);
  uniform_fill(model.params.encoder_youtube, cfg.init_scale, init);
  uniform_fill(model.params.decoder_twitter, cfg.init_scale, init);
  uniform_fill(model.params.decoder_youtube, cfg.init_scale, init);
  apply_mask(model.masks, model.params);

  const ExampleBatch all = make_batch(examples);
  check_batch(model, all);
  model.initial_loss = ae_loss(model, all);

  const std::size_t n = all.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng shuffler(derive_seed(cfg.seed, "ae-batches"));
  AdamState adam(model.params.size(), cfg.adam);
  AutoencoderParams grad = AutoencoderParams::zeros(layout);
  Vector flat_params(static_cast<Index>(model.params.size()));

  model.loss_trace.reserve(cfg.epochs);
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    shuffler.shuffle(std::span<std::size_t>(order));
    double epoch_loss = 0.0;
    for (std::size_t start = 0; start < n; start += cfg.batch_size) {
      const std::size_t stop = std::min(n, start + cfg.batch_size);
      const ExampleBatch batch =
          all.rows(std::span<const std::size_t>(order.data() + start, stop - start));
      // Each minibatch carries its share of the weight penalty, so one epoch
      // sums to the full-data objective.
      model.weight_decay =
          cfg.weight_decay * static_cast<double>(stop - start) / static_cast<double>(n);
      const double loss = ae_loss_and_grad(model, batch, grad);
      model.weight_decay = cfg.weight_decay;
      if (!std::isfinite(loss)) {
        std::ostringstream msg;
        msg << "ae_train: non-finite loss at epoch " << epoch << ", batch starting at " << start
            << " (initial loss " << model.initial_loss << ", last epoch loss "
            << (model.loss_trace.empty() ? model.initial_loss : model.loss_trace.back()) << ")";
        throw Error(msg.str());
      }
      epoch_loss += loss;
      flat_params = model.params.flatten();
      const Vector flat_grad = grad.flatten();
      adam_update(std::span<double>(flat_params.data(), static_cast<std::size_t>(flat_params.size())),
                  std::span<const double>(flat_grad.data(), static_cast<std::size_t>(flat_grad.size())),
                  adam);
      model.params.assign(flat_params);
      apply_mask(model.masks, model.params);
    }
    model.loss_trace.push_back(epoch_loss);
  }
  return model;
}

Vector ae_predict_cross(const MaskedAutoencoderModel& model, const Vector& known,
                        Direction direction, const Vector& substitute) {
  if (direction == Direction::TwitterToYouTube) {
    if (static_cast<std::size_t>(substitute.size()) != model.layout.input_youtube) {
      throw Error("ae_predict_cross: substitute has the wrong dimension");
    }
    return ae_forward(model, known, substitute).youtube;
  }
  if (static_cast<std::size_t>(substitute.size()) != model.layout.input_twitter) {
    throw Error("ae_predict_cross: substitute has the wrong dimension");
  }
  return ae_forward(model, substitute, known).twitter;
}

double mean_reconstruction_error(const MaskedAutoencoderModel& model,
                                 std::span<const AugmentedExample> examples) {
  const ExampleBatch b = make_batch(examples);
  check_batch(model, b);
  const BatchForward f = forward_batch(model.params, b.input_twitter, b.input_youtube);
  const double sse = (f.twitter - b.target_twitter).squaredNorm() +
                     (f.youtube - b.target_youtube).squaredNorm();
  return sse / static_cast<double>(b.size() * (model.layout.input_twitter + model.layout.input_youtube));
}

}  // namespace xassoc
