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

#ifndef XASSOC_AUTOENCODER_HPP_
#define XASSOC_AUTOENCODER_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "xassoc/numerics.hpp"
#include "xassoc/repr.hpp"

namespace xassoc {

/// Hidden units are ordered [h_T | h_C | h_Y]. With no platform-specific
/// units (hidden_twitter == hidden_youtube == 0) the model is the plain,
/// fully connected multi-modal autoencoder.
struct AutoencoderLayout {
  std::size_t input_twitter = 60;
  std::size_t input_youtube = 80;
  std::size_t hidden_twitter = 10;
  std::size_t hidden_common = 80;
  std::size_t hidden_youtube = 10;

  std::size_t hidden() const { return hidden_twitter + hidden_common + hidden_youtube; }
  bool disparity_preserving() const { return hidden_twitter + hidden_youtube > 0; }
  void validate() const;

  friend bool operator==(const AutoencoderLayout&, const AutoencoderLayout&) = default;
};

enum class Activation { Sigmoid };

enum class Direction { TwitterToYouTube, YouTubeToTwitter };

std::string_view direction_name(Direction d);  // "t2y" / "y2t"
Direction parse_direction(std::string_view s);
Platform source_platform(Direction d);
Platform target_platform(Direction d);

/// Weights and biases of the two-platform autoencoder. Also used for
/// gradients, which share the parameter shapes.
struct AutoencoderParams {
  Matrix encoder_twitter;   // hidden x input_twitter
  Matrix encoder_youtube;   // hidden x input_youtube
  Matrix decoder_twitter;   // input_twitter x hidden
  Matrix decoder_youtube;   // input_youtube x hidden
  Vector hidden_bias;       // hidden
  Vector output_bias_twitter;
  Vector output_bias_youtube;

  static AutoencoderParams zeros(const AutoencoderLayout& layout);
  std::size_t size() const;
  Vector flatten() const;
  /// Overwrites every parameter from `flat`, in flatten() order.
  void assign(const Vector& flat);
};

/// Binary (0/1) masks for the four weight matrices; biases are never masked.
struct AutoencoderMasks {
  Matrix encoder_twitter;
  Matrix encoder_youtube;
  Matrix decoder_twitter;
  Matrix decoder_youtube;
};

/// Cuts x_T -> h_Y, x_Y -> h_T, h_T -> x̂_Y and h_Y -> x̂_T.
AutoencoderMasks build_mask(const AutoencoderLayout& layout);

/// Zeroes masked entries of weights (or of gradients of the same shape).
void apply_mask(const AutoencoderMasks& masks, AutoencoderParams& params);

struct TrainConfig {
  std::size_t epochs = 200;
  std::size_t batch_size = 64;
  AdamConfig adam;
  double weight_decay = 0.005;   // lambda
  double sparsity = 0.0001;      // mu
  double init_scale = 0.05;
  std::uint64_t seed = 0;

  void validate() const;
};

struct MaskedAutoencoderModel {
  AutoencoderLayout layout;
  AutoencoderParams params;
  AutoencoderMasks masks;
  Activation activation = Activation::Sigmoid;
  double weight_decay = 0.0;
  double sparsity = 0.0;
  /// Loss of the full training set before the first update.
  double initial_loss = 0.0;
  /// Sum of minibatch losses per epoch.
  std::vector<double> loss_trace;

  /// Zero weights, masks from `layout`.
  static MaskedAutoencoderModel zeros(const AutoencoderLayout& layout, double weight_decay,
                                      double sparsity);

  /// True iff every masked weight is exactly zero.
  bool mask_respected() const;
};

struct ForwardResult {
  Vector hidden;
  Vector twitter;
  Vector youtube;
};

/// Rows are examples.
struct ExampleBatch {
  Matrix input_twitter;
  Matrix input_youtube;
  Matrix target_twitter;
  Matrix target_youtube;

  std::size_t size() const { return static_cast<std::size_t>(input_twitter.rows()); }
  ExampleBatch rows(std::span<const std::size_t> idx) const;
};

ExampleBatch make_batch(std::span<const AugmentedExample> examples);

ForwardResult ae_forward(const MaskedAutoencoderModel& model, const Vector& x_twitter,
                         const Vector& x_youtube);

/// Decoder half only: reconstructions from a given hidden vector.
ForwardResult ae_decode(const MaskedAutoencoderModel& model, const Vector& hidden);

/// Squared reconstruction error against the examples' real targets, plus
/// lambda * sum ||W||_F^2 over the four weight matrices, plus mu * ||h||_1
/// summed over the batch.
double ae_loss(const MaskedAutoencoderModel& model, std::span<const AugmentedExample> batch);
double ae_loss(const MaskedAutoencoderModel& model, const ExampleBatch& batch);

/// Analytic gradient of ae_loss; masked entries are exactly zero.
AutoencoderParams ae_grad(const MaskedAutoencoderModel& model,
                          std::span<const AugmentedExample> batch);
/// Loss and gradient in one pass.
double ae_loss_and_grad(const MaskedAutoencoderModel& model, const ExampleBatch& batch,
                        AutoencoderParams& grad);

/// Seeded uniform init in +-init_scale (masked), then minibatch Adam.
/// Throws if the loss becomes non-finite.
MaskedAutoencoderModel ae_train(std::span<const AugmentedExample> examples,
                                const AutoencoderLayout& layout, const TrainConfig& cfg);

/// Reconstruction of the unknown platform with its input replaced by
/// `substitute` (normally that platform's training mean).
Vector ae_predict_cross(const MaskedAutoencoderModel& model, const Vector& known,
                        Direction direction, const Vector& substitute);

/// Mean squared reconstruction error per output coordinate.
double mean_reconstruction_error(const MaskedAutoencoderModel& model,
                                 std::span<const AugmentedExample> examples);

}  // namespace xassoc

#endif  // XASSOC_AUTOENCODER_HPP_
