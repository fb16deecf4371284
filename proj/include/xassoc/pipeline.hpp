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

#ifndef XASSOC_PIPELINE_HPP_
#define XASSOC_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "xassoc/checkpoint.hpp"
#include "xassoc/kmeans.hpp"
#include "xassoc/metrics.hpp"
#include "xassoc/recommend.hpp"
#include "xassoc/repr.hpp"

namespace xassoc {

/// How the unknown platform's input is filled at inference time.
enum class SubstituteMode { Mean, Zeros };

std::string_view substitute_name(SubstituteMode m);
SubstituteMode parse_substitute(std::string_view s);

struct DataOptions {
  std::size_t min_user_videos = 3;
  std::size_t min_video_users = 1;
  double train_fraction = 0.8;

  nlohmann::json to_json() const;
};

/// Filtered dataset, user-level split and the training-set platform means.
struct PreparedData {
  Dataset filtered;
  TrainTestSplit split;
  Vector mean_twitter;
  Vector mean_youtube;
  DataOptions options;
  std::uint64_t split_seed = 0;
};

/// Split seed is derived from `seed`, so a checkpoint's stored seed
/// reproduces the same partition.
PreparedData prepare_data(const Dataset& d, const DataOptions& options, std::uint64_t seed);

struct ModelOptions {
  ModelKind kind = ModelKind::Dca;
  /// Used by the one-directional baselines (lr, mlp); la and the
  /// autoencoders serve both directions.
  Direction direction = Direction::TwitterToYouTube;

  std::size_t hidden_twitter = 10;
  std::size_t hidden_common = 80;
  std::size_t hidden_youtube = 10;
  std::size_t ma_hidden = 90;
  TrainConfig autoencoder;  // lambda 0.005, mu 0.0001

  std::size_t mlp_hidden = 100;
  MlpOutput mlp_output = MlpOutput::Sigmoid;
  TrainConfig mlp = [] {
    TrainConfig c;
    c.weight_decay = 0.0;
    c.sparsity = 0.0;
    c.init_scale = 0.5;
    return c;
  }();

  double ridge_lambda = 0.01;
  LaConfig la;

  nlohmann::json to_json() const;
};

/// Fits the requested model on the training split. All randomness comes
/// from `seed`; the checkpoint records the data options, split seed and
/// training means so later stages can rebuild the same context.
Checkpoint train_model(const PreparedData& data, const ModelOptions& options, std::uint64_t seed);

/// Predicts the other platform's vector from `known` (source platform of
/// `direction`). One-directional models reject the opposite direction.
Vector predict_cross(const Checkpoint& ckpt, const Vector& known, Direction direction,
                     SubstituteMode substitute = SubstituteMode::Mean);

struct UserPrediction {
  std::string user;
  Vector pred;
};

std::vector<UserPrediction> predict_users(const Checkpoint& ckpt, std::span<const AlignedUser> users,
                                          Direction direction, SubstituteMode substitute);

AssocReport evaluate_association(const Checkpoint& ckpt, std::span<const AlignedUser> users,
                                 Direction direction,
                                 SubstituteMode substitute = SubstituteMode::Mean);

struct UserRecommendation {
  std::string user;
  RankedList ranked;
  PrfScore score;
  std::uint64_t seed = 0;
};

/// Top-k evaluation over the users of `test` that have groundtruth videos.
/// `predictions` maps each such user to its predicted YouTube vector.
RecReport evaluate_recommendation(const Dataset& test,
                                  const std::vector<UserPrediction>& predictions, std::size_t k,
                                  std::uint64_t seed,
                                  std::vector<UserRecommendation>* per_user = nullptr);

/// Rebuilds the test split recorded in a checkpoint from the full dataset.
PreparedData prepare_from_checkpoint(const Dataset& d, const Checkpoint& ckpt);

struct CompareOptions {
  std::vector<ModelKind> kinds = {ModelKind::Lr, ModelKind::La, ModelKind::Mlp, ModelKind::Ma,
                                  ModelKind::Dca};
  /// Runs per randomized model; ridge regression always runs once.
  std::size_t seeds = 6;
  std::size_t k = 10;
  /// Also score the youtube -> twitter direction.
  bool reverse = true;
  bool recommend = true;
};

/// Per-run scores of one model kind, in run order.
struct ModelScores {
  ModelKind kind = ModelKind::Dca;
  std::vector<AssocReport> t2y;
  std::vector<AssocReport> y2t;
  std::vector<RecReport> rec;
};

/// Trains every requested kind on `data` with run seeds derived from `seed`
/// and scores it on the test split. `progress` receives one line per run.
std::vector<ModelScores> compare_models(const PreparedData& data, const ModelOptions& base,
                                        const CompareOptions& options, std::uint64_t seed,
                                        const std::function<void(std::string_view)>& progress = {});

double mean_mae(std::span<const AssocReport> runs);
double mean_rmse(std::span<const AssocReport> runs);

struct MeasureReport {
  std::size_t clusters = 0;
  std::size_t random_samples = 0;
  /// [clustered on][evaluated on], indexed by Platform.
  ConcentrationReport table[2][2];
};

/// k-means on each platform, then concentration ratios of those groups on
/// both platforms.
MeasureReport measure(std::span<const AlignedUser> users, std::size_t clusters,
                      std::size_t random_samples, std::uint64_t seed);

nlohmann::json to_json(const MeasureReport& r);

}  // namespace xassoc

#endif  // XASSOC_PIPELINE_HPP_
