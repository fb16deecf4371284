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

#ifndef XASSOC_SYNTHETIC_HPP_
#define XASSOC_SYNTHETIC_HPP_

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "xassoc/repr.hpp"

namespace xassoc {

/// Generator for aligned two-platform users with a tunable share of
/// platform-specific interest (`disparity`) and a coarse/fine topic mismatch.
///
/// Per user, with shared logits a = c A z, s = softmax(a),
/// t = softmax(c_T B_T e_T) and b_Y = c_Y B_Y e_Y:
///   u_T = normalize(max(0, (1 - disparity) s + disparity t + noise))
///   u_Y = normalize(max(0, softmax(k ((1 - disparity) P(a) + disparity b_Y)) + noise))
/// where P averages the fine logits mapped onto each coarse YouTube topic and
/// gives every other YouTube topic the mean of all fine logits, and k is
/// `coarse_sharpness`. With zero disparity and noise,
/// u_Y == aggregate_topics(u_T, map, dim_Y, k) exactly.
/// Each user gets videos within `video_jitter` of u_Y; background videos are
/// scattered around `video_clusters` centres taken from user u_Y vectors.
struct SyntheticConfig {
  std::size_t users = 2000;
  TopicDims dims;
  std::size_t shared_latent_dim = 8;
  std::size_t specific_latent_dim = 3;
  double disparity = 0.3;
  /// Coarse topic count when `granularity_map` is empty: contiguous blocks of
  /// dim_T / coarse_topics fine topics. Zero maps fine topic i to coarse i.
  std::size_t coarse_topics = 15;
  /// Explicit fine->coarse map (length dim_T); overrides `coarse_topics`.
  std::vector<std::size_t> granularity_map;
  /// Softmax sharpness of the shared interests (c); larger values give
  /// peakier topic vectors.
  double concentration = 0.5;
  /// Sharpness of the platform-specific interests (c_T, c_Y).
  double twitter_specific_concentration = 2.0;
  double youtube_specific_concentration = 0.5;
  /// Scale applied to YouTube logits (k); coarse categories are sharper than
  /// the fine topics they merge.
  double coarse_sharpness = 8.0;
  double noise = 0.002;
  std::size_t videos_per_user_min = 3;
  std::size_t videos_per_user_max = 6;
  double video_jitter = 0.02;
  std::size_t video_clusters = 20;
  std::size_t background_videos = 500;
  double cluster_spread = 0.05;
  std::uint64_t seed = 1;
};

/// Throws on invalid settings, including a map that is not a surjection
/// onto 0..G-1 with G <= dim_Y.
void validate(const SyntheticConfig& cfg);

/// Fine->coarse map in effect for `cfg`.
std::vector<std::size_t> effective_granularity_map(const SyntheticConfig& cfg);

/// Coarse logits: mean of the fine logits mapped to each YouTube topic; the
/// mean of all fine logits for YouTube topics outside the map's image. The
/// result is multiplied by `sharpness`.
Vector pool_logits(const Vector& fine_logits, const std::vector<std::size_t>& map,
                   std::size_t youtube_dim, double sharpness);

/// Granularity aggregation of a fine Twitter distribution into the YouTube
/// topic space: softmax(pool_logits(log fine, sharpness)). `fine` must be
/// positive.
Vector aggregate_topics(const Vector& fine, const std::vector<std::size_t>& map,
                        std::size_t youtube_dim, double sharpness);

Dataset gen_synthetic(const SyntheticConfig& cfg);

nlohmann::json to_json(const SyntheticConfig& cfg);
/// Missing keys keep their defaults; unknown keys are rejected.
SyntheticConfig synthetic_config_from_json(const nlohmann::json& j);

/// Flat TOML subset: `key = value` lines with numbers, strings, booleans and
/// one-line arrays; `#` comments. Tables are rejected.
nlohmann::json parse_flat_toml(std::string_view text);

/// Reads a .json or .toml config file.
SyntheticConfig load_synthetic_config(const std::filesystem::path& path);

}  // namespace xassoc

#endif  // XASSOC_SYNTHETIC_HPP_
