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

#ifndef XASSOC_REPR_HPP_
#define XASSOC_REPR_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "xassoc/numerics.hpp"

namespace xassoc {

/// T is the text/social platform (Twitter), Y the video platform (YouTube).
enum class Platform { Twitter, YouTube };

std::string_view platform_name(Platform p);
Platform other(Platform p);

struct TopicDims {
  std::size_t twitter = 60;
  std::size_t youtube = 80;

  std::size_t on(Platform p) const { return p == Platform::Twitter ? twitter : youtube; }
};

struct AlignedUser {
  std::string id;
  Vector twitter;
  Vector youtube;

  const Vector& on(Platform p) const { return p == Platform::Twitter ? twitter : youtube; }
};

struct VideoRecord {
  std::string id;
  Vector vec;  // YouTube topic space
};

/// user id -> ids of the videos that user interacted with (sorted, unique).
using InteractionSet = std::map<std::string, std::vector<std::string>>;

struct Dataset {
  TopicDims dims;
  std::vector<AlignedUser> users;
  std::vector<VideoRecord> videos;
  InteractionSet interactions;
  nlohmann::json provenance = nlohmann::json::object();

  const VideoRecord* find_video(std::string_view id) const;
  const std::vector<std::string>& videos_of(std::string_view user_id) const;
};

/// Throws unless every user id and video id is unique and every interaction
/// references a known user and video.
void validate_dataset(const Dataset& d);

enum class ExampleKind { RealBoth, RealTwitterAvgYouTube, AvgTwitterRealYouTube };

std::string_view example_kind_name(ExampleKind k);

/// One autoencoder training row. Targets always hold the user's real vectors.
struct AugmentedExample {
  Vector input_twitter;
  Vector input_youtube;
  Vector target_twitter;
  Vector target_youtube;
  ExampleKind kind = ExampleKind::RealBoth;
};

/// Drops users with fewer than `min_user_interactions` videos and videos with
/// fewer than `min_video_consumers` users, repeating until nothing changes.
/// An empty result logs a warning rather than throwing.
Dataset filter_dataset(const Dataset& d, std::size_t min_user_interactions,
                       std::size_t min_video_consumers);

struct TrainTestSplit {
  Dataset train;
  Dataset test;
};

/// User-level split; train gets floor(n * train_fraction) users chosen by a
/// seeded shuffle. Both halves keep the full video corpus.
TrainTestSplit split_train_test(const Dataset& d, double train_fraction, std::uint64_t seed);

Vector platform_mean(std::span<const AlignedUser> users, Platform p);

/// Mean of the interacted videos' vectors: the user's YouTube representation.
Vector derive_user_repr_from_videos(std::span<const Vector> video_vecs);

/// Shuffles users by `seed` and splits them into thirds: the first third keeps
/// real Twitter input with the YouTube mean substituted, the second the
/// reverse, the last both real inputs. Remainder users join the first group.
std::vector<AugmentedExample> augment_training_set(std::span<const AlignedUser> train_users,
                                                   const Vector& mean_twitter,
                                                   const Vector& mean_youtube, std::uint64_t seed);

/// Stacks one platform's vectors as columns: (dim x users).
Matrix stack_columns(std::span<const AlignedUser> users, Platform p);

/// Renormalizes a near-simplex vector. Throws if any entry is negative or
/// non-finite, or if the sum deviates from 1 by more than `tolerance`.
void renormalize_topic_vector(Vector& v, double tolerance = 1e-3);

/// Receives warnings from data operations; defaults to stderr.
void set_warning_sink(std::function<void(std::string_view)> sink);
void warn(std::string_view message);

}  // namespace xassoc

#endif  // XASSOC_REPR_HPP_
