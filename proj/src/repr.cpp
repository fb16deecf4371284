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

#include "xassoc/repr.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <set>
#include <unordered_set>

#include "xassoc/rng.hpp"

namespace xassoc {

namespace {

std::function<void(std::string_view)>& warning_sink() {
  static std::function<void(std::string_view)> sink = [](std::string_view msg) {
    std::cerr << "warning: " << msg << '\n';
  };
  return sink;
}

const std::vector<std::string>& empty_list() {
  static const std::vector<std::string> empty;
  return empty;
}

}  // namespace

void set_warning_sink(std::function<void(std::string_view)> sink) {
  warning_sink() = std::move(sink);
}

void warn(std::string_view message) {
  if (warning_sink()) warning_sink()(message);
}

std::string_view platform_name(Platform p) {
  return p == Platform::Twitter ? "twitter" : "youtube";
}

Platform other(Platform p) {
  return p == Platform::Twitter ? Platform::YouTube : Platform::Twitter;
}

std::string_view example_kind_name(ExampleKind k) {
  switch (k) {
    case ExampleKind::RealBoth:
      return "real_both";
    case ExampleKind::RealTwitterAvgYouTube:
      return "real_T_avg_Y";
    case ExampleKind::AvgTwitterRealYouTube:
      return "avg_T_real_Y";
  }
  return "unknown";
}

const VideoRecord* Dataset::find_video(std::string_view id) const {
  // Corpora are kept sorted by id.
  auto it = std::lower_bound(videos.begin(), videos.end(), id,
                             [](const VideoRecord& v, std::string_view key) { return v.id < key; });
  if (it != videos.end() && it->id == id) return &*it;
  for (const auto& v : videos) {
    if (v.id == id) return &v;
  }
  return nullptr;
}

const std::vector<std::string>& Dataset::videos_of(std::string_view user_id) const {
  auto it = interactions.find(std::string(user_id));
  return it == interactions.end() ? empty_list() : it->second;
}

void validate_dataset(const Dataset& d) {
  std::unordered_set<std::string> user_ids;
  for (const auto& u : d.users) {
    if (!user_ids.insert(u.id).second) throw Error("duplicate user id '" + u.id + "'");
    if (static_cast<std::size_t>(u.twitter.size()) != d.dims.twitter ||
        static_cast<std::size_t>(u.youtube.size()) != d.dims.youtube) {
      throw Error("user '" + u.id + "' has vectors of the wrong dimension");
    }
  }
  std::unordered_set<std::string> video_ids;
  for (const auto& v : d.videos) {
    if (!video_ids.insert(v.id).second) throw Error("duplicate video id '" + v.id + "'");
  }
  for (const auto& [user, vids] : d.interactions) {
    if (!user_ids.count(user)) throw Error("interactions reference unknown user '" + user + "'");
    for (const auto& vid : vids) {
      if (!video_ids.count(vid)) {
        throw Error("interactions of user '" + user + "' reference unknown video '" + vid + "'");
      }
    }
  }
}

Dataset filter_dataset(const Dataset& d, std::size_t min_user_interactions,
                       std::size_t min_video_consumers) {
  if (min_user_interactions < 1 || min_video_consumers < 1) {
    throw Error("filter_dataset: thresholds must be at least 1");
  }
  std::set<std::string> users;
  for (const auto& u : d.users) users.insert(u.id);
  std::set<std::string> videos;
  for (const auto& v : d.videos) videos.insert(v.id);

  for (bool changed = true; changed;) {
    changed = false;
    std::map<std::string, std::size_t> consumers;
    std::set<std::string> keep_users;
    for (const auto& uid : users) {
      std::size_t count = 0;
      for (const auto& vid : d.videos_of(uid)) {
        if (videos.count(vid)) {
          ++count;
          ++consumers[vid];
        }
      }
      if (count >= min_user_interactions) keep_users.insert(uid);
    }
    std::set<std::string> keep_videos;
    for (const auto& vid : videos) {
      auto it = consumers.find(vid);
      if (it != consumers.end() && it->second >= min_video_consumers) keep_videos.insert(vid);
    }
    // Consumer counts above include users dropped this round; the next round
    // recounts with the reduced user set.
    if (keep_users.size() != users.size() || keep_videos.size() != videos.size()) changed = true;
    users = std::move(keep_users);
    videos = std::move(keep_videos);
  }

  Dataset out;
  out.dims = d.dims;
  out.provenance = d.provenance;
  out.provenance["filter"] = {{"min_user_interactions", min_user_interactions},
                              {"min_video_consumers", min_video_consumers}};
  for (const auto& u : d.users) {
    if (users.count(u.id)) out.users.push_back(u);
  }
  for (const auto& v : d.videos) {
    if (videos.count(v.id)) out.videos.push_back(v);
  }
  for (const auto& uid : users) {
    std::vector<std::string> kept;
    for (const auto& vid : d.videos_of(uid)) {
      if (videos.count(vid)) kept.push_back(vid);
    }
    out.interactions.emplace(uid, std::move(kept));
  }
  if (out.users.empty()) {
    warn("filter_dataset: no users survive thresholds (" + std::to_string(min_user_interactions) +
         ", " + std::to_string(min_video_consumers) + ")");
  }
  return out;
}

TrainTestSplit split_train_test(const Dataset& d, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw Error("split_train_test: train_fraction must lie in (0, 1)");
  }
  const std::size_t n = d.users.size();
  if (n < 2) throw Error("split_train_test: need at least 2 users, have " + std::to_string(n));
  const auto n_train =
      static_cast<std::size_t>(std::floor(static_cast<double>(n) * train_fraction + 1e-9));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  rng.shuffle(std::span<std::size_t>(order));
  std::vector<bool> in_train(n, false);
  for (std::size_t i = 0; i < n_train; ++i) in_train[order[i]] = true;

  TrainTestSplit split;
  for (Dataset* part : {&split.train, &split.test}) {
    part->dims = d.dims;
    part->videos = d.videos;
    part->provenance = d.provenance;
  }
  split.train.provenance["split"] = {{"part", "train"}, {"fraction", train_fraction}, {"seed", seed}};
  split.test.provenance["split"] = {{"part", "test"}, {"fraction", train_fraction}, {"seed", seed}};
  for (std::size_t i = 0; i < n; ++i) {
    Dataset& part = in_train[i] ? split.train : split.test;
    const AlignedUser& u = d.users[i];
    part.users.push_back(u);
    auto it = d.interactions.find(u.id);
    if (it != d.interactions.end()) part.interactions.emplace(it->first, it->second);
  }
  return split;
}

Vector platform_mean(std::span<const AlignedUser> users, Platform p) {
  if (users.empty()) throw Error("platform_mean: empty user list");
  Vector sum = Vector::Zero(users.front().on(p).size());
  for (const auto& u : users) {
    if (u.on(p).size() != sum.size()) throw Error("platform_mean: inconsistent dimensions");
    sum += u.on(p);
  }
  return sum / static_cast<double>(users.size());
}

Vector derive_user_repr_from_videos(std::span<const Vector> video_vecs) {
  if (video_vecs.empty()) throw Error("derive_user_repr_from_videos: no videos");
  Vector sum = Vector::Zero(video_vecs.front().size());
  for (const auto& v : video_vecs) {
    if (v.size() != sum.size()) throw Error("derive_user_repr_from_videos: inconsistent dimensions");
    sum += v;
  }
  return sum / static_cast<double>(video_vecs.size());
}

std::vector<AugmentedExample> augment_training_set(std::span<const AlignedUser> train_users,
                                                   const Vector& mean_twitter,
                                                   const Vector& mean_youtube, std::uint64_t seed) {
  const std::size_t n = train_users.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  rng.shuffle(std::span<std::size_t>(order));

  std::size_t first = n / 3 + n % 3;
  std::size_t second = n / 3;
  if (n < 3) {
    warn("augment_training_set: fewer than 3 users, all examples use real inputs");
    first = 0;
    second = 0;
  }

  std::vector<AugmentedExample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const AlignedUser& u = train_users[order[i]];
    if (u.twitter.size() != mean_twitter.size() || u.youtube.size() != mean_youtube.size()) {
      throw Error("augment_training_set: mean dimension does not match user '" + u.id + "'");
    }
    AugmentedExample ex;
    ex.target_twitter = u.twitter;
    ex.target_youtube = u.youtube;
    if (i < first) {
      ex.kind = ExampleKind::RealTwitterAvgYouTube;
      ex.input_twitter = u.twitter;
      ex.input_youtube = mean_youtube;
    } else if (i < first + second) {
      ex.kind = ExampleKind::AvgTwitterRealYouTube;
      ex.input_twitter = mean_twitter;
      ex.input_youtube = u.youtube;
    } else {
      ex.kind = ExampleKind::RealBoth;
      ex.input_twitter = u.twitter;
      ex.input_youtube = u.youtube;
    }
    out.push_back(std::move(ex));
  }
  return out;
}

Matrix stack_columns(std::span<const AlignedUser> users, Platform p) {
  if (users.empty()) return Matrix();
  Matrix m(users.front().on(p).size(), static_cast<Eigen::Index>(users.size()));
  for (std::size_t j = 0; j < users.size(); ++j) {
    m.col(static_cast<Eigen::Index>(j)) = users[j].on(p);
  }
  return m;
}

void renormalize_topic_vector(Vector& v, double tolerance) {
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    if (!std::isfinite(v[j])) throw Error("entry " + std::to_string(j) + " is not finite");
    if (v[j] < 0.0 || v[j] > 1.0 + tolerance) {
      throw Error("entry " + std::to_string(j) + " is outside [0, 1]");
    }
  }
  const double sum = v.sum();
  if (std::abs(sum - 1.0) > tolerance) {
    throw Error("entries sum to " + std::to_string(sum) + ", not 1");
  }
  v /= sum;
}

}  // namespace xassoc
