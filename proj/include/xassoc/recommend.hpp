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

#ifndef XASSOC_RECOMMEND_HPP_
#define XASSOC_RECOMMEND_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "xassoc/numerics.hpp"

namespace xassoc {

/// Groundtruth videos plus an equal number of sampled distractors.
struct CandidateSet {
  std::string user_id;
  std::vector<std::string> groundtruth;  // sorted
  std::vector<std::string> distractors;  // in draw order
  std::uint64_t seed = 0;

  /// groundtruth followed by distractors.
  std::vector<std::string> all() const;
};

/// Samples |groundtruth| distractors uniformly without replacement from
/// corpus \ groundtruth. Throws if the corpus has fewer than
/// 2 * |groundtruth| videos.
CandidateSet sample_candidates(const std::string& user_id, std::span<const std::string> groundtruth,
                               std::span<const std::string> corpus, std::uint64_t seed);

/// 1 / (1 + ||u - v||_2).
double similarity(const Vector& u_hat, const Vector& v);

struct Candidate {
  std::string video_id;
  const Vector* vec = nullptr;
};

struct ScoredVideo {
  std::string video_id;
  double score = 0.0;
};

/// Descending score, ties by ascending video id.
using RankedList = std::vector<ScoredVideo>;

RankedList rank_topk(const Vector& u_hat, std::span<const Candidate> candidates, std::size_t k);

/// Per-user sampling seed: independent of evaluation order or worker count.
std::uint64_t user_seed(std::uint64_t master, const std::string& user_id);

}  // namespace xassoc

#endif  // XASSOC_RECOMMEND_HPP_
