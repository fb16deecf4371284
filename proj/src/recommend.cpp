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

#include "xassoc/recommend.hpp"

#include <algorithm>
#include <set>

#include "xassoc/rng.hpp"

namespace xassoc {

std::vector<std::string> CandidateSet::all() const {
  std::vector<std::string> out = groundtruth;
  out.insert(out.end(), distractors.begin(), distractors.end());
  return out;
}

CandidateSet sample_candidates(const std::string& user_id, std::span<const std::string> groundtruth,
                               std::span<const std::string> corpus, std::uint64_t seed) {
  const std::set<std::string> truth(groundtruth.begin(), groundtruth.end());
  if (corpus.size() < 2 * truth.size()) {
    throw Error("sample_candidates: corpus of " + std::to_string(corpus.size()) +
                " videos is too small for user '" + user_id + "' with " +
                std::to_string(truth.size()) + " groundtruth videos");
  }
  // Sorted, de-duplicated pool so the draw depends only on the corpus contents.
  std::set<std::string> pool_set;
  for (const auto& v : corpus) {
    if (!truth.count(v)) pool_set.insert(v);
  }
  const std::vector<std::string> pool(pool_set.begin(), pool_set.end());
  if (pool.size() < truth.size()) {
    throw Error("sample_candidates: not enough non-groundtruth videos for user '" + user_id + "'");
  }

  CandidateSet out;
  out.user_id = user_id;
  out.seed = seed;
  out.groundtruth.assign(truth.begin(), truth.end());
  Rng rng(seed);
  for (std::size_t idx : rng.sample_without_replacement(pool.size(), truth.size())) {
    out.distractors.push_back(pool[idx]);
  }
  return out;
}

double similarity(const Vector& u_hat, const Vector& v) {
  if (u_hat.size() != v.size()) {
    throw Error("similarity: dimension mismatch (" + std::to_string(u_hat.size()) + " vs " +
                std::to_string(v.size()) + ")");
  }
  return 1.0 / (1.0 + (u_hat - v).norm());
}

RankedList rank_topk(const Vector& u_hat, std::span<const Candidate> candidates, std::size_t k) {
  if (k < 1) throw Error("rank_topk: k must be >= 1");
  RankedList ranked;
  ranked.reserve(candidates.size());
  for (const auto& c : candidates) ranked.push_back({c.video_id, similarity(u_hat, *c.vec)});
  const std::size_t keep = std::min(k, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(keep), ranked.end(),
                    [](const ScoredVideo& a, const ScoredVideo& b) {
                      if (a.score != b.score) return a.score > b.score;
                      return a.video_id < b.video_id;
                    });
  ranked.resize(keep);
  return ranked;
}

std::uint64_t user_seed(std::uint64_t master, const std::string& user_id) {
  return derive_seed(master, "user:" + user_id);
}

}  // namespace xassoc
