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

#ifndef XASSOC_METRICS_HPP_
#define XASSOC_METRICS_HPP_

#include <set>
#include <span>
#include <string>
#include <vector>

#include "xassoc/recommend.hpp"
#include "xassoc/repr.hpp"

namespace xassoc {

struct ResidualSummary {
  double min = 0.0;
  double median = 0.0;
  double max = 0.0;
};

/// Association error on one platform. Both metrics normalize each user's
/// residual by the topic dimension K and then average over users; RMSE takes
/// the root per user before averaging.
struct AssocReport {
  Platform platform = Platform::YouTube;
  double mae = 0.0;
  double rmse = 0.0;
  std::size_t users = 0;
  std::size_t dim = 0;
  ResidualSummary user_mae;
  ResidualSummary user_rmse;
};

AssocReport mae_rmse(std::span<const Vector> preds, std::span<const Vector> truths, std::size_t dim,
                     Platform platform = Platform::YouTube);

struct PrfScore {
  double precision = 0.0;
  double recall = 0.0;
  double f_score = 0.0;
  std::size_t hits = 0;
};

/// hits = |top-k ∩ groundtruth|, P = hits / k, R = hits / |groundtruth|,
/// F = 2PR / (P + R) with F = 0 when P = R = 0.
PrfScore topk_prf(const RankedList& ranked, const std::set<std::string>& groundtruth, std::size_t k);

struct RecReport {
  std::size_t k = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_score = 0.0;
  std::size_t users = 0;
};

/// Means over users.
RecReport average_prf(std::span<const PrfScore> scores, std::size_t k);

}  // namespace xassoc

#endif  // XASSOC_METRICS_HPP_
