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

#include "xassoc/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace xassoc {

namespace {

ResidualSummary summarize(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  const double median = n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
  return {values.front(), median, values.back()};
}

}  // namespace

AssocReport mae_rmse(std::span<const Vector> preds, std::span<const Vector> truths, std::size_t dim,
                     Platform platform) {
  if (preds.empty()) throw Error("mae_rmse: empty evaluation set");
  if (preds.size() != truths.size()) {
    throw Error("mae_rmse: " + std::to_string(preds.size()) + " predictions for " +
                std::to_string(truths.size()) + " users");
  }
  const double k = static_cast<double>(dim);
  std::vector<double> user_mae;
  std::vector<double> user_rmse;
  user_mae.reserve(preds.size());
  user_rmse.reserve(preds.size());
  for (std::size_t i = 0; i < preds.size(); ++i) {
    if (static_cast<std::size_t>(preds[i].size()) != dim ||
        static_cast<std::size_t>(truths[i].size()) != dim) {
      throw Error("mae_rmse: vector " + std::to_string(i) + " does not have dimension " +
                  std::to_string(dim));
    }
    const Vector r = preds[i] - truths[i];
    user_mae.push_back(r.lpNorm<1>() / k);
    user_rmse.push_back(std::sqrt(r.squaredNorm() / k));
  }
  AssocReport report;
  report.platform = platform;
  report.users = preds.size();
  report.dim = dim;
  double mae = 0.0;
  double rmse = 0.0;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    mae += user_mae[i];
    rmse += user_rmse[i];
  }
  report.mae = mae / static_cast<double>(preds.size());
  report.rmse = rmse / static_cast<double>(preds.size());
  report.user_mae = summarize(std::move(user_mae));
  report.user_rmse = summarize(std::move(user_rmse));
  return report;
}

PrfScore topk_prf(const RankedList& ranked, const std::set<std::string>& groundtruth, std::size_t k) {
  if (k < 1) throw Error("topk_prf: k must be >= 1");
  if (groundtruth.empty()) throw Error("topk_prf: empty groundtruth set");
  PrfScore s;
  const std::size_t top = std::min(k, ranked.size());
  for (std::size_t i = 0; i < top; ++i) {
    if (groundtruth.count(ranked[i].video_id)) ++s.hits;
  }
  s.precision = static_cast<double>(s.hits) / static_cast<double>(k);
  s.recall = static_cast<double>(s.hits) / static_cast<double>(groundtruth.size());
  s.f_score = s.hits == 0 ? 0.0 : 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

RecReport average_prf(std::span<const PrfScore> scores, std::size_t k) {
  RecReport r;
  r.k = k;
  r.users = scores.size();
  if (scores.empty()) return r;
  for (const auto& s : scores) {
    r.precision += s.precision;
    r.recall += s.recall;
    r.f_score += s.f_score;
  }
  const double n = static_cast<double>(scores.size());
  r.precision /= n;
  r.recall /= n;
  r.f_score /= n;
  return r;
}

}  // namespace xassoc
