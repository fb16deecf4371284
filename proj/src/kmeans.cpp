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

#include "xassoc/kmeans.hpp"

#include <limits>
#include <string>

#include "xassoc/repr.hpp"
#include "xassoc/rng.hpp"

namespace xassoc {

namespace {

using Index = Eigen::Index;

// Nearest centroid per point (ties to the lower index); returns the WCSS.
double assign_points(const Matrix& points, const Matrix& centroids,
                     std::vector<std::size_t>& assignment) {
  double wcss = 0.0;
  for (Index i = 0; i < points.rows(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_c = 0;
    for (Index c = 0; c < centroids.rows(); ++c) {
      const double d = (points.row(i) - centroids.row(c)).squaredNorm();
      if (d < best) {
        best = d;
        best_c = static_cast<std::size_t>(c);
      }
    }
    assignment[static_cast<std::size_t>(i)] = best_c;
    wcss += best;
  }
  return wcss;
}

}  // namespace

KMeansResult kmeans(const Matrix& points, std::size_t k, std::uint64_t seed, std::size_t max_iters) {
  const auto n = static_cast<std::size_t>(points.rows());
  if (k == 0) throw Error("kmeans: k must be positive");
  if (k > n) {
    throw Error("kmeans: k = " + std::to_string(k) + " exceeds the " + std::to_string(n) +
                " points");
  }
  Rng rng(seed);
  const std::vector<std::size_t> initial = rng.sample_without_replacement(n, k);
  KMeansResult r;
  r.centroids = gather_rows(points, initial);
  r.assignment.assign(n, 0);

  std::vector<std::size_t> previous;
  r.wcss_trace.push_back(assign_points(points, r.centroids, r.assignment));
  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    r.iterations = iter + 1;
    // Update step.
    Matrix sums = Matrix::Zero(static_cast<Index>(k), points.cols());
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      sums.row(static_cast<Index>(r.assignment[i])) += points.row(static_cast<Index>(i));
      ++counts[r.assignment[i]];
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] > 0) {
        r.centroids.row(static_cast<Index>(c)) = sums.row(static_cast<Index>(c)) /
                                                 static_cast<double>(counts[c]);
      }
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] > 0) continue;
      // Farthest point among clusters that can spare one.
      double far = -1.0;
      std::size_t far_i = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (counts[r.assignment[i]] < 2) continue;
        const double d = (points.row(static_cast<Index>(i)) -
                          r.centroids.row(static_cast<Index>(r.assignment[i])))
                             .squaredNorm();
        if (d > far) {
          far = d;
          far_i = i;
        }
      }
      if (far_i == n) break;
      --counts[r.assignment[far_i]];
      r.assignment[far_i] = c;
      counts[c] = 1;
      r.centroids.row(static_cast<Index>(c)) = points.row(static_cast<Index>(far_i));
    }

    previous = r.assignment;
    r.wcss_trace.push_back(assign_points(points, r.centroids, r.assignment));
    if (r.assignment == previous) break;
  }
  return r;
}

double average_distance_to_center(const Matrix& points, std::span<const std::size_t> members) {
  if (members.empty()) return 0.0;
  Vector center = Vector::Zero(points.cols());
  for (std::size_t i : members) center += points.row(static_cast<Index>(i)).transpose();
  center /= static_cast<double>(members.size());
  double total = 0.0;
  for (std::size_t i : members) total += (points.row(static_cast<Index>(i)).transpose() - center).norm();
  return total / static_cast<double>(members.size());
}

ConcentrationReport concentration_ratio(std::span<const std::size_t> assignment,
                                        std::size_t group_count, const Matrix& points,
                                        std::size_t random_samples, std::uint64_t seed) {
  const auto n = static_cast<std::size_t>(points.rows());
  if (assignment.size() != n) {
    throw Error("concentration_ratio: " + std::to_string(assignment.size()) +
                " assignments for " + std::to_string(n) + " users");
  }
  if (random_samples == 0) throw Error("concentration_ratio: need at least one random sample");
  std::vector<std::vector<std::size_t>> members(group_count);
  for (std::size_t i = 0; i < n; ++i) {
    if (assignment[i] >= group_count) throw Error("concentration_ratio: group index out of range");
    members[assignment[i]].push_back(i);
  }

  ConcentrationReport report;
  report.random_samples = random_samples;
  for (std::size_t g = 0; g < group_count; ++g) {
    if (members[g].empty()) {
      warn("concentration_ratio: group " + std::to_string(g) + " is empty, skipped");
      continue;
    }
    GroupConcentration gc;
    gc.group = g;
    gc.size = members[g].size();
    gc.distance = average_distance_to_center(points, members[g]);
    Rng rng(derive_seed(seed, "group:" + std::to_string(g)));
    double baseline = 0.0;
    for (std::size_t s = 0; s < random_samples; ++s) {
      const auto sample = rng.sample_without_replacement(n, gc.size);
      baseline += average_distance_to_center(points, sample);
    }
    gc.baseline = baseline / static_cast<double>(random_samples);
    gc.ratio = gc.distance == 0.0 ? 0.0 : gc.distance / gc.baseline;
    report.groups.push_back(gc);
  }
  if (!report.groups.empty()) {
    for (const auto& gc : report.groups) {
      report.mean_distance += gc.distance;
      report.mean_baseline += gc.baseline;
      report.mean_ratio += gc.ratio;
    }
    const double count = static_cast<double>(report.groups.size());
    report.mean_distance /= count;
    report.mean_baseline /= count;
    report.mean_ratio /= count;
  }
  return report;
}

}  // namespace xassoc
