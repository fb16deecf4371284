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

#ifndef XASSOC_KMEANS_HPP_
#define XASSOC_KMEANS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "xassoc/numerics.hpp"

namespace xassoc {

struct KMeansResult {
  std::vector<std::size_t> assignment;  // per point
  Matrix centroids;                     // k x dim
  /// Within-cluster sum of squares after each assignment step.
  std::vector<double> wcss_trace;
  std::size_t iterations = 0;
};

/// Lloyd's algorithm on the rows of `points`, started from k distinct rows
/// drawn by `seed`. An emptied cluster is re-seeded with the point farthest
/// from its centroid. Throws if k is zero or exceeds the point count.
KMeansResult kmeans(const Matrix& points, std::size_t k, std::uint64_t seed,
                    std::size_t max_iters = 100);

/// Mean Euclidean distance from the listed rows to their centroid.
double average_distance_to_center(const Matrix& points, std::span<const std::size_t> members);

struct GroupConcentration {
  std::size_t group = 0;
  std::size_t size = 0;
  double distance = 0.0;  // this group, measured in the evaluated space
  double baseline = 0.0;  // mean over random groups of the same size
  double ratio = 0.0;     // distance / baseline; 0 when distance is 0
};

struct ConcentrationReport {
  std::vector<GroupConcentration> groups;
  std::size_t random_samples = 0;
  /// Means over non-empty groups.
  double mean_distance = 0.0;
  double mean_baseline = 0.0;
  double mean_ratio = 0.0;
};

/// For each group of `assignment`, the average distance to the group centre
/// in the space of `points` (rows = the same users), normalized by the same
/// statistic for `random_samples` uniformly drawn groups of equal size.
/// Empty groups are skipped with a warning.
ConcentrationReport concentration_ratio(std::span<const std::size_t> assignment,
                                        std::size_t group_count, const Matrix& points,
                                        std::size_t random_samples, std::uint64_t seed);

}  // namespace xassoc

#endif  // XASSOC_KMEANS_HPP_
