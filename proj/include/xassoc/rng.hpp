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

#ifndef XASSOC_RNG_HPP_
#define XASSOC_RNG_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace xassoc {

// SplitMix64 in counter form: the i-th draw is mix(seed + (i + 1) * golden_gamma).
// Uniform doubles take the top 53 bits; normals use Box-Muller with one draw
// discarded, so every call consumes a fixed number of counter steps and the
// stream is reproducible across platforms up to libm rounding of log/cos.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal.
  double normal();
  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  /// `count` distinct indices from [0, n), in draw order.
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t count);

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Stable per-stage seed: FNV-1a of `label` mixed with `master`.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label);

}  // namespace xassoc

#endif  // XASSOC_RNG_HPP_
