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

#ifndef XASSOC_TESTS_FIXTURES_HPP_
#define XASSOC_TESTS_FIXTURES_HPP_

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "xassoc/autoencoder.hpp"
#include "xassoc/repr.hpp"
#include "xassoc/rng.hpp"

namespace fixture {

namespace fs = std::filesystem;

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path_ = fs::temp_directory_path() /
            ("xassoc-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

inline std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

inline xassoc::MaskedAutoencoderModel random_model(const xassoc::AutoencoderLayout& layout,
                                                   xassoc::Rng& rng, double scale,
                                                   double weight_decay, double sparsity) {
  auto m = xassoc::MaskedAutoencoderModel::zeros(layout, weight_decay, sparsity);
  xassoc::Vector flat(m.params.size());
  for (Eigen::Index i = 0; i < flat.size(); ++i) flat[i] = rng.uniform(-scale, scale);
  m.params.assign(flat);
  xassoc::apply_mask(m.masks, m.params);
  return m;
}

inline std::vector<xassoc::AugmentedExample> random_examples(const xassoc::AutoencoderLayout& l,
                                                             std::size_t n, xassoc::Rng& rng) {
  std::vector<xassoc::AugmentedExample> out;
  for (std::size_t i = 0; i < n; ++i) {
    xassoc::AugmentedExample ex;
    ex.target_twitter = oracle::random_simplex(rng, l.input_twitter);
    ex.target_youtube = oracle::random_simplex(rng, l.input_youtube);
    ex.input_twitter = ex.target_twitter;
    ex.input_youtube = ex.target_youtube;
    ex.kind = static_cast<xassoc::ExampleKind>(i % 3);
    if (ex.kind == xassoc::ExampleKind::RealTwitterAvgYouTube) {
      ex.input_youtube = xassoc::Vector::Constant(l.input_youtube, 1.0 / l.input_youtube);
    } else if (ex.kind == xassoc::ExampleKind::AvgTwitterRealYouTube) {
      ex.input_twitter = xassoc::Vector::Constant(l.input_twitter, 1.0 / l.input_twitter);
    }
    out.push_back(std::move(ex));
  }
  return out;
}

inline xassoc::AlignedUser user(const std::string& id, xassoc::Vector t, xassoc::Vector y) {
  return {id, std::move(t), std::move(y)};
}

}  // namespace fixture

#endif  // XASSOC_TESTS_FIXTURES_HPP_
