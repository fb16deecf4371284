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

#ifndef XASSOC_DATASET_IO_HPP_
#define XASSOC_DATASET_IO_HPP_

#include <filesystem>
#include <string>

#include "xassoc/repr.hpp"

namespace xassoc {

inline constexpr int kDataFormatVersion = 1;

/// Raised for malformed input files; the message names file and line.
class LoadError : public Error {
 public:
  LoadError(const std::string& file, std::size_t line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what), file_(file), line_(line) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

// users.jsonl:        {"id": str, "twitter": [f64; dim_T], "youtube": [f64; dim_Y]}
// videos.jsonl:       {"id": str, "vec": [f64; dim_Y]}
// interactions.jsonl: {"user": str, "videos": [str, ...]}
Dataset load_dataset(const std::filesystem::path& users_path,
                     const std::filesystem::path& videos_path,
                     const std::filesystem::path& interactions_path, TopicDims dims = {});

/// Loads `dir`/{users,videos,interactions}.jsonl. Dimensions come from
/// `dir`/manifest.json when present, else from `dims`.
Dataset load_dataset_dir(const std::filesystem::path& dir, TopicDims dims = {});

/// Writes the three JSONL files plus manifest.json (format version, dims and
/// provenance). Output is byte-stable for equal datasets.
void write_dataset(const std::filesystem::path& dir, const Dataset& d);

nlohmann::json vector_to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j);

}  // namespace xassoc

#endif  // XASSOC_DATASET_IO_HPP_
