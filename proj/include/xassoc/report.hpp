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

#ifndef XASSOC_REPORT_HPP_
#define XASSOC_REPORT_HPP_

#include <filesystem>
#include <string>

#include <json.hpp>

#include "xassoc/kmeans.hpp"
#include "xassoc/metrics.hpp"

namespace xassoc {

inline constexpr int kReportFormatVersion = 1;

nlohmann::json to_json(const AssocReport& r);
nlohmann::json to_json(const RecReport& r);
nlohmann::json to_json(const ConcentrationReport& r);

/// Flattens every numeric leaf of `report` into "metric,name,value" rows;
/// the metric column is the top-level key, the name the remaining path.
std::string report_csv(const nlohmann::json& report);

/// Pretty-printed JSON with a trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::json& doc);
nlohmann::json read_json(const std::filesystem::path& path);

}  // namespace xassoc

#endif  // XASSOC_REPORT_HPP_
