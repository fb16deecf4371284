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

#include "xassoc/report.hpp"

#include <fstream>
#include <sstream>

namespace xassoc {

using nlohmann::json;

namespace {

json summary_json(const ResidualSummary& s) {
  return {{"min", s.min}, {"median", s.median}, {"max", s.max}};
}

void flatten_numbers(const json& node, const std::string& metric, const std::string& name,
                     std::ostringstream& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten_numbers(value, metric, name.empty() ? key : name + "." + key, out);
    }
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      flatten_numbers(node[i], metric, name + "[" + std::to_string(i) + "]", out);
    }
  } else if (node.is_number()) {
    out << metric << ',' << name << ',' << node.dump() << '\n';
  }
}

}  // namespace

json to_json(const AssocReport& r) {
  return {{"platform", platform_name(r.platform)},
          {"mae", r.mae},
          {"rmse", r.rmse},
          {"users", r.users},
          {"dim", r.dim},
          {"per_user_mae", summary_json(r.user_mae)},
          {"per_user_rmse", summary_json(r.user_rmse)}};
}

json to_json(const RecReport& r) {
  return {{"k", r.k},
          {"precision", r.precision},
          {"recall", r.recall},
          {"f_score", r.f_score},
          {"users", r.users}};
}

json to_json(const ConcentrationReport& r) {
  json groups = json::array();
  for (const auto& g : r.groups) {
    groups.push_back({{"group", g.group},
                      {"size", g.size},
                      {"distance", g.distance},
                      {"baseline", g.baseline},
                      {"ratio", g.ratio}});
  }
  return {{"random_samples", r.random_samples},
          {"mean_distance", r.mean_distance},
          {"mean_baseline", r.mean_baseline},
          {"mean_ratio", r.mean_ratio},
          {"groups", groups}};
}

std::string report_csv(const json& report) {
  std::ostringstream out;
  out << "metric,name,value\n";
  if (report.is_object()) {
    for (const auto& [key, value] : report.items()) {
      if (key == "format_version") continue;
      if (value.is_number()) {
        out << key << ',' << key << ',' << value.dump() << '\n';
      } else {
        flatten_numbers(value, key, "", out);
      }
    }
  }
  return out.str();
}

void write_json(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
  if (!out) throw Error("failed writing " + path.string());
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

}  // namespace xassoc
