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

#include "xassoc/dataset_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace xassoc {

namespace fs = std::filesystem;
using nlohmann::json;

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index j = 0; j < v.size(); ++j) arr.push_back(v[j]);
  return arr;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw Error("expected an array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw Error("array entry " + std::to_string(i) + " is not a number");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

namespace {

template <class Fn>
void for_each_line(const fs::path& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw LoadError(path.string(), line_no, std::string("malformed JSON: ") + e.what());
    }
    if (!record.is_object()) throw LoadError(path.string(), line_no, "expected a JSON object");
    try {
      fn(record, line_no);
    } catch (const LoadError&) {
      throw;
    } catch (const std::exception& e) {
      throw LoadError(path.string(), line_no, e.what());
    }
  }
}

std::string require_string(const json& record, const char* key) {
  auto it = record.find(key);
  if (it == record.end() || !it->is_string()) {
    throw Error(std::string("missing string field '") + key + "'");
  }
  return it->get<std::string>();
}

Vector read_topic_vector(const json& record, const char* key, std::size_t dim) {
  auto it = record.find(key);
  if (it == record.end()) throw Error(std::string("missing field '") + key + "'");
  Vector v = vector_from_json(*it);
  if (static_cast<std::size_t>(v.size()) != dim) {
    throw Error(std::string("'") + key + "' has " + std::to_string(v.size()) +
                " entries, expected " + std::to_string(dim));
  }
  try {
    renormalize_topic_vector(v);
  } catch (const Error& e) {
    throw Error(std::string("'") + key + "': " + e.what());
  }
  return v;
}

void write_lines(const fs::path& path, const std::vector<json>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  for (const auto& r : records) out << r.dump() << '\n';
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace

Dataset load_dataset(const fs::path& users_path, const fs::path& videos_path,
                     const fs::path& interactions_path, TopicDims dims) {
  Dataset d;
  d.dims = dims;

  std::set<std::string> user_ids;
  for_each_line(users_path, [&](const json& r, std::size_t) {
    AlignedUser u;
    u.id = require_string(r, "id");
    if (!user_ids.insert(u.id).second) throw Error("duplicate user id '" + u.id + "'");
    u.twitter = read_topic_vector(r, "twitter", dims.twitter);
    u.youtube = read_topic_vector(r, "youtube", dims.youtube);
    d.users.push_back(std::move(u));
  });

  std::set<std::string> video_ids;
  for_each_line(videos_path, [&](const json& r, std::size_t) {
    VideoRecord v;
    v.id = require_string(r, "id");
    if (!video_ids.insert(v.id).second) throw Error("duplicate video id '" + v.id + "'");
    v.vec = read_topic_vector(r, "vec", dims.youtube);
    d.videos.push_back(std::move(v));
  });
  std::sort(d.videos.begin(), d.videos.end(),
            [](const VideoRecord& a, const VideoRecord& b) { return a.id < b.id; });

  for_each_line(interactions_path, [&](const json& r, std::size_t) {
    const std::string user = require_string(r, "user");
    if (!user_ids.count(user)) throw Error("unknown user '" + user + "'");
    auto it = r.find("videos");
    if (it == r.end() || !it->is_array()) throw Error("missing array field 'videos'");
    std::set<std::string> vids;
    for (const auto& v : *it) {
      if (!v.is_string()) throw Error("video ids must be strings");
      const auto vid = v.get<std::string>();
      if (!video_ids.count(vid)) throw Error("unknown video id '" + vid + "'");
      vids.insert(vid);
    }
    auto& slot = d.interactions[user];
    slot.insert(slot.end(), vids.begin(), vids.end());
    std::sort(slot.begin(), slot.end());
    slot.erase(std::unique(slot.begin(), slot.end()), slot.end());
  });

  d.provenance = {{"source",
                   {{"users", users_path.string()},
                    {"videos", videos_path.string()},
                    {"interactions", interactions_path.string()}}}};
  return d;
}

Dataset load_dataset_dir(const fs::path& dir, TopicDims dims) {
  json manifest;
  const fs::path manifest_path = dir / "manifest.json";
  if (fs::exists(manifest_path)) {
    std::ifstream in(manifest_path);
    try {
      manifest = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(manifest_path.string() + ": " + e.what());
    }
    if (manifest.contains("dims")) {
      dims.twitter = manifest["dims"].value("twitter", dims.twitter);
      dims.youtube = manifest["dims"].value("youtube", dims.youtube);
    }
  }
  Dataset d = load_dataset(dir / "users.jsonl", dir / "videos.jsonl", dir / "interactions.jsonl",
                           dims);
  if (manifest.contains("provenance")) d.provenance["generator"] = manifest["provenance"];
  return d;
}

void write_dataset(const fs::path& dir, const Dataset& d) {
  fs::create_directories(dir);
  std::vector<json> users;
  for (const auto& u : d.users) {
    users.push_back({{"id", u.id}, {"twitter", vector_to_json(u.twitter)},
                     {"youtube", vector_to_json(u.youtube)}});
  }
  std::vector<json> videos;
  for (const auto& v : d.videos) videos.push_back({{"id", v.id}, {"vec", vector_to_json(v.vec)}});
  std::vector<json> interactions;
  for (const auto& [user, vids] : d.interactions) {
    interactions.push_back({{"user", user}, {"videos", vids}});
  }
  write_lines(dir / "users.jsonl", users);
  write_lines(dir / "videos.jsonl", videos);
  write_lines(dir / "interactions.jsonl", interactions);

  json manifest = {{"format_version", kDataFormatVersion},
                   {"dims", {{"twitter", d.dims.twitter}, {"youtube", d.dims.youtube}}},
                   {"counts",
                    {{"users", d.users.size()},
                     {"videos", d.videos.size()},
                     {"interactions", d.interactions.size()}}},
                   {"provenance", d.provenance}};
  std::ofstream out(dir / "manifest.json", std::ios::binary);
  out << manifest.dump(2) << '\n';
  if (!out) throw Error("failed writing manifest.json in " + dir.string());
}

}  // namespace xassoc
