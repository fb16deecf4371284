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

#include "xassoc/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "xassoc/rng.hpp"

namespace xassoc {

using nlohmann::json;

namespace {

Matrix normal_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = rng.normal();
  return m;
}

Vector normal_vector(Rng& rng, std::size_t n) {
  Vector v(n);
  for (Eigen::Index j = 0; j < v.size(); ++j) v[j] = rng.normal();
  return v;
}

Vector softmax(const Vector& logits) {
  Vector e = (logits.array() - logits.maxCoeff()).exp().matrix();
  return e / e.sum();
}

// Adds N(0, scale^2) noise, clips at zero and renormalizes. With scale == 0
// only the final normalization applies.
Vector perturb_on_simplex(const Vector& mix, double scale, Rng& rng) {
  Vector v = mix;
  if (scale > 0.0) {
    for (Eigen::Index j = 0; j < v.size(); ++j) v[j] = std::max(0.0, v[j] + scale * rng.normal());
  }
  const double sum = v.sum();
  if (!(sum > 0.0)) return Vector::Constant(v.size(), 1.0 / static_cast<double>(v.size()));
  return v / sum;
}

// Moves `center` by a random sum-zero direction of length at most `radius`,
// stopping at the simplex boundary, so the result stays a distribution within
// `radius` of the centre.
Vector jitter_on_simplex(const Vector& center, double radius, Rng& rng) {
  Vector dir = normal_vector(rng, static_cast<std::size_t>(center.size()));
  dir.array() -= dir.mean();
  const double norm = dir.norm();
  const double length = radius * rng.uniform();
  if (!(norm > 0.0) || length == 0.0) return center;
  dir *= length / norm;
  double step = 1.0;
  for (Eigen::Index j = 0; j < dir.size(); ++j) {
    if (dir[j] < 0.0) step = std::min(step, center[j] / -dir[j]);
  }
  Vector v = center + step * dir;
  v = v.cwiseMax(0.0);
  return v / v.sum();
}

std::string padded_id(char prefix, std::size_t i, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%c%0*zu", prefix, width, i);
  return buf;
}

int id_width(std::size_t n) {
  int w = 1;
  for (std::size_t x = n; x >= 10; x /= 10) ++w;
  return std::max(w, 5);
}

}  // namespace

std::vector<std::size_t> effective_granularity_map(const SyntheticConfig& cfg) {
  if (!cfg.granularity_map.empty()) return cfg.granularity_map;
  std::vector<std::size_t> map(cfg.dims.twitter);
  if (cfg.coarse_topics == 0) {
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
    return map;
  }
  // Contiguous blocks; when the division is uneven the leading blocks are
  // one topic longer.
  const std::size_t base = cfg.dims.twitter / cfg.coarse_topics;
  const std::size_t extra = cfg.dims.twitter % cfg.coarse_topics;
  std::size_t fine = 0;
  for (std::size_t g = 0; g < cfg.coarse_topics; ++g) {
    const std::size_t len = base + (g < extra ? 1 : 0);
    for (std::size_t k = 0; k < len; ++k) map[fine++] = g;
  }
  return map;
}

void validate(const SyntheticConfig& cfg) {
  if (cfg.users == 0) throw Error("synthetic config: users must be positive");
  if (cfg.dims.twitter == 0 || cfg.dims.youtube == 0) throw Error("synthetic config: zero topic dim");
  if (cfg.shared_latent_dim == 0 || cfg.specific_latent_dim == 0) {
    throw Error("synthetic config: latent dims must be positive");
  }
  if (!(cfg.disparity >= 0.0 && cfg.disparity <= 1.0)) {
    throw Error("synthetic config: disparity must lie in [0, 1]");
  }
  if (!(cfg.coarse_sharpness > 0.0) || !(cfg.twitter_specific_concentration > 0.0) ||
      !(cfg.youtube_specific_concentration > 0.0)) {
    throw Error("synthetic config: coarse_sharpness and specific concentrations must be > 0");
  }
  if (!(cfg.noise >= 0.0) || !(cfg.concentration > 0.0) || !(cfg.video_jitter >= 0.0) ||
      !(cfg.cluster_spread >= 0.0)) {
    throw Error("synthetic config: noise, jitter and spread must be >= 0, concentration > 0");
  }
  if (cfg.videos_per_user_min == 0 || cfg.videos_per_user_min > cfg.videos_per_user_max) {
    throw Error("synthetic config: need 1 <= videos_per_user_min <= videos_per_user_max");
  }
  if (cfg.background_videos > 0 && cfg.video_clusters == 0) {
    throw Error("synthetic config: background videos need at least one cluster");
  }
  if (cfg.granularity_map.empty() && cfg.coarse_topics == 0 && cfg.dims.twitter > cfg.dims.youtube) {
    throw Error("invalid granularity map: identity map needs dim_T <= dim_Y");
  }
  if (cfg.granularity_map.empty() && cfg.coarse_topics > cfg.dims.twitter) {
    throw Error("invalid granularity map: more coarse topics than fine topics");
  }
  const auto map = effective_granularity_map(cfg);
  if (map.size() != cfg.dims.twitter) {
    throw Error("invalid granularity map: length " + std::to_string(map.size()) + ", expected " +
                std::to_string(cfg.dims.twitter));
  }
  std::set<std::size_t> image(map.begin(), map.end());
  const std::size_t coarse = *image.rbegin() + 1;
  if (coarse > cfg.dims.youtube) {
    throw Error("invalid granularity map: target index " + std::to_string(coarse - 1) +
                " outside the YouTube topic space");
  }
  if (image.size() != coarse) {
    throw Error("invalid granularity map: not a surjection onto 0.." + std::to_string(coarse - 1));
  }
}

Vector pool_logits(const Vector& fine_logits, const std::vector<std::size_t>& map,
                   std::size_t youtube_dim, double sharpness) {
  if (static_cast<std::size_t>(fine_logits.size()) != map.size()) {
    throw Error("pool_logits: vector length does not match map");
  }
  Vector sum = Vector::Zero(static_cast<Eigen::Index>(youtube_dim));
  Vector count = Vector::Zero(static_cast<Eigen::Index>(youtube_dim));
  for (std::size_t i = 0; i < map.size(); ++i) {
    const auto g = static_cast<Eigen::Index>(map[i]);
    sum[g] += fine_logits[static_cast<Eigen::Index>(i)];
    count[g] += 1.0;
  }
  const double overall = fine_logits.mean();
  for (Eigen::Index g = 0; g < sum.size(); ++g) {
    sum[g] = sharpness * (count[g] > 0.0 ? sum[g] / count[g] : overall);
  }
  return sum;
}

Vector aggregate_topics(const Vector& fine, const std::vector<std::size_t>& map,
                        std::size_t youtube_dim, double sharpness) {
  if (!(fine.array() > 0.0).all()) throw Error("aggregate_topics: needs strictly positive weights");
  return softmax(pool_logits(fine.array().log().matrix(), map, youtube_dim, sharpness));
}

Dataset gen_synthetic(const SyntheticConfig& cfg) {
  validate(cfg);
  const auto map = effective_granularity_map(cfg);
  const double d = cfg.disparity;

  Rng loadings(derive_seed(cfg.seed, "loadings"));
  const Matrix shared = normal_matrix(loadings, cfg.dims.twitter, cfg.shared_latent_dim);
  const Matrix specific_t = normal_matrix(loadings, cfg.dims.twitter, cfg.specific_latent_dim);
  const Matrix specific_y = normal_matrix(loadings, cfg.dims.youtube, cfg.specific_latent_dim);

  Dataset out;
  out.dims = cfg.dims;
  const int user_width = id_width(cfg.users);
  Rng users(derive_seed(cfg.seed, "users"));
  for (std::size_t i = 0; i < cfg.users; ++i) {
    const Vector z = normal_vector(users, cfg.shared_latent_dim);
    const Vector e_t = normal_vector(users, cfg.specific_latent_dim);
    const Vector e_y = normal_vector(users, cfg.specific_latent_dim);
    const Vector shared_logits = cfg.concentration * (shared * z);
    const Vector s = softmax(shared_logits);
    const Vector t = softmax(cfg.twitter_specific_concentration * (specific_t * e_t));
    const Vector specific_y_logits = cfg.youtube_specific_concentration * (specific_y * e_y);

    AlignedUser u;
    u.id = padded_id('u', i, user_width);
    u.twitter = perturb_on_simplex((1.0 - d) * s + d * t, cfg.noise, users);
    u.youtube = perturb_on_simplex(
        softmax(cfg.coarse_sharpness *
                ((1.0 - d) * pool_logits(shared_logits, map, cfg.dims.youtube, 1.0) +
                 d * specific_y_logits)),
        cfg.noise, users);
    out.users.push_back(std::move(u));
  }

  // Personal videos first, then background videos; ids are assigned after
  // counting so they sort in generation order.
  Rng videos(derive_seed(cfg.seed, "videos"));
  std::vector<std::pair<std::size_t, Vector>> personal;  // (owner, vec)
  for (std::size_t i = 0; i < cfg.users; ++i) {
    const std::size_t span = cfg.videos_per_user_max - cfg.videos_per_user_min + 1;
    const std::size_t count = cfg.videos_per_user_min + videos.below(span);
    for (std::size_t k = 0; k < count; ++k) {
      personal.emplace_back(i, jitter_on_simplex(out.users[i].youtube, cfg.video_jitter, videos));
    }
  }
  std::vector<Vector> background;
  if (cfg.background_videos > 0) {
    std::vector<std::size_t> centers;
    for (std::size_t c = 0; c < cfg.video_clusters; ++c) centers.push_back(videos.below(cfg.users));
    for (std::size_t k = 0; k < cfg.background_videos; ++k) {
      const auto& center = out.users[centers[videos.below(centers.size())]].youtube;
      background.push_back(jitter_on_simplex(center, cfg.cluster_spread, videos));
    }
  }

  const int video_width = id_width(personal.size() + background.size());
  std::size_t next_id = 0;
  for (auto& [owner, vec] : personal) {
    VideoRecord v{padded_id('v', next_id++, video_width), std::move(vec)};
    out.interactions[out.users[owner].id].push_back(v.id);
    out.videos.push_back(std::move(v));
  }
  for (auto& vec : background) {
    out.videos.push_back({padded_id('v', next_id++, video_width), std::move(vec)});
  }

  out.provenance = {{"generator", "synthetic"}, {"config", to_json(cfg)}};
  return out;
}

json to_json(const SyntheticConfig& cfg) {
  json j = {{"users", cfg.users},
            {"dim_twitter", cfg.dims.twitter},
            {"dim_youtube", cfg.dims.youtube},
            {"shared_latent_dim", cfg.shared_latent_dim},
            {"specific_latent_dim", cfg.specific_latent_dim},
            {"disparity", cfg.disparity},
            {"coarse_topics", cfg.coarse_topics},
            {"concentration", cfg.concentration},
            {"twitter_specific_concentration", cfg.twitter_specific_concentration},
            {"youtube_specific_concentration", cfg.youtube_specific_concentration},
            {"coarse_sharpness", cfg.coarse_sharpness},
            {"noise", cfg.noise},
            {"videos_per_user_min", cfg.videos_per_user_min},
            {"videos_per_user_max", cfg.videos_per_user_max},
            {"video_jitter", cfg.video_jitter},
            {"video_clusters", cfg.video_clusters},
            {"background_videos", cfg.background_videos},
            {"cluster_spread", cfg.cluster_spread},
            {"seed", cfg.seed}};
  if (!cfg.granularity_map.empty()) j["granularity_map"] = cfg.granularity_map;
  return j;
}

SyntheticConfig synthetic_config_from_json(const json& j) {
  if (!j.is_object()) throw Error("synthetic config must be a JSON object");
  static const std::set<std::string> known = {
      "users",        "dim_twitter",        "dim_youtube",         "shared_latent_dim",
      "specific_latent_dim", "disparity",   "coarse_topics",       "granularity_map",
      "concentration", "twitter_specific_concentration", "youtube_specific_concentration",
      "coarse_sharpness", "noise",             "videos_per_user_min", "videos_per_user_max",
      "video_jitter", "video_clusters",     "background_videos",   "cluster_spread",
      "seed"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw Error("synthetic config: unknown key '" + key + "'");
  }
  SyntheticConfig cfg;
  cfg.users = j.value("users", cfg.users);
  cfg.dims.twitter = j.value("dim_twitter", cfg.dims.twitter);
  cfg.dims.youtube = j.value("dim_youtube", cfg.dims.youtube);
  cfg.shared_latent_dim = j.value("shared_latent_dim", cfg.shared_latent_dim);
  cfg.specific_latent_dim = j.value("specific_latent_dim", cfg.specific_latent_dim);
  cfg.disparity = j.value("disparity", cfg.disparity);
  cfg.coarse_topics = j.value("coarse_topics", cfg.coarse_topics);
  if (j.contains("granularity_map")) {
    cfg.granularity_map = j["granularity_map"].get<std::vector<std::size_t>>();
  }
  cfg.concentration = j.value("concentration", cfg.concentration);
  cfg.twitter_specific_concentration =
      j.value("twitter_specific_concentration", cfg.twitter_specific_concentration);
  cfg.youtube_specific_concentration =
      j.value("youtube_specific_concentration", cfg.youtube_specific_concentration);
  cfg.coarse_sharpness = j.value("coarse_sharpness", cfg.coarse_sharpness);
  cfg.noise = j.value("noise", cfg.noise);
  cfg.videos_per_user_min = j.value("videos_per_user_min", cfg.videos_per_user_min);
  cfg.videos_per_user_max = j.value("videos_per_user_max", cfg.videos_per_user_max);
  cfg.video_jitter = j.value("video_jitter", cfg.video_jitter);
  cfg.video_clusters = j.value("video_clusters", cfg.video_clusters);
  cfg.background_videos = j.value("background_videos", cfg.background_videos);
  cfg.cluster_spread = j.value("cluster_spread", cfg.cluster_spread);
  cfg.seed = j.value("seed", cfg.seed);
  return cfg;
}

json parse_flat_toml(std::string_view text) {
  json out = json::object();
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_string = !in_string;
      if (line[i] == '#' && !in_string) {
        line.resize(i);
        break;
      }
    }
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto where = "line " + std::to_string(line_no) + ": ";
    if (line[first] == '[') throw Error(where + "TOML tables are not supported");
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(where + "expected key = value");
    std::string key = line.substr(first, eq - first);
    key.erase(key.find_last_not_of(" \t") + 1);
    std::string value = line.substr(eq + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    value.erase(value.find_last_not_of(" \t\r") + 1);
    if (key.empty() || value.empty()) throw Error(where + "expected key = value");
    // Numbers, booleans, basic strings and arrays of those share JSON syntax.
    try {
      out[key] = json::parse(value);
    } catch (const json::parse_error&) {
      throw Error(where + "cannot parse value '" + value + "'");
    }
  }
  return out;
}

SyntheticConfig load_synthetic_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    if (path.extension() == ".toml") return synthetic_config_from_json(parse_flat_toml(buf.str()));
    return synthetic_config_from_json(json::parse(buf.str()));
  } catch (const json::exception& e) {
    throw Error(path.string() + ": " + e.what());
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

}  // namespace xassoc
