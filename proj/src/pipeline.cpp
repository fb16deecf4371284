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

#include "xassoc/pipeline.hpp"

#include <map>
#include <set>

#include "xassoc/dataset_io.hpp"
#include "xassoc/report.hpp"
#include "xassoc/rng.hpp"

namespace xassoc {

using nlohmann::json;

namespace {

json train_config_json(const TrainConfig& c) {
  return {{"epochs", c.epochs},
          {"batch_size", c.batch_size},
          {"learning_rate", c.adam.learning_rate},
          {"beta1", c.adam.beta1},
          {"beta2", c.adam.beta2},
          {"epsilon", c.adam.epsilon},
          {"lambda", c.weight_decay},
          {"mu", c.sparsity},
          {"init_scale", c.init_scale}};
}

std::size_t pidx(Platform p) { return p == Platform::Twitter ? 0 : 1; }

Vector substitute_vector(const Checkpoint& ckpt, Platform unknown, std::size_t dim,
                         SubstituteMode mode) {
  if (mode == SubstituteMode::Zeros) return Vector::Zero(static_cast<Eigen::Index>(dim));
  const std::string key = "substitute_" + std::string(platform_name(unknown));
  if (!ckpt.training.contains(key)) {
    throw Error("checkpoint has no stored training mean for " + std::string(platform_name(unknown)) +
                "; use --substitute zeros");
  }
  Vector v = vector_from_json(ckpt.training[key]);
  if (static_cast<std::size_t>(v.size()) != dim) throw Error("stored training mean has the wrong size");
  return v;
}

void require_direction(Direction trained, Direction requested, std::string_view kind) {
  if (trained != requested) {
    throw Error(std::string(kind) + " model was trained for " + std::string(direction_name(trained)) +
                ", cannot predict " + std::string(direction_name(requested)));
  }
}

}  // namespace

std::string_view substitute_name(SubstituteMode m) { return m == SubstituteMode::Mean ? "mean" : "zeros"; }

SubstituteMode parse_substitute(std::string_view s) {
  if (s == "mean") return SubstituteMode::Mean;
  if (s == "zeros") return SubstituteMode::Zeros;
  throw Error("unknown substitute mode '" + std::string(s) + "' (expected mean or zeros)");
}

json DataOptions::to_json() const {
  return {{"min_user_videos", min_user_videos},
          {"min_video_users", min_video_users},
          {"train_fraction", train_fraction}};
}

json ModelOptions::to_json() const {
  return {{"kind", model_kind_name(kind)},
          {"direction", direction_name(direction)},
          {"hidden_twitter", hidden_twitter},
          {"hidden_common", hidden_common},
          {"hidden_youtube", hidden_youtube},
          {"ma_hidden", ma_hidden},
          {"autoencoder", train_config_json(autoencoder)},
          {"mlp_hidden", mlp_hidden},
          {"mlp_output", mlp_output_name(mlp_output)},
          {"mlp", train_config_json(mlp)},
          {"ridge_lambda", ridge_lambda},
          {"la",
           {{"atoms", la.atoms},
            {"lambda", la.lambda},
            {"iterations", la.iterations},
            {"code_sweeps", la.code_sweeps},
            {"dict_steps", la.dict_steps}}}};
}

namespace {

PreparedData prepare_with_split_seed(const Dataset& d, const DataOptions& options,
                                     std::uint64_t split_seed) {
  PreparedData p;
  p.options = options;
  p.filtered = filter_dataset(d, options.min_user_videos, options.min_video_users);
  p.split_seed = split_seed;
  p.split = split_train_test(p.filtered, options.train_fraction, p.split_seed);
  if (p.split.train.users.empty()) throw Error("training split is empty");
  p.mean_twitter = platform_mean(p.split.train.users, Platform::Twitter);
  p.mean_youtube = platform_mean(p.split.train.users, Platform::YouTube);
  return p;
}

}  // namespace

PreparedData prepare_data(const Dataset& d, const DataOptions& options, std::uint64_t seed) {
  return prepare_with_split_seed(d, options, derive_seed(seed, "split"));
}

PreparedData prepare_from_checkpoint(const Dataset& d, const Checkpoint& ckpt) {
  if (!ckpt.training.contains("data") || !ckpt.training.contains("split_seed")) {
    throw Error("checkpoint carries no training context (data options and split seed)");
  }
  const json& dj = ckpt.training["data"];
  DataOptions o;
  o.min_user_videos = dj.value("min_user_videos", o.min_user_videos);
  o.min_video_users = dj.value("min_video_users", o.min_video_users);
  o.train_fraction = dj.value("train_fraction", o.train_fraction);
  return prepare_with_split_seed(d, o, ckpt.training["split_seed"].get<std::uint64_t>());
}

Checkpoint train_model(const PreparedData& data, const ModelOptions& options, std::uint64_t seed) {
  const auto& train = data.split.train.users;
  const TopicDims dims = data.filtered.dims;
  Checkpoint ckpt;
  switch (options.kind) {
    case ModelKind::Dca:
    case ModelKind::Ma: {
      AutoencoderLayout layout;
      layout.input_twitter = dims.twitter;
      layout.input_youtube = dims.youtube;
      if (options.kind == ModelKind::Dca) {
        layout.hidden_twitter = options.hidden_twitter;
        layout.hidden_common = options.hidden_common;
        layout.hidden_youtube = options.hidden_youtube;
      } else {
        layout.hidden_twitter = 0;
        layout.hidden_common = options.ma_hidden;
        layout.hidden_youtube = 0;
      }
      const auto examples = augment_training_set(train, data.mean_twitter, data.mean_youtube,
                                                 derive_seed(seed, "augment"));
      TrainConfig cfg = options.autoencoder;
      cfg.seed = derive_seed(seed, "train");
      ckpt.model = ae_train(examples, layout, cfg);
      break;
    }
    case ModelKind::Lr: {
      const Platform src = source_platform(options.direction);
      ckpt.model = ridge_fit(stack_columns(train, src), stack_columns(train, other(src)),
                             options.ridge_lambda, options.direction);
      break;
    }
    case ModelKind::La: {
      LaConfig cfg = options.la;
      cfg.seed = derive_seed(seed, "train");
      ckpt.model = la_fit(stack_columns(train, Platform::Twitter),
                          stack_columns(train, Platform::YouTube), cfg);
      break;
    }
    case ModelKind::Mlp: {
      const Platform src = source_platform(options.direction);
      TrainConfig cfg = options.mlp;
      cfg.seed = derive_seed(seed, "train");
      ckpt.model = mlp_fit(stack_columns(train, src), stack_columns(train, other(src)),
                           options.mlp_hidden, cfg, options.direction, options.mlp_output);
      break;
    }
  }
  ckpt.training = {{"seed", seed},
                   {"split_seed", data.split_seed},
                   {"data", data.options.to_json()},
                   {"train_users", train.size()},
                   {"model_options", options.to_json()},
                   {"substitute_twitter", vector_to_json(data.mean_twitter)},
                   {"substitute_youtube", vector_to_json(data.mean_youtube)}};
  return ckpt;
}

Vector predict_cross(const Checkpoint& ckpt, const Vector& known, Direction direction,
                     SubstituteMode substitute) {
  const Platform unknown = target_platform(direction);
  if (const auto* ae = std::get_if<MaskedAutoencoderModel>(&ckpt.model)) {
    const std::size_t dim = unknown == Platform::YouTube ? ae->layout.input_youtube
                                                         : ae->layout.input_twitter;
    return ae_predict_cross(*ae, known, direction, substitute_vector(ckpt, unknown, dim, substitute));
  }
  if (const auto* lr = std::get_if<RidgeTransfer>(&ckpt.model)) {
    require_direction(lr->direction, direction, "lr");
    return ridge_predict(*lr, known);
  }
  if (const auto* la = std::get_if<LatentAttribute>(&ckpt.model)) {
    if (known.size() != la->dict(source_platform(direction)).rows()) {
      throw Error("la: input dimension does not match the source dictionary");
    }
    return la_predict(*la, known, source_platform(direction));
  }
  const auto& mlp = std::get<MlpMapper>(ckpt.model);
  require_direction(mlp.direction, direction, "mlp");
  return mlp_predict(mlp, known);
}

std::vector<UserPrediction> predict_users(const Checkpoint& ckpt, std::span<const AlignedUser> users,
                                          Direction direction, SubstituteMode substitute) {
  std::vector<UserPrediction> out;
  out.reserve(users.size());
  const Platform src = source_platform(direction);
  for (const auto& u : users) {
    out.push_back({u.id, predict_cross(ckpt, u.on(src), direction, substitute)});
  }
  return out;
}

AssocReport evaluate_association(const Checkpoint& ckpt, std::span<const AlignedUser> users,
                                 Direction direction, SubstituteMode substitute) {
  const auto preds = predict_users(ckpt, users, direction, substitute);
  const Platform dst = target_platform(direction);
  std::vector<Vector> p;
  std::vector<Vector> t;
  for (std::size_t i = 0; i < users.size(); ++i) {
    p.push_back(preds[i].pred);
    t.push_back(users[i].on(dst));
  }
  return mae_rmse(p, t, static_cast<std::size_t>(users.front().on(dst).size()), dst);
}

RecReport evaluate_recommendation(const Dataset& test, const std::vector<UserPrediction>& predictions,
                                  std::size_t k, std::uint64_t seed,
                                  std::vector<UserRecommendation>* per_user) {
  std::map<std::string, const Vector*> pred_of;
  for (const auto& p : predictions) pred_of[p.user] = &p.pred;
  std::vector<std::string> corpus;
  corpus.reserve(test.videos.size());
  for (const auto& v : test.videos) corpus.push_back(v.id);

  std::vector<PrfScore> scores;
  for (const auto& u : test.users) {
    const auto& truth = test.videos_of(u.id);
    if (truth.empty()) continue;
    auto it = pred_of.find(u.id);
    if (it == pred_of.end()) throw Error("no prediction for test user '" + u.id + "'");
    const std::uint64_t s = user_seed(seed, u.id);
    const CandidateSet cands = sample_candidates(u.id, truth, corpus, s);
    std::vector<Candidate> pool;
    for (const auto& id : cands.all()) {
      const VideoRecord* v = test.find_video(id);
      if (!v) throw Error("unknown video '" + id + "'");
      pool.push_back({id, &v->vec});
    }
    RankedList ranked = rank_topk(*it->second, pool, k);
    const PrfScore score =
        topk_prf(ranked, std::set<std::string>(truth.begin(), truth.end()), k);
    scores.push_back(score);
    if (per_user) per_user->push_back({u.id, std::move(ranked), score, s});
  }
  return average_prf(scores, k);
}

MeasureReport measure(std::span<const AlignedUser> users, std::size_t clusters,
                      std::size_t random_samples, std::uint64_t seed) {
  MeasureReport r;
  r.clusters = clusters;
  r.random_samples = random_samples;
  const Matrix points[2] = {stack_columns(users, Platform::Twitter).transpose(),
                            stack_columns(users, Platform::YouTube).transpose()};
  for (Platform on : {Platform::Twitter, Platform::YouTube}) {
    const KMeansResult km =
        kmeans(points[pidx(on)], clusters,
               derive_seed(seed, "kmeans:" + std::string(platform_name(on))));
    for (Platform eval : {Platform::Twitter, Platform::YouTube}) {
      r.table[pidx(on)][pidx(eval)] = concentration_ratio(
          km.assignment, clusters, points[pidx(eval)], random_samples,
          derive_seed(seed, "random:" + std::string(platform_name(on)) + ":" +
                                std::string(platform_name(eval))));
    }
  }
  return r;
}

std::vector<ModelScores> compare_models(const PreparedData& data, const ModelOptions& base,
                                        const CompareOptions& options, std::uint64_t seed,
                                        const std::function<void(std::string_view)>& progress) {
  if (options.seeds < 1) throw Error("compare_models: seeds must be >= 1");
  const auto& test = data.split.test;
  const std::uint64_t rec_seed = derive_seed(seed, "rec");
  std::vector<ModelScores> out;
  for (ModelKind kind : options.kinds) {
    ModelScores scores;
    scores.kind = kind;
    const std::size_t runs = kind == ModelKind::Lr ? 1 : options.seeds;
    const bool one_way = kind == ModelKind::Lr || kind == ModelKind::Mlp;
    for (std::size_t run = 0; run < runs; ++run) {
      const std::uint64_t run_seed = derive_seed(seed, "run:" + std::to_string(run));
      ModelOptions to_y = base;
      to_y.kind = kind;
      to_y.direction = Direction::TwitterToYouTube;
      const Checkpoint forward = train_model(data, to_y, run_seed);
      scores.t2y.push_back(evaluate_association(forward, test.users, Direction::TwitterToYouTube));
      std::string line = std::string(model_kind_name(kind)) + " run " + std::to_string(run + 1) +
                         "/" + std::to_string(runs) + ": MAE^Y " +
                         std::to_string(scores.t2y.back().mae);
      if (options.reverse) {
        ModelOptions to_t = to_y;
        to_t.direction = Direction::YouTubeToTwitter;
        const Checkpoint backward = one_way ? train_model(data, to_t, run_seed) : forward;
        scores.y2t.push_back(
            evaluate_association(backward, test.users, Direction::YouTubeToTwitter));
        line += ", MAE^T " + std::to_string(scores.y2t.back().mae);
      }
      if (options.recommend) {
        const auto preds =
            predict_users(forward, test.users, Direction::TwitterToYouTube, SubstituteMode::Mean);
        scores.rec.push_back(evaluate_recommendation(test, preds, options.k, rec_seed));
      }
      if (progress) progress(line);
    }
    out.push_back(std::move(scores));
  }
  return out;
}

double mean_mae(std::span<const AssocReport> runs) {
  if (runs.empty()) throw Error("mean_mae: no runs");
  double sum = 0.0;
  for (const auto& r : runs) sum += r.mae;
  return sum / static_cast<double>(runs.size());
}

double mean_rmse(std::span<const AssocReport> runs) {
  if (runs.empty()) throw Error("mean_rmse: no runs");
  double sum = 0.0;
  for (const auto& r : runs) sum += r.rmse;
  return sum / static_cast<double>(runs.size());
}

json to_json(const MeasureReport& r) {
  json table = json::object();
  json details = json::object();
  for (Platform eval : {Platform::Twitter, Platform::YouTube}) {
    const auto& same = r.table[pidx(eval)][pidx(eval)];
    json row = {{"random", {{"distance", same.mean_baseline}, {"ratio", 1.0}}}};
    for (Platform on : {Platform::Twitter, Platform::YouTube}) {
      const auto& c = r.table[pidx(on)][pidx(eval)];
      row["clustered_on_" + std::string(platform_name(on))] = {{"distance", c.mean_distance},
                                                               {"ratio", c.mean_ratio}};
      details["clustered_on_" + std::string(platform_name(on)) + "_evaluated_on_" +
              std::string(platform_name(eval))] = to_json(c);
    }
    table[std::string(platform_name(eval))] = row;
  }
  return {{"format_version", kReportFormatVersion},
          {"report", "measure"},
          {"clusters", r.clusters},
          {"random_samples", r.random_samples},
          {"table", table},
          {"groups", details}};
}

}  // namespace xassoc
