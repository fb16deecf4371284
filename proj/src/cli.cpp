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

#include "xassoc/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "xassoc/dataset_io.hpp"
#include "xassoc/pipeline.hpp"
#include "xassoc/report.hpp"
#include "xassoc/rng.hpp"
#include "xassoc/synthetic.hpp"

namespace xassoc {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct TrainFlags {
  std::string model = "dca";
  std::string data;
  std::string out;
  std::string direction = "t2y";
  std::uint64_t seed = 0;
  std::size_t epochs = 200;
  std::size_t batch = 64;
  double learning_rate = 0.001;
  std::size_t mt = 10;
  std::size_t mc = 80;
  std::size_t my = 10;
  double lambda = 0.0;
  double mu = 0.0001;
  std::size_t hidden = 100;
  std::string mlp_output = "sigmoid";
  std::size_t atoms = 40;
  std::size_t la_iters = 30;
  DataOptions data_options;

  CLI::Option* lambda_opt = nullptr;
  CLI::Option* mc_opt = nullptr;
};

void add_data_flags(CLI::App* sub, DataOptions& o) {
  sub->add_option("--min-user-videos", o.min_user_videos,
                  "Drop users with fewer interacted videos")
      ->capture_default_str();
  sub->add_option("--min-video-users", o.min_video_users, "Drop videos with fewer consumers")
      ->capture_default_str();
  sub->add_option("--train-fraction", o.train_fraction, "Share of users used for training")
      ->capture_default_str();
}

void add_model_flags(CLI::App* sub, TrainFlags& f) {
  sub->add_option("--epochs", f.epochs, "Training epochs")->capture_default_str();
  sub->add_option("--batch", f.batch, "Minibatch size")->capture_default_str();
  sub->add_option("--learning-rate", f.learning_rate, "Adam step size")->capture_default_str();
  sub->add_option("--mt", f.mt, "Twitter-specific hidden units (dca)")->capture_default_str();
  f.mc_opt = sub->add_option("--mc", f.mc, "Common hidden units (dca; hidden size for ma, default 90)")
                 ->capture_default_str();
  sub->add_option("--my", f.my, "YouTube-specific hidden units (dca)")->capture_default_str();
  f.lambda_opt = sub->add_option(
      "--lambda", f.lambda,
      "Regularization weight (dca/ma 0.005, lr 0.01, la 0.01, mlp 0 by default)");
  sub->add_option("--mu", f.mu, "Hidden-layer L1 weight (dca/ma)")->capture_default_str();
  sub->add_option("--hidden", f.hidden, "Hidden units (mlp)")->capture_default_str();
  sub->add_option("--mlp-output", f.mlp_output, "Output activation (mlp): sigmoid or linear")
      ->capture_default_str()
      ->check(CLI::IsMember({"sigmoid", "linear"}));
  sub->add_option("--atoms", f.atoms, "Latent attributes (la)")->capture_default_str();
  sub->add_option("--la-iters", f.la_iters, "Alternations (la)")->capture_default_str();
  sub->add_option("--direction", f.direction, "Mapping direction for lr/mlp: t2y or y2t")
      ->capture_default_str();
}

ModelOptions model_options(const TrainFlags& f, ModelKind kind) {
  ModelOptions o;
  o.kind = kind;
  o.direction = parse_direction(f.direction);
  o.hidden_twitter = f.mt;
  o.hidden_common = f.mc;
  o.hidden_youtube = f.my;
  if (f.mc_opt && f.mc_opt->count()) o.ma_hidden = f.mc;
  o.autoencoder.epochs = f.epochs;
  o.autoencoder.batch_size = f.batch;
  o.autoencoder.adam.learning_rate = f.learning_rate;
  o.autoencoder.sparsity = f.mu;
  o.mlp.epochs = f.epochs;
  o.mlp.batch_size = f.batch;
  o.mlp.adam.learning_rate = f.learning_rate;
  o.mlp_hidden = f.hidden;
  o.mlp_output = parse_mlp_output(f.mlp_output);
  o.la.atoms = f.atoms;
  o.la.iterations = f.la_iters;
  if (f.lambda_opt && f.lambda_opt->count()) {
    o.autoencoder.weight_decay = f.lambda;
    o.mlp.weight_decay = f.lambda;
    o.ridge_lambda = f.lambda;
    o.la.lambda = f.lambda;
  }
  return o;
}

json run_manifest(const std::string& command, const std::vector<std::string>& args,
                  const json& config, std::uint64_t seed, double seconds, const json& outputs) {
  return {{"format_version", kReportFormatVersion},
          {"command", command},
          {"args", args},
          {"config", config},
          {"seed", seed},
          {"versions",
           {{"xassoc", kVersion},
            {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." +
                          std::to_string(EIGEN_MAJOR_VERSION) + "." +
                          std::to_string(EIGEN_MINOR_VERSION)},
            {"checkpoint_format", kCheckpointFormatVersion},
            {"data_format", kDataFormatVersion},
            {"report_format", kReportFormatVersion}}},
          {"wall_time_seconds", seconds},
          {"outputs", outputs}};
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void write_report_files(const fs::path& out, const json& report, const std::string& csv) {
  write_json(out, report);
  read_json(out);
  if (!csv.empty()) {
    std::ofstream f(csv, std::ios::binary);
    f << report_csv(report);
    if (!f) throw Error("failed writing " + csv);
  }
}

std::string manifest_path(const std::string& out) { return out + ".manifest.json"; }

int cmd_gen(const std::vector<std::string>& args, const std::string& config_path,
            const std::string& out, std::optional<std::uint64_t> seed) {
  Stopwatch clock;
  SyntheticConfig cfg = config_path.empty() ? SyntheticConfig{} : load_synthetic_config(config_path);
  if (seed) cfg.seed = *seed;
  const Dataset d = gen_synthetic(cfg);
  write_dataset(out, d);
  const Dataset check = load_dataset_dir(out);
  if (check.users.size() != d.users.size() || check.videos.size() != d.videos.size()) {
    throw Error("generated dataset failed validation on re-read");
  }
  write_json(fs::path(out) / "run_manifest.json",
             run_manifest("gen", args, to_json(cfg), cfg.seed, clock.seconds(),
                          {"users.jsonl", "videos.jsonl", "interactions.jsonl", "manifest.json"}));
  std::cout << "wrote " << d.users.size() << " users and " << d.videos.size() << " videos to "
            << out << '\n';
  return 0;
}

int cmd_train(const std::vector<std::string>& args, const TrainFlags& f) {
  Stopwatch clock;
  const ModelKind kind = parse_model_kind(f.model);
  const ModelOptions options = model_options(f, kind);
  const Dataset d = load_dataset_dir(f.data);
  const PreparedData prepared = prepare_data(d, f.data_options, f.seed);
  const Checkpoint ckpt = train_model(prepared, options, f.seed);
  save_checkpoint(f.out, ckpt);
  load_checkpoint(f.out);
  write_json(manifest_path(f.out),
             run_manifest("train", args,
                          {{"model", options.to_json()}, {"data", f.data_options.to_json()},
                           {"data_dir", f.data}},
                          f.seed, clock.seconds(), {f.out}));
  std::cout << "trained " << f.model << " on " << prepared.split.train.users.size()
            << " users -> " << f.out << '\n';
  return 0;
}

int cmd_predict(const std::vector<std::string>& args, const std::string& model_path,
                const std::string& data, const std::string& out, const std::string& direction_s,
                const std::string& substitute_s, const std::string& split) {
  Stopwatch clock;
  const Direction direction = parse_direction(direction_s);
  const SubstituteMode substitute = parse_substitute(substitute_s);
  const Checkpoint ckpt = load_checkpoint(model_path);
  const Dataset d = load_dataset_dir(data);
  const PreparedData prepared = prepare_from_checkpoint(d, ckpt);
  std::span<const AlignedUser> users;
  if (split == "test") {
    users = prepared.split.test.users;
  } else if (split == "train") {
    users = prepared.split.train.users;
  } else if (split == "all") {
    users = prepared.filtered.users;
  } else {
    throw Error("unknown split '" + split + "' (expected test, train or all)");
  }
  const auto preds = predict_users(ckpt, users, direction, substitute);
  {
    std::ofstream o(out, std::ios::binary);
    if (!o) throw Error("cannot write " + out);
    for (const auto& p : preds) {
      o << json{{"user", p.user}, {"direction", direction_name(direction)},
                {"pred", vector_to_json(p.pred)}}
               .dump()
        << '\n';
    }
    if (!o) throw Error("failed writing " + out);
  }
  write_json(manifest_path(out),
             run_manifest("predict", args,
                          {{"model", model_path}, {"data_dir", data},
                           {"direction", direction_name(direction)},
                           {"substitute", substitute_name(substitute)}, {"split", split}},
                          ckpt.training.value("seed", std::uint64_t{0}), clock.seconds(), {out}));
  std::cout << "wrote " << preds.size() << " predictions to " << out << '\n';
  return 0;
}

int cmd_eval_assoc(const std::vector<std::string>& args, const std::string& preds_path,
                   const std::string& data, const std::string& out, const std::string& csv) {
  Stopwatch clock;
  const Dataset d = load_dataset_dir(data);
  std::map<std::string, const AlignedUser*> by_id;
  for (const auto& u : d.users) by_id[u.id] = &u;

  std::ifstream in(preds_path);
  if (!in) throw Error("cannot open " + preds_path);
  std::optional<Direction> direction;
  std::vector<Vector> preds;
  std::vector<Vector> truths;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json r = json::parse(line);
      const Direction dir = parse_direction(r.at("direction").get<std::string>());
      if (direction && *direction != dir) throw Error("mixed directions in one prediction file");
      direction = dir;
      const std::string user = r.at("user").get<std::string>();
      auto it = by_id.find(user);
      if (it == by_id.end()) throw Error("unknown user '" + user + "'");
      preds.push_back(vector_from_json(r.at("pred")));
      truths.push_back(it->second->on(target_platform(dir)));
    } catch (const std::exception& e) {
      throw LoadError(preds_path, line_no, e.what());
    }
  }
  if (!direction) throw Error(preds_path + ": no predictions");
  const Platform dst = target_platform(*direction);
  const AssocReport r = mae_rmse(preds, truths, d.dims.on(dst), dst);
  const json report = {{"format_version", kReportFormatVersion},
                       {"report", "assoc"},
                       {"direction", direction_name(*direction)},
                       {"assoc", to_json(r)}};
  write_report_files(out, report, csv);
  write_json(manifest_path(out),
             run_manifest("eval-assoc", args, {{"preds", preds_path}, {"data_dir", data}}, 0,
                          clock.seconds(), {out}));
  std::cout << "MAE^" << platform_name(dst) << " = " << r.mae << ", RMSE = " << r.rmse << " over "
            << r.users << " users\n";
  return 0;
}

int cmd_eval_rec(const std::vector<std::string>& args, const std::string& model_path,
                 const std::string& data, std::size_t k, std::uint64_t seed, const std::string& out,
                 const std::string& recs_path, const std::string& substitute_s,
                 const std::string& csv) {
  Stopwatch clock;
  const SubstituteMode substitute = parse_substitute(substitute_s);
  const Checkpoint ckpt = load_checkpoint(model_path);
  const Dataset d = load_dataset_dir(data);
  const PreparedData prepared = prepare_from_checkpoint(d, ckpt);
  const auto preds = predict_users(ckpt, prepared.split.test.users, Direction::TwitterToYouTube,
                                   substitute);
  std::vector<UserRecommendation> recs;
  const RecReport r = evaluate_recommendation(prepared.split.test, preds, k, seed, &recs);
  const json report = {{"format_version", kReportFormatVersion},
                       {"report", "rec"},
                       {"model", model_kind_name(kind_of(ckpt.model))},
                       {"k", r.k},
                       {"precision", r.precision},
                       {"recall", r.recall},
                       {"f_score", r.f_score},
                       {"users", r.users},
                       {"seed", seed},
                       {"substitute", substitute_name(substitute)}};
  write_report_files(out, report, csv);
  json outputs = {out};
  if (!recs_path.empty()) {
    std::ofstream o(recs_path, std::ios::binary);
    if (!o) throw Error("cannot write " + recs_path);
    for (const auto& rec : recs) {
      json ranked = json::array();
      for (const auto& sv : rec.ranked) ranked.push_back({{"video", sv.video_id}, {"score", sv.score}});
      o << json{{"user", rec.user}, {"ranked", ranked}, {"k", k}, {"seed", rec.seed}}.dump() << '\n';
    }
    if (!o) throw Error("failed writing " + recs_path);
    outputs.push_back(recs_path);
  }
  write_json(manifest_path(out),
             run_manifest("eval-rec", args,
                          {{"model", model_path}, {"data_dir", data}, {"k", k},
                           {"substitute", substitute_name(substitute)}},
                          seed, clock.seconds(), outputs));
  std::cout << "top-" << k << " precision " << r.precision << ", recall " << r.recall
            << ", F-score " << r.f_score << " over " << r.users << " users\n";
  return 0;
}

int cmd_measure(const std::vector<std::string>& args, const std::string& data, std::size_t clusters,
                std::size_t samples, std::uint64_t seed, const std::string& out,
                const std::string& csv) {
  Stopwatch clock;
  const Dataset d = load_dataset_dir(data);
  const MeasureReport r = measure(d.users, clusters, samples, seed);
  write_report_files(out, to_json(r), csv);
  write_json(manifest_path(out),
             run_manifest("measure", args,
                          {{"data_dir", data}, {"clusters", clusters}, {"random_samples", samples}},
                          seed, clock.seconds(), {out}));
  const json t = to_json(r)["table"];
  for (const char* p : {"twitter", "youtube"}) {
    std::cout << p << ": random " << t[p]["random"]["distance"].get<double>()
              << ", clustered on twitter " << t[p]["clustered_on_twitter"]["distance"].get<double>()
              << " (" << t[p]["clustered_on_twitter"]["ratio"].get<double>() << ")"
              << ", clustered on youtube " << t[p]["clustered_on_youtube"]["distance"].get<double>()
              << " (" << t[p]["clustered_on_youtube"]["ratio"].get<double>() << ")\n";
  }
  return 0;
}

int cmd_compare(const std::vector<std::string>& args, TrainFlags f, std::size_t seeds, std::size_t k,
                const std::string& out, const std::string& csv) {
  Stopwatch clock;
  if (seeds < 1) throw Error("--seeds must be >= 1");
  const Dataset d = load_dataset_dir(f.data);
  const PreparedData prepared = prepare_data(d, f.data_options, f.seed);
  const auto& test = prepared.split.test;

  CompareOptions options;
  options.seeds = seeds;
  options.k = k;
  const auto scores = compare_models(prepared, model_options(f, ModelKind::Dca), options, f.seed,
                                     [](std::string_view line) { std::cerr << line << '\n'; });

  json models = json::object();
  for (const auto& m : scores) {
    double rec[3] = {0, 0, 0};
    for (const auto& r : m.rec) {
      rec[0] += r.precision;
      rec[1] += r.recall;
      rec[2] += r.f_score;
    }
    const double n = static_cast<double>(m.rec.size());
    models[std::string(model_kind_name(m.kind))] = {
        {"runs", m.t2y.size()},
        {"t2y", {{"mae", mean_mae(m.t2y)}, {"rmse", mean_rmse(m.t2y)}}},
        {"y2t", {{"mae", mean_mae(m.y2t)}, {"rmse", mean_rmse(m.y2t)}}},
        {"rec", {{"k", k}, {"precision", rec[0] / n}, {"recall", rec[1] / n}, {"f_score", rec[2] / n}}}};
  }
  const json report = {{"format_version", kReportFormatVersion},
                       {"report", "comparison"},
                       {"seeds", seeds},
                       {"seed", f.seed},
                       {"test_users", test.users.size()},
                       {"models", models}};
  write_report_files(out, report, csv);
  write_json(manifest_path(out),
             run_manifest("baselines-compare", args,
                          {{"model", model_options(f, ModelKind::Dca).to_json()},
                           {"data", f.data_options.to_json()},
                           {"data_dir", f.data},
                           {"seeds", seeds},
                           {"k", k}},
                          f.seed, clock.seconds(), {out}));
  std::cout << "model   MAE^Y     RMSE^Y    MAE^T     RMSE^T    P@" << k << "      R@" << k
            << "      F@" << k << '\n';
  for (const char* name : {"lr", "la", "mlp", "ma", "dca"}) {
    const json& m = models[name];
    char line[160];
    std::snprintf(line, sizeof line, "%-6s  %.6f  %.6f  %.6f  %.6f  %.6f  %.6f  %.6f\n", name,
                  m["t2y"]["mae"].get<double>(), m["t2y"]["rmse"].get<double>(),
                  m["y2t"]["mae"].get<double>(), m["y2t"]["rmse"].get<double>(),
                  m["rec"]["precision"].get<double>(), m["rec"]["recall"].get<double>(),
                  m["rec"]["f_score"].get<double>());
    std::cout << line;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Cross-platform user association with disparity-preserving autoencoders", "xassoc"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string gen_config;
  std::string gen_out;
  std::optional<std::uint64_t> gen_seed;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic aligned-user dataset");
  gen->add_option("--config", gen_config, "Generator config (.json or .toml)")->check(CLI::ExistingFile);
  gen->add_option("--out", gen_out, "Output directory")->required();
  gen->add_option("--seed", gen_seed, "Override the config seed");

  TrainFlags train_flags;
  auto* train = app.add_subcommand("train", "Train a model on the training split");
  train->add_option("--model", train_flags.model, "dca, ma, mlp, lr or la")
      ->capture_default_str()
      ->check(CLI::IsMember({"dca", "ma", "mlp", "lr", "la"}));
  train->add_option("--data", train_flags.data, "Dataset directory")->required()->check(CLI::ExistingDirectory);
  train->add_option("--out", train_flags.out, "Checkpoint path")->required();
  train->add_option("--seed", train_flags.seed, "Master seed")->capture_default_str();
  add_model_flags(train, train_flags);
  add_data_flags(train, train_flags.data_options);

  std::string pred_model, pred_data, pred_out, pred_direction = "t2y", pred_sub = "mean",
                                                pred_split = "test";
  auto* predict = app.add_subcommand("predict", "Predict cross-platform vectors for held-out users");
  predict->add_option("--model", pred_model, "Checkpoint path")->required()->check(CLI::ExistingFile);
  predict->add_option("--data", pred_data, "Dataset directory")->required()->check(CLI::ExistingDirectory);
  predict->add_option("--out", pred_out, "Predictions JSONL")->required();
  predict->add_option("--direction", pred_direction, "t2y or y2t")->capture_default_str();
  predict->add_option("--substitute", pred_sub, "Unknown-input fill: mean or zeros")->capture_default_str();
  predict->add_option("--split", pred_split, "Users to predict: test, train or all")->capture_default_str();

  std::string ea_preds, ea_data, ea_out, ea_csv;
  auto* eval_assoc = app.add_subcommand("eval-assoc", "MAE/RMSE of a prediction file");
  eval_assoc->add_option("--preds", ea_preds, "Predictions JSONL")->required()->check(CLI::ExistingFile);
  eval_assoc->add_option("--data", ea_data, "Dataset directory")->required()->check(CLI::ExistingDirectory);
  eval_assoc->add_option("--out", ea_out, "Report JSON")->required();
  eval_assoc->add_option("--csv", ea_csv, "Also write a metric,name,value CSV");

  std::string er_model, er_data, er_out, er_recs, er_sub = "mean", er_csv;
  std::size_t er_k = 10;
  std::uint64_t er_seed = 0;
  auto* eval_rec = app.add_subcommand("eval-rec", "Top-k video recommendation for test users");
  eval_rec->add_option("--model", er_model, "Checkpoint path")->required()->check(CLI::ExistingFile);
  eval_rec->add_option("--data", er_data, "Dataset directory")->required()->check(CLI::ExistingDirectory);
  eval_rec->add_option("--k", er_k, "Recommendation list length")->capture_default_str()->check(CLI::PositiveNumber);
  eval_rec->add_option("--seed", er_seed, "Candidate sampling seed")->capture_default_str();
  eval_rec->add_option("--out", er_out, "Report JSON")->required();
  eval_rec->add_option("--recs", er_recs, "Also write per-user rankings as JSONL");
  eval_rec->add_option("--substitute", er_sub, "Unknown-input fill: mean or zeros")->capture_default_str();
  eval_rec->add_option("--csv", er_csv, "Also write a metric,name,value CSV");

  std::string ms_data, ms_out, ms_csv;
  std::size_t ms_clusters = 10, ms_samples = 200;
  std::uint64_t ms_seed = 0;
  auto* meas = app.add_subcommand("measure", "Cross-platform concentration of k-means user groups");
  meas->add_option("--data", ms_data, "Dataset directory")->required()->check(CLI::ExistingDirectory);
  meas->add_option("--clusters", ms_clusters, "k-means groups per platform")->capture_default_str();
  meas->add_option("--random-samples", ms_samples, "Random groups per normalizer")->capture_default_str();
  meas->add_option("--seed", ms_seed, "Seed")->capture_default_str();
  meas->add_option("--out", ms_out, "Report JSON")->required();
  meas->add_option("--csv", ms_csv, "Also write a metric,name,value CSV");

  TrainFlags cmp_flags;
  std::size_t cmp_seeds = 6, cmp_k = 10;
  std::string cmp_out, cmp_csv;
  auto* compare = app.add_subcommand("baselines-compare",
                                     "Train and evaluate lr, la, mlp, ma and dca on one dataset");
  compare->add_option("--data", cmp_flags.data, "Dataset directory")->required()->check(CLI::ExistingDirectory);
  compare->add_option("--out", cmp_out, "Comparison report JSON")->required();
  compare->add_option("--seed", cmp_flags.seed, "Master seed")->capture_default_str();
  compare->add_option("--seeds", cmp_seeds, "Runs averaged per randomized model")->capture_default_str();
  compare->add_option("--k", cmp_k, "Recommendation list length")->capture_default_str();
  compare->add_option("--csv", cmp_csv, "Also write a metric,name,value CSV");
  add_model_flags(compare, cmp_flags);
  add_data_flags(compare, cmp_flags.data_options);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code != 0 && e.get_exit_code() != static_cast<int>(CLI::ExitCodes::Success)) {
      std::cerr << app.help();
    }
    return code;
  }

  try {
    if (*gen) return cmd_gen(args, gen_config, gen_out, gen_seed);
    if (*train) return cmd_train(args, train_flags);
    if (*predict) {
      return cmd_predict(args, pred_model, pred_data, pred_out, pred_direction, pred_sub, pred_split);
    }
    if (*eval_assoc) return cmd_eval_assoc(args, ea_preds, ea_data, ea_out, ea_csv);
    if (*eval_rec) {
      return cmd_eval_rec(args, er_model, er_data, er_k, er_seed, er_out, er_recs, er_sub, er_csv);
    }
    if (*meas) return cmd_measure(args, ms_data, ms_clusters, ms_samples, ms_seed, ms_out, ms_csv);
    if (*compare) return cmd_compare(args, cmp_flags, cmp_seeds, cmp_k, cmp_out, cmp_csv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace xassoc
