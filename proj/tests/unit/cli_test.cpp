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

#include <doctest.h>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "xassoc/cli.hpp"
#include "xassoc/report.hpp"

using namespace xassoc;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "xassoc");
  std::ostringstream out, err;
  auto* old_out = std::cout.rdbuf(out.rdbuf());
  auto* old_err = std::cerr.rdbuf(err.rdbuf());
  Result r;
  r.code = run(args);
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// One small generated dataset shared by the tests below.
struct World {
  fixture::TempDir dir{"cli"};
  std::string data = (dir / "data").string();

  World() {
    fixture::write_text(dir / "synth.toml",
                        "users = 120\nbackground_videos = 40\ndisparity = 0.3\nseed = 8\n");
    const Result r = run_cli({"gen", "--config", (dir / "synth.toml").string(), "--out", data});
    REQUIRE(r.code == 0);
  }

  std::string path(const std::string& name) const { return (dir / name).string(); }
};

World& world() {
  static World w;
  return w;
}

}  // namespace

TEST_CASE("cli: gen, train, predict and eval-assoc complete") {
  World& w = world();
  CHECK(fs::exists(fs::path(w.data) / "users.jsonl"));
  CHECK(fs::exists(fs::path(w.data) / "run_manifest.json"));

  REQUIRE(run_cli({"train", "--model", "dca", "--data", w.data, "--out", w.path("dca.json"),
                   "--epochs", "3"}).code == 0);
  CHECK(fs::exists(w.path("dca.json.manifest.json")));
  REQUIRE(run_cli({"predict", "--model", w.path("dca.json"), "--data", w.data, "--out",
                   w.path("preds.jsonl")}).code == 0);
  const Result ea = run_cli({"eval-assoc", "--preds", w.path("preds.jsonl"), "--data", w.data,
                             "--out", w.path("assoc.json"), "--csv", w.path("assoc.csv")});
  REQUIRE(ea.code == 0);
  const auto report = read_json(w.path("assoc.json"));
  CHECK(report.at("format_version") == 1);
  CHECK(report.at("assoc").at("mae").get<double>() > 0.0);
  CHECK(fixture::slurp(w.path("assoc.csv")).find("assoc,mae,") != std::string::npos);

  const auto manifest = read_json(w.path("assoc.json.manifest.json"));
  CHECK(manifest.at("command") == "eval-assoc");
  CHECK(manifest.contains("wall_time_seconds"));
  CHECK(manifest.at("versions").contains("xassoc"));
}

TEST_CASE("cli: training twice with one seed gives identical bytes") {
  World& w = world();
  for (const char* model : {"dca", "mlp", "la"}) {
    const std::vector<std::string> base = {"train", "--model", model, "--data", w.data, "--epochs",
                                           "2", "--la-iters", "2", "--seed", "5", "--out"};
    auto a = base, b = base;
    a.push_back(w.path("a.json"));
    b.push_back(w.path("b.json"));
    REQUIRE(run_cli(a).code == 0);
    REQUIRE(run_cli(b).code == 0);
    CHECK(fixture::slurp(w.path("a.json")) == fixture::slurp(w.path("b.json")));
  }
}

TEST_CASE("cli: eval-rec reports precision, recall and f_score") {
  World& w = world();
  REQUIRE(run_cli({"train", "--model", "lr", "--data", w.data, "--out", w.path("lr.json")}).code == 0);
  const Result r = run_cli({"eval-rec", "--model", w.path("lr.json"), "--data", w.data, "--k", "10",
                            "--seed", "3", "--out", w.path("rec.json"), "--recs", w.path("recs.jsonl")});
  REQUIRE(r.code == 0);
  const auto report = read_json(w.path("rec.json"));
  for (const char* key : {"precision", "recall", "f_score"}) {
    CHECK(report.contains(key));
  }
  CHECK(report.at("k") == 10);
  const std::string recs = fixture::slurp(w.path("recs.jsonl"));
  CHECK(recs.find("\"ranked\"") != std::string::npos);
  CHECK(recs.find("\"seed\"") != std::string::npos);
}

TEST_CASE("cli: measure and baselines-compare write reports") {
  World& w = world();
  REQUIRE(run_cli({"measure", "--data", w.data, "--clusters", "3", "--random-samples", "20", "--out",
                   w.path("measure.json")}).code == 0);
  CHECK(read_json(w.path("measure.json")).at("report") == "measure");

  const Result r = run_cli({"baselines-compare", "--data", w.data, "--out", w.path("cmp.json"),
                            "--seeds", "1", "--epochs", "2", "--la-iters", "2"});
  REQUIRE(r.code == 0);
  const auto cmp = read_json(w.path("cmp.json"));
  for (const char* m : {"lr", "la", "mlp", "ma", "dca"}) CHECK(cmp.at("models").contains(m));
  CHECK(r.out.find("dca") != std::string::npos);
}

TEST_CASE("cli: usage errors exit nonzero") {
  CHECK(run_cli({}).code != 0);
  CHECK(run_cli({"fly"}).code != 0);
  const Result r = run_cli({"train", "--data", world().data, "--out", "x.json", "--bogus"});
  CHECK(r.code != 0);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(run_cli({"--version"}).code == 0);
}

TEST_CASE("cli: bad input files are named with their line") {
  World& w = world();
  fixture::write_text(w.path("broken.jsonl"), "{\"user\":\"u000\",\"direction\":\"t2y\",\"pred\":[0.5]}\n");
  const Result r = run_cli({"eval-assoc", "--preds", w.path("broken.jsonl"), "--data", w.data,
                            "--out", w.path("never.json")});
  CHECK(r.code == 1);
  CHECK(r.err.find("broken.jsonl:1") != std::string::npos);
  CHECK_FALSE(fs::exists(w.path("never.json")));
}
