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

#include <cmath>
#include <limits>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "xassoc/latent_attribute.hpp"
#include "xassoc/mlp.hpp"
#include "xassoc/ridge.hpp"

using namespace xassoc;

// --- ridge ------------------------------------------------------------------

TEST_CASE("ridge: one-dimensional normal equations") {
  Matrix src(1, 1), dst(1, 1);
  src << 1.0;
  dst << 2.0;
  const auto w = ridge_fit(src, dst, 0.0).weights;
  CHECK(w(0, 0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("ridge: identity target recovers the identity") {
  Rng rng(1);
  const Matrix src = oracle::random_matrix(rng, 5, 20, 0.0, 1.0);
  const Matrix w = ridge_fit(src, src, 0.0).weights;
  CHECK((w - Matrix::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("ridge: huge lambda shrinks to zero") {
  Rng rng(2);
  const Matrix src = oracle::random_matrix(rng, 4, 30, 0.0, 1.0);
  const Matrix dst = oracle::random_matrix(rng, 3, 30, 0.0, 1.0);
  CHECK(ridge_fit(src, dst, 1e9).weights.norm() < 1e-6);
}

TEST_CASE("ridge: normal equations and the gradient-descent oracle") {
  Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix src = oracle::random_matrix(rng, 5, 25, 0.0, 1.0);
    const Matrix dst = oracle::random_matrix(rng, 4, 25, 0.0, 1.0);
    const double lambda = rng.uniform(0.01, 1.0);
    const Matrix w = ridge_fit(src, dst, lambda).weights;
    const Matrix gram = src * src.transpose() + lambda * Matrix::Identity(5, 5);
    CHECK((w * gram - dst * src.transpose()).norm() < 1e-8);
    CHECK((w - oracle::ridge_gradient_descent(src, dst, lambda)).cwiseAbs().maxCoeff() < 1e-5);
  }
}

TEST_CASE("ridge: singular system without regularization throws") {
  Matrix src(3, 2);
  src << 1, 0, 0, 1, 1, 1;  // rank 2 with 3 rows
  Matrix dst(1, 2);
  dst << 1, 2;
  CHECK_THROWS_AS(ridge_fit(src, dst, 0.0), Error);
  CHECK_NOTHROW(ridge_fit(src, dst, 0.1));
  CHECK_THROWS_AS(ridge_fit(src, Matrix::Zero(1, 3), 0.1), Error);
}

TEST_CASE("ridge_predict: hand cases") {
  RidgeTransfer m;
  m.weights = Matrix::Identity(2, 2);
  Vector u(2);
  u << 0.3, 0.7;
  CHECK(ridge_predict(m, u) == u);
  m.weights = Matrix::Zero(2, 2);
  CHECK(ridge_predict(m, u) == Vector::Zero(2));
  m.weights.resize(2, 2);
  m.weights << 1, 0, 1, 1;
  const Vector out = ridge_predict(m, u);
  CHECK(out[0] == doctest::Approx(0.3));
  CHECK(out[1] == doctest::Approx(1.0));
  CHECK_THROWS_AS(ridge_predict(m, Vector::Zero(3)), Error);
}

// --- latent attributes ------------------------------------------------------

namespace {

Matrix unit_columns(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix d = oracle::random_matrix(rng, rows, cols, -1.0, 1.0);
  for (Eigen::Index c = 0; c < d.cols(); ++c) d.col(c) /= d.col(c).norm();
  return d;
}

}  // namespace

TEST_CASE("lasso_code matches iterative shrinkage") {
  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix dict = unit_columns(rng, 6, 4);
    const Vector u = oracle::random_matrix(rng, 6, 1, 0.0, 1.0).col(0);
    const double lambda = rng.uniform(0.01, 0.3);
    const Vector s = lasso_code(dict, u, lambda);
    const auto ref = oracle::lasso_ista(dict, u, lambda);
    const std::vector<double> got(s.data(), s.data() + s.size());
    CHECK(oracle::lasso_objective(dict, u, got, lambda) <=
          oracle::lasso_objective(dict, u, ref, lambda) + 1e-10);
    for (std::size_t a = 0; a < ref.size(); ++a) CHECK(std::abs(got[a] - ref[a]) < 1e-6);
  }
}

TEST_CASE("la_predict: a dictionary atom maps to its partner atom") {
  Rng rng(5);
  LatentAttribute m;
  m.dict_twitter = unit_columns(rng, 4, 3);
  m.dict_youtube = unit_columns(rng, 5, 3);
  m.lambda = 1e-9;
  const Vector u = m.dict_twitter.col(1);
  const Vector out = la_predict(m, u, Platform::Twitter);
  CHECK((out - m.dict_youtube.col(1)).cwiseAbs().maxCoeff() < 1e-6);

  const auto ref = oracle::lasso_ista(m.dict_twitter, u, m.lambda);
  CHECK(std::abs(ref[1] - 1.0) < 1e-6);
  CHECK(std::abs(ref[0]) < 1e-6);
  CHECK(std::abs(ref[2]) < 1e-6);

  m.lambda = 1e6;
  CHECK(la_predict(m, u, Platform::Twitter) == Vector::Zero(5));
  m.lambda = 1e-9;
  CHECK(la_predict(m, u, Platform::Twitter) == la_predict(m, u, Platform::Twitter));
}

TEST_CASE("la_fit: huge lambda kills every code") {
  Rng rng(6);
  const Matrix ut = oracle::random_matrix(rng, 4, 10, 0.0, 1.0);
  const Matrix uy = oracle::random_matrix(rng, 5, 10, 0.0, 1.0);
  double max_norm = 0.0;
  for (Eigen::Index c = 0; c < 10; ++c) {
    max_norm = std::max({max_norm, ut.col(c).norm(), uy.col(c).norm()});
  }
  LaConfig cfg;
  cfg.atoms = 3;
  cfg.lambda = 10.0 * max_norm * 2.0;
  cfg.iterations = 5;
  const auto m = la_fit(ut, uy, cfg);
  CHECK(m.objective_trace.back() ==
        doctest::Approx(ut.squaredNorm() + uy.squaredNorm()).epsilon(1e-12));
  for (Eigen::Index c = 0; c < 10; ++c) {
    CHECK(la_predict(m, Vector(ut.col(c)), Platform::Twitter) == Vector::Zero(5));
  }
}

TEST_CASE("la_fit: monotone objective, feasible dictionaries, beats random search") {
  Rng rng(7);
  LaConfig cfg;
  cfg.atoms = 3;
  cfg.lambda = 0.05;
  cfg.iterations = 15;
  const Matrix ut = oracle::random_matrix(rng, 4, 10, 0.0, 1.0);
  const Matrix uy = oracle::random_matrix(rng, 4, 10, 0.0, 1.0);
  const auto m = la_fit(ut, uy, cfg);
  for (std::size_t i = 1; i < m.objective_trace.size(); ++i) {
    CHECK(m.objective_trace[i] <= m.objective_trace[i - 1] + 1e-10);
  }
  for (Eigen::Index c = 0; c < 3; ++c) {
    CHECK(m.dict_twitter.col(c).norm() <= 1.0 + 1e-9);
    CHECK(m.dict_youtube.col(c).norm() <= 1.0 + 1e-9);
  }
  double best = std::numeric_limits<double>::infinity();
  for (int draw = 0; draw < 100; ++draw) {
    const Matrix dt = unit_columns(rng, 4, 3) * rng.uniform();
    const Matrix dy = unit_columns(rng, 4, 3) * rng.uniform();
    const Matrix s = oracle::random_matrix(rng, 3, 10, -1.0, 1.0);
    best = std::min(best, oracle::la_objective(ut, uy, dt, dy, s, cfg.lambda));
  }
  CHECK(m.objective_trace.back() <= best);

  const auto again = la_fit(ut, uy, cfg);
  CHECK(again.dict_twitter == m.dict_twitter);
  CHECK(again.objective_trace == m.objective_trace);
}

TEST_CASE("la_fit: mismatched user counts throw") {
  LaConfig cfg;
  CHECK_THROWS_AS(la_fit(Matrix::Zero(3, 4), Matrix::Zero(3, 5), cfg), Error);
}

// --- mlp --------------------------------------------------------------------

namespace {

MlpMapper random_mapper(Rng& rng, std::size_t src, std::size_t hidden, std::size_t dst,
                        MlpOutput output, double weight_decay) {
  MlpMapper m;
  m.params = MlpParams::zeros(src, hidden, dst);
  Vector flat(m.params.size());
  for (Eigen::Index i = 0; i < flat.size(); ++i) flat[i] = rng.uniform(-1.0, 1.0);
  m.params.assign(flat);
  m.output = output;
  m.weight_decay = weight_decay;
  return m;
}

}  // namespace

TEST_CASE("mlp: gradient matches finite differences on a 4-3-2 toy") {
  Rng rng(8);
  for (MlpOutput output : {MlpOutput::Linear, MlpOutput::Sigmoid}) {
    for (int trial = 0; trial < 5; ++trial) {
      const MlpMapper m = random_mapper(rng, 4, 3, 2, output, 0.01);
      const Matrix src = oracle::random_matrix(rng, 4, 6, 0.0, 1.0);
      const Matrix dst = oracle::random_matrix(rng, 2, 6, 0.0, 1.0);
      CHECK(mlp_loss(m, src, dst) == doctest::Approx(oracle::mlp_loss(m, src, dst)).epsilon(1e-12));
      const Vector analytic = mlp_grad(m, src, dst).flatten();
      const auto loss = [&](const Vector& flat) {
        MlpMapper probe = m;
        probe.params.assign(flat);
        return mlp_loss(probe, src, dst);
      };
      const Vector numeric = numerical_gradient(loss, m.params.flatten(), 1e-5);
      CHECK(oracle::max_relative_error(analytic, numeric) < 1e-4);
    }
  }
}

TEST_CASE("mlp_predict: hand cases") {
  MlpMapper m;
  m.params = MlpParams::zeros(1, 1, 1);
  m.params.hidden_weights << 2.0;
  m.params.hidden_bias << -1.0;
  m.params.output_weights << 3.0;
  m.params.output_bias << 0.5;
  m.output = MlpOutput::Linear;
  const Vector x = Vector::Constant(1, 0.75);
  CHECK(std::abs(mlp_predict(m, x)[0] - 2.3673779936055637) < 1e-12);
  m.output = MlpOutput::Sigmoid;
  CHECK(std::abs(mlp_predict(m, x)[0] - 0.91430564722944683) < 1e-12);
  CHECK(mlp_predict(m, x) == mlp_predict(m, x));

  MlpMapper zero;
  zero.params = MlpParams::zeros(3, 2, 2);
  zero.params.output_bias << 0.25, -0.5;
  zero.output = MlpOutput::Linear;
  CHECK(mlp_predict(zero, Vector::Constant(3, 0.3)) == zero.params.output_bias);
  CHECK_THROWS_AS(mlp_predict(zero, Vector::Zero(4)), Error);
}

TEST_CASE("mlp: zero output weights predict a constant") {
  Rng rng(9);
  MlpMapper m = random_mapper(rng, 4, 3, 2, MlpOutput::Sigmoid, 0.0);
  m.params.output_weights.setZero();
  const Vector a = mlp_predict(m, oracle::random_simplex(rng, 4));
  const Vector b = mlp_predict(m, oracle::random_simplex(rng, 4));
  CHECK(a == b);
}

TEST_CASE("mlp: learns the identity map on 50 samples") {
  Rng rng(10);
  Matrix x(5, 50);
  for (Eigen::Index c = 0; c < 50; ++c) x.col(c) = oracle::random_simplex(rng, 5);
  TrainConfig tc;
  tc.epochs = 400;
  tc.batch_size = 10;
  tc.adam.learning_rate = 0.01;
  tc.weight_decay = 0.0;
  tc.init_scale = 0.5;
  for (MlpOutput output : {MlpOutput::Linear, MlpOutput::Sigmoid}) {
    const MlpMapper m = mlp_fit(x, x, 20, tc, Direction::TwitterToYouTube, output);
    CHECK(mlp_loss(m, x, x) < 0.1 * m.initial_loss);
    const MlpMapper again = mlp_fit(x, x, 20, tc, Direction::TwitterToYouTube, output);
    CHECK(again.params.flatten() == m.params.flatten());
  }
}

TEST_CASE("mlp output names") {
  CHECK(parse_mlp_output("linear") == MlpOutput::Linear);
  CHECK(mlp_output_name(MlpOutput::Sigmoid) == "sigmoid");
  CHECK_THROWS_AS(parse_mlp_output("relu"), Error);
}
