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
#include <vector>

#include "oracles.hpp"
#include "xassoc/numerics.hpp"
#include "xassoc/rng.hpp"

using namespace xassoc;

TEST_CASE("sigmoid at zero is one half") {
  const Vector out = sigmoid(Vector::Zero(2));
  CHECK(out[0] == 0.5);
  CHECK(out[1] == 0.5);
}

TEST_CASE("sigmoid(1) matches the closed form") {
  Vector x(1);
  x << 1.0;
  // 1 / (1 + e^-1) to 12 digits.
  CHECK(sigmoid(x)[0] == doctest::Approx(0.731058578630).epsilon(1e-11));
}

TEST_CASE("sigmoid is symmetric and strictly monotone") {
  Rng rng(7);
  Vector x(50);
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = rng.uniform(-8.0, 8.0);
  const Vector pos = sigmoid(x);
  const Vector neg = sigmoid(Vector(-x));
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    CHECK(pos[i] + neg[i] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pos[i] > 0.0);
    CHECK(pos[i] < 1.0);
    CHECK(sigmoid(x[i] + 1e-3) > sigmoid(x[i]));
  }
}

TEST_CASE("adam: zero gradient on a fresh state leaves params alone") {
  std::vector<double> params = {0.3, -1.2, 4.0};
  const std::vector<double> grads(3, 0.0);
  AdamState state(3, AdamConfig{});
  adam_update(params, grads, state);
  CHECK(params == std::vector<double>{0.3, -1.2, 4.0});
  CHECK(state.step() == 1);
}

TEST_CASE("adam: first step of a unit gradient moves by the step size") {
  std::vector<double> params = {0.0};
  const std::vector<double> grads = {1.0};
  AdamState state(1, AdamConfig{});
  adam_update(params, grads, state);
  // m_hat = v_hat = 1, step = alpha / (1 + eps).
  CHECK(std::abs(params[0] - (-0.001 / (1.0 + 1e-8))) < 1e-15);
  CHECK(std::abs(params[0] + 0.001) < 1e-9);
}

TEST_CASE("adam: identical coordinates move identically and deterministically") {
  std::vector<double> a = {0.5, 0.5};
  std::vector<double> b = {0.5, 0.5};
  AdamState sa(2, AdamConfig{});
  AdamState sb(2, AdamConfig{});
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const double g = rng.normal();
    const std::vector<double> grads = {g, g};
    adam_update(a, grads, sa);
    adam_update(b, grads, sb);
    CHECK(a[0] == a[1]);
  }
  CHECK(a == b);
  CHECK(sa.step() == 20);
}

TEST_CASE("adam: length mismatch throws") {
  std::vector<double> params(3, 0.0);
  const std::vector<double> grads(2, 0.0);
  AdamState state(3, AdamConfig{});
  CHECK_THROWS_AS(adam_update(params, grads, state), Error);
  AdamState small(2, AdamConfig{});
  const std::vector<double> grads3(3, 0.0);
  CHECK_THROWS_AS(adam_update(params, grads3, small), Error);
}

TEST_CASE("numerical_gradient: hand calculus cases") {
  Vector theta(1);
  theta << 3.0;
  const auto square = [](const Vector& p) { return p[0] * p[0]; };
  CHECK(std::abs(numerical_gradient(square, theta, 1e-5)[0] - 6.0) < 1e-6);

  const Vector many = Vector::LinSpaced(5, -1.0, 2.0);
  const auto constant = [](const Vector&) { return 4.25; };
  CHECK(numerical_gradient(constant, many, 1e-5).cwiseAbs().maxCoeff() == 0.0);

  const auto linear = [](const Vector& p) { return p.sum(); };
  const Vector ones = numerical_gradient(linear, many, 1e-5);
  for (Eigen::Index i = 0; i < ones.size(); ++i) CHECK(std::abs(ones[i] - 1.0) < 1e-8);
}

TEST_CASE("numerical_gradient: quadratics agree with the analytic gradient") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = oracle::random_matrix(rng, 4, 4, -1.0, 1.0);
    const Vector b = oracle::random_matrix(rng, 4, 1, -1.0, 1.0).col(0);
    const Vector x = oracle::random_matrix(rng, 4, 1, -2.0, 2.0).col(0);
    const auto f = [&](const Vector& p) { return p.dot(a * p) + b.dot(p); };
    const Vector analytic = (a + a.transpose()) * x + b;
    CHECK(oracle::max_relative_error(numerical_gradient(f, x, 1e-5), analytic) < 1e-8);
  }
}

TEST_CASE("numerical_gradient: bad eps or non-finite loss throws") {
  const Vector x = Vector::Ones(2);
  const auto f = [](const Vector& p) { return p.sum(); };
  CHECK_THROWS_AS(numerical_gradient(f, x, 0.0), Error);
  const auto nan = [](const Vector&) { return std::nan(""); };
  CHECK_THROWS_AS(numerical_gradient(nan, x, 1e-5), Error);
}

TEST_CASE("gather_rows keeps the requested order") {
  Matrix m(3, 2);
  m << 1, 2, 3, 4, 5, 6;
  const std::vector<std::size_t> rows = {2, 0};
  const Matrix g = gather_rows(m, rows);
  CHECK(g.rows() == 2);
  CHECK(g(0, 0) == 5);
  CHECK(g(1, 1) == 2);
}
