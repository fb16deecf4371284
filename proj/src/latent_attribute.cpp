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

#include "xassoc/latent_attribute.hpp"

#include <cmath>
#include <sstream>

#include "xassoc/rng.hpp"

namespace xassoc {

namespace {

using Index = Eigen::Index;
constexpr double kSlack = 1e-10;

double soft_threshold(double x, double t) {
  if (x > t) return x - t;
  if (x < -t) return x + t;
  return 0.0;
}

// Coordinate descent on s^T G s - 2 b^T s + lambda |s|_1, keeping gs = G s
// current. Returns the largest coordinate change of the final sweep.
double cd_sweeps(const Eigen::MatrixXd& gram, const Vector& b, double lambda, Vector& s, Vector& gs,
                 std::size_t sweeps, double tol) {
  const Index m = s.size();
  double largest = 0.0;
  for (std::size_t sweep = 0; sweep < sweeps; ++sweep) {
    largest = 0.0;
    for (Index k = 0; k < m; ++k) {
      const double gkk = gram(k, k);
      const double old = s[k];
      double next = 0.0;
      if (gkk > 0.0) {
        const double rho = b[k] - (gs[k] - gkk * old);
        next = soft_threshold(rho, 0.5 * lambda) / gkk;
      }
      const double delta = next - old;
      if (delta != 0.0) {
        s[k] = next;
        gs += delta * gram.col(k);
        largest = std::max(largest, std::abs(delta));
      }
    }
    if (largest <= tol) break;
  }
  return largest;
}

void project_columns(Matrix& d) {
  for (Index j = 0; j < d.cols(); ++j) {
    const double norm = d.col(j).norm();
    if (norm > 1.0) d.col(j) /= norm;
  }
}

// Projected gradient on ||U - D S||_F^2 with step 1/L, L = 2 lambda_max(S S^T).
void dictionary_step(const Matrix& u, const Matrix& codes, Matrix& dict, std::size_t steps) {
  const Eigen::MatrixXd sst = codes * codes.transpose();
  const double top = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(sst, Eigen::EigenvaluesOnly)
                         .eigenvalues()
                         .maxCoeff();
  if (!(top > 0.0)) return;
  const double step = 1.0 / (2.0 * top);
  const Matrix ust = u * codes.transpose();
  double current = (u - dict * codes).squaredNorm();
  for (std::size_t i = 0; i < steps; ++i) {
    Matrix next = dict - step * 2.0 * (dict * sst - ust);
    project_columns(next);
    const double value = (u - next * codes).squaredNorm();
    if (!(value <= current)) break;
    const bool stalled = current - value <= 1e-15 * std::max(1.0, current);
    dict = std::move(next);
    current = value;
    if (stalled) break;
  }
}

Matrix random_dictionary(std::size_t rows, std::size_t atoms, Rng& rng) {
  Matrix d(rows, atoms);
  for (Index i = 0; i < d.rows(); ++i)
    for (Index j = 0; j < d.cols(); ++j) d(i, j) = rng.normal();
  for (Index j = 0; j < d.cols(); ++j) d.col(j).normalize();
  return d;
}

}  // namespace

double la_objective(const Matrix& u_twitter, const Matrix& u_youtube, const Matrix& dict_twitter,
                    const Matrix& dict_youtube, const Matrix& codes, double lambda) {
  return (u_twitter - dict_twitter * codes).squaredNorm() +
         (u_youtube - dict_youtube * codes).squaredNorm() + lambda * codes.cwiseAbs().sum();
}

Vector lasso_code(const Matrix& dict, const Vector& u, double lambda, Vector start,
                  std::size_t max_sweeps, double tol) {
  if (u.size() != dict.rows()) throw Error("lasso_code: input dimension does not match dictionary");
  Vector s = start.size() == 0 ? Vector::Zero(dict.cols()) : std::move(start);
  if (s.size() != dict.cols()) throw Error("lasso_code: start has the wrong size");
  const Eigen::MatrixXd gram = dict.transpose() * dict;
  const Vector b = dict.transpose() * u;
  Vector gs = gram * s;
  cd_sweeps(gram, b, lambda, s, gs, max_sweeps, tol);
  return s;
}

LatentAttribute la_fit(const Matrix& u_twitter, const Matrix& u_youtube, const LaConfig& cfg) {
  if (u_twitter.cols() != u_youtube.cols()) throw Error("la_fit: user counts differ");
  if (cfg.atoms < 1) throw Error("la_fit: need at least one latent attribute");
  if (!(cfg.lambda >= 0.0)) throw Error("la_fit: lambda must be >= 0");
  const Index users = u_twitter.cols();

  Rng rng(derive_seed(cfg.seed, "la-init"));
  LatentAttribute model;
  model.lambda = cfg.lambda;
  model.dict_twitter = random_dictionary(static_cast<std::size_t>(u_twitter.rows()), cfg.atoms, rng);
  model.dict_youtube = random_dictionary(static_cast<std::size_t>(u_youtube.rows()), cfg.atoms, rng);
  Matrix codes = Matrix::Zero(static_cast<Index>(cfg.atoms), users);

  auto objective = [&] {
    return la_objective(u_twitter, u_youtube, model.dict_twitter, model.dict_youtube, codes,
                        cfg.lambda);
  };
  auto record = [&](const char* stage, std::size_t iter) {
    const double value = objective();
    if (!std::isfinite(value) ||
        (!model.objective_trace.empty() && value > model.objective_trace.back() + kSlack)) {
      std::ostringstream msg;
      msg << "la_fit: objective increased during " << stage << " step " << iter << ":";
      for (double v : model.objective_trace) msg << ' ' << v;
      msg << ' ' << value;
      throw Error(msg.str());
    }
    model.objective_trace.push_back(value);
  };
  record("init", 0);

  for (std::size_t iter = 0; iter < cfg.iterations; ++iter) {
    // Codes: the stacked dictionary turns the joint objective into one lasso per user.
    Matrix stacked(model.dict_twitter.rows() + model.dict_youtube.rows(), cfg.atoms);
    stacked << model.dict_twitter, model.dict_youtube;
    const Eigen::MatrixXd gram = stacked.transpose() * stacked;
    const Matrix b = model.dict_twitter.transpose() * u_twitter +
                     model.dict_youtube.transpose() * u_youtube;
    for (Index j = 0; j < users; ++j) {
      Vector s = codes.col(j);
      Vector gs = gram * s;
      cd_sweeps(gram, b.col(j), cfg.lambda, s, gs, cfg.code_sweeps, 1e-12);
      codes.col(j) = s;
    }
    record("code", iter);

    dictionary_step(u_twitter, codes, model.dict_twitter, cfg.dict_steps);
    dictionary_step(u_youtube, codes, model.dict_youtube, cfg.dict_steps);
    record("dictionary", iter);
  }
  return model;
}

Vector la_predict(const LatentAttribute& model, const Vector& u_src, Platform src) {
  const Vector s = lasso_code(model.dict(src), u_src, model.lambda);
  return model.dict(other(src)) * s;
}

}  // namespace xassoc
