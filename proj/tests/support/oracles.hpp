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

// Independent reference implementations for tests. Everything here is plain
// loops over scalars; nothing calls the library's numerical routines.

#ifndef XASSOC_TESTS_ORACLES_HPP_
#define XASSOC_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "xassoc/autoencoder.hpp"
#include "xassoc/mlp.hpp"
#include "xassoc/numerics.hpp"
#include "xassoc/repr.hpp"
#include "xassoc/rng.hpp"

namespace oracle {

using xassoc::Matrix;
using xassoc::Vector;

inline double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

enum class Block { Twitter, Common, YouTube };

inline Block block_of(const xassoc::AutoencoderLayout& l, std::size_t j) {
  if (j < l.hidden_twitter) return Block::Twitter;
  if (j < l.hidden_twitter + l.hidden_common) return Block::Common;
  return Block::YouTube;
}

struct Forward {
  std::vector<double> h, xt, xy;
};

// Forward pass that decides connectivity from the hidden-unit block rather
// than from the stored masks.
inline Forward ae_forward(const xassoc::MaskedAutoencoderModel& m, const Vector& x_t,
                          const Vector& x_y) {
  const auto& l = m.layout;
  const auto& p = m.params;
  Forward f;
  f.h.assign(l.hidden(), 0.0);
  for (std::size_t j = 0; j < l.hidden(); ++j) {
    const Block b = block_of(l, j);
    double a = p.hidden_bias[j];
    if (b != Block::YouTube) {
      for (std::size_t i = 0; i < l.input_twitter; ++i) a += p.encoder_twitter(j, i) * x_t[i];
    }
    if (b != Block::Twitter) {
      for (std::size_t i = 0; i < l.input_youtube; ++i) a += p.encoder_youtube(j, i) * x_y[i];
    }
    f.h[j] = logistic(a);
  }
  f.xt.assign(l.input_twitter, 0.0);
  for (std::size_t i = 0; i < l.input_twitter; ++i) {
    double a = p.output_bias_twitter[i];
    for (std::size_t j = 0; j < l.hidden(); ++j) {
      if (block_of(l, j) != Block::YouTube) a += p.decoder_twitter(i, j) * f.h[j];
    }
    f.xt[i] = logistic(a);
  }
  f.xy.assign(l.input_youtube, 0.0);
  for (std::size_t i = 0; i < l.input_youtube; ++i) {
    double a = p.output_bias_youtube[i];
    for (std::size_t j = 0; j < l.hidden(); ++j) {
      if (block_of(l, j) != Block::Twitter) a += p.decoder_youtube(i, j) * f.h[j];
    }
    f.xy[i] = logistic(a);
  }
  return f;
}

inline double sum_squares(const Matrix& w) {
  double s = 0.0;
  for (Eigen::Index r = 0; r < w.rows(); ++r) {
    for (Eigen::Index c = 0; c < w.cols(); ++c) s += w(r, c) * w(r, c);
  }
  return s;
}

inline double ae_loss(const xassoc::MaskedAutoencoderModel& m,
                      std::span<const xassoc::AugmentedExample> batch) {
  double loss = 0.0;
  for (const auto& ex : batch) {
    const Forward f = oracle::ae_forward(m, ex.input_twitter, ex.input_youtube);
    for (std::size_t i = 0; i < f.xt.size(); ++i) {
      const double r = f.xt[i] - ex.target_twitter[i];
      loss += r * r;
    }
    for (std::size_t i = 0; i < f.xy.size(); ++i) {
      const double r = f.xy[i] - ex.target_youtube[i];
      loss += r * r;
    }
    for (double h : f.h) loss += m.sparsity * std::abs(h);
  }
  const auto& p = m.params;
  loss += m.weight_decay * (sum_squares(p.encoder_twitter) + sum_squares(p.encoder_youtube) +
                            sum_squares(p.decoder_twitter) + sum_squares(p.decoder_youtube));
  return loss;
}

inline std::vector<double> mlp_forward(const xassoc::MlpMapper& m, const Vector& x) {
  const auto& p = m.params;
  std::vector<double> h(m.hidden());
  for (std::size_t j = 0; j < h.size(); ++j) {
    double a = p.hidden_bias[j];
    for (std::size_t i = 0; i < m.src_dim(); ++i) a += p.hidden_weights(j, i) * x[i];
    h[j] = logistic(a);
  }
  std::vector<double> y(m.dst_dim());
  for (std::size_t k = 0; k < y.size(); ++k) {
    double a = p.output_bias[k];
    for (std::size_t j = 0; j < h.size(); ++j) a += p.output_weights(k, j) * h[j];
    y[k] = m.output == xassoc::MlpOutput::Sigmoid ? logistic(a) : a;
  }
  return y;
}

// Columns are users.
inline double mlp_loss(const xassoc::MlpMapper& m, const Matrix& src, const Matrix& dst) {
  double loss = 0.0;
  for (Eigen::Index u = 0; u < src.cols(); ++u) {
    const auto y = mlp_forward(m, Vector(src.col(u)));
    for (std::size_t k = 0; k < y.size(); ++k) {
      const double r = y[k] - dst(static_cast<Eigen::Index>(k), u);
      loss += r * r;
    }
  }
  return loss + m.weight_decay * (sum_squares(m.params.hidden_weights) +
                                  sum_squares(m.params.output_weights));
}

// Largest eigenvalue of a symmetric positive semidefinite matrix.
inline double power_iteration(const std::vector<std::vector<double>>& a) {
  const std::size_t n = a.size();
  std::vector<double> v(n, 1.0), w(n);
  double lambda = 0.0;
  for (int it = 0; it < 500; ++it) {
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = 0.0;
      for (std::size_t j = 0; j < n; ++j) w[i] += a[i][j] * v[j];
      norm += w[i] * w[i];
    }
    norm = std::sqrt(norm);
    lambda = norm;
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
  }
  return lambda;
}

// Minimizes ||W S - D||_F^2 + lambda ||W||_F^2 by gradient descent.
inline Matrix ridge_gradient_descent(const Matrix& src, const Matrix& dst, double lambda,
                                     std::size_t max_iters = 500000, double tol = 1e-13) {
  const std::size_t ns = static_cast<std::size_t>(src.rows());
  const std::size_t nd = static_cast<std::size_t>(dst.rows());
  const std::size_t users = static_cast<std::size_t>(src.cols());
  std::vector<std::vector<double>> gram(ns, std::vector<double>(ns, 0.0));
  std::vector<std::vector<double>> cross(nd, std::vector<double>(ns, 0.0));
  for (std::size_t u = 0; u < users; ++u) {
    for (std::size_t i = 0; i < ns; ++i) {
      for (std::size_t j = 0; j < ns; ++j) gram[i][j] += src(i, u) * src(j, u);
      for (std::size_t k = 0; k < nd; ++k) cross[k][i] += dst(k, u) * src(i, u);
    }
  }
  const double step = 1.0 / (2.0 * (power_iteration(gram) + lambda));
  std::vector<std::vector<double>> w(nd, std::vector<double>(ns, 0.0));
  std::vector<std::vector<double>> g(nd, std::vector<double>(ns, 0.0));
  for (std::size_t it = 0; it < max_iters; ++it) {
    double gmax = 0.0;
    for (std::size_t k = 0; k < nd; ++k) {
      for (std::size_t i = 0; i < ns; ++i) {
        double s = -cross[k][i] + lambda * w[k][i];
        for (std::size_t j = 0; j < ns; ++j) s += w[k][j] * gram[j][i];
        g[k][i] = 2.0 * s;
        gmax = std::max(gmax, std::abs(g[k][i]));
      }
    }
    if (gmax < tol) break;
    for (std::size_t k = 0; k < nd; ++k) {
      for (std::size_t i = 0; i < ns; ++i) w[k][i] -= step * g[k][i];
    }
  }
  Matrix out(nd, ns);
  for (std::size_t k = 0; k < nd; ++k) {
    for (std::size_t i = 0; i < ns; ++i) out(k, i) = w[k][i];
  }
  return out;
}

// Iterative shrinkage for argmin_s ||u - D s||^2 + lambda ||s||_1.
inline std::vector<double> lasso_ista(const Matrix& dict, const Vector& u, double lambda,
                                      std::size_t iters = 200000) {
  const std::size_t n = static_cast<std::size_t>(dict.rows());
  const std::size_t m = static_cast<std::size_t>(dict.cols());
  std::vector<std::vector<double>> gram(m, std::vector<double>(m, 0.0));
  std::vector<double> dtu(m, 0.0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t r = 0; r < n; ++r) dtu[a] += dict(r, a) * u[r];
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t r = 0; r < n; ++r) gram[a][b] += dict(r, a) * dict(r, b);
    }
  }
  const double lip = 2.0 * power_iteration(gram);
  std::vector<double> s(m, 0.0), next(m);
  for (std::size_t it = 0; it < iters; ++it) {
    for (std::size_t a = 0; a < m; ++a) {
      double grad = -2.0 * dtu[a];
      for (std::size_t b = 0; b < m; ++b) grad += 2.0 * gram[a][b] * s[b];
      const double z = s[a] - grad / lip;
      const double t = lambda / lip;
      next[a] = z > t ? z - t : (z < -t ? z + t : 0.0);
    }
    s.swap(next);
  }
  return s;
}

inline double lasso_objective(const Matrix& dict, const Vector& u, const std::vector<double>& s,
                              double lambda) {
  double obj = 0.0;
  for (Eigen::Index r = 0; r < dict.rows(); ++r) {
    double fit = u[r];
    for (std::size_t a = 0; a < s.size(); ++a) fit -= dict(r, static_cast<Eigen::Index>(a)) * s[a];
    obj += fit * fit;
  }
  for (double v : s) obj += lambda * std::abs(v);
  return obj;
}

// Joint sparse-coding objective with columns as users.
inline double la_objective(const Matrix& ut, const Matrix& uy, const Matrix& dt, const Matrix& dy,
                           const Matrix& codes, double lambda) {
  double obj = 0.0;
  for (Eigen::Index u = 0; u < codes.cols(); ++u) {
    for (Eigen::Index r = 0; r < ut.rows(); ++r) {
      double fit = ut(r, u);
      for (Eigen::Index a = 0; a < codes.rows(); ++a) fit -= dt(r, a) * codes(a, u);
      obj += fit * fit;
    }
    for (Eigen::Index r = 0; r < uy.rows(); ++r) {
      double fit = uy(r, u);
      for (Eigen::Index a = 0; a < codes.rows(); ++a) fit -= dy(r, a) * codes(a, u);
      obj += fit * fit;
    }
    for (Eigen::Index a = 0; a < codes.rows(); ++a) obj += lambda * std::abs(codes(a, u));
  }
  return obj;
}

struct Survivors {
  std::set<std::string> users;
  std::set<std::string> videos;
};

// Removes one under-threshold user or video at a time until none remain.
inline Survivors filter_fixed_point(const xassoc::Dataset& d, std::size_t min_user,
                                    std::size_t min_video) {
  Survivors s;
  for (const auto& u : d.users) s.users.insert(u.id);
  for (const auto& v : d.videos) s.videos.insert(v.id);
  for (;;) {
    bool removed = false;
    for (const auto& uid : s.users) {
      std::size_t n = 0;
      for (const auto& vid : d.videos_of(uid)) n += s.videos.count(vid);
      if (n < min_user) {
        s.users.erase(uid);
        removed = true;
        break;
      }
    }
    if (removed) continue;
    for (const auto& vid : s.videos) {
      std::size_t n = 0;
      for (const auto& uid : s.users) {
        const auto& vids = d.videos_of(uid);
        n += static_cast<std::size_t>(std::count(vids.begin(), vids.end(), vid));
      }
      if (n < min_video) {
        s.videos.erase(vid);
        removed = true;
        break;
      }
    }
    if (!removed) return s;
  }
}

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

inline double mae(const std::vector<Vector>& preds, const std::vector<Vector>& truths) {
  double total = 0.0;
  for (std::size_t u = 0; u < preds.size(); ++u) {
    double s = 0.0;
    for (Eigen::Index k = 0; k < preds[u].size(); ++k) s += std::abs(preds[u][k] - truths[u][k]);
    total += s / static_cast<double>(preds[u].size());
  }
  return total / static_cast<double>(preds.size());
}

inline double rmse(const std::vector<Vector>& preds, const std::vector<Vector>& truths) {
  double total = 0.0;
  for (std::size_t u = 0; u < preds.size(); ++u) {
    double s = 0.0;
    for (Eigen::Index k = 0; k < preds[u].size(); ++k) {
      const double r = preds[u][k] - truths[u][k];
      s += r * r;
    }
    total += std::sqrt(s / static_cast<double>(preds[u].size()));
  }
  return total / static_cast<double>(preds.size());
}

// Worst entrywise relative error, with a floor on the denominator so that
// near-zero gradients are compared absolutely.
inline double max_relative_error(const Vector& a, const Vector& b, double floor = 1e-6) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double denom = std::max({std::abs(a[i]), std::abs(b[i]), floor});
    worst = std::max(worst, std::abs(a[i] - b[i]) / denom);
  }
  return worst;
}

inline Vector random_simplex(xassoc::Rng& rng, std::size_t dim) {
  Vector v(dim);
  double sum = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = -std::log(1.0 - rng.uniform());
    sum += v[i];
  }
  return v / sum;
}

inline Matrix random_matrix(xassoc::Rng& rng, std::size_t rows, std::size_t cols, double lo,
                            double hi) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.uniform(lo, hi);
  }
  return m;
}

}  // namespace oracle

#endif  // XASSOC_TESTS_ORACLES_HPP_
