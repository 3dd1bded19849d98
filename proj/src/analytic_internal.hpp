// fama: outage analysis for fluid-antenna wireless-powered multiple access
// Copyright (C) 2026 The fama Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "fama/analytic.hpp"
#include "fama/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <vector>

namespace fama::analytic::detail {

// Row-major rows x cols table, t[i*cols + j] = f(i, j).
template <class F> std::vector<double> fill_table(int rows, int cols, F &&f, Exec exec) {
  std::vector<double> t(static_cast<std::size_t>(rows) * cols);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        t[static_cast<std::size_t>(i) * cols + j] = f(i, j);
  } else {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        t[static_cast<std::size_t>(i) * cols + j] = f(i, j);
  }
  return t;
}

// Σ_k weights[k] * values[k]^L for every distinct block size, then the
// product over blocks.
inline double block_product(const std::vector<double> &values, const std::vector<double> &weights,
                            const BlockStructure &blocks) {
  std::map<int, double> by_size;
  for (int l : blocks.sizes) {
    if (by_size.count(l))
      continue;
    double s = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k)
      if (weights[k] != 0.0)
        s += weights[k] * std::pow(values[k], l);
    by_size[l] = s;
  }
  double p = 1.0;
  for (int l : blocks.sizes)
    p *= by_size[l];
  return p;
}

// GLQ weights for a Gamma(k) density: w_i x_i^{k-1} / Γ(k).
inline std::vector<double> gamma_weights(const QuadratureRule &rule, int k) {
  std::vector<double> w(rule.order);
  for (int i = 0; i < rule.order; ++i)
    w[i] = std::exp(rule.log_weights[i] + (k - 1) * std::log(rule.nodes[i]) - std::lgamma(static_cast<double>(k)));
  return w;
}

inline void check_blocks(const BlockStructure &blocks) {
  if (blocks.sizes.empty())
    throw ConfigError("block structure is empty");
  for (int l : blocks.sizes)
    if (l < 1)
      throw ConfigError("block sizes must be >= 1");
}

inline void check_threshold(double g, const char *fn) {
  if (std::isnan(g) || std::isinf(g) || g < 0.0)
    throw DomainError(std::string(fn) + ": threshold must be finite and >= 0");
}

inline double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// ∫_0^∞ e^{-v} f(v) dv for f in [0, 1] stepping down from 1 at a location
// that moves toward 0 as the threshold drops. GLQ has too few nodes below
// its first Laguerre root to resolve such a step, so this integrates
// adaptively in t = ln v over v in [1e-12, 60]; the two ends contribute
// less than 1e-12 and are taken as 1e-12·f(1e-12) and 0.
template <class F> double integrate_exp_step(F &&f) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  constexpr double kLo = 1e-12, kHi = 60.0;
  auto h = [&](double t) {
    const double v = std::exp(t);
    return std::exp(t - v) * f(v);
  };
  return kLo * f(kLo) + GK::integrate(h, std::log(kLo), std::log(kHi), 12, 1e-10);
}

} // namespace fama::analytic::detail
