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

#include "fama/errors.hpp"
#include "fama/specfun.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace fama::specfun {

namespace {

constexpr double kScale = 1e100;
constexpr double kLogScale = 230.25850929940457; // ln(1e100)

// L_{n-1}(x), L_n(x), L_{n+1}(x) up to a common factor kScale^exponent.
struct LaguerreTriple {
  double prev, cur, next;
  int exponent;
};

LaguerreTriple laguerre(int n, double x) {
  double l0 = 1.0, l1 = 1.0 - x;
  int e = 0;
  if (n == 0)
    return {0.0, 1.0, 1.0 - x, 0};
  for (int k = 1; k < n + 1; ++k) {
    const double l2 = ((2.0 * k + 1.0 - x) * l1 - k * l0) / (k + 1.0);
    l0 = l1;
    l1 = l2;
    if (std::fabs(l1) > kScale) {
      l0 /= kScale;
      l1 /= kScale;
      ++e;
    }
  }
  // loop ran to L_{n+1}; recover L_{n-1} from the recurrence
  // (n+1) L_{n+1} = (2n+1-x) L_n - n L_{n-1}
  const double ln = l0, ln1 = l1;
  const double lnm1 = ((2.0 * n + 1.0 - x) * ln - (n + 1.0) * ln1) / n;
  return {lnm1, ln, ln1, e};
}

} // namespace

QuadratureRule gauss_laguerre(int order) {
  if (order < 1 || order > 256)
    throw ConfigError("gauss_laguerre: order must be in [1, 256], got " + std::to_string(order));

  const int n = order;
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 1));
  for (int i = 0; i < n; ++i)
    diag(i) = 2.0 * i + 1.0;
  for (int i = 1; i < n; ++i)
    sub(i - 1) = i;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::EigenvaluesOnly);

  QuadratureRule rule;
  rule.order = n;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.log_weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = eig.eigenvalues()(i);
    for (int it = 0; it < 8; ++it) {
      const LaguerreTriple t = laguerre(n, x);
      // L_n'(x) = n (L_n - L_{n-1}) / x
      const double dl = n * (t.cur - t.prev) / x;
      const double step = t.cur / dl;
      x -= step;
      if (std::fabs(step) < 1e-16 * x)
        break;
    }
    const LaguerreTriple t = laguerre(n, x);
    const double log_next = std::log(std::fabs(t.next)) + t.exponent * kLogScale;
    rule.nodes[i] = x;
    rule.log_weights[i] = std::log(x) - 2.0 * std::log(n + 1.0) - 2.0 * log_next;
    rule.weights[i] = std::exp(rule.log_weights[i]);
  }
  return rule;
}

const QuadratureRule &gauss_laguerre_cached(int order) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end())
    it = cache.emplace(order, std::make_unique<QuadratureRule>(gauss_laguerre(order))).first;
  return *it->second;
}

} // namespace fama::specfun
