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

// Generalized Marcum Q via the Poisson mixture of gamma tails:
//
//   Q_p(a,b)     = Σ_k w_k Q(p+k, x),   w_k = e^{-λ} λ^k / k!,
//   1 - Q_p(a,b) = Σ_k w_k P(p+k, x),   λ = a²/2, x = b²/2.
//
// Each sum is anchored by one direct incomplete-gamma evaluation at the far
// end and walked with Q(s+1,x) = Q(s,x) + e^{-x} x^s / s!, so every update
// adds a positive quantity. Truncation uses the Poisson tail bounds.

#include "fama/errors.hpp"
#include "fama/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <limits>

namespace fama::specfun {

namespace {

constexpr double kRelTol = 1e-17;
constexpr double kWeightCut = 1e-20;

struct Mixture {
  long mode;
  double w_mode;
};

Mixture poisson_mode(double lambda) {
  const long m = static_cast<long>(std::floor(lambda));
  return {m, poisson_pmf(static_cast<double>(m), lambda)};
}

// Σ_k w_k Q(p+k, x), ascending from the lowest non-negligible weight.
double upper_sum(int p, double lambda, double x) {
  const Mixture mix = poisson_mode(lambda);
  long k = mix.mode;
  double w = mix.w_mode;
  while (k > 0 && w > kWeightCut * mix.w_mode) {
    w *= k / lambda;
    --k;
  }
  w = poisson_pmf(static_cast<double>(k), lambda);

  double s = p + k;
  double q = gamma_q(s, x);
  double log_d = log_poisson_pmf(s, x);
  const double log_x = std::log(x);
  double sum = 0.0;
  for (long iter = 0; iter < 50000000; ++iter, ++k) {
    sum += w * q;
    // tail Σ_{j>k} w_j bounded by a geometric series once past the mode
    const double w_next = w * lambda / (k + 1);
    if (k + 2 > lambda) {
      const double tail = w_next / (1.0 - lambda / (k + 2));
      if (tail <= kRelTol * sum || w_next == 0.0)
        break;
    }
    q = std::min(1.0, q + std::exp(log_d));
    s += 1.0;
    log_d = (iter % 32 == 31) ? log_poisson_pmf(s, x) : log_d + log_x - std::log(s);
    w = w_next;
  }
  return sum;
}

// Σ_k w_k P(p+k, x), descending from the highest non-negligible weight.
double lower_sum(int p, double lambda, double x) {
  const Mixture mix = poisson_mode(lambda);
  long k = mix.mode;
  double w = mix.w_mode;
  while (w > kWeightCut * mix.w_mode) {
    ++k;
    w *= lambda / k;
  }
  // t_{k+1}/t_k <= λx / ((k+1)(p+k+1)); past its peak the terms fall off
  // well before the Poisson window ends when x << λ
  const double k_peak = 0.5 * (-p + std::sqrt(static_cast<double>(p) * p + 4.0 * lambda * x));
  long kb = static_cast<long>(std::ceil(k_peak));
  double log_ratio = 0.0;
  while (kb < k && log_ratio > std::log(kWeightCut * kRelTol)) {
    log_ratio += std::log(lambda * x / ((kb + 1.0) * (p + kb + 1.0)));
    ++kb;
  }
  k = std::min(k, kb);
  w = poisson_pmf(static_cast<double>(k), lambda);

  double s = p + k;
  double pp = gamma_p(s, x);
  const double log_x = std::log(x);
  // d holds e^{-x} x^{s-1} / (s-1)!, the step from P(s) to P(s-1)
  double log_d = log_poisson_pmf(s - 1.0, x);
  double sum = 0.0;
  for (long iter = 0;; ++iter) {
    sum += w * pp;
    if (k == 0)
      break;
    const double w_prev = w * k / lambda;
    if (k - 1 < lambda) {
      const double tail = w_prev / (1.0 - (k - 1) / lambda);
      if (tail <= kRelTol * sum || w_prev == 0.0)
        break;
    }
    pp = std::min(1.0, pp + std::exp(log_d));
    s -= 1.0;
    --k;
    log_d = (iter % 32 == 31) ? log_poisson_pmf(s - 1.0, x) : log_d + std::log(s) - log_x;
    w = w_prev;
  }
  return sum;
}

void check_args(int p, double a, double b, const char *fn) {
  if (p < 1)
    throw DomainError(std::string(fn) + ": order must be >= 1");
  if (std::isnan(a) || std::isnan(b) || a < 0.0 || b < 0.0)
    throw DomainError(std::string(fn) + ": requires a, b >= 0");
}

// Returns {Q, 1-Q}, each accurate where it is the smaller one.
struct Pair {
  double q, c;
};

Pair evaluate(int p, double a, double b) {
  if (b == 0.0 || std::isinf(a))
    return {1.0, 0.0};
  if (std::isinf(b))
    return {0.0, 1.0};
  const double x = 0.5 * b * b;
  if (a == 0.0)
    return {gamma_q(p, x), gamma_p(p, x)};
  const double lambda = 0.5 * a * a;
  // Chernoff bound at 1-2t = a/b: ln Q <= -(b-a)²/2 + p ln(b/a). Below the
  // smallest normal double the walk would cross the whole Poisson window
  // (tens of thousands of steps at a ~ 300) for a result that rounds to 0.
  if (b > a && -0.5 * (b - a) * (b - a) + p * std::log(b / a) < -708.0)
    return {0.0, 1.0};
  if (b * b >= a * a + 2.0 * p) {
    const double q = std::clamp(upper_sum(p, lambda, x), 0.0, 1.0);
    return {q, 1.0 - q};
  }
  const double c = std::clamp(lower_sum(p, lambda, x), 0.0, 1.0);
  return {1.0 - c, c};
}

} // namespace

double marcum_q(int p, double a, double b) {
  check_args(p, a, b, "marcum_q");
  return evaluate(p, a, b).q;
}

double marcum_q_complement(int p, double a, double b) {
  check_args(p, a, b, "marcum_q_complement");
  return evaluate(p, a, b).c;
}

} // namespace fama::specfun
