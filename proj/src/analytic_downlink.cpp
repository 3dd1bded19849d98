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

#include "analytic_internal.hpp"

#include <limits>

namespace fama::analytic {

using namespace detail;

namespace {

void check_downlink(const SystemConfig &cfg, const BlockStructure &blocks, double gamma, const char *fn) {
  if (cfg.num_users < 2)
    throw ModelError(std::string(fn) + ": SIR needs at least one interferer (M >= 2)");
  if (!(cfg.mu2 > 0.0 && cfg.mu2 < 1.0))
    throw ConfigError(std::string(fn) + ": mu2 must lie in (0, 1)");
  check_blocks(blocks);
  check_threshold(gamma, fn);
}

} // namespace

double g_function(double gamma, double R, double R_tilde, int M, double mu2) {
  if (M < 2)
    throw ModelError("g_function: requires M >= 2");
  if (!(R > 0.0) || !(R_tilde > 0.0) || !(gamma > 0.0) || !(mu2 > 0.0 && mu2 < 1.0))
    throw DomainError("g_function: requires R, R_tilde, gamma > 0 and mu2 in (0, 1)");
  const double c2 = mu2 / (1.0 - mu2);
  const double a = std::sqrt(c2 * gamma * R_tilde / (gamma + 1.0));
  const double b = std::sqrt(c2 * R / (gamma + 1.0));
  const double q = specfun::marcum_q(M - 1, a, b);

  const double ab = a * b;
  const double log_ratio = std::log(R) - std::log(R_tilde);
  const double log_g1 = std::log1p(gamma);
  const double log_g = std::log(gamma);
  const double shift = -0.5 * (a - b) * (a - b) - (M - 1) * log_g1;

  std::vector<double> logs;
  for (int l = 0; l <= M - 2; ++l) {
    for (int j = 0; j <= M - l - 2; ++j) {
      const int nu = j + l;
      const double x0 = M - nu - 1;
      // rising factorial (x0)_j
      const double log_poch = std::lgamma(x0 + j) - std::lgamma(x0);
      // e^{-(a²+b²)/2} I_ν(ab) = e^{-(a-b)²/2} · e^{-ab} I_ν(ab)
      const double log_i = specfun::log_bessel_i(nu, ab) - ab;
      logs.push_back(log_poch - std::lgamma(j + 1.0) + 0.5 * nu * log_ratio + l * log_g1 + 0.5 * (j - l) * log_g +
                     log_i + shift);
    }
  }
  const double peak = *std::max_element(logs.begin(), logs.end());
  double s = 0.0;
  for (double lt : logs)
    s += std::exp(lt - peak);
  return q - std::exp(peak) * s;
}

OutageEstimate dsps_downlink_glq(const SystemConfig &cfg, const BlockStructure &blocks, double gamma,
                                 const QuadratureRule &rule, Exec exec) {
  check_downlink(cfg, blocks, gamma, "dsps_downlink_glq");
  if (gamma == 0.0)
    return OutageEstimate::analytic(0.0, Method::Glq);
  const int M = cfg.num_users;
  const int n = rule.order;
  const std::vector<double> w_tilde = gamma_weights(rule, M - 1);

  // rows: r (desired), cols: r̃ (interference)
  const std::vector<double> g = fill_table(
      n, n,
      [&](int i, int j) { return clamp01(g_function(gamma, 2.0 * rule.nodes[i], 2.0 * rule.nodes[j], M, cfg.mu2)); },
      exec);
  std::vector<double> w(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      w[static_cast<std::size_t>(i) * n + j] = rule.weights[i] * w_tilde[j];
  return OutageEstimate::analytic(block_product(g, w, blocks), Method::Glq);
}

OutageEstimate dsps_downlink_sfa(const SystemConfig &cfg, const BlockStructure &blocks, double gamma,
                                 const QuadratureRule &rule, Exec exec) {
  check_downlink(cfg, blocks, gamma, "dsps_downlink_sfa");
  if (gamma == 0.0)
    return OutageEstimate::analytic(0.0, Method::Sfa);
  const int M = cfg.num_users;
  const int n = rule.order;
  const double c2 = cfg.mu2 / (1.0 - cfg.mu2);
  const std::vector<double> w_tilde = gamma_weights(rule, M - 1);

  std::vector<double> delta(n);
  for (int i = 0; i < n; ++i)
    delta[i] = delta_dsps(rule.nodes[i], gamma, cfg.mu2).value;
  const std::vector<double> q = fill_table(
      n, n, [&](int i, int j) { return specfun::marcum_q(M - 1, std::sqrt(2.0 * c2 * rule.nodes[j]), delta[i]); },
      exec);
  std::vector<double> w(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      w[static_cast<std::size_t>(i) * n + j] = rule.weights[i] * w_tilde[j];
  return OutageEstimate::analytic(block_product(q, w, blocks), Method::Sfa);
}

OutageEstimate dsps_downlink_sfa2(const SystemConfig &cfg, const BlockStructure &blocks, double gamma,
                                  const QuadratureRule &rule) {
  check_downlink(cfg, blocks, gamma, "dsps_downlink_sfa2");
  if (gamma == 0.0)
    return OutageEstimate::analytic(0.0, Method::Sfa2);
  const int M = cfg.num_users;
  std::map<int, double> by_size;
  for (int l : blocks.sizes) {
    if (by_size.count(l))
      continue;
    double s = 0.0;
    for (int i = 0; i < rule.order; ++i) {
      if (rule.weights[i] == 0.0)
        continue;
      const double t = delta_dsps_tilde(rule.nodes[i], l, M, gamma, cfg.mu2).value;
      s += rule.weights[i] * specfun::gamma_q(M - 1, t);
    }
    by_size[l] = s;
  }
  double p = 1.0;
  for (int l : blocks.sizes)
    p *= by_size[l];
  return OutageEstimate::analytic(p, Method::Sfa2);
}

OutageEstimate deps_downlink_closed(int M, double gamma) {
  if (M < 1)
    throw DomainError("deps_downlink_closed: M must be >= 1");
  check_threshold(gamma, "deps_downlink_closed");
  return OutageEstimate::analytic(-std::expm1(-(M - 1) * std::log1p(gamma)), Method::Closed);
}

OutageEstimate ucps_downlink_closed(int M, double gamma) { return deps_downlink_closed(M, gamma); }
OutageEstimate usps_downlink_closed(int M, double gamma) { return deps_downlink_closed(M, gamma); }

} // namespace fama::analytic
