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

namespace fama::analytic {

using namespace detail;

namespace {

void check_uplink(const UplinkParams &u, const char *fn) {
  if (u.M < 1)
    throw ConfigError(std::string(fn) + ": M must be >= 1");
  if (!(u.mu2 > 0.0 && u.mu2 < 1.0))
    throw ConfigError(std::string(fn) + ": mu2 must lie in (0, 1)");
  check_threshold(u.gamma_tilde, fn);
}

void check_uplink(const UplinkParams &u, const BlockStructure &blocks, const char *fn) {
  check_uplink(u, fn);
  check_blocks(blocks);
}

// Marcum second argument sqrt(γ̃/(2x)) after x -> v = (1-μ²) x.
double marcum_b(const UplinkParams &u, double v) { return std::sqrt(u.gamma_tilde * (1.0 - u.mu2) / (2.0 * v)); }

// Σ_k w_k Π_b Σ_i W_i table[k][i]^{L_b}
double outer_inner(const std::vector<double> &table, const std::vector<double> &w_outer,
                   const std::vector<double> &w_inner, const BlockStructure &blocks) {
  const std::size_t n_out = w_outer.size(), n_in = w_inner.size();
  std::map<int, int> distinct;
  for (int l : blocks.sizes)
    ++distinct[l];
  double p = 0.0;
  for (std::size_t k = 0; k < n_out; ++k) {
    if (w_outer[k] == 0.0)
      continue;
    double f = 1.0;
    for (auto [l, mult] : distinct) {
      double s = 0.0;
      for (std::size_t i = 0; i < n_in; ++i)
        if (w_inner[i] != 0.0)
          s += w_inner[i] * std::pow(table[k * n_in + i], l);
      f *= std::pow(s, mult);
    }
    p += w_outer[k] * f;
  }
  return p;
}

} // namespace

UplinkParams UplinkParams::from(const SystemConfig &cfg, double gamma_ul) {
  cfg.validate();
  check_threshold(gamma_ul, "UplinkParams::from");
  return {cfg.num_users, cfg.mu2, derive_params(cfg, gamma_ul).gamma_tilde};
}

OutageEstimate dsps_uplink_closed(const UplinkParams &u) {
  check_uplink(u, "dsps_uplink_closed");
  const double z = 2.0 * std::sqrt(u.gamma_hat());
  if (z == 0.0)
    return OutageEstimate::analytic(0.0, Method::Closed);
  const int M = u.M;
  const double log_t = M * std::log(z) + specfun::log_bessel_k(M, z) - (M - 1) * std::log(2.0) - std::lgamma(M);
  return OutageEstimate::analytic(-std::expm1(log_t), Method::Closed);
}

OutageEstimate dsps_uplink_closed(const SystemConfig &cfg, double gamma_ul) {
  return dsps_uplink_closed(UplinkParams::from(cfg, gamma_ul));
}

OutageEstimate deps_uplink_glq(const UplinkParams &u, const BlockStructure &blocks, const QuadratureRule &rule,
                               Exec exec) {
  check_uplink(u, blocks, "deps_uplink_glq");
  if (u.gamma_tilde == 0.0)
    return OutageEstimate::analytic(0.0, Method::Glq);
  const int n = rule.order;
  const double c2 = u.mu2 / (1.0 - u.mu2);
  const std::vector<double> W = gamma_weights(rule, u.M);
  std::map<int, int> distinct;
  for (int l : blocks.sizes)
    ++distinct[l];
  // outer: v = (1-μ²)β with weight e^{-v}; inner: R ~ Gamma(M) by GLQ
  auto f = [&](double v) {
    const double b = marcum_b(u, v);
    const std::vector<double> q = fill_table(
        1, n, [&](int, int i) { return specfun::marcum_q_complement(u.M, std::sqrt(2.0 * c2 * rule.nodes[i]), b); },
        exec);
    double p = 1.0;
    for (auto [l, mult] : distinct) {
      double s = 0.0;
      for (int i = 0; i < n; ++i)
        if (W[i] != 0.0)
          s += W[i] * std::pow(q[i], l);
      p *= std::pow(s, mult);
    }
    return p;
  };
  return OutageEstimate::analytic(integrate_exp_step(f), Method::Glq);
}

OutageEstimate ucps_uplink_glq(const UplinkParams &u, const BlockStructure &blocks, const QuadratureRule &rule,
                               Exec exec) {
  check_uplink(u, blocks, "ucps_uplink_glq");
  if (u.gamma_tilde == 0.0)
    return OutageEstimate::analytic(0.0, Method::Glq);
  const int n = rule.order;
  const double c2 = u.mu2 / (1.0 - u.mu2);
  // rows: v ~ Gamma(M), cols: r̃ (e^{-r̃})
  const std::vector<double> t = fill_table(
      n, n,
      [&](int k, int i) {
        return specfun::marcum_q_complement(1, std::sqrt(2.0 * c2 * rule.nodes[i]), marcum_b(u, rule.nodes[k]));
      },
      exec);
  return OutageEstimate::analytic(outer_inner(t, gamma_weights(rule, u.M), rule.weights, blocks), Method::Glq);
}

OutageEstimate deps_uplink_sfa(const UplinkParams &u, const BlockStructure &blocks) {
  check_uplink(u, blocks, "deps_uplink_sfa");
  if (u.gamma_tilde == 0.0)
    return OutageEstimate::analytic(0.0, Method::Sfa);
  auto f = [&](double x) {
    double p = 1.0;
    for (int l : blocks.sizes)
      p *= specfun::gamma_p(u.M, delta_deps(x, l, u.M, u.gamma_tilde, u.mu2).value);
    return p;
  };
  return OutageEstimate::analytic(integrate_exp_step(f), Method::Sfa);
}

OutageEstimate ucps_uplink_sfa(const UplinkParams &u, const BlockStructure &blocks, const QuadratureRule &rule) {
  check_uplink(u, blocks, "ucps_uplink_sfa");
  if (u.gamma_tilde == 0.0)
    return OutageEstimate::analytic(0.0, Method::Sfa);
  const std::vector<double> w = gamma_weights(rule, u.M);
  double p = 0.0;
  for (int k = 0; k < rule.order; ++k) {
    if (w[k] == 0.0)
      continue;
    double f = 1.0;
    for (int l : blocks.sizes)
      f *= -std::expm1(-delta_ucps(rule.nodes[k], l, u.gamma_tilde, u.mu2).value);
    p += w[k] * f;
  }
  return OutageEstimate::analytic(p, Method::Sfa);
}

OutageEstimate usps_uplink_nested(const UplinkParams &u, const BlockStructure &blocks, const QuadratureRule &rule,
                                  Exec exec) {
  check_uplink(u, blocks, "usps_uplink_nested");
  if (u.gamma_tilde == 0.0)
    return OutageEstimate::analytic(0.0, Method::Nested);
  const int n = rule.order;
  const double c2 = u.mu2 / (1.0 - u.mu2);
  // C[i][m] = P(port below threshold | R_i, z_m)
  const std::vector<double> C = fill_table(
      n, n,
      [&](int i, int m) {
        // z is the per-port uplink variable itself, no rescaling
        return specfun::marcum_q_complement(u.M, std::sqrt(2.0 * c2 * rule.nodes[i]),
                                            std::sqrt(u.gamma_tilde / (2.0 * rule.nodes[m])));
      },
      exec);
  // H[k][m] = w_m e^{z_m} · e^{-z_m - c² u_k} I₀(2 sqrt(c² u_k z_m)), kept in log space
  const std::vector<double> H = fill_table(
      n, n,
      [&](int k, int m) {
        const double uk = rule.nodes[k], zm = rule.nodes[m];
        return std::exp(rule.log_weights[m] - c2 * uk + specfun::log_bessel_i(0, 2.0 * std::sqrt(c2 * uk * zm)));
      },
      exec);
  std::vector<double> T(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int m = 0; m < n; ++m)
        s += C[static_cast<std::size_t>(i) * n + m] * H[static_cast<std::size_t>(k) * n + m];
      T[static_cast<std::size_t>(i) * n + k] = clamp01(s);
    }
  const std::vector<double> W = gamma_weights(rule, u.M);
  std::vector<double> w(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      w[static_cast<std::size_t>(i) * n + k] = W[i] * rule.weights[k];
  return OutageEstimate::analytic(block_product(T, w, blocks), Method::Nested);
}

OutageEstimate usps_uplink_sfa(const UplinkParams &u, const BlockStructure &blocks, const QuadratureRule &rule) {
  check_uplink(u, blocks, "usps_uplink_sfa");
  if (u.gamma_tilde == 0.0)
    return OutageEstimate::analytic(0.0, Method::Sfa);
  const std::vector<double> W = gamma_weights(rule, u.M);
  std::map<int, double> by_size;
  for (int l : blocks.sizes) {
    if (by_size.count(l))
      continue;
    double s = 0.0;
    for (int i = 0; i < rule.order; ++i)
      if (W[i] != 0.0)
        s += W[i] * std::exp(-delta_usps_tilde(rule.nodes[i], l, u.M, u.gamma_tilde, u.mu2).value);
    by_size[l] = 1.0 - s;
  }
  double p = 1.0;
  for (int l : blocks.sizes)
    p *= by_size[l];
  return OutageEstimate::analytic(p, Method::Sfa);
}

OutageEstimate deps_uplink_glq(const SystemConfig &cfg, const BlockStructure &blocks, double gamma_ul,
                               const QuadratureRule &rule) {
  return deps_uplink_glq(UplinkParams::from(cfg, gamma_ul), blocks, rule);
}

OutageEstimate ucps_uplink_glq(const SystemConfig &cfg, const BlockStructure &blocks, double gamma_ul,
                               const QuadratureRule &rule) {
  return ucps_uplink_glq(UplinkParams::from(cfg, gamma_ul), blocks, rule);
}

OutageEstimate usps_uplink_nested(const SystemConfig &cfg, const BlockStructure &blocks, double gamma_ul,
                                  const QuadratureRule &rule) {
  return usps_uplink_nested(UplinkParams::from(cfg, gamma_ul), blocks, rule);
}

} // namespace fama::analytic
