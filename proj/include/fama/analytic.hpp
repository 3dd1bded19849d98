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

#include "fama/channel.hpp"
#include "fama/montecarlo.hpp"
#include "fama/specfun.hpp"

#include <string_view>

// Outage probabilities under the block-correlation model.
//
// Notation: c² = μ²/(1-μ²), s = 1-μ². Downlink thresholds γ are linear SIR
// values. Uplink evaluators take the linear SNR threshold and convert it to
// γ̃ = θ/s² and γ̂ = θ/4 with θ = γ · cfg.uplink_threshold_scale(); outage
// of a port means α·β < γ̃.
//
// GLQ substitutions: every e^{-c x} weight is mapped to e^{-u} with u = c x
// before the rule is applied; Gamma(k) weights are folded in as u^{k-1}/Γ(k).
// The DEPS outer integral over the uplink gain is a near-step at low
// thresholds and is integrated adaptively instead (see integrate_exp_step).

namespace fama::analytic {

using specfun::QuadratureRule;

// Table fills (Marcum-Q grids, G grids) run under OpenMP unless Serial.
enum class Exec { Parallel, Serial };

// ---------------------------------------------------------------- thresholds

enum class ThresholdContext { Delta, DeltaL1, Dsps, DspsTilde, Deps, Ucps, Usps, UspsTilde };

std::string_view to_string(ThresholdContext c);

struct SfaThreshold {
  double value = 0.0;
  ThresholdContext context = ThresholdContext::Delta;
  // false when the L >= 2 formula has crossed its pole or turned non-positive
  // and the L = 1 threshold was substituted
  bool in_validity_region = true;
};

// Step location of a -> [1 - Q_p(a,b)]^L. L = 1 uses (b + sqrt(b² + 4p - 2))/2.
SfaThreshold sfa_threshold(double b, int L, int p);

// Steepest point of a -> [1 - Q_p(a,b)]^L located numerically (diagnostic).
double numerical_inflection(double b, int L, int p);

// d_M = Γ(1+M)^{-1/M}
double alzer_constant(int M);

SfaThreshold delta_dsps(double r, double gamma, double mu2);
SfaThreshold delta_dsps_tilde(double r, int L, int M, double gamma, double mu2);
// x is the e^{-x}-weighted outer variable; returned value is already mapped
// to the r-domain, i.e. (1/(2c²)) δ².
SfaThreshold delta_deps(double x, int L, int M, double gamma_tilde, double mu2);
SfaThreshold delta_ucps(double y, int L, double gamma_tilde, double mu2);
SfaThreshold delta_usps(double r, int M, double gamma_tilde, double mu2);
SfaThreshold delta_usps_tilde(double r, int L, int M, double gamma_tilde, double mu2);

// ----------------------------------------------------------------- downlink

// P(X < γ Y) for one port given the block noncentralities: X ~ χ²₂(c² R),
// Y ~ χ²_{2(M-1)}(c² R̃), written with R = 2r, R̃ = 2r̃.
double g_function(double gamma, double R, double R_tilde, int M, double mu2);

OutageEstimate dsps_downlink_glq(const SystemConfig &cfg, const BlockStructure &blocks, double gamma,
                                 const QuadratureRule &rule, Exec exec = Exec::Parallel);
OutageEstimate dsps_downlink_sfa(const SystemConfig &cfg, const BlockStructure &blocks, double gamma,
                                 const QuadratureRule &rule, Exec exec = Exec::Parallel);
OutageEstimate dsps_downlink_sfa2(const SystemConfig &cfg, const BlockStructure &blocks, double gamma,
                                  const QuadratureRule &rule);

// 1 - (1+γ)^{-(M-1)}; shared by DEPS, UCPS and USPS (selection ignores the SIR).
OutageEstimate deps_downlink_closed(int M, double gamma);
OutageEstimate ucps_downlink_closed(int M, double gamma);
OutageEstimate usps_downlink_closed(int M, double gamma);

// ------------------------------------------------------------------- uplink

struct UplinkParams {
  int M = 4;
  double mu2 = 0.97;
  double gamma_tilde = 0.0;

  double gamma_hat() const { return 0.25 * gamma_tilde * (1.0 - mu2) * (1.0 - mu2); }
  static UplinkParams from(const SystemConfig &cfg, double gamma_ul);
};

// DSPS picks its port independently of the uplink, so the outage is that of
// a single port: 1 - z^M K_M(z) / (2^{M-1} Γ(M)) with z = 2 sqrt(γ̂).
OutageEstimate dsps_uplink_closed(const UplinkParams &u);
OutageEstimate dsps_uplink_closed(const SystemConfig &cfg, double gamma_ul);

OutageEstimate deps_uplink_glq(const UplinkParams &u, const BlockStructure &blocks, const QuadratureRule &rule,
                               Exec exec = Exec::Parallel);
OutageEstimate deps_uplink_sfa(const UplinkParams &u, const BlockStructure &blocks);
OutageEstimate ucps_uplink_glq(const UplinkParams &u, const BlockStructure &blocks, const QuadratureRule &rule,
                               Exec exec = Exec::Parallel);
OutageEstimate ucps_uplink_sfa(const UplinkParams &u, const BlockStructure &blocks, const QuadratureRule &rule);
OutageEstimate usps_uplink_nested(const UplinkParams &u, const BlockStructure &blocks,
                                  const QuadratureRule &rule, Exec exec = Exec::Parallel);
OutageEstimate usps_uplink_sfa(const UplinkParams &u, const BlockStructure &blocks, const QuadratureRule &rule);

// Diversity-order bounds; `branches` is the number of independent branches
// (the block count B in the block model).
OutageEstimate deps_uplink_lb(const UplinkParams &u, int branches);
OutageEstimate deps_uplink_lb_closed(const UplinkParams &u, int branches);
OutageEstimate ucps_uplink_lb(const UplinkParams &u, int branches);
OutageEstimate usps_uplink_lb(const UplinkParams &u, int branches);

// Same bounds written directly in γ̂ (the model-free form).
double deps_lb_from_hat(int M, double gamma_hat, int branches);
double deps_lb_closed_from_hat(int M, double gamma_hat, int branches);
double ucps_lb_from_hat(int M, double gamma_hat, int branches);
double usps_lb_from_hat(int M, double gamma_hat, int branches);

// cfg-based conveniences
OutageEstimate deps_uplink_glq(const SystemConfig &cfg, const BlockStructure &blocks, double gamma_ul,
                               const QuadratureRule &rule);
OutageEstimate ucps_uplink_glq(const SystemConfig &cfg, const BlockStructure &blocks, double gamma_ul,
                               const QuadratureRule &rule);
OutageEstimate usps_uplink_nested(const SystemConfig &cfg, const BlockStructure &blocks, double gamma_ul,
                                  const QuadratureRule &rule);

} // namespace fama::analytic
