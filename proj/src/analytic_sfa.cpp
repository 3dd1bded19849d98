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

#include "fama/analytic.hpp"
#include "fama/errors.hpp"

#include <cmath>
#include <string>

namespace fama::analytic {

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * M_PI);

double to_r_domain(double delta, double mu2) { return (1.0 - mu2) / (2.0 * mu2) * delta * delta; }

SfaThreshold with_context(SfaThreshold t, ThresholdContext c) {
  t.context = c;
  return t;
}

void check_mu2(double mu2) {
  if (!(mu2 > 0.0 && mu2 < 1.0))
    throw DomainError("mu2 must lie in (0, 1)");
}

} // namespace

std::string_view to_string(ThresholdContext c) {
  switch (c) {
  case ThresholdContext::Delta:
    return "delta";
  case ThresholdContext::DeltaL1:
    return "delta_l1";
  case ThresholdContext::Dsps:
    return "delta_dsps";
  case ThresholdContext::DspsTilde:
    return "delta_dsps_tilde";
  case ThresholdContext::Deps:
    return "delta_deps";
  case ThresholdContext::Ucps:
    return "delta_ucps";
  case ThresholdContext::Usps:
    return "delta_usps";
  case ThresholdContext::UspsTilde:
    return "delta_usps_tilde";
  }
  return "?";
}

SfaThreshold sfa_threshold(double b, int L, int p) {
  if (std::isnan(b) || !(b >= 0.0) || std::isinf(b))
    throw DomainError("sfa_threshold: b must be finite and >= 0");
  if (L < 1 || p < 1)
    throw DomainError("sfa_threshold: L and p must be >= 1");

  const double pm = p - 0.5;
  const double single = 0.5 * (b + std::sqrt(b * b + 4.0 * p - 2.0));
  if (L == 1)
    return {single, ThresholdContext::DeltaL1, true};

  const double c1 = (L - 1) * kInvSqrt2Pi;
  const double den = c1 * pm + pm / b - b;
  const double value = b + (c1 * b + pm) / den;
  if (b > 0.0 && den < 0.0 && value > 0.0 && std::isfinite(value))
    return {value, ThresholdContext::Delta, true};
  return {single, ThresholdContext::Delta, false};
}

double numerical_inflection(double b, int L, int p) {
  if (!(b > 0.0) || L < 1 || p < 1)
    throw DomainError("numerical_inflection: requires b > 0, L >= 1, p >= 1");
  const double h = 1e-3 * std::max(1.0, 0.1 * b);
  auto f = [&](double a) { return std::pow(specfun::marcum_q_complement(p, a, b), L); };
  auto slope = [&](double a) { return (f(std::max(0.0, a - h)) - f(a + h)) / (2.0 * h); };

  const double lo = std::max(0.0, b - 12.0 - 2.0 * L);
  const double hi = b + 12.0 + 2.0 * p;
  const double step = 0.02;
  double best_a = lo, best_s = -1.0;
  for (double a = lo; a <= hi; a += step) {
    const double s = slope(a);
    if (s > best_s) {
      best_s = s;
      best_a = a;
    }
  }
  // golden-section refinement of the slope maximum
  double x0 = std::max(0.0, best_a - step), x3 = best_a + step;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = x3 - g * (x3 - x0), x2 = x0 + g * (x3 - x0);
  double s1 = slope(x1), s2 = slope(x2);
  for (int it = 0; it < 60 && x3 - x0 > 1e-9 * std::max(1.0, b); ++it) {
    if (s1 > s2) {
      x3 = x2;
      x2 = x1;
      s2 = s1;
      x1 = x3 - g * (x3 - x0);
      s1 = slope(x1);
    } else {
      x0 = x1;
      x1 = x2;
      s1 = s2;
      x2 = x0 + g * (x3 - x0);
      s2 = slope(x2);
    }
  }
  return 0.5 * (x0 + x3);
}

double alzer_constant(int M) {
  if (M < 1)
    throw DomainError("alzer_constant: M must be >= 1");
  return std::exp(-std::lgamma(1.0 + M) / M);
}

SfaThreshold delta_dsps(double r, double gamma, double mu2) {
  check_mu2(mu2);
  if (!(r >= 0.0) || !(gamma > 0.0))
    throw DomainError("delta_dsps: requires r >= 0, gamma > 0");
  const double c2 = mu2 / (1.0 - mu2);
  const double t = c2 * r / (2.0 * gamma);
  return {std::sqrt(t) + std::sqrt(t + 0.5 / gamma), ThresholdContext::Dsps, true};
}

SfaThreshold delta_dsps_tilde(double r, int L, int M, double gamma, double mu2) {
  if (L < 1 || M < 2)
    throw DomainError("delta_dsps_tilde: requires L >= 1, M >= 2");
  const double d = delta_dsps(r, gamma, mu2).value;
  const double c1 = (L - 1) * kInvSqrt2Pi;
  const double q = (M - 1.5) / d;
  const double inner = d + (c1 + q) / (c1 * q + 1.0);
  return {to_r_domain(inner, mu2), ThresholdContext::DspsTilde, true};
}

SfaThreshold delta_deps(double x, int L, int M, double gamma_tilde, double mu2) {
  check_mu2(mu2);
  if (!(x > 0.0) || !(gamma_tilde >= 0.0))
    throw DomainError("delta_deps: requires x > 0, gamma_tilde >= 0");
  const double b = std::sqrt(gamma_tilde * (1.0 - mu2) / (2.0 * x));
  SfaThreshold t = sfa_threshold(b, L, M);
  t.value = to_r_domain(t.value, mu2);
  return with_context(t, ThresholdContext::Deps);
}

SfaThreshold delta_ucps(double y, int L, double gamma_tilde, double mu2) {
  check_mu2(mu2);
  if (!(y > 0.0) || !(gamma_tilde >= 0.0))
    throw DomainError("delta_ucps: requires y > 0, gamma_tilde >= 0");
  const double b = std::sqrt(gamma_tilde * (1.0 - mu2) / (2.0 * y));
  SfaThreshold t = sfa_threshold(b, L, 1);
  t.value = to_r_domain(t.value, mu2);
  return with_context(t, ThresholdContext::Ucps);
}

SfaThreshold delta_usps(double r, int M, double gamma_tilde, double mu2) {
  check_mu2(mu2);
  if (!(r >= 0.0) || !(gamma_tilde >= 0.0) || M < 1)
    throw DomainError("delta_usps: requires r >= 0, gamma_tilde >= 0, M >= 1");
  const double a = std::sqrt(2.0 * mu2 / (1.0 - mu2) * r);
  return {2.0 * std::sqrt(gamma_tilde) / (a + std::sqrt(a * a + 4.0 * M - 2.0)), ThresholdContext::Usps, true};
}

SfaThreshold delta_usps_tilde(double r, int L, int M, double gamma_tilde, double mu2) {
  const double d = delta_usps(r, M, gamma_tilde, mu2).value;
  SfaThreshold t = sfa_threshold(d, L, 1);
  t.value = to_r_domain(t.value, mu2);
  return with_context(t, ThresholdContext::UspsTilde);
}

} // namespace fama::analytic
