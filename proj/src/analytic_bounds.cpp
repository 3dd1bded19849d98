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

#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace fama::analytic {

using namespace detail;

namespace {

namespace mp = boost::multiprecision;

// Cancellation factor Σ|t_k| / |Σ t_k| above which the double result is
// discarded.
constexpr double kMaxCondition = 1e6;

void check_hat(int M, double gamma_hat, int branches, const char *name) {
  if (M < 1)
    throw ConfigError(std::string(name) + ": M must be >= 1");
  if (branches < 1)
    throw ConfigError(std::string(name) + ": branch count must be >= 1");
  if (std::isnan(gamma_hat) || std::isinf(gamma_hat) || gamma_hat < 0.0)
    throw DomainError(std::string(name) + ": gamma_hat must be finite and >= 0, got " + std::to_string(gamma_hat));
}

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// log of z^ν K_ν(z) / (2^{ν-1} Γ(ν)), which is 1 at z = 0
double log_k_term(int nu, double z) {
  if (z == 0.0)
    return 0.0;
  return nu * std::log(z) + specfun::log_bessel_k(nu, z) - (nu - 1) * std::log(2.0) - std::lgamma(nu);
}

// Σ_{k=0}^{n} C(n,k) (-1)^k f(k) with f(k) = k_term(nu, sqrt(k·scale)).
template <class T> T alternating_mp(int n, int nu, double scale) {
  const T s = T(scale);
  T gamma_nu = 1;
  for (int i = 2; i < nu; ++i)
    gamma_nu *= i;
  const T norm = mp::pow(T(2), nu - 1) * gamma_nu;
  T sum = 1, binom = 1;
  for (int k = 1; k <= n; ++k) {
    binom = binom * (n - k + 1) / k;
    const T z = mp::sqrt(s * k);
    const T f = mp::pow(z, nu) * boost::math::cyl_bessel_k(nu, z) / norm;
    sum += (k % 2 ? -binom : binom) * f;
  }
  return sum;
}

double alternating_sum(int n, int nu, double scale) {
  double sum = 0.0, comp = 0.0, abs_sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double t = (k % 2 ? -1.0 : 1.0) * std::exp(log_binomial(n, k) + log_k_term(nu, std::sqrt(k * scale)));
    abs_sum += std::abs(t);
    const double y = sum + t;
    comp += std::abs(sum) >= std::abs(t) ? (sum - y) + t : (t - y) + sum;
    sum = y;
  }
  const double s = sum + comp;
  if (std::abs(s) * kMaxCondition > abs_sum)
    return s;

  // Σ|t_k| <= 2^n bounds the digits lost to cancellation
  const double digits = n * std::log10(2.0) + 25.0;
  if (digits <= 50)
    return static_cast<double>(alternating_mp<mp::number<mp::cpp_bin_float<50>>>(n, nu, scale));
  if (digits <= 100)
    return static_cast<double>(alternating_mp<mp::number<mp::cpp_bin_float<100>>>(n, nu, scale));
  if (digits <= 200)
    return static_cast<double>(alternating_mp<mp::number<mp::cpp_bin_float<200>>>(n, nu, scale));
  throw ModelError("alternating sum with " + std::to_string(n) + " terms exceeds the supported precision");
}

} // namespace

double deps_lb_from_hat(int M, double gamma_hat, int branches) {
  check_hat(M, gamma_hat, branches, "deps lower bound");
  if (gamma_hat == 0.0)
    return 0.0;
  return clamp01(
      integrate_exp_step([&](double x) { return std::pow(specfun::gamma_p(M, gamma_hat / x), branches); }));
}

double deps_lb_closed_from_hat(int M, double gamma_hat, int branches) {
  check_hat(M, gamma_hat, branches, "deps closed-form lower bound");
  if (gamma_hat == 0.0)
    return 0.0;
  // ∫ e^{-x} (1 - e^{-d γ̂/x})^{BM} dx expanded term by term
  return clamp01(alternating_sum(branches * M, 1, 4.0 * alzer_constant(M) * gamma_hat));
}

double ucps_lb_from_hat(int M, double gamma_hat, int branches) {
  check_hat(M, gamma_hat, branches, "ucps lower bound");
  if (gamma_hat == 0.0)
    return 0.0;
  return clamp01(alternating_sum(branches, M, 4.0 * gamma_hat));
}

double usps_lb_from_hat(int M, double gamma_hat, int branches) {
  check_hat(M, gamma_hat, branches, "usps lower bound");
  if (gamma_hat == 0.0)
    return 0.0;
  const double single = -std::expm1(log_k_term(M, 2.0 * std::sqrt(gamma_hat)));
  return clamp01(std::pow(single, branches));
}

OutageEstimate deps_uplink_lb(const UplinkParams &u, int branches) {
  return OutageEstimate::analytic(deps_lb_from_hat(u.M, u.gamma_hat(), branches), Method::LowerBound);
}

OutageEstimate deps_uplink_lb_closed(const UplinkParams &u, int branches) {
  return OutageEstimate::analytic(deps_lb_closed_from_hat(u.M, u.gamma_hat(), branches), Method::LowerBoundClosed);
}

OutageEstimate ucps_uplink_lb(const UplinkParams &u, int branches) {
  return OutageEstimate::analytic(ucps_lb_from_hat(u.M, u.gamma_hat(), branches), Method::LowerBoundClosed);
}

OutageEstimate usps_uplink_lb(const UplinkParams &u, int branches) {
  return OutageEstimate::analytic(usps_lb_from_hat(u.M, u.gamma_hat(), branches), Method::LowerBoundClosed);
}

} // namespace fama::analytic
