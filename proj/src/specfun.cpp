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

#include "fama/specfun.hpp"
#include "fama/errors.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace fama::specfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2Pi = 1.8378770664093454836;

void require_finite(double x, const char *fn) {
  if (!std::isfinite(x))
    throw DomainError(std::string(fn) + ": non-finite argument");
}

// lgamma(a) - ((a - 1/2) ln a - a + ln(2π)/2), valid for a >= 10.
double stirling_correction(double a) {
  const double r = 1.0 / a, r2 = r * r;
  return r * (1.0 / 12 - r2 * (1.0 / 360 - r2 * (1.0 / 1260 - r2 * (1.0 / 1680))));
}

// log(x^a e^{-x} / Γ(a)) without cancellation for large a.
double log_gamma_prefix(double a, double x) {
  if (x == 0.0)
    return -kInf;
  if (a < 10.0)
    return a * std::log(x) - x - std::lgamma(a);
  const double u = (x - a) / a;
  return a * (std::log1p(u) - u) + 0.5 * std::log(a) - 0.5 * kLn2Pi - stirling_correction(a);
}

// P(a,x) by its power series; call with x < a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a, sum = term;
  for (int n = 1; n < 100000; ++n) {
    term *= x / (a + n);
    sum += term;
    if (term < sum * 1e-17)
      break;
  }
  return std::exp(log_gamma_prefix(a, x) + std::log(sum));
}

// Q(a,x) by modified Lentz continued fraction; call with x >= a + 1.
double gamma_q_fraction(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny)
      d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny)
      c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16)
      break;
  }
  return std::exp(log_gamma_prefix(a, x) + std::log(h));
}

void check_gamma_args(double a, double x, const char *fn) {
  if (std::isnan(a) || std::isnan(x) || !(a > 0.0) || std::isinf(a))
    throw DomainError(std::string(fn) + ": requires finite a > 0");
  if (x < 0.0)
    throw DomainError(std::string(fn) + ": requires x >= 0");
}

} // namespace

double bessel_j0(double x) {
  require_finite(x, "bessel_j0");
  return boost::math::cyl_bessel_j(0, x);
}

double log_bessel_i(int p, double x) {
  if (p < 0)
    throw DomainError("bessel_i: negative order");
  if (std::isnan(x) || x < 0.0)
    throw DomainError("bessel_i: requires x >= 0");
  if (std::isinf(x))
    return kInf;
  if (x == 0.0)
    return p == 0 ? 0.0 : -kInf;

  const double pd = p;
  if (x > 30.0 && x > pd * pd) {
    // Hankel expansion: I_p(x) ~ e^x / sqrt(2πx) Σ (-1)^k a_k(p) / x^k
    const double mu = 4.0 * pd * pd;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 200; ++k) {
      const double odd = 2.0 * k - 1.0;
      const double next = -term * (mu - odd * odd) / (k * 8.0 * x);
      if (std::fabs(next) > std::fabs(term))
        break;
      term = next;
      sum += term;
      if (std::fabs(term) < 1e-17 * std::fabs(sum))
        break;
    }
    return x - 0.5 * (kLn2Pi + std::log(x)) + std::log(sum);
  }

  // Ascending series (x/2)^p / p! Σ (x²/4)^k / (k! (p+1)_k), rescaled to dodge overflow.
  const double q = 0.25 * x * x;
  double term = 1.0, sum = 1.0, log_scale = 0.0;
  for (int k = 1; k < 100000; ++k) {
    term *= q / (k * (k + pd));
    sum += term;
    if (sum > 1e280) {
      sum *= 1e-280;
      term *= 1e-280;
      log_scale += 280.0 * std::log(10.0);
    }
    if (term < 1e-17 * sum && k * (k + pd) > q)
      break;
  }
  return pd * std::log(0.5 * x) - std::lgamma(pd + 1.0) + std::log(sum) + log_scale;
}

double bessel_i(int p, double x) { return std::exp(log_bessel_i(p, x)); }

double bessel_i_scaled(int p, double x) {
  if (std::isinf(x) && x > 0)
    return 0.0;
  return std::exp(log_bessel_i(p, x) - x);
}

double log_bessel_k(int p, double x) {
  if (p < 0)
    throw DomainError("bessel_k: negative order");
  if (std::isnan(x) || !(x > 0.0))
    throw DomainError("bessel_k: requires x > 0");
  if (std::isinf(x))
    return -kInf;

  // e^x K_p(x) = ∫_0^∞ exp(-x (cosh t - 1)) cosh(p t) dt, trapezoid rule.
  // The integrand is entire and decays double-exponentially, so the rule
  // converges geometrically in 1/h.
  const double pd = p;
  const double h = std::min(0.1, 0.5 / std::sqrt(x));
  auto log_f = [&](double t) {
    const double s = std::sinh(0.5 * t);
    const double y = pd * t;
    const double log_cosh = y + std::log1p(std::exp(-2.0 * y)) - std::log(2.0);
    return -2.0 * x * s * s + log_cosh;
  };

  std::vector<double> logs;
  logs.reserve(512);
  double peak = -kInf, prev = -kInf;
  for (int k = 0; k < 2000000; ++k) {
    const double lf = log_f(k * h) + (k == 0 ? -std::log(2.0) : 0.0);
    logs.push_back(lf);
    peak = std::max(peak, lf);
    if (k > 0 && lf < prev && lf < peak - 42.0)
      break;
    prev = lf;
  }
  double sum = 0.0;
  for (double lf : logs)
    sum += std::exp(lf - peak);
  return -x + peak + std::log(h * sum);
}

double bessel_k(int p, double x) { return std::exp(log_bessel_k(p, x)); }

double bessel_k_scaled(int p, double x) { return std::exp(log_bessel_k(p, x) + x); }

double gamma_p(double a, double x) {
  check_gamma_args(a, x, "gamma_p");
  if (x == 0.0)
    return 0.0;
  if (std::isinf(x))
    return 1.0;
  if (x < a + 1.0)
    return gamma_p_series(a, x);
  return 1.0 - gamma_q_fraction(a, x);
}

double gamma_q(double a, double x) {
  check_gamma_args(a, x, "gamma_q");
  if (x == 0.0)
    return 1.0;
  if (std::isinf(x))
    return 0.0;
  if (x < a + 1.0)
    return 1.0 - gamma_p_series(a, x);
  return gamma_q_fraction(a, x);
}

double lower_incomplete_gamma(double a, double x) {
  const double p = gamma_p(a, x);
  return p == 0.0 ? 0.0 : std::exp(std::log(p) + std::lgamma(a));
}

double upper_incomplete_gamma(double a, double x) {
  const double q = gamma_q(a, x);
  return q == 0.0 ? 0.0 : std::exp(std::log(q) + std::lgamma(a));
}

double log_poisson_pmf(double k, double x) {
  if (std::isnan(k) || std::isnan(x) || k < 0.0 || x < 0.0)
    throw DomainError("poisson_pmf: requires k >= 0, x >= 0");
  if (x == 0.0)
    return k == 0.0 ? 0.0 : -kInf;
  return log_gamma_prefix(k + 1.0, x) - std::log(x);
}

double poisson_pmf(double k, double x) { return std::exp(log_poisson_pmf(k, x)); }

double nuttall_integral(double a, double b, double c) {
  if (std::isnan(a) || std::isnan(b) || std::isnan(c) || a < 0.0 || b < 0.0)
    throw DomainError("nuttall_integral: requires a, b >= 0");
  if (!(c > 0.0))
    throw DomainError("nuttall_integral: requires c > 0");
  const double a2 = a * a, b2 = b * b;
  return std::exp(-0.5 * b2) / c +
         std::exp(-c * b2 / (a2 + 2.0 * c)) / c * (-std::expm1(-a2 * b2 / (2.0 * a2 + 4.0 * c)));
}

} // namespace fama::specfun
