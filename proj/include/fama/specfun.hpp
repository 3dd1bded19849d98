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

#include <vector>

namespace fama::specfun {

double bessel_j0(double x);

// Modified Bessel function of the first kind, integer order.
double bessel_i(int p, double x);
// log I_p(x); -inf for x = 0 and p >= 1. Finite for all x where I_p would overflow.
double log_bessel_i(int p, double x);
// e^{-x} I_p(x)
double bessel_i_scaled(int p, double x);

// Modified Bessel function of the second kind, integer order, x > 0.
double bessel_k(int p, double x);
double log_bessel_k(int p, double x);
// e^{x} K_p(x)
double bessel_k_scaled(int p, double x);

// Regularized incomplete gamma functions P(a,x), Q(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);
// Unregularized: lower Φ(a,x) and upper Γ(a,x).
double lower_incomplete_gamma(double a, double x);
double upper_incomplete_gamma(double a, double x);

// Poisson probability e^{-x} x^k / k! for real k >= 0, computed without overflow.
double poisson_pmf(double k, double x);
double log_poisson_pmf(double k, double x);

// Generalized Marcum Q of integer order p >= 1, and its complement 1 - Q_p.
// Both are accurate in relative terms, including when they are tiny.
double marcum_q(int p, double a, double b);
double marcum_q_complement(int p, double a, double b);

// F(a,b,c) = ∫_0^∞ Q_1(a√x, b) e^{-cx} dx in closed form.
double nuttall_integral(double a, double b, double c);

struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> log_weights;

  // Σ w_i f(x_i), approximating ∫_0^∞ e^{-x} f(x) dx.
  template <class F> double integrate(F &&f) const {
    double s = 0.0;
    for (int i = 0; i < order; ++i)
      s += weights[i] * f(nodes[i]);
    return s;
  }
};

// Gauss-Laguerre rule for the weight e^{-x}; 1 <= order <= 256.
QuadratureRule gauss_laguerre(int order);

// Rules are cached per order; the returned reference lives for the program.
const QuadratureRule &gauss_laguerre_cached(int order);

} // namespace fama::specfun
