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

#include "fama/rng.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

namespace fama {

// Physical and protocol parameters. Powers are kept in dBm as configured;
// the accessors return linear watts. The frame length T is normalized to 1.
struct SystemConfig {
  int num_users = 4;                // M, one desired link plus M-1 interferers
  int num_ports = 50;               // N
  double antenna_size = 3.0;        // W in wavelengths
  double mu2 = 0.97;                // in-block correlation μ²
  double eta = 0.45;                // energy conversion efficiency
  double rho = 0.5;                 // power split to information decoding
  double transmit_power_dbm = 20.0; // Pt
  double noise_power_dbm = -90.0;   // σ_w²
  double t1 = 0.8;                  // downlink share of the frame
  double distance = 12.0;           // meters
  double pathloss_exponent = 2.2;   // ζ
  double pathloss_ref = 1e-3;       // gain at 1 m

  // Throws ConfigError naming the offending field.
  void validate() const;

  double t2() const { return 1.0 - t1; }
  double transmit_power_w() const;
  double noise_power_w() const;
  // pathloss_ref * d^{-ζ}
  double pathloss_gain() const;
  // Ω = 1 / pathloss_gain()
  double pathloss_loss() const;
  // θ/γ: uplink outage happens when |h|² Σ|g|² < γ · uplink_threshold_scale().
  double uplink_threshold_scale() const;
};

struct DerivedParams {
  double gamma_tilde = 0.0;
  double gamma_hat = 0.0;
};

// gamma_ul is the linear uplink SNR threshold.
DerivedParams derive_params(const SystemConfig &cfg, double gamma_ul);

struct BlockStructure {
  std::vector<int> sizes;

  int count() const { return static_cast<int>(sizes.size()); }
  int total() const;
  // Block index of every port, ports laid out block after block.
  std::vector<int> port_blocks() const;

  static BlockStructure from_sizes(std::vector<int> sizes);
};

Eigen::MatrixXd jakes_matrix(int num_ports, double antenna_size);
// Eigenvalues of jakes_matrix, descending.
Eigen::VectorXd jakes_eigenvalues(int num_ports, double antenna_size);

// Block count = #eigenvalues >= eps; block sizes from matching each of those
// eigenvalues to the leading eigenvalue 1 + (L-1)μ² of a constant-correlation
// block. The residual N - ΣL is spread one port at a time, largest block first.
BlockStructure derive_blocks(int num_ports, double antenna_size, double mu2, double eps = 1.0);

// Full eigenvalue multiset of the block model, descending.
std::vector<double> block_model_eigenvalues(const BlockStructure &blocks, double mu2);

// Gains of one user. g[n*M + m]: port n, link m (m = 0 is the desired link).
struct ChannelDraw {
  int num_ports = 0;
  int num_users = 0;
  std::vector<std::complex<double>> g;
  std::vector<std::complex<double>> h;
  // Block-level components, g: [b*M + m], h: [b]. Empty for Jakes draws.
  std::vector<std::complex<double>> dl_common;
  std::vector<std::complex<double>> ul_common;

  const std::complex<double> &gain(int n, int m) const { return g[static_cast<std::size_t>(n) * num_users + m]; }
};

void sample_draw(const SystemConfig &cfg, const BlockStructure &blocks, RandomStream &rng,
                 ChannelDraw &out);
ChannelDraw sample_draw(const SystemConfig &cfg, const BlockStructure &blocks, RandomStream &rng);

// Samples the exact Jakes covariance through its symmetric square root.
class JakesSampler {
public:
  explicit JakesSampler(const SystemConfig &cfg);
  void sample(RandomStream &rng, ChannelDraw &out) const;

private:
  int num_users_;
  Eigen::MatrixXd root_;
};

// Per-port functionals of a draw. X, Y, alpha, beta are normalized by 1-μ².
struct MetricDraw {
  std::vector<double> X, Y, alpha, beta;
  std::vector<double> sir, ehp, ul_snr;
  std::vector<double> uplink_gain; // |h_n|²

  std::size_t size() const { return sir.size(); }
};

void compute_metrics(const SystemConfig &cfg, const ChannelDraw &draw, MetricDraw &out);
MetricDraw metrics(const SystemConfig &cfg, const ChannelDraw &draw);

inline bool downlink_outage(const MetricDraw &m, std::size_t port, double gamma_dl) {
  return m.sir[port] < gamma_dl;
}
inline bool uplink_outage(const MetricDraw &m, std::size_t port, double gamma_ul) {
  return m.ul_snr[port] < gamma_ul;
}

double db_to_linear(double db);
double dbm_to_watt(double dbm);

} // namespace fama
