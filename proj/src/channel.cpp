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

#include "fama/channel.hpp"
#include "fama/errors.hpp"
#include "fama/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace fama {

namespace {

void require(bool ok, const std::string &msg) {
  if (!ok)
    throw ConfigError(msg);
}

} // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

void SystemConfig::validate() const {
  require(num_users >= 2, "num_users must be >= 2");
  require(num_ports >= 2, "num_ports must be >= 2");
  require(std::isfinite(antenna_size) && antenna_size > 0.0, "antenna_size must be > 0");
  require(mu2 > 0.0 && mu2 < 1.0, "mu2 must lie in (0, 1)");
  require(eta > 0.0 && eta <= 1.0, "eta must lie in (0, 1]");
  require(rho >= 0.0 && rho < 1.0, "rho must lie in [0, 1)");
  require(std::isfinite(transmit_power_dbm), "transmit_power_dbm must be finite");
  require(std::isfinite(noise_power_dbm), "noise_power_dbm must be finite");
  require(t1 > 0.0 && t1 < 1.0, "t1 must lie in (0, 1)");
  require(std::isfinite(distance) && distance > 0.0, "distance must be > 0");
  require(std::isfinite(pathloss_exponent) && pathloss_exponent > 0.0, "pathloss_exponent must be > 0");
  require(std::isfinite(pathloss_ref) && pathloss_ref > 0.0, "pathloss_ref must be > 0");
}

double SystemConfig::transmit_power_w() const { return dbm_to_watt(transmit_power_dbm); }
double SystemConfig::noise_power_w() const { return dbm_to_watt(noise_power_dbm); }
double SystemConfig::pathloss_gain() const { return pathloss_ref * std::pow(distance, -pathloss_exponent); }
double SystemConfig::pathloss_loss() const { return 1.0 / pathloss_gain(); }

double SystemConfig::uplink_threshold_scale() const {
  const double omega = pathloss_loss();
  return t2() * noise_power_w() * omega * omega / (eta * (1.0 - rho) * transmit_power_w() * t1);
}

DerivedParams derive_params(const SystemConfig &cfg, double gamma_ul) {
  if (!std::isfinite(gamma_ul) || gamma_ul < 0.0)
    throw DomainError("derive_params: uplink threshold must be finite and >= 0");
  const double theta = gamma_ul * cfg.uplink_threshold_scale();
  const double s = 1.0 - cfg.mu2;
  return {theta / (s * s), 0.25 * theta};
}

int BlockStructure::total() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

std::vector<int> BlockStructure::port_blocks() const {
  std::vector<int> out;
  out.reserve(total());
  for (int b = 0; b < count(); ++b)
    out.insert(out.end(), sizes[b], b);
  return out;
}

BlockStructure BlockStructure::from_sizes(std::vector<int> sizes) {
  require(!sizes.empty(), "block structure needs at least one block");
  for (int l : sizes)
    require(l >= 1, "block sizes must be >= 1");
  return {std::move(sizes)};
}

Eigen::MatrixXd jakes_matrix(int num_ports, double antenna_size) {
  require(num_ports >= 2, "jakes_matrix: num_ports must be >= 2");
  require(std::isfinite(antenna_size) && antenna_size > 0.0, "jakes_matrix: antenna_size must be > 0");
  const int n = num_ports;
  // entries depend on |n1 - n2| only
  std::vector<double> lag(n);
  for (int k = 0; k < n; ++k)
    lag[k] = specfun::bessel_j0(2.0 * M_PI * k * antenna_size / (n - 1));
  Eigen::MatrixXd j(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      j(r, c) = lag[std::abs(r - c)];
  return j;
}

Eigen::VectorXd jakes_eigenvalues(int num_ports, double antenna_size) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jakes_matrix(num_ports, antenna_size),
                                                     Eigen::EigenvaluesOnly);
  return eig.eigenvalues().reverse();
}

BlockStructure derive_blocks(int num_ports, double antenna_size, double mu2, double eps) {
  require(num_ports >= 2, "derive_blocks: num_ports must be >= 2");
  require(std::isfinite(antenna_size) && antenna_size > 0.0, "derive_blocks: antenna_size must be > 0");
  require(mu2 > 0.0 && mu2 <= 1.0, "derive_blocks: mu2 must lie in (0, 1]");
  const double eps_max = (num_ports - 1) / antenna_size;
  require(std::isfinite(eps) && eps > 0.0 && eps < eps_max,
          "derive_blocks: eps must lie in (0, " + std::to_string(eps_max) + ")");

  const Eigen::VectorXd ev = jakes_eigenvalues(num_ports, antenna_size);
  std::vector<int> sizes;
  for (int i = 0; i < ev.size() && ev(i) >= eps; ++i) {
    const long l = std::lround((ev(i) - (1.0 - mu2)) / mu2);
    sizes.push_back(static_cast<int>(std::max(1L, l)));
  }
  require(!sizes.empty(), "derive_blocks: no eigenvalue reaches eps");

  int residual = num_ports - std::accumulate(sizes.begin(), sizes.end(), 0);
  for (std::size_t i = 0; residual != 0; ++i) {
    int &l = sizes[i % sizes.size()];
    if (residual > 0) {
      ++l;
      --residual;
    } else if (l > 1) {
      --l;
      ++residual;
    }
  }
  return {std::move(sizes)};
}

std::vector<double> block_model_eigenvalues(const BlockStructure &blocks, double mu2) {
  std::vector<double> ev;
  for (int l : blocks.sizes) {
    ev.push_back(1.0 + (l - 1) * mu2);
    ev.insert(ev.end(), l - 1, 1.0 - mu2);
  }
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

void sample_draw(const SystemConfig &cfg, const BlockStructure &blocks, RandomStream &rng,
                 ChannelDraw &out) {
  const int m_users = cfg.num_users;
  const int n_ports = blocks.total();
  const int n_blocks = blocks.count();
  const double sp = std::sqrt(1.0 - cfg.mu2);
  const double sc = std::sqrt(cfg.mu2);

  out.num_ports = n_ports;
  out.num_users = m_users;
  out.g.resize(static_cast<std::size_t>(n_ports) * m_users);
  out.h.resize(n_ports);
  out.dl_common.resize(static_cast<std::size_t>(n_blocks) * m_users);
  out.ul_common.resize(n_blocks);

  auto normal_pair = [&rng]() {
    const double re = rng.next_normal();
    const double im = rng.next_normal();
    return std::complex<double>(re, im);
  };
  for (int b = 0; b < n_blocks; ++b) {
    for (int m = 0; m < m_users; ++m)
      out.dl_common[static_cast<std::size_t>(b) * m_users + m] = normal_pair();
    out.ul_common[b] = normal_pair();
  }
  int n = 0;
  for (int b = 0; b < n_blocks; ++b) {
    for (int k = 0; k < blocks.sizes[b]; ++k, ++n) {
      for (int m = 0; m < m_users; ++m)
        out.g[static_cast<std::size_t>(n) * m_users + m] =
            sp * normal_pair() + sc * out.dl_common[static_cast<std::size_t>(b) * m_users + m];
      out.h[n] = sp * normal_pair() + sc * out.ul_common[b];
    }
  }
}

ChannelDraw sample_draw(const SystemConfig &cfg, const BlockStructure &blocks, RandomStream &rng) {
  ChannelDraw d;
  sample_draw(cfg, blocks, rng, d);
  return d;
}

JakesSampler::JakesSampler(const SystemConfig &cfg) : num_users_(cfg.num_users) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jakes_matrix(cfg.num_ports, cfg.antenna_size));
  const Eigen::VectorXd d = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  root_ = eig.eigenvectors() * d.asDiagonal() * eig.eigenvectors().transpose();
}

void JakesSampler::sample(RandomStream &rng, ChannelDraw &out) const {
  const int n_ports = static_cast<int>(root_.rows());
  out.num_ports = n_ports;
  out.num_users = num_users_;
  out.g.resize(static_cast<std::size_t>(n_ports) * num_users_);
  out.h.resize(n_ports);
  out.dl_common.clear();
  out.ul_common.clear();

  Eigen::VectorXd re(n_ports), im(n_ports);
  for (int link = 0; link <= num_users_; ++link) {
    for (int n = 0; n < n_ports; ++n) {
      re(n) = rng.next_normal();
      im(n) = rng.next_normal();
    }
    const Eigen::VectorXd cr = root_ * re;
    const Eigen::VectorXd ci = root_ * im;
    for (int n = 0; n < n_ports; ++n) {
      const std::complex<double> v(cr(n), ci(n));
      if (link < num_users_)
        out.g[static_cast<std::size_t>(n) * num_users_ + link] = v;
      else
        out.h[n] = v;
    }
  }
}

void compute_metrics(const SystemConfig &cfg, const ChannelDraw &draw, MetricDraw &out) {
  const int n_ports = draw.num_ports;
  const int m_users = draw.num_users;
  const double s = 1.0 - cfg.mu2;
  const double omega = cfg.pathloss_loss();
  const double harvest = cfg.eta * (1.0 - cfg.rho) * cfg.transmit_power_w() * cfg.t1 / omega;
  const double snr_scale = 1.0 / (cfg.t2() * cfg.noise_power_w() * omega);

  for (auto *v : {&out.X, &out.Y, &out.alpha, &out.beta, &out.sir, &out.ehp, &out.ul_snr, &out.uplink_gain})
    v->resize(n_ports);
  for (int n = 0; n < n_ports; ++n) {
    const double x = std::norm(draw.gain(n, 0));
    double y = 0.0;
    for (int m = 1; m < m_users; ++m)
      y += std::norm(draw.gain(n, m));
    const double hh = std::norm(draw.h[n]);
    out.X[n] = x / s;
    out.Y[n] = y / s;
    out.alpha[n] = (x + y) / s;
    out.beta[n] = hh / s;
    out.sir[n] = y > 0.0 ? x / y : std::numeric_limits<double>::infinity();
    out.ehp[n] = harvest * (x + y);
    out.ul_snr[n] = hh * out.ehp[n] * snr_scale;
    out.uplink_gain[n] = hh;
  }
}

MetricDraw metrics(const SystemConfig &cfg, const ChannelDraw &draw) {
  MetricDraw m;
  compute_metrics(cfg, draw, m);
  return m;
}

} // namespace fama
