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
#include "fama/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <tuple>

namespace fama {

namespace {

namespace an = analytic;
using specfun::QuadratureRule;

std::optional<OutageEstimate> analytic_value(StrategyKind kind, Link link, Method method, const GridPoint &gp,
                                             const QuadratureRule &rule) {
  const SystemConfig &cfg = gp.cfg;
  if (link == Link::Downlink) {
    switch (kind) {
    case StrategyKind::Dsps:
      if (method == Method::Glq)
        return an::dsps_downlink_glq(cfg, gp.blocks, gp.threshold, rule);
      if (method == Method::Sfa)
        return an::dsps_downlink_sfa(cfg, gp.blocks, gp.threshold, rule);
      if (method == Method::Sfa2)
        return an::dsps_downlink_sfa2(cfg, gp.blocks, gp.threshold, rule);
      return std::nullopt;
    case StrategyKind::Deps:
    case StrategyKind::Ucps:
    case StrategyKind::Usps:
      if (method == Method::Closed)
        return an::deps_downlink_closed(cfg.num_users, gp.threshold);
      return std::nullopt;
    case StrategyKind::FpaSc:
      return std::nullopt;
    }
    return std::nullopt;
  }

  const an::UplinkParams u = an::UplinkParams::from(cfg, gp.threshold);
  const int B = gp.blocks.count();
  switch (kind) {
  case StrategyKind::Dsps:
    if (method == Method::Closed)
      return an::dsps_uplink_closed(u);
    return std::nullopt;
  case StrategyKind::Deps:
    if (method == Method::Glq)
      return an::deps_uplink_glq(u, gp.blocks, rule);
    if (method == Method::Sfa)
      return an::deps_uplink_sfa(u, gp.blocks);
    if (method == Method::LowerBound)
      return an::deps_uplink_lb(u, B);
    if (method == Method::LowerBoundClosed)
      return an::deps_uplink_lb_closed(u, B);
    return std::nullopt;
  case StrategyKind::Ucps:
    if (method == Method::Glq)
      return an::ucps_uplink_glq(u, gp.blocks, rule);
    if (method == Method::Sfa)
      return an::ucps_uplink_sfa(u, gp.blocks, rule);
    if (method == Method::LowerBoundClosed)
      return an::ucps_uplink_lb(u, B);
    return std::nullopt;
  case StrategyKind::Usps:
    if (method == Method::Nested)
      return an::usps_uplink_nested(u, gp.blocks, rule);
    if (method == Method::Sfa)
      return an::usps_uplink_sfa(u, gp.blocks, rule);
    if (method == Method::LowerBoundClosed)
      return an::usps_uplink_lb(u, B);
    return std::nullopt;
  case StrategyKind::FpaSc:
    return std::nullopt;
  }
  return std::nullopt;
}

Row make_row(const Scenario &s, double x, std::string strategy, std::string link, std::string method, double v) {
  Row r;
  r.scenario = s.name;
  r.sweep_var = std::string(to_string(s.sweep_var));
  r.sweep_value = x;
  r.strategy = std::move(strategy);
  r.link = std::move(link);
  r.method = std::move(method);
  r.value = v;
  r.seed = s.seed;
  return r;
}

std::vector<Row> run_outage(const Scenario &s, const McOptions &opts) {
  const QuadratureRule &rule = specfun::gauss_laguerre_cached(s.glq_order);
  const bool with_mc = std::find(s.methods.begin(), s.methods.end(), Method::Mc) != s.methods.end();
  std::vector<Row> rows;
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    for (Link link : s.links) {
      const GridPoint gp = make_grid_point(s, i, link);
      std::vector<OutageEstimate> mc;
      if (with_mc) {
        std::vector<Strategy> strategies;
        for (StrategyKind k : s.strategies)
          strategies.push_back(k == StrategyKind::FpaSc ? Strategy::fpa_sc_for(gp.cfg) : Strategy{k, 0});
        mc = estimate_outage_many(gp.cfg, gp.blocks, strategies, link, gp.threshold, s.trials,
                                  point_seed(s.seed, i), opts);
      }
      for (std::size_t k = 0; k < s.strategies.size(); ++k) {
        const StrategyKind kind = s.strategies[k];
        for (Method m : s.methods) {
          std::optional<OutageEstimate> e;
          if (m == Method::Mc)
            e = mc[k];
          else
            e = analytic_value(kind, link, m, gp, rule);
          if (!e)
            continue;
          Row r = make_row(s, gp.value, std::string(to_string(kind)), std::string(to_string(link)),
                           std::string(to_string(m)), e->probability);
          r.ci_half_width = e->ci_half_width;
          r.trials = e->trials;
          rows.push_back(std::move(r));
        }
      }
    }
  }
  return rows;
}

void threshold_params(const Scenario &s, double x, int &L, int &p) {
  L = s.fixed_L;
  p = s.fixed_p;
  (s.sweep_var == SweepVar::ThresholdP ? p : L) = static_cast<int>(x);
}

std::vector<Row> run_threshold(const Scenario &s) {
  std::vector<Row> rows;
  for (double x : s.grid) {
    int L = 0, p = 0;
    threshold_params(s, x, L, p);
    rows.push_back(make_row(s, x, "none", "none", "sfa", an::sfa_threshold(s.marcum_b, L, p).value));
    rows.push_back(make_row(s, x, "none", "none", "numeric", an::numerical_inflection(s.marcum_b, L, p)));
  }
  return rows;
}

struct EigenPair {
  std::vector<double> jakes, block; // descending
  int blocks = 0;
};

EigenPair eigen_pair(const Scenario &s, int N) {
  const BlockStructure b = derive_blocks(N, s.cfg.antenna_size, s.cfg.mu2, s.eps);
  const Eigen::VectorXd j = jakes_eigenvalues(N, s.cfg.antenna_size);
  EigenPair e;
  e.jakes.assign(j.data(), j.data() + j.size());
  e.block = block_model_eigenvalues(b, s.cfg.mu2);
  e.blocks = b.count();
  return e;
}

std::vector<Row> run_eigen(const Scenario &s) {
  std::vector<Row> rows;
  for (double x : s.grid) {
    const int N = static_cast<int>(x);
    const EigenPair e = eigen_pair(s, N);
    const std::string tag = "_n" + std::to_string(N);
    for (int k = 0; k < N; ++k) {
      Row a = make_row(s, k + 1, "none", "none", "jakes" + tag, e.jakes[k]);
      Row b = make_row(s, k + 1, "none", "none", "block" + tag, e.block[k]);
      a.sweep_var = b.sweep_var = "eigen_index";
      rows.push_back(std::move(a));
      rows.push_back(std::move(b));
    }
  }
  return rows;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.5g", x);
  return buf;
}

using RowKey = std::tuple<double, std::string, std::string, std::string>;

} // namespace

std::vector<Row> run_scenario(const Scenario &s, const McOptions &opts) {
  s.validate();
  switch (s.kind) {
  case ScenarioKind::Outage:
    return run_outage(s, opts);
  case ScenarioKind::Threshold:
    return run_threshold(s);
  case ScenarioKind::Eigen:
    return run_eigen(s);
  }
  return {};
}

bool ValidationReport::ok() const { return failures() == 0; }

std::size_t ValidationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check &c) { return !c.ok; }));
}

ValidationReport validate_scenario(const Scenario &s, const ValidateOptions &opts) {
  s.validate();
  ValidationReport rep;
  auto add = [&](std::string name, double x, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), x, ok, std::move(detail)});
  };

  if (s.kind == ScenarioKind::Threshold) {
    for (double x : s.grid) {
      int L = 0, p = 0;
      threshold_params(s, x, L, p);
      const double a = an::sfa_threshold(s.marcum_b, L, p).value;
      const double n = an::numerical_inflection(s.marcum_b, L, p);
      const double rel = std::abs(a - n) / n;
      add("sfa threshold vs inflection", x, rel <= s.tol_rel,
          "sfa " + fmt(a) + " numeric " + fmt(n) + " rel " + fmt(rel));
    }
    return rep;
  }
  if (s.kind == ScenarioKind::Eigen) {
    for (double x : s.grid) {
      const EigenPair e = eigen_pair(s, static_cast<int>(x));
      // leading eigenvalue of each block vs the top-B Jakes eigenvalues
      double num = 0.0, den = 0.0;
      for (int k = 0; k < e.blocks; ++k) {
        num += std::abs(e.block[k] - e.jakes[k]);
        den += e.jakes[k];
      }
      add("block eigenvalues vs jakes", x, num / den <= s.tol_rel,
          "B " + std::to_string(e.blocks) + " rel L1 " + fmt(num / den));
    }
    return rep;
  }

  const std::vector<Row> rows = run_outage(s, opts.mc);
  std::map<RowKey, const Row *> index;
  for (const Row &r : rows)
    index[{r.sweep_value, r.strategy, r.link, r.method}] = &r;
  auto find = [&](double x, StrategyKind k, Link l, Method m) -> const Row * {
    const auto it = index.find({x, std::string(to_string(k)), std::string(to_string(l)), std::string(to_string(m))});
    return it == index.end() ? nullptr : it->second;
  };
  const QuadratureRule &rule = specfun::gauss_laguerre_cached(s.glq_order);

  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    const double x = s.grid[i];
    for (Link link : s.links) {
      const std::string lname(to_string(link));

      // exact analytic forms against MC
      for (StrategyKind k : s.strategies) {
        const Row *mc = find(x, k, link, Method::Mc);
        if (!mc)
          continue;
        for (Method m : {Method::Glq, Method::Closed, Method::Nested}) {
          const Row *a = find(x, k, link, m);
          if (!a)
            continue;
          const double d = std::abs(a->value - mc->value);
          const double tol = std::max(s.tol_abs, s.ci_factor * mc->ci_half_width);
          add(std::string(to_string(k)) + " " + lname + " " + std::string(to_string(m)) + " vs mc", x, d <= tol,
              fmt(a->value) + " vs " + fmt(mc->value) + " |d| " + fmt(d) + " tol " + fmt(tol));
        }
      }

      // strategy orderings on the MC estimates
      if (s.check_ordering) {
        auto order = [&](StrategyKind lo, StrategyKind hi) {
          const Row *a = find(x, lo, link, Method::Mc), *b = find(x, hi, link, Method::Mc);
          if (!a || !b)
            return;
          const double slack = a->ci_half_width + b->ci_half_width;
          add(std::string(to_string(lo)) + " <= " + std::string(to_string(hi)) + " " + lname, x,
              a->value <= b->value + slack, fmt(a->value) + " vs " + fmt(b->value) + " slack " + fmt(slack));
        };
        if (link == Link::Uplink) {
          order(StrategyKind::Usps, StrategyKind::Ucps);
          order(StrategyKind::Ucps, StrategyKind::Deps);
          order(StrategyKind::Deps, StrategyKind::Dsps);
        } else {
          for (StrategyKind k : {StrategyKind::Deps, StrategyKind::Ucps, StrategyKind::Usps})
            order(StrategyKind::Dsps, k);
          if (make_grid_point(s, i, link).threshold >= 1.0)
            order(StrategyKind::Dsps, StrategyKind::FpaSc);
        }
      }

      // lower bounds against the best available estimate
      if (s.check_bounds && link == Link::Uplink) {
        const GridPoint gp = make_grid_point(s, i, link);
        const an::UplinkParams u = an::UplinkParams::from(gp.cfg, gp.threshold);
        const double hat = opts.negate_gamma_hat ? -u.gamma_hat() : u.gamma_hat();
        const int B = gp.blocks.count();
        auto bound = [&](const std::string &name, StrategyKind k, Method ref, auto &&eval) {
          const Row *r = find(x, k, link, ref);
          double slack = 1e-9;
          if (!r) {
            r = find(x, k, link, Method::Mc);
            if (r)
              slack = s.ci_factor * r->ci_half_width;
          }
          if (!r)
            return;
          try {
            const double lb = eval();
            add(name, x, lb <= r->value + slack,
                fmt(lb) + " vs " + r->method + " " + fmt(r->value));
          } catch (const DomainError &e) {
            add(name, x, false, std::string("domain error: ") + e.what());
          }
        };
        auto has = [&](Method m) { return std::find(s.methods.begin(), s.methods.end(), m) != s.methods.end(); };
        auto listed = [&](StrategyKind k) {
          return std::find(s.strategies.begin(), s.strategies.end(), k) != s.strategies.end();
        };
        if (listed(StrategyKind::Deps) && has(Method::LowerBound))
          bound("deps lower bound", StrategyKind::Deps, Method::Glq,
                [&] { return an::deps_lb_from_hat(u.M, hat, B); });
        if (listed(StrategyKind::Deps) && has(Method::LowerBoundClosed))
          bound("deps closed-form lower bound", StrategyKind::Deps, Method::Glq,
                [&] { return an::deps_lb_closed_from_hat(u.M, hat, B); });
        if (listed(StrategyKind::Ucps) && has(Method::LowerBoundClosed))
          bound("ucps lower bound", StrategyKind::Ucps, Method::Glq,
                [&] { return an::ucps_lb_from_hat(u.M, hat, B); });
        if (listed(StrategyKind::Usps) && has(Method::LowerBoundClosed))
          bound("usps lower bound", StrategyKind::Usps, Method::Nested,
                [&] { return an::usps_lb_from_hat(u.M, hat, B); });
      }
    }
  }
  return rep;
}

void print_report(std::ostream &os, const Scenario &s, const ValidationReport &r) {
  const std::string var(to_string(s.sweep_var));
  for (const Check &c : r.checks)
    os << (c.ok ? "PASS  " : "FAIL  ") << var << "=" << fmt(c.sweep_value) << "  " << c.name << "  " << c.detail
       << '\n';
  os << s.name << ": " << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks passed\n";
}

} // namespace fama
