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

#include "fama/errors.hpp"
#include "fama/report.hpp"
#include "fama/scenario.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

namespace {

enum Exit { kOk = 0, kInternal = 1, kConfig = 2, kValidation = 3, kIo = 4 };

struct Overrides {
  std::string scenario;
  std::optional<long> trials;
  std::optional<long> seed;
  std::optional<int> glq_order;
  std::optional<double> eps;
  int threads = 0;
};

void add_common(CLI::App *cmd, Overrides &o) {
  cmd->add_option("--scenario", o.scenario, "built-in name (fig3..fig12) or scenario file")->required();
  cmd->add_option("--trials", o.trials, "Monte Carlo trials per grid point");
  cmd->add_option("--seed", o.seed, "base seed");
  cmd->add_option("--glq-order", o.glq_order, "Gauss-Laguerre order (1..256)");
  cmd->add_option("--eps", o.eps, "eigenvalue threshold for the block count");
  cmd->add_option("--threads", o.threads, "OpenMP threads (0: runtime default)");
}

fama::Scenario load(const Overrides &o) {
  fama::Scenario s = fama::load_scenario(o.scenario);
  if (o.trials)
    s.trials = *o.trials;
  if (o.seed) {
    if (*o.seed < 0)
      throw fama::ConfigError("--seed must be >= 0");
    s.seed = static_cast<std::uint64_t>(*o.seed);
  }
  if (o.glq_order)
    s.glq_order = *o.glq_order;
  if (o.eps)
    s.eps = *o.eps;
  if (o.threads < 0)
    throw fama::ConfigError("--threads must be >= 0");
  s.validate();
  return s;
}

std::string default_output(const fama::Scenario &s) {
  const char *dir = std::getenv("FAMA_OUTPUT_DIR");
  const std::filesystem::path base = dir && *dir ? dir : ".";
  return (base / (s.name + ".csv")).string();
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"fama: outage analysis for fluid-antenna wireless-powered multiple access"};
  app.require_subcommand(1);

  Overrides run_o, val_o;
  std::string out, format = "csv";
  auto *run = app.add_subcommand("run", "evaluate a scenario and write CSV (and SVG)");
  add_common(run, run_o);
  run->add_option("--out", out, "output CSV path (default: $FAMA_OUTPUT_DIR/<name>.csv)");
  run->add_option("--format", format, "csv or csv+svg")->check(CLI::IsMember({"csv", "csv+svg"}));

  std::optional<double> tolerance;
  bool negate_hat = false;
  auto *validate = app.add_subcommand("validate", "compare analytic results with Monte Carlo");
  add_common(validate, val_o);
  validate->add_option("--tolerance", tolerance, "absolute analytic-vs-MC tolerance (overrides tol_abs)");
  validate->add_flag("--negate-gamma-hat", negate_hat, "evaluate lower bounds at -gamma_hat (error-path check)");

  auto *list = app.add_subcommand("list", "print the built-in scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  try {
    if (list->parsed()) {
      for (const auto &n : fama::builtin_scenario_names())
        std::cout << n << '\n';
      return kOk;
    }
    if (run->parsed()) {
      const fama::Scenario s = load(run_o);
      const std::string path = out.empty() ? default_output(s) : out;
      const auto rows = fama::run_scenario(s, {fama::ChannelModel::Block, run_o.threads});
      fama::write_csv(path, rows);
      if (format == "csv+svg") {
        std::filesystem::path svg(path);
        svg.replace_extension(".svg");
        fama::write_svg(svg.string(), rows, s.name);
      }
      std::cerr << s.name << ": " << rows.size() << " rows -> " << path << '\n';
      return kOk;
    }
    fama::Scenario s = load(val_o);
    if (tolerance) {
      s.tol_abs = *tolerance;
      s.validate();
    }
    fama::ValidateOptions opts;
    opts.mc.threads = val_o.threads;
    opts.negate_gamma_hat = negate_hat;
    const auto report = fama::validate_scenario(s, opts);
    fama::print_report(std::cout, s, report);
    return report.ok() ? kOk : kValidation;
  } catch (const fama::ConfigError &e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const fama::DomainError &e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const fama::ModelError &e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const fama::IoError &e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
}
