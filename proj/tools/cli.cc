// Copyright 2026 The Hawkes-DP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hawkes_dp/branching_stats.h"
#include "hawkes_dp/complexity.h"
#include "hawkes_dp/config.h"
#include "hawkes_dp/count_series.h"
#include "hawkes_dp/csv_io.h"
#include "hawkes_dp/error.h"
#include "hawkes_dp/estimator.h"
#include "hawkes_dp/experiment.h"
#include "hawkes_dp/hawkes.h"
#include "hawkes_dp/ingest.h"
#include "hawkes_dp/privacy.h"
#include "hawkes_dp/random.h"
#include "hawkes_dp/text.h"

namespace hawkes_dp::cli {

namespace {

struct ConfigArgs {
  std::string config_path;
  std::map<std::string, std::string> overrides;
};

void AddConfigOptions(CLI::App* sub, ConfigArgs& args) {
  sub->add_option("--config", args.config_path, "key = value config file");
  for (const std::string& key : ConfigKeys()) {
    sub->add_option_function<std::string>(
        "--" + key,
        [&args, key](const std::string& v) { args.overrides[key] = v; },
        "override config key '" + key + "'");
  }
}

ExperimentConfig BuildConfig(const ConfigArgs& args) {
  ExperimentConfig config;
  if (!args.config_path.empty()) config = LoadConfigFile(args.config_path);
  for (const auto& [key, value] : args.overrides) {
    ApplyConfigValue(config, key, value);
  }
  config.Validate();
  return config;
}

std::string OutPath(const ExperimentConfig& config, const std::string& chosen,
                    const std::string& file) {
  if (!chosen.empty()) return chosen;
  return (std::filesystem::path(config.ResolvedOutDir()) / file).string();
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIoError:
    case ErrorCode::kParseError:
      return kExitIo;
    case ErrorCode::kNonConvergence:
    case ErrorCode::kHorizonTooShort:
      return kExitEstimation;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kPreconditionViolated:
    case ErrorCode::kDomainError:
    case ErrorCode::kConfigError:
      return kExitConfig;
  }
  return kExitConfig;
}

void PrintKv(std::ostream& out, const std::string& key, double value) {
  out << key << '=' << FormatDouble(value) << '\n';
}

void PrintEstimate(std::ostream& out, const EstimateResult& r,
                   const ExperimentConfig& config) {
  out << "status=" << EstimateStatusName(r.status) << '\n';
  PrintKv(out, "eta_hat", r.eta_hat);
  PrintKv(out, "sigma_sq_hat", r.sigma_sq_hat);
  PrintKv(out, "delta", r.delta);
  if (r.converged()) {
    PrintKv(out, "mu_hat", r.mu_hat);
    PrintKv(out, "alpha_hat", r.alpha_hat);
    out << "mu_in_bounds=" << (r.mu_in_bounds ? 1 : 0) << '\n';
    if (config.truth_given) {
      PrintKv(out, "err_mu", std::abs(r.mu_hat - config.params.mu) /
                                 config.params.mu);
      PrintKv(out, "err_alpha", std::abs(r.alpha_hat - config.params.alpha) /
                                    config.params.alpha);
    }
  }
  if (r.release) {
    PrintKv(out, "epsilon_total", r.release->epsilon_total);
    PrintKv(out, "gamma_total", r.release->gamma_total);
    out << "b_mode="
        << (r.release->relation_aware ? std::to_string(r.release->b) : "auto")
        << '\n';
  }
}

SensitivitySpec MakeSpec(const std::string& b_text,
                         const ExperimentConfig& config) {
  const BMode mode = BMode::Parse(b_text);
  return mode.automatic
             ? SensitivitySpec::RelationUnaware(config.bounds, config.gamma)
             : SensitivitySpec::RelationAware(mode.b, config.bounds,
                                              config.gamma);
}

PrivacyBudget PerStatisticBudget(double epsilon_total, double gamma) {
  PrivacyBudget budget{.epsilon = epsilon_total / 2.0, .gamma = gamma};
  budget.Validate();
  return budget;
}

CountSeries BinWithRule(const EventSequence& events,
                        const ExperimentConfig& config) {
  return BinEvents(events, config.delta_rule.Resolve(events.horizon()));
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Hawkes process simulation, moment estimation and "
               "differentially private release"};
  app.name("hawkes-dp");
  app.require_subcommand(1);

  ConfigArgs cfg_args;
  std::string input;
  std::string output;
  std::optional<double> epsilon;
  std::string b_text = "10";
  bool no_timing = false;
  unsigned threads = 0;

  // simulate
  auto* simulate = app.add_subcommand("simulate", "simulate an event sequence");
  std::string method = "branching";
  std::optional<double> warmup;
  AddConfigOptions(simulate, cfg_args);
  simulate->add_option("--method", method, "branching or thinning")
      ->check(CLI::IsMember({"branching", "thinning"}));
  simulate->add_option("--warmup", warmup, "burn-in length before time 0");
  simulate->add_option("-o,--output", output, "events CSV path");

  // estimate
  auto* estimate = app.add_subcommand("estimate", "estimate (mu, alpha)");
  AddConfigOptions(estimate, cfg_args);
  estimate->add_option("-i,--input", input, "events CSV")->required();
  estimate->add_option("--epsilon", epsilon, "total privacy budget");
  estimate->add_option("--b", b_text, "maximum tree size or 'auto'");
  estimate->add_option("-o,--output", output, "estimate CSV path");

  // privatize
  auto* privatize =
      app.add_subcommand("privatize", "release private mean and variance");
  AddConfigOptions(privatize, cfg_args);
  privatize->add_option("-i,--input", input, "events CSV")->required();
  privatize->add_option("--epsilon", epsilon, "total privacy budget")
      ->required();
  privatize->add_option("--b", b_text, "maximum tree size or 'auto'");
  privatize->add_option("-o,--output", output, "output key=value path");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "privacy/utility sweep");
  AddConfigOptions(sweep, cfg_args);
  sweep->add_flag("--no-timing", no_timing, "write wall_ms = 0");
  sweep->add_option("--threads", threads, "worker threads (0: all cores)");

  // time-to-threshold
  auto* ttt = app.add_subcommand("time-to-threshold",
                                 "horizon needed for a target alpha error");
  ThresholdOptions topts;
  AddConfigOptions(ttt, cfg_args);
  ttt->add_option("--threshold", topts.error_threshold,
                  "normalized alpha error target");
  ttt->add_option("--t0", topts.t0, "first horizon probed");
  ttt->add_option("--t_max", topts.t_max, "largest horizon probed");
  ttt->add_option("--threads", threads, "worker threads (0: all cores)");

  // complexity
  auto* complexity =
      app.add_subcommand("complexity", "sample-complexity bounds");
  double xi = 0.0;
  double delta_prob = 0.05;
  std::optional<double> delta_bin;
  std::optional<double> eta4;
  std::optional<double> sigma_sq;
  std::optional<double> c_const;
  std::int64_t eta4_bins = 100000;
  std::string constants = "theorem";
  bool want_private = false;
  AddConfigOptions(complexity, cfg_args);
  complexity->add_option("--xi", xi, "target precision")->required();
  complexity->add_option("--delta_prob", delta_prob, "failure probability");
  complexity->add_option("--delta_bin", delta_bin,
                         "bin width (default: delta_mode at horizon)");
  complexity->add_option("--eta4", eta4,
                         "central fourth moment (default: Monte Carlo)");
  complexity->add_option("--eta4_bins", eta4_bins, "Monte-Carlo bins");
  complexity->add_option("--sigma_sq", sigma_sq,
                         "bin variance (default: closed form at the truth)");
  complexity->add_option("--c", c_const, "private case: delta = c ln T");
  complexity->add_option("--constants", constants, "theorem or appendix")
      ->check(CLI::IsMember({"theorem", "appendix"}));
  complexity->add_flag("--private", want_private, "also evaluate the private bound");
  complexity->add_option("--epsilon", epsilon, "total privacy budget");
  complexity->add_option("--b", b_text,
                         "maximum tree size or 'auto' (private case)");
  complexity->add_option("-o,--output", output, "complexity CSV path");

  // tree-stats
  auto* trees = app.add_subcommand("tree-stats", "tree size statistics");
  AddConfigOptions(trees, cfg_args);
  trees->add_option("-i,--input", input,
                    "labeled events CSV (default: simulate)");
  trees->add_option("-o,--output", output, "tree histogram CSV path");

  // ingest
  auto* ingest = app.add_subcommand("ingest", "import raw timestamps");
  double scale = 1.0;
  AddConfigOptions(ingest, cfg_args);
  ingest->add_option("-i,--input", input, "one timestamp per line")->required();
  ingest->add_option("--scale", scale, "time unit multiplier");
  ingest->add_option("-o,--output", output, "events CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    const ExperimentConfig config = BuildConfig(cfg_args);

    if (*simulate) {
      const std::string path = OutPath(config, output, "events.csv");
      const EventSequence events =
          method == "thinning"
              ? SimulateThinning(config.params, config.horizon, config.seed,
                                 warmup)
              : SimulateBranching(config.params, config.horizon, config.seed,
                                  warmup);
      WriteEventsCsv(path, events,
                     {{"mu", FormatDouble(config.params.mu)},
                      {"alpha", FormatDouble(config.params.alpha)},
                      {"seed", std::to_string(config.seed)},
                      {"method", method},
                      {"warmup", FormatDouble(warmup.value_or(
                                     DefaultWarmup(config.params)))}});
      out << "events=" << events.size() << '\n' << "output=" << path << '\n';
      return kExitOk;
    }

    if (*estimate) {
      const EventSequence events = ReadEventsCsv(input);
      const CountSeries series = BinWithRule(events, config);
      EstimateResult result;
      if (epsilon) {
        result = PrivateEstimate(series, config.bounds, MakeSpec(b_text, config),
                                 PerStatisticBudget(*epsilon, config.gamma),
                                 config.seed);
      } else {
        result = Estimate(series, config.bounds);
      }
      const std::string path = OutPath(config, output, "estimate.csv");
      WriteEstimateCsv(path, {result});
      PrintEstimate(out, result, config);
      if (!result.converged()) {
        err << "error: NonConvergence: no root of the variance equation on "
               "the alpha bracket\n";
        return kExitEstimation;
      }
      return kExitOk;
    }

    if (*privatize) {
      const EventSequence events = ReadEventsCsv(input);
      const CountSeries series = BinWithRule(events, config);
      const SampleStats stats = ComputeSampleStats(series);
      const SensitivitySpec spec = MakeSpec(b_text, config);
      const PrivacyBudget budget = PerStatisticBudget(*epsilon, config.gamma);
      LaplaceSampler sampler(config.seed);
      const SampleStats noisy = PrivatizeStats(stats, spec, budget, series.delta,
                                               series.horizon, sampler);
      const ReleaseMetadata meta = MakeReleaseMetadata(spec, budget);
      const Metadata entries = {
          {"eta_hat", FormatDouble(stats.eta_hat)},
          {"sigma_sq_hat", FormatDouble(stats.sigma_sq_hat)},
          {"eta_private", FormatDouble(noisy.eta_hat)},
          {"sigma_sq_private", FormatDouble(noisy.sigma_sq_hat)},
          {"mean_sensitivity",
           FormatDouble(MeanSensitivity(spec, stats.k, series.horizon))},
          {"variance_sensitivity",
           FormatDouble(VarianceSensitivity(spec, stats.k, series.delta,
                                            series.horizon))},
          {"k", std::to_string(stats.k)},
          {"delta", FormatDouble(series.delta)},
          {"epsilon_total", FormatDouble(meta.epsilon_total)},
          {"gamma_total", FormatDouble(meta.gamma_total)},
          {"b_mode", BMode::Parse(b_text).Label()}};
      WriteMetadata(OutPath(config, output, "private_stats.txt"), entries);
      for (const auto& [k, v] : entries) out << k << '=' << v << '\n';
      return kExitOk;
    }

    if (*sweep) {
      const std::string dir = config.ResolvedOutDir();
      const SweepResult result =
          RunSweep(config, RunOptions{.threads = threads, .timing = !no_timing});
      const auto base = std::filesystem::path(dir);
      WriteSweepCsv((base / "sweep.csv").string(), result.records);
      WriteSweepSummaryCsv((base / "sweep_summary.csv").string(),
                           result.summary);
      WriteText((base / "plot_sweep.py").string(),
                SweepPlotScript("sweep_summary.csv"));
      WriteText((base / "sweep_config.txt").string(), FormatConfig(config));
      int converged = 0;
      for (const auto& r : result.records) converged += r.converged ? 1 : 0;
      out << "cells=" << result.records.size() << '\n'
          << "converged=" << converged << '\n'
          << "delta=" << FormatDouble(result.delta) << '\n'
          << "output=" << (base / "sweep.csv").string() << '\n';
      if (converged == 0) {
        err << "error: every sweep cell failed\n";
        return kExitEstimation;
      }
      return kExitOk;
    }

    if (*ttt) {
      const auto rows =
          RunTimeToThreshold(config, topts, RunOptions{.threads = threads});
      const auto base = std::filesystem::path(config.ResolvedOutDir());
      WriteThresholdCsv((base / "time_to_threshold.csv").string(), rows);
      WriteText((base / "plot_time_to_threshold.py").string(),
                ThresholdPlotScript("time_to_threshold.csv"));
      for (const auto& r : rows) {
        out << "epsilon=" << FormatDouble(r.epsilon) << " b=" << r.b_mode
            << " required_t="
            << (r.cap_reached ? std::string("cap") : FormatDouble(r.required_t))
            << '\n';
      }
      return kExitOk;
    }

    if (*complexity) {
      ComplexityInputs in;
      in.bounds = config.bounds;
      in.xi = xi;
      in.delta_prob = delta_prob;
      in.delta_bin = delta_bin.value_or(config.delta_rule.Resolve(config.horizon));
      in.c = c_const;
      in.constants = constants == "appendix" ? ConstantSet::kAppendix
                                             : ConstantSet::kTheorem;
      in.sigma_sq = sigma_sq.value_or(
          ComputeTheoreticalMoments(config.params, in.delta_bin).sigma_sq);
      if (eta4) {
        in.eta4 = *eta4;
      } else {
        const Eta4Estimate est =
            EstimateEta4(config.params, in.delta_bin, eta4_bins, config.seed);
        in.eta4 = est.eta4;
        PrintKv(out, "eta4_monte_carlo", est.eta4);
        PrintKv(out, "eta4_std_error", est.std_error);
      }
      PrintKv(out, "c9", C9Constant(in.bounds, in.constants));
      PrintKv(out, "required_t_mean",
              RequiredTMean(in.sigma_sq, xi, delta_prob, in.delta_bin));
      const ComplexityReport report = RequiredTNonPrivate(in);
      WriteComplexityCsv(OutPath(config, output, "complexity.csv"), report);
      PrintKv(out, "required_t_nonprivate", report.required_t);
      out << "binding_nonprivate=" << report.binding_term << '\n';
      if (want_private) {
        const BMode mode = BMode::Parse(b_text);
        const ComplexityReport priv = RequiredTPrivate(
            in, PerStatisticBudget(epsilon.value_or(2.0), config.gamma),
            mode.automatic ? std::nullopt : std::optional(mode.b));
        const auto path = std::filesystem::path(
            OutPath(config, output, "complexity.csv"));
        WriteComplexityCsv(
            (path.parent_path() / (path.stem().string() + "_private.csv"))
                .string(),
            priv);
        PrintKv(out, "required_t_private", priv.required_t);
        out << "binding_private=" << priv.binding_term << '\n';
      }
      return kExitOk;
    }

    if (*trees) {
      const EventSequence events =
          input.empty()
              ? SimulateBranching(config.params, config.horizon, config.seed)
              : ReadEventsCsv(input);
      const TreeStats stats = ComputeTreeSizes(events);
      WriteTreeHistogramCsv(OutPath(config, output, "tree_stats.csv"),
                            stats.Histogram());
      out << "num_trees=" << stats.num_trees() << '\n'
          << "max_size=" << stats.max_size() << '\n';
      PrintKv(out, "mean_size", stats.mean_size());
      PrintKv(out, "borel_mean", 1.0 / (1.0 - config.params.alpha));
      if (events.horizon() > 1.0) {
        PrintKv(out, "tree_bound",
                TreeBound(config.bounds.alpha_upper, events.horizon()));
      }
      out << "horizon_valid="
          << (ValidateHorizon(config.bounds.mu_upper, config.gamma,
                              events.horizon())
                  ? 1
                  : 0)
          << '\n';
      return kExitOk;
    }

    if (*ingest) {
      const IngestResult result = IngestTimestamps(input, scale);
      for (const auto& w : result.warnings) err << "warning: " << w << '\n';
      const std::string path = OutPath(config, output, "events.csv");
      WriteEventsCsv(path, result.events,
                     {{"source", input}, {"scale", FormatDouble(scale)}});
      out << "events=" << result.events.size() << '\n';
      PrintKv(out, "horizon", result.events.horizon());
      out << "output=" << path << '\n';
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace hawkes_dp::cli
