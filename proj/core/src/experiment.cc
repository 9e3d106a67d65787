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

#include "hawkes_dp/experiment.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <optional>

#include "hawkes_dp/count_series.h"
#include "hawkes_dp/csv_io.h"
#include "hawkes_dp/error.h"
#include "hawkes_dp/estimator.h"
#include "hawkes_dp/hawkes.h"
#include "hawkes_dp/privacy.h"
#include "hawkes_dp/random.h"
#include "hawkes_dp/text.h"

namespace hawkes_dp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr std::uint64_t kNoiseStream = 0x6e6f697365ULL;

struct Cell {
  double epsilon;  // total; inf for the baseline
  std::optional<BMode> b;
  std::string Label() const { return b ? b->Label() : "none"; }
};

std::vector<Cell> SweepCells(const ExperimentConfig& config) {
  std::vector<Cell> cells = {{kInf, std::nullopt}};
  for (double eps : config.epsilons) {
    for (const BMode& b : config.b_values) cells.push_back({eps, b});
  }
  return cells;
}

// Runs one cell on already-binned data. Privacy noise comes from the two
// uniforms u_mean, u_var shared across cells of a repetition.
SweepRecord RunCell(const ExperimentConfig& config, const Cell& cell,
                    const CountSeries& series, const SampleStats& stats,
                    double u_mean, double u_var, double horizon) {
  SweepRecord rec;
  rec.epsilon = cell.epsilon;
  rec.b_mode = cell.Label();
  rec.mu_hat = kNan;
  rec.alpha_hat = kNan;
  rec.err_mu = kNan;
  rec.err_alpha = kNan;
  try {
    SampleStats used = stats;
    if (cell.b) {
      const SensitivitySpec spec =
          cell.b->automatic
              ? SensitivitySpec::RelationUnaware(config.bounds, config.gamma)
              : SensitivitySpec::RelationAware(cell.b->b, config.bounds,
                                               config.gamma);
      if (spec.mode == SensitivityMode::kRelationUnaware &&
          !ValidateHorizon(spec.mu_upper, config.gamma, horizon)) {
        Fail(ErrorCode::kHorizonTooShort, "horizon below threshold");
      }
      const double eps = cell.epsilon / 2.0;
      used.eta_hat += LaplaceSampler::FromUniform(
          u_mean, MeanSensitivity(spec, stats.k, horizon) / eps);
      used.sigma_sq_hat += LaplaceSampler::FromUniform(
          u_var, VarianceSensitivity(spec, stats.k, series.delta, horizon) / eps);
    }
    if (!(used.eta_hat > 0.0)) {
      rec.failure = "NonConvergence";
      return rec;
    }
    const EstimateResult est =
        InvertMoments(used.eta_hat, used.sigma_sq_hat, series.delta, config.bounds);
    if (!est.converged()) {
      rec.failure = "NonConvergence";
      return rec;
    }
    rec.converged = true;
    rec.mu_hat = est.mu_hat;
    rec.alpha_hat = est.alpha_hat;
    rec.err_mu = std::abs(est.mu_hat - config.params.mu) / config.params.mu;
    rec.err_alpha =
        std::abs(est.alpha_hat - config.params.alpha) / config.params.alpha;
  } catch (const Error& e) {
    rec.failure = std::string(ErrorCodeName(e.code()));
  }
  return rec;
}

double Median(std::vector<double> v) { return Percentile(std::move(v), 0.5); }

double ElapsedMs(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

double Percentile(std::vector<double> values, double q) {
  if (values.empty()) return kNan;
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto i = static_cast<std::size_t>(std::floor(pos));
  if (i + 1 >= values.size()) return values.back();
  const double frac = pos - static_cast<double>(i);
  if (frac == 0.0) return values[i];
  return values[i] + frac * (values[i + 1] - values[i]);
}

SweepResult RunSweep(const ExperimentConfig& config, const RunOptions& options) {
  config.Validate();
  const std::vector<Cell> cells = SweepCells(config);
  const double delta = config.delta_rule.Resolve(config.horizon);

  auto per_rep = ParallelMap(
      static_cast<std::size_t>(config.repetitions),
      [&](std::size_t rep) {
        const std::uint64_t seed = MixSeed(config.seed, {rep});
        const EventSequence events =
            SimulateThinning(config.params, config.horizon, seed);
        const CountSeries series = BinEvents(events, delta);
        const SampleStats stats = ComputeSampleStats(series);
        Rng noise(MixSeed(config.seed, {rep, kNoiseStream}));
        const double u_mean = noise.Uniform();
        const double u_var = noise.Uniform();
        std::vector<SweepRecord> out;
        out.reserve(cells.size());
        for (const Cell& cell : cells) {
          const auto start = std::chrono::steady_clock::now();
          SweepRecord rec = RunCell(config, cell, series, stats, u_mean, u_var,
                                    series.horizon);
          rec.rep = static_cast<int>(rep);
          rec.seed = seed;
          rec.wall_ms = options.timing ? ElapsedMs(start) : 0.0;
          out.push_back(std::move(rec));
        }
        return out;
      },
      options.threads);

  SweepResult result;
  result.delta = delta;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (const auto& rep_records : per_rep) {
      result.records.push_back(rep_records[c]);
    }
  }
  result.summary = SummarizeSweep(result.records);
  return result;
}

std::vector<SweepSummaryRow> SummarizeSweep(
    const std::vector<SweepRecord>& records) {
  std::vector<SweepSummaryRow> rows;
  std::map<std::pair<double, std::string>, std::size_t> index;
  std::vector<std::vector<double>> mu_errs;
  std::vector<std::vector<double>> alpha_errs;
  for (const auto& r : records) {
    const auto key = std::make_pair(r.epsilon, r.b_mode);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, rows.size()).first;
      rows.push_back({.epsilon = r.epsilon, .b_mode = r.b_mode});
      mu_errs.emplace_back();
      alpha_errs.emplace_back();
    }
    SweepSummaryRow& row = rows[it->second];
    ++row.n;
    if (r.converged) {
      ++row.n_converged;
      mu_errs[it->second].push_back(r.err_mu);
      alpha_errs[it->second].push_back(r.err_alpha);
    }
  }
  auto mean = [](const std::vector<double>& v) {
    return v.empty() ? kNan
                     : std::accumulate(v.begin(), v.end(), 0.0) /
                           static_cast<double>(v.size());
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].mean_err_mu = mean(mu_errs[i]);
    rows[i].lo_err_mu = Percentile(mu_errs[i], 0.025);
    rows[i].hi_err_mu = Percentile(mu_errs[i], 0.975);
    rows[i].mean_err_alpha = mean(alpha_errs[i]);
    rows[i].lo_err_alpha = Percentile(alpha_errs[i], 0.025);
    rows[i].hi_err_alpha = Percentile(alpha_errs[i], 0.975);
  }
  return rows;
}

std::vector<ThresholdRecord> RunTimeToThreshold(
    const ExperimentConfig& config, const ThresholdOptions& threshold,
    const RunOptions& options) {
  config.Validate();
  if (!(threshold.error_threshold > 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "error threshold must be positive");
  }
  if (!(threshold.t0 > 1.0 && threshold.t0 <= threshold.t_max &&
        std::isfinite(threshold.t_max))) {
    Fail(ErrorCode::kInvalidArgument, "need 1 < t0 <= t_max < inf");
  }
  std::vector<double> probes;
  for (double t = threshold.t0; t < threshold.t_max; t *= 2.0) probes.push_back(t);
  probes.push_back(threshold.t_max);

  std::vector<Cell> cells = SweepCells(config);
  cells.erase(cells.begin());  // the baseline has no epsilon to order by
  std::vector<ThresholdRecord> records(cells.size());
  std::vector<bool> done(cells.size(), false);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    records[c].epsilon = cells[c].epsilon;
    records[c].b_mode = cells[c].Label();
    records[c].required_t = kNan;
    records[c].cap_reached = true;
  }

  for (double t : probes) {
    const double delta = config.delta_rule.Resolve(t);
    const auto rep_errors = ParallelMap(
        static_cast<std::size_t>(config.repetitions),
        [&](std::size_t rep) {
          const auto t_key = static_cast<std::uint64_t>(std::llround(t));
          const EventSequence events = SimulateThinning(
              config.params, t, MixSeed(config.seed, {rep, t_key}));
          const CountSeries series = BinEvents(events, delta);
          const SampleStats stats = ComputeSampleStats(series);
          Rng noise(MixSeed(config.seed, {rep, t_key, kNoiseStream}));
          const double u_mean = noise.Uniform();
          const double u_var = noise.Uniform();
          std::vector<double> errs(cells.size(), kInf);
          for (std::size_t c = 0; c < cells.size(); ++c) {
            if (done[c]) continue;
            const SweepRecord rec = RunCell(config, cells[c], series, stats,
                                            u_mean, u_var, series.horizon);
            if (rec.converged) errs[c] = rec.err_alpha;
          }
          return errs;
        },
        options.threads);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (done[c]) continue;
      std::vector<double> errs;
      for (const auto& e : rep_errors) errs.push_back(e[c]);
      const double med = Median(errs);
      records[c].median_err_alpha = med;
      if (med <= threshold.error_threshold) {
        records[c].required_t = t;
        records[c].cap_reached = false;
        done[c] = true;
      }
    }
    if (std::all_of(done.begin(), done.end(), [](bool d) { return d; })) break;
  }
  return records;
}

void WriteSweepCsv(const std::string& path,
                   const std::vector<SweepRecord>& records) {
  std::string text = std::string(kSweepHeader) + "\n";
  for (const auto& r : records) {
    text += FormatDouble(r.epsilon) + "," + r.b_mode + "," +
            std::to_string(r.rep) + "," + std::to_string(r.seed) + "," +
            FormatDouble(r.mu_hat) + "," + FormatDouble(r.alpha_hat) + "," +
            FormatDouble(r.err_mu) + "," + FormatDouble(r.err_alpha) + "," +
            (r.converged ? "1" : "0") + "," + FormatDouble(r.wall_ms) + "\n";
  }
  WriteText(path, text);
}

std::vector<SweepRecord> ReadSweepCsv(const std::string& path) {
  const auto lines = ReadLines(path);
  if (lines.empty() || lines[0] != kSweepHeader) {
    Fail(ErrorCode::kParseError, path + ":1: expected sweep header");
  }
  std::vector<SweepRecord> records;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (Trim(lines[i]).empty()) continue;
    const auto f = Split(lines[i], ',');
    auto bad = [&] {
      Fail(ErrorCode::kParseError,
           path + ":" + std::to_string(i + 1) + ": malformed sweep row");
    };
    if (f.size() != 10) bad();
    SweepRecord r;
    const auto eps = ParseDouble(f[0]);
    const auto rep = ParseInt(f[2]);
    const auto seed = ParseUint(f[3]);
    const auto mu = ParseDouble(f[4]);
    const auto alpha = ParseDouble(f[5]);
    const auto em = ParseDouble(f[6]);
    const auto ea = ParseDouble(f[7]);
    const auto conv = ParseInt(f[8]);
    const auto ms = ParseDouble(f[9]);
    if (!eps || !rep || !seed || !mu || !alpha || !em || !ea || !conv || !ms) {
      bad();
    }
    r.epsilon = *eps;
    r.b_mode = std::string(Trim(f[1]));
    r.rep = static_cast<int>(*rep);
    r.seed = *seed;
    r.mu_hat = *mu;
    r.alpha_hat = *alpha;
    r.err_mu = *em;
    r.err_alpha = *ea;
    r.converged = *conv != 0;
    r.wall_ms = *ms;
    records.push_back(std::move(r));
  }
  return records;
}

void WriteSweepSummaryCsv(const std::string& path,
                          const std::vector<SweepSummaryRow>& rows) {
  std::string text =
      "epsilon,b_mode,n,n_converged,mean_err_mu,lo_err_mu,hi_err_mu,"
      "mean_err_alpha,lo_err_alpha,hi_err_alpha\n";
  for (const auto& r : rows) {
    text += FormatDouble(r.epsilon) + "," + r.b_mode + "," +
            std::to_string(r.n) + "," + std::to_string(r.n_converged) + "," +
            FormatDouble(r.mean_err_mu) + "," + FormatDouble(r.lo_err_mu) + "," +
            FormatDouble(r.hi_err_mu) + "," + FormatDouble(r.mean_err_alpha) +
            "," + FormatDouble(r.lo_err_alpha) + "," +
            FormatDouble(r.hi_err_alpha) + "\n";
  }
  WriteText(path, text);
}

void WriteThresholdCsv(const std::string& path,
                       const std::vector<ThresholdRecord>& rows) {
  std::string text = "epsilon,b_mode,required_t,cap_reached,median_err_alpha\n";
  for (const auto& r : rows) {
    text += FormatDouble(r.epsilon) + "," + r.b_mode + "," +
            FormatDouble(r.required_t) + "," + (r.cap_reached ? "1" : "0") +
            "," + FormatDouble(r.median_err_alpha) + "\n";
  }
  WriteText(path, text);
}

std::vector<ThresholdRecord> ReadThresholdCsv(const std::string& path) {
  const auto lines = ReadLines(path);
  std::vector<ThresholdRecord> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (Trim(lines[i]).empty()) continue;
    const auto f = Split(lines[i], ',');
    const auto eps = f.size() == 5 ? ParseDouble(f[0]) : std::nullopt;
    const auto t = f.size() == 5 ? ParseDouble(f[2]) : std::nullopt;
    const auto cap = f.size() == 5 ? ParseInt(f[3]) : std::nullopt;
    const auto med = f.size() == 5 ? ParseDouble(f[4]) : std::nullopt;
    if (!eps || !t || !cap || !med) {
      Fail(ErrorCode::kParseError,
           path + ":" + std::to_string(i + 1) + ": malformed row");
    }
    rows.push_back({*eps, std::string(Trim(f[1])), *t, *cap != 0, *med});
  }
  return rows;
}

std::string SweepPlotScript(const std::string& summary_csv) {
  return R"PY(#!/usr/bin/env python3
"""Normalized estimation error against the privacy budget, one line per B."""
import csv
import math
import os
import sys

import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))
path = sys.argv[1] if len(sys.argv) > 1 else os.path.join(here, ")PY" +
         summary_csv + R"PY(")
rows = list(csv.DictReader(open(path)))
fig, axes = plt.subplots(1, 2, figsize=(10, 4), sharex=True)
for ax, key in zip(axes, ("alpha", "mu")):
    baseline = [r for r in rows if r["b_mode"] == "none"]
    for b in sorted({r["b_mode"] for r in rows} - {"none"}):
        sel = sorted((r for r in rows if r["b_mode"] == b),
                     key=lambda r: float(r["epsilon"]))
        sel = [r for r in sel if not math.isnan(float(r["mean_err_" + key]))]
        if not sel:
            continue
        eps = [float(r["epsilon"]) for r in sel]
        ax.plot(eps, [float(r["mean_err_" + key]) for r in sel], label="B=" + b)
        ax.fill_between(eps, [float(r["lo_err_" + key]) for r in sel],
                        [float(r["hi_err_" + key]) for r in sel], alpha=0.2)
    if baseline:
        ax.axhline(float(baseline[0]["mean_err_" + key]), color="k",
                   linestyle="--", label="non-private")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("epsilon (total)")
    ax.set_ylabel("E_" + key)
    ax.legend()
fig.tight_layout()
fig.savefig(os.path.join(here, "sweep.png"), dpi=150)
)PY";
}

std::string ThresholdPlotScript(const std::string& threshold_csv) {
  return R"PY(#!/usr/bin/env python3
"""Median horizon needed to reach the alpha-error threshold."""
import csv
import math
import os
import sys

import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))
path = sys.argv[1] if len(sys.argv) > 1 else os.path.join(here, ")PY" +
         threshold_csv + R"PY(")
rows = list(csv.DictReader(open(path)))
fig, ax = plt.subplots(figsize=(5, 4))
for b in sorted({r["b_mode"] for r in rows}):
    sel = sorted((r for r in rows if r["b_mode"] == b),
                 key=lambda r: float(r["epsilon"]))
    sel = [r for r in sel if not math.isnan(float(r["required_t"]))]
    if sel:
        ax.plot([float(r["epsilon"]) for r in sel],
                [float(r["required_t"]) for r in sel], marker="o",
                label="B=" + b)
ax.set_xscale("log")
ax.set_yscale("log")
ax.set_xlabel("epsilon (total)")
ax.set_ylabel("required T")
ax.legend()
fig.tight_layout()
fig.savefig(os.path.join(here, "time_to_threshold.png"), dpi=150)
)PY";
}

}  // namespace hawkes_dp
