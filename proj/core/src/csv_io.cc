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

#include "hawkes_dp/csv_io.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "hawkes_dp/error.h"
#include "hawkes_dp/text.h"

namespace hawkes_dp {

namespace {

constexpr const char* kEventsHeader = "timestamp,tree_id,parent_idx";
constexpr const char* kCountsHeader = "bin_index,count";
constexpr const char* kTreeHeader = "tree_size,count";
constexpr const char* kComplexityHeader = "term_label,value,binding";

[[noreturn]] void ParseFail(const std::string& path, std::size_t line,
                            const std::string& what) {
  Fail(ErrorCode::kParseError,
       path + ":" + std::to_string(line) + ": " + what);
}

void ExpectHeader(const std::string& path, const std::vector<std::string>& lines,
                  std::size_t index, const char* header) {
  if (index >= lines.size() || Trim(lines[index]) != header) {
    ParseFail(path, index + 1, std::string("expected header '") + header + "'");
  }
}

std::vector<std::string_view> Fields(const std::string& path,
                                     const std::string& line, std::size_t n,
                                     std::size_t line_no) {
  auto fields = Split(Trim(line), ',');
  if (fields.size() != n) {
    ParseFail(path, line_no,
              "expected " + std::to_string(n) + " fields, got " +
                  std::to_string(fields.size()));
  }
  return fields;
}

double FieldDouble(const std::string& path, std::string_view s,
                   std::size_t line_no) {
  const auto x = ParseDouble(s);
  if (!x) ParseFail(path, line_no, "not a number: '" + std::string(s) + "'");
  return *x;
}

std::int64_t FieldInt(const std::string& path, std::string_view s,
                      std::size_t line_no) {
  const auto x = ParseInt(s);
  if (!x) ParseFail(path, line_no, "not an integer: '" + std::string(s) + "'");
  return *x;
}

bool IsBlank(const std::string& line) { return Trim(line).empty(); }

std::ofstream OpenOut(const std::string& path) {
  EnsureParentDir(path);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(ErrorCode::kIoError, "cannot open " + path + " for writing");
  return out;
}

void Close(std::ofstream& out, const std::string& path) {
  out.close();
  if (!out) Fail(ErrorCode::kIoError, "write failed for " + path);
}

}  // namespace

void EnsureDir(const std::string& dir) {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) Fail(ErrorCode::kIoError, "cannot create directory " + dir);
}

void EnsureParentDir(const std::string& path) {
  EnsureDir(std::filesystem::path(path).parent_path().string());
}

std::vector<std::string> ReadLines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIoError, "cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  if (in.bad()) Fail(ErrorCode::kIoError, "read failed for " + path);
  return lines;
}

void WriteText(const std::string& path, const std::string& text) {
  auto out = OpenOut(path);
  out << text;
  Close(out, path);
}

void WriteMetadata(const std::string& path, const Metadata& entries) {
  std::string text;
  for (const auto& [k, v] : entries) text += k + "=" + v + "\n";
  WriteText(path, text);
}

Metadata ReadMetadata(const std::string& path) {
  Metadata entries;
  const auto lines = ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (IsBlank(lines[i])) continue;
    const auto eq = lines[i].find('=');
    if (eq == std::string::npos) ParseFail(path, i + 1, "expected key=value");
    entries.emplace_back(std::string(Trim(lines[i].substr(0, eq))),
                         std::string(Trim(lines[i].substr(eq + 1))));
  }
  return entries;
}

std::optional<std::string> FindMetadata(const Metadata& entries,
                                        const std::string& key) {
  for (const auto& [k, v] : entries) {
    if (k == key) return v;
  }
  return std::nullopt;
}

void WriteEventsCsv(const std::string& path, const EventSequence& events,
                    const Metadata& extra) {
  auto out = OpenOut(path);
  out << kEventsHeader << '\n';
  const auto ts = events.timestamps();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    out << FormatDouble(ts[i]) << ',';
    if (events.labeled()) {
      out << events.tree_ids()[i] << ',';
      if (const auto& p = events.parent_indices()[i]) out << *p;
    } else {
      out << ',';
    }
    out << '\n';
  }
  Close(out, path);
  Metadata meta = {{"horizon", FormatDouble(events.horizon())},
                   {"num_events", std::to_string(events.size())}};
  meta.insert(meta.end(), extra.begin(), extra.end());
  WriteMetadata(path + ".meta", meta);
}

EventSequence ReadEventsCsv(const std::string& path,
                            std::optional<double> horizon) {
  const auto lines = ReadLines(path);
  ExpectHeader(path, lines, 0, kEventsHeader);
  std::vector<double> times;
  std::vector<std::int64_t> trees;
  std::vector<std::optional<std::size_t>> parents;
  bool labeled = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (IsBlank(lines[i])) continue;
    const auto f = Fields(path, lines[i], 3, i + 1);
    times.push_back(FieldDouble(path, f[0], i + 1));
    const bool has_tree = !Trim(f[1]).empty();
    if (times.size() == 1) labeled = has_tree;
    if (has_tree != labeled) ParseFail(path, i + 1, "mixed labeled rows");
    if (!labeled) continue;
    trees.push_back(FieldInt(path, f[1], i + 1));
    if (Trim(f[2]).empty()) {
      parents.emplace_back();
    } else {
      const auto p = FieldInt(path, f[2], i + 1);
      if (p < 0) ParseFail(path, i + 1, "negative parent index");
      parents.emplace_back(static_cast<std::size_t>(p));
    }
  }
  if (!horizon) {
    const std::string meta_path = path + ".meta";
    if (std::filesystem::exists(meta_path)) {
      if (auto h = FindMetadata(ReadMetadata(meta_path), "horizon")) {
        horizon = ParseDouble(*h);
      }
    }
  }
  const double t_end = horizon ? *horizon : (times.empty() ? 0.0 : times.back());
  try {
    if (labeled) {
      return EventSequence(std::move(times), std::move(trees),
                           std::move(parents), t_end);
    }
    return EventSequence(std::move(times), t_end);
  } catch (const Error& e) {
    Fail(ErrorCode::kParseError, path + ": " + e.what());
  }
}

void WriteCountsCsv(const std::string& path, const CountSeries& series) {
  auto out = OpenOut(path);
  out << "# delta=" << FormatDouble(series.delta)
      << " horizon=" << FormatDouble(series.horizon) << '\n'
      << kCountsHeader << '\n';
  for (std::size_t i = 0; i < series.counts.size(); ++i) {
    out << i << ',' << series.counts[i] << '\n';
  }
  Close(out, path);
}

CountSeries ReadCountsCsv(const std::string& path) {
  const auto lines = ReadLines(path);
  if (lines.empty() || !lines[0].starts_with("# ")) {
    ParseFail(path, 1, "expected '# delta=<d> horizon=<T>'");
  }
  std::optional<double> delta;
  std::optional<double> horizon;
  for (auto token : Split(Trim(std::string_view(lines[0]).substr(2)), ' ')) {
    if (token.starts_with("delta=")) delta = ParseDouble(token.substr(6));
    if (token.starts_with("horizon=")) horizon = ParseDouble(token.substr(8));
  }
  if (!delta || !horizon) ParseFail(path, 1, "missing delta or horizon");
  ExpectHeader(path, lines, 1, kCountsHeader);
  CountSeries series;
  series.delta = *delta;
  series.horizon = *horizon;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    if (IsBlank(lines[i])) continue;
    const auto f = Fields(path, lines[i], 2, i + 1);
    if (FieldInt(path, f[0], i + 1) !=
        static_cast<std::int64_t>(series.counts.size())) {
      ParseFail(path, i + 1, "bin indices must be consecutive from 0");
    }
    series.counts.push_back(FieldInt(path, f[1], i + 1));
  }
  try {
    series.Validate();
  } catch (const Error& e) {
    Fail(ErrorCode::kParseError, path + ": " + e.what());
  }
  return series;
}

void WriteTreeHistogramCsv(const std::string& path,
                           const std::map<std::int64_t, std::int64_t>& hist) {
  auto out = OpenOut(path);
  out << kTreeHeader << '\n';
  for (const auto& [size, count] : hist) out << size << ',' << count << '\n';
  Close(out, path);
}

std::map<std::int64_t, std::int64_t> ReadTreeHistogramCsv(
    const std::string& path) {
  const auto lines = ReadLines(path);
  ExpectHeader(path, lines, 0, kTreeHeader);
  std::map<std::int64_t, std::int64_t> hist;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (IsBlank(lines[i])) continue;
    const auto f = Fields(path, lines[i], 2, i + 1);
    hist[FieldInt(path, f[0], i + 1)] = FieldInt(path, f[1], i + 1);
  }
  return hist;
}

void WriteComplexityCsv(const std::string& path,
                        const ComplexityReport& report) {
  auto out = OpenOut(path);
  out << kComplexityHeader << '\n';
  for (const auto& term : report.terms) {
    out << term.label << ',' << FormatDouble(term.value) << ','
        << (term.label == report.binding_term ? 1 : 0) << '\n';
  }
  Close(out, path);
}

ComplexityReport ReadComplexityCsv(const std::string& path) {
  const auto lines = ReadLines(path);
  ExpectHeader(path, lines, 0, kComplexityHeader);
  ComplexityReport report;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (IsBlank(lines[i])) continue;
    const auto f = Fields(path, lines[i], 3, i + 1);
    ComplexityTerm term{std::string(Trim(f[0])), FieldDouble(path, f[1], i + 1)};
    if (FieldInt(path, f[2], i + 1) == 1) {
      report.binding_term = term.label;
      report.required_t = term.value;
    }
    report.terms.push_back(std::move(term));
  }
  if (report.terms.empty()) ParseFail(path, 2, "no terms");
  return report;
}

void WriteEstimateCsv(const std::string& path,
                      const std::vector<EstimateResult>& results) {
  auto out = OpenOut(path);
  out << kEstimateHeader << '\n';
  constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& r : results) {
    const bool ok = r.converged();
    out << FormatDouble(ok ? r.mu_hat : kNan) << ','
        << FormatDouble(ok ? r.alpha_hat : kNan) << ','
        << FormatDouble(r.eta_hat) << ',' << FormatDouble(r.sigma_sq_hat) << ','
        << FormatDouble(r.delta) << ',' << EstimateStatusName(r.status) << ','
        << r.iterations << ',' << FormatDouble(r.residual) << ',';
    if (r.release) {
      out << FormatDouble(r.release->epsilon_total) << ','
          << FormatDouble(r.release->gamma_total) << ','
          << (r.release->relation_aware ? std::to_string(r.release->b) : "auto");
    } else {
      out << "inf,0,none";
    }
    out << '\n';
  }
  Close(out, path);
}

std::vector<EstimateResult> ReadEstimateCsv(const std::string& path) {
  const auto lines = ReadLines(path);
  ExpectHeader(path, lines, 0, kEstimateHeader);
  std::vector<EstimateResult> results;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (IsBlank(lines[i])) continue;
    const auto f = Fields(path, lines[i], 11, i + 1);
    const std::size_t n = i + 1;
    EstimateResult r;
    r.mu_hat = FieldDouble(path, f[0], n);
    r.alpha_hat = FieldDouble(path, f[1], n);
    r.eta_hat = FieldDouble(path, f[2], n);
    r.sigma_sq_hat = FieldDouble(path, f[3], n);
    r.delta = FieldDouble(path, f[4], n);
    const auto status = Trim(f[5]);
    if (status == "converged") {
      r.status = EstimateStatus::kConverged;
    } else if (status == "boundary") {
      r.status = EstimateStatus::kBoundary;
    } else if (status == "nonconvergence") {
      r.status = EstimateStatus::kNonConvergence;
    } else {
      ParseFail(path, n, "unknown status '" + std::string(status) + "'");
    }
    r.iterations = static_cast<int>(FieldInt(path, f[6], n));
    r.residual = FieldDouble(path, f[7], n);
    const auto b_mode = Trim(f[10]);
    if (b_mode != "none") {
      ReleaseMetadata meta;
      meta.epsilon_total = FieldDouble(path, f[8], n);
      meta.gamma_total = FieldDouble(path, f[9], n);
      meta.relation_aware = b_mode != "auto";
      meta.b = meta.relation_aware ? FieldInt(path, b_mode, n) : 0;
      r.release = meta;
    }
    results.push_back(r);
  }
  return results;
}

}  // namespace hawkes_dp
