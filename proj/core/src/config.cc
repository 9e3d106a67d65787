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

#include "hawkes_dp/config.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hawkes_dp/error.h"
#include "hawkes_dp/text.h"

namespace hawkes_dp {

namespace {

[[noreturn]] void BadValue(std::string_view key, std::string_view value) {
  Fail(ErrorCode::kConfigError, "bad value for '" + std::string(key) +
                                    "': '" + std::string(value) + "'");
}

double NeedDouble(std::string_view key, std::string_view value) {
  const auto x = ParseDouble(value);
  if (!x) BadValue(key, value);
  return *x;
}

std::string JoinDoubles(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += FormatDouble(xs[i]);
  }
  return out;
}

}  // namespace

double DeltaRule::Resolve(double horizon) const {
  if (fixed) return value;
  const double raw = c * std::log(horizon);
  return std::max(5.0, 5.0 * std::round(raw / 5.0));
}

std::string DeltaRule::ToString() const {
  if (fixed) return FormatDouble(value);
  if (c == kDefaultC) return "log";
  return "log:" + FormatDouble(c);
}

DeltaRule DeltaRule::Parse(std::string_view text) {
  text = Trim(text);
  DeltaRule rule;
  if (text == "log") return rule;
  if (text.starts_with("log:")) {
    const auto c = ParseDouble(text.substr(4));
    if (!c || !(*c > 0.0)) BadValue("delta_mode", text);
    rule.c = *c;
    return rule;
  }
  const auto v = ParseDouble(text);
  if (!v || !(*v > 0.0) || !std::isfinite(*v)) BadValue("delta_mode", text);
  rule.fixed = true;
  rule.value = *v;
  return rule;
}

std::string BMode::Label() const {
  return automatic ? "auto" : std::to_string(b);
}

BMode BMode::Parse(std::string_view text) {
  text = Trim(text);
  if (text == "auto") return BMode{true, 0};
  const auto b = ParseInt(text);
  if (!b || *b < 1) BadValue("b_values", text);
  return BMode{false, *b};
}

const std::vector<std::string>& ConfigKeys() {
  static const std::vector<std::string> keys = {
      "mu",          "alpha",       "mu_lower",   "mu_upper", "alpha_lower",
      "alpha_upper", "gamma",       "epsilons",   "b_values", "delta_mode",
      "horizon",     "repetitions", "seed",       "out_dir"};
  return keys;
}

void ApplyConfigValue(ExperimentConfig& config, std::string_view key,
                      std::string_view value) {
  value = Trim(value);
  if (key == "mu") {
    config.params.mu = NeedDouble(key, value);
    config.truth_given = true;
  } else if (key == "alpha") {
    config.params.alpha = NeedDouble(key, value);
    config.truth_given = true;
  } else if (key == "mu_lower") {
    config.bounds.mu_lower = NeedDouble(key, value);
  } else if (key == "mu_upper") {
    config.bounds.mu_upper = NeedDouble(key, value);
  } else if (key == "alpha_lower") {
    config.bounds.alpha_lower = NeedDouble(key, value);
  } else if (key == "alpha_upper") {
    config.bounds.alpha_upper = NeedDouble(key, value);
  } else if (key == "gamma") {
    config.gamma = NeedDouble(key, value);
  } else if (key == "epsilons") {
    config.epsilons.clear();
    for (auto part : Split(value, ',')) {
      config.epsilons.push_back(NeedDouble(key, part));
    }
  } else if (key == "b_values") {
    config.b_values.clear();
    for (auto part : Split(value, ',')) {
      config.b_values.push_back(BMode::Parse(part));
    }
  } else if (key == "delta_mode") {
    config.delta_rule = DeltaRule::Parse(value);
  } else if (key == "horizon") {
    config.horizon = NeedDouble(key, value);
  } else if (key == "repetitions") {
    const auto n = ParseInt(value);
    if (!n || *n < 1 || *n > 1000000) BadValue(key, value);
    config.repetitions = static_cast<int>(*n);
  } else if (key == "seed") {
    const auto s = ParseUint(value);
    if (!s) BadValue(key, value);
    config.seed = *s;
  } else if (key == "out_dir") {
    config.out_dir = std::string(value);
  } else {
    Fail(ErrorCode::kConfigError, "unknown key '" + std::string(key) + "'");
  }
}

ExperimentConfig ParseConfigText(std::string_view text, ExperimentConfig base) {
  int line_no = 0;
  for (auto line : Split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      Fail(ErrorCode::kConfigError,
           "line " + std::to_string(line_no) + ": expected key = value");
    }
    try {
      ApplyConfigValue(base, Trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const Error& e) {
      Fail(ErrorCode::kConfigError,
           "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return base;
}

ExperimentConfig LoadConfigFile(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIoError, "cannot open config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseConfigText(buffer.str(), std::move(base));
}

void ExperimentConfig::Validate() const {
  try {
    params.Validate();
    bounds.Validate();
  } catch (const Error& e) {
    Fail(ErrorCode::kConfigError, e.what());
  }
  if (!(gamma > 0.0 && gamma <= 0.5)) {
    Fail(ErrorCode::kConfigError, "gamma must lie in (0, 1/2]");
  }
  if (epsilons.empty()) Fail(ErrorCode::kConfigError, "epsilons is empty");
  for (double e : epsilons) {
    if (!(e > 0.0)) Fail(ErrorCode::kConfigError, "epsilons must be positive");
  }
  if (b_values.empty()) Fail(ErrorCode::kConfigError, "b_values is empty");
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    Fail(ErrorCode::kConfigError, "horizon must be positive and finite");
  }
  if (repetitions < 1) Fail(ErrorCode::kConfigError, "repetitions must be >= 1");
}

std::string ExperimentConfig::ResolvedOutDir() const {
  if (!out_dir.empty()) return out_dir;
  if (const char* env = std::getenv(kOutDirEnvVar); env && *env) return env;
  return "out";
}

std::string FormatConfig(const ExperimentConfig& c) {
  std::string b_values;
  for (std::size_t i = 0; i < c.b_values.size(); ++i) {
    if (i) b_values += ',';
    b_values += c.b_values[i].Label();
  }
  std::ostringstream out;
  out << "mu = " << FormatDouble(c.params.mu) << '\n'
      << "alpha = " << FormatDouble(c.params.alpha) << '\n'
      << "mu_lower = " << FormatDouble(c.bounds.mu_lower) << '\n'
      << "mu_upper = " << FormatDouble(c.bounds.mu_upper) << '\n'
      << "alpha_lower = " << FormatDouble(c.bounds.alpha_lower) << '\n'
      << "alpha_upper = " << FormatDouble(c.bounds.alpha_upper) << '\n'
      << "gamma = " << FormatDouble(c.gamma) << '\n'
      << "epsilons = " << JoinDoubles(c.epsilons) << '\n'
      << "b_values = " << b_values << '\n'
      << "delta_mode = " << c.delta_rule.ToString() << '\n'
      << "horizon = " << FormatDouble(c.horizon) << '\n'
      << "repetitions = " << c.repetitions << '\n'
      << "seed = " << c.seed << '\n';
  if (!c.out_dir.empty()) out << "out_dir = " << c.out_dir << '\n';
  return out.str();
}

}  // namespace hawkes_dp
