// SPDX-License-Identifier: Apache-2.0
//
// rankone: tight semidefinite relaxations for multi-user transmit beamforming
// Copyright (C) 2026 The rankone authors
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

#include "rankone_cli/config.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

#include "rankone/error.hpp"

namespace rankone::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad(std::string_view key, std::string_view value) {
  throw InvalidInput("config: bad value '" + std::string(value) + "' for " + std::string(key));
}

template <typename T>
T to_int(std::string_view key, std::string_view v) {
  T out{};
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size()) bad(key, v);
  return out;
}

double to_double(std::string_view key, std::string_view v) {
  const std::string s(v);
  char* end = nullptr;
  const double d = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) bad(key, v);
  return d;
}

template <typename F>
auto to_list(std::string_view key, std::string_view v, F conv) {
  std::vector<decltype(conv(key, v))> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = v.find(',', start);
    const auto item = trim(v.substr(start, comma == std::string_view::npos ? v.npos : comma - start));
    if (item.empty()) bad(key, v);
    out.push_back(conv(key, item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool to_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  bad(key, v);
}

}  // namespace

std::string default_output_dir() {
  const char* env = std::getenv("RANKONE_OUTPUT_DIR");
  return env && *env ? env : "rankone_out";
}

void apply_setting(CliConfig& cfg, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "scenario") {
    cfg.scenario = parse_scenario(std::string(value));
  } else if (key == "M") {
    cfg.M = to_list(key, value, to_int<int>);
  } else if (key == "U") {
    cfg.U = to_int<int>(key, value);
  } else if (key == "N") {
    cfg.N = to_list(key, value, to_int<int>);
  } else if (key == "sinr_db") {
    cfg.sinr_db = to_list(key, value, to_double);
  } else if (key == "sinr_grid") {
    cfg.sinr_grid = to_list(key, value, to_double);
  } else if (key == "sigma2") {
    cfg.sigma2 = to_double(key, value);
  } else if (key == "eps2") {
    cfg.eps2 = to_double(key, value);
  } else if (key == "rho") {
    cfg.rho = to_double(key, value);
  } else if (key == "delta_offdiag") {
    cfg.delta_offdiag = to_double(key, value);
  } else if (key == "seed") {
    cfg.seed = to_int<std::uint64_t>(key, value);
  } else if (key == "trials") {
    cfg.trials = to_int<int>(key, value);
  } else if (key == "output_dir") {
    if (value.empty()) bad(key, value);
    cfg.output_dir = std::string(value);
  } else if (key == "gap_tol") {
    cfg.gap_tol = to_double(key, value);
  } else if (key == "feas_tol") {
    cfg.feas_tol = to_double(key, value);
  } else if (key == "max_iter") {
    cfg.max_iter = to_int<int>(key, value);
  } else if (key == "channels") {
    if (value != "random" && value != "basis") bad(key, value);
    cfg.channels = std::string(value);
  } else if (key == "radius") {
    cfg.radius = to_double(key, value);
  } else if (key == "epsilon") {
    cfg.epsilon = to_double(key, value);
  } else if (key == "threads") {
    cfg.threads = to_int<int>(key, value);
  } else if (key == "record_timing") {
    cfg.record_timing = to_bool(key, value);
  } else {
    throw InvalidInput("config: unknown key '" + std::string(key) + "'");
  }
}

CliConfig parse_config(std::string_view text, CliConfig base) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view l = line;
    if (const auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    l = trim(l);
    if (l.empty()) continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidInput("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const auto key = trim(l.substr(0, eq));
    if (key.empty()) throw InvalidInput("config line " + std::to_string(lineno) + ": empty key");
    apply_setting(base, key, l.substr(eq + 1));
  }
  base.validate();
  return base;
}

void CliConfig::validate() const {
  if (M.empty() || N.empty() || sinr_db.empty() || sinr_grid.empty()) {
    throw InvalidInput("config: list values must be non-empty");
  }
  if (trials < 1) throw InvalidInput("config: trials must be at least 1");
  if (threads < 0) throw InvalidInput("config: threads must be nonnegative");
  if (gap_tol && !(*gap_tol > 0.0)) throw InvalidInput("config: gap_tol must be positive");
  if (feas_tol && !(*feas_tol > 0.0)) throw InvalidInput("config: feas_tol must be positive");
  if (max_iter && *max_iter < 1) throw InvalidInput("config: max_iter must be at least 1");
  if (radius && !(*radius >= 0.0)) throw InvalidInput("config: radius must be nonnegative");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidInput("config: epsilon must lie in (0, 1)");
  for (int n : N) {
    if (n < 1) throw InvalidInput("config: N values must be positive");
  }
  for (int m : M) {
    SystemConfig s = system();
    s.M = m;
    s.validate();
    if (channels == "basis" && U > m) throw InvalidInput("config: basis channels need U <= M");
  }
}

SystemConfig CliConfig::system() const {
  SystemConfig s;
  s.M = M.front();
  s.U = U;
  s.sigma2 = sigma2;
  s.gamma.clear();
  for (double db : sinr_db) s.gamma.push_back(db_to_linear(db));
  s.eps2 = eps2;
  s.rho = rho;
  s.delta_offdiag = delta_offdiag;
  s.seed = seed;
  return s;
}

sdp::SolverSettings CliConfig::solver() const {
  sdp::SolverSettings st = framework_settings();
  if (gap_tol) st.gap_tol = *gap_tol;
  if (feas_tol) st.feas_tol = *feas_tol;
  if (max_iter) st.max_iter = *max_iter;
  return st;
}

SweepSpec CliConfig::sweep() const {
  SweepSpec sp;
  sp.scenario = scenario;
  sp.M = M;
  sp.N = N;
  sp.sinr_db = sinr_grid;
  sp.trials = trials;
  sp.base_seed = seed;
  sp.correlation = delta_offdiag;
  sp.base = system();
  sp.base.gamma = {1.0};
  sp.threads = threads;
  sp.record_timing = record_timing;
  sp.solver = solver();
  return sp;
}

}  // namespace rankone::cli
