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

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "rankone/scenarios.hpp"

namespace rankone {

enum class Scenario { Perfect, Sproc, Chance, Ris };

std::string to_string(Scenario s);
/// Accepts perfect, sproc, chance, ris. Throws InvalidInput otherwise.
Scenario parse_scenario(const std::string& name);

struct SweepSpec {
  Scenario scenario = Scenario::Perfect;
  std::vector<int> M{3};
  std::vector<int> N{8};  // ris only
  std::vector<double> sinr_db{0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20};
  int trials = 100;
  std::uint64_t base_seed = 1;
  double correlation = 0.0;
  /// U, sigma2, eps2 and rho are taken from here; M, gamma, seed and
  /// delta_offdiag are set per trial.
  SystemConfig base;
  sdp::SolverSettings solver = framework_settings();
  bool certify = true;
  /// When false solve_ms is written as 0 so repeated sweeps are byte-identical.
  bool record_timing = true;
  int threads = 0;  // 0: hardware concurrency
  /// Called with (finished, total) after each trial, serialized.
  std::function<void(std::size_t, std::size_t)> progress;

  void validate() const;
};

struct TrialRecord {
  std::string scenario;
  int M = 0;
  int N = 0;
  int U = 0;
  double sinr_db = 0.0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::string status;
  double objective = 0.0;
  double rot_w = 0.0;
  double rot_theta = 0.0;
  int outer_iters = 0;
  double solve_ms = 0.0;
  bool cert_pass = false;

  bool operator==(const TrialRecord&) const = default;
};

/// Channel seed for a trial; shared by every SINR point of the same (M, N).
std::uint64_t trial_seed(std::uint64_t base, int M, int N, int trial);

TrialRecord run_trial(const SweepSpec& spec, int M, int N, double sinr_db, int trial);

/// Ordered by (M, N, sinr_db, trial) regardless of thread scheduling.
std::vector<TrialRecord> run_sweep(const SweepSpec& spec);

struct PointSummary {
  int M = 0;
  int N = 0;
  double sinr_db = 0.0;
  int trials = 0;
  int feasible = 0;
  int infeasible = 0;
  int failed = 0;  // NumericalFailure or IterationLimit, excluded from the rate
  double feasibility_rate = 0.0;
  double mean_rot_w = 0.0;
  double max_rot_w = 0.0;
  double mean_rot_theta = 0.0;
};

std::vector<PointSummary> summarize(const std::vector<TrialRecord>& records);

inline constexpr const char* kCsvHeader =
    "scenario,M,N,U,sinr_db,trial,seed,status,objective,rot_w,rot_theta,outer_iters,solve_ms,cert_pass";

std::string to_csv(const std::vector<TrialRecord>& records);
/// Throws InvalidInput on a malformed document.
std::vector<TrialRecord> parse_csv(const std::string& text);

/// Writes <scenario>_trials.csv, <scenario>_feasibility.svg and <scenario>_rot.svg
/// into dir (created if missing). Returns the written paths.
std::vector<std::filesystem::path> emit_outputs(const std::vector<TrialRecord>& records, const SweepSpec& spec,
                                                const std::filesystem::path& dir);

/// Writes through a temporary file in the same directory and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace rankone
