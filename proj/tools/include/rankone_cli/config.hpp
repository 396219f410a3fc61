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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rankone/experiments.hpp"
#include "rankone/scenarios.hpp"
#include "rankone/sdp.hpp"

namespace rankone::cli {

/// Settings read from a flat `key = value` file. Lists are comma separated;
/// `#` starts a comment.
struct CliConfig {
  Scenario scenario = Scenario::Perfect;
  std::vector<int> M{3};
  int U = 2;
  std::vector<int> N{8};
  std::vector<double> sinr_db{10.0};  // one value or one per user
  std::vector<double> sinr_grid{0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20};
  double sigma2 = 0.001;
  double eps2 = 0.002;
  double rho = 0.1;
  double delta_offdiag = 0.0;
  std::uint64_t seed = 1;
  int trials = 100;
  std::string output_dir;
  std::optional<double> gap_tol;
  std::optional<double> feas_tol;
  std::optional<int> max_iter;
  std::string channels = "random";  // random | basis
  std::optional<double> radius;      // S-procedure radius override
  double epsilon = 1e-8;             // complexity accuracy
  int threads = 0;
  bool record_timing = true;

  void validate() const;
  SystemConfig system() const;
  sdp::SolverSettings solver() const;
  SweepSpec sweep() const;
};

/// Output directory used when the config does not set one.
std::string default_output_dir();

/// Throws InvalidInput on unknown keys or malformed values.
void apply_setting(CliConfig& cfg, std::string_view key, std::string_view value);
CliConfig parse_config(std::string_view text, CliConfig base = {});

}  // namespace rankone::cli
