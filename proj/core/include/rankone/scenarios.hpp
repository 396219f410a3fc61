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
#include <vector>

#include "rankone/framework.hpp"
#include "rankone/linalg.hpp"

namespace rankone {

double db_to_linear(double db);

struct SystemConfig {
  int M = 3;
  int U = 2;
  double sigma2 = 0.001;
  /// Target SINR per user on a linear scale; a single entry applies to all users.
  std::vector<double> gamma{10.0};
  double eps2 = 0.002;
  double rho = 0.1;
  double delta_offdiag = 0.0;
  std::uint64_t seed = 1;

  double gamma_of(int i) const;
  void validate() const;
};

struct ChannelSet {
  std::vector<CVec> h;
  std::vector<HMat> error_cov;
};

/// Unit diagonal, `offdiag` everywhere else.
HMat correlation_matrix(int M, double offdiag);

/// h_i = Delta^{1/2} z with z ~ CN(0, I) from a PRNG seeded with cfg.seed;
/// error covariances eps2 I.
ChannelSet gen_channels(const SystemConfig& cfg);

/// |h_i^H w_i|^2 / (sum_{j != i} |h_i^H w_j|^2 + sigma2)
std::vector<double> sinr_eval(const std::vector<CVec>& w, const std::vector<CVec>& h, double sigma2);

FrameworkProblem build_perfect(const SystemConfig& cfg, const ChannelSet& ch);
FrameworkProblem build_sproc(const SystemConfig& cfg, const ChannelSet& ch, double r);
FrameworkProblem build_chance(const SystemConfig& cfg, const ChannelSet& ch);

struct OutageEstimate {
  std::vector<double> probability;
  std::vector<double> std_error;
};

/// Fraction of draws e ~ CN(0, I) for which user i's SINR at h_i + H_i^{1/2} e
/// falls below its target.
OutageEstimate outage_mc(const std::vector<CVec>& w, const ChannelSet& ch, const SystemConfig& cfg, int n_samples,
                         std::uint64_t seed);

/// Minimum SINR per user over sampled errors with ||e|| <= r: half the samples
/// on the sphere, half uniform in the ball.
std::vector<double> worstcase_check(const std::vector<CVec>& w, const ChannelSet& ch, double r,
                                    const SystemConfig& cfg, int n_samples, std::uint64_t seed);

}  // namespace rankone
