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

#include "rankone/scenarios.hpp"

namespace rankone {

/// BS-RIS matrix H (M x N) and RIS-user vectors g_i (length N).
struct RisChannels {
  int N = 0;
  CMat H;
  std::vector<CVec> g;

  /// G_i = H diag(g_i), so the effective channel is G_i theta.
  CMat G(int i) const;
  std::vector<CVec> effective(const CVec& theta) const;
};

/// H columns drawn as Delta^{1/2} z, g_i ~ CN(0, I_N); seeded with cfg.seed.
RisChannels gen_ris_channels(const SystemConfig& cfg, int N);

/// Beamformer step at fixed Theta: C1 records with X_i = G_i Theta G_i^H.
FrameworkProblem build_ris_w(const SystemConfig& cfg, const RisChannels& ris, const HMat& theta);

/// Phase step at fixed W: one N x N variable Theta, SINR rows as C1 records
/// and diag(Theta) <= 1 as a C5 record with f fixed to 1. Objective Tr(Theta).
FrameworkProblem build_ris_theta(const SystemConfig& cfg, const RisChannels& ris, const std::vector<HMat>& W);

struct RisIteration {
  double objective = 0.0;
  double rot_w = 0.0;
  double rot_theta = 0.0;  // of the Theta used by this iteration's W step
};

struct RisTrace {
  sdp::Status status = sdp::Status::NumericalFailure;  // of the first W step when it fails
  std::vector<RisIteration> iterations;
  std::vector<HMat> W;
  HMat Theta;
  CVec theta;  // rank-one extraction of Theta, clipped to |theta_n| <= 1
  bool converged = false;

  bool feasible() const { return !iterations.empty(); }
};

/// Alternates W and Theta steps from random unit-modulus phases until the
/// relative objective change drops below tol or max_outer W steps have run.
RisTrace ris_alternate(const SystemConfig& cfg, const RisChannels& ris, std::uint64_t init_seed, double tol = 1e-5,
                       int max_outer = 30, const sdp::SolverSettings& st = framework_settings());

}  // namespace rankone
