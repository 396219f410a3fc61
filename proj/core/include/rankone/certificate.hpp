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

#include <vector>

#include "rankone/framework.hpp"

namespace rankone {

/// Lagrange multipliers of a solved framework problem, mapped back to the
/// unscaled complex constraints, plus the Lagrangian gradients Phi_i.
struct DualCertificate {
  std::vector<double> beta;   // C1
  std::vector<double> tau;    // C2
  std::vector<HMat> Q;        // C3
  std::vector<double> kappa;  // alpha >= 0
  std::vector<HMat> R;        // C4(a)
  std::vector<HMat> S;        // C5
  std::vector<double> f_sign; // f >= 0, one per C5 record (0 when f is fixed)
  std::vector<HMat> Nmat;     // W_i >= 0
  std::vector<HMat> Phi;
  double eta = 0.0;
  double dual_value = 0.0;
};

/// Throws InvalidInput unless the result is Optimal.
DualCertificate build_dual_certificate(const FrameworkProblem& fp, const sdp::SdpResult& result,
                                       const VariableMap& map);

struct CertificateReport {
  bool phi_psd = false;
  bool slackness = false;
  bool rank_one = false;
  bool strong_duality = false;
  double phi_min_eig_margin = 0.0;  // worst min eig(Phi_i) / (1 + ||Phi_i||)
  double slackness_residual = 0.0;  // worst |Tr(Phi_i W_i)| / (1 + objective)
  double max_rot = 0.0;
  double duality_residual = 0.0;  // |g - objective| / max(|objective|, tiny)

  bool passed() const { return phi_psd && slackness && rank_one && strong_duality; }
};

CertificateReport verify_certificate(const DualCertificate& cert, const FrameworkSolution& sol);

}  // namespace rankone
