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

#include "rankone/linalg.hpp"

namespace rankone {

struct RotReport {
  std::vector<double> per_matrix;
  double max_ratio = 0.0;
};

/// Trailing-eigenvalue mass over the leading eigenvalue for each matrix.
/// Eigenvalues down to -1e-10 of the leading one are clamped to zero.
/// Throws Undefined when a matrix has no positive eigenvalue.
RotReport rot(const std::vector<HMat>& W);

double rot_theta(const HMat& theta);

/// sqrt(lambda_1) v_1 with the largest-magnitude entry rotated to be real and
/// nonnegative (first such entry on ties).
CVec extract_rank_one(const HMat& W);

}  // namespace rankone
