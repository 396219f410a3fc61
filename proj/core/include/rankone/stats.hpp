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

#include <random>

#include "rankone/linalg.hpp"

namespace rankone {

/// Inverse CDF of a chi-square variable with k degrees of freedom, by bisection
/// on the regularized lower incomplete gamma function to 1e-12 absolute.
double inv_chi2_cdf(double k, double p);

/// Ball radius r with Pr(||e||^2 <= r^2) = 1 - rho for e ~ CN(0, I_M).
double radius_r(int M, double rho);

/// Tr(Y) - sqrt(2 delta) sqrt(||Y||_F^2 + 2 ||u||^2) - delta s+(-Y).
/// Lower bound that e^H Y e + 2 Re(e^H u), e ~ CN(0, I), exceeds with
/// probability at least 1 - exp(-delta).
double bernstein_bound(const HMat& Y, const CVec& u, double delta);

/// n i.i.d. CN(0, 1) entries.
CVec complex_gaussian(int n, std::mt19937_64& rng);

}  // namespace rankone
