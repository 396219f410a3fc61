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

#include "rankone/stats.hpp"

#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "rankone/error.hpp"

namespace rankone {

double inv_chi2_cdf(double k, double p) {
  if (!(k > 0.0)) throw InvalidInput("inv_chi2_cdf: degrees of freedom must be positive");
  if (!(p >= 0.0 && p < 1.0)) throw InvalidInput("inv_chi2_cdf: probability must lie in [0, 1)");
  if (p == 0.0) return 0.0;
  double lo = 0.0, hi = std::max(1.0, k);
  while (boost::math::gamma_p(k / 2.0, hi / 2.0) < p) hi *= 2.0;
  while (hi - lo > 1e-12 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (boost::math::gamma_p(k / 2.0, mid / 2.0) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double radius_r(int M, double rho) {
  if (M < 1) throw InvalidInput("radius_r: M must be positive");
  if (!(rho > 0.0 && rho <= 1.0)) throw InvalidInput("radius_r: rho must lie in (0, 1]");
  return std::sqrt(inv_chi2_cdf(2.0 * M, 1.0 - rho) / 2.0);
}

double bernstein_bound(const HMat& Y, const CVec& u, double delta) {
  if (!(delta > 0.0)) throw InvalidInput("bernstein_bound: delta must be positive");
  linalg::require_hermitian(Y, "bernstein_bound");
  if (u.size() != Y.rows()) throw InvalidInput("bernstein_bound: u has wrong length");
  const double fro2 = Y.squaredNorm();
  const double dev = std::sqrt(2.0 * delta) * std::sqrt(fro2 + 2.0 * u.squaredNorm());
  const double tail = Y.size() == 0 ? 0.0 : delta * linalg::s_plus(-Y);
  return Y.trace().real() - dev - tail;
}

CVec complex_gaussian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
  CVec v(n);
  for (int k = 0; k < n; ++k) {
    const double re = nd(rng);
    const double im = nd(rng);
    v(k) = cplx(re, im);
  }
  return v;
}

}  // namespace rankone
