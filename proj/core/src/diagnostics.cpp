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

#include "rankone/diagnostics.hpp"

#include <cmath>
#include <string>

#include "rankone/error.hpp"

namespace rankone {

namespace {

double ratio(const HMat& w) {
  const auto e = linalg::herm_eig(w);
  if (e.values.size() == 0 || !(e.values(0) > 0.0)) {
    throw Undefined("rot: matrix has no positive eigenvalue");
  }
  const double lead = e.values(0);
  double tail = 0.0;
  for (Eigen::Index k = 1; k < e.values.size(); ++k) {
    const double v = e.values(k);
    if (v < -1e-10 * lead) {
      tail += v;
    } else if (v > 0.0) {
      tail += v;
    }
  }
  return std::max(tail, 0.0) / lead;
}

}  // namespace

RotReport rot(const std::vector<HMat>& W) {
  if (W.empty()) throw InvalidInput("rot: empty list");
  RotReport rep;
  for (const auto& w : W) {
    rep.per_matrix.push_back(ratio(w));
    rep.max_ratio = std::max(rep.max_ratio, rep.per_matrix.back());
  }
  return rep;
}

double rot_theta(const HMat& theta) { return ratio(theta); }

CVec extract_rank_one(const HMat& W) {
  const auto e = linalg::herm_eig(W);
  if (e.values.size() == 0 || !(e.values(0) > 0.0)) {
    throw InvalidInput("extract_rank_one: matrix has no positive eigenvalue");
  }
  CVec w = std::sqrt(e.values(0)) * e.vectors.col(0);
  Eigen::Index arg = 0;
  double best = -1.0;
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    if (std::abs(w(k)) > best * (1.0 + 1e-12)) {
      best = std::abs(w(k));
      arg = k;
    }
  }
  if (best > 0.0) w *= std::conj(w(arg)) / best;
  w(arg) = cplx(w(arg).real(), 0.0);
  return w;
}

}  // namespace rankone
