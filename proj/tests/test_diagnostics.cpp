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

#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "rankone/diagnostics.hpp"
#include "rankone/error.hpp"
#include "rankone/framework.hpp"
#include "rankone/scenarios.hpp"
#include "support/oracles.hpp"

using namespace rankone;

namespace {

CVec unit(int n, std::mt19937_64& rng) {
  CVec v = oracle::random_complex(n, 1, rng).col(0);
  return v / v.norm();
}

}  // namespace

TEST(Rot, OuterProductIsZero) {
  std::mt19937_64 rng(1);
  for (int n : {1, 2, 5}) {
    const CVec v = unit(n, rng);
    EXPECT_LE(rot({v * v.adjoint()}).max_ratio, 1e-12);
  }
}

TEST(Rot, IdentityHasEqualSpectrum) {
  const auto r = rot({HMat::Identity(3, 3), HMat::Identity(2, 2)});
  ASSERT_EQ(r.per_matrix.size(), 2u);
  EXPECT_NEAR(r.per_matrix[0], 2.0, 1e-12);
  EXPECT_NEAR(r.per_matrix[1], 1.0, 1e-12);
  EXPECT_NEAR(r.max_ratio, 2.0, 1e-12);
}

TEST(Rot, MatchesEigenOracle) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) {
    const CMat g = oracle::random_complex(4, 3, rng);
    const HMat w = g * g.adjoint();
    auto ev = oracle::hermitian_eigenvalues(w);
    std::sort(ev.rbegin(), ev.rend());
    double tail = 0.0;
    for (std::size_t k = 1; k < ev.size(); ++k) tail += std::max(ev[k], 0.0);
    EXPECT_NEAR(rot({w}).max_ratio, tail / ev[0], 1e-9);
  }
}

TEST(Rot, ScaleInvariant) {
  std::mt19937_64 rng(3);
  const CMat g = oracle::random_complex(3, 3, rng);
  const HMat w = g * g.adjoint();
  EXPECT_NEAR(rot({w}).max_ratio, rot({HMat(7.5 * w)}).max_ratio, 1e-12);
}

TEST(Rot, TinyNegativeEigenvaluesClamped) {
  HMat w = HMat::Zero(3, 3);
  w(0, 0) = 1.0;
  w(1, 1) = -1e-12;
  EXPECT_DOUBLE_EQ(rot({w}).max_ratio, 0.0);
}

TEST(Rot, ZeroMatrixUndefined) {
  EXPECT_THROW(rot({HMat::Zero(2, 2)}), Undefined);
  EXPECT_THROW(rot_theta(HMat::Zero(2, 2)), Undefined);
}

TEST(RotTheta, Cases) {
  std::mt19937_64 rng(4);
  const CVec t = unit(6, rng);
  EXPECT_LE(rot_theta(t * t.adjoint()), 1e-12);
  EXPECT_NEAR(rot_theta(HMat::Identity(6, 6)), 5.0, 1e-12);
}

TEST(Extract, ScaledBasisVector) {
  HMat w = HMat::Zero(3, 3);
  w(0, 0) = 4.0;
  const CVec v = extract_rank_one(w);
  EXPECT_NEAR(std::abs(v(0) - 2.0), 0.0, 1e-12);
  EXPECT_NEAR(v(1).real() * v(1).real() + v(2).real() * v(2).real(), 0.0, 1e-24);
}

TEST(Extract, RecoversVectorUpToPhaseConvention) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const CVec v = 1.7 * unit(4, rng);
    const CVec w = extract_rank_one(v * v.adjoint());
    Eigen::Index k = 0;
    v.cwiseAbs().maxCoeff(&k);
    const CVec want = v * (std::abs(v(k)) / v(k));
    EXPECT_LE((w - want).norm(), 1e-10);
    EXPECT_NEAR(w(k).imag(), 0.0, 1e-12);
    EXPECT_GE(w(k).real(), 0.0);
  }
}

TEST(Extract, IdempotentOnRankOne) {
  std::mt19937_64 rng(6);
  const CVec v = unit(3, rng);
  const CVec a = extract_rank_one(v * v.adjoint());
  const CVec b = extract_rank_one(a * a.adjoint());
  EXPECT_LE((a - b).norm(), 1e-12);
}

TEST(Extract, NearRankOneReconstructs) {
  std::mt19937_64 rng(7);
  const CVec v = 2.0 * unit(4, rng);
  const CVec n = unit(4, rng);
  const HMat w = v * v.adjoint() + 1e-7 * n * n.adjoint();
  ASSERT_LE(rot({w}).max_ratio, 1e-6);
  const CVec e = extract_rank_one(w);
  EXPECT_LE((e * e.adjoint() - w).norm(), 1e-3 * w.norm());
}

TEST(Extract, ZeroMatrixRejected) { EXPECT_THROW(extract_rank_one(HMat::Zero(2, 2)), InvalidInput); }

TEST(Extract, SingleUserOptimumMeetsTargetExactly) {
  SystemConfig cfg;
  cfg.M = 3;
  cfg.U = 1;
  cfg.gamma = {10.0};
  const auto ch = gen_channels(cfg);
  const auto sol = solve_framework(build_perfect(cfg, ch));
  ASSERT_EQ(sol.status, sdp::Status::Optimal);
  const CVec w = extract_rank_one(sol.W[0]);
  const auto s = oracle::sinr({w}, ch.h, cfg.sigma2);
  EXPECT_NEAR(s[0], 10.0, 1e-6 * 10.0);
}
