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
#include "rankone/ris.hpp"
#include "support/oracles.hpp"

using namespace rankone;

namespace {

SystemConfig config(int M, int U, double gamma_db, std::uint64_t seed) {
  SystemConfig cfg;
  cfg.M = M;
  cfg.U = U;
  cfg.gamma = {db_to_linear(gamma_db)};
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST(RisChannels, ShapesAndDeterminism) {
  const auto cfg = config(3, 2, 10, 5);
  const auto a = gen_ris_channels(cfg, 8), b = gen_ris_channels(cfg, 8);
  EXPECT_EQ(a.H.rows(), 3);
  EXPECT_EQ(a.H.cols(), 8);
  ASSERT_EQ(a.g.size(), 2u);
  EXPECT_EQ(a.g[1].size(), 8);
  EXPECT_EQ(a.H, b.H);
  EXPECT_EQ(a.g[0], b.g[0]);
  EXPECT_THROW(gen_ris_channels(cfg, 0), InvalidInput);
}

TEST(RisChannels, EffectiveChannel) {
  const auto cfg = config(3, 2, 10, 5);
  const auto ris = gen_ris_channels(cfg, 4);
  std::mt19937_64 rng(1);
  const CVec theta = oracle::random_complex(4, 1, rng).col(0);
  const auto eff = ris.effective(theta);
  for (int i = 0; i < 2; ++i) {
    CVec want = CVec::Zero(3);
    for (int n = 0; n < 4; ++n) want += ris.H.col(n) * ris.g[static_cast<std::size_t>(i)](n) * theta(n);
    EXPECT_LE((eff[static_cast<std::size_t>(i)] - want).norm(), 1e-12);
  }
}

TEST(RisW, SingleElementReducesToPerfect) {
  const auto cfg = config(3, 1, 10, 6);
  const auto ris = gen_ris_channels(cfg, 1);
  const HMat one = HMat::Identity(1, 1);
  ChannelSet ch;
  for (int i = 0; i < 1; ++i) {
    ch.h.push_back(ris.G(i).col(0));
    ch.error_cov.push_back(HMat::Zero(3, 3));
  }
  const auto a = solve_framework(build_ris_w(cfg, ris, one));
  const auto b = solve_framework(build_perfect(cfg, ch));
  ASSERT_EQ(a.status, sdp::Status::Optimal);
  ASSERT_EQ(b.status, sdp::Status::Optimal);
  EXPECT_NEAR(a.objective, b.objective, 1e-8 * b.objective);
}

TEST(RisW, SingleElementCollinearUsersInfeasible) {
  const auto cfg = config(3, 2, 10, 6);
  const auto ris = gen_ris_channels(cfg, 1);
  EXPECT_EQ(solve_framework(build_ris_w(cfg, ris, HMat::Identity(1, 1))).status, sdp::Status::Infeasible);
}

TEST(RisW, RankOneThetaGivesRankOneChannelMatrix) {
  const auto cfg = config(3, 2, 10, 7);
  const auto ris = gen_ris_channels(cfg, 6);
  std::mt19937_64 rng(2);
  const CVec theta = oracle::random_complex(6, 1, rng).col(0);
  const auto fp = build_ris_w(cfg, ris, theta * theta.adjoint());
  for (int i = 0; i < 2; ++i) {
    const HMat& x = fp.cons().c1[static_cast<std::size_t>(i)].X_self;
    const CVec e = ris.G(i) * theta;
    EXPECT_LE((x - e * e.adjoint()).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LE(rot({x}).max_ratio, 1e-10);
  }
}

TEST(RisW, SeededInstanceIsRankOne) {
  const auto cfg = config(3, 2, 10, 8);
  const auto ris = gen_ris_channels(cfg, 8);
  std::mt19937_64 rng(3);
  CVec theta(8);
  std::uniform_real_distribution<double> ph(0.0, 6.283185307179586);
  for (int n = 0; n < 8; ++n) theta(n) = std::polar(1.0, ph(rng));
  const auto sol = solve_framework(build_ris_w(cfg, ris, theta * theta.adjoint()));
  ASSERT_EQ(sol.status, sdp::Status::Optimal);
  EXPECT_LE(rot(sol.W).max_ratio, 1e-4);
}

TEST(RisTheta, DiagonalSelectionMatchesDirectAssembly) {
  const auto cfg = config(2, 1, 10, 9);
  const auto ris = gen_ris_channels(cfg, 5);
  const auto fp = build_ris_theta(cfg, ris, {HMat::Identity(2, 2)});
  std::mt19937_64 rng(4);
  const HMat theta = oracle::random_hermitian(5, rng);
  Point p = fp.zero_point();
  p.W[0] = theta;
  HMat want = HMat::Identity(5, 5);
  for (int n = 0; n < 5; ++n) want(n, n) -= theta(n, n);
  EXPECT_LE((fp.c5_block(0, p) - want).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(RisTheta, IdentityIsOnTheBoundary) {
  const auto cfg = config(2, 1, 10, 9);
  const auto ris = gen_ris_channels(cfg, 4);
  const auto fp = build_ris_theta(cfg, ris, {HMat::Identity(2, 2)});
  Point p = fp.zero_point();
  p.W[0] = HMat::Identity(4, 4);
  EXPECT_LE(fp.c5_block(0, p).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(RisTheta, SolvedThetaIsRankOne) {
  const auto cfg = config(3, 2, 10, 10);
  const auto ris = gen_ris_channels(cfg, 8);
  const auto tr = ris_alternate(cfg, ris, 1, 1e-5, 3);
  ASSERT_TRUE(tr.feasible());
  ASSERT_GE(tr.iterations.size(), 2u);
  EXPECT_LE(tr.iterations[1].rot_theta, 1e-4);
  for (int n = 0; n < 8; ++n) EXPECT_LE(std::abs(tr.Theta(n, n)), 1.0 + 1e-6);
}

TEST(RisLoop, ScalarCaseConvergesToClosedForm) {
  const auto cfg = config(2, 1, 10, 11);
  const auto ris = gen_ris_channels(cfg, 1);
  const auto tr = ris_alternate(cfg, ris, 1);
  ASSERT_TRUE(tr.feasible());
  EXPECT_TRUE(tr.converged);
  EXPECT_LE(tr.iterations.size(), 2u);
  const double gain = (ris.H.col(0) * ris.g[0](0)).squaredNorm();
  EXPECT_NEAR(tr.iterations.back().objective, cfg.gamma[0] * cfg.sigma2 / gain, 1e-6 * cfg.gamma[0] * cfg.sigma2 / gain);
  EXPECT_NEAR(std::abs(tr.theta(0)), 1.0, 1e-6);
}

TEST(RisLoop, ObjectiveNonIncreasing) {
  for (std::uint64_t seed : {21u, 22u, 23u}) {
    const auto cfg = config(3, 2, 10, seed);
    const auto ris = gen_ris_channels(cfg, 8);
    const auto tr = ris_alternate(cfg, ris, seed);
    ASSERT_TRUE(tr.feasible());
    for (std::size_t k = 1; k < tr.iterations.size(); ++k) {
      EXPECT_LE(tr.iterations[k].objective, tr.iterations[k - 1].objective * (1.0 + 1e-8) + 1e-12);
    }
    EXPECT_LE(tr.iterations.back().rot_w, 1e-4);
    EXPECT_LE(tr.iterations.back().rot_theta, 1e-4);
    for (int n = 0; n < 8; ++n) EXPECT_LE(std::abs(tr.theta(n)), 1.0);
    const auto s = sinr_eval({extract_rank_one(tr.W[0]), extract_rank_one(tr.W[1])}, ris.effective(tr.theta),
                             cfg.sigma2);
    for (double v : s) EXPECT_GE(v, cfg.gamma[0] * (1.0 - 1e-4));
  }
}

TEST(RisLoop, InfeasibleFirstStepReported) {
  const auto cfg = config(1, 2, 10, 12);
  const auto ris = gen_ris_channels(cfg, 4);
  const auto tr = ris_alternate(cfg, ris, 1);
  EXPECT_FALSE(tr.feasible());
  EXPECT_EQ(tr.status, sdp::Status::Infeasible);
}

TEST(RisLoop, RejectsBadArguments) {
  const auto cfg = config(3, 2, 10, 12);
  const auto ris = gen_ris_channels(cfg, 4);
  EXPECT_THROW(ris_alternate(cfg, ris, 1, 1e-5, 0), InvalidInput);
  EXPECT_THROW(ris_alternate(cfg, ris, 1, 0.0), InvalidInput);
  EXPECT_THROW(build_ris_w(cfg, ris, HMat::Identity(3, 3)), InvalidInput);
}
