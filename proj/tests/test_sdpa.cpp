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

#include <random>
#include <sstream>

#include "rankone/error.hpp"
#include "rankone/sdp.hpp"
#include "rankone/sdpa.hpp"
#include "support/oracles.hpp"

using namespace rankone::sdp;

namespace {

SdpProblem random_problem(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Block dense(3), diag(3), scalar(1), box(6);
  dense.set_constant(RMat::Identity(3, 3));
  for (int v = 0; v < 3; ++v) dense.add_term(v, RMat(oracle::random_symmetric(3, rng)));
  RMat d = RMat::Zero(3, 3);
  d.diagonal() << 1.0, 2.0, 3.0;
  diag.set_constant(RMat::Identity(3, 3));
  diag.add_term(1, d);
  scalar.set_constant(RMat::Constant(1, 1, 4.0));
  scalar.add_term(2, RMat::Constant(1, 1, -1.0));
  box.set_constant(3.0 * RMat::Identity(6, 6));
  for (int v = 0; v < 3; ++v) {
    RMat e = RMat::Zero(6, 6);
    e(v, v) = 1.0;
    e(v + 3, v + 3) = -1.0;
    box.add_term(v, e);
  }
  RVec c(3);
  c << u(rng), u(rng), u(rng);
  return SdpProblem(c, {dense, diag, scalar, box});
}

}  // namespace

TEST(Sdpa, RoundTripPreservesProblem) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 5; ++t) {
    const SdpProblem p = random_problem(rng);
    const SdpProblem q = parse_sdpa(export_sdpa(p));
    ASSERT_EQ(q.n(), p.n());
    ASSERT_EQ(q.blocks().size(), p.blocks().size());
    EXPECT_EQ(q.c(), p.c());
    std::normal_distribution<double> nd;
    const RVec x = RVec::NullaryExpr(p.n(), [&](Eigen::Index) { return nd(rng); });
    for (std::size_t b = 0; b < p.blocks().size(); ++b) {
      EXPECT_EQ(q.blocks()[b].evaluate(x), p.blocks()[b].evaluate(x));
    }
  }
}

TEST(Sdpa, HeaderSignsAndNegatedConstant) {
  std::mt19937_64 rng(3);
  const std::string text = export_sdpa(random_problem(rng));
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "3");
  std::getline(in, line);
  EXPECT_EQ(line, "4");
  std::getline(in, line);
  EXPECT_EQ(line, "3 -3 1 -6");
  std::getline(in, line);  // objective
  // Constant of the 1x1 block is 4; SDPA stores -4.
  EXPECT_NE(text.find("0 3 1 1 -4\n"), std::string::npos);
  EXPECT_NE(text.find("0 1 1 1 -1\n"), std::string::npos);
}

TEST(Sdpa, ReparsedProblemSolvesToSameObjective) {
  std::mt19937_64 rng(5);
  const SdpProblem p = random_problem(rng);
  const SdpResult a = solve(p);
  const SdpResult b = solve(parse_sdpa(export_sdpa(p)));
  ASSERT_EQ(a.status, Status::Optimal);
  ASSERT_EQ(b.status, Status::Optimal);
  EXPECT_NEAR(a.primal_obj, b.primal_obj, 1e-9 * (1.0 + std::abs(a.primal_obj)));
}

TEST(Sdpa, RejectsMalformedInput) {
  EXPECT_THROW(parse_sdpa(""), rankone::InvalidInput);
  EXPECT_THROW(parse_sdpa("1\n1\n2\n1\n0 2 1 1 1\n"), rankone::InvalidInput);
  EXPECT_THROW(parse_sdpa("1\n1\n2\n1\n0 1 3 1 1\n"), rankone::InvalidInput);
  EXPECT_THROW(parse_sdpa("1\n1\n-2\n1\n1 1 1 2 1\n"), rankone::InvalidInput);
}
