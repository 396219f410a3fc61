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

#include <cmath>
#include <cstdint>

#include "rankone/complexity.hpp"
#include "rankone/error.hpp"

using namespace rankone;

namespace {

using i64 = std::int64_t;

i64 p(i64 x, int k) {
  i64 r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

TEST(Complexity, GeneralMatchesBlockPolynomials) {
  for (i64 U = 1; U <= 4; ++U) {
    for (i64 M = 2; M <= 8; ++M) {
      for (i64 L1 : {0, 1, 3}) {
        for (i64 L3 : {0, 2}) {
          for (i64 L4 : {0, 1}) {
            for (i64 L5 : {0, 2}) {
              const auto e = complexity_eval(counts_general(static_cast<int>(U), static_cast<int>(M),
                                                            static_cast<int>(L1), static_cast<int>(L3),
                                                            static_cast<int>(L4), static_cast<int>(L5)));
              const i64 big = M * M + M + 1;
              EXPECT_EQ(e.beta, L1 + U + L3 + L4 + (L3 + L4 + L5 + U) * M + L4 * M * M);
              EXPECT_EQ(e.c_form, M * M * (L1 + U + (L5 + U) * p(M, 3) + L3 * p(M + 1, 3) + L4 * p(big, 3)) +
                                      p(M, 4) * (L1 + U + L3 * p(M + 1, 2) + L4 * p(big, 2) + (L5 + U) * M * M));
              EXPECT_EQ(e.c_fact, 6 * p(M, 6));
            }
          }
        }
      }
    }
  }
}

TEST(Complexity, PerfectPolynomials) {
  for (i64 U = 1; U <= 4; ++U) {
    for (i64 M = 2; M <= 8; ++M) {
      const auto e = complexity_eval(counts_perfect(static_cast<int>(U), static_cast<int>(M)));
      EXPECT_EQ(e.beta, U * (M + 1));
      EXPECT_EQ(e.c_form, M * M * (U * (p(M, 3) + 1)) + p(M, 4) * (U * (M * M + 1)));
      EXPECT_EQ(e.c_fact, 2 * p(M, 6));
    }
  }
}

TEST(Complexity, PerfectHandValue) {
  const auto e = complexity_eval(counts_perfect(2, 4));
  EXPECT_EQ(e.beta, 10);
  EXPECT_EQ(e.c_form, 10784);
  EXPECT_EQ(e.c_fact, 8192);
  EXPECT_NEAR(e.total_order, std::log(1e8) * std::sqrt(10.0) * (10784 + 8192), 1e-6);
}

TEST(Complexity, SprocPolynomials) {
  for (i64 U = 1; U <= 4; ++U) {
    for (i64 M = 2; M <= 8; ++M) {
      const auto e = complexity_eval(counts_sproc(static_cast<int>(U), static_cast<int>(M)));
      EXPECT_EQ(e.beta, U * (2 * M + 1));
      EXPECT_EQ(e.c_form, M * M * (U * p(M + 1, 3) + U * p(M, 3)) + p(M, 4) * (U * p(M + 1, 2) + U * M * M));
      EXPECT_EQ(e.c_fact, 2 * p(M, 6));
    }
  }
}

TEST(Complexity, ChancePolynomials) {
  for (i64 U = 1; U <= 4; ++U) {
    for (i64 M = 2; M <= 8; ++M) {
      const auto e = complexity_eval(counts_chance(static_cast<int>(U), static_cast<int>(M)));
      const i64 big = M * M + M + 1;
      EXPECT_EQ(e.beta, 2 * U * M + U * (M * M + M + 2));
      EXPECT_EQ(e.c_form, M * M * (U + 2 * U * p(M, 3) + U * p(big, 3)) + p(M, 4) * (U + 2 * U * M * M + U * p(big, 2)));
      EXPECT_EQ(e.c_fact, 4 * p(M, 6));
    }
  }
}

// The closed-form phase-shift formation count assumes one size-1 block, so it
// matches the calculator only for U = 1.
TEST(Complexity, PhaseShiftPolynomials) {
  for (i64 U = 1; U <= 4; ++U) {
    for (i64 M = 2; M <= 8; ++M) {
      const auto e = complexity_eval(counts_ris_theta(static_cast<int>(U), static_cast<int>(M)));
      EXPECT_EQ(e.beta, U + 2 * M);
      EXPECT_EQ(e.c_fact, 3 * p(M, 6));
      EXPECT_EQ(e.c_form, M * M * (U + 2 * p(M, 3)) + p(M, 4) * (U + 2 * M * M));
      if (U == 1) EXPECT_EQ(e.c_form, M * M * (1 + 2 * p(M, 3)) + p(M, 4) * (1 + 2 * M * M));
    }
  }
}

TEST(Complexity, RejectsInvalidCounts) {
  ComplexityCounts c;
  c.n1 = -1;
  EXPECT_THROW(complexity_eval(c), InvalidInput);
  c = ComplexityCounts{};
  c.M = 0;
  EXPECT_THROW(complexity_eval(c), InvalidInput);
  c = ComplexityCounts{};
  c.epsilon = 2.0;
  EXPECT_THROW(complexity_eval(c), InvalidInput);
  EXPECT_THROW(counts_general(0, 3, 1, 0, 0, 0), InvalidInput);
}
