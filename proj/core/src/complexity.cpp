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

#include "rankone/complexity.hpp"

#include <cmath>

#include "rankone/error.hpp"

namespace rankone {

void ComplexityCounts::validate() const {
  if (n1 < 0 || n_size_M < 0 || n_size_M1 < 0 || n_size_big < 0) {
    throw InvalidInput("ComplexityCounts: counts must be nonnegative");
  }
  if (M < 1) throw InvalidInput("ComplexityCounts: M must be positive");
  if (families < 0) throw InvalidInput("ComplexityCounts: families must be nonnegative");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidInput("ComplexityCounts: epsilon must lie in (0, 1)");
}

ComplexityEstimate complexity_eval(const ComplexityCounts& c) {
  c.validate();
  const std::int64_t M = c.M;
  const std::int64_t m1 = M + 1;
  const std::int64_t big = M * M + M + 1;
  const std::int64_t M2 = M * M;
  const std::int64_t M4 = M2 * M2;

  ComplexityEstimate e;
  e.beta = c.n1 + c.n_size_M * M + c.n_size_M1 * m1 + c.n_size_big * big;
  e.c_form = M2 * (c.n1 + c.n_size_M * M2 * M + c.n_size_M1 * m1 * m1 * m1 + c.n_size_big * big * big * big) +
             M4 * (c.n1 + c.n_size_M1 * m1 * m1 + c.n_size_big * big * big + c.n_size_M * M2);
  e.c_fact = c.families * M4 * M2;
  e.total_order = std::log(1.0 / c.epsilon) * std::sqrt(static_cast<double>(e.beta)) *
                  static_cast<double>(e.c_form + e.c_fact);
  return e;
}

namespace {

void check_um(int U, int M) {
  if (U < 1 || M < 1) throw InvalidInput("complexity: U and M must be positive");
}

}  // namespace

ComplexityCounts counts_general(int U, int M, int L1, int L3, int L4, int L5) {
  check_um(U, M);
  if (L1 < 0 || L3 < 0 || L4 < 0 || L5 < 0) throw InvalidInput("complexity: record counts must be nonnegative");
  ComplexityCounts c;
  c.n1 = L1 + U;
  c.n_size_M = L5 + U;
  c.n_size_M1 = L3;
  c.n_size_big = L4;
  c.M = M;
  c.families = 6;
  return c;
}

ComplexityCounts counts_perfect(int U, int M) {
  check_um(U, M);
  ComplexityCounts c;
  c.n1 = U;
  c.n_size_M = U;
  c.M = M;
  c.families = 2;
  return c;
}

ComplexityCounts counts_sproc(int U, int M) {
  check_um(U, M);
  ComplexityCounts c;
  c.n_size_M = U;
  c.n_size_M1 = U;
  c.M = M;
  c.families = 2;
  return c;
}

ComplexityCounts counts_chance(int U, int M) {
  check_um(U, M);
  ComplexityCounts c;
  c.n1 = U;
  c.n_size_M = 2 * static_cast<std::int64_t>(U);
  c.n_size_big = U;
  c.M = M;
  c.families = 4;
  return c;
}

ComplexityCounts counts_ris_theta(int U, int dim) {
  check_um(U, dim);
  ComplexityCounts c;
  c.n1 = U;
  c.n_size_M = 2;
  c.M = dim;
  c.families = 3;
  return c;
}

}  // namespace rankone
