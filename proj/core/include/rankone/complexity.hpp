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

#include <cstdint>

namespace rankone {

/// PSD block counts of a standard-form problem by size: 1, M, M+1 and M^2+M+1.
/// `families` is the number of matrix families factored per iteration.
struct ComplexityCounts {
  std::int64_t n1 = 0;
  std::int64_t n_size_M = 0;
  std::int64_t n_size_M1 = 0;
  std::int64_t n_size_big = 0;
  std::int64_t M = 1;
  std::int64_t families = 6;
  double epsilon = 1e-8;

  void validate() const;
};

struct ComplexityEstimate {
  std::int64_t beta = 0;
  std::int64_t c_form = 0;
  std::int64_t c_fact = 0;
  double total_order = 0.0;  // ln(1/epsilon) sqrt(beta) (c_form + c_fact)
};

ComplexityEstimate complexity_eval(const ComplexityCounts& c);

/// Counts for the general framework with record counts L1..L5.
ComplexityCounts counts_general(int U, int M, int L1, int L3, int L4, int L5);
ComplexityCounts counts_perfect(int U, int M);
ComplexityCounts counts_sproc(int U, int M);
ComplexityCounts counts_chance(int U, int M);
/// Phase step of the RIS loop; `dim` is the Theta dimension.
ComplexityCounts counts_ris_theta(int U, int dim);

}  // namespace rankone
