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

#include <ostream>

namespace rankone::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // I/O and other non-solver errors
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitUsage = 64;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rankone::cli
