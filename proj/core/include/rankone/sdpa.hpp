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

#include <string>
#include <string_view>

#include "rankone/sdp.hpp"

namespace rankone::sdp {

/// Sparse SDPA text (".dat-s"). SDPA reads sum_i x_i F_i - F_0 >= 0, so the
/// constant matrix is written negated.
std::string export_sdpa(const SdpProblem& problem);

/// Reads the layout written by export_sdpa back into a problem.
SdpProblem parse_sdpa(std::string_view text);

}  // namespace rankone::sdp
