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

#include <stdexcept>
#include <string>

namespace rankone {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input failed a precondition (dimension mismatch, non-Hermitian data, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A matrix expected to be positive semidefinite has a materially negative eigenvalue.
class NotPsd : public Error {
 public:
  using Error::Error;
};

/// A requested quantity is undefined for the given input (e.g. ROT of a zero matrix).
class Undefined : public Error {
 public:
  using Error::Error;
};

}  // namespace rankone
