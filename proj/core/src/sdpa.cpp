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

#include "rankone/sdpa.hpp"

#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rankone/error.hpp"

namespace rankone::sdp {

namespace {

std::string fmt(const char* f, auto... args) {
  char buf[128];
  const int n = std::snprintf(buf, sizeof buf, f, args...);
  return std::string(buf, static_cast<std::size_t>(n));
}

bool is_diagonal(const RMat& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r != c && m(r, c) != 0.0) return false;
    }
  }
  return true;
}

bool is_diagonal(const SpMat& m) {
  for (int k = 0; k < m.outerSize(); ++k) {
    for (SpMat::InnerIterator it(m, k); it; ++it) {
      if (it.row() != it.col()) return false;
    }
  }
  return true;
}

void emit_upper(std::string& out, int var, int block, const RMat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      if (m(i, j) != 0.0) {
        out += fmt("%d %d %d %d %.17g\n", var, block, static_cast<int>(i) + 1, static_cast<int>(j) + 1, m(i, j));
      }
    }
  }
}

}  // namespace

std::string export_sdpa(const SdpProblem& problem) {
  const auto& blocks = problem.blocks();
  std::string out;
  out += fmt("%d\n", problem.n());
  out += fmt("%d\n", static_cast<int>(blocks.size()));
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Block& blk = blocks[b];
    bool diag = blk.dim() > 1 && is_diagonal(blk.constant());
    for (const auto& t : blk.terms()) diag = diag && is_diagonal(t.mat);
    if (b) out += ' ';
    out += fmt("%d", diag ? -blk.dim() : blk.dim());
  }
  out += '\n';
  for (int j = 0; j < problem.n(); ++j) {
    if (j) out += ' ';
    out += fmt("%.17g", problem.c()(j));
  }
  out += '\n';
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    emit_upper(out, 0, static_cast<int>(b) + 1, -blocks[b].constant());
  }
  for (int j = 0; j < problem.n(); ++j) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (const auto& t : blocks[b].terms()) {
        if (t.var == j) emit_upper(out, j + 1, static_cast<int>(b) + 1, RMat(t.mat));
      }
    }
  }
  return out;
}

SdpProblem parse_sdpa(std::string_view text) {
  std::istringstream in{std::string(text)};
  auto fail = [](const std::string& why) -> SdpProblem { throw InvalidInput("parse_sdpa: " + why); };
  int n = 0, nblocks = 0;
  if (!(in >> n >> nblocks) || n < 1 || nblocks < 1) return fail("bad header");
  std::vector<int> dims(static_cast<std::size_t>(nblocks));
  std::vector<bool> diagonal(dims.size());
  for (std::size_t b = 0; b < dims.size(); ++b) {
    int& d = dims[b];
    if (!(in >> d) || d == 0) return fail("bad block sizes");
    diagonal[b] = d < 0;
    d = d < 0 ? -d : d;
  }
  RVec c(n);
  for (int j = 0; j < n; ++j) {
    if (!(in >> c(j))) return fail("bad objective line");
  }
  std::vector<RMat> f0;
  std::vector<std::map<int, RMat>> coef(dims.size());
  for (int d : dims) f0.push_back(RMat::Zero(d, d));
  int var = 0, blk = 0, i = 0, j = 0;
  double v = 0.0;
  while (in >> var >> blk >> i >> j >> v) {
    if (var < 0 || var > n || blk < 1 || blk > nblocks) return fail("entry out of range");
    const int d = dims[static_cast<std::size_t>(blk - 1)];
    if (i < 1 || j < 1 || i > d || j > d) return fail("entry index out of range");
    if (diagonal[static_cast<std::size_t>(blk - 1)] && i != j) return fail("off-diagonal entry in a diagonal block");
    RMat* m = nullptr;
    if (var == 0) {
      m = &f0[static_cast<std::size_t>(blk - 1)];
      v = -v;
    } else {
      auto [pos, inserted] = coef[static_cast<std::size_t>(blk - 1)].try_emplace(var - 1, RMat::Zero(d, d));
      m = &pos->second;
    }
    (*m)(i - 1, j - 1) = v;
    (*m)(j - 1, i - 1) = v;
  }
  if (!in.eof()) return fail("trailing garbage");
  std::vector<Block> blocks;
  for (std::size_t b = 0; b < dims.size(); ++b) {
    Block blkobj(dims[b]);
    blkobj.set_constant(f0[b]);
    for (const auto& [k, m] : coef[b]) blkobj.add_term(k, m);
    blocks.push_back(std::move(blkobj));
  }
  return SdpProblem(std::move(c), std::move(blocks));
}

}  // namespace rankone::sdp
