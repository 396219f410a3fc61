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

#include <algorithm>
#include <cmath>
#include <functional>

#include "rankone/error.hpp"
#include "rankone/framework.hpp"

namespace rankone {

HMat VariableMap::basis(int k) const {
  HMat b = HMat::Zero(M_, M_);
  if (k < M_) {
    b(k, k) = 1.0;
    return b;
  }
  int r = k - M_;
  for (int p = 0; p < M_; ++p) {
    for (int q = p + 1; q < M_; ++q) {
      if (r == 0) {
        b(p, q) = 1.0;
        b(q, p) = 1.0;
        return b;
      }
      if (r == 1) {
        b(p, q) = cplx(0.0, 1.0);
        b(q, p) = cplx(0.0, -1.0);
        return b;
      }
      r -= 2;
    }
  }
  throw InvalidInput("VariableMap::basis: index out of range");
}

HMat VariableMap::gradient_to_matrix(const RVec& grad) const {
  HMat g = HMat::Zero(M_, M_);
  for (int p = 0; p < M_; ++p) g(p, p) = grad(p);
  int k = M_;
  for (int p = 0; p < M_; ++p) {
    for (int q = p + 1; q < M_; ++q) {
      g(p, q) = 0.5 * cplx(grad(k), grad(k + 1));
      g(q, p) = std::conj(g(p, q));
      k += 2;
    }
  }
  return g;
}

RVec VariableMap::pack(const Point& pt) const {
  RVec x = RVec::Zero(n_);
  for (int i = 0; i < U_; ++i) {
    const HMat& w = pt.W.at(static_cast<std::size_t>(i));
    const int o = w_offset(i);
    for (int p = 0; p < M_; ++p) x(o + p) = w(p, p).real();
    int k = o + M_;
    for (int p = 0; p < M_; ++p) {
      for (int q = p + 1; q < M_; ++q) {
        x(k++) = w(p, q).real();
        x(k++) = w(p, q).imag();
      }
    }
  }
  for (int k = 0; k < rho0_ - alpha0_; ++k) x(alpha_offset(k)) = pt.alpha.at(static_cast<std::size_t>(k));
  const int L4 = static_cast<int>(pt.rho.size());
  for (int k = 0; k < L4; ++k) x(rho_offset(k)) = pt.rho[static_cast<std::size_t>(k)];
  for (std::size_t k = 0; k < f_index_.size(); ++k) {
    if (f_index_[k] >= 0) x(f_index_[k]) = pt.f.at(k);
  }
  return x;
}

Point VariableMap::unpack(const RVec& x) const {
  if (x.size() != n_) throw InvalidInput("VariableMap::unpack: wrong vector length");
  Point pt;
  for (int i = 0; i < U_; ++i) {
    const int o = w_offset(i);
    HMat w = HMat::Zero(M_, M_);
    for (int p = 0; p < M_; ++p) w(p, p) = x(o + p);
    int k = o + M_;
    for (int p = 0; p < M_; ++p) {
      for (int q = p + 1; q < M_; ++q) {
        w(p, q) = cplx(x(k), x(k + 1));
        w(q, p) = cplx(x(k), -x(k + 1));
        k += 2;
      }
    }
    pt.W.push_back(std::move(w));
  }
  for (int k = alpha0_; k < rho0_; ++k) pt.alpha.push_back(x(k));
  const int rho_end = n_ - static_cast<int>(std::count_if(f_index_.begin(), f_index_.end(), [](int v) { return v >= 0; }));
  for (int k = rho0_; k < rho_end; ++k) pt.rho.push_back(x(k));
  for (std::size_t k = 0; k < f_index_.size(); ++k) {
    pt.f.push_back(f_index_[k] >= 0 ? x(f_index_[k]) : fixed_f_[k]);
  }
  return pt;
}

struct Compiler {
  static Compiled run(const FrameworkProblem& fp);
};

Compiled Compiler::run(const FrameworkProblem& fp) {
  const int U = fp.U(), M = fp.M();
  VariableMap map;
  map.U_ = U;
  map.M_ = M;
  map.A_ = fp.A();
  map.alpha0_ = U * M * M;
  map.rho0_ = map.alpha0_ + fp.L3();
  int next = map.rho0_ + fp.L4();
  for (const auto& r : fp.cons().c5) {
    map.f_index_.push_back(r.f_fixed ? -1 : next);
    map.fixed_f_.push_back(r.f_fixed ? *r.f_fixed : 0.0);
    if (!r.f_fixed) ++next;
  }
  map.n_ = next;
  const int n = next;

  // Unit point for each variable, built lazily.
  const Point zero = map.unpack(RVec::Zero(n));
  auto unit = [&](int k) {
    RVec x = RVec::Zero(n);
    x(k) = 1.0;
    return map.unpack(x);
  };
  std::vector<Point> units;
  units.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) units.push_back(unit(k));

  std::vector<sdp::Block> blocks;
  auto add_scalar = [&](BlockKind kind, int idx, const std::function<double(const Point&, bool)>& eval) {
    const double f0 = eval(zero, true);
    std::vector<std::pair<int, double>> terms;
    double mx = std::abs(f0);
    for (int k = 0; k < n; ++k) {
      const double v = eval(units[static_cast<std::size_t>(k)], false);
      if (v != 0.0) {
        terms.emplace_back(k, v);
        mx = std::max(mx, std::abs(v));
      }
    }
    const double scale = mx > 0.0 ? 1.0 / mx : 1.0;
    sdp::Block b(1);
    b.set_constant(sdp::RMat::Constant(1, 1, scale * f0));
    for (auto [k, v] : terms) b.add_term(k, sdp::RMat(sdp::RMat::Constant(1, 1, scale * v)));
    blocks.push_back(std::move(b));
    map.blocks_.push_back(BlockInfo{kind, idx, 1, false, scale});
  };
  auto add_matrix = [&](BlockKind kind, int idx, const std::function<HMat(const Point&, bool)>& eval) {
    const HMat f0c = eval(zero, true);
    linalg::require_hermitian(f0c, "compile: constant block");
    const sdp::RMat f0 = linalg::real_embed(f0c);
    std::vector<std::pair<int, sdp::RMat>> terms;
    double mx = f0.cwiseAbs().maxCoeff();
    const auto range = [&]() -> std::pair<int, int> {
      // W variables outside the block never appear in C6; everything else scans all.
      if (kind == BlockKind::C6) return {map.w_offset(idx), map.w_offset(idx) + M * M};
      return {0, n};
    }();
    for (int k = range.first; k < range.second; ++k) {
      const HMat fc = eval(units[static_cast<std::size_t>(k)], false);
      if (fc.cwiseAbs().maxCoeff() == 0.0) continue;
      linalg::require_hermitian(fc, "compile: coefficient block");
      sdp::RMat fr = linalg::real_embed(fc);
      mx = std::max(mx, fr.cwiseAbs().maxCoeff());
      terms.emplace_back(k, std::move(fr));
    }
    const double scale = mx > 0.0 ? 1.0 / mx : 1.0;
    sdp::Block b(static_cast<int>(f0.rows()));
    b.set_constant(scale * f0);
    for (auto& [k, m] : terms) b.add_term(k, sdp::RMat(scale * m));
    blocks.push_back(std::move(b));
    map.blocks_.push_back(BlockInfo{kind, idx, static_cast<int>(f0c.rows()), true, scale});
  };

  for (int i = 0; i < fp.L1(); ++i) {
    add_scalar(BlockKind::C1, i, [&, i](const Point& p, bool wc) { return fp.c1_value(i, p, wc); });
  }
  for (int i = 0; i < fp.L2(); ++i) {
    add_scalar(BlockKind::C2, i, [&, i](const Point& p, bool wc) { return fp.c2_value(i, p, wc); });
  }
  for (int i = 0; i < fp.L3(); ++i) {
    add_matrix(BlockKind::C3, i, [&, i](const Point& p, bool wc) { return fp.c3_block(i, p, wc); });
  }
  for (int i = 0; i < fp.L4(); ++i) {
    add_matrix(BlockKind::C4, i, [&, i](const Point& p, bool wc) { return fp.c4a_block(i, p, wc); });
  }
  for (int i = 0; i < fp.L5(); ++i) {
    add_matrix(BlockKind::C5, i, [&, i](const Point& p, bool wc) { return fp.c5_block(i, p, wc); });
  }
  for (int i = 0; i < U; ++i) {
    add_matrix(BlockKind::C6, i, [i](const Point& p, bool) { return p.W[static_cast<std::size_t>(i)]; });
  }
  for (int i = 0; i < fp.L3(); ++i) {
    add_scalar(BlockKind::AlphaNonneg, i, [i](const Point& p, bool) { return p.alpha[static_cast<std::size_t>(i)]; });
  }
  for (int i = 0; i < fp.L5(); ++i) {
    if (map.f_index_[static_cast<std::size_t>(i)] < 0) continue;
    add_scalar(BlockKind::FNonneg, i, [i](const Point& p, bool) { return p.f[static_cast<std::size_t>(i)]; });
  }

  sdp::RVec c = sdp::RVec::Zero(n);
  for (int i = 0; i < U; ++i) {
    for (int k = 0; k < M * M; ++k) {
      c(map.w_offset(i) + k) = linalg::trace_product(fp.A()[static_cast<std::size_t>(i)], map.basis(k));
    }
  }
  return Compiled{sdp::SdpProblem(std::move(c), std::move(blocks)), std::move(map)};
}

Compiled compile(const FrameworkProblem& fp) { return Compiler::run(fp); }

FrameworkSolution recover(const VariableMap& map, const sdp::SdpResult& result) {
  FrameworkSolution sol;
  sol.status = result.status;
  sol.raw = result;
  if (result.status != sdp::Status::Optimal) return sol;
  Point pt = map.unpack(result.x);
  sol.W = std::move(pt.W);
  sol.alpha = std::move(pt.alpha);
  sol.rho = std::move(pt.rho);
  sol.f = std::move(pt.f);
  for (int i = 0; i < map.U(); ++i) {
    sol.objective += linalg::trace_product(map.A()[static_cast<std::size_t>(i)], sol.W[static_cast<std::size_t>(i)]);
  }
  return sol;
}

sdp::SolverSettings framework_settings() {
  sdp::SolverSettings st;
  st.gap_tol = 1e-9;
  st.feas_tol = 1e-9;
  return st;
}

FrameworkSolution solve_framework(const FrameworkProblem& fp, const sdp::SolverSettings& st) {
  const Compiled comp = compile(fp);
  return recover(comp.map, sdp::solve(comp.sdp, st));
}

}  // namespace rankone
