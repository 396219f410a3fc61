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

#include <cmath>
#include <string>

#include "rankone/error.hpp"
#include "rankone/framework.hpp"

namespace rankone {

namespace {

std::string rec_name(const char* kind, int i) { return std::string(kind) + " record " + std::to_string(i); }

void require_square(const CMat& m, int dim, const std::string& what) {
  if (m.rows() != dim || m.cols() != dim) {
    throw InvalidInput(what + ": expected " + std::to_string(dim) + "x" + std::to_string(dim) + ", got " +
                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  linalg::require_finite(m, what.c_str());
}

void require_herm(const CMat& m, int dim, const std::string& what) {
  require_square(m, dim, what);
  linalg::require_hermitian(m, what.c_str());
}

void require_vec(const CVec& v, int dim, const std::string& what) {
  if (v.size() != dim) throw InvalidInput(what + ": expected length " + std::to_string(dim));
  linalg::require_finite(v, what.c_str());
}

void require_coefs(const std::vector<double>& h, int U, const std::string& what) {
  if (static_cast<int>(h.size()) != U) throw InvalidInput(what + ": expected " + std::to_string(U) + " coefficients");
  for (double x : h) {
    if (!std::isfinite(x)) throw InvalidInput(what + ": non-finite coefficient");
  }
}

void require_self_zero(double g, int i, int U, const std::string& what) {
  if (i >= U && g != 0.0) throw InvalidInput(what + ": self coefficient must be zero beyond the W-block count");
}

double tr(const HMat& x, const HMat& w) { return linalg::trace_product(x, w); }

}  // namespace

FrameworkProblem build_framework(int U, int M, std::vector<HMat> A, Constraints cons) {
  if (U < 1 || M < 1) throw InvalidInput("build_framework: U and M must be positive");
  if (static_cast<int>(A.size()) != U) throw InvalidInput("build_framework: need one objective matrix per W block");
  for (int i = 0; i < U; ++i) require_herm(A[static_cast<std::size_t>(i)], M, rec_name("objective", i));

  const int L4 = static_cast<int>(cons.c4.size());
  const int L5 = static_cast<int>(cons.c5.size());
  for (int i = 0; i < static_cast<int>(cons.c1.size()); ++i) {
    auto& r = cons.c1[static_cast<std::size_t>(i)];
    const std::string nm = rec_name("C1", i);
    require_self_zero(r.a, i, U, nm);
    if (r.X_self.size() == 0) r.X_self = HMat::Zero(M, M);
    require_herm(r.X_self, M, nm + " X_self");
    require_coefs(r.b, U, nm + " b");
    if (static_cast<int>(r.X_cross.size()) != U) throw InvalidInput(nm + ": need U cross matrices");
    for (auto& x : r.X_cross) {
      if (x.size() == 0) x = HMat::Zero(M, M);
      require_herm(x, M, nm + " X_cross");
    }
    if (!std::isfinite(r.c_const) || !std::isfinite(r.c_rho_coef) || !std::isfinite(r.c_f_coef)) {
      throw InvalidInput(nm + ": non-finite constant");
    }
    if (r.c_rho_coef != 0.0 && i >= L4) throw InvalidInput(nm + ": couples to a missing rho variable");
    if (r.c_f_coef != 0.0 && (i >= L5 || cons.c5[static_cast<std::size_t>(i)].f_fixed)) {
      throw InvalidInput(nm + ": couples to a missing f variable");
    }
  }
  if (static_cast<int>(cons.c2.size()) > U) throw InvalidInput("build_framework: at most U C2 records");
  for (int i = 0; i < static_cast<int>(cons.c2.size()); ++i) {
    const auto& r = cons.c2[static_cast<std::size_t>(i)];
    require_herm(r.Mmat, M, rec_name("C2", i));
    if (!std::isfinite(r.m) || !std::isfinite(r.p)) throw InvalidInput(rec_name("C2", i) + ": non-finite scalar");
  }
  for (int i = 0; i < static_cast<int>(cons.c3.size()); ++i) {
    const auto& r = cons.c3[static_cast<std::size_t>(i)];
    const std::string nm = rec_name("C3", i);
    require_self_zero(r.g, i, U, nm);
    require_herm(r.Y, M, nm + " Y");
    require_vec(r.y, M, nm + " y");
    require_coefs(r.h, U, nm + " h");
    if (!std::isfinite(r.d_const) || !std::isfinite(r.d_alpha_coef) || !std::isfinite(r.g)) {
      throw InvalidInput(nm + ": non-finite scalar");
    }
  }
  for (int i = 0; i < L4; ++i) {
    const auto& r = cons.c4[static_cast<std::size_t>(i)];
    const std::string nm = rec_name("C4", i);
    require_self_zero(r.g, i, U, nm);
    require_herm(r.Z, M, nm + " Z");
    require_vec(r.z, M, nm + " z");
    require_coefs(r.h, U, nm + " h");
    if (!std::isfinite(r.e) || !std::isfinite(r.g)) throw InvalidInput(nm + ": non-finite scalar");
  }
  for (int i = 0; i < L5; ++i) {
    const auto& r = cons.c5[static_cast<std::size_t>(i)];
    const std::string nm = rec_name("C5", i);
    require_self_zero(r.g, i, U, nm);
    require_herm(r.D, M, nm + " D");
    require_herm(r.Dt, M, nm + " Dt");
    if (r.Lambda.empty() || r.Lambda.size() != r.Psi.size()) {
      throw InvalidInput(nm + ": Lambda and Psi must be non-empty lists of equal length");
    }
    for (const auto& m : r.Lambda) require_square(m, M, nm + " Lambda");
    for (const auto& m : r.Psi) require_square(m, M, nm + " Psi");
    require_coefs(r.h, U, nm + " h");
    if (r.f_fixed && !(std::isfinite(*r.f_fixed) && *r.f_fixed >= 0.0)) {
      throw InvalidInput(nm + ": fixed f must be finite and nonnegative");
    }
  }

  FrameworkProblem fp;
  fp.U_ = U;
  fp.M_ = M;
  fp.A_ = std::move(A);
  fp.cons_ = std::move(cons);
  return fp;
}

HMat FrameworkProblem::affine_w(double g, const std::vector<double>& h, int i, const std::vector<HMat>& W) const {
  HMat out = HMat::Zero(M_, M_);
  if (i < U_ && g != 0.0) out += g * W[static_cast<std::size_t>(i)];
  for (int j = 0; j < U_; ++j) {
    if (h[static_cast<std::size_t>(j)] != 0.0) out += h[static_cast<std::size_t>(j)] * W[static_cast<std::size_t>(j)];
  }
  return out;
}

double FrameworkProblem::c1_value(int i, const Point& p, bool with_constant) const {
  const auto& r = cons_.c1.at(static_cast<std::size_t>(i));
  double v = 0.0;
  if (i < U_ && r.a != 0.0) v += r.a * tr(r.X_self, p.W[static_cast<std::size_t>(i)]);
  for (int j = 0; j < U_; ++j) {
    const double b = r.b[static_cast<std::size_t>(j)];
    if (b != 0.0) v += b * tr(r.X_cross[static_cast<std::size_t>(j)], p.W[static_cast<std::size_t>(j)]);
  }
  if (with_constant) v += r.c_const;
  if (r.c_rho_coef != 0.0) v += r.c_rho_coef * p.rho.at(static_cast<std::size_t>(i));
  if (r.c_f_coef != 0.0) v += r.c_f_coef * p.f.at(static_cast<std::size_t>(i));
  return v;
}

double FrameworkProblem::c2_value(int i, const Point& p, bool with_constant) const {
  const auto& r = cons_.c2.at(static_cast<std::size_t>(i));
  return r.m * tr(r.Mmat, p.W[static_cast<std::size_t>(i)]) + (with_constant ? r.p : 0.0);
}

HMat FrameworkProblem::c3_block(int i, const Point& p, bool with_constant) const {
  const auto& r = cons_.c3.at(static_cast<std::size_t>(i));
  const double alpha = p.alpha.at(static_cast<std::size_t>(i));
  const HMat B = affine_w(r.g, r.h, i, p.W);
  HMat out(M_ + 1, M_ + 1);
  out.topLeftCorner(M_, M_) = r.Y * B * r.Y + alpha * HMat::Identity(M_, M_);
  out.topRightCorner(M_, 1) = r.Y * B * r.y;
  out.bottomLeftCorner(1, M_) = out.topRightCorner(M_, 1).adjoint();
  out(M_, M_) = (r.y.adjoint() * B * r.y)(0, 0).real() + r.d_alpha_coef * alpha + (with_constant ? r.d_const : 0.0);
  return out;
}

HMat FrameworkProblem::c4a_block(int i, const Point& p, bool /*with_constant*/) const {
  const auto& r = cons_.c4.at(static_cast<std::size_t>(i));
  return schur_c4_to_lmi(r, affine_w(r.g, r.h, i, p.W), p.rho.at(static_cast<std::size_t>(i)));
}

HMat FrameworkProblem::c5_block(int i, const Point& p, bool with_constant) const {
  const auto& r = cons_.c5.at(static_cast<std::size_t>(i));
  const HMat E = affine_w(r.g, r.h, i, p.W);
  CMat sum = CMat::Zero(M_, M_);
  for (std::size_t k = 0; k < r.Lambda.size(); ++k) sum += r.Lambda[k] * E * r.Psi[k];
  CMat out = r.v * r.D * sum * r.Dt;
  double f = 0.0;
  if (r.f_fixed) {
    f = with_constant ? *r.f_fixed : 0.0;
  } else {
    f = p.f.at(static_cast<std::size_t>(i));
  }
  out += f * CMat::Identity(M_, M_);
  return out;
}

double FrameworkProblem::objective(const std::vector<HMat>& W) const {
  double s = 0.0;
  for (int i = 0; i < U_; ++i) s += tr(A_[static_cast<std::size_t>(i)], W[static_cast<std::size_t>(i)]);
  return s;
}

Point FrameworkProblem::zero_point() const {
  Point p;
  p.W.assign(static_cast<std::size_t>(U_), HMat::Zero(M_, M_));
  p.alpha.assign(cons_.c3.size(), 0.0);
  p.rho.assign(cons_.c4.size(), 0.0);
  p.f.assign(cons_.c5.size(), 0.0);
  return p;
}

}  // namespace rankone
