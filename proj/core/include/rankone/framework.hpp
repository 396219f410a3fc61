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

#include <optional>
#include <vector>

#include "rankone/linalg.hpp"
#include "rankone/sdp.hpp"

namespace rankone {

/// a Tr(X_self W_i) + sum_j b_j Tr(X_cross_j W_j) + c >= 0, where i is the
/// record index and c = c_const + c_rho_coef * rho_i + c_f_coef * f_i.
struct C1Rec {
  double a = 0.0;
  std::vector<double> b;
  HMat X_self;
  std::vector<HMat> X_cross;
  double c_const = 0.0;
  double c_rho_coef = 0.0;
  double c_f_coef = 0.0;
};

/// m Tr(Mmat W_i) + p >= 0
struct C2Rec {
  double m = 0.0;
  HMat Mmat;
  double p = 0.0;
};

/// [[Y B Y + alpha I, Y B y], [y^H B Y, y^H B y + d]] >= 0 with
/// B = g W_i + sum_j h_j W_j and d = d_const + d_alpha_coef * alpha_i.
struct C3Rec {
  HMat Y;
  CVec y;
  double d_const = 0.0;
  double d_alpha_coef = 0.0;
  double g = 0.0;
  std::vector<double> h;
};

/// || (e Z C z ; vec(Z C Z)) || <= rho_i with C = g W_i + sum_j h_j W_j.
struct C4Rec {
  HMat Z;
  CVec z;
  double e = 0.0;
  double g = 0.0;
  std::vector<double> h;
};

/// f_i I + v D (sum_k Lambda_k E Psi_k) Dt >= 0 with E = g W_i + sum_j h_j W_j.
/// When f_fixed is set, f is that constant instead of a decision variable.
struct C5Rec {
  double v = 0.0;
  HMat D;
  HMat Dt;
  std::vector<CMat> Lambda;
  std::vector<CMat> Psi;
  double g = 0.0;
  std::vector<double> h;
  std::optional<double> f_fixed;
};

struct Constraints {
  std::vector<C1Rec> c1;
  std::vector<C2Rec> c2;
  std::vector<C3Rec> c3;
  std::vector<C4Rec> c4;
  std::vector<C5Rec> c5;
};

/// Values for every framework variable. f has one entry per C5 record; entries
/// for records with a fixed f are ignored.
struct Point {
  std::vector<HMat> W;
  std::vector<double> alpha;
  std::vector<double> rho;
  std::vector<double> f;
};

/// Validated, immutable instance: minimize sum_i Tr(A_i W_i) subject to the
/// constraint records and W_i >= 0, alpha >= 0, f >= 0.
class FrameworkProblem {
 public:
  int U() const { return U_; }
  int M() const { return M_; }
  const std::vector<HMat>& A() const { return A_; }
  const Constraints& cons() const { return cons_; }
  int L1() const { return static_cast<int>(cons_.c1.size()); }
  int L2() const { return static_cast<int>(cons_.c2.size()); }
  int L3() const { return static_cast<int>(cons_.c3.size()); }
  int L4() const { return static_cast<int>(cons_.c4.size()); }
  int L5() const { return static_cast<int>(cons_.c5.size()); }

  /// Constraint values at a point. `with_constant = false` drops every term that
  /// does not depend on a variable, which yields the linear part.
  double c1_value(int i, const Point& p, bool with_constant = true) const;
  double c2_value(int i, const Point& p, bool with_constant = true) const;
  HMat c3_block(int i, const Point& p, bool with_constant = true) const;
  HMat c4a_block(int i, const Point& p, bool with_constant = true) const;
  HMat c5_block(int i, const Point& p, bool with_constant = true) const;

  /// g W_i + sum_j h_j W_j (g only when i < U).
  HMat affine_w(double g, const std::vector<double>& h, int i, const std::vector<HMat>& W) const;

  double objective(const std::vector<HMat>& W) const;
  Point zero_point() const;

 private:
  friend FrameworkProblem build_framework(int, int, std::vector<HMat>, Constraints);
  FrameworkProblem() = default;

  int U_ = 0;
  int M_ = 0;
  std::vector<HMat> A_;
  Constraints cons_;
};

/// Validates dimensions, Hermitian data and the rule that self-coefficients
/// vanish for record indices >= U. Throws InvalidInput.
FrameworkProblem build_framework(int U, int M, std::vector<HMat> A, Constraints cons);

/// The (M^2+M+1) block [[rho I, s], [s^H, rho]] with s = (e Z C z ; vec(Z C Z)).
HMat schur_c4_to_lmi(const C4Rec& rec, const HMat& C, double rho);
/// The raw second-order cone predicate ||s|| <= rho (+ tol).
bool c4_soc_holds(const C4Rec& rec, const HMat& C, double rho, double tol = 0.0);

struct C3Decomposition {
  CMat F;  // diag(alpha I, d)
  CMat G;  // [Y y], M x (M+1)
};
/// F(alpha) + G^H B G reproduces the C3 block.
C3Decomposition decompose_c3(const C3Rec& rec, double alpha);

struct C4Decomposition {
  CMat K;
  CMat L;
  CMat J;
  CMat T;
  CMat P;
  std::vector<CMat> Up;
  std::vector<CMat> Vp;
};
/// K + L + L^H + J + J^H reproduces the C4(a) block; L = T C P and
/// J = sum_p U_p Z C Z V_p.
C4Decomposition decompose_c4a(const C4Rec& rec, const HMat& C, double rho);

enum class BlockKind { C1, C2, C3, C4, C5, C6, AlphaNonneg, FNonneg };

struct BlockInfo {
  BlockKind kind;
  int index;      // record or W index
  int cdim;       // complex dimension before embedding
  bool embedded;  // real_embed applied
  double scale;   // compiled block = scale * original block
};

/// Packing between framework variables and the real SDP variable vector.
class VariableMap {
 public:
  int U() const { return U_; }
  int M() const { return M_; }
  int n() const { return n_; }
  int w_offset(int i) const { return i * M_ * M_; }
  int alpha_offset(int k) const { return alpha0_ + k; }
  int rho_offset(int k) const { return rho0_ + k; }
  /// Variable index of f for C5 record k, -1 when fixed.
  int f_offset(int k) const { return f_index_[static_cast<std::size_t>(k)]; }
  const std::vector<BlockInfo>& blocks() const { return blocks_; }
  const std::vector<HMat>& A() const { return A_; }
  const std::vector<double>& fixed_f() const { return fixed_f_; }

  RVec pack(const Point& p) const;
  Point unpack(const RVec& x) const;

  /// Hermitian basis element k (0 <= k < M^2) for one W block.
  HMat basis(int k) const;
  /// Turns per-basis-coordinate gradient values into the Hermitian matrix G
  /// with d/dx_k Tr(G W) equal to the entries of `grad`.
  HMat gradient_to_matrix(const RVec& grad) const;

 private:
  friend struct Compiler;
  int U_ = 0, M_ = 0, n_ = 0, alpha0_ = 0, rho0_ = 0;
  std::vector<int> f_index_;
  std::vector<double> fixed_f_;
  std::vector<BlockInfo> blocks_;
  std::vector<HMat> A_;
};

struct Compiled {
  sdp::SdpProblem sdp;
  VariableMap map;
};

Compiled compile(const FrameworkProblem& fp);

struct FrameworkSolution {
  sdp::Status status = sdp::Status::NumericalFailure;
  std::vector<HMat> W;
  std::vector<double> alpha;
  std::vector<double> rho;
  std::vector<double> f;
  double objective = 0.0;
  sdp::SdpResult raw;
};

/// Unpacks an Optimal result; any other status comes back with only status and raw set.
FrameworkSolution recover(const VariableMap& map, const sdp::SdpResult& result);

/// Solver settings suited to compiled framework problems.
sdp::SolverSettings framework_settings();

/// compile + solve + recover.
FrameworkSolution solve_framework(const FrameworkProblem& fp, const sdp::SolverSettings& st = framework_settings());

}  // namespace rankone
