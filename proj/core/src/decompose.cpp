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

#include <string>

#include "rankone/error.hpp"
#include "rankone/framework.hpp"

namespace rankone {

namespace {

CVec soc_vector(const C4Rec& rec, const HMat& C) {
  const Eigen::Index M = rec.Z.rows();
  if (C.rows() != M || C.cols() != M) throw InvalidInput("C4: C has wrong dimension");
  const CMat zcz = rec.Z * C * rec.Z;
  CVec s(M * M + M);
  s.head(M) = rec.e * (rec.Z * C * rec.z);
  s.tail(M * M) = linalg::vec(zcz);
  return s;
}

}  // namespace

HMat schur_c4_to_lmi(const C4Rec& rec, const HMat& C, double rho) {
  const CVec s = soc_vector(rec, C);
  const Eigen::Index n = s.size() + 1;
  HMat out = rho * HMat::Identity(n, n);
  out.topRightCorner(n - 1, 1) = s;
  out.bottomLeftCorner(1, n - 1) = s.adjoint();
  return out;
}

bool c4_soc_holds(const C4Rec& rec, const HMat& C, double rho, double tol) {
  return soc_vector(rec, C).norm() <= rho + tol;
}

C3Decomposition decompose_c3(const C3Rec& rec, double alpha) {
  const Eigen::Index M = rec.Y.rows();
  C3Decomposition d;
  d.F = CMat::Zero(M + 1, M + 1);
  d.F.topLeftCorner(M, M) = alpha * CMat::Identity(M, M);
  d.F(M, M) = rec.d_const + rec.d_alpha_coef * alpha;
  d.G.resize(M, M + 1);
  d.G.leftCols(M) = rec.Y;
  d.G.col(M) = rec.y;
  return d;
}

C4Decomposition decompose_c4a(const C4Rec& rec, const HMat& C, double rho) {
  const Eigen::Index M = rec.Z.rows();
  if (C.rows() != M || C.cols() != M) throw InvalidInput("decompose_c4a: C has wrong dimension");
  const Eigen::Index n = M * M + M + 1;
  C4Decomposition d;
  d.K = rho * CMat::Identity(n, n);

  CMat last = CMat::Zero(n, 1);
  last(n - 1, 0) = 1.0;
  d.T = rec.e * last * rec.z.adjoint();
  CMat sel = CMat::Zero(M, n);
  sel.leftCols(M) = CMat::Identity(M, M);
  d.P = rec.Z * sel;
  d.L = d.T * C * d.P;

  const CMat zcz = rec.Z * C * rec.Z;
  d.J = CMat::Zero(n, n);
  for (Eigen::Index p = 0; p < M; ++p) {
    CMat u = CMat::Zero(n, M);
    u(n - 1, p) = 1.0;
    CMat v = CMat::Zero(M, n);
    v.block(0, M + p * M, M, M) = CMat::Identity(M, M);
    d.J += u * zcz * v;
    d.Up.push_back(std::move(u));
    d.Vp.push_back(std::move(v));
  }
  return d;
}

}  // namespace rankone
