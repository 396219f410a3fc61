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

#include <complex>
#include <span>

#include <Eigen/Dense>

namespace rankone {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

/// Complex Hermitian matrix. Same storage as CMat; the Hermitian property is
/// checked at the API boundary by `require_hermitian`.
using HMat = Eigen::MatrixXcd;

namespace linalg {

/// Eigenvalues in descending order with matching orthonormal eigenvector columns.
struct EigDecomp {
  RVec values;
  CMat vectors;
};

/// Largest absolute entry, 0 for an empty matrix.
double max_abs(const CMat& a);

/// True when max |A - A^H| <= tol * (1 + max |A|).
bool is_hermitian(const CMat& a, double tol = 1e-12);

/// Throws InvalidInput naming `what` if `a` is not square or not Hermitian.
void require_hermitian(const CMat& a, const char* what);

/// Throws InvalidInput if any entry is NaN or infinite.
void require_finite(const CMat& a, const char* what);

/// (A + A^H) / 2
HMat hermitian_part(const CMat& a);

/// Spectral decomposition of a Hermitian matrix, eigenvalues descending.
EigDecomp herm_eig(const HMat& a);

/// Largest eigenvalue (real) of a Hermitian matrix.
double max_eig(const HMat& a);
/// Smallest eigenvalue (real) of a Hermitian matrix.
double min_eig(const HMat& a);
/// Spectral norm of a Hermitian matrix (largest |eigenvalue|).
double spectral_norm(const HMat& a);

/// Hermitian PSD square root. Eigenvalues down to -1e-8 * ||A|| are clamped to
/// zero; anything more negative raises NotPsd.
HMat psd_sqrt(const HMat& a);

/// Real symmetric 2M x 2M embedding [[Re A, -Im A], [Im A, Re A]].
RMat real_embed(const HMat& a);

/// Inverse of real_embed's adjoint: maps a symmetric 2M x 2M matrix Z to the
/// Hermitian H with Tr(real_embed(A) Z) = Re Tr(A H) for all Hermitian A.
HMat embed_adjoint(const RMat& z);

/// max(lambda_max(A), 0)
double s_plus(const HMat& a);

/// Real part of Tr(A B).
double trace_product(const CMat& a, const CMat& b);

/// Column-major vectorisation.
CVec vec(const CMat& a);

}  // namespace linalg
}  // namespace rankone
