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

#include "rankone/linalg.hpp"

#include <cmath>
#include <string>

#include "rankone/error.hpp"

namespace rankone::linalg {

double max_abs(const CMat& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMat& a, double tol) {
  if (a.rows() != a.cols()) return false;
  if (a.size() == 0) return true;
  const double dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
  return dev <= tol * (1.0 + max_abs(a));
}

void require_hermitian(const CMat& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw InvalidInput(std::string(what) + ": matrix is not square (" + std::to_string(a.rows()) +
                       "x" + std::to_string(a.cols()) + ")");
  }
  require_finite(a, what);
  if (!is_hermitian(a)) throw InvalidInput(std::string(what) + ": matrix is not Hermitian");
}

void require_finite(const CMat& a, const char* what) {
  if (!a.allFinite()) throw InvalidInput(std::string(what) + ": non-finite entry");
}

HMat hermitian_part(const CMat& a) { return 0.5 * (a + a.adjoint()); }

EigDecomp herm_eig(const HMat& a) {
  require_hermitian(a, "herm_eig");
  const Eigen::Index n = a.rows();
  EigDecomp out;
  if (n == 0) return out;
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(a));
  if (es.info() != Eigen::Success) throw Error("herm_eig: eigensolver did not converge");
  out.values = es.eigenvalues().reverse();
  out.vectors = es.eigenvectors().rowwise().reverse();
  return out;
}

double max_eig(const HMat& a) {
  if (a.size() == 0) throw InvalidInput("max_eig: empty matrix");
  return herm_eig(a).values(0);
}

double min_eig(const HMat& a) {
  if (a.size() == 0) throw InvalidInput("min_eig: empty matrix");
  const auto e = herm_eig(a);
  return e.values(e.values.size() - 1);
}

double spectral_norm(const HMat& a) {
  if (a.size() == 0) return 0.0;
  return herm_eig(a).values.cwiseAbs().maxCoeff();
}

HMat psd_sqrt(const HMat& a) {
  const auto e = herm_eig(a);
  const Eigen::Index n = a.rows();
  if (n == 0) return HMat(0, 0);
  const double scale = e.values.cwiseAbs().maxCoeff();
  RVec r(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double v = e.values(k);
    if (v < -1e-8 * scale) {
      throw NotPsd("psd_sqrt: eigenvalue " + std::to_string(v) + " is negative");
    }
    r(k) = v > 0.0 ? std::sqrt(v) : 0.0;
  }
  HMat s = e.vectors * r.asDiagonal() * e.vectors.adjoint();
  return hermitian_part(s);
}

RMat real_embed(const HMat& a) {
  const Eigen::Index m = a.rows();
  RMat out(2 * m, 2 * m);
  const RMat re = a.real();
  const RMat im = a.imag();
  out.topLeftCorner(m, m) = re;
  out.topRightCorner(m, m) = -im;
  out.bottomLeftCorner(m, m) = im;
  out.bottomRightCorner(m, m) = re;
  return out;
}

HMat embed_adjoint(const RMat& z) {
  if (z.rows() != z.cols() || z.rows() % 2 != 0) {
    throw InvalidInput("embed_adjoint: expected an even square matrix");
  }
  const Eigen::Index m = z.rows() / 2;
  const RMat re = z.topLeftCorner(m, m) + z.bottomRightCorner(m, m);
  const RMat im = z.bottomLeftCorner(m, m) - z.topRightCorner(m, m);
  HMat h(m, m);
  h.real() = 0.5 * (re + re.transpose());
  h.imag() = 0.5 * (im - im.transpose());
  return h;
}

double s_plus(const HMat& a) { return std::max(max_eig(a), 0.0); }

double trace_product(const CMat& a, const CMat& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw InvalidInput("trace_product: dimension mismatch");
  }
  return (a.transpose().cwiseProduct(b)).sum().real();
}

CVec vec(const CMat& a) { return Eigen::Map<const CVec>(a.data(), a.size()); }

}  // namespace rankone::linalg
