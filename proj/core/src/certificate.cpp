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

#include "rankone/certificate.hpp"

#include <cmath>

#include "rankone/diagnostics.hpp"
#include "rankone/error.hpp"

namespace rankone {

namespace {

double block_dot(const sdp::SpMat& f, const sdp::RMat& z) {
  double s = 0.0;
  for (int k = 0; k < f.outerSize(); ++k) {
    for (sdp::SpMat::InnerIterator it(f, k); it; ++it) s += it.value() * z(it.row(), it.col());
  }
  return s;
}

}  // namespace

DualCertificate build_dual_certificate(const FrameworkProblem& fp, const sdp::SdpResult& result,
                                       const VariableMap& map) {
  if (result.status != sdp::Status::Optimal) {
    throw InvalidInput("build_dual_certificate: result status is " + sdp::to_string(result.status));
  }
  const Compiled comp = compile(fp);
  const auto& blocks = comp.sdp.blocks();
  const auto& info = map.blocks();
  if (blocks.size() != info.size() || result.duals.size() != blocks.size()) {
    throw InvalidInput("build_dual_certificate: result does not match the compiled problem");
  }
  const int U = fp.U(), M = fp.M();
  const int nw = U * M * M;

  DualCertificate cert;
  cert.beta.assign(static_cast<std::size_t>(fp.L1()), 0.0);
  cert.tau.assign(static_cast<std::size_t>(fp.L2()), 0.0);
  cert.kappa.assign(static_cast<std::size_t>(fp.L3()), 0.0);
  cert.f_sign.assign(static_cast<std::size_t>(fp.L5()), 0.0);
  cert.Q.resize(static_cast<std::size_t>(fp.L3()));
  cert.R.resize(static_cast<std::size_t>(fp.L4()));
  cert.S.resize(static_cast<std::size_t>(fp.L5()));
  cert.Nmat.resize(static_cast<std::size_t>(U));

  sdp::RVec grad = comp.sdp.c();
  double eta = 0.0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const BlockInfo& bi = info[b];
    const sdp::RMat& z = result.duals[b];
    const sdp::RMat zorig = bi.scale * z;
    const auto idx = static_cast<std::size_t>(bi.index);
    switch (bi.kind) {
      case BlockKind::C1: cert.beta[idx] = zorig(0, 0); break;
      case BlockKind::C2: cert.tau[idx] = zorig(0, 0); break;
      case BlockKind::C3: cert.Q[idx] = linalg::embed_adjoint(zorig); break;
      case BlockKind::C4: cert.R[idx] = linalg::embed_adjoint(zorig); break;
      case BlockKind::C5: cert.S[idx] = linalg::embed_adjoint(zorig); break;
      case BlockKind::C6: cert.Nmat[idx] = linalg::embed_adjoint(zorig); break;
      case BlockKind::AlphaNonneg: cert.kappa[idx] = zorig(0, 0); break;
      case BlockKind::FNonneg: cert.f_sign[idx] = zorig(0, 0); break;
    }
    if (bi.kind == BlockKind::C6) continue;
    double constant = (blocks[b].constant().cwiseProduct(z)).sum();
    for (const auto& t : blocks[b].terms()) {
      const double v = block_dot(t.mat, z);
      if (t.var < nw) {
        grad(t.var) -= v;
      } else {
        constant += result.x(t.var) * v;
      }
    }
    eta -= constant;
  }

  for (int i = 0; i < U; ++i) {
    cert.Phi.push_back(map.gradient_to_matrix(grad.segment(map.w_offset(i), M * M)));
  }
  cert.eta = eta;
  const Point pt = map.unpack(result.x);
  double value = eta;
  for (int i = 0; i < U; ++i) {
    value += linalg::trace_product(cert.Phi[static_cast<std::size_t>(i)], pt.W[static_cast<std::size_t>(i)]);
  }
  cert.dual_value = value;
  return cert;
}

CertificateReport verify_certificate(const DualCertificate& cert, const FrameworkSolution& sol) {
  CertificateReport rep;
  if (sol.status != sdp::Status::Optimal || cert.Phi.size() != sol.W.size()) return rep;
  const double obj = sol.objective;
  double worst_eig = 0.0, worst_slack = 0.0, worst_rot = 0.0;
  for (std::size_t i = 0; i < sol.W.size(); ++i) {
    const HMat& phi = cert.Phi[i];
    const auto e = linalg::herm_eig(phi);
    const double nrm = e.values.cwiseAbs().maxCoeff();
    worst_eig = std::min(worst_eig, e.values(e.values.size() - 1) / (1.0 + nrm));
    worst_slack = std::max(worst_slack, std::abs(linalg::trace_product(phi, sol.W[i])) / (1.0 + std::abs(obj)));
    if (linalg::max_eig(sol.W[i]) > 1e-10) worst_rot = std::max(worst_rot, rot({sol.W[i]}).max_ratio);
  }
  rep.phi_min_eig_margin = worst_eig;
  rep.slackness_residual = worst_slack;
  rep.max_rot = worst_rot;
  rep.duality_residual = std::abs(cert.dual_value - obj) / std::max(std::abs(obj), 1e-300);
  rep.phi_psd = worst_eig >= -1e-6;
  rep.slackness = worst_slack <= 1e-5;
  rep.rank_one = worst_rot <= 1e-4;
  rep.strong_duality = rep.duality_residual <= 1e-6;
  return rep;
}

}  // namespace rankone
