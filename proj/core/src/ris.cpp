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

#include "rankone/ris.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "rankone/diagnostics.hpp"
#include "rankone/error.hpp"
#include "rankone/stats.hpp"

namespace rankone {

CMat RisChannels::G(int i) const { return H * g.at(static_cast<std::size_t>(i)).asDiagonal(); }

std::vector<CVec> RisChannels::effective(const CVec& theta) const {
  if (theta.size() != N) throw InvalidInput("RisChannels: theta has wrong length");
  std::vector<CVec> out;
  for (std::size_t i = 0; i < g.size(); ++i) out.push_back(G(static_cast<int>(i)) * theta);
  return out;
}

RisChannels gen_ris_channels(const SystemConfig& cfg, int N) {
  cfg.validate();
  if (N < 1) throw InvalidInput("gen_ris_channels: N must be positive");
  const HMat root = linalg::psd_sqrt(correlation_matrix(cfg.M, cfg.delta_offdiag));
  std::mt19937_64 rng(cfg.seed);
  RisChannels ris;
  ris.N = N;
  ris.H.resize(cfg.M, N);
  for (int n = 0; n < N; ++n) ris.H.col(n) = root * complex_gaussian(cfg.M, rng);
  for (int i = 0; i < cfg.U; ++i) ris.g.push_back(complex_gaussian(N, rng));
  return ris;
}

namespace {

void check_ris(const SystemConfig& cfg, const RisChannels& ris) {
  cfg.validate();
  if (ris.H.rows() != cfg.M || ris.H.cols() != ris.N || static_cast<int>(ris.g.size()) != cfg.U) {
    throw InvalidInput("ris: channel dimensions do not match the configuration");
  }
  for (const auto& g : ris.g) {
    if (g.size() != ris.N) throw InvalidInput("ris: g_i has wrong length");
  }
}

HMat omega(int N, int k) {
  HMat o = HMat::Zero(N, N);
  o(k, k) = 1.0;
  return o;
}

}  // namespace

FrameworkProblem build_ris_w(const SystemConfig& cfg, const RisChannels& ris, const HMat& theta) {
  check_ris(cfg, ris);
  linalg::require_hermitian(theta, "build_ris_w: Theta");
  if (theta.rows() != ris.N) throw InvalidInput("build_ris_w: Theta has wrong dimension");
  Constraints cons;
  for (int i = 0; i < cfg.U; ++i) {
    const CMat gi = ris.G(i);
    const HMat x = linalg::hermitian_part(gi * theta * gi.adjoint());
    C1Rec r;
    r.a = 1.0 + 1.0 / cfg.gamma_of(i);
    r.b.assign(static_cast<std::size_t>(cfg.U), -1.0);
    r.X_self = x;
    r.X_cross.assign(static_cast<std::size_t>(cfg.U), x);
    r.c_const = -cfg.sigma2;
    cons.c1.push_back(std::move(r));
  }
  std::vector<HMat> A(static_cast<std::size_t>(cfg.U), HMat::Identity(cfg.M, cfg.M));
  return build_framework(cfg.U, cfg.M, std::move(A), std::move(cons));
}

FrameworkProblem build_ris_theta(const SystemConfig& cfg, const RisChannels& ris, const std::vector<HMat>& W) {
  check_ris(cfg, ris);
  if (static_cast<int>(W.size()) != cfg.U) throw InvalidInput("build_ris_theta: need one W per user");
  const int N = ris.N;
  Constraints cons;
  for (int i = 0; i < cfg.U; ++i) {
    const CMat gi = ris.G(i);
    HMat x = (1.0 + 1.0 / cfg.gamma_of(i)) * gi.adjoint() * W[static_cast<std::size_t>(i)] * gi;
    for (int j = 0; j < cfg.U; ++j) x -= gi.adjoint() * W[static_cast<std::size_t>(j)] * gi;
    C1Rec r;
    r.b = {1.0};
    r.X_cross = {linalg::hermitian_part(x)};
    r.c_const = -cfg.sigma2;
    cons.c1.push_back(std::move(r));
  }
  C5Rec diag;
  diag.v = -1.0;
  diag.D = HMat::Identity(N, N);
  diag.Dt = HMat::Identity(N, N);
  for (int k = 0; k < N; ++k) {
    diag.Lambda.push_back(omega(N, k));
    diag.Psi.push_back(omega(N, k));
  }
  diag.g = 1.0;
  diag.h = {0.0};
  diag.f_fixed = 1.0;
  cons.c5.push_back(std::move(diag));
  return build_framework(1, N, {HMat::Identity(N, N)}, std::move(cons));
}

RisTrace ris_alternate(const SystemConfig& cfg, const RisChannels& ris, std::uint64_t init_seed, double tol,
                       int max_outer, const sdp::SolverSettings& st) {
  check_ris(cfg, ris);
  if (max_outer < 1) throw InvalidInput("ris_alternate: max_outer must be at least 1");
  if (!(tol > 0.0)) throw InvalidInput("ris_alternate: tol must be positive");

  std::mt19937_64 rng(init_seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  CVec theta0(ris.N);
  for (int n = 0; n < ris.N; ++n) theta0(n) = std::polar(1.0, phase(rng));
  HMat theta = theta0 * theta0.adjoint();

  RisTrace trace;
  for (int k = 0; k < max_outer; ++k) {
    const FrameworkSolution ws = solve_framework(build_ris_w(cfg, ris, theta), st);
    if (ws.status != sdp::Status::Optimal) {
      if (k == 0) trace.status = ws.status;
      break;
    }
    trace.status = sdp::Status::Optimal;
    trace.iterations.push_back({ws.objective, rot(ws.W).max_ratio, rot_theta(theta)});
    trace.W = ws.W;
    trace.Theta = theta;
    const auto& its = trace.iterations;
    if (its.size() >= 2) {
      const double prev = its[its.size() - 2].objective;
      if (std::abs(prev - ws.objective) <= tol * std::abs(prev)) {
        trace.converged = true;
        break;
      }
    }
    if (k + 1 == max_outer) break;
    const FrameworkSolution ts = solve_framework(build_ris_theta(cfg, ris, ws.W), st);
    if (ts.status != sdp::Status::Optimal) break;
    theta = ts.W[0];
  }
  if (trace.feasible()) {
    trace.theta = extract_rank_one(trace.Theta);
    for (int n = 0; n < trace.theta.size(); ++n) {
      const double a = std::abs(trace.theta(n));
      if (a > 1.0) trace.theta(n) /= a;
    }
  }
  return trace;
}

}  // namespace rankone
