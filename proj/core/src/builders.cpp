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
#include <random>

#include "rankone/error.hpp"
#include "rankone/scenarios.hpp"
#include "rankone/stats.hpp"

namespace rankone {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double SystemConfig::gamma_of(int i) const {
  if (gamma.size() == 1) return gamma[0];
  return gamma.at(static_cast<std::size_t>(i));
}

void SystemConfig::validate() const {
  if (M < 1 || U < 1) throw InvalidInput("SystemConfig: M and U must be positive");
  if (gamma.empty() || (gamma.size() != 1 && static_cast<int>(gamma.size()) != U)) {
    throw InvalidInput("SystemConfig: gamma needs one value or one per user");
  }
  for (double g : gamma) {
    if (!(g > 0.0) || !std::isfinite(g)) throw InvalidInput("SystemConfig: gamma must be positive");
  }
  if (!(sigma2 > 0.0)) throw InvalidInput("SystemConfig: sigma2 must be positive");
  if (!(eps2 >= 0.0)) throw InvalidInput("SystemConfig: eps2 must be nonnegative");
  if (!(rho > 0.0 && rho <= 1.0)) throw InvalidInput("SystemConfig: rho must lie in (0, 1]");
  if (!(delta_offdiag >= 0.0 && delta_offdiag < 1.0)) {
    throw InvalidInput("SystemConfig: delta_offdiag must lie in [0, 1)");
  }
}

HMat correlation_matrix(int M, double offdiag) {
  HMat d = HMat::Constant(M, M, offdiag);
  d.diagonal().setOnes();
  return d;
}

ChannelSet gen_channels(const SystemConfig& cfg) {
  cfg.validate();
  const HMat root = linalg::psd_sqrt(correlation_matrix(cfg.M, cfg.delta_offdiag));
  std::mt19937_64 rng(cfg.seed);
  ChannelSet ch;
  for (int i = 0; i < cfg.U; ++i) {
    ch.h.push_back(root * complex_gaussian(cfg.M, rng));
    ch.error_cov.push_back(cfg.eps2 * HMat::Identity(cfg.M, cfg.M));
  }
  return ch;
}

std::vector<double> sinr_eval(const std::vector<CVec>& w, const std::vector<CVec>& h, double sigma2) {
  if (w.size() != h.size()) throw InvalidInput("sinr_eval: need one beamvector per user");
  std::vector<double> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    double sig = 0.0, intf = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j].size() != h[i].size()) throw InvalidInput("sinr_eval: dimension mismatch");
      const double p = std::norm(h[i].dot(w[j]));
      (i == j ? sig : intf) += p;
    }
    out.push_back(sig / (intf + sigma2));
  }
  return out;
}

namespace {

void check_inputs(const SystemConfig& cfg, const ChannelSet& ch) {
  cfg.validate();
  if (static_cast<int>(ch.h.size()) != cfg.U || static_cast<int>(ch.error_cov.size()) != cfg.U) {
    throw InvalidInput("scenario: channel set does not match U");
  }
  for (const auto& h : ch.h) {
    if (h.size() != cfg.M) throw InvalidInput("scenario: channel has wrong length");
  }
}

std::vector<HMat> identity_objective(const SystemConfig& cfg) {
  return std::vector<HMat>(static_cast<std::size_t>(cfg.U), HMat::Identity(cfg.M, cfg.M));
}

}  // namespace

FrameworkProblem build_perfect(const SystemConfig& cfg, const ChannelSet& ch) {
  check_inputs(cfg, ch);
  Constraints cons;
  for (int i = 0; i < cfg.U; ++i) {
    const HMat x = ch.h[static_cast<std::size_t>(i)] * ch.h[static_cast<std::size_t>(i)].adjoint();
    C1Rec r;
    r.a = 1.0 + 1.0 / cfg.gamma_of(i);
    r.b.assign(static_cast<std::size_t>(cfg.U), -1.0);
    r.X_self = x;
    r.X_cross.assign(static_cast<std::size_t>(cfg.U), x);
    r.c_const = -cfg.sigma2;
    cons.c1.push_back(std::move(r));
  }
  return build_framework(cfg.U, cfg.M, identity_objective(cfg), std::move(cons));
}

FrameworkProblem build_sproc(const SystemConfig& cfg, const ChannelSet& ch, double r) {
  check_inputs(cfg, ch);
  if (!(r >= 0.0)) throw InvalidInput("build_sproc: radius must be nonnegative");
  Constraints cons;
  for (int i = 0; i < cfg.U; ++i) {
    C3Rec rec;
    rec.Y = linalg::psd_sqrt(ch.error_cov[static_cast<std::size_t>(i)]);
    rec.y = ch.h[static_cast<std::size_t>(i)];
    rec.d_const = -cfg.sigma2;
    rec.d_alpha_coef = -r * r;
    rec.g = 1.0 + 1.0 / cfg.gamma_of(i);
    rec.h.assign(static_cast<std::size_t>(cfg.U), -1.0);
    cons.c3.push_back(std::move(rec));
  }
  return build_framework(cfg.U, cfg.M, identity_objective(cfg), std::move(cons));
}

FrameworkProblem build_chance(const SystemConfig& cfg, const ChannelSet& ch) {
  check_inputs(cfg, ch);
  const double delta = -std::log(cfg.rho);
  Constraints cons;
  for (int i = 0; i < cfg.U; ++i) {
    const auto& hh = ch.h[static_cast<std::size_t>(i)];
    const HMat& cov = ch.error_cov[static_cast<std::size_t>(i)];
    const HMat root = linalg::psd_sqrt(cov);
    const double self = 1.0 + 1.0 / cfg.gamma_of(i);
    const std::vector<double> minus(static_cast<std::size_t>(cfg.U), -1.0);

    C1Rec c1;
    const HMat x = cov + hh * hh.adjoint();
    c1.a = self;
    c1.b = minus;
    c1.X_self = x;
    c1.X_cross.assign(static_cast<std::size_t>(cfg.U), x);
    c1.c_const = -cfg.sigma2;
    c1.c_rho_coef = -std::sqrt(2.0 * delta);
    c1.c_f_coef = -delta;
    cons.c1.push_back(std::move(c1));

    C4Rec c4;
    c4.Z = root;
    c4.z = hh;
    c4.e = std::sqrt(2.0);
    c4.g = self;
    c4.h = minus;
    cons.c4.push_back(std::move(c4));

    C5Rec c5;
    c5.v = 1.0;
    c5.D = root;
    c5.Dt = root;
    c5.Lambda = {CMat::Identity(cfg.M, cfg.M)};
    c5.Psi = {CMat::Identity(cfg.M, cfg.M)};
    c5.g = self;
    c5.h = minus;
    cons.c5.push_back(std::move(c5));
  }
  return build_framework(cfg.U, cfg.M, identity_objective(cfg), std::move(cons));
}

OutageEstimate outage_mc(const std::vector<CVec>& w, const ChannelSet& ch, const SystemConfig& cfg, int n_samples,
                         std::uint64_t seed) {
  if (n_samples < 1000) throw InvalidInput("outage_mc: need at least 1000 samples");
  check_inputs(cfg, ch);
  std::vector<HMat> roots;
  for (const auto& c : ch.error_cov) roots.push_back(linalg::psd_sqrt(c));
  std::mt19937_64 rng(seed);
  std::vector<long> misses(ch.h.size(), 0);
  std::vector<CVec> h(ch.h.size());
  for (int s = 0; s < n_samples; ++s) {
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = ch.h[i] + roots[i] * complex_gaussian(cfg.M, rng);
    const auto sinr = sinr_eval(w, h, cfg.sigma2);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (sinr[i] < cfg.gamma_of(static_cast<int>(i))) ++misses[i];
    }
  }
  OutageEstimate est;
  for (long m : misses) {
    const double p = static_cast<double>(m) / n_samples;
    est.probability.push_back(p);
    est.std_error.push_back(std::sqrt(p * (1.0 - p) / n_samples));
  }
  return est;
}

std::vector<double> worstcase_check(const std::vector<CVec>& w, const ChannelSet& ch, double r,
                                    const SystemConfig& cfg, int n_samples, std::uint64_t seed) {
  if (n_samples < 1000) throw InvalidInput("worstcase_check: need at least 1000 samples");
  check_inputs(cfg, ch);
  std::vector<HMat> roots;
  for (const auto& c : ch.error_cov) roots.push_back(linalg::psd_sqrt(c));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> worst = sinr_eval(w, ch.h, cfg.sigma2);
  std::vector<CVec> h(ch.h.size());
  for (int s = 0; s < n_samples; ++s) {
    for (std::size_t i = 0; i < h.size(); ++i) {
      CVec e = complex_gaussian(cfg.M, rng);
      const double nrm = e.norm();
      double len = r;
      if (s % 2 == 1) len = r * std::pow(unif(rng), 1.0 / (2.0 * cfg.M));
      if (nrm > 0.0) e *= len / nrm;
      h[i] = ch.h[i] + roots[i] * e;
    }
    const auto sinr = sinr_eval(w, h, cfg.sigma2);
    for (std::size_t i = 0; i < h.size(); ++i) worst[i] = std::min(worst[i], sinr[i]);
  }
  return worst;
}

}  // namespace rankone
