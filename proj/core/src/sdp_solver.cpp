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
#include <limits>
#include <string>
#include <utility>

#include "rankone/error.hpp"
#include "rankone/sdp.hpp"

namespace rankone::sdp {

namespace {

SpMat to_sparse(const RMat& f) {
  std::vector<Eigen::Triplet<double>> trip;
  for (Eigen::Index c = 0; c < f.cols(); ++c) {
    for (Eigen::Index r = 0; r < f.rows(); ++r) {
      if (f(r, c) != 0.0) trip.emplace_back(static_cast<int>(r), static_cast<int>(c), f(r, c));
    }
  }
  SpMat out(f.rows(), f.cols());
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

bool symmetric(const RMat& f) {
  const double scale = f.size() == 0 ? 0.0 : f.cwiseAbs().maxCoeff();
  return (f - f.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * (1.0 + scale);
}

// Tr(F G) for symmetric sparse F and any dense G.
double dot(const SpMat& f, const RMat& g) {
  double s = 0.0;
  for (int k = 0; k < f.outerSize(); ++k) {
    for (SpMat::InnerIterator it(f, k); it; ++it) s += it.value() * g(it.row(), it.col());
  }
  return s;
}

RMat sym(const RMat& a) { return 0.5 * (a + a.transpose()); }

double min_eigenvalue(const RMat& a) {
  Eigen::SelfAdjointEigenSolver<RMat> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

// Largest alpha with X + alpha dX >= 0, +inf when unbounded, 0 when X is not PD.
double max_step(const RMat& x, const RMat& dx) {
  Eigen::LLT<RMat> llt(x);
  if (llt.info() != Eigen::Success) return 0.0;
  const auto l = llt.matrixL();
  RMat y = l.solve(dx);
  RMat w = l.solve(y.transpose());
  const double lam = min_eigenvalue(sym(w));
  if (lam >= 0.0) return std::numeric_limits<double>::infinity();
  return -1.0 / lam;
}

struct Iterate {
  RVec x;
  std::vector<RMat> s;
  std::vector<RMat> z;
};

class Ipm {
 public:
  Ipm(const SdpProblem& p, const SolverSettings& st) : p_(p), st_(st) {
    for (const auto& b : p_.blocks()) norm_f0_sq_ += b.constant().squaredNorm();
  }

  SdpResult run();

 private:
  RMat apply(std::size_t b, const RVec& dx) const {
    const Block& blk = p_.blocks()[b];
    RMat out = RMat::Zero(blk.dim(), blk.dim());
    for (const auto& t : blk.terms()) {
      if (dx(t.var) != 0.0) out += dx(t.var) * t.mat;
    }
    return out;
  }

  RVec adjoint(const std::vector<RMat>& z) const {
    RVec out = RVec::Zero(p_.n());
    const auto& blocks = p_.blocks();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (const auto& t : blocks[b].terms()) out(t.var) += dot(t.mat, z[b]);
    }
    return out;
  }

  double dual_objective(const std::vector<RMat>& z) const {
    double d = 0.0;
    const auto& blocks = p_.blocks();
    for (std::size_t b = 0; b < blocks.size(); ++b) d -= (blocks[b].constant().cwiseProduct(z[b])).sum();
    return d;
  }

  void initial_point(Iterate& it) const;

  const SdpProblem& p_;
  const SolverSettings& st_;
  double norm_f0_sq_ = 0.0;
};

void Ipm::initial_point(Iterate& it) const {
  it.x = RVec::Zero(p_.n());
  for (const auto& blk : p_.blocks()) {
    const double n = blk.dim();
    double xi = std::max(10.0, std::sqrt(n));
    double fmax = blk.constant().norm();
    for (const auto& t : blk.terms()) {
      const double fn = t.mat.norm();
      fmax = std::max(fmax, fn);
      xi = std::max(xi, n * (1.0 + std::abs(p_.c()(t.var))) / (1.0 + fn));
    }
    const double eta = std::max({10.0, std::sqrt(n), (1.0 + fmax) / std::sqrt(n)});
    it.z.push_back(xi * RMat::Identity(blk.dim(), blk.dim()));
    it.s.push_back(eta * RMat::Identity(blk.dim(), blk.dim()));
  }
}

SdpResult Ipm::run() {
  const auto& blocks = p_.blocks();
  const std::size_t nb = blocks.size();
  const int n = p_.n();
  const double total_dim = p_.total_dim();
  const double norm_c = p_.c().norm();

  Iterate it;
  initial_point(it);
  double z0 = 0.0;
  for (const auto& z : it.z) z0 += z.norm();

  SdpResult res;
  res.phase1_bound = std::numeric_limits<double>::quiet_NaN();

  std::vector<RMat> rp(nb), sinv(nb);
  double best_merit = std::numeric_limits<double>::infinity();
  int best_merit_iter = 0;
  int tiny_steps = 0;

  // On a stall the best iterate is accepted when it meets ten times the tolerances.
  SdpResult best;
  double best_score = std::numeric_limits<double>::infinity();
  auto settle = [&](Status fallback) {
    if (best_score <= 10.0) {
      bool slack_ok = true;
      for (std::size_t b = 0; b < nb && slack_ok; ++b) {
        slack_ok = min_eigenvalue(blocks[b].evaluate(best.x)) >= -10.0 * st_.feas_tol;
      }
      if (slack_ok) {
        best.status = Status::Optimal;
        return best;
      }
    }
    res.status = fallback;
    return res;
  };

  for (int iter = 0;; ++iter) {
    // Residuals and measures.
    double rp_sq = 0.0, mu_sum = 0.0;
    for (std::size_t b = 0; b < nb; ++b) {
      rp[b] = blocks[b].evaluate(it.x) - it.s[b];
      rp_sq += rp[b].squaredNorm();
      mu_sum += (it.s[b].cwiseProduct(it.z[b])).sum();
    }
    const RVec rd = p_.c() - adjoint(it.z);
    const double pobj = p_.c().dot(it.x);
    const double dobj = dual_objective(it.z);
    const double mu = mu_sum / total_dim;
    const double pinf = std::sqrt(rp_sq) / (1.0 + std::sqrt(norm_f0_sq_));
    const double dinf = rd.norm() / (1.0 + norm_c);
    const double relgap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
    const double compgap = std::max(std::abs(pobj - dobj), std::abs(mu_sum)) / (1.0 + std::abs(pobj));

    res.x = it.x;
    res.duals = it.z;
    res.primal_obj = pobj;
    res.dual_obj = dobj;
    res.gap = relgap;
    res.primal_infeas = pinf;
    res.dual_infeas = dinf;
    res.iterations = iter;

    const double score = std::max({pinf / st_.feas_tol, dinf / st_.feas_tol, relgap / st_.gap_tol, compgap / st_.gap_tol});
    if (std::isfinite(score) && score < best_score) {
      best_score = score;
      best = res;
    }
    if (!std::isfinite(pobj) || !std::isfinite(dobj) || !std::isfinite(mu)) {
      return settle(Status::NumericalFailure);
    }

    if (pinf <= st_.feas_tol && dinf <= st_.feas_tol && relgap <= st_.gap_tol && compgap <= st_.gap_tol) {
      bool slack_ok = true;
      for (std::size_t b = 0; b < nb && slack_ok; ++b) {
        slack_ok = min_eigenvalue(blocks[b].evaluate(it.x)) >= -st_.feas_tol;
      }
      if (slack_ok) {
        res.status = Status::Optimal;
        return res;
      }
    }
    if (iter >= st_.max_iter) {
      return settle(Status::IterationLimit);
    }
    if (pinf <= 1e-6 && it.x.lpNorm<Eigen::Infinity>() > 1e9 && pobj < -1e9 * (1.0 + norm_c)) {
      res.status = Status::Unbounded;
      return res;
    }
    double zn = 0.0;
    for (const auto& z : it.z) zn += z.norm();
    if (zn > 1e9 * z0 && dobj > 0.0) {
      // Dual iterates diverge along a direction certifying primal infeasibility.
      return settle(Status::NumericalFailure);
    }
    if (score < 0.9 * best_merit) {
      best_merit = score;
      best_merit_iter = iter;
    } else if (iter - best_merit_iter > 20) {
      return settle(Status::NumericalFailure);
    }

    // Schur complement.
    RMat m = RMat::Zero(n, n);
    for (std::size_t b = 0; b < nb; ++b) {
      Eigen::LLT<RMat> llt(it.s[b]);
      if (llt.info() != Eigen::Success) {
        return settle(Status::NumericalFailure);
      }
      sinv[b] = llt.solve(RMat::Identity(blocks[b].dim(), blocks[b].dim()));
      sinv[b] = sym(sinv[b]);
      const auto& terms = blocks[b].terms();
      for (std::size_t j = 0; j < terms.size(); ++j) {
        const RMat g = sinv[b] * (terms[j].mat * it.z[b]);
        for (std::size_t k = j; k < terms.size(); ++k) {
          const double v = dot(terms[k].mat, g);
          m(terms[j].var, terms[k].var) += v;
          if (k != j) m(terms[k].var, terms[j].var) += v;
        }
      }
    }
    m = sym(m);
    // Jacobi scaling before factoring.
    RVec dscale = m.diagonal().cwiseMax(std::numeric_limits<double>::min()).cwiseSqrt().cwiseInverse();
    m = dscale.asDiagonal() * m * dscale.asDiagonal();
    Eigen::LLT<RMat> mchol(m);
    Eigen::LDLT<RMat> mldlt;
    const bool use_llt = mchol.info() == Eigen::Success;
    if (!use_llt) {
      mldlt.compute(m);
      if (mldlt.info() != Eigen::Success || !mldlt.isPositive()) {
        return settle(Status::NumericalFailure);
      }
    }
    auto solve_scaled = [&](const RVec& r) -> RVec { return use_llt ? RVec(mchol.solve(r)) : RVec(mldlt.solve(r)); };
    auto solve_m = [&](const RVec& r) -> RVec {
      const RVec rs = dscale.cwiseProduct(r);
      RVec y = solve_scaled(rs);
      for (int refine = 0; refine < 2; ++refine) y += solve_scaled(rs - m * y);
      return dscale.cwiseProduct(y);
    };

    auto direction = [&](const std::vector<RMat>& h, std::vector<RMat>& ds, std::vector<RMat>& dz, RVec& dx,
                         double smu, const std::vector<RMat>* corr) {
      RVec rhs = -p_.c();
      for (std::size_t b = 0; b < nb; ++b) {
        for (const auto& t : blocks[b].terms()) rhs(t.var) += dot(t.mat, h[b]);
      }
      dx = solve_m(rhs);
      for (std::size_t b = 0; b < nb; ++b) {
        ds[b] = rp[b] + apply(b, dx);
        dz[b] = smu * sinv[b] - it.z[b] - sym(it.z[b] * ds[b] * sinv[b]);
        if (corr) dz[b] -= (*corr)[b];
      }
      // One refinement pass on A*(dZ) = rd.
      const RVec err = adjoint(dz) - rd;
      const RVec ddx = solve_m(err);
      dx += ddx;
      for (std::size_t b = 0; b < nb; ++b) {
        const RMat dds = apply(b, ddx);
        ds[b] += dds;
        dz[b] -= sym(it.z[b] * dds * sinv[b]);
      }
    };

    std::vector<RMat> h(nb), ds(nb), dz(nb), corr(nb);
    RVec dx;
    for (std::size_t b = 0; b < nb; ++b) h[b] = -sym(it.z[b] * rp[b] * sinv[b]);
    direction(h, ds, dz, dx, 0.0, nullptr);

    double ap = 1.0, ad = 1.0;
    for (std::size_t b = 0; b < nb; ++b) {
      ap = std::min(ap, max_step(it.s[b], ds[b]));
      ad = std::min(ad, max_step(it.z[b], dz[b]));
    }
    double mu_aff = 0.0;
    for (std::size_t b = 0; b < nb; ++b) {
      mu_aff += ((it.s[b] + ap * ds[b]).cwiseProduct(it.z[b] + ad * dz[b])).sum();
    }
    mu_aff /= total_dim;
    const double ratio = std::clamp(mu_aff / mu, 0.0, 1.0);
    const double sigma = ratio * ratio * ratio;

    for (std::size_t b = 0; b < nb; ++b) {
      corr[b] = sym(dz[b] * ds[b] * sinv[b]);
      h[b] = sigma * mu * sinv[b] - sym(it.z[b] * rp[b] * sinv[b]) - corr[b];
    }
    direction(h, ds, dz, dx, sigma * mu, &corr);

    double ap_max = std::numeric_limits<double>::infinity(), ad_max = ap_max;
    for (std::size_t b = 0; b < nb; ++b) {
      ap_max = std::min(ap_max, max_step(it.s[b], ds[b]));
      ad_max = std::min(ad_max, max_step(it.z[b], dz[b]));
    }
    constexpr double tau = 0.98;
    ap = std::min(1.0, tau * ap_max);
    ad = std::min(1.0, tau * ad_max);
    if (!std::isfinite(dx.sum())) {
      return settle(Status::NumericalFailure);
    }
    tiny_steps = (ap < 1e-8 && ad < 1e-8) ? tiny_steps + 1 : 0;
    if (tiny_steps >= 3) {
      return settle(Status::NumericalFailure);
    }

    it.x += ap * dx;
    for (std::size_t b = 0; b < nb; ++b) {
      it.s[b] = sym(it.s[b] + ap * ds[b]);
      it.z[b] = sym(it.z[b] + ad * dz[b]);
    }
  }
}

SdpProblem phase_one(const SdpProblem& p) {
  const int t = p.n();
  std::vector<Block> blocks;
  blocks.reserve(p.blocks().size() + 1);
  for (const auto& b : p.blocks()) {
    Block nb = b;
    nb.add_term(t, RMat(RMat::Identity(b.dim(), b.dim())));
    blocks.push_back(std::move(nb));
  }
  Block floor(1);
  floor.set_constant(RMat::Ones(1, 1));
  floor.add_term(t, RMat(RMat::Ones(1, 1)));
  blocks.push_back(std::move(floor));
  RVec c = RVec::Zero(t + 1);
  c(t) = 1.0;
  return SdpProblem(std::move(c), std::move(blocks));
}

}  // namespace

Block::Block(int dim) : dim_(dim), f0_(RMat::Zero(dim, dim)) {
  if (dim < 1) throw InvalidInput("Block: dimension must be positive");
}

void Block::set_constant(const RMat& f0) {
  if (f0.rows() != dim_ || f0.cols() != dim_) throw InvalidInput("Block: constant has wrong dimension");
  if (!f0.allFinite()) throw InvalidInput("Block: constant has non-finite entries");
  if (!symmetric(f0)) throw InvalidInput("Block: constant is not symmetric");
  f0_ = sym(f0);
}

void Block::add_term(int var, const RMat& f) {
  if (f.rows() != dim_ || f.cols() != dim_) throw InvalidInput("Block: coefficient has wrong dimension");
  if (!f.allFinite()) throw InvalidInput("Block: coefficient has non-finite entries");
  if (!symmetric(f)) throw InvalidInput("Block: coefficient is not symmetric");
  add_term(var, to_sparse(sym(f)));
}

void Block::add_term(int var, const SpMat& f) {
  if (var < 0) throw InvalidInput("Block: negative variable index");
  if (f.rows() != dim_ || f.cols() != dim_) throw InvalidInput("Block: coefficient has wrong dimension");
  SpMat g = f.pruned(0.0);
  if (g.nonZeros() == 0) return;
  auto pos = std::lower_bound(terms_.begin(), terms_.end(), var,
                              [](const Term& t, int v) { return t.var < v; });
  if (pos != terms_.end() && pos->var == var) {
    pos->mat = SpMat(pos->mat + g).pruned(0.0);
    if (pos->mat.nonZeros() == 0) terms_.erase(pos);
  } else {
    terms_.insert(pos, Term{var, std::move(g)});
  }
}

RMat Block::evaluate(const RVec& x) const {
  RMat out = f0_;
  for (const auto& t : terms_) {
    if (t.var >= x.size()) throw InvalidInput("Block::evaluate: point too short");
    out += x(t.var) * t.mat;
  }
  return out;
}

RMat Block::coefficient(int var) const {
  for (const auto& t : terms_) {
    if (t.var == var) return RMat(t.mat);
  }
  return RMat::Zero(dim_, dim_);
}

SdpProblem::SdpProblem(RVec c, std::vector<Block> blocks) : c_(std::move(c)), blocks_(std::move(blocks)) {
  if (c_.size() < 1) throw InvalidInput("SdpProblem: at least one variable required");
  if (blocks_.empty()) throw InvalidInput("SdpProblem: at least one block required");
  if (!c_.allFinite()) throw InvalidInput("SdpProblem: objective has non-finite entries");
  for (const auto& b : blocks_) {
    for (const auto& t : b.terms()) {
      if (t.var >= c_.size()) throw InvalidInput("SdpProblem: block references variable out of range");
    }
  }
}

int SdpProblem::total_dim() const {
  int s = 0;
  for (const auto& b : blocks_) s += b.dim();
  return s;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Optimal:
      return "Optimal";
    case Status::Infeasible:
      return "Infeasible";
    case Status::Unbounded:
      return "Unbounded";
    case Status::NumericalFailure:
      return "NumericalFailure";
    case Status::IterationLimit:
      return "IterationLimit";
  }
  return "Unknown";
}

void SolverSettings::validate() const {
  if (!(gap_tol > 0.0) || !(feas_tol > 0.0) || !(infeas_threshold > 0.0)) {
    throw InvalidInput("SolverSettings: tolerances must be positive");
  }
  if (max_iter < 1) throw InvalidInput("SolverSettings: max_iter must be at least 1");
}

SdpResult solve(const SdpProblem& problem, const SolverSettings& settings) {
  settings.validate();
  SdpResult res = Ipm(problem, settings).run();
  if (res.status == Status::Optimal || res.status == Status::Unbounded) return res;

  SolverSettings p1s = settings;
  p1s.gap_tol = std::max(settings.gap_tol, 1e-9);
  p1s.max_iter = std::min(settings.max_iter, 120);
  const SdpProblem p1 = phase_one(problem);
  const SdpResult r1 = Ipm(p1, p1s).run();
  const bool usable = r1.status == Status::Optimal || r1.dual_infeas <= 1e-6;
  if (usable) {
    res.phase1_bound = r1.dual_obj;
    if (r1.dual_obj > settings.infeas_threshold) res.status = Status::Infeasible;
  }
  return res;
}

KktReport check_kkt(const SdpProblem& problem, const SdpResult& result) {
  if (result.status != Status::Optimal) {
    throw InvalidInput("check_kkt: result status is " + to_string(result.status));
  }
  const auto& blocks = problem.blocks();
  if (result.duals.size() != blocks.size() || result.x.size() != problem.n()) {
    throw InvalidInput("check_kkt: result does not match problem");
  }
  KktReport rep;
  RVec ad = RVec::Zero(problem.n());
  double dobj = 0.0;
  double comp = 0.0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const RMat f = blocks[b].evaluate(result.x);
    const RMat& z = result.duals[b];
    rep.primal_violation = std::max(rep.primal_violation, -min_eigenvalue(sym(f)));
    rep.dual_violation = std::max(rep.dual_violation, -min_eigenvalue(sym(z)));
    for (const auto& t : blocks[b].terms()) ad(t.var) += dot(t.mat, z);
    dobj -= (blocks[b].constant().cwiseProduct(z)).sum();
    comp = std::max(comp, std::abs((f.cwiseProduct(z)).sum()));
  }
  const double pobj = problem.c().dot(result.x);
  rep.primal_violation = std::max(rep.primal_violation, 0.0);
  rep.dual_violation = std::max(rep.dual_violation, (ad - problem.c()).lpNorm<Eigen::Infinity>() /
                                                        (1.0 + problem.c().lpNorm<Eigen::Infinity>()));
  rep.gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
  rep.complementarity = comp / (1.0 + std::abs(pobj));
  return rep;
}

}  // namespace rankone::sdp
