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

#include "rankone/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "rankone/certificate.hpp"
#include "rankone/diagnostics.hpp"
#include "rankone/error.hpp"
#include "rankone/ris.hpp"
#include "rankone/stats.hpp"

namespace rankone {

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::Perfect:
      return "perfect";
    case Scenario::Sproc:
      return "sproc";
    case Scenario::Chance:
      return "chance";
    case Scenario::Ris:
      return "ris";
  }
  return "unknown";
}

Scenario parse_scenario(const std::string& name) {
  for (Scenario s : {Scenario::Perfect, Scenario::Sproc, Scenario::Chance, Scenario::Ris}) {
    if (to_string(s) == name) return s;
  }
  throw InvalidInput("unknown scenario '" + name + "'");
}

void SweepSpec::validate() const {
  if (trials < 1) throw InvalidInput("SweepSpec: trials must be at least 1");
  if (M.empty() || sinr_db.empty()) throw InvalidInput("SweepSpec: M and sinr_db grids must be non-empty");
  if (scenario == Scenario::Ris && N.empty()) throw InvalidInput("SweepSpec: N grid must be non-empty for ris");
  for (int m : M) {
    if (m < 1) throw InvalidInput("SweepSpec: M values must be positive");
    linalg::psd_sqrt(correlation_matrix(m, correlation));
  }
  for (int n : N) {
    if (n < 1) throw InvalidInput("SweepSpec: N values must be positive");
  }
  if (threads < 0) throw InvalidInput("SweepSpec: threads must be nonnegative");
  solver.validate();
  SystemConfig probe = base;
  probe.delta_offdiag = correlation;
  probe.gamma = {1.0};
  probe.validate();
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string status_name(sdp::Status s) { return sdp::to_string(s); }

void fill_certificate(TrialRecord& rec, const FrameworkProblem& fp, const sdp::SolverSettings& st, bool certify) {
  const Compiled comp = compile(fp);
  const sdp::SdpResult res = sdp::solve(comp.sdp, st);
  const FrameworkSolution sol = recover(comp.map, res);
  rec.status = status_name(sol.status);
  if (sol.status != sdp::Status::Optimal) return;
  rec.objective = sol.objective;
  rec.rot_w = rot(sol.W).max_ratio;
  if (certify) {
    const DualCertificate cert = build_dual_certificate(fp, res, comp.map);
    rec.cert_pass = verify_certificate(cert, sol).passed();
  }
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t base, int M, int N, int trial) {
  const std::uint64_t point = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(M)) << 32) |
                              static_cast<std::uint32_t>(N);
  return base ^ splitmix64(splitmix64(point) ^ static_cast<std::uint64_t>(trial));
}

TrialRecord run_trial(const SweepSpec& spec, int M, int N, double sinr_db, int trial) {
  TrialRecord rec;
  rec.scenario = to_string(spec.scenario);
  rec.M = M;
  rec.N = spec.scenario == Scenario::Ris ? N : 0;
  rec.U = spec.base.U;
  rec.sinr_db = sinr_db;
  rec.trial = trial;
  rec.seed = trial_seed(spec.base_seed, M, rec.N, trial);

  SystemConfig cfg = spec.base;
  cfg.M = M;
  cfg.gamma = {db_to_linear(sinr_db)};
  cfg.seed = rec.seed;
  cfg.delta_offdiag = spec.correlation;

  const auto t0 = std::chrono::steady_clock::now();
  try {
    switch (spec.scenario) {
      case Scenario::Perfect:
        fill_certificate(rec, build_perfect(cfg, gen_channels(cfg)), spec.solver, spec.certify);
        break;
      case Scenario::Sproc:
        fill_certificate(rec, build_sproc(cfg, gen_channels(cfg), radius_r(cfg.M, cfg.rho)), spec.solver, spec.certify);
        break;
      case Scenario::Chance:
        fill_certificate(rec, build_chance(cfg, gen_channels(cfg)), spec.solver, spec.certify);
        break;
      case Scenario::Ris: {
        const RisChannels ris = gen_ris_channels(cfg, N);
        const RisTrace trace = ris_alternate(cfg, ris, splitmix64(rec.seed), 1e-5, 30, spec.solver);
        rec.outer_iters = static_cast<int>(trace.iterations.size());
        if (!trace.feasible()) {
          rec.status = trace.status == sdp::Status::Infeasible ? "ScenarioInfeasible" : status_name(trace.status);
          break;
        }
        rec.status = status_name(sdp::Status::Optimal);
        rec.objective = trace.iterations.back().objective;
        rec.rot_w = trace.iterations.back().rot_w;
        rec.rot_theta = trace.iterations.back().rot_theta;
        if (spec.certify) {
          TrialRecord last;
          fill_certificate(last, build_ris_w(cfg, ris, trace.Theta), spec.solver, true);
          rec.cert_pass = last.cert_pass;
        }
        break;
      }
    }
  } catch (const std::exception&) {
    rec.status = status_name(sdp::Status::NumericalFailure);
  }
  if (spec.record_timing) {
    rec.solve_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  return rec;
}

std::vector<TrialRecord> run_sweep(const SweepSpec& spec) {
  spec.validate();
  struct Task {
    int M, N;
    double db;
    int trial;
  };
  std::vector<Task> tasks;
  const std::vector<int> ns = spec.scenario == Scenario::Ris ? spec.N : std::vector<int>{0};
  for (int m : spec.M) {
    for (int n : ns) {
      for (double db : spec.sinr_db) {
        for (int t = 0; t < spec.trials; ++t) tasks.push_back({m, n, db, t});
      }
    }
  }

  std::vector<TrialRecord> out(tasks.size());
  std::atomic<std::size_t> next{0};
  std::size_t finished = 0;
  std::mutex progress_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      const Task& t = tasks[k];
      out[k] = run_trial(spec, t.M, t.N, t.db, t.trial);
      if (spec.progress) {
        std::lock_guard lock(progress_mutex);
        spec.progress(++finished, tasks.size());
      }
    }
  };
  unsigned n_threads = spec.threads > 0 ? static_cast<unsigned>(spec.threads) : std::thread::hardware_concurrency();
  n_threads = std::clamp<unsigned>(n_threads, 1U, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  }
  return out;
}

std::vector<PointSummary> summarize(const std::vector<TrialRecord>& records) {
  std::vector<PointSummary> out;
  for (const auto& r : records) {
    auto it = std::find_if(out.begin(), out.end(), [&](const PointSummary& p) {
      return p.M == r.M && p.N == r.N && p.sinr_db == r.sinr_db;
    });
    if (it == out.end()) {
      out.push_back({});
      it = out.end() - 1;
      it->M = r.M;
      it->N = r.N;
      it->sinr_db = r.sinr_db;
    }
    ++it->trials;
    if (r.status == "Optimal") {
      ++it->feasible;
      it->mean_rot_w += r.rot_w;
      it->max_rot_w = std::max(it->max_rot_w, r.rot_w);
      it->mean_rot_theta += r.rot_theta;
    } else if (r.status == "NumericalFailure" || r.status == "IterationLimit") {
      ++it->failed;
    } else {
      ++it->infeasible;
    }
  }
  for (auto& p : out) {
    const int counted = p.feasible + p.infeasible;
    p.feasibility_rate = counted > 0 ? static_cast<double>(p.feasible) / counted : 0.0;
    if (p.feasible > 0) {
      p.mean_rot_w /= p.feasible;
      p.mean_rot_theta /= p.feasible;
    }
  }
  return out;
}

}  // namespace rankone
