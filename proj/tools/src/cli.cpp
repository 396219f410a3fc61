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

#include "rankone_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rankone/certificate.hpp"
#include "rankone/complexity.hpp"
#include "rankone/diagnostics.hpp"
#include "rankone/error.hpp"
#include "rankone/experiments.hpp"
#include "rankone/ris.hpp"
#include "rankone/sdpa.hpp"
#include "rankone/stats.hpp"
#include "rankone_cli/config.hpp"

namespace rankone::cli {

namespace {

namespace fs = std::filesystem;

struct Invocation {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string output_dir;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

CliConfig load(const Invocation& inv) {
  CliConfig cfg;
  if (!inv.config_path.empty()) {
    std::ifstream f(inv.config_path);
    if (!f) throw InvalidInput("cannot read config file " + inv.config_path);
    std::stringstream ss;
    ss << f.rdbuf();
    cfg = parse_config(ss.str(), cfg);
  }
  for (const auto& o : inv.overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw InvalidInput("--set expects key=value, got '" + o + "'");
    apply_setting(cfg, o.substr(0, eq), o.substr(eq + 1));
  }
  if (!inv.output_dir.empty()) cfg.output_dir = inv.output_dir;
  if (cfg.output_dir.empty()) cfg.output_dir = default_output_dir();
  cfg.validate();
  return cfg;
}

void require_single_m(const CliConfig& cfg) {
  if (cfg.M.size() != 1) throw InvalidInput("this command takes a single M value");
}

int exit_code(sdp::Status s) {
  switch (s) {
    case sdp::Status::Optimal:
      return kExitOk;
    case sdp::Status::Infeasible:
      return kExitInfeasible;
    default:
      return kExitNumerical;
  }
}

ChannelSet channels_for(const CliConfig& cfg, const SystemConfig& sys) {
  if (cfg.channels == "random") return gen_channels(sys);
  ChannelSet ch;
  for (int i = 0; i < sys.U; ++i) {
    ch.h.push_back(CVec::Unit(sys.M, i));
    ch.error_cov.push_back(sys.eps2 * HMat::Identity(sys.M, sys.M));
  }
  return ch;
}

FrameworkProblem build(const CliConfig& cfg, const SystemConfig& sys, const ChannelSet& ch) {
  switch (cfg.scenario) {
    case Scenario::Perfect:
      return build_perfect(sys, ch);
    case Scenario::Sproc:
      return build_sproc(sys, ch, cfg.radius.value_or(radius_r(sys.M, sys.rho)));
    case Scenario::Chance:
      return build_chance(sys, ch);
    case Scenario::Ris:
      break;
  }
  throw InvalidInput("scenario ris is handled by the ris command");
}

std::string beam_csv(const std::vector<CVec>& w) {
  std::string s = "user,antenna,re,im\n";
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (int k = 0; k < w[i].size(); ++k) {
      s += std::to_string(i) + "," + std::to_string(k) + "," + fmt("%.17g", w[i](k).real()) + "," +
           fmt("%.17g", w[i](k).imag()) + "\n";
    }
  }
  return s;
}

void write_out(const CliConfig& cfg, const std::string& name, const std::string& content, std::ostream& out) {
  fs::create_directories(cfg.output_dir);
  const fs::path p = fs::path(cfg.output_dir) / name;
  write_atomic(p, content);
  out << "wrote " << p.string() << "\n";
}

int cmd_ris(const CliConfig& cfg, std::ostream& out) {
  require_single_m(cfg);
  const SystemConfig sys = cfg.system();
  const RisChannels ris = gen_ris_channels(sys, cfg.N.front());
  const RisTrace trace = ris_alternate(sys, ris, cfg.seed ^ 0x5bd1e995ULL, 1e-5, 30, cfg.solver());
  if (!trace.feasible()) {
    out << "status: " << (trace.status == sdp::Status::Infeasible ? "ScenarioInfeasible" : sdp::to_string(trace.status))
        << "\n";
    return exit_code(trace.status);
  }
  std::string csv = "iteration,objective,rot_w,rot_theta\n";
  for (std::size_t k = 0; k < trace.iterations.size(); ++k) {
    const auto& it = trace.iterations[k];
    csv += std::to_string(k + 1) + "," + fmt("%.17g", it.objective) + "," + fmt("%.17g", it.rot_w) + "," +
           fmt("%.17g", it.rot_theta) + "\n";
  }
  const auto& last = trace.iterations.back();
  out << "status: Optimal\n"
      << "converged: " << (trace.converged ? "yes" : "no") << "\n"
      << "outer_iterations: " << trace.iterations.size() << "\n"
      << "objective: " << fmt("%.10g", last.objective) << "\n"
      << "rot_w: " << fmt("%.3e", last.rot_w) << "\n"
      << "rot_theta: " << fmt("%.3e", last.rot_theta) << "\n";
  std::vector<CVec> w;
  for (const auto& W : trace.W) w.push_back(extract_rank_one(W));
  const auto sinr = sinr_eval(w, ris.effective(trace.theta), sys.sigma2);
  for (std::size_t i = 0; i < sinr.size(); ++i) out << "sinr_db[" << i << "]: " << fmt("%.6f", 10 * std::log10(sinr[i])) << "\n";
  write_out(cfg, "ris_trace.csv", csv, out);
  write_out(cfg, "ris_beamvectors.csv", beam_csv(w), out);
  write_out(cfg, "ris_theta.csv", beam_csv({trace.theta}), out);
  return kExitOk;
}

int cmd_solve(const CliConfig& cfg, bool certify, std::ostream& out) {
  if (cfg.scenario == Scenario::Ris) return cmd_ris(cfg, out);
  require_single_m(cfg);
  const SystemConfig sys = cfg.system();
  const ChannelSet ch = channels_for(cfg, sys);
  const FrameworkProblem fp = build(cfg, sys, ch);
  const Compiled comp = compile(fp);
  const sdp::SdpResult res = sdp::solve(comp.sdp, cfg.solver());
  const FrameworkSolution sol = recover(comp.map, res);
  out << "status: " << sdp::to_string(sol.status) << "\n"
      << "iterations: " << res.iterations << "\n";
  if (sol.status == sdp::Status::Infeasible) out << "phase1_bound: " << fmt("%.6e", res.phase1_bound) << "\n";
  if (sol.status != sdp::Status::Optimal) return exit_code(sol.status);

  const RotReport r = rot(sol.W);
  out << "objective: " << fmt("%.10g", sol.objective) << "\n"
      << "rot_w: " << fmt("%.3e", r.max_ratio) << "\n";
  std::vector<CVec> w;
  for (const auto& W : sol.W) w.push_back(extract_rank_one(W));
  const auto sinr = sinr_eval(w, ch.h, sys.sigma2);
  for (std::size_t i = 0; i < sinr.size(); ++i) out << "sinr_db[" << i << "]: " << fmt("%.6f", 10 * std::log10(sinr[i])) << "\n";

  if (certify) {
    const DualCertificate cert = build_dual_certificate(fp, res, comp.map);
    const CertificateReport rep = verify_certificate(cert, sol);
    auto line = [&](const char* name, bool ok, double v) {
      out << name << ": " << (ok ? "pass" : "FAIL") << " (" << fmt("%.3e", v) << ")\n";
    };
    line("phi_psd", rep.phi_psd, rep.phi_min_eig_margin);
    line("slackness", rep.slackness, rep.slackness_residual);
    line("rank_one", rep.rank_one, rep.max_rot);
    line("strong_duality", rep.strong_duality, rep.duality_residual);
    out << "dual_value: " << fmt("%.10g", cert.dual_value) << "\n";
    for (std::size_t i = 0; i < cert.beta.size(); ++i) out << "beta[" << i << "]: " << fmt("%.6g", cert.beta[i]) << "\n";
    out << "certificate: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
  }
  write_out(cfg, to_string(cfg.scenario) + "_beamvectors.csv", beam_csv(w), out);
  return kExitOk;
}

int cmd_sweep(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  SweepSpec spec = cfg.sweep();
  const std::size_t per_point = static_cast<std::size_t>(cfg.trials);
  spec.progress = [&err, per_point](std::size_t done, std::size_t total) {
    if (done % per_point == 0 || done == total) err << "[" << done / per_point << "/" << total / per_point << " points]\n";
  };
  const auto records = run_sweep(spec);
  for (const auto& p : emit_outputs(records, spec, cfg.output_dir)) out << "wrote " << p.string() << "\n";
  out << "M,N,sinr_db,feasible,infeasible,failed,feasibility_rate,mean_rot_w,max_rot_w\n";
  for (const auto& p : summarize(records)) {
    out << p.M << "," << p.N << "," << fmt("%g", p.sinr_db) << "," << p.feasible << "," << p.infeasible << ","
        << p.failed << "," << fmt("%.4f", p.feasibility_rate) << "," << fmt("%.3e", p.mean_rot_w) << ","
        << fmt("%.3e", p.max_rot_w) << "\n";
  }
  return kExitOk;
}

void print_estimate(std::ostream& out, const std::string& label, const ComplexityCounts& c) {
  const ComplexityEstimate e = complexity_eval(c);
  out << label << ": beta=" << e.beta << " c_form=" << e.c_form << " c_fact=" << e.c_fact
      << " total_order=" << fmt("%.6e", e.total_order) << "\n";
}

int cmd_complexity(const CliConfig& cfg, std::ostream& out) {
  require_single_m(cfg);
  const int M = cfg.M.front();
  auto with_eps = [&](ComplexityCounts c) {
    c.epsilon = cfg.epsilon;
    return c;
  };
  switch (cfg.scenario) {
    case Scenario::Perfect:
      print_estimate(out, "perfect", with_eps(counts_perfect(cfg.U, M)));
      break;
    case Scenario::Sproc:
      print_estimate(out, "sproc", with_eps(counts_sproc(cfg.U, M)));
      break;
    case Scenario::Chance:
      print_estimate(out, "chance", with_eps(counts_chance(cfg.U, M)));
      break;
    case Scenario::Ris:
      print_estimate(out, "ris_w", with_eps(counts_perfect(cfg.U, M)));
      print_estimate(out, "ris_theta", with_eps(counts_ris_theta(cfg.U, cfg.N.front())));
      break;
  }
  return kExitOk;
}

int cmd_export(const CliConfig& cfg, std::ostream& out) {
  require_single_m(cfg);
  const SystemConfig sys = cfg.system();
  FrameworkProblem fp = cfg.scenario == Scenario::Ris
                            ? build_ris_w(sys, gen_ris_channels(sys, cfg.N.front()),
                                          HMat::Identity(cfg.N.front(), cfg.N.front()))
                            : build(cfg, sys, channels_for(cfg, sys));
  write_out(cfg, to_string(cfg.scenario) + ".dat-s", sdp::export_sdpa(compile(fp).sdp), out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-one SDP relaxations for multi-user transmit beamforming"};
  app.name("rankone");
  app.require_subcommand(1);
  Invocation inv;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"solve", "Solve one instance and print objective, status and ROT"},
      {"sweep", "Run a seeded Monte Carlo sweep and write CSV/SVG outputs"},
      {"certify", "Solve one instance and verify the dual rank-one certificate"},
      {"ris", "Run the RIS alternating optimization and write its trace"},
      {"complexity", "Evaluate the interior-point complexity formulas"},
      {"export-sdpa", "Write the compiled instance in sparse SDPA format"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-c,--config", inv.config_path, "key = value configuration file");
    sub->add_option("-s,--set", inv.overrides, "override one setting, key=value");
    sub->add_option("-o,--output-dir", inv.output_dir, "output directory");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    const CliConfig cfg = load(inv);
    if (name == "solve") return cmd_solve(cfg, false, out);
    if (name == "certify") return cmd_solve(cfg, true, out);
    if (name == "ris") return cmd_ris(cfg, out);
    if (name == "sweep") return cmd_sweep(cfg, out, err);
    if (name == "complexity") return cmd_complexity(cfg, out);
    return cmd_export(cfg, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotPsd& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace rankone::cli
