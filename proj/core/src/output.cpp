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
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rankone/error.hpp"
#include "rankone/experiments.hpp"

namespace rankone {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

template <typename T>
T parse_num(const std::string& s, const char* field) {
  std::istringstream in(s);
  T v{};
  in >> v;
  if (in.fail() || !in.eof()) throw InvalidInput(std::string("parse_csv: bad ") + field + " '" + s + "'");
  return v;
}

double parse_double(const std::string& s, const char* field) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw InvalidInput("");
    return v;
  } catch (const std::exception&) {
    throw InvalidInput(std::string("parse_csv: bad ") + field + " '" + s + "'");
  }
}

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> pts;
};

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string svg_chart(const std::string& title, const std::string& ylabel, const std::vector<Series>& series,
                      bool log_y) {
  constexpr double W = 640, H = 400, L = 70, R = 150, T = 40, B = 50;
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  auto ty = [&](double v) { return log_y ? std::log10(std::max(v, 1e-16)) : v; };
  for (const auto& s : series) {
    for (auto [x, y] : s.pts) {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, ty(y));
      y1 = std::max(y1, ty(y));
    }
  }
  if (!log_y) {
    y0 = 0.0;
    y1 = std::max(1.0, y1);
  } else {
    y0 = std::floor(y0);
    y1 = std::ceil(y1);
  }
  if (x1 <= x0) x1 = x0 + 1.0;
  if (y1 <= y0) y1 = y0 + 1.0;
  auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double y) { return H - B - (ty(y) - y0) / (y1 - y0) * (H - T - B); };
  auto pyraw = [&](double t) { return H - B - (t - y0) / (y1 - y0) * (H - T - B); };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << title << "</text>\n";
  o << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  o << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">SINR target (dB)</text>\n";
  o << "<text x=\"18\" y=\"" << (T + H - B) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << (T + H - B) / 2
    << ")\">" << ylabel << "</text>\n";
  for (int k = 0; k <= 5; ++k) {
    const double t = y0 + (y1 - y0) * k / 5.0;
    char lab[32];
    if (log_y) {
      std::snprintf(lab, sizeof lab, "1e%.0f", t);
    } else {
      std::snprintf(lab, sizeof lab, "%.2f", t);
    }
    o << "<text x=\"" << L - 6 << "\" y=\"" << pyraw(t) + 4 << "\" text-anchor=\"end\">" << lab << "</text>\n";
  }
  for (int k = 0; k <= 5; ++k) {
    const double x = x0 + (x1 - x0) * k / 5.0;
    o << "<text x=\"" << px(x) << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\">" << num(x) << "</text>\n";
  }
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kColors[s % std::size(kColors)];
    o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (auto [x, y] : series[s].pts) o << px(x) << "," << py(y) << " ";
    o << "\"/>\n";
    for (auto [x, y] : series[s].pts) {
      o << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\" fill=\"" << color << "\" data-x=\"" << num(x)
        << "\" data-y=\"" << num(y) << "\"><title>" << num(x) << ", " << num(y) << "</title></circle>\n";
    }
    const double ly = T + 10 + 18.0 * static_cast<double>(s);
    o << "<line x1=\"" << W - R + 15 << "\" y1=\"" << ly << "\" x2=\"" << W - R + 35 << "\" y2=\"" << ly << "\" stroke=\""
      << color << "\" stroke-width=\"2\"/>\n";
    o << "<text x=\"" << W - R + 40 << "\" y=\"" << ly + 4 << "\">" << series[s].label << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace

std::string to_csv(const std::vector<TrialRecord>& records) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : records) {
    out += r.scenario + "," + std::to_string(r.M) + "," + std::to_string(r.N) + "," + std::to_string(r.U) + "," +
           num(r.sinr_db) + "," + std::to_string(r.trial) + "," + std::to_string(r.seed) + "," + r.status + "," +
           num(r.objective) + "," + num(r.rot_w) + "," + num(r.rot_theta) + "," + std::to_string(r.outer_iters) + "," +
           num(r.solve_ms) + "," + (r.cert_pass ? "1" : "0") + "\n";
  }
  return out;
}

std::vector<TrialRecord> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw InvalidInput("parse_csv: missing or unexpected header");
  std::vector<TrialRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 14) throw InvalidInput("parse_csv: expected 14 fields, got " + std::to_string(f.size()));
    TrialRecord r;
    r.scenario = f[0];
    r.M = parse_num<int>(f[1], "M");
    r.N = parse_num<int>(f[2], "N");
    r.U = parse_num<int>(f[3], "U");
    r.sinr_db = parse_double(f[4], "sinr_db");
    r.trial = parse_num<int>(f[5], "trial");
    r.seed = parse_num<std::uint64_t>(f[6], "seed");
    r.status = f[7];
    r.objective = parse_double(f[8], "objective");
    r.rot_w = parse_double(f[9], "rot_w");
    r.rot_theta = parse_double(f[10], "rot_theta");
    r.outer_iters = parse_num<int>(f[11], "outer_iters");
    r.solve_ms = parse_double(f[12], "solve_ms");
    if (f[13] != "0" && f[13] != "1") throw InvalidInput("parse_csv: bad cert_pass '" + f[13] + "'");
    r.cert_pass = f[13] == "1";
    out.push_back(std::move(r));
  }
  return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + tmp.string());
    f << content;
    f.close();
    if (!f) throw Error("cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot rename into " + path.string());
  }
}

std::vector<std::filesystem::path> emit_outputs(const std::vector<TrialRecord>& records, const SweepSpec& spec,
                                                const std::filesystem::path& dir) {
  if (records.empty()) throw InvalidInput("emit_outputs: no records");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw Error("cannot create output directory " + dir.string());

  const std::string name = to_string(spec.scenario);
  std::vector<std::filesystem::path> paths{dir / (name + "_trials.csv"), dir / (name + "_feasibility.svg"),
                                           dir / (name + "_rot.svg")};
  write_atomic(paths[0], to_csv(records));

  std::vector<Series> feas, rots;
  for (const auto& p : summarize(records)) {
    std::string label = "M=" + std::to_string(p.M);
    if (p.N > 0) label += ", N=" + std::to_string(p.N);
    auto find = [&](std::vector<Series>& v) -> Series& {
      for (auto& s : v) {
        if (s.label == label) return s;
      }
      v.push_back({label, {}});
      return v.back();
    };
    find(feas).pts.emplace_back(p.sinr_db, p.feasibility_rate);
    if (p.feasible > 0) find(rots).pts.emplace_back(p.sinr_db, p.mean_rot_w);
  }
  write_atomic(paths[1], svg_chart(name + ": feasibility rate", "feasible fraction", feas, false));
  write_atomic(paths[2], svg_chart(name + ": mean rank-one test ratio", "mean ROT of W", rots, true));
  return paths;
}

}  // namespace rankone
