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

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace rankone::sdp {

using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using SpMat = Eigen::SparseMatrix<double>;

/// One linear matrix inequality F0 + sum_j x_j F_j >= 0 of dimension `dim`.
/// Coefficient matrices are stored sparse and only for the variables that
/// actually appear in the block.
class Block {
 public:
  explicit Block(int dim);

  int dim() const { return dim_; }
  const RMat& constant() const { return f0_; }

  struct Term {
    int var;
    SpMat mat;
  };
  const std::vector<Term>& terms() const { return terms_; }

  void set_constant(const RMat& f0);
  /// Adds F to the coefficient of variable `var`. Exact zeros are dropped and an
  /// all-zero contribution is ignored.
  void add_term(int var, const RMat& f);
  void add_term(int var, const SpMat& f);

  /// F0 + sum_j x_j F_j
  RMat evaluate(const RVec& x) const;
  /// Coefficient of `var` as a dense matrix (zero if absent).
  RMat coefficient(int var) const;

 private:
  int dim_;
  RMat f0_;
  std::vector<Term> terms_;
};

/// minimize c^T x subject to every block being positive semidefinite.
class SdpProblem {
 public:
  SdpProblem(RVec c, std::vector<Block> blocks);

  int n() const { return static_cast<int>(c_.size()); }
  const RVec& c() const { return c_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  int total_dim() const;

 private:
  RVec c_;
  std::vector<Block> blocks_;
};

enum class Status { Optimal, Infeasible, Unbounded, NumericalFailure, IterationLimit };

std::string to_string(Status s);

struct SolverSettings {
  double gap_tol = 1e-8;
  double feas_tol = 1e-8;
  int max_iter = 200;
  /// Phase-I lower bound on the worst constraint violation above which the
  /// problem is declared infeasible.
  double infeas_threshold = 1e-7;

  void validate() const;
};

struct SdpResult {
  Status status = Status::NumericalFailure;
  RVec x;
  std::vector<RMat> duals;
  double primal_obj = 0.0;
  double dual_obj = 0.0;
  /// |primal_obj - dual_obj| / (1 + |primal_obj| + |dual_obj|)
  double gap = 0.0;
  double primal_infeas = 0.0;
  double dual_infeas = 0.0;
  int iterations = 0;
  /// Phase-I optimum bound when infeasibility detection ran, NaN otherwise.
  double phase1_bound = 0.0;
};

SdpResult solve(const SdpProblem& problem, const SolverSettings& settings = {});

struct KktReport {
  double primal_violation = 0.0;
  double dual_violation = 0.0;
  double gap = 0.0;
  double complementarity = 0.0;
};

/// Residuals of an Optimal result. Throws InvalidInput for any other status.
KktReport check_kkt(const SdpProblem& problem, const SdpResult& result);

}  // namespace rankone::sdp
