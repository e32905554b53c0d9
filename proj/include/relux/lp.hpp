// Copyright 2026 The relu-exact Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RELUX_LP_HPP
#define RELUX_LP_HPP

#include <optional>
#include <vector>

#include "relux/rational.hpp"

namespace relux {

enum class Sense { LE, EQ, GE };

struct LpRow {
  Vec coeffs;
  Sense sense = Sense::LE;
  Rational rhs;
};

// Variables are free by default; bounds are optional per variable.
struct LinearProgram {
  int num_vars = 0;
  std::vector<LpRow> rows;
  Vec objective;           // length num_vars; zero-filled if empty
  bool maximize = false;
  std::vector<std::optional<Rational>> lower;  // empty or length num_vars
  std::vector<std::optional<Rational>> upper;

  explicit LinearProgram(int vars = 0)
      : num_vars(vars), objective(vars, Rational(0)) {}

  void add_row(Vec coeffs, Sense sense, Rational rhs) {
    rows.push_back({std::move(coeffs), sense, std::move(rhs)});
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Vec point;                 // present iff Optimal
  Rational objective_value;  // present iff Optimal
};

// Exact two-phase simplex with Bland's anti-cycling pivot rule.
// Deterministic: fixed input yields a fixed basic optimal solution.
LpOutcome solve_lp(const LinearProgram& lp);

// Process-wide count of solve_lp invocations (for run statistics).
long long lp_solve_count();
void reset_lp_solve_count();

}  // namespace relux

#endif  // RELUX_LP_HPP
