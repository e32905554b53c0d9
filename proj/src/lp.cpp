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

#include "relux/lp.hpp"

#include <atomic>
#include <cassert>

#include "relux/linalg.hpp"

namespace relux {

namespace {

std::atomic<long long> g_lp_solves{0};

// Dense simplex tableau over exact rationals.
//
// Standard form: min c^T x  s.t.  A x = b,  x >= 0,  b >= 0.
// Free variables of the input LP are split into nonnegative pairs and
// bounds are materialized as rows; desk-scale problem sizes make this
// affordable and keep the conversion trivially correct.
struct Tableau {
  Mat a;                    // m x n
  Vec b;                    // m, kept >= 0
  Vec obj;                  // reduced costs, length n
  Rational obj_const;       // current objective value (negated z)
  std::vector<int> basis;   // m entries, column index basic in each row

  std::size_t rows() const { return a.size(); }
  std::size_t cols() const { return a.empty() ? 0 : a[0].size(); }

  void pivot(std::size_t r, std::size_t e) {
    const Rational inv = Rational(1) / a[r][e];
    if (inv != 1) {
      for (auto& v : a[r]) v *= inv;
      b[r] *= inv;
    }
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || a[i][e] == 0) continue;
      const Rational f = a[i][e];
      for (std::size_t j = 0; j < cols(); ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    if (obj[e] != 0) {
      const Rational f = obj[e];
      for (std::size_t j = 0; j < cols(); ++j) obj[j] -= f * a[r][j];
      obj_const -= f * b[r];
    }
    basis[r] = static_cast<int>(e);
  }

  // Entering rule: Dantzig (most negative reduced cost, smallest index on
  // ties) for speed, falling back permanently to Bland's rule after a
  // fixed pivot allowance so cycling cannot occur. Leaving = minimum
  // ratio, smallest basic variable on ties. Fully deterministic.
  // Returns false when unbounded.
  bool run(std::size_t usable_cols) {
    long long pivots = 0;
    const long long bland_after =
        3 * static_cast<long long>(rows() + usable_cols) + 50;
    for (;;) {
      std::size_t e = usable_cols;
      if (pivots++ < bland_after) {
        for (std::size_t j = 0; j < usable_cols; ++j)
          if (obj[j] < 0 && (e == usable_cols || obj[j] < obj[e])) e = j;
      } else {
        for (std::size_t j = 0; j < usable_cols; ++j) {
          if (obj[j] < 0) { e = j; break; }
        }
      }
      if (e == usable_cols) return true;  // optimal
      std::size_t r = rows();
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (a[i][e] <= 0) continue;
        Rational ratio = b[i] / a[i][e];
        if (r == rows() || ratio < best ||
            (ratio == best && basis[i] < basis[r])) {
          best = ratio;
          r = i;
        }
      }
      if (r == rows()) return false;  // unbounded
      pivot(r, e);
    }
  }
};

}  // namespace

long long lp_solve_count() { return g_lp_solves.load(); }
void reset_lp_solve_count() { g_lp_solves.store(0); }

LpOutcome solve_lp(const LinearProgram& lp) {
  g_lp_solves.fetch_add(1, std::memory_order_relaxed);

  const int n0 = lp.num_vars;
  std::vector<LpRow> rows = lp.rows;
  for (int i = 0; i < n0; ++i) {
    if (static_cast<int>(lp.lower.size()) > i && lp.lower[i]) {
      Vec c(n0, Rational(0));
      c[i] = 1;
      rows.push_back({std::move(c), Sense::GE, *lp.lower[i]});
    }
    if (static_cast<int>(lp.upper.size()) > i && lp.upper[i]) {
      Vec c(n0, Rational(0));
      c[i] = 1;
      rows.push_back({std::move(c), Sense::LE, *lp.upper[i]});
    }
  }

  const std::size_t m = rows.size();
  const std::size_t nsplit = 2 * static_cast<std::size_t>(n0);
  std::size_t nslack = 0;
  for (const auto& r : rows)
    if (r.sense != Sense::EQ) ++nslack;

  Tableau t;
  const std::size_t ncols = nsplit + nslack;
  t.a.assign(m, Vec(ncols, Rational(0)));
  t.b.assign(m, Rational(0));
  t.basis.assign(m, -1);

  std::size_t slack = nsplit;
  std::vector<int> slack_of_row(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = rows[i];
    for (int j = 0; j < n0; ++j) {
      t.a[i][2 * j] = row.coeffs[j];
      t.a[i][2 * j + 1] = -row.coeffs[j];
    }
    t.b[i] = row.rhs;
    if (row.sense == Sense::LE) {
      t.a[i][slack] = 1;
      slack_of_row[i] = static_cast<int>(slack++);
    } else if (row.sense == Sense::GE) {
      t.a[i][slack] = -1;
      slack_of_row[i] = static_cast<int>(slack++);
    }
    if (t.b[i] < 0) {
      for (auto& v : t.a[i]) v = -v;
      t.b[i] = -t.b[i];
    }
  }

  // Phase 1: rows whose slack survives with +1 coefficient start basic;
  // the rest get artificial columns.
  std::vector<std::size_t> artificial_rows;
  for (std::size_t i = 0; i < m; ++i) {
    int s = slack_of_row[i];
    if (s >= 0 && t.a[i][s] == 1) {
      t.basis[i] = s;
    } else {
      artificial_rows.push_back(i);
    }
  }
  const std::size_t nart = artificial_rows.size();
  if (nart > 0) {
    for (auto& row : t.a) row.resize(ncols + nart, Rational(0));
    for (std::size_t k = 0; k < nart; ++k) {
      t.a[artificial_rows[k]][ncols + k] = 1;
      t.basis[artificial_rows[k]] = static_cast<int>(ncols + k);
    }
    // Phase-1 objective: sum of artificials, priced out.
    t.obj.assign(ncols + nart, Rational(0));
    for (std::size_t k = 0; k < nart; ++k) t.obj[ncols + k] = 1;
    t.obj_const = 0;
    for (std::size_t i : artificial_rows) {
      for (std::size_t j = 0; j < t.cols(); ++j) t.obj[j] -= t.a[i][j];
      t.obj_const -= t.b[i];
    }
    bool ok = t.run(t.cols());
    assert(ok);
    (void)ok;
    if (t.obj_const != 0) return {LpStatus::Infeasible, {}, {}};
    // Drive remaining artificials out of the basis.
    for (std::size_t i = 0; i < t.rows();) {
      if (t.basis[i] < static_cast<int>(ncols)) { ++i; continue; }
      std::size_t e = ncols;
      for (std::size_t j = 0; j < ncols; ++j) {
        if (t.a[i][j] != 0) { e = j; break; }
      }
      if (e == ncols) {
        // Redundant row.
        t.a.erase(t.a.begin() + i);
        t.b.erase(t.b.begin() + i);
        t.basis.erase(t.basis.begin() + i);
      } else {
        t.pivot(i, e);
        ++i;
      }
    }
    for (auto& row : t.a) row.resize(ncols);
  }

  // Phase 2.
  Vec cost(ncols, Rational(0));
  for (int j = 0; j < n0; ++j) {
    Rational c = j < static_cast<int>(lp.objective.size()) ? lp.objective[j]
                                                           : Rational(0);
    if (lp.maximize) c = -c;
    cost[2 * j] = c;
    cost[2 * j + 1] = -c;
  }
  t.obj = cost;
  t.obj_const = 0;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const Rational cb = cost[t.basis[i]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j < ncols; ++j) t.obj[j] -= cb * t.a[i][j];
    t.obj_const -= cb * t.b[i];
  }
  if (!t.run(ncols)) return {LpStatus::Unbounded, {}, {}};

  Vec std_x(ncols, Rational(0));
  for (std::size_t i = 0; i < t.rows(); ++i) std_x[t.basis[i]] = t.b[i];
  Vec x(n0);
  for (int j = 0; j < n0; ++j) x[j] = std_x[2 * j] - std_x[2 * j + 1];
  Rational val(0);
  for (int j = 0; j < n0 && j < static_cast<int>(lp.objective.size()); ++j)
    val += lp.objective[j] * x[j];
  return {LpStatus::Optimal, std::move(x), std::move(val)};
}

}  // namespace relux
