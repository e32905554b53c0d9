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

#include "relux/oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "relux/linalg.hpp"
#include "relux/lp.hpp"

namespace relux {

namespace {

ReluNetwork one_neuron(const Rational& w, const Rational& b, int a) {
  ReluNetwork net;
  net.neurons.push_back(Neuron{{w}, b, a});
  return net;
}

std::pair<Rational, Rational> interval_of(const Label& l) {
  if (l.is_interval) return {l.alpha, l.beta};
  return {l.y, l.y};
}

// The 2n+2 weakly-active sets of a 1-D ReLU: prefixes and suffixes of
// the sorted distinct x-values (a halfline in x space either way).
std::vector<std::vector<bool>> active_pieces(const Dataset& data) {
  std::vector<Rational> xs;
  for (const auto& pt : data.points) xs.push_back(pt.x[0]);
  std::vector<Rational> distinct(xs);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());

  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> pieces;
  auto add = [&](std::vector<bool> s) {
    if (seen.insert(s).second) pieces.push_back(std::move(s));
  };
  const std::size_t m = distinct.size();
  for (std::size_t t = 0; t <= m; ++t) {
    std::vector<bool> suffix(xs.size()), prefix(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::size_t pos =
          std::lower_bound(distinct.begin(), distinct.end(), xs[i]) -
          distinct.begin();
      suffix[i] = pos >= t;
      prefix[i] = pos < t;
    }
    add(std::move(suffix));
    add(std::move(prefix));
  }
  return pieces;
}

LossValue linf_oracle(const Dataset& data) {
  std::optional<Rational> best;
  for (const auto& piece : active_pieces(data)) {
    LinearProgram lp(3);  // (w, b, gamma)
    lp.objective[2] = 1;
    lp.lower.assign(3, std::nullopt);
    lp.upper.assign(3, std::nullopt);
    lp.lower[2] = Rational(0);
    for (std::size_t i = 0; i < data.points.size(); ++i) {
      const Rational& x = data.points[i].x[0];
      auto [alpha, beta] = interval_of(data.points[i].label);
      if (piece[i]) {
        lp.add_row({x, Rational(1), Rational(0)}, Sense::GE, Rational(0));
        lp.add_row({x, Rational(1), Rational(1)}, Sense::GE, alpha);
        lp.add_row({x, Rational(1), Rational(-1)}, Sense::LE, beta);
      } else {
        lp.add_row({x, Rational(1), Rational(0)}, Sense::LE, Rational(0));
        Rational off = dist_interval(alpha, beta, Rational(0));
        lp.add_row({Rational(0), Rational(0), Rational(1)}, Sense::GE, off);
      }
    }
    LpOutcome out = solve_lp(lp);
    if (out.status != LpStatus::Optimal)
      throw std::logic_error("piece LP must be solvable");
    if (!best || out.objective_value < *best) best = out.objective_value;
  }
  return LossValue::from_exact(*best);
}

// Intersections of pairs of candidate lines in (w, b) space: partition
// boundaries x_i w + b = 0, exact-fit lines x_i w + b = y_i / a, and
// w = 0 (pure constants). For every concave or piecewise-linear loss the
// optimum sits on such an intersection.
std::vector<std::pair<Rational, Rational>> vertex_candidates(
    const Dataset& data, int a) {
  std::vector<std::pair<Vec, Rational>> eqs;  // (coeffs on (w,b), rhs)
  eqs.push_back({{Rational(1), Rational(0)}, Rational(0)});  // w = 0
  for (const auto& pt : data.points) {
    eqs.push_back({{pt.x[0], Rational(1)}, Rational(0)});
    eqs.push_back({{pt.x[0], Rational(1)}, pt.label.y / a});
  }
  std::vector<std::pair<Rational, Rational>> cands;
  cands.emplace_back(Rational(0), Rational(0));
  for (std::size_t i = 0; i < eqs.size(); ++i)
    for (std::size_t j = i + 1; j < eqs.size(); ++j) {
      Mat m{eqs[i].first, eqs[j].first};
      if (auto sol = solve_square_system(m, {eqs[i].second, eqs[j].second}))
        cands.emplace_back((*sol)[0], (*sol)[1]);
    }
  return cands;
}

// Constrained least-squares candidates for one piece: stationarity with
// 0, 1, or 2 tight partition boundaries, kept when feasible and unique.
void l2_candidates(const Dataset& data, const std::vector<bool>& piece, int a,
                   std::vector<std::pair<Rational, Rational>>* cands) {
  Mat q(2, Vec(2, Rational(0)));
  Vec lin(2, Rational(0));
  for (std::size_t i = 0; i < data.points.size(); ++i) {
    if (!piece[i]) continue;
    const auto& pt = data.points[i];
    const Vec c{a * pt.x[0], Rational(a)};
    for (int r = 0; r < 2; ++r) {
      for (int s = 0; s < 2; ++s) q[r][s] += pt.multiplicity * c[r] * c[s];
      lin[r] -= 2 * pt.multiplicity * c[r] * pt.label.y;
    }
  }
  std::vector<Vec> rows;
  for (const auto& pt : data.points) rows.push_back({pt.x[0], Rational(1)});

  auto feasible = [&](const Vec& theta) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Rational v = dot(rows[i], theta);
      if (piece[i] ? (v < 0) : (v > 0)) return false;
    }
    return true;
  };
  auto try_subset = [&](const std::vector<int>& active) {
    const int na = static_cast<int>(active.size());
    Mat sys(2 + na, Vec(2 + na, Rational(0)));
    Vec rhs(2 + na, Rational(0));
    for (int r = 0; r < 2; ++r) {
      for (int s = 0; s < 2; ++s) sys[r][s] = 2 * q[r][s];
      for (int t = 0; t < na; ++t) sys[r][2 + t] = rows[active[t]][r];
      rhs[r] = -lin[r];
    }
    for (int t = 0; t < na; ++t)
      for (int s = 0; s < 2; ++s) sys[2 + t][s] = rows[active[t]][s];
    LinearSolution sol = solve_linear_system(sys, rhs);
    if (!sol.consistent) return;
    // Non-unique (w, b) is fine as long as the ambiguity cannot change
    // any prediction or constraint value (degenerate data, e.g. a single
    // distinct x); otherwise skip the subset.
    for (const auto& nv : sol.nullspace) {
      if (nv[0] == 0 && nv[1] == 0) continue;
      for (const auto& row : rows)
        if (row[0] * nv[0] + row[1] * nv[1] != 0) return;
    }
    Vec theta{sol.particular[0], sol.particular[1]};
    if (feasible(theta)) cands->emplace_back(theta[0], theta[1]);
  };

  const int n = static_cast<int>(rows.size());
  try_subset({});
  for (int i = 0; i < n; ++i) {
    try_subset({i});
    for (int j = i + 1; j < n; ++j) try_subset({i, j});
  }
}

}  // namespace

std::vector<Dichotomy> oracle_dichotomies(const std::vector<Vec>& points) {
  const int n = static_cast<int>(points.size());
  if (n > 14) throw std::invalid_argument("oracle sweep bound is n <= 14");
  const int d = n == 0 ? 0 : static_cast<int>(points[0].size());
  std::set<Vec> dup;
  for (const auto& p : points)
    if (!dup.insert(p).second)
      throw std::invalid_argument("points must be pairwise distinct");

  std::vector<Dichotomy> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    LinearProgram lp(d + 1);
    std::vector<int> plus;
    for (int i = 0; i < n; ++i) {
      Vec row(points[i]);
      row.push_back(Rational(1));
      if (mask & (1ul << i)) {
        plus.push_back(i);
        lp.add_row(std::move(row), Sense::GE, Rational(1));
      } else {
        lp.add_row(std::move(row), Sense::LE, Rational(0));
      }
    }
    if (solve_lp(lp).status == LpStatus::Optimal)
      out.push_back({std::move(plus)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

LossValue oracle_train_1d(const Dataset& data, const LossSpec& loss) {
  data.validate();
  if (data.dim != 1) throw std::invalid_argument("oracle requires d = 1");
  if (loss.kind == LossSpec::LinfInterval) return linf_oracle(data);
  if (!data.all_scalar())
    throw std::invalid_argument("lp oracle requires scalar labels");
  const Rational& p = loss.p;
  if (p > 1 && p != 2)
    throw std::invalid_argument("oracle supports p in [0,1], 2, and linf");

  std::optional<LossValue> best;
  auto consider = [&](const Rational& w, const Rational& b, int a) {
    LossValue v = loss_value(one_neuron(w, b, a), data, loss);
    if (!best || loss_less(v, *best)) best = std::move(v);
  };

  for (int a : {+1, -1}) {
    for (const auto& [w, b] : vertex_candidates(data, a)) consider(w, b, a);
    if (p == 2) {
      for (const auto& piece : active_pieces(data)) {
        std::vector<std::pair<Rational, Rational>> cands;
        l2_candidates(data, piece, a, &cands);
        for (const auto& [w, b] : cands) consider(w, b, a);
      }
    }
  }
  return *best;
}

LossValue grid_oracle(const Dataset& data, const LossSpec& loss, int k,
                      const Rational& bound, int resolution) {
  data.validate();
  if (k < 1 || resolution < 1 || bound <= 0)
    throw std::invalid_argument("bad grid parameters");
  const int params = k * (data.dim + 1);
  double combos = 1.0;
  for (int i = 0; i < params; ++i) combos *= 2.0 * resolution + 1;
  if (combos * (1 << k) > 1e7)
    throw std::invalid_argument("grid too fine for the sanity oracle");

  std::optional<LossValue> best;
  Vec theta(params, Rational(0));
  auto sweep = [&](auto&& self, int coord) -> void {
    if (coord == params) {
      for (int s = 0; s < (1 << k); ++s) {
        ReluNetwork net;
        for (int j = 0; j < k; ++j) {
          Neuron nr;
          nr.w.assign(theta.begin() + j * data.dim,
                      theta.begin() + (j + 1) * data.dim);
          nr.b = theta[k * data.dim + j];
          nr.a = (s >> j) & 1 ? -1 : +1;
          net.neurons.push_back(std::move(nr));
        }
        LossValue v = loss_value(net, data, loss);
        if (!best || loss_less(v, *best)) best = std::move(v);
      }
      return;
    }
    for (int i = -resolution; i <= resolution; ++i) {
      theta[coord] = bound * i / resolution;
      self(self, coord + 1);
    }
  };
  sweep(sweep, 0);
  return *best;
}

}  // namespace relux
