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

#include "relux/train_convex.hpp"

#include <atomic>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "relux/parallel.hpp"

namespace relux {

namespace {

// Reduced-space view shared by both convex drivers.
struct CellView {
  int d = 0;
  int k = 0;
  const Dataset* data = nullptr;       // deduped, affine-hull-reduced
  std::vector<Vec> coords;             // n' distinct coordinate vectors
  std::vector<int> p2c;                // data point -> coord index

  int theta_dim() const { return k * d + k; }

  // Constraint row r_ij = (0_{d(j-1)}, x_i, 0_{d(k-j)}, e_j).
  Vec partition_row(int i, int j) const {
    Vec row(theta_dim(), Rational(0));
    for (int c = 0; c < d; ++c) row[j * d + c] = coords[i][c];
    row[k * d + j] = 1;
    return row;
  }
};

CellView make_view(const Dataset& reduced, int k) {
  CellView v;
  v.d = reduced.dim;
  v.k = k;
  v.data = &reduced;
  DistinctPoints dp = distinct_points(reduced);
  v.coords = std::move(dp.coords);
  v.p2c = std::move(dp.point_to_coord);
  return v;
}

// Per-neuron plus membership of a cell.
std::vector<std::vector<bool>> plus_masks(const CellView& v,
                                          const SubproblemSpec& spec) {
  std::vector<std::vector<bool>> in_plus(
      v.k, std::vector<bool>(v.coords.size(), false));
  for (int j = 0; j < v.k; ++j)
    for (int i : spec.parts[j].plus) in_plus[j][i] = true;
  return in_plus;
}

ReluNetwork network_from_theta(const CellView& v, const SubproblemSpec& spec,
                               const Vec& theta) {
  ReluNetwork net;
  for (int j = 0; j < v.k; ++j) {
    Neuron nr;
    nr.w.assign(theta.begin() + j * v.d, theta.begin() + (j + 1) * v.d);
    nr.b = theta[v.k * v.d + j];
    nr.a = spec.signs[j];
    net.neurons.push_back(std::move(nr));
  }
  return net;
}

// Residual coefficient of point l: yhat_l = <c_l, theta> within the cell.
// Empty optional when no neuron is active on the point (yhat identically 0).
std::optional<Vec> active_coeffs(const CellView& v, const SubproblemSpec& spec,
                                 const std::vector<std::vector<bool>>& in_plus,
                                 int point) {
  const int ci = v.p2c[point];
  Vec c(v.theta_dim(), Rational(0));
  bool any = false;
  for (int j = 0; j < v.k; ++j) {
    if (!in_plus[j][ci]) continue;
    any = true;
    for (int t = 0; t < v.d; ++t)
      c[j * v.d + t] += spec.signs[j] * v.coords[ci][t];
    c[v.k * v.d + j] += spec.signs[j];
  }
  if (!any) return std::nullopt;
  return c;
}

// Cheap exact lower bound on the cell optimum: points with no active
// neuron keep residual |y| exactly; points whose active neurons all share
// the "wrong" output sign cannot reduce the residual below |y| either.
Rational cell_lower_bound(const CellView& v, const SubproblemSpec& spec,
                          const std::vector<std::vector<bool>>& in_plus,
                          unsigned long p) {
  Rational lb(0);
  for (std::size_t l = 0; l < v.data->points.size(); ++l) {
    const auto& pt = v.data->points[l];
    const int ci = v.p2c[l];
    bool any = false, all_neg = true, all_pos = true;
    for (int j = 0; j < v.k; ++j) {
      if (!in_plus[j][ci]) continue;
      any = true;
      (spec.signs[j] < 0 ? all_pos : all_neg) = false;
    }
    Rational floor_res(0);
    if (!any) {
      floor_res = abs(pt.label.y);
    } else if (all_neg && pt.label.y > 0) {
      floor_res = pt.label.y;
    } else if (all_pos && pt.label.y < 0) {
      floor_res = -pt.label.y;
    }
    if (floor_res > 0) lb += pt.multiplicity * pow_int(floor_res, p);
  }
  return lb;
}

struct CellOutcome {
  ReluNetwork net;
  Rational loss;
};

CellOutcome solve_l1_cell(const CellView& v, const SubproblemSpec& spec) {
  const auto in_plus = plus_masks(v, spec);
  const int m0 = v.theta_dim();

  std::vector<Vec> res_coeffs;
  std::vector<std::size_t> res_points;
  Rational constant(0);
  for (std::size_t l = 0; l < v.data->points.size(); ++l) {
    if (auto c = active_coeffs(v, spec, in_plus, l)) {
      res_coeffs.push_back(std::move(*c));
      res_points.push_back(l);
    } else {
      constant += v.data->points[l].multiplicity * abs(v.data->points[l].label.y);
    }
  }

  const int nres = static_cast<int>(res_coeffs.size());
  LinearProgram lp(m0 + nres);
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    for (int j = 0; j < v.k; ++j) {
      Vec row = v.partition_row(static_cast<int>(i), j);
      row.resize(m0 + nres, Rational(0));
      lp.add_row(std::move(row), in_plus[j][i] ? Sense::GE : Sense::LE,
                 Rational(0));
    }
  }
  for (int r = 0; r < nres; ++r) {
    const Rational& y = v.data->points[res_points[r]].label.y;
    Vec up(res_coeffs[r]);
    up.resize(m0 + nres, Rational(0));
    up[m0 + r] = -1;
    lp.add_row(std::move(up), Sense::LE, y);  //  c.theta - e <= y
    Vec dn(m0 + nres, Rational(0));
    for (int t = 0; t < m0; ++t) dn[t] = -res_coeffs[r][t];
    dn[m0 + r] = -1;
    lp.add_row(std::move(dn), Sense::LE, -y);  // -c.theta - e <= -y
    lp.objective[m0 + r] = v.data->points[res_points[r]].multiplicity;
  }

  LpOutcome out = solve_lp(lp);
  if (out.status != LpStatus::Optimal)
    throw std::logic_error("cell LP must be feasible and bounded");
  Vec theta(out.point.begin(), out.point.begin() + m0);
  return {network_from_theta(v, spec, theta), out.objective_value + constant};
}

// l2 cell: enumerate active subsets of the partition rows, solve the
// equality-constrained stationarity system exactly, keep feasible
// candidates with unique theta, take the best.
std::optional<CellOutcome> solve_l2_cell(const CellView& v,
                                         const SubproblemSpec& spec) {
  const auto in_plus = plus_masks(v, spec);
  const int m0 = v.theta_dim();
  const int nprime = static_cast<int>(v.coords.size());

  // Quadratic objective sum_l m_l (<c_l,theta> - y_l)^2.
  Mat q(m0, Vec(m0, Rational(0)));
  Vec lin(m0, Rational(0));
  Rational constant(0);
  for (std::size_t l = 0; l < v.data->points.size(); ++l) {
    const auto& pt = v.data->points[l];
    auto c = active_coeffs(v, spec, in_plus, l);
    Vec cl = c ? std::move(*c) : Vec(m0, Rational(0));
    for (int i = 0; i < m0; ++i) {
      if (cl[i] == 0) continue;
      const Rational mi = pt.multiplicity * cl[i];
      for (int j = 0; j < m0; ++j)
        if (cl[j] != 0) q[i][j] += mi * cl[j];
      lin[i] -= 2 * mi * pt.label.y;
    }
    constant += pt.multiplicity * pt.label.y * pt.label.y;
  }

  std::vector<std::pair<int, int>> rows;  // (coord, neuron)
  for (int i = 0; i < nprime; ++i)
    for (int j = 0; j < v.k; ++j) rows.emplace_back(i, j);

  auto feasible = [&](const Vec& theta) {
    for (const auto& [i, j] : rows) {
      Rational val = dot(v.partition_row(i, j), theta);
      if (in_plus[j][i] ? (val < 0) : (val > 0)) return false;
    }
    return true;
  };

  auto objective = [&](const Vec& theta) {
    Rational f = constant;
    for (int i = 0; i < m0; ++i) {
      if (theta[i] == 0) continue;
      f += lin[i] * theta[i];
      for (int j = 0; j < m0; ++j) f += theta[i] * q[i][j] * theta[j];
    }
    return f;
  };

  std::optional<CellOutcome> best;
  auto try_active_set = [&](const std::vector<int>& active) {
    const int na = static_cast<int>(active.size());
    Mat sys(m0 + na, Vec(m0 + na, Rational(0)));
    Vec rhs(m0 + na, Rational(0));
    std::vector<Vec> grows;
    for (int a : active) grows.push_back(v.partition_row(rows[a].first, rows[a].second));
    for (int i = 0; i < m0; ++i) {
      for (int j = 0; j < m0; ++j) sys[i][j] = 2 * q[i][j];
      for (int a = 0; a < na; ++a) sys[i][m0 + a] = grows[a][i];
      rhs[i] = -lin[i];
    }
    for (int a = 0; a < na; ++a)
      for (int j = 0; j < m0; ++j) sys[m0 + a][j] = grows[a][j];
    LinearSolution sol = solve_linear_system(sys, rhs);
    if (!sol.consistent) return;
    for (const auto& nv : sol.nullspace)
      for (int i = 0; i < m0; ++i)
        if (nv[i] != 0) return;  // theta not pinned; skip
    Vec theta(sol.particular.begin(), sol.particular.begin() + m0);
    if (!feasible(theta)) return;
    Rational f = objective(theta);
    if (!best || f < best->loss)
      best = CellOutcome{network_from_theta(v, spec, theta), std::move(f)};
  };

  const int total_rows = static_cast<int>(rows.size());
  std::vector<int> comb;
  auto recurse = [&](auto&& self, int start, int remaining) -> void {
    try_active_set(comb);
    if (remaining == 0) return;
    for (int i = start; i < total_rows; ++i) {
      comb.push_back(i);
      self(self, i + 1, remaining - 1);
      comb.pop_back();
    }
  };
  recurse(recurse, 0, std::min(m0, total_rows));
  return best;
}

struct Cand {
  LossValue loss;
  std::int64_t cell = std::numeric_limits<std::int64_t>::max();
  ReluNetwork net;
  SubproblemSpec spec;
};

SubproblemSpec decode_cell(const std::vector<Dichotomy>& dichs, int k,
                           std::int64_t cell) {
  const std::int64_t signs_total = 1ll << k;
  std::int64_t s = cell % signs_total;
  std::int64_t t = cell / signs_total;
  SubproblemSpec spec;
  spec.parts.resize(k);
  spec.signs.resize(k);
  for (int j = k - 1; j >= 0; --j) {
    spec.parts[j] = dichs[t % static_cast<std::int64_t>(dichs.size())];
    t /= static_cast<std::int64_t>(dichs.size());
    spec.signs[j] = (s & 1) ? -1 : +1;
    s >>= 1;
  }
  return spec;
}

TrainResult train_convex_impl(const Dataset& data, int k,
                              const TrainOptions& opts, bool use_l2) {
  data.validate();
  if (!data.all_scalar())
    throw std::invalid_argument("convex trainer requires scalar labels");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const unsigned long p = use_l2 ? 2 : 1;
  const LossSpec loss_spec = LossSpec::lp(Rational(p));

  const long long lp_before = lp_solve_count();
  Dataset dd = dedupe(data);
  auto [reduced, transform] = affine_hull_reduce(dd);
  CellView view = make_view(reduced, k);
  std::vector<Dichotomy> dichs =
      enumerate_open_dichotomies_geometric(view.coords);

  const long long budget = opts.budget > 0 ? opts.budget : kConvexCellBudget;
  const std::int64_t dcount = static_cast<std::int64_t>(dichs.size());
  std::int64_t total = 1ll << k;
  for (int j = 0; j < k; ++j) {
    if (total > budget / dcount + 1) throw BudgetExceeded("cell budget");
    total *= dcount;
  }
  if (total > budget) throw BudgetExceeded("cell budget");

  std::atomic<long long> solved{0};

  Cand init;
  init.net = ReluNetwork::zero(view.d, k);
  init.loss = loss_value(init.net, reduced, loss_spec);

  auto visit = [&](std::int64_t cell,
                   const Cand& incumbent) -> std::optional<Cand> {
    SubproblemSpec spec = decode_cell(dichs, k, cell);
    const auto in_plus = plus_masks(view, spec);
    if (incumbent.loss.is_exact &&
        cell_lower_bound(view, spec, in_plus, p) > *incumbent.loss.exact)
      return std::nullopt;
    solved.fetch_add(1, std::memory_order_relaxed);
    std::optional<CellOutcome> out =
        use_l2 ? solve_l2_cell(view, spec)
               : std::optional<CellOutcome>(solve_l1_cell(view, spec));
    if (!out) return std::nullopt;
    Cand c;
    c.loss = LossValue::from_exact(std::move(out->loss));
    c.cell = cell;
    c.net = std::move(out->net);
    c.spec = std::move(spec);
    return c;
  };
  auto better = [](const Cand& a, const Cand& b) {
    if (loss_less(a.loss, b.loss)) return true;
    return loss_equal(a.loss, b.loss) && a.cell < b.cell;
  };

  Cand best = BlockReducer<Cand>::run(total, std::move(init), opts.threads,
                                      256, visit, better);

  TrainResult result;
  result.network = lift_network(transform, best.net);
  result.loss = loss_value(result.network, data, loss_spec);
  if (!loss_equal(result.loss, best.loss))
    throw std::logic_error("lifted network loss mismatch");
  result.certificate = std::move(best.spec);
  result.subproblems_solved = solved.load();
  result.lp_solves = lp_solve_count() - lp_before;
  return result;
}

}  // namespace

TrainResult train_l1(const Dataset& data, int k, const TrainOptions& opts) {
  return train_convex_impl(data, k, opts, false);
}

TrainResult train_l2(const Dataset& data, int k, const TrainOptions& opts) {
  return train_convex_impl(data, k, opts, true);
}

std::pair<ReluNetwork, Rational> solve_subproblem_l1(
    const SubproblemSpec& spec, const Dataset& data) {
  data.validate();
  CellView view = make_view(data, static_cast<int>(spec.parts.size()));
  if (spec.signs.size() != spec.parts.size())
    throw std::invalid_argument("spec: one sign required per dichotomy");
  const int n_coords = static_cast<int>(view.coords.size());
  for (const auto& part : spec.parts)
    for (int i : part.plus)
      if (i < 0 || i >= n_coords)
        throw std::invalid_argument("spec: dichotomy index out of range");
  CellOutcome out = solve_l1_cell(view, spec);
  return {std::move(out.net), std::move(out.loss)};
}

}  // namespace relux
