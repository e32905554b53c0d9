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

#include "relux/train_concave.hpp"

#include <atomic>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "relux/parallel.hpp"

namespace relux {

namespace {

struct View {
  int d = 0;
  int k = 0;
  const Dataset* data = nullptr;
  std::vector<Vec> coords;
  std::vector<int> p2c;

  int theta_dim() const { return k * d + k; }

  Vec partition_row(int i, int j) const {
    Vec row(theta_dim(), Rational(0));
    for (int c = 0; c < d; ++c) row[j * d + c] = coords[i][c];
    row[k * d + j] = 1;
    return row;
  }
};

View make_view(const Dataset& data, int k) {
  View v;
  v.d = data.dim;
  v.k = k;
  v.data = &data;
  DistinctPoints dp = distinct_points(data);
  v.coords = std::move(dp.coords);
  v.p2c = std::move(dp.point_to_coord);
  return v;
}

ReluNetwork network_from_theta(const View& v, const std::vector<int>& signs,
                               const Vec& theta) {
  ReluNetwork net;
  for (int j = 0; j < v.k; ++j) {
    Neuron nr;
    nr.w.assign(theta.begin() + j * v.d, theta.begin() + (j + 1) * v.d);
    nr.b = theta[v.k * v.d + j];
    nr.a = signs[j];
    net.neurons.push_back(std::move(nr));
  }
  return net;
}

// Incremental forward Gaussian elimination with push/pop, shared by the
// combination recursion: earlier basis rows are never modified, so
// backtracking is a plain pop.
struct Elim {
  enum Push { Added, Dependent, Inconsistent };

  int cols;
  Mat rows;
  Vec rhs;
  std::vector<int> pivots;

  explicit Elim(int c) : cols(c) {}

  Push push(Vec row, Rational r) {
    for (std::size_t b = 0; b < rows.size(); ++b) {
      const int pc = pivots[b];
      if (row[pc] == 0) continue;
      Rational f = row[pc] / rows[b][pc];
      for (int c = pc; c < cols; ++c)
        if (rows[b][c] != 0) row[c] -= f * rows[b][c];
      row[pc] = 0;  // kill roundoff-free but explicit
      r -= f * rhs[b];
    }
    int p = -1;
    for (int c = 0; c < cols; ++c)
      if (row[c] != 0) {
        p = c;
        break;
      }
    if (p < 0) return r == 0 ? Dependent : Inconsistent;
    rows.push_back(std::move(row));
    rhs.push_back(std::move(r));
    pivots.push_back(p);
    return Added;
  }

  void pop() {
    rows.pop_back();
    rhs.pop_back();
    pivots.pop_back();
  }

  // Requires full rank (rows.size() == cols): every column is a pivot.
  Vec solve() const {
    Vec theta(cols, Rational(0));
    for (int r = static_cast<int>(rows.size()) - 1; r >= 0; --r) {
      Rational v = rhs[r];
      for (int c = 0; c < cols; ++c)
        if (c != pivots[r] && rows[r][c] != 0) v -= rows[r][c] * theta[c];
      theta[pivots[r]] = v / rows[r][pivots[r]];
    }
    return theta;
  }
};

bool p_is_exact(const Rational& p) { return p == 0 || p == 1; }

// True network loss of theta, with early abort once the partial sum
// strictly exceeds `bound` (pruning never discards a tie, keeping the
// first-found tie-break deterministic).
std::optional<LossValue> loss_with_abort(const View& v,
                                         const std::vector<int>& signs,
                                         const Vec& theta, const Rational& p,
                                         const LossValue* bound) {
  const int nprime = static_cast<int>(v.coords.size());
  Vec yhat(nprime, Rational(0));
  for (int i = 0; i < nprime; ++i) {
    for (int j = 0; j < v.k; ++j) {
      Rational pre = theta[v.k * v.d + j];
      for (int c = 0; c < v.d; ++c) pre += theta[j * v.d + c] * v.coords[i][c];
      if (pre > 0) yhat[i] += signs[j] * pre;
    }
  }
  if (p_is_exact(p)) {
    Rational sum(0);
    for (std::size_t l = 0; l < v.data->points.size(); ++l) {
      const auto& pt = v.data->points[l];
      Rational e = abs(Rational(yhat[v.p2c[l]] - pt.label.y));
      if (e != 0)
        sum += p == 0 ? Rational(pt.multiplicity)
                      : Rational(pt.multiplicity * e);
      if (bound && bound->is_exact && sum > *bound->exact) return std::nullopt;
    }
    return LossValue::from_exact(std::move(sum));
  }
  Float sum(0);
  for (std::size_t l = 0; l < v.data->points.size(); ++l) {
    const auto& pt = v.data->points[l];
    Rational e = abs(Rational(yhat[v.p2c[l]] - pt.label.y));
    if (e != 0) sum += pt.multiplicity * pow_float(e, p);
    if (bound && !bound->is_exact && sum > bound->approx) return std::nullopt;
  }
  return LossValue::from_approx(std::move(sum));
}

// Pool for a fixed sign vector, covering every cell at once: prediction
// rows exist for EVERY nonempty active set J, so the tight equations of
// any sign-region vertex of any cell appear here.
struct Pool {
  std::vector<Vec> rows;
  std::vector<Rational> rhs;
};

Pool make_global_pool(const View& v, const std::vector<int>& signs) {
  Pool pool;
  const int nprime = static_cast<int>(v.coords.size());
  for (int i = 0; i < nprime; ++i)
    for (int j = 0; j < v.k; ++j) {
      pool.rows.push_back(v.partition_row(i, j));
      pool.rhs.push_back(Rational(0));
    }
  for (std::size_t l = 0; l < v.data->points.size(); ++l) {
    for (unsigned mask = 1; mask < (1u << v.k); ++mask) {
      Vec row(v.theta_dim(), Rational(0));
      for (int j = 0; j < v.k; ++j) {
        if (!(mask & (1u << j))) continue;
        for (int c = 0; c < v.d; ++c)
          row[j * v.d + c] += signs[j] * v.coords[v.p2c[l]][c];
        row[v.k * v.d + j] += signs[j];
      }
      pool.rows.push_back(std::move(row));
      pool.rhs.push_back(v.data->points[l].label.y);
    }
  }
  return pool;
}

Integer binomial(long long n, long long r) {
  if (r < 0 || r > n) return 0;
  Integer c = 1;
  for (long long i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
  return c;
}

struct Cand {
  LossValue loss;
  std::int64_t order = std::numeric_limits<std::int64_t>::max();
  ReluNetwork net;
};

std::vector<int> decode_signs(int k, std::int64_t s) {
  std::vector<int> signs(k);
  for (int j = k - 1; j >= 0; --j) {
    signs[j] = (s & 1) ? -1 : +1;
    s >>= 1;
  }
  return signs;
}

}  // namespace

EquationPool make_equation_pool(const SubproblemSpec& spec,
                                const Dataset& data) {
  const int k = static_cast<int>(spec.parts.size());
  View v = make_view(data, k);
  std::vector<std::vector<bool>> in_plus(
      k, std::vector<bool>(v.coords.size(), false));
  for (int j = 0; j < k; ++j)
    for (int i : spec.parts[j].plus) in_plus[j][i] = true;

  EquationPool pool;
  for (std::size_t i = 0; i < v.coords.size(); ++i)
    for (int j = 0; j < k; ++j) {
      pool.rows.push_back(v.partition_row(static_cast<int>(i), j));
      pool.rhs.push_back(Rational(0));
    }
  pool.partition_count = static_cast<int>(pool.rows.size());
  for (std::size_t l = 0; l < data.points.size(); ++l) {
    Vec row(v.theta_dim(), Rational(0));
    for (int j = 0; j < k; ++j) {
      if (!in_plus[j][v.p2c[l]]) continue;
      for (int c = 0; c < v.d; ++c)
        row[j * v.d + c] += spec.signs[j] * v.coords[v.p2c[l]][c];
      row[v.k * v.d + j] += spec.signs[j];
    }
    pool.rows.push_back(std::move(row));
    pool.rhs.push_back(data.points[l].label.y);
  }
  return pool;
}

ConcaveCandidate solve_subproblem_concave(const SubproblemSpec& spec,
                                          const Dataset& data,
                                          const Rational& p) {
  data.validate();
  if (!data.all_scalar())
    throw std::invalid_argument("concave subproblems require scalar labels");
  const int k = static_cast<int>(spec.parts.size());
  View v = make_view(data, k);
  EquationPool pool = make_equation_pool(spec, data);
  const int m0 = v.theta_dim();
  const int total_rows = static_cast<int>(pool.rows.size());

  std::vector<std::vector<bool>> in_plus(
      k, std::vector<bool>(v.coords.size(), false));
  for (int j = 0; j < k; ++j)
    for (int i : spec.parts[j].plus) in_plus[j][i] = true;

  auto feasible = [&](const Vec& theta) {
    for (std::size_t i = 0; i < v.coords.size(); ++i)
      for (int j = 0; j < k; ++j) {
        Rational val = dot(v.partition_row(static_cast<int>(i), j), theta);
        if (in_plus[j][i] ? (val < 0) : (val > 0)) return false;
      }
    return true;
  };

  ConcaveCandidate best;
  best.network = network_from_theta(v, spec.signs, Vec(m0, Rational(0)));
  best.loss = *loss_with_abort(v, spec.signs, Vec(m0, Rational(0)), p, nullptr);

  Elim elim(m0);
  auto recurse = [&](auto&& self, int start) -> void {
    if (static_cast<int>(elim.rows.size()) == m0) {
      best.subsets_solved++;
      Vec theta = elim.solve();
      if (!feasible(theta)) return;
      if (auto lv = loss_with_abort(v, spec.signs, theta, p, &best.loss)) {
        if (loss_less(*lv, best.loss)) {
          best.loss = std::move(*lv);
          best.network = network_from_theta(v, spec.signs, theta);
        }
      }
      return;
    }
    const int need = m0 - static_cast<int>(elim.rows.size());
    for (int i = start; i + need <= total_rows; ++i) {
      if (elim.push(Vec(pool.rows[i]), pool.rhs[i]) == Elim::Added) {
        self(self, i + 1);
        elim.pop();
      }
    }
  };
  recurse(recurse, 0);
  return best;
}

PointednessWitness verify_pointedness(const Dataset& data, int k) {
  (void)k;  // the rank statement holds for every k once the points do
  PointednessWitness out;
  if (data.points.empty()) return out;
  const int d = data.dim;
  Elim elim(d);
  out.point_indices.push_back(0);
  for (std::size_t i = 1; i < data.points.size(); ++i) {
    if (static_cast<int>(out.point_indices.size()) == d + 1) break;
    Vec diff(d);
    for (int c = 0; c < d; ++c)
      diff[c] = data.points[i].x[c] - data.points[0].x[c];
    if (elim.push(std::move(diff), Rational(0)) == Elim::Added)
      out.point_indices.push_back(static_cast<int>(i));
  }
  out.pointed = static_cast<int>(out.point_indices.size()) == d + 1;
  if (!out.pointed) out.point_indices.clear();
  return out;
}

TrainResult train_concave(const Dataset& data, int k, const Rational& p,
                          const TrainOptions& opts) {
  data.validate();
  if (!data.all_scalar())
    throw std::invalid_argument("concave trainer requires scalar labels");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (p < 0 || p > 1)
    throw std::invalid_argument("concave trainer requires p in [0, 1]");
  const LossSpec loss_spec = LossSpec::lp(p);
  const long long budget = opts.budget > 0 ? opts.budget : kConcaveSubsetBudget;

  const long long lp_before = lp_solve_count();
  Dataset dd = dedupe(data);
  auto [reduced, transform] = affine_hull_reduce(dd);
  View view = make_view(reduced, k);
  const int m0 = view.theta_dim();
  const std::int64_t sign_count = 1ll << k;

  std::vector<Pool> pools;
  for (std::int64_t s = 0; s < sign_count; ++s)
    pools.push_back(make_global_pool(view, decode_signs(k, s)));
  const int pool_size = static_cast<int>(pools[0].rows.size());

  if (sign_count * binomial(pool_size, m0) > budget)
    throw BudgetExceeded("equation subset budget");

  std::atomic<long long> solved{0};

  Cand init;
  init.net = ReluNetwork::zero(view.d, k);
  {
    std::vector<int> plus_signs(k, +1);
    init.loss =
        *loss_with_abort(view, plus_signs, Vec(m0, Rational(0)), p, nullptr);
  }

  // One task = (sign vector, index of the lexicographically first row of
  // the subset); the recursion below it explores all completions.
  const std::int64_t total_tasks = sign_count * pool_size;

  auto visit = [&](std::int64_t task,
                   const Cand& incumbent) -> std::optional<Cand> {
    const std::int64_t s = task / pool_size;
    const int first = static_cast<int>(task % pool_size);
    const std::vector<int> signs = decode_signs(k, s);
    const Pool& pool = pools[s];

    long long local_solved = 0;
    std::optional<Cand> best;
    Elim elim(m0);
    auto recurse = [&](auto&& self, int start) -> void {
      if (static_cast<int>(elim.rows.size()) == m0) {
        ++local_solved;
        Vec theta = elim.solve();
        const LossValue* bound =
            best ? &best->loss : &incumbent.loss;
        if (auto lv = loss_with_abort(view, signs, theta, p, bound)) {
          if (!best || loss_less(*lv, best->loss)) {
            Cand c;
            c.loss = std::move(*lv);
            c.order = task;
            c.net = network_from_theta(view, signs, theta);
            best = std::move(c);
          }
        }
        return;
      }
      const int need = m0 - static_cast<int>(elim.rows.size());
      for (int i = start; i + need <= static_cast<int>(pool.rows.size());
           ++i) {
        if (elim.push(Vec(pool.rows[i]), pool.rhs[i]) == Elim::Added) {
          self(self, i + 1);
          elim.pop();
        }
      }
    };
    if (elim.push(Vec(pool.rows[first]), pool.rhs[first]) == Elim::Added)
      recurse(recurse, first + 1);
    solved.fetch_add(local_solved, std::memory_order_relaxed);
    if (best && !loss_less(best->loss, incumbent.loss) &&
        !(loss_equal(best->loss, incumbent.loss) &&
          best->order < incumbent.order))
      return std::nullopt;
    return best;
  };
  auto better = [](const Cand& a, const Cand& b) {
    if (loss_less(a.loss, b.loss)) return true;
    return loss_equal(a.loss, b.loss) && a.order < b.order;
  };

  Cand best = BlockReducer<Cand>::run(total_tasks, std::move(init),
                                      opts.threads, 8, visit, better);

  // Certificate: the cell the optimum lives in, read off the network.
  SubproblemSpec cert;
  cert.parts.resize(k);
  cert.signs.resize(k);
  for (int j = 0; j < k; ++j) {
    cert.signs[j] = best.net.neurons.empty() ? +1 : best.net.neurons[j].a;
    for (std::size_t i = 0; i < view.coords.size(); ++i) {
      Rational pre = best.net.neurons[j].b;
      for (int c = 0; c < view.d; ++c)
        pre += best.net.neurons[j].w[c] * view.coords[i][c];
      if (pre > 0) cert.parts[j].plus.push_back(static_cast<int>(i));
    }
  }

  TrainResult result;
  result.network = lift_network(transform, best.net);
  result.loss = loss_value(result.network, data, loss_spec);
  if (!loss_equal(result.loss, best.loss))
    throw std::logic_error("lifted network loss mismatch");
  result.certificate = std::move(cert);
  result.subproblems_solved = solved.load();
  result.lp_solves = lp_solve_count() - lp_before;
  return result;
}

}  // namespace relux
