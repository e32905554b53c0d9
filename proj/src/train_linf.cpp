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

#include "relux/train_linf.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace relux {

namespace {

// Interval view of a label: scalars become degenerate intervals.
std::pair<Rational, Rational> interval_of(const Label& l) {
  if (l.is_interval) return {l.alpha, l.beta};
  return {l.y, l.y};
}

}  // namespace

Rational ThresholdLadder::alpha_tilde(int t) const {
  if (t == 0) return Rational(0);
  return values.at(t - 1);
}

ThresholdLadder threshold_ladder(const Dataset& data) {
  ThresholdLadder ladder;
  for (const auto& pt : data.points) {
    Rational alpha = interval_of(pt.label).first;
    if (alpha > 0) ladder.values.push_back(std::move(alpha));
  }
  std::sort(ladder.values.begin(), ladder.values.end());
  ladder.values.erase(
      std::unique(ladder.values.begin(), ladder.values.end()),
      ladder.values.end());
  return ladder;
}

LinearProgram build_lp_s(const Dataset& data, int s) {
  data.validate();
  ThresholdLadder ladder = threshold_ladder(data);
  if (s < 1 || s > ladder.r() + 1)
    throw std::invalid_argument("s out of range [1, r+1]");
  const int d = data.dim;
  const int gv = d + 1;  // gamma variable index; b is at index d

  LinearProgram lp(d + 2);
  lp.objective[gv] = 1;
  lp.lower.assign(d + 2, std::nullopt);
  lp.upper.assign(d + 2, std::nullopt);
  lp.lower[gv] = Rational(0);

  // s = r+1 means no lower-bound rows at all (alpha_tilde(r+1) = +inf).
  const bool any_lower = s <= ladder.r();
  const Rational threshold = any_lower ? ladder.alpha_tilde(s) : Rational(0);

  for (const auto& pt : data.points) {
    auto [alpha, beta] = interval_of(pt.label);
    Vec up(pt.x);
    up.push_back(Rational(1));   // b
    up.push_back(Rational(-1));  // -gamma
    lp.add_row(std::move(up), Sense::LE, beta);  // <w,x> + b - gamma <= beta
    if (any_lower && alpha >= threshold) {
      Vec lo(pt.x);
      lo.push_back(Rational(1));
      lo.push_back(Rational(1));
      lp.add_row(std::move(lo), Sense::GE, alpha);  // <w,x> + b + gamma >= alpha
    }
    Vec g(d + 2, Rational(0));
    g[gv] = 1;
    lp.add_row(std::move(g), Sense::GE, -beta);  // rectifier outputs >= 0
  }
  return lp;
}

LinfResult train_linf_interval(const Dataset& data) {
  data.validate();
  ThresholdLadder ladder = threshold_ladder(data);
  const int d = data.dim;

  auto solve_s = [&](int s) {
    LpOutcome out = solve_lp(build_lp_s(data, s));
    if (out.status != LpStatus::Optimal)
      throw std::logic_error("LP(s) must be feasible and bounded");
    return out;
  };

  // Let gamma(s) be the optimum of LP(s) (non-increasing in s) and write
  // ghat(s) = max(gamma(s), alpha_tilde(s-1)). Any LP(s) solution keeps
  // every unbounded point's lower deviation at most alpha_tilde(s-1), so
  // its true maximum deviation is at most ghat(s); conversely a globally
  // optimal ReLU with value gamma* is feasible for LP(s) of the band
  // containing gamma*, so the global optimum equals min_s ghat(s). That
  // minimum is attained at the smallest s with gamma(s) < alpha_tilde(s)
  // — a monotone predicate (trivially true at s = r+1, where the
  // threshold is +infinity), found by plain binary search. Comparing
  // gamma(s) against both band ends instead can cycle when the optimum
  // equals a ladder value exactly.
  LinfResult result;
  std::optional<LpOutcome> at_lo;  // outcome for s = lo, when known
  int lo = 1, hi = ladder.r() + 1;
  while (lo < hi) {
    const int s = lo + (hi - lo) / 2;
    LpOutcome out = solve_s(s);
    ++result.lp_solves;
    if (out.objective_value < ladder.alpha_tilde(s)) {
      hi = s;
      at_lo = std::move(out);
    } else {
      lo = s + 1;
      at_lo.reset();
    }
  }
  if (!at_lo) {
    at_lo = solve_s(lo);
    ++result.lp_solves;
  }
  result.w.assign(at_lo->point.begin(), at_lo->point.begin() + d);
  result.b = at_lo->point[d];
  result.gamma = std::max(at_lo->objective_value, ladder.alpha_tilde(lo - 1));
  result.s_star = lo;
  return result;
}

RealizableResult check_realizable(const Dataset& data) {
  data.validate();
  LpOutcome out = solve_lp(build_lp_s(data, 1));
  if (out.status != LpStatus::Optimal)
    throw std::logic_error("LP(1) must be feasible and bounded");
  RealizableResult res;
  res.realizable = out.objective_value == 0;
  res.w.assign(out.point.begin(), out.point.begin() + data.dim);
  res.b = out.point[data.dim];
  return res;
}

}  // namespace relux
