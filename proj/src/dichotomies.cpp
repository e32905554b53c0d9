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

#include "relux/dichotomies.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace relux {

namespace {

void check_distinct(const std::vector<Vec>& points) {
  std::set<Vec> seen;
  for (const auto& p : points)
    if (!seen.insert(p).second)
      throw std::invalid_argument("points must be pairwise distinct");
}

}  // namespace

std::optional<DichotomyWitness> open_dichotomy_witness(
    const std::vector<Vec>& points, const std::vector<int>& plus) {
  const int n = static_cast<int>(points.size());
  const int d = n == 0 ? 0 : static_cast<int>(points[0].size());
  std::vector<bool> in_plus(n, false);
  for (int i : plus) in_plus[i] = true;

  LinearProgram lp(d + 1);  // variables (w, b), all free
  for (int i = 0; i < n; ++i) {
    Vec row(points[i]);
    row.push_back(Rational(1));
    if (in_plus[i])
      lp.add_row(std::move(row), Sense::GE, Rational(1));
    else
      lp.add_row(std::move(row), Sense::LE, Rational(0));
  }
  LpOutcome out = solve_lp(lp);
  if (out.status != LpStatus::Optimal) return std::nullopt;
  DichotomyWitness w;
  w.w.assign(out.point.begin(), out.point.begin() + d);
  w.b = out.point[d];
  return w;
}

bool is_open_dichotomy(const std::vector<Vec>& points,
                       const std::vector<int>& plus) {
  check_distinct(points);
  return open_dichotomy_witness(points, plus).has_value();
}

std::vector<Dichotomy> enumerate_open_dichotomies(
    const std::vector<Vec>& points, int max_points) {
  check_distinct(points);
  const int n = static_cast<int>(points.size());
  if (n > max_points)
    throw std::invalid_argument("too many points for the brute-force sweep");
  std::vector<Dichotomy> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<int> plus;
    for (int i = 0; i < n; ++i)
      if (mask & (1ul << i)) plus.push_back(i);
    if (open_dichotomy_witness(points, plus)) out.push_back({std::move(plus)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Dichotomy> enumerate_open_dichotomies_geometric(
    const std::vector<Vec>& points) {
  check_distinct(points);
  const int n = static_cast<int>(points.size());
  if (n == 0) return {Dichotomy{}};
  const int d = static_cast<int>(points[0].size());
  const int hd = d + 1;  // homogeneous dimension, u = (w, b)

  // Homogenized points z_i = (x_i, 1). We enumerate the full-dimensional
  // cells of the central arrangement {u : <z_i, u> = 0}. A plus-set is
  // achievable iff it is the positive part of some cell's sign vector:
  // any boundary point can be pushed to the negative side by lowering b,
  // since every z_i has last coordinate 1.
  struct Region {
    std::vector<int8_t> signs;  // over hyperplanes inserted so far
    Vec witness;                // strict interior point
  };

  auto side_witness = [&](const Region& r, int t,
                          int8_t side) -> std::optional<Vec> {
    LinearProgram lp(hd);
    for (int i = 0; i < t; ++i) {
      Vec row(points[i]);
      row.push_back(Rational(1));
      if (r.signs[i] < 0)
        for (auto& v : row) v = -v;
      lp.add_row(std::move(row), Sense::GE, Rational(1));
    }
    Vec row(points[t]);
    row.push_back(Rational(1));
    if (side < 0)
      for (auto& v : row) v = -v;
    lp.add_row(std::move(row), Sense::GE, Rational(1));
    LpOutcome out = solve_lp(lp);
    if (out.status != LpStatus::Optimal) return std::nullopt;
    return out.point;
  };

  std::vector<Region> regions;
  regions.push_back(Region{{}, Vec(hd, Rational(0))});
  for (int t = 0; t < n; ++t) {
    std::vector<Region> next;
    for (auto& r : regions) {
      Vec z(points[t]);
      z.push_back(Rational(1));
      Rational s = dot(z, r.witness);
      for (int8_t side : {int8_t(+1), int8_t(-1)}) {
        if ((side > 0 && s > 0) || (side < 0 && s < 0)) {
          Region nr;
          nr.signs = r.signs;
          nr.signs.push_back(side);
          nr.witness = r.witness;
          next.push_back(std::move(nr));
        } else if (auto w = side_witness(r, t, side)) {
          Region nr;
          nr.signs = r.signs;
          nr.signs.push_back(side);
          nr.witness = std::move(*w);
          next.push_back(std::move(nr));
        }
      }
    }
    regions = std::move(next);
  }

  std::vector<Dichotomy> out;
  out.reserve(regions.size());
  for (const auto& r : regions) {
    Dichotomy dich;
    for (int i = 0; i < n; ++i)
      if (r.signs[i] > 0) dich.plus.push_back(i);
    out.push_back(std::move(dich));
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long cover_count(int n, int d) {
  long long total = 0;
  for (int i = 0; i <= d && i <= n - 1; ++i) {
    long long c = 1;
    for (int j = 0; j < i; ++j) c = c * (n - 1 - j) / (j + 1);
    total += c;
  }
  return 2 * total;
}

}  // namespace relux
