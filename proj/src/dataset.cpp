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

#include "relux/dataset.hpp"

#include <map>
#include <tuple>
#include <stdexcept>

namespace relux {

Label Label::interval(Rational a, Rational b) {
  if (a > b) throw std::invalid_argument("interval requires alpha <= beta");
  Label l;
  l.is_interval = true;
  l.alpha = std::move(a);
  l.beta = std::move(b);
  return l;
}

bool Label::operator==(const Label& o) const {
  if (is_interval != o.is_interval) return false;
  return is_interval ? (alpha == o.alpha && beta == o.beta) : y == o.y;
}

long long Dataset::total_count() const {
  long long n = 0;
  for (const auto& p : points) n += p.multiplicity;
  return n;
}

bool Dataset::all_scalar() const {
  for (const auto& p : points)
    if (p.label.is_interval) return false;
  return true;
}

void Dataset::validate() const {
  if (points.empty()) throw std::invalid_argument("dataset has no points");
  bool interval = points[0].label.is_interval;
  for (const auto& p : points) {
    if (static_cast<int>(p.x.size()) != dim)
      throw std::invalid_argument("point dimension mismatch");
    if (p.multiplicity < 1)
      throw std::invalid_argument("multiplicity must be >= 1");
    if (p.label.is_interval != interval)
      throw std::invalid_argument("mixed scalar and interval labels");
  }
}

namespace {

// Coordinates plus label, ordered so equal points coalesce.
using PointKey = std::tuple<Vec, bool, Rational, Rational, Rational>;

PointKey point_key(const LabeledPoint& p) {
  return {p.x, p.label.is_interval, p.label.y, p.label.alpha, p.label.beta};
}

}  // namespace

Dataset dedupe(const Dataset& data) {
  Dataset out;
  out.dim = data.dim;
  std::map<PointKey, std::size_t> seen;
  for (const auto& p : data.points) {
    auto [it, inserted] = seen.emplace(point_key(p), out.points.size());
    if (inserted)
      out.points.push_back(p);
    else
      out.points[it->second].multiplicity += p.multiplicity;
  }
  return out;
}

Vec AffineTransform::apply(const Vec& x) const {
  Vec y(offset);
  for (std::size_t i = 0; i < matrix.size(); ++i) y[i] += dot(matrix[i], x);
  return y;
}

AffineTransform AffineTransform::identity(int d) {
  AffineTransform t;
  t.input_dim = d;
  t.matrix.assign(d, Vec(d, Rational(0)));
  for (int i = 0; i < d; ++i) t.matrix[i][i] = 1;
  t.offset.assign(d, Rational(0));
  return t;
}

std::pair<Dataset, AffineTransform> affine_hull_reduce(const Dataset& data) {
  if (data.points.empty()) throw std::invalid_argument("empty dataset");
  const int d = data.dim;
  const Vec& base = data.points[0].x;

  Mat diffs;
  for (std::size_t i = 1; i < data.points.size(); ++i) {
    Vec v(d);
    for (int j = 0; j < d; ++j) v[j] = data.points[i].x[j] - base[j];
    diffs.push_back(std::move(v));
  }
  std::vector<int> pivots = diffs.empty() ? std::vector<int>{} : rref(diffs);
  const int dprime = static_cast<int>(pivots.size());

  if (dprime == d) {
    return {data, AffineTransform::identity(d)};
  }

  // T(x) selects the pivot coordinates of (x - x_1); restricted to the
  // affine hull this is a bijection onto R^d'.
  AffineTransform t;
  t.input_dim = d;
  t.matrix.assign(dprime, Vec(d, Rational(0)));
  t.offset.assign(dprime, Rational(0));
  for (int r = 0; r < dprime; ++r) {
    t.matrix[r][pivots[r]] = 1;
    t.offset[r] = -base[pivots[r]];
  }

  Dataset out;
  out.dim = dprime;
  out.points.reserve(data.points.size());
  for (const auto& p : data.points) {
    LabeledPoint q;
    q.x = t.apply(p.x);
    q.label = p.label;
    q.multiplicity = p.multiplicity;
    out.points.push_back(std::move(q));
  }
  return {std::move(out), std::move(t)};
}

DistinctPoints distinct_points(const Dataset& data) {
  DistinctPoints out;
  std::map<Vec, int> seen;
  for (const auto& p : data.points) {
    auto it = seen.find(p.x);
    if (it == seen.end()) {
      int idx = static_cast<int>(out.coords.size());
      out.coords.push_back(p.x);
      seen.emplace(p.x, idx);
      out.point_to_coord.push_back(idx);
    } else {
      out.point_to_coord.push_back(it->second);
    }
  }
  return out;
}

}  // namespace relux
