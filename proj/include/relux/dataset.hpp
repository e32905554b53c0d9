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

#ifndef RELUX_DATASET_HPP
#define RELUX_DATASET_HPP

#include <utility>
#include <vector>

#include "relux/linalg.hpp"
#include "relux/rational.hpp"

namespace relux {

// Either a scalar target y or a target interval [alpha, beta].
struct Label {
  bool is_interval = false;
  Rational y;            // scalar form
  Rational alpha, beta;  // interval form, alpha <= beta

  static Label scalar(Rational v) {
    Label l;
    l.y = std::move(v);
    return l;
  }
  static Label interval(Rational a, Rational b);

  bool operator==(const Label& o) const;
};

struct LabeledPoint {
  Vec x;
  Label label;
  long long multiplicity = 1;
};

struct Dataset {
  int dim = 0;
  std::vector<LabeledPoint> points;

  // n = total number of data points counted with multiplicity.
  long long total_count() const;
  bool all_scalar() const;
  void validate() const;  // throws std::invalid_argument on broken invariants
};

// Merges points with identical coordinates AND identical labels, summing
// multiplicities; first-occurrence order is preserved.
Dataset dedupe(const Dataset& data);

// Affine map x -> matrix * x + offset from R^dim to R^dim'.
struct AffineTransform {
  Mat matrix;
  Vec offset;
  int input_dim = 0;  // matrix rows can be empty when out_dim is 0

  int in_dim() const { return input_dim; }
  int out_dim() const { return (int)matrix.size(); }
  Vec apply(const Vec& x) const;

  static AffineTransform identity(int d);
};

// Maps the data into the coordinates of its affine hull: the returned
// dataset has dim equal to the affine dimension of the point set, and the
// transform reproduces each image exactly. The transform is chosen by
// exact Gaussian elimination on (x_i - x_1) with lexicographically-first
// pivot columns, so the result is deterministic.
std::pair<Dataset, AffineTransform> affine_hull_reduce(const Dataset& data);

// The distinct coordinate vectors of a dataset (labels ignored), plus the
// index of each point's coordinates in that list. Enumeration modules
// operate on distinct coordinates only.
struct DistinctPoints {
  std::vector<Vec> coords;
  std::vector<int> point_to_coord;  // per dataset point
};

DistinctPoints distinct_points(const Dataset& data);

}  // namespace relux

#endif  // RELUX_DATASET_HPP
