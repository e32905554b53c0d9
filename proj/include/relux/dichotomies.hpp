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

#ifndef RELUX_DICHOTOMIES_HPP
#define RELUX_DICHOTOMIES_HPP

#include <vector>

#include "relux/lp.hpp"
#include "relux/rational.hpp"

namespace relux {

// An ordered halfspace partition of distinct-point indices: `plus` is the
// strict-positive side of some affine function, the complement is the
// weak nonpositive side.
struct Dichotomy {
  std::vector<int> plus;  // sorted ascending

  bool operator==(const Dichotomy& o) const { return plus == o.plus; }
  bool operator<(const Dichotomy& o) const { return plus < o.plus; }
};

// A realizing (w, b) with <w,x_i>+b >= 1 on the plus side and <= 0
// elsewhere. Strictness is normalized to margin 1 by scaling.
struct DichotomyWitness {
  Vec w;
  Rational b;
};

// True iff some open halfspace contains exactly the plus-set.
// Points must be pairwise distinct.
bool is_open_dichotomy(const std::vector<Vec>& points,
                       const std::vector<int>& plus);

std::optional<DichotomyWitness> open_dichotomy_witness(
    const std::vector<Vec>& points, const std::vector<int>& plus);

// Reference method: 2^n' LP sweep over every candidate plus-set.
// Output is sorted lexicographically by plus-set.
std::vector<Dichotomy> enumerate_open_dichotomies(
    const std::vector<Vec>& points, int max_points = 16);

// O(n'^d)-flavored method: incremental cell enumeration of the central
// hyperplane arrangement of the homogenized points (x_i, 1). Produces the
// identical set in the identical order.
std::vector<Dichotomy> enumerate_open_dichotomies_geometric(
    const std::vector<Vec>& points);

// Cover's count of halfspace dichotomies of n points in general position
// in R^d: 2 * sum_{i=0}^{d} C(n-1, i).
long long cover_count(int n, int d);

}  // namespace relux

#endif  // RELUX_DICHOTOMIES_HPP
