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

#ifndef RELUX_LINALG_HPP
#define RELUX_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "relux/rational.hpp"

namespace relux {

using Mat = std::vector<Vec>;  // row-major, rectangular

// Exact rank via Gaussian elimination.
int rank(const Mat& a);

// Solves A x = rhs for square A. Returns nullopt when A is singular.
std::optional<Vec> solve_square_system(const Mat& a, const Vec& rhs);

// Full description of the solution set of a general linear system.
struct LinearSolution {
  bool consistent = false;
  Vec particular;       // one solution (free variables set to 0)
  Mat nullspace;        // basis vectors; empty iff solution unique
  bool unique() const { return consistent && nullspace.empty(); }
};

LinearSolution solve_linear_system(const Mat& a, const Vec& rhs);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(Mat& a);

}  // namespace relux

#endif  // RELUX_LINALG_HPP
