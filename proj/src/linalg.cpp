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

#include "relux/linalg.hpp"

namespace relux {

std::vector<int> rref(Mat& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rank(const Mat& a) {
  Mat m = a;
  return static_cast<int>(rref(m).size());
}

std::optional<Vec> solve_square_system(const Mat& a, const Vec& rhs) {
  const std::size_t n = a.size();
  Mat aug(n, Vec(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n] = rhs[i];
  }
  // Forward elimination with partial (first nonzero) pivoting.
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(aug[p], aug[c]);
    const Rational inv = Rational(1) / aug[c][c];
    for (std::size_t j = c; j <= n; ++j) aug[c][j] *= inv;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (aug[i][c] == 0) continue;
      const Rational f = aug[i][c];
      for (std::size_t j = c; j <= n; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  Vec x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = aug[i][n];
    for (std::size_t j = i + 1; j < n; ++j) s -= aug[i][j] * x[j];
    x[i] = s;
  }
  return x;
}

LinearSolution solve_linear_system(const Mat& a, const Vec& rhs) {
  LinearSolution out;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  Mat aug(rows, Vec(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = rhs[i];
  }
  std::vector<int> pivots = rref(aug);
  // A pivot in the rhs column means the system is inconsistent.
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) {
    out.consistent = false;
    return out;
  }
  out.consistent = true;
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  out.particular.assign(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    out.particular[pivots[r]] = aug[r][cols];
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols, Rational(0));
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -aug[r][c];
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

}  // namespace relux
