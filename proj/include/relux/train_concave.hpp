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

#ifndef RELUX_TRAIN_CONCAVE_HPP
#define RELUX_TRAIN_CONCAVE_HPP

#include <vector>

#include "relux/train_common.hpp"

namespace relux {

// Pooled linear equations whose rank-complete subsets generate every
// vertex candidate of a subproblem: kn' homogeneous partition rows plus
// one inhomogeneous prediction row per data point (the point's label as
// right-hand side). Row dimension is kd+k.
struct EquationPool {
  std::vector<Vec> rows;
  std::vector<Rational> rhs;
  int partition_count = 0;  // rows[0..partition_count) have rhs 0
};

EquationPool make_equation_pool(const SubproblemSpec& spec,
                                const Dataset& data);

struct ConcaveCandidate {
  ReluNetwork network;
  LossValue loss;
  long long subsets_solved = 0;  // rank-complete systems actually solved
};

// Globally optimal k-ReLU training for the concave losses |e|^p with
// p in [0, 1]: vertex candidates are generated from rank-complete
// equation subsets, and each candidate is scored by its true network
// loss, so the minimum over candidates is the global optimum.
TrainResult train_concave(const Dataset& data, int k, const Rational& p,
                          const TrainOptions& opts = {});

// One subproblem: every (kd+k)-subset of the pooled equations that is
// rank-complete yields a candidate, kept when it satisfies all weak
// partition constraints of the cell; the zero network is always a
// fallback candidate. Returns the best by true loss.
ConcaveCandidate solve_subproblem_concave(const SubproblemSpec& spec,
                                          const Dataset& data,
                                          const Rational& p);

// Witnesses that the subproblem polyhedra are pointed: finds d+1
// affinely independent data points, whose partition rows have full rank
// kd+k. Always succeeds on affine_hull_reduce'd data.
struct PointednessWitness {
  bool pointed = false;
  std::vector<int> point_indices;  // d+1 indices when pointed
};

PointednessWitness verify_pointedness(const Dataset& data, int k);

}  // namespace relux

#endif  // RELUX_TRAIN_CONCAVE_HPP
