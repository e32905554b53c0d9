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

#ifndef RELUX_TRAIN_CONVEX_HPP
#define RELUX_TRAIN_CONVEX_HPP

#include <utility>

#include "relux/train_common.hpp"

namespace relux {

// Globally optimal k-ReLU training for the l1 loss: iterates every
// k-tuple of halfspace dichotomies and every sign vector, solving one
// exact LP per cell.
TrainResult train_l1(const Dataset& data, int k,
                     const TrainOptions& opts = {});

// Same driver for the l2 loss; each cell is solved by exhaustive
// active-set enumeration with exact stationarity solves.
TrainResult train_l2(const Dataset& data, int k,
                     const TrainOptions& opts = {});

// One l1 cell: exact optimum of the cell LP. The dichotomies in `spec`
// index the distinct coordinate vectors of `data` (in first-occurrence
// order). Always feasible: the zero network satisfies every weak row.
std::pair<ReluNetwork, Rational> solve_subproblem_l1(
    const SubproblemSpec& spec, const Dataset& data);

}  // namespace relux

#endif  // RELUX_TRAIN_CONVEX_HPP
