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

#ifndef RELUX_ORACLES_HPP
#define RELUX_ORACLES_HPP

#include <vector>

#include "relux/dataset.hpp"
#include "relux/dichotomies.hpp"
#include "relux/network.hpp"

// Brute-force references for tests. They deliberately share nothing with
// the trainers beyond core types and the LP solver, so agreement between
// a trainer and its oracle is meaningful evidence.

namespace relux {

// Plain 2^n sweep; independent of the enumeration module's code paths.
std::vector<Dichotomy> oracle_dichotomies(const std::vector<Vec>& points);

// Global optimum for d=1, k=1 by sorting the points and sweeping the
// 2n'+2 candidate active sets (prefixes/suffixes of the sorted order):
// per piece a 2-variable problem solved in closed form (p=2), by LP
// (interval maximum loss), or by exhaustive vertex-pair candidates
// evaluated at their true loss (p in [0,1]).
LossValue oracle_train_1d(const Dataset& data, const LossSpec& loss);

// Minimum loss over a finite rational lattice of network parameters:
// each of the k(d+1) weights ranges over {i*bound/resolution : |i| <=
// resolution} and all 2^k sign vectors are tried. An upper bound on the
// true optimum; refining `resolution` by an integer factor never
// increases the value.
LossValue grid_oracle(const Dataset& data, const LossSpec& loss, int k,
                      const Rational& bound, int resolution);

}  // namespace relux

#endif  // RELUX_ORACLES_HPP
