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

#ifndef RELUX_TRAIN_COMMON_HPP
#define RELUX_TRAIN_COMMON_HPP

#include <stdexcept>
#include <vector>

#include "relux/dichotomies.hpp"
#include "relux/network.hpp"

namespace relux {

// One enumeration cell: a dichotomy and an output sign per neuron.
struct SubproblemSpec {
  std::vector<Dichotomy> parts;  // size k, over distinct-point indices
  std::vector<int> signs;        // size k, entries in {-1,+1}
};

struct TrainResult {
  ReluNetwork network;
  LossValue loss;
  SubproblemSpec certificate;
  long long subproblems_solved = 0;
  long long lp_solves = 0;
};

// Backend-default enumeration budgets.
inline constexpr long long kConvexCellBudget = 10'000'000;
inline constexpr long long kConcaveSubsetBudget = 100'000'000;

struct TrainOptions {
  int threads = 1;
  long long budget = 0;  // 0 = backend default (cells / equation subsets)
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace relux

#endif  // RELUX_TRAIN_COMMON_HPP
