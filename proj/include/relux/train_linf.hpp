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

#ifndef RELUX_TRAIN_LINF_HPP
#define RELUX_TRAIN_LINF_HPP

#include <vector>

#include "relux/dataset.hpp"
#include "relux/lp.hpp"
#include "relux/network.hpp"

namespace relux {

// Sorted distinct positive lower interval endpoints; the binary search
// runs over the r+1 gaps between them (sentinels 0 and +infinity).
struct ThresholdLadder {
  std::vector<Rational> values;  // strictly increasing, all > 0

  int r() const { return static_cast<int>(values.size()); }
  // alpha_tilde(0) = 0; alpha_tilde(t) for t in [1, r].
  Rational alpha_tilde(int t) const;
};

ThresholdLadder threshold_ladder(const Dataset& data);

// LP(s) over variables (w in R^d, b, gamma), minimizing gamma: points
// with alpha_i >= alpha_tilde(s) are bounded on both sides, the rest
// only from above; gamma >= -beta_i for all i; gamma >= 0. s in [1, r+1].
LinearProgram build_lp_s(const Dataset& data, int s);

struct LinfResult {
  Vec w;
  Rational b;
  Rational gamma;  // exact optimal maximum interval deviation
  int s_star = 1;  // smallest valid index found
  long long lp_solves = 0;
};

// Exact global minimum of max_i dist_{[alpha_i, beta_i]}([<w,x_i>+b]_+)
// for a single ReLU, by binary search over the LP(s) family. Scalar
// labels are treated as degenerate intervals. At most
// ceil(log2(r+1)) + 1 LP solves.
LinfResult train_linf_interval(const Dataset& data);

struct RealizableResult {
  bool realizable = false;
  Vec w;
  Rational b;
};

// One LP(1) solve: objective 0 iff all points can be fitted exactly.
RealizableResult check_realizable(const Dataset& data);

}  // namespace relux

#endif  // RELUX_TRAIN_LINF_HPP
