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

#ifndef RELUX_NETWORK_HPP
#define RELUX_NETWORK_HPP

#include <optional>
#include <vector>

#include "relux/dataset.hpp"
#include "relux/rational.hpp"

namespace relux {

// One hidden rectifier: x -> a * [<w,x> + b]_+ with a in {-1,+1}.
struct Neuron {
  Vec w;
  Rational b;
  int a = 1;
};

// Two-layer network: k hidden rectifiers feeding a linear output neuron.
struct ReluNetwork {
  std::vector<Neuron> neurons;

  int k() const { return static_cast<int>(neurons.size()); }
  int dim() const { return neurons.empty() ? 0 : (int)neurons[0].w.size(); }

  static ReluNetwork zero(int dim, int k);
};

// Exact network output sum_j a_j [<w_j,x> + b_j]_+.
Rational eval_network(const ReluNetwork& net, const Vec& x);

// Loss family: lp(p) for rational p >= 0, or the interval maximum loss.
struct LossSpec {
  enum Kind { Lp, LinfInterval } kind = Lp;
  Rational p;  // meaningful for Lp only

  static LossSpec lp(Rational p);
  static LossSpec linf_interval() { return LossSpec{LinfInterval, Rational(0)}; }
};

// A loss is exact whenever it is a rational number at rational weights
// (p a nonnegative integer, or any maximum-deviation value); otherwise
// only the high-precision approximation is available.
struct LossValue {
  std::optional<Rational> exact;
  Float approx;
  bool is_exact = false;

  static LossValue from_exact(Rational v);
  static LossValue from_approx(Float v);
};

// Total order used for incumbent comparison: exact when both sides are
// exact, otherwise by the fixed-precision approximations (deterministic).
bool loss_less(const LossValue& a, const LossValue& b);
bool loss_equal(const LossValue& a, const LossValue& b);

// dist_{alpha,beta}(t) = max{alpha - t, 0, t - beta}.
Rational dist_interval(const Rational& alpha, const Rational& beta,
                       const Rational& t);

// Total loss of a network on a dataset. Lp uses the convention 0^0 = 0,
// so p = 0 counts misfit points (with multiplicity). LinfInterval is the
// maximum interval deviation over all points.
LossValue loss_value(const ReluNetwork& net, const Dataset& data,
                     const LossSpec& loss);

// Composes a network trained in reduced coordinates with the reducing
// transform, yielding a network in the original space with identical
// outputs on the affine hull.
ReluNetwork lift_network(const AffineTransform& t, const ReluNetwork& net);

}  // namespace relux

#endif  // RELUX_NETWORK_HPP
