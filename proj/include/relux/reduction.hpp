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

#ifndef RELUX_REDUCTION_HPP
#define RELUX_REDUCTION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relux/dataset.hpp"
#include "relux/network.hpp"

namespace relux {

struct ColoredVertex {
  std::string id;
  int color = 1;  // in [1, k_colors]
};

struct ColoredGraph {
  int k_colors = 0;
  std::vector<ColoredVertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;

  int n_vertices() const { return static_cast<int>(vertices.size()); }
  int vertex_index(const std::string& id) const;  // -1 when absent
  bool adjacent(int u, int v) const;
  void validate() const;  // contiguous colors, known ids, no self-loops
};

// Hard instance generated from a colored graph: a single-ReLU lp-loss
// training task whose optimum is <= gamma iff the graph has a
// multicolored clique.
struct ReductionOutput {
  Dataset dataset;  // dim 2*k_colors, labels in {0, 1}
  Rational gamma;
  Rational delta;
  long long m_copies = 0;  // multiplicity M of each midpoint
  Rational p;
  std::map<int, std::string> decode_map;  // label-1 point index -> vertex id
};

// i-th rational point on the unit circle: ((1-i^2)/(1+i^2), 2i/(1+i^2)).
std::pair<Rational, Rational> circle_point(long long i);

struct ReductionParams {
  Rational gamma;
  Rational delta;
  long long m_copies = 0;
};

// gamma = N - k; delta and M per loss exponent, with the two proof
// inequalities (1-delta)^p (N-k+1) > gamma and M delta^p > gamma
// re-certified at construction (exactly for integer p, with margin
// otherwise; M is enlarged if the margin is thin).
ReductionParams compute_params(const ColoredGraph& graph, const Rational& p);

ReductionOutput generate_instance(const ColoredGraph& graph,
                                  const Rational& p);

// The explicit clique witness (w, b): loss on the generated instance is
// exactly gamma. Throws unless `clique` is a multicolored k-clique.
ReluNetwork witness_weights(const ColoredGraph& graph,
                            const std::vector<std::string>& clique,
                            const Rational& p);

// C = { vertex of label-1 point x : f(x) > delta }. Guaranteed to be a
// multicolored clique whenever the network's loss is <= gamma.
std::vector<std::string> decode_clique(const ReluNetwork& net,
                                       const ReductionOutput& out);

// Exhaustive search over the color-class product (bounded by 10^6).
std::optional<std::vector<std::string>> brute_force_multicolored_clique(
    const ColoredGraph& graph);

}  // namespace relux

#endif  // RELUX_REDUCTION_HPP
