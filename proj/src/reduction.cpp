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

#include "relux/reduction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace relux {

namespace {

constexpr long long kMaxMultiplicity = 1'000'000'000'000ll;
constexpr long long kBruteForceBound = 1'000'000ll;

// Margin at which the float-certified inequality M * delta^p > gamma is
// accepted; below it M is enlarged (the proof only needs M big enough).
const double kCertifyMargin = 1e-9;

// Parameter formulas, valid for every N >= k (gamma = 0 when N = k).
ReductionParams params_impl(long long n, long long k, const Rational& p) {
  if (p < 0) throw std::invalid_argument("p must be >= 0");
  ReductionParams out;
  out.gamma = Rational(n - k);
  const Rational count(n - k + 1);
  if (p == 0) {
    out.delta = Rational(1, 2);
    out.m_copies = n - k + 1;
    return out;
  }
  const Rational p_tilde = p < 1 ? Rational(1) : p;
  out.delta = 1 / (2 * p_tilde * count);

  if (is_integer(p)) {
    const unsigned long pu = numerator(p).convert_to<unsigned long>();
    const Rational dp = pow_int(out.delta, pu);
    Integer m = ceil_int(out.gamma / dp) + 1;
    if (m > kMaxMultiplicity)
      throw std::invalid_argument("reduction multiplicity too large");
    out.m_copies = m.convert_to<long long>();
    if (out.m_copies * dp <= out.gamma)
      throw std::logic_error("M delta^p > gamma violated");
    if (pow_int(1 - out.delta, pu) * count <= out.gamma)
      throw std::logic_error("(1-delta)^p (N-k+1) > gamma violated");
    return out;
  }

  const Float dp = pow_float(out.delta, p);
  Float m_float = boost::multiprecision::floor(to_float(out.gamma) / dp) + 2;
  if (m_float > Float(kMaxMultiplicity))
    throw std::invalid_argument("reduction multiplicity too large");
  long long m = m_float.convert_to<long long>();
  while (m * dp - to_float(out.gamma) < Float(kCertifyMargin)) ++m;
  out.m_copies = m;
  if (pow_float(1 - out.delta, p) * to_float(count) - to_float(out.gamma) <
      Float(kCertifyMargin))
    throw std::logic_error("(1-delta)^p (N-k+1) > gamma violated");
  return out;
}

// Per-color circle index of every vertex, assigned in input order.
std::vector<long long> circle_indices(const ColoredGraph& g) {
  std::vector<long long> counter(g.k_colors + 1, 0);
  std::vector<long long> idx(g.vertices.size());
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    idx[v] = ++counter[g.vertices[v].color];
  return idx;
}

Vec lifted_point(const ColoredGraph& g, int vertex, long long circle_idx) {
  Vec x(2 * g.k_colors, Rational(0));
  auto [cx, cy] = circle_point(circle_idx);
  const int block = 2 * (g.vertices[vertex].color - 1);
  x[block] = std::move(cx);
  x[block + 1] = std::move(cy);
  return x;
}

bool incompatible(const ColoredGraph& g, int u, int v) {
  return g.vertices[u].color == g.vertices[v].color || !g.adjacent(u, v);
}

}  // namespace

int ColoredGraph::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return static_cast<int>(i);
  return -1;
}

bool ColoredGraph::adjacent(int u, int v) const {
  const std::string &a = vertices[u].id, &b = vertices[v].id;
  for (const auto& e : edges)
    if ((e.first == a && e.second == b) || (e.first == b && e.second == a))
      return true;
  return false;
}

void ColoredGraph::validate() const {
  if (k_colors < 1) throw std::invalid_argument("k_colors must be >= 1");
  std::set<std::string> ids;
  std::vector<bool> used(k_colors + 1, false);
  for (const auto& v : vertices) {
    if (!ids.insert(v.id).second)
      throw std::invalid_argument("duplicate vertex id: " + v.id);
    if (v.color < 1 || v.color > k_colors)
      throw std::invalid_argument("vertex color out of range: " + v.id);
    used[v.color] = true;
  }
  for (int c = 1; c <= k_colors; ++c)
    if (!used[c]) throw std::invalid_argument("empty color class");
  for (const auto& e : edges) {
    if (e.first == e.second)
      throw std::invalid_argument("self-loop: " + e.first);
    if (!ids.count(e.first) || !ids.count(e.second))
      throw std::invalid_argument("edge references unknown vertex");
  }
}

std::pair<Rational, Rational> circle_point(long long i) {
  if (i < 1) throw std::invalid_argument("circle index must be >= 1");
  const Rational ii(i);
  return {(1 - ii * ii) / (1 + ii * ii), (2 * ii) / (1 + ii * ii)};
}

ReductionParams compute_params(const ColoredGraph& graph, const Rational& p) {
  graph.validate();
  if (graph.n_vertices() <= graph.k_colors)
    throw std::invalid_argument("need N > k");
  return params_impl(graph.n_vertices(), graph.k_colors, p);
}

ReductionOutput generate_instance(const ColoredGraph& graph,
                                  const Rational& p) {
  graph.validate();
  const int n = graph.n_vertices();
  ReductionParams params = params_impl(n, graph.k_colors, p);

  ReductionOutput out;
  out.gamma = params.gamma;
  out.delta = params.delta;
  out.m_copies = params.m_copies;
  out.p = p;
  out.dataset.dim = 2 * graph.k_colors;

  const std::vector<long long> idx = circle_indices(graph);
  std::vector<Vec> lifted(n);
  for (int v = 0; v < n; ++v) {
    lifted[v] = lifted_point(graph, v, idx[v]);
    LabeledPoint pt;
    pt.x = lifted[v];
    pt.label = Label::scalar(Rational(1));
    out.dataset.points.push_back(std::move(pt));
    out.decode_map[v] = graph.vertices[v].id;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!incompatible(graph, u, v)) continue;
      LabeledPoint pt;
      pt.x.resize(out.dataset.dim);
      for (int c = 0; c < out.dataset.dim; ++c)
        pt.x[c] = (lifted[u][c] + lifted[v][c]) / 2;
      pt.label = Label::scalar(Rational(0));
      pt.multiplicity = params.m_copies;
      out.dataset.points.push_back(std::move(pt));
    }
  out.dataset.validate();
  return out;
}

ReluNetwork witness_weights(const ColoredGraph& graph,
                            const std::vector<std::string>& clique,
                            const Rational& p) {
  graph.validate();
  (void)p;  // the witness weights do not depend on the loss exponent
  const int k = graph.k_colors;
  if (static_cast<int>(clique.size()) != k)
    throw std::invalid_argument("clique must have one vertex per color");
  std::vector<int> by_color(k + 1, -1);
  for (const auto& id : clique) {
    const int v = graph.vertex_index(id);
    if (v < 0) throw std::invalid_argument("unknown clique vertex: " + id);
    const int c = graph.vertices[v].color;
    if (by_color[c] >= 0)
      throw std::invalid_argument("clique repeats a color");
    by_color[c] = v;
  }
  for (int c1 = 1; c1 <= k; ++c1)
    for (int c2 = c1 + 1; c2 <= k; ++c2)
      if (!graph.adjacent(by_color[c1], by_color[c2]))
        throw std::invalid_argument("clique vertices not pairwise adjacent");

  const std::vector<long long> idx = circle_indices(graph);
  long long n_max = 0;
  for (long long i : idx) n_max = std::max(n_max, i);

  Rational eps(1);
  if (n_max >= 2) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (long long i = 1; i <= n_max; ++i) pts.push_back(circle_point(i));
    bool first = true;
    Rational max_inner;
    for (long long i = 0; i < n_max; ++i)
      for (long long j = i + 1; j < n_max; ++j) {
        Rational inner =
            pts[i].first * pts[j].first + pts[i].second * pts[j].second;
        if (first || inner > max_inner) max_inner = std::move(inner);
        first = false;
      }
    eps = 1 - max_inner;
  }

  Neuron neuron;
  neuron.w.assign(2 * k, Rational(0));
  const Rational scale = 2 / eps;
  for (int c = 1; c <= k; ++c) {
    auto [cx, cy] = circle_point(idx[by_color[c]]);
    neuron.w[2 * (c - 1)] = scale * cx;
    neuron.w[2 * (c - 1) + 1] = scale * cy;
  }
  neuron.b = 1 - scale;
  neuron.a = +1;
  ReluNetwork net;
  net.neurons.push_back(std::move(neuron));
  return net;
}

std::vector<std::string> decode_clique(const ReluNetwork& net,
                                       const ReductionOutput& out) {
  std::vector<std::string> clique;
  for (const auto& [idx, id] : out.decode_map) {
    if (eval_network(net, out.dataset.points[idx].x) > out.delta)
      clique.push_back(id);
  }
  return clique;
}

std::optional<std::vector<std::string>> brute_force_multicolored_clique(
    const ColoredGraph& graph) {
  graph.validate();
  const int k = graph.k_colors;
  std::vector<std::vector<int>> classes(k + 1);
  for (int v = 0; v < graph.n_vertices(); ++v)
    classes[graph.vertices[v].color].push_back(v);
  long long product = 1;
  for (int c = 1; c <= k; ++c) {
    product *= static_cast<long long>(classes[c].size());
    if (product > kBruteForceBound)
      throw std::invalid_argument("color-class product exceeds search bound");
  }

  std::vector<std::size_t> pick(k + 1, 0);
  for (long long step = 0; step < product; ++step) {
    bool ok = true;
    for (int c1 = 1; c1 <= k && ok; ++c1)
      for (int c2 = c1 + 1; c2 <= k && ok; ++c2)
        ok = graph.adjacent(classes[c1][pick[c1]], classes[c2][pick[c2]]);
    if (ok) {
      std::vector<std::string> clique;
      for (int c = 1; c <= k; ++c)
        clique.push_back(graph.vertices[classes[c][pick[c]]].id);
      return clique;
    }
    for (int c = k; c >= 1; --c) {
      if (++pick[c] < classes[c].size()) break;
      pick[c] = 0;
    }
  }
  return std::nullopt;
}

}  // namespace relux
