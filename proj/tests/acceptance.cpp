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
//
// End-to-end acceptance checks. Each criterion prints exactly one
// PASS/FAIL line; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "relux/cli.hpp"
#include "relux/io.hpp"
#include "relux/oracles.hpp"
#include "relux/reduction.hpp"
#include "relux/train_concave.hpp"
#include "relux/train_convex.hpp"
#include "relux/train_linf.hpp"
#include "test_util.hpp"

using namespace relux;
using testing::Rng;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;  // detail string on failure
};

// ---------------------------------------------------------------------------
// Graph corpus
// ---------------------------------------------------------------------------

// A two-color graph has a multicolored clique iff it has a cross edge, so
// clique-free instances are exactly those without edges between the
// classes. Clique-free cases are kept at N <= 5 to respect the runtime
// envelope: they force the trainer to certify that *no* cell reaches the
// threshold, which is the expensive direction.
ColoredGraph random_two_color_graph(Rng& rng, int n1, int n2,
                                    bool with_cross_edges) {
  ColoredGraph g;
  g.k_colors = 2;
  for (int i = 0; i < n1; ++i)
    g.vertices.push_back({"a" + std::to_string(i), 1});
  for (int i = 0; i < n2; ++i)
    g.vertices.push_back({"b" + std::to_string(i), 2});
  std::bernoulli_distribution intra(0.4), cross(0.7);
  for (int u = 0; u < g.n_vertices(); ++u)
    for (int v = u + 1; v < g.n_vertices(); ++v) {
      bool same = g.vertices[u].color == g.vertices[v].color;
      if (same) {
        if (intra(rng))
          g.edges.push_back({g.vertices[u].id, g.vertices[v].id});
      } else if (with_cross_edges && cross(rng)) {
        g.edges.push_back({g.vertices[u].id, g.vertices[v].id});
      }
    }
  if (with_cross_edges) {
    bool any = false;
    for (const auto& e : g.edges) {
      int u = g.vertex_index(e.first), v = g.vertex_index(e.second);
      if (g.vertices[u].color != g.vertices[v].color) any = true;
    }
    if (!any) g.edges.push_back({g.vertices[0].id, g.vertices[n1].id});
  }
  return g;
}

std::vector<ColoredGraph> two_color_corpus() {
  Rng rng(20260823);
  std::vector<ColoredGraph> out;
  // 10 clique-free graphs, N in {4, 5}.
  for (int i = 0; i < 6; ++i) out.push_back(random_two_color_graph(rng, 2, 2, false));
  for (int i = 0; i < 4; ++i)
    out.push_back(random_two_color_graph(rng, i % 2 ? 3 : 2, i % 2 ? 2 : 3, false));
  // 40 graphs with at least one cross edge, N in {4, 5, 6}.
  for (int i = 0; i < 15; ++i) out.push_back(random_two_color_graph(rng, 2, 2, true));
  for (int i = 0; i < 15; ++i)
    out.push_back(random_two_color_graph(rng, i % 2 ? 3 : 2, i % 2 ? 2 : 3, true));
  for (int i = 0; i < 10; ++i) out.push_back(random_two_color_graph(rng, 3, 3, true));
  return out;
}

std::vector<ColoredGraph> three_color_corpus() {
  std::vector<ColoredGraph> out;
  // Three dense graphs containing a multicolored triangle.
  for (int variant = 0; variant < 3; ++variant) {
    ColoredGraph g;
    g.k_colors = 3;
    int sizes[3] = {2, 2, variant == 0 ? 2 : 1};
    for (int c = 0; c < 3; ++c)
      for (int i = 0; i < sizes[c]; ++i)
        g.vertices.push_back(
            {std::string(1, char('a' + c)) + std::to_string(i), c + 1});
    for (int u = 0; u < g.n_vertices(); ++u)
      for (int v = u + 1; v < g.n_vertices(); ++v) {
        if (g.vertices[u].color == g.vertices[v].color) continue;
        // Variant 2 drops one cross edge but keeps a triangle.
        if (variant == 2 && u == 0 && v == g.n_vertices() - 1) continue;
        g.edges.push_back({g.vertices[u].id, g.vertices[v].id});
      }
    out.push_back(std::move(g));
  }
  // Two clique-free graphs: colors 1 and 2 are never connected, so no
  // multicolored triangle exists despite all other pairs being present.
  for (int variant = 0; variant < 2; ++variant) {
    ColoredGraph g;
    g.k_colors = 3;
    int sizes[3] = {2, 2, 1};
    for (int c = 0; c < 3; ++c)
      for (int i = 0; i < sizes[c]; ++i)
        g.vertices.push_back(
            {std::string(1, char('a' + c)) + std::to_string(i), c + 1});
    for (int u = 0; u < g.n_vertices(); ++u)
      for (int v = u + 1; v < g.n_vertices(); ++v) {
        int cu = g.vertices[u].color, cv = g.vertices[v].color;
        if (cu == cv) continue;
        if ((cu == 1 && cv == 2) || (cu == 2 && cv == 1)) continue;
        if (variant == 1 && u + v == 3) continue;  // slightly sparser twin
        g.edges.push_back({g.vertices[u].id, g.vertices[v].id});
      }
    out.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

bool criterion_clique_l1(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<ColoredGraph> corpus = two_color_corpus();
  std::vector<ColoredGraph> extra = three_color_corpus();
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  int checked = 0;
  for (const auto& g : corpus) {
    ReductionOutput inst = generate_instance(g, Rational(1));
    bool has_clique = brute_force_multicolored_clique(g).has_value();
    TrainResult r = train_l1(inst.dataset, 1, {});
    if (!r.loss.is_exact) {
      detail = "loss not exact at p=1";
      return false;
    }
    bool fits = *r.loss.exact <= inst.gamma;
    if (fits != has_clique) {
      detail = "graph #" + std::to_string(checked) + ": trained loss " +
               to_string(*r.loss.exact) + " vs gamma " + to_string(inst.gamma) +
               ", clique=" + (has_clique ? "yes" : "no");
      return false;
    }
    ++checked;
  }
  const double elapsed = seconds_since(t0);
  if (checked < 55 || elapsed > 600.0) {
    detail = std::to_string(checked) + " graphs in " +
             std::to_string(elapsed) + " s (need >= 55 within 600 s)";
    return false;
  }
  std::printf("       [%d graphs, %.1f s]\n", checked, elapsed);
  return true;
}

bool criterion_clique_concave(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<ColoredGraph> corpus = two_color_corpus();
  int checked = 0;
  const Float margin("1e-6");
  for (const auto& g : corpus) {
    bool has_clique = brute_force_multicolored_clique(g).has_value();
    for (Rational p : {Rational(0), Rational(1, 2)}) {
      ReductionOutput inst = generate_instance(g, p);
      TrainResult r = train_concave(inst.dataset, 1, p, {});
      bool ok;
      if (p == 0) {
        ok = (*r.loss.exact <= inst.gamma) == has_clique;
      } else if (has_clique) {
        ok = r.loss.approx <= Float(inst.gamma) + Float("1e-30");
      } else {
        ok = r.loss.approx >= Float(inst.gamma) + margin;
      }
      if (!ok) {
        detail = "graph #" + std::to_string(checked) + " p=" + to_string(p) +
                 ": loss approx " + r.loss.approx.str(20) + " vs gamma " +
                 to_string(inst.gamma) +
                 ", clique=" + (has_clique ? "yes" : "no");
        return false;
      }
    }
    ++checked;
  }
  const double elapsed = seconds_since(t0);
  if (checked < 50 || elapsed > 1800.0) {
    detail = std::to_string(checked) + " graphs in " +
             std::to_string(elapsed) + " s (need >= 50 within 1800 s)";
    return false;
  }
  std::printf("       [%d graphs x 2 exponents, %.1f s]\n", checked, elapsed);
  return true;
}

bool criterion_cross_validation(std::string& detail) {
  Rng rng(303);
  std::uniform_int_distribution<int> pick_d(1, 2), pick_k(1, 2);
  int done = 0;
  while (done < 100) {
    int k = pick_k(rng);
    int d = pick_d(rng);
    // Keep k=2 instances small: the vertex-pool enumeration grows fast.
    std::uniform_int_distribution<int> pick_n(3, k == 2 ? 4 : 7);
    Dataset data = dedupe(testing::random_scalar_dataset(rng, d, pick_n(rng)));
    TrainResult lp = train_l1(data, k, {});
    TrainResult cv = train_concave(data, k, Rational(1), {});
    if (!lp.loss.is_exact || !cv.loss.is_exact ||
        *lp.loss.exact != *cv.loss.exact) {
      detail = "instance #" + std::to_string(done) + ": l1 " +
               to_string(*lp.loss.exact) + " vs concave " +
               to_string(*cv.loss.exact);
      return false;
    }
    ++done;
  }
  return true;
}

bool criterion_dichotomy_counts(std::string& detail) {
  Rng rng(404);
  // General position via the moment curve (t, t^2, t^3): any d+1 of the
  // lifted points are affinely independent for distinct parameters.
  for (int d = 1; d <= 3; ++d)
    for (int n = 4; n <= 8; ++n) {
      std::set<int> ts;
      std::uniform_int_distribution<int> pick_t(-20, 20);
      while ((int)ts.size() < n) ts.insert(pick_t(rng));
      std::vector<Vec> points;
      for (int t : ts) {
        Vec v;
        Rational power(1);
        for (int c = 0; c < d; ++c) {
          power *= t;
          v.push_back(power);
        }
        points.push_back(std::move(v));
      }
      auto dichos = enumerate_open_dichotomies_geometric(points);
      if ((long long)dichos.size() != cover_count(n, d)) {
        detail = "d=" + std::to_string(d) + " n=" + std::to_string(n) +
                 ": got " + std::to_string(dichos.size()) + ", expected " +
                 std::to_string(cover_count(n, d));
        return false;
      }
    }
  // Degenerate configurations up to n' = 12: enumerators must agree.
  std::vector<std::vector<Vec>> degenerate;
  std::vector<Vec> line;  // 12 collinear points in R^3
  for (int t = 0; t < 12; ++t)
    line.push_back({Rational(t), Rational(2 * t), Rational(-t)});
  degenerate.push_back(line);
  std::vector<Vec> grid;  // 4x3 integer grid in the plane
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 3; ++y) grid.push_back({Rational(x), Rational(y)});
  degenerate.push_back(grid);
  std::vector<Vec> circle;  // 10 cocircular points plus center and repeat axis
  for (int i = 1; i <= 10; ++i) {
    auto [x, y] = circle_point(i);
    circle.push_back({x, y});
  }
  circle.push_back({Rational(0), Rational(0)});
  degenerate.push_back(circle);
  for (std::size_t c = 0; c < degenerate.size(); ++c) {
    auto brute = enumerate_open_dichotomies(degenerate[c]);
    auto geo = enumerate_open_dichotomies_geometric(degenerate[c]);
    if (brute != geo) {
      detail = "degenerate case #" + std::to_string(c) +
               ": enumerator mismatch (" + std::to_string(brute.size()) +
               " vs " + std::to_string(geo.size()) + ")";
      return false;
    }
  }
  return true;
}

bool criterion_linf(std::string& detail) {
  Rng rng(505);
  // (a) planted instances are recognized as exactly realizable.
  std::uniform_int_distribution<int> pick_d(1, 3), pick_n(3, 8);
  for (int trial = 0; trial < 100; ++trial) {
    ReluNetwork teacher = testing::random_network(rng, pick_d(rng), 1);
    teacher.neurons[0].a = +1;  // a single +ReLU, matching the model class
    Dataset data = dedupe(testing::planted_dataset(rng, teacher, pick_n(rng)));
    LinfResult r = train_linf_interval(data);
    if (r.gamma != 0 || !check_realizable(data).realizable) {
      detail = "planted instance #" + std::to_string(trial) +
               " gave gamma " + to_string(r.gamma);
      return false;
    }
  }
  // (b) the hand-checked instance.
  Dataset vee = testing::scalar_dataset_1d({{0, 1}, {1, 0}, {2, 1}});
  LinfResult rv = train_linf_interval(vee);
  if (rv.gamma != Rational(1, 2)) {
    detail = "(0->1),(1->0),(2->1) gave gamma " + to_string(rv.gamma);
    return false;
  }
  // (c) + (d): binary search equals the full sweep, within the LP budget.
  std::uniform_int_distribution<int> label(-6, 12), pick_m(4, 12);
  for (int trial = 0; trial < 40; ++trial) {
    Dataset d;
    d.dim = 1;
    int m = pick_m(rng);
    std::set<int> xs;
    std::uniform_int_distribution<int> coord(-12, 12);
    while ((int)xs.size() < m) xs.insert(coord(rng));
    for (int x : xs) {
      LabeledPoint pt;
      pt.x = {Rational(x)};
      pt.label = Label::scalar(Rational(label(rng)));
      d.points.push_back(std::move(pt));
    }
    ThresholdLadder ladder = threshold_ladder(d);
    if (ladder.r() > 32) continue;
    LinfResult fast = train_linf_interval(d);
    Rational best;
    bool have = false;
    for (int s = 1; s <= ladder.r() + 1; ++s) {
      LpOutcome out = solve_lp(build_lp_s(d, s));
      if (out.status != LpStatus::Optimal) continue;
      ReluNetwork net;
      net.neurons.push_back(Neuron{
          Vec(out.point.begin(), out.point.begin() + d.dim), out.point[d.dim],
          +1});
      Rational achieved =
          *loss_value(net, d, LossSpec::linf_interval()).exact;
      if (!have || achieved < best) {
        best = achieved;
        have = true;
      }
    }
    if (!have || fast.gamma != best) {
      detail = "sweep minimum " + (have ? to_string(best) : "none") +
               " vs binary search " + to_string(fast.gamma);
      return false;
    }
    long long bound = (long long)std::ceil(std::log2(ladder.r() + 1)) + 1;
    if (fast.lp_solves > std::max(bound, 1LL)) {
      detail = "used " + std::to_string(fast.lp_solves) +
               " LP solves, bound " + std::to_string(bound);
      return false;
    }
  }
  return true;
}

bool criterion_oracle_1d(std::string& detail) {
  Rng rng(606);
  const Float tol("1e-9");
  for (int trial = 0; trial < 200; ++trial) {
    Dataset d = dedupe(testing::random_scalar_dataset(rng, 1, 3 + trial % 3));
    auto fail = [&](const std::string& what) {
      detail = "instance #" + std::to_string(trial) + ": " + what;
      return false;
    };
    LossValue o1 = oracle_train_1d(d, LossSpec::lp(Rational(1)));
    if (*train_l1(d, 1, {}).loss.exact != *o1.exact)
      return fail("l1 mismatch");
    LossValue o2 = oracle_train_1d(d, LossSpec::lp(Rational(2)));
    if (*train_l2(d, 1, {}).loss.exact != *o2.exact)
      return fail("l2 mismatch");
    LossValue oi = oracle_train_1d(d, LossSpec::linf_interval());
    if (train_linf_interval(d).gamma != *oi.exact)
      return fail("max-deviation mismatch");
    LossValue o0 = oracle_train_1d(d, LossSpec::lp(Rational(0)));
    if (*train_concave(d, 1, Rational(0), {}).loss.exact != *o0.exact)
      return fail("p=0 mismatch");
    LossValue oh = oracle_train_1d(d, LossSpec::lp(Rational(1, 2)));
    Float diff = boost::multiprecision::abs(
        train_concave(d, 1, Rational(1, 2), {}).loss.approx - oh.approx);
    if (diff > tol) return fail("p=1/2 off by " + diff.str(8));
  }
  return true;
}

bool criterion_instance_invariants(std::string& detail) {
  std::vector<ColoredGraph> corpus = two_color_corpus();
  std::vector<ColoredGraph> extra = three_color_corpus();
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  int idx = 0;
  for (const auto& g : corpus) {
    for (Rational p : {Rational(0), Rational(1)}) {
      ReductionOutput inst = generate_instance(g, p);
      auto fail = [&](const std::string& what) {
        detail = "graph #" + std::to_string(idx) + " p=" + to_string(p) +
                 ": " + what;
        return false;
      };
      if (inst.dataset.dim != 2 * g.k_colors) return fail("wrong dimension");
      for (const auto& pt : inst.dataset.points) {
        if (pt.label.y != 0 && pt.label.y != 1)
          return fail("non-binary label");
        int nonzeros = 0;
        for (const auto& c : pt.x)
          if (c != 0) ++nonzeros;
        if (nonzeros > 4) return fail("more than 4 nonzero coordinates");
      }
      auto clique = brute_force_multicolored_clique(g);
      if (clique) {
        ReluNetwork w = witness_weights(g, *clique, p);
        LossValue loss = loss_value(w, inst.dataset, LossSpec::lp(p));
        if (!loss.is_exact || *loss.exact != inst.gamma)
          return fail("witness loss != gamma");
        std::vector<std::string> decoded = decode_clique(w, inst);
        std::set<std::string> got(decoded.begin(), decoded.end());
        std::set<std::string> want(clique->begin(), clique->end());
        if (got != want) return fail("decode did not round-trip");
      }
    }
    ++idx;
  }
  return true;
}

bool criterion_monotonicity_invariance(std::string& detail) {
  Rng rng(808);
  for (int trial = 0; trial < 30; ++trial) {
    Dataset d = dedupe(testing::random_scalar_dataset(rng, 1, 4));
    TrainResult k1 = train_l1(d, 1, {});
    TrainResult k2 = train_l1(d, 2, {});
    if (loss_less(k1.loss, k2.loss)) {
      detail = "instance #" + std::to_string(trial) + ": k=2 loss " +
               to_string(*k2.loss.exact) + " exceeds k=1 loss " +
               to_string(*k1.loss.exact);
      return false;
    }
  }
  // Affine invariance: embed d=2 data into R^4 by x -> Ax + c with A of
  // full column rank; every trainer must report the identical optimum.
  for (int trial = 0; trial < 3; ++trial) {
    Dataset d = dedupe(testing::random_scalar_dataset(rng, 2, 5));
    Mat a(4, Vec(2));
    Vec c(4);
    for (auto& row : a)
      for (auto& v : row) v = testing::random_small_rational(rng);
    a[0][0] += 10;  // diagonal dominance keeps the rank at 2
    a[1][1] += 10;
    for (auto& v : c) v = testing::random_small_rational(rng);
    Dataset lifted;
    lifted.dim = 4;
    for (const auto& pt : d.points) {
      LabeledPoint q;
      q.x.assign(4, Rational(0));
      for (int r = 0; r < 4; ++r) q.x[r] = dot(a[r], pt.x) + c[r];
      q.label = pt.label;
      q.multiplicity = pt.multiplicity;
      lifted.points.push_back(std::move(q));
    }
    auto fail = [&](const std::string& what) {
      detail = "embedding trial #" + std::to_string(trial) + ": " + what;
      return false;
    };
    if (*train_l1(d, 1, {}).loss.exact != *train_l1(lifted, 1, {}).loss.exact)
      return fail("l1 optimum changed");
    if (*train_l2(d, 1, {}).loss.exact != *train_l2(lifted, 1, {}).loss.exact)
      return fail("l2 optimum changed");
    if (train_linf_interval(d).gamma != train_linf_interval(lifted).gamma)
      return fail("max-deviation optimum changed");
    TrainResult ca = train_concave(d, 1, Rational(1, 2), {});
    TrainResult cb = train_concave(lifted, 1, Rational(1, 2), {});
    if (ca.loss.approx != cb.loss.approx)
      return fail("concave optimum changed");
    if (*train_concave(d, 1, Rational(0), {}).loss.exact !=
        *train_concave(lifted, 1, Rational(0), {}).loss.exact)
      return fail("p=0 optimum changed");
  }
  return true;
}

bool criterion_thread_determinism(std::string& detail) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "relu-exact-acceptance";
  fs::create_directories(dir);

  Rng rng(909);
  struct Job {
    std::string name;
    Dataset data;
    std::vector<std::string> loss_args;
    int k;
  };
  std::vector<Job> jobs;
  jobs.push_back({"l1-k2", dedupe(testing::random_scalar_dataset(rng, 1, 5)),
                  {"--loss", "lp", "--p", "1"}, 2});
  jobs.push_back({"l2-k1", dedupe(testing::random_scalar_dataset(rng, 2, 5)),
                  {"--loss", "lp", "--p", "2"}, 1});
  jobs.push_back({"half-k1", dedupe(testing::random_scalar_dataset(rng, 1, 5)),
                  {"--loss", "lp", "--p", "1/2"}, 1});

  for (const auto& job : jobs) {
    fs::path data_path = dir / (job.name + "-data.json");
    write_file(data_path.string(), dataset_to_json(job.data));
    std::string reference;
    for (int threads : {1, 4, 8}) {
      fs::path model = dir / (job.name + "-t" + std::to_string(threads) +
                              "-model.json");
      fs::path result = dir / (job.name + "-t" + std::to_string(threads) +
                               "-result.json");
      std::vector<std::string> args = {
          "train",          "--data", data_path.string(),
          "--k",            std::to_string(job.k),
          "--out",          model.string(),
          "--result",       result.string(),
          "--threads",      std::to_string(threads)};
      args.insert(args.end(), job.loss_args.begin(), job.loss_args.end());
      int code = cli_main(args);
      if (code != 0) {
        detail = job.name + " --threads " + std::to_string(threads) +
                 " exited " + std::to_string(code);
        return false;
      }
      std::string bytes = read_file(result.string()) +
                          read_file(model.string());
      if (threads == 1) {
        reference = bytes;
      } else if (bytes != reference) {
        detail = job.name + ": output differs between --threads 1 and " +
                 std::to_string(threads);
        return false;
      }
    }
  }
  return true;
}

bool criterion_runtime(std::string& detail) {
  Rng rng(1010);
  // 20 distinct planar points.
  Dataset big;
  big.dim = 2;
  std::set<std::pair<int, int>> coords;
  std::uniform_int_distribution<int> c(-6, 6), y(-3, 3);
  while ((int)coords.size() < 20) coords.insert({c(rng), c(rng)});
  for (auto [cx, cy] : coords) {
    LabeledPoint pt;
    pt.x = {Rational(cx), Rational(cy)};
    pt.label = Label::scalar(Rational(y(rng)));
    big.points.push_back(std::move(pt));
  }
  auto t0 = std::chrono::steady_clock::now();
  train_l1(big, 1, {});
  double l1_time = seconds_since(t0);
  if (l1_time > 60.0) {
    detail = "train_l1 n'=20 took " + std::to_string(l1_time) + " s";
    return false;
  }

  Dataset mid;
  mid.dim = 2;
  std::set<std::pair<int, int>> coords2;
  while ((int)coords2.size() < 10) coords2.insert({c(rng), c(rng)});
  for (auto [cx, cy] : coords2) {
    LabeledPoint pt;
    pt.x = {Rational(cx), Rational(cy)};
    pt.label = Label::scalar(Rational(y(rng)));
    mid.points.push_back(std::move(pt));
  }
  t0 = std::chrono::steady_clock::now();
  train_concave(mid, 1, Rational(1, 2), {});
  double cv_time = seconds_since(t0);
  if (cv_time > 120.0) {
    detail = "train_concave n'=10 took " + std::to_string(cv_time) + " s";
    return false;
  }
  std::printf("       [l1: %.1f s, concave: %.1f s]\n", l1_time, cv_time);
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"clique-equivalence-l1", criterion_clique_l1},
      {"clique-equivalence-concave", criterion_clique_concave},
      {"convex-concave-cross-validation", criterion_cross_validation},
      {"dichotomy-counting", criterion_dichotomy_counts},
      {"max-deviation-trainer", criterion_linf},
      {"oracle-agreement-1d", criterion_oracle_1d},
      {"instance-structural-invariants", criterion_instance_invariants},
      {"monotonicity-and-invariance", criterion_monotonicity_invariance},
      {"thread-determinism", criterion_thread_determinism},
      {"runtime-envelope", criterion_runtime},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s  %02zu %s%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
