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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relux/io.hpp"
#include "relux/linalg.hpp"
#include "relux/network.hpp"
#include "test_util.hpp"

using namespace relux;

TEST_CASE("rational wire format round trips and canonicalizes") {
  CHECK(to_string(parse_rational("3")) == "3");
  CHECK(to_string(parse_rational("-4")) == "-4");
  CHECK(to_string(parse_rational("1/8")) == "1/8");
  CHECK(to_string(parse_rational("-7/3")) == "-7/3");
  CHECK(to_string(parse_rational("2/4")) == "1/2");
  CHECK(parse_rational("6/3") == Rational(2));
  CHECK_THROWS(parse_rational(""));
  CHECK_THROWS(parse_rational("0.5"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("1e3"));
}

TEST_CASE("integer helpers") {
  CHECK(floor_int(Rational(7, 2)) == 3);
  CHECK(floor_int(Rational(-7, 2)) == -4);
  CHECK(ceil_int(Rational(7, 2)) == 4);
  CHECK(ceil_int(Rational(-7, 2)) == -3);
  CHECK(floor_int(Rational(4)) == 4);
  CHECK(pow_int(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow_int(Rational(5), 0) == 1);
  CHECK(relux::abs(Rational(-3, 7)) == Rational(3, 7));
}

TEST_CASE("exact linear algebra") {
  Mat a{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
  auto x = solve_square_system(a, {Rational(5), Rational(10)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(1));
  CHECK((*x)[1] == Rational(3));

  Mat singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK(!solve_square_system(singular, {Rational(1), Rational(2)}));

  Mat r{{Rational(1), Rational(2), Rational(3)},
        {Rational(2), Rational(4), Rational(6)},
        {Rational(0), Rational(1), Rational(1)}};
  CHECK(rank(r) == 2);

  // Underdetermined consistent system: particular + 1-dim nullspace.
  Mat u{{Rational(1), Rational(1), Rational(0)}};
  LinearSolution sol = solve_linear_system(u, {Rational(2)});
  CHECK(sol.consistent);
  CHECK(!sol.unique());
  CHECK(sol.nullspace.size() == 2);

  // Inconsistent system.
  Mat inc{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
  CHECK(!solve_linear_system(inc, {Rational(1), Rational(2)}).consistent);
}

TEST_CASE("dataset validation and dedupe") {
  Dataset d = testing::scalar_dataset_1d({{0, 0}, {1, 1}, {0, 0}, {2, 5}});
  d.points[2].multiplicity = 4;
  Dataset merged = dedupe(d);
  REQUIRE(merged.points.size() == 3);
  CHECK(merged.points[0].multiplicity == 5);  // 1 + 4, first occurrence kept
  CHECK(merged.points[0].x[0] == 0);
  CHECK(merged.points[1].x[0] == 1);
  CHECK(merged.points[2].x[0] == 2);

  // Same coordinates, different label: not merged.
  Dataset d2 = testing::scalar_dataset_1d({{0, 0}, {0, 1}});
  CHECK(dedupe(d2).points.size() == 2);

  Dataset bad = testing::scalar_dataset_1d({{0, 0}});
  bad.points[0].multiplicity = 0;
  CHECK_THROWS(bad.validate());

  Dataset mixed = testing::scalar_dataset_1d({{0, 0}, {1, 1}});
  mixed.points[1].label = Label::interval(Rational(0), Rational(1));
  CHECK_THROWS(mixed.validate());

  CHECK_THROWS(Label::interval(Rational(2), Rational(1)));
}

TEST_CASE("affine hull reduction of collinear planar points") {
  Dataset d;
  d.dim = 2;
  for (int t : {0, 1, 2, 3}) {
    LabeledPoint pt;
    pt.x = {Rational(t), Rational(2 * t + 1)};  // a line in the plane
    pt.label = Label::scalar(Rational(t));
    d.points.push_back(std::move(pt));
  }
  auto [reduced, transform] = affine_hull_reduce(d);
  CHECK(reduced.dim == 1);
  for (std::size_t i = 0; i < d.points.size(); ++i)
    CHECK(transform.apply(d.points[i].x) == reduced.points[i].x);

  // Full-dimensional data comes back untouched.
  Dataset full;
  full.dim = 2;
  for (auto [x, y] : {std::pair{0, 0}, {1, 0}, {0, 1}}) {
    LabeledPoint pt;
    pt.x = {Rational(x), Rational(y)};
    pt.label = Label::scalar(Rational(0));
    full.points.push_back(std::move(pt));
  }
  auto [reduced2, transform2] = affine_hull_reduce(full);
  CHECK(reduced2.dim == 2);
  CHECK(transform2.matrix == AffineTransform::identity(2).matrix);
}

TEST_CASE("distinct points keep first-occurrence order") {
  Dataset d = testing::scalar_dataset_1d({{3, 0}, {1, 1}, {3, 2}, {0, 0}});
  DistinctPoints dp = distinct_points(d);
  REQUIRE(dp.coords.size() == 3);
  CHECK(dp.coords[0][0] == 3);
  CHECK(dp.coords[1][0] == 1);
  CHECK(dp.coords[2][0] == 0);
  CHECK(dp.point_to_coord == std::vector<int>{0, 1, 0, 2});
}

TEST_CASE("network evaluation and losses") {
  ReluNetwork net;
  net.neurons.push_back(Neuron{{Rational(1)}, Rational(0), +1});
  net.neurons.push_back(Neuron{{Rational(-2)}, Rational(2), -1});
  // f(x) = [x]_+ - [2 - 2x]_+
  CHECK(eval_network(net, {Rational(0)}) == -2);
  CHECK(eval_network(net, {Rational(1)}) == 1);
  CHECK(eval_network(net, {Rational(3)}) == 3);

  Dataset d = testing::scalar_dataset_1d({{0, -2}, {1, 0}, {3, 3}});
  d.points[1].multiplicity = 3;
  LossValue l1 = loss_value(net, d, LossSpec::lp(Rational(1)));
  REQUIRE(l1.is_exact);
  CHECK(*l1.exact == 3);  // only the middle point misses, by 1, x3
  LossValue l2 = loss_value(net, d, LossSpec::lp(Rational(2)));
  CHECK(*l2.exact == 3);
  LossValue l0 = loss_value(net, d, LossSpec::lp(Rational(0)));
  CHECK(*l0.exact == 3);  // 0^0 = 0: exact points contribute nothing

  LossValue lhalf = loss_value(net, d, LossSpec::lp(Rational(1, 2)));
  CHECK(!lhalf.is_exact);
  CHECK(lhalf.approx == 3);  // |e| = 1 regardless of the exponent here
}

TEST_CASE("interval distance") {
  CHECK(dist_interval(Rational(1), Rational(2), Rational(0)) == 1);
  CHECK(dist_interval(Rational(1), Rational(2), Rational(3, 2)) == 0);
  CHECK(dist_interval(Rational(1), Rational(2), Rational(3)) == 1);
}

TEST_CASE("network lifting composes with the reducing transform") {
  testing::Rng rng(7101);
  for (int trial = 0; trial < 20; ++trial) {
    // Data on a random line in R^3.
    Dataset d;
    d.dim = 3;
    Vec base{testing::random_small_rational(rng),
             testing::random_small_rational(rng),
             testing::random_small_rational(rng)};
    Vec dir{testing::random_small_rational(rng),
            testing::random_small_rational(rng), Rational(1)};
    for (int t = 0; t < 4; ++t) {
      LabeledPoint pt;
      for (int c = 0; c < 3; ++c) pt.x.push_back(base[c] + t * dir[c]);
      pt.label = Label::scalar(Rational(t % 2));
      d.points.push_back(std::move(pt));
    }
    auto [reduced, transform] = affine_hull_reduce(dedupe(d));
    ReluNetwork small = testing::random_network(rng, reduced.dim, 2);
    ReluNetwork lifted = lift_network(transform, small);
    for (std::size_t i = 0; i < reduced.points.size(); ++i)
      CHECK(eval_network(lifted, d.points[i].x) ==
            eval_network(small, reduced.points[i].x));
  }
}

TEST_CASE("json formats round trip exactly") {
  LabeledPoint a;
  a.x = {Rational(1, 3), Rational(-2)};
  a.label = Label::scalar(Rational(5, 7));
  LabeledPoint b;
  b.x = {Rational(0), Rational(4)};
  b.label = Label::interval(Rational(-1, 2), Rational(3));
  b.multiplicity = 9;
  // Interval and scalar labels cannot mix in one valid dataset; use two.
  Dataset ds;
  ds.dim = 2;
  ds.points = {a};
  Dataset di;
  di.dim = 2;
  di.points = {b};
  for (const Dataset& orig : {ds, di}) {
    Dataset back = parse_dataset_json(dataset_to_json(orig));
    REQUIRE(back.points.size() == orig.points.size());
    for (std::size_t i = 0; i < back.points.size(); ++i) {
      CHECK(back.points[i].x == orig.points[i].x);
      CHECK(back.points[i].label == orig.points[i].label);
      CHECK(back.points[i].multiplicity == orig.points[i].multiplicity);
    }
  }

  testing::Rng rng(4242);
  ReluNetwork net = testing::random_network(rng, 3, 2);
  ReluNetwork netback = parse_model_json(model_to_json(net));
  REQUIRE(netback.k() == net.k());
  for (int j = 0; j < net.k(); ++j) {
    CHECK(netback.neurons[j].w == net.neurons[j].w);
    CHECK(netback.neurons[j].b == net.neurons[j].b);
    CHECK(netback.neurons[j].a == net.neurons[j].a);
  }

  ColoredGraph g;
  g.k_colors = 2;
  g.vertices = {{"a", 1}, {"b", 2}, {"c", 2}};
  g.edges = {{"a", "b"}, {"a", "c"}};
  ColoredGraph gback = parse_graph_json(graph_to_json(g));
  CHECK(gback.k_colors == 2);
  CHECK(gback.vertices.size() == 3);
  CHECK(gback.edges.size() == 2);
  CHECK(gback.adjacent(0, 2));
  CHECK(!gback.adjacent(1, 2));

  ResultDoc doc;
  doc.loss = LossValue::from_exact(Rational(22, 7));
  doc.model = net;
  doc.certificate.parts = {Dichotomy{{0, 2}}, Dichotomy{{1}}};
  doc.certificate.signs = {1, -1};
  doc.subproblems = 42;
  doc.lp_solves = 99;
  ResultDoc dback = parse_result_json(result_to_json(doc));
  CHECK(*dback.loss.exact == Rational(22, 7));
  CHECK(dback.certificate.parts == doc.certificate.parts);
  CHECK(dback.certificate.signs == doc.certificate.signs);
  CHECK(dback.subproblems == 42);
  CHECK(dback.lp_solves == 99);

  // Serialization is deterministic byte-for-byte.
  CHECK(result_to_json(doc) == result_to_json(dback));
}
