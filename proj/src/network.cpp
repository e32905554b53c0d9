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

#include "relux/network.hpp"

#include <stdexcept>

namespace relux {

ReluNetwork ReluNetwork::zero(int dim, int k) {
  ReluNetwork net;
  net.neurons.assign(k, Neuron{Vec(dim, Rational(0)), Rational(0), 1});
  return net;
}

Rational eval_network(const ReluNetwork& net, const Vec& x) {
  Rational out(0);
  for (const auto& nr : net.neurons) {
    if (nr.w.size() != x.size())
      throw std::invalid_argument("eval_network: dimension mismatch");
    Rational pre = dot(nr.w, x) + nr.b;
    if (pre > 0) out += nr.a * pre;
  }
  return out;
}

LossSpec LossSpec::lp(Rational p) {
  if (p < 0) throw std::invalid_argument("lp loss requires p >= 0");
  return LossSpec{Lp, std::move(p)};
}

LossValue LossValue::from_exact(Rational v) {
  LossValue lv;
  lv.approx = to_float(v);
  lv.exact = std::move(v);
  lv.is_exact = true;
  return lv;
}

LossValue LossValue::from_approx(Float v) {
  LossValue lv;
  lv.approx = std::move(v);
  lv.is_exact = false;
  return lv;
}

bool loss_less(const LossValue& a, const LossValue& b) {
  if (a.is_exact && b.is_exact) return *a.exact < *b.exact;
  return a.approx < b.approx;
}

bool loss_equal(const LossValue& a, const LossValue& b) {
  if (a.is_exact && b.is_exact) return *a.exact == *b.exact;
  return a.approx == b.approx;
}

Rational dist_interval(const Rational& alpha, const Rational& beta,
                       const Rational& t) {
  if (alpha > beta) throw std::invalid_argument("dist: alpha > beta");
  if (t < alpha) return alpha - t;
  if (t > beta) return t - beta;
  return Rational(0);
}

LossValue loss_value(const ReluNetwork& net, const Dataset& data,
                     const LossSpec& loss) {
  if (loss.kind == LossSpec::Lp) {
    if (!data.all_scalar())
      throw std::invalid_argument("lp loss requires scalar labels");
    const Rational& p = loss.p;
    if (is_integer(p)) {
      const unsigned long pe = static_cast<unsigned long>(numerator(p));
      Rational total(0);
      for (const auto& pt : data.points) {
        Rational e = eval_network(net, pt.x) - pt.label.y;
        if (e == 0) continue;  // zero residual contributes 0 for every p
        if (e < 0) e = -e;
        total += (pe == 0) ? Rational(pt.multiplicity)
                           : pt.multiplicity * pow_int(e, pe);
      }
      return LossValue::from_exact(std::move(total));
    }
    Float total(0);
    for (const auto& pt : data.points) {
      Rational e = eval_network(net, pt.x) - pt.label.y;
      if (e == 0) continue;
      if (e < 0) e = -e;
      total += pt.multiplicity * pow_float(e, p);
    }
    return LossValue::from_approx(std::move(total));
  }

  // LinfInterval: scalar labels embed as degenerate intervals.
  Rational worst(0);
  for (const auto& pt : data.points) {
    Rational yhat = eval_network(net, pt.x);
    Rational dev = pt.label.is_interval
                       ? dist_interval(pt.label.alpha, pt.label.beta, yhat)
                       : dist_interval(pt.label.y, pt.label.y, yhat);
    if (dev > worst) worst = dev;
  }
  return LossValue::from_exact(std::move(worst));
}

ReluNetwork lift_network(const AffineTransform& t, const ReluNetwork& net) {
  if (net.dim() != t.out_dim() && !net.neurons.empty() && t.out_dim() >= 0) {
    if (net.dim() != t.out_dim())
      throw std::invalid_argument("lift_network: dimension mismatch");
  }
  // <w', T(x)> + b' = <M^T w', x> + (<w', offset> + b')
  ReluNetwork out;
  const int d = t.in_dim();
  for (const auto& nr : net.neurons) {
    Neuron lifted;
    lifted.a = nr.a;
    lifted.w.assign(d, Rational(0));
    for (int r = 0; r < t.out_dim(); ++r)
      for (int c = 0; c < d; ++c) lifted.w[c] += nr.w[r] * t.matrix[r][c];
    lifted.b = nr.b + dot(nr.w, t.offset);
    out.neurons.push_back(std::move(lifted));
  }
  return out;
}

}  // namespace relux
