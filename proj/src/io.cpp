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

#include "relux/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace relux {

namespace {

using json = nlohmann::ordered_json;

// Digits used when printing an approximate (irrational) loss. Fixed so
// result files are byte-stable.
constexpr unsigned kApproxDigits = 40;

Rational rat(const json& j) {
  if (j.is_number_integer())
    return Rational(static_cast<long long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected rational string, got: " + j.dump());
}

json rat_json(const Rational& q) { return json(to_string(q)); }

Vec rat_vec(const json& j) {
  Vec v;
  for (const auto& e : j) v.push_back(rat(e));
  return v;
}

json rat_vec_json(const Vec& v) {
  json arr = json::array();
  for (const auto& q : v) arr.push_back(rat_json(q));
  return arr;
}

json certificate_json(const SubproblemSpec& spec) {
  json parts = json::array();
  for (const auto& d : spec.parts) parts.push_back(d.plus);
  return json{{"parts", parts}, {"signs", spec.signs}};
}

SubproblemSpec parse_certificate(const json& j) {
  SubproblemSpec spec;
  for (const auto& part : j.at("parts")) {
    Dichotomy d;
    d.plus = part.get<std::vector<int>>();
    spec.parts.push_back(std::move(d));
  }
  spec.signs = j.at("signs").get<std::vector<int>>();
  return spec;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

Dataset parse_dataset_json(const std::string& text) {
  json j = json::parse(text);
  Dataset data;
  data.dim = j.at("dim").get<int>();
  for (const auto& pj : j.at("points")) {
    LabeledPoint pt;
    pt.x = rat_vec(pj.at("x"));
    if (pj.contains("interval")) {
      const auto& iv = pj.at("interval");
      pt.label = Label::interval(rat(iv.at(0)), rat(iv.at(1)));
    } else {
      pt.label = Label::scalar(rat(pj.at("y")));
    }
    if (pj.contains("mult")) pt.multiplicity = pj.at("mult").get<long long>();
    data.points.push_back(std::move(pt));
  }
  data.validate();
  return data;
}

std::string dataset_to_json(const Dataset& data) {
  json points = json::array();
  for (const auto& pt : data.points) {
    json pj{{"x", rat_vec_json(pt.x)}};
    if (pt.label.is_interval)
      pj["interval"] = json::array(
          {rat_json(pt.label.alpha), rat_json(pt.label.beta)});
    else
      pj["y"] = rat_json(pt.label.y);
    if (pt.multiplicity != 1) pj["mult"] = pt.multiplicity;
    points.push_back(std::move(pj));
  }
  return dump(json{{"dim", data.dim}, {"points", points}});
}

ReluNetwork parse_model_json(const std::string& text) {
  json j = json::parse(text);
  ReluNetwork net;
  for (const auto& nj : j.at("neurons")) {
    Neuron nr;
    nr.w = rat_vec(nj.at("w"));
    nr.b = rat(nj.at("b"));
    nr.a = nj.at("a").get<int>();
    if (nr.a != 1 && nr.a != -1)
      throw std::invalid_argument("neuron sign must be 1 or -1");
    net.neurons.push_back(std::move(nr));
  }
  if (j.at("k").get<int>() != net.k())
    throw std::invalid_argument("k does not match neuron count");
  return net;
}

std::string model_to_json(const ReluNetwork& net) {
  json neurons = json::array();
  for (const auto& nr : net.neurons)
    neurons.push_back(json{
        {"w", rat_vec_json(nr.w)}, {"b", rat_json(nr.b)}, {"a", nr.a}});
  return dump(json{{"k", net.k()}, {"neurons", neurons}});
}

ColoredGraph parse_graph_json(const std::string& text) {
  json j = json::parse(text);
  ColoredGraph g;
  g.k_colors = j.at("colors").get<int>();
  for (const auto& vj : j.at("vertices"))
    g.vertices.push_back(
        {vj.at("id").get<std::string>(), vj.at("color").get<int>()});
  for (const auto& ej : j.at("edges"))
    g.edges.emplace_back(ej.at(0).get<std::string>(),
                         ej.at(1).get<std::string>());
  g.validate();
  return g;
}

std::string graph_to_json(const ColoredGraph& graph) {
  json vertices = json::array();
  for (const auto& v : graph.vertices)
    vertices.push_back(json{{"id", v.id}, {"color", v.color}});
  json edges = json::array();
  for (const auto& e : graph.edges)
    edges.push_back(json::array({e.first, e.second}));
  return dump(json{
      {"colors", graph.k_colors}, {"vertices", vertices}, {"edges", edges}});
}

ResultDoc parse_result_json(const std::string& text) {
  json j = json::parse(text);
  ResultDoc doc;
  const auto& lj = j.at("loss");
  if (lj.is_object()) {
    doc.loss = LossValue::from_approx(Float(lj.at("approx").get<std::string>()));
  } else {
    doc.loss = LossValue::from_exact(rat(lj));
  }
  doc.model = parse_model_json(j.at("model").dump());
  doc.certificate = parse_certificate(j.at("certificate"));
  doc.subproblems = j.at("stats").at("subproblems").get<long long>();
  doc.lp_solves = j.at("stats").at("lp_solves").get<long long>();
  return doc;
}

std::string result_to_json(const ResultDoc& doc) {
  json loss;
  if (doc.loss.is_exact)
    loss = rat_json(*doc.loss.exact);
  else
    loss = json{{"approx", doc.loss.approx.str(kApproxDigits)},
                {"exact", false}};
  json model = json::parse(model_to_json(doc.model));
  return dump(json{{"loss", loss},
                   {"model", model},
                   {"certificate", certificate_json(doc.certificate)},
                   {"stats",
                    {{"subproblems", doc.subproblems},
                     {"lp_solves", doc.lp_solves}}}});
}

InstanceMeta parse_meta_json(const std::string& text) {
  json j = json::parse(text);
  InstanceMeta meta;
  meta.gamma = rat(j.at("gamma"));
  meta.delta = rat(j.at("delta"));
  meta.m_copies = j.at("m_copies").get<long long>();
  meta.p = rat(j.at("p"));
  for (const auto& [key, val] : j.at("decode_map").items())
    meta.decode_map[std::stoi(key)] = val.get<std::string>();
  return meta;
}

std::string meta_to_json(const InstanceMeta& meta) {
  json decode = json::object();
  for (const auto& [idx, id] : meta.decode_map)
    decode[std::to_string(idx)] = id;
  return dump(json{{"gamma", rat_json(meta.gamma)},
                   {"delta", rat_json(meta.delta)},
                   {"m_copies", meta.m_copies},
                   {"p", rat_json(meta.p)},
                   {"decode_map", decode}});
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace relux
