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

#ifndef RELUX_IO_HPP
#define RELUX_IO_HPP

#include <string>

#include "relux/dataset.hpp"
#include "relux/network.hpp"
#include "relux/reduction.hpp"
#include "relux/train_common.hpp"

// JSON wire formats. All numerics are rational strings ("3", "-7/3") so
// files round-trip exactly; approximate losses are flagged explicitly.

namespace relux {

Dataset parse_dataset_json(const std::string& text);
std::string dataset_to_json(const Dataset& data);

ReluNetwork parse_model_json(const std::string& text);
std::string model_to_json(const ReluNetwork& net);

ColoredGraph parse_graph_json(const std::string& text);
std::string graph_to_json(const ColoredGraph& graph);

struct ResultDoc {
  LossValue loss;
  ReluNetwork model;
  SubproblemSpec certificate;
  long long subproblems = 0;
  long long lp_solves = 0;
};

ResultDoc parse_result_json(const std::string& text);
std::string result_to_json(const ResultDoc& doc);

// Metadata emitted alongside a generated clique instance.
struct InstanceMeta {
  Rational gamma;
  Rational delta;
  long long m_copies = 0;
  Rational p;
  std::map<int, std::string> decode_map;
};

InstanceMeta parse_meta_json(const std::string& text);
std::string meta_to_json(const InstanceMeta& meta);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace relux

#endif  // RELUX_IO_HPP
