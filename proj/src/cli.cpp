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

#include "relux/cli.hpp"

#include <cmath>
#include <iostream>

#include "CLI11.hpp"
#include "relux/io.hpp"
#include "relux/oracles.hpp"
#include "relux/train_concave.hpp"
#include "relux/train_convex.hpp"
#include "relux/train_linf.hpp"

namespace relux {

namespace {

struct CommonFlags {
  int threads = 1;
  long long budget = 0;  // 0 = backend default
  int precision_bits = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--threads", threads,
                    "worker threads (output is identical for any value)");
    cmd->add_option("--budget", budget, "enumeration budget override");
    cmd->add_option("--precision", precision_bits,
                    "working precision in bits for approximate losses");
  }

  void apply() const {
    if (threads < 1) throw std::invalid_argument("--threads must be >= 1");
    if (precision_bits > 0)
      set_float_precision_digits(
          static_cast<unsigned>(std::ceil(precision_bits * 0.30103)) + 1);
  }

  TrainOptions train_options() const {
    TrainOptions opts;
    opts.threads = threads;
    opts.budget = budget;
    return opts;
  }
};

std::string loss_to_text(const LossValue& loss) {
  if (loss.is_exact) return to_string(*loss.exact);
  return loss.approx.str(40);
}

int run_train(const std::string& data_path, int k, const std::string& loss,
              const std::string& p_text, const std::string& model_out,
              const std::string& result_out, const CommonFlags& flags) {
  Dataset data = parse_dataset_json(read_file(data_path));
  ResultDoc doc;

  if (loss == "linf") {
    if (k != 1)
      throw std::invalid_argument(
          "linf training is only available for k = 1 (open problem for "
          "k >= 2)");
    const long long lp_before = lp_solve_count();
    LinfResult res = train_linf_interval(data);
    doc.model.neurons.push_back(Neuron{res.w, res.b, +1});
    doc.loss = LossValue::from_exact(res.gamma);
    doc.lp_solves = lp_solve_count() - lp_before;
  } else if (loss == "lp") {
    const Rational p = parse_rational(p_text.empty() ? "1" : p_text);
    TrainResult res;
    if (p == 1)
      res = train_l1(data, k, flags.train_options());
    else if (p == 2)
      res = train_l2(data, k, flags.train_options());
    else if (p >= 0 && p < 1)
      res = train_concave(data, k, p, flags.train_options());
    else
      throw std::invalid_argument(
          "lp training supports p in [0,1] and p = 2 only");
    doc.model = res.network;
    doc.loss = res.loss;
    doc.certificate = res.certificate;
    doc.subproblems = res.subproblems_solved;
    doc.lp_solves = res.lp_solves;
  } else {
    throw std::invalid_argument("unknown loss: " + loss);
  }

  write_file(model_out, model_to_json(doc.model));
  if (!result_out.empty()) write_file(result_out, result_to_json(doc));
  std::cout << "loss " << loss_to_text(doc.loss) << "\n";
  return 0;
}

int run_gen_clique(const std::string& graph_path, const std::string& p_text,
                   const std::string& data_out, const std::string& meta_out) {
  ColoredGraph graph = parse_graph_json(read_file(graph_path));
  ReductionOutput out = generate_instance(graph, parse_rational(p_text));
  write_file(data_out, dataset_to_json(out.dataset));
  InstanceMeta meta;
  meta.gamma = out.gamma;
  meta.delta = out.delta;
  meta.m_copies = out.m_copies;
  meta.p = out.p;
  meta.decode_map = out.decode_map;
  write_file(meta_out, meta_to_json(meta));
  std::cout << "gamma " << to_string(out.gamma) << "\n";
  return 0;
}

int run_decode(const std::string& model_path, const std::string& data_path,
               const std::string& meta_path) {
  ReluNetwork net = parse_model_json(read_file(model_path));
  InstanceMeta meta = parse_meta_json(read_file(meta_path));
  ReductionOutput out;
  out.dataset = parse_dataset_json(read_file(data_path));
  out.gamma = meta.gamma;
  out.delta = meta.delta;
  out.m_copies = meta.m_copies;
  out.p = meta.p;
  out.decode_map = meta.decode_map;
  for (const auto& id : decode_clique(net, out)) std::cout << id << "\n";
  return 0;
}

int run_eval(const std::string& model_path, const std::string& data_path,
             const std::string& loss, const std::string& p_text) {
  ReluNetwork net = parse_model_json(read_file(model_path));
  Dataset data = parse_dataset_json(read_file(data_path));
  LossSpec spec = loss == "linf"
                      ? LossSpec::linf_interval()
                      : LossSpec::lp(parse_rational(p_text.empty() ? "1"
                                                                   : p_text));
  std::cout << loss_to_text(loss_value(net, data, spec)) << "\n";
  return 0;
}

int run_dichotomies(const std::string& data_path, bool count_only) {
  Dataset data = parse_dataset_json(read_file(data_path));
  DistinctPoints dp = distinct_points(data);
  std::vector<Dichotomy> dichs = enumerate_open_dichotomies_geometric(dp.coords);
  if (count_only) {
    std::cout << dichs.size() << "\n";
    return 0;
  }
  for (const auto& d : dichs) {
    for (std::size_t i = 0; i < d.plus.size(); ++i)
      std::cout << (i ? " " : "") << d.plus[i];
    std::cout << "\n";
  }
  return 0;
}

int run_check_realizable(const std::string& data_path) {
  Dataset data = parse_dataset_json(read_file(data_path));
  RealizableResult res = check_realizable(data);
  if (res.realizable) {
    std::cout << "realizable\n";
    std::cout << "w";
    for (const auto& c : res.w) std::cout << " " << to_string(c);
    std::cout << "\nb " << to_string(res.b) << "\n";
  } else {
    std::cout << "not realizable\n";
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"exact globally-optimal training for small ReLU networks"};
  app.require_subcommand(1);

  CommonFlags flags;

  // train
  auto* train = app.add_subcommand("train", "train a network to optimality");
  std::string data_path, loss = "lp", p_text, model_out, result_out;
  int k = 1;
  train->add_option("--data", data_path, "dataset JSON")->required();
  train->add_option("--k", k, "number of hidden neurons");
  train->add_option("--loss", loss, "lp or linf");
  train->add_option("--p", p_text, "loss exponent (rational)");
  train->add_option("--out", model_out, "model JSON output")->required();
  train->add_option("--result", result_out, "result JSON output");
  flags.attach(train);

  // gen-clique
  auto* gen = app.add_subcommand("gen-clique",
                                 "generate a clique-hardness instance");
  std::string graph_path, gen_p = "1", gen_out, gen_meta;
  gen->add_option("--graph", graph_path, "graph JSON")->required();
  gen->add_option("--p", gen_p, "loss exponent (rational)");
  gen->add_option("--out", gen_out, "dataset JSON output")->required();
  gen->add_option("--meta", gen_meta, "metadata JSON output")->required();

  // decode
  auto* dec = app.add_subcommand("decode", "read a clique off a model");
  std::string dec_model, dec_data, dec_meta;
  dec->add_option("--model", dec_model, "model JSON")->required();
  dec->add_option("--data", dec_data, "instance dataset JSON")->required();
  dec->add_option("--meta", dec_meta, "instance metadata JSON")->required();

  // eval
  auto* ev = app.add_subcommand("eval", "evaluate a model's loss");
  std::string ev_model, ev_data, ev_loss = "lp", ev_p;
  ev->add_option("--model", ev_model, "model JSON")->required();
  ev->add_option("--data", ev_data, "dataset JSON")->required();
  ev->add_option("--loss", ev_loss, "lp or linf");
  ev->add_option("--p", ev_p, "loss exponent (rational)");

  // dichotomies
  auto* dich = app.add_subcommand("dichotomies",
                                  "enumerate halfspace dichotomies");
  std::string dich_data;
  bool dich_count = false;
  dich->add_option("--data", dich_data, "dataset JSON")->required();
  dich->add_flag("--count", dich_count, "print only the count");

  // check-realizable
  auto* chk = app.add_subcommand("check-realizable",
                                 "zero-error feasibility for one ReLU");
  std::string chk_data;
  chk->add_option("--data", chk_data, "dataset JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    flags.apply();
    if (train->parsed())
      return run_train(data_path, k, loss, p_text, model_out, result_out,
                       flags);
    if (gen->parsed()) return run_gen_clique(graph_path, gen_p, gen_out,
                                             gen_meta);
    if (dec->parsed()) return run_decode(dec_model, dec_data, dec_meta);
    if (ev->parsed()) return run_eval(ev_model, ev_data, ev_loss, ev_p);
    if (dich->parsed()) return run_dichotomies(dich_data, dich_count);
    if (chk->parsed()) return run_check_realizable(chk_data);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

int cli_main(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("relu-exact");
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace relux
