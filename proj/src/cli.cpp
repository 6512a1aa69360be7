#include "adapterchain/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>

#include "adapterchain/document.hpp"

namespace adapterchain {
namespace {

AdapterChain split_chain(const std::string& text) {
  AdapterChain chain;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      chain.adapters.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty() || !chain.adapters.empty()) chain.adapters.push_back(current);
  return chain;
}

InvocationWeights load_weights(const InterfaceAdapterGraph& graph, const std::string& target,
                               const std::string& spec) {
  const auto& iface = graph.interface(target);
  if (spec == "uniform") return InvocationWeights::uniform(iface);
  return InvocationWeights::from_map(iface, weights_from_json(read_json_file(spec)));
}

void print(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

struct Options {
  std::string graph_file;
  std::string source;
  std::string target;
  std::string weights = "uniform";
  std::string chain;
  std::vector<std::string> sources;
  bool exhaustive = false;
  std::optional<std::size_t> max_length;
};

int cmd_validate(const Options& opt, std::ostream& out) {
  graph_from_json(read_json_file(opt.graph_file));
  out << "ok\n";
  return kExitOk;
}

int cmd_chain(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto graph = graph_from_json(read_json_file(opt.graph_file));
  const auto weights = load_weights(graph, opt.target, opt.weights);
  std::vector<std::string> sources = opt.sources;
  if (!opt.source.empty()) sources.insert(sources.begin(), opt.source);
  if (sources.empty()) {
    err << "chain: --source or --sources is required\n";
    return kExitInputError;
  }

  std::optional<ChainSearchResult> best;
  if (opt.exhaustive) {
    for (const auto& s : sources) {
      auto candidate = brute_force_optimal(graph, s, opt.target, weights);
      if (candidate &&
          (!best || better_candidate(candidate->loss, candidate->chain, best->loss, best->chain))) {
        best = std::move(candidate);
      }
    }
  } else {
    best = greedy_chain_multi_source(graph, sources, opt.target, weights);
  }
  if (!best) {
    Json none;
    none["chain"] = nullptr;
    print(out, none);
    return kExitNoChain;
  }
  print(out, result_to_json(graph.interface(opt.target), *best));
  return kExitOk;
}

int cmd_loss(const Options& opt, std::ostream& out) {
  const auto graph = graph_from_json(read_json_file(opt.graph_file));
  const auto weights = load_weights(graph, opt.target, opt.weights);
  const auto result = evaluate_chain(graph, split_chain(opt.chain), opt.target, weights);
  print(out, result_to_json(graph.interface(opt.target), result));
  return kExitOk;
}

int cmd_compose(const Options& opt, std::ostream& out) {
  const auto graph = graph_from_json(read_json_file(opt.graph_file));
  const auto chain = split_chain(opt.chain);
  const auto ends = check_chain(graph, chain);
  std::string name;
  for (const auto& a : chain.adapters) name += (name.empty() ? "" : "+") + a;
  print(out, adapter_to_json(name, graph.interface(ends.source), graph.interface(ends.target),
                             chain_factor(graph, chain)));
  return kExitOk;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const auto graph = graph_from_json(read_json_file(opt.graph_file));
  const auto weights = load_weights(graph, opt.target, opt.weights);
  Json chains = Json::array();
  for_each_acyclic_chain(graph, opt.source, opt.target, opt.max_length,
                         [&](const AdapterChain& chain) {
                           const auto r = evaluate_chain(graph, chain, opt.target, weights);
                           Json entry;
                           entry["chain"] = chain.adapters;
                           entry["availability"] = r.availability;
                           entry["loss"] = r.loss;
                           chains.push_back(std::move(entry));
                           return true;
                         });
  Json doc;
  doc["source"] = opt.source;
  doc["target"] = opt.target;
  doc["chains"] = std::move(chains);
  print(out, doc);
  return kExitOk;
}

int cmd_reduce(const Options& opt, std::ostream& out) {
  const auto discrete = discrete_graph_from_json(read_json_file(opt.graph_file));
  print(out, graph_to_json(reduce_graph(discrete)));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Probabilistic interface adapter chaining", "adapterchain"};
  app.require_subcommand(1);
  Options opt;
  std::function<int()> action;

  auto* validate = app.add_subcommand("validate", "Check a graph document");
  validate->add_option("graph", opt.graph_file, "Graph JSON file")->required();
  validate->callback([&] { action = [&] { return cmd_validate(opt, out); }; });

  auto* chain = app.add_subcommand("chain", "Find the lowest-loss adapter chain");
  chain->add_option("graph", opt.graph_file, "Graph JSON file")->required();
  chain->add_option("--source", opt.source, "Source interface");
  chain->add_option("--sources", opt.sources, "Candidate source interfaces")->delimiter(',');
  chain->add_option("--target", opt.target, "Target interface")->required();
  chain->add_option("--weights", opt.weights, "Weights JSON file or 'uniform'");
  chain->add_flag("--exhaustive", opt.exhaustive, "Search every acyclic chain");
  chain->callback([&] { action = [&] { return cmd_chain(opt, out, err); }; });

  auto* loss = app.add_subcommand("loss", "Evaluate an explicit chain");
  loss->add_option("graph", opt.graph_file, "Graph JSON file")->required();
  loss->add_option("--chain", opt.chain, "Comma-separated adapters, source end first")
      ->required();
  loss->add_option("--target", opt.target, "Target interface")->required();
  loss->add_option("--weights", opt.weights, "Weights JSON file or 'uniform'");
  loss->callback([&] { action = [&] { return cmd_loss(opt, out); }; });

  auto* compose_cmd = app.add_subcommand("compose", "Print the composed factor of a chain");
  compose_cmd->add_option("graph", opt.graph_file, "Graph JSON file")->required();
  compose_cmd->add_option("--chain", opt.chain, "Comma-separated adapters, source end first")
      ->required();
  compose_cmd->callback([&] { action = [&] { return cmd_compose(opt, out); }; });

  auto* enumerate = app.add_subcommand("enumerate", "List every acyclic chain with its loss");
  enumerate->add_option("graph", opt.graph_file, "Graph JSON file")->required();
  enumerate->add_option("--source", opt.source, "Source interface")->required();
  enumerate->add_option("--target", opt.target, "Target interface")->required();
  enumerate->add_option("--weights", opt.weights, "Weights JSON file or 'uniform'");
  enumerate->add_option("--max-length", opt.max_length, "Longest chain to list");
  enumerate->callback([&] { action = [&] { return cmd_enumerate(opt, out); }; });

  auto* reduce = app.add_subcommand("reduce", "Convert a discrete graph to a probabilistic one");
  reduce->add_option("graph", opt.graph_file, "Discrete graph JSON file")->required();
  reduce->callback([&] { action = [&] { return cmd_reduce(opt, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    return action();
  } catch (const GraphError& e) {
    for (const auto& d : e.diagnostics()) err << "error: " << d << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace adapterchain
