#include "adapterchain/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "adapterchain/chaining.hpp"

namespace adapterchain {

DiscreteAdapterGraph DiscreteAdapterGraph::build(std::vector<InterfaceSpec> interfaces,
                                                 std::vector<DiscreteAdapterSpec> adapters) {
  // Validation is shared with the probabilistic graph by checking the
  // reduced form; dependency-rule messages are identical in both.
  std::vector<AdapterSpec> reduced;
  reduced.reserve(adapters.size());
  for (const auto& a : adapters) {
    reduced.push_back({a.name, a.source, a.target, reduce_dependency(a.dep)});
  }
  InterfaceAdapterGraph::build(interfaces, std::move(reduced));

  DiscreteAdapterGraph g;
  std::sort(adapters.begin(), adapters.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  g.interfaces_ = std::move(interfaces);
  g.adapters_ = std::move(adapters);
  return g;
}

const InterfaceSpec& DiscreteAdapterGraph::interface(const std::string& name) const {
  for (const auto& i : interfaces_) {
    if (i.name == name) return i;
  }
  throw GraphError("unknown interface '" + name + "'");
}

const DiscreteAdapterSpec& DiscreteAdapterGraph::adapter(const std::string& name) const {
  auto it = std::lower_bound(adapters_.begin(), adapters_.end(), name,
                             [](const auto& a, const std::string& n) { return a.name < n; });
  if (it == adapters_.end() || it->name != name) {
    throw GraphError("unknown adapter '" + name + "'");
  }
  return *it;
}

AdaptationFactor reduce_dependency(const DependencyMatrix& dep) {
  AdaptationFactor f{dep, ConversionMatrix(dep.rows(), dep.cols())};
  // Row 0 and column 0 stay zero for the dummy method.
  for (std::size_t j = 1; j < dep.rows(); ++j) {
    for (std::size_t i = 1; i < dep.cols(); ++i) {
      if (dep(j, i)) f.conv(j, i) = 1.0;
    }
  }
  return f;
}

MethodAvailability reduce_availability(const DiscreteAvailability& p) {
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] ? 1.0 : 0.0;
  return MethodAvailability(std::move(out));
}

InterfaceAdapterGraph reduce_graph(const DiscreteAdapterGraph& graph) {
  std::vector<AdapterSpec> adapters;
  adapters.reserve(graph.adapters().size());
  for (const auto& a : graph.adapters()) {
    adapters.push_back({a.name, a.source, a.target, reduce_dependency(a.dep)});
  }
  return InterfaceAdapterGraph::build(graph.interfaces(), std::move(adapters));
}

DiscreteAvailability discrete_chain_availability(const DiscreteAdapterGraph& graph,
                                                 const AdapterChain& chain) {
  if (chain.empty()) throw GraphError("chain is empty");
  const auto& first = graph.adapter(chain.adapters.front());
  auto v = full_discrete_availability(graph.interface(first.source).size());
  std::string at = first.source;
  for (const auto& name : chain.adapters) {
    const auto& a = graph.adapter(name);
    if (a.source != at) {
      throw GraphError("adapter '" + name + "' expects '" + a.source + "' but chain is at '" +
                       at + "'");
    }
    v = adapt(a.dep, v);
    at = a.target;
  }
  return v;
}

bool chain_decision_discrete(const DiscreteAdapterGraph& graph, const std::string& source,
                             const std::string& target, std::size_t required) {
  const auto& target_spec = graph.interface(target);
  graph.interface(source);
  const std::size_t methods = target_spec.methods.size();
  if (required > methods) {
    throw std::invalid_argument("required method count " + std::to_string(required) +
                                " exceeds the " + std::to_string(methods) + " methods of '" +
                                target + "'");
  }
  const auto reduced = reduce_graph(graph);
  if (methods == 0) {
    // Nothing to provide; any chain at all satisfies N = 0.
    return !enumerate_acyclic_chains(reduced, source, target, std::nullopt).empty();
  }
  const auto weights = InvocationWeights::uniform(reduced.interface(target));
  const double threshold = static_cast<double>(required) / static_cast<double>(methods);
  return prob_chain_decision(reduced, source, target, weights, threshold);
}

}  // namespace adapterchain
