#include "adapterchain/chaining.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace adapterchain {
namespace {

double weighted_availability(const MethodAvailability& v, const InvocationWeights& r) {
  double sum = 0.0;
  for (std::size_t m = 1; m < v.size(); ++m) sum += r[m] * v[m];
  return sum;
}

void require_weights_for(const InterfaceAdapterGraph& graph, const std::string& target,
                         const InvocationWeights& weights) {
  const auto& iface = graph.interface(target);
  if (weights.interface_name() != target || weights.size() != iface.size()) {
    throw GraphError("invocation weights are for '" + weights.interface_name() +
                     "', not target '" + target + "'");
  }
}

}  // namespace

InvocationWeights InvocationWeights::uniform(const InterfaceSpec& target) {
  return from_vector(target, std::vector<double>(target.methods.size(), 1.0));
}

InvocationWeights InvocationWeights::from_map(const InterfaceSpec& target,
                                              const std::map<std::string, double>& weights) {
  std::vector<double> raw(target.methods.size(), 0.0);
  for (const auto& [method, w] : weights) {
    auto idx = target.index_of(method);
    if (!idx) {
      throw GraphError("weights name unknown method '" + method + "' of interface '" +
                       target.name + "'");
    }
    raw[*idx - 1] = w;
  }
  return from_vector(target, std::move(raw));
}

InvocationWeights InvocationWeights::from_vector(const InterfaceSpec& target,
                                                 std::vector<double> weights) {
  if (weights.size() != target.methods.size()) {
    throw GraphError("interface '" + target.name + "' has " +
                     std::to_string(target.methods.size()) + " methods but " +
                     std::to_string(weights.size()) + " weights were given");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw GraphError("invocation weights must be finite and non-negative");
    }
    total += w;
  }
  if (!(total > 0.0)) {
    throw GraphError("invocation weights for '" + target.name + "' sum to zero");
  }
  std::vector<double> normalized(target.size(), 0.0);
  for (std::size_t m = 0; m < weights.size(); ++m) normalized[m + 1] = weights[m] / total;
  return InvocationWeights(target.name, std::move(normalized));
}

bool better_candidate(double loss_a, const AdapterChain& a, double loss_b, const AdapterChain& b) {
  if (loss_a != loss_b) return loss_a < loss_b;
  if (a.size() != b.size()) return a.size() < b.size();
  return a.adapters < b.adapters;
}

ChainSearchResult evaluate_chain(const InterfaceAdapterGraph& graph, const AdapterChain& chain,
                                 const std::string& target, const InvocationWeights& weights) {
  require_weights_for(graph, target, weights);
  ChainSearchResult result;
  result.chain = chain;
  if (chain.empty()) {
    result.per_method = full_availability(graph.interface(target).size());
    // Weights sum to one, so the identity adaptation loses nothing.
    result.availability = 1.0;
    result.loss = 0.0;
    return result;
  }
  const auto ends = check_chain(graph, chain);
  if (ends.target != target) {
    throw GraphError("chain " + to_string(chain) + " ends at '" + ends.target + "', not '" +
                     target + "'");
  }
  const auto factor = chain_factor(graph, chain);
  result.per_method = adapt(factor, full_availability(graph.interface(ends.source).size()));
  result.availability = weighted_availability(result.per_method, weights);
  result.loss = 1.0 - result.availability;
  return result;
}

double prob_loss(const InterfaceAdapterGraph& graph, const AdapterChain& chain,
                 const std::string& target, const InvocationWeights& weights) {
  return evaluate_chain(graph, chain, target, weights).loss;
}

namespace {

// Frontier entry. `chain` holds adapter indices in source-to-target order;
// since adapters() is sorted by name, index order is name order.
struct Node {
  std::vector<std::size_t> chain;
  std::vector<bool> visited;  // by interface position
  std::string source;
  AdaptationFactor factor;
  MethodAvailability per_method;
  double availability = 1.0;
  double loss = 0.0;
  double priority = 0.0;  // loss, never below the parent's priority
};

struct NodeOrder {
  const std::vector<Node>* nodes;
  // std::priority_queue pops the greatest element, so this is "worse than".
  bool operator()(std::size_t lhs, std::size_t rhs) const {
    const Node& a = (*nodes)[lhs];
    const Node& b = (*nodes)[rhs];
    if (a.priority != b.priority) return a.priority > b.priority;
    if (a.chain.size() != b.chain.size()) return a.chain.size() > b.chain.size();
    return a.chain > b.chain;
  }
};

AdapterChain names_of(const InterfaceAdapterGraph& graph, const std::vector<std::size_t>& idx) {
  AdapterChain chain;
  for (std::size_t i : idx) chain.adapters.push_back(graph.adapters()[i].name);
  return chain;
}

std::size_t position_of(const InterfaceAdapterGraph& graph, const std::string& name) {
  const auto& all = graph.interfaces();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].name == name) return i;
  }
  throw GraphError("unknown interface '" + name + "'");
}

ChainSearchResult to_result(const InterfaceAdapterGraph& graph, const Node& node) {
  return {names_of(graph, node.chain), node.availability, node.loss, node.per_method};
}

}  // namespace

std::optional<ChainSearchResult> greedy_chain_multi_source(const InterfaceAdapterGraph& graph,
                                                           std::span<const std::string> sources,
                                                           const std::string& target,
                                                           const InvocationWeights& weights,
                                                           GreedyTrace* trace) {
  if (sources.empty()) throw GraphError("at least one source interface is required");
  require_weights_for(graph, target, weights);
  std::vector<bool> is_source(graph.interfaces().size(), false);
  for (const auto& s : sources) is_source[position_of(graph, s)] = true;

  const auto& target_spec = graph.interface(target);
  const std::size_t target_pos = position_of(graph, target);

  std::vector<Node> nodes;
  std::priority_queue<std::size_t, std::vector<std::size_t>, NodeOrder> frontier(
      NodeOrder{&nodes});

  {
    Node root;
    root.visited.assign(graph.interfaces().size(), false);
    root.visited[target_pos] = true;
    root.source = target;
    root.factor = identity_factor(target_spec.size());
    root.per_method = full_availability(target_spec.size());
    root.availability = 1.0;
    root.loss = 0.0;
    root.priority = 0.0;
    nodes.push_back(std::move(root));
    frontier.push(0);
    if (trace) trace->inserted.push_back({});
  }

  while (!frontier.empty()) {
    const std::size_t current = frontier.top();
    frontier.pop();
    if (trace) trace->pops.push_back({names_of(graph, nodes[current].chain), nodes[current].loss});

    if (is_source[position_of(graph, nodes[current].source)]) {
      return to_result(graph, nodes[current]);
    }

    // Prepend every edge that ends where the current chain starts and does
    // not close a cycle.
    for (std::size_t edge_idx : graph.adapters_into(nodes[current].source)) {
      const auto& edge = graph.adapters()[edge_idx];
      const std::size_t from = position_of(graph, edge.source);
      if (nodes[current].visited[from]) continue;

      const Node& parent = nodes[current];
      Node child;
      child.chain.reserve(parent.chain.size() + 1);
      child.chain.push_back(edge_idx);
      child.chain.insert(child.chain.end(), parent.chain.begin(), parent.chain.end());
      child.visited = parent.visited;
      child.visited[from] = true;
      child.source = edge.source;
      child.factor = compose(parent.factor, edge.factor);
      child.per_method = adapt(child.factor, full_availability(graph.interface(edge.source).size()));
      child.availability = weighted_availability(child.per_method, weights);
      child.loss = 1.0 - child.availability;
      child.priority = std::max(child.loss, parent.priority);
      if (trace) trace->inserted.push_back(names_of(graph, child.chain));
      nodes.push_back(std::move(child));
      frontier.push(nodes.size() - 1);
    }
    // Expanded chains only need their names and scores from here on.
    nodes[current].factor = AdaptationFactor{};
  }
  return std::nullopt;
}

std::optional<ChainSearchResult> greedy_chain(const InterfaceAdapterGraph& graph,
                                              const std::string& source,
                                              const std::string& target,
                                              const InvocationWeights& weights,
                                              GreedyTrace* trace) {
  const std::string sources[] = {source};
  return greedy_chain_multi_source(graph, sources, target, weights, trace);
}

std::optional<ChainSearchResult> brute_force_optimal(const InterfaceAdapterGraph& graph,
                                                     const std::string& source,
                                                     const std::string& target,
                                                     const InvocationWeights& weights) {
  require_weights_for(graph, target, weights);
  std::optional<ChainSearchResult> best;
  for_each_acyclic_chain(graph, source, target, std::nullopt, [&](const AdapterChain& chain) {
    auto candidate = evaluate_chain(graph, chain, target, weights);
    if (!best || better_candidate(candidate.loss, candidate.chain, best->loss, best->chain)) {
      best = std::move(candidate);
    }
    return true;
  });
  return best;
}

bool prob_chain_decision(const InterfaceAdapterGraph& graph, const std::string& source,
                         const std::string& target, const InvocationWeights& weights,
                         double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("availability threshold must lie in [0, 1]");
  }
  const auto best = brute_force_optimal(graph, source, target, weights);
  return best && best->availability >= threshold - 1e-12;
}

}  // namespace adapterchain
