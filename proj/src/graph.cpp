#include "adapterchain/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace adapterchain {
namespace {

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& line : lines) {
    if (!out.empty()) out += '\n';
    out += line;
  }
  return out;
}

}  // namespace

GraphError::GraphError(std::string message)
    : std::runtime_error(message), diagnostics_{std::move(message)} {}

GraphError::GraphError(std::vector<std::string> diagnostics)
    : std::runtime_error(join_lines(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::optional<std::size_t> InterfaceSpec::index_of(const std::string& method) const {
  auto it = std::find(methods.begin(), methods.end(), method);
  if (it == methods.end()) return std::nullopt;
  return static_cast<std::size_t>(it - methods.begin()) + 1;
}

std::string to_string(const AdapterChain& chain) {
  std::string out = "[";
  for (std::size_t i = 0; i < chain.adapters.size(); ++i) {
    if (i) out += ", ";
    out += chain.adapters[i];
  }
  return out + "]";
}

InterfaceAdapterGraph InterfaceAdapterGraph::build(std::vector<InterfaceSpec> interfaces,
                                                   std::vector<AdapterSpec> adapters) {
  std::vector<std::string> problems;
  InterfaceAdapterGraph g;

  for (std::size_t i = 0; i < interfaces.size(); ++i) {
    const auto& spec = interfaces[i];
    if (spec.name.empty()) problems.push_back("interface #" + std::to_string(i) + " has no name");
    if (!g.interface_index_.emplace(spec.name, i).second) {
      problems.push_back("duplicate interface name '" + spec.name + "'");
    }
    std::set<std::string> seen;
    for (const auto& m : spec.methods) {
      if (!seen.insert(m).second) {
        problems.push_back("interface '" + spec.name + "': duplicate method '" + m + "'");
      }
    }
  }

  std::sort(adapters.begin(), adapters.end(),
            [](const AdapterSpec& a, const AdapterSpec& b) { return a.name < b.name; });
  for (std::size_t i = 0; i < adapters.size(); ++i) {
    const auto& a = adapters[i];
    const std::string who = "adapter '" + a.name + "'";
    if (!g.adapter_index_.emplace(a.name, i).second) {
      problems.push_back("duplicate adapter name '" + a.name + "'");
    }
    auto src = g.interface_index_.find(a.source);
    auto dst = g.interface_index_.find(a.target);
    if (src == g.interface_index_.end()) {
      problems.push_back(who + ": unknown source interface '" + a.source + "'");
    }
    if (dst == g.interface_index_.end()) {
      problems.push_back(who + ": unknown target interface '" + a.target + "'");
    }
    if (src != g.interface_index_.end() && dst != g.interface_index_.end()) {
      const std::size_t rows = interfaces[dst->second].size();
      const std::size_t cols = interfaces[src->second].size();
      if (a.factor.dep.rows() != rows || a.factor.dep.cols() != cols) {
        problems.push_back(who + ": factor is " + std::to_string(a.factor.dep.rows()) + "x" +
                           std::to_string(a.factor.dep.cols()) + " but endpoints require " +
                           std::to_string(rows) + "x" + std::to_string(cols));
        continue;
      }
    }
    for (const auto& v : validate_factor(a.factor)) problems.push_back(who + ": " + v.message);
  }

  if (!problems.empty()) throw GraphError(std::move(problems));

  g.interfaces_ = std::move(interfaces);
  g.adapters_ = std::move(adapters);
  g.into_.assign(g.interfaces_.size(), {});
  g.from_.assign(g.interfaces_.size(), {});
  for (std::size_t i = 0; i < g.adapters_.size(); ++i) {
    g.into_[g.interface_index_.at(g.adapters_[i].target)].push_back(i);
    g.from_[g.interface_index_.at(g.adapters_[i].source)].push_back(i);
  }
  return g;
}

bool InterfaceAdapterGraph::has_interface(const std::string& name) const {
  return interface_index_.count(name) != 0;
}

const InterfaceSpec& InterfaceAdapterGraph::interface(const std::string& name) const {
  auto it = interface_index_.find(name);
  if (it == interface_index_.end()) throw GraphError("unknown interface '" + name + "'");
  return interfaces_[it->second];
}

const AdapterSpec& InterfaceAdapterGraph::adapter(const std::string& name) const {
  auto it = adapter_index_.find(name);
  if (it == adapter_index_.end()) throw GraphError("unknown adapter '" + name + "'");
  return adapters_[it->second];
}

const std::vector<std::size_t>& InterfaceAdapterGraph::adapters_into(
    const std::string& name) const {
  auto it = interface_index_.find(name);
  if (it == interface_index_.end()) throw GraphError("unknown interface '" + name + "'");
  return into_[it->second];
}

const std::vector<std::size_t>& InterfaceAdapterGraph::adapters_from(
    const std::string& name) const {
  auto it = interface_index_.find(name);
  if (it == interface_index_.end()) throw GraphError("unknown interface '" + name + "'");
  return from_[it->second];
}

ChainEndpoints check_chain(const InterfaceAdapterGraph& graph, const AdapterChain& chain) {
  if (chain.empty()) throw GraphError("chain is empty");
  std::vector<const AdapterSpec*> specs;
  for (const auto& name : chain.adapters) specs.push_back(&graph.adapter(name));

  std::set<std::string> visited{specs.front()->source};
  for (std::size_t m = 0; m < specs.size(); ++m) {
    if (m > 0 && specs[m - 1]->target != specs[m]->source) {
      throw GraphError("adapter '" + specs[m - 1]->name + "' produces '" + specs[m - 1]->target +
                       "' but '" + specs[m]->name + "' expects '" + specs[m]->source + "'");
    }
    if (!visited.insert(specs[m]->target).second) {
      throw GraphError("chain " + to_string(chain) + " revisits interface '" +
                       specs[m]->target + "'");
    }
  }
  return {specs.front()->source, specs.back()->target};
}

AdaptationFactor chain_factor(const InterfaceAdapterGraph& graph, const AdapterChain& chain) {
  check_chain(graph, chain);
  // Grouped as ((f_n x f_{n-1}) x ...) x f_1, the order in which the greedy
  // search builds factors by prepending edges. Composition is only
  // associative up to conversion multiplicities, so the grouping is fixed.
  AdaptationFactor acc = graph.adapter(chain.adapters.back()).factor;
  for (std::size_t m = chain.size() - 1; m-- > 0;) {
    acc = compose(acc, graph.adapter(chain.adapters[m]).factor);
  }
  return acc;
}

namespace {

// Depth-first walk emitting only chains of exactly `length` adapters. Edges
// are tried in adapter-name order, so same-length chains come out sorted.
bool walk_exact(const InterfaceAdapterGraph& graph, const std::string& at,
                const std::string& target, std::size_t length, std::set<std::string>& visited,
                AdapterChain& prefix, bool& reached_depth,
                const std::function<bool(const AdapterChain&)>& visit) {
  if (prefix.size() == length) {
    reached_depth = true;
    return at == target ? visit(prefix) : true;
  }
  if (at == target) return true;
  for (std::size_t idx : graph.adapters_from(at)) {
    const auto& edge = graph.adapters()[idx];
    if (visited.count(edge.target)) continue;
    visited.insert(edge.target);
    prefix.adapters.push_back(edge.name);
    const bool go_on =
        walk_exact(graph, edge.target, target, length, visited, prefix, reached_depth, visit);
    prefix.adapters.pop_back();
    visited.erase(edge.target);
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

void for_each_acyclic_chain(const InterfaceAdapterGraph& graph, const std::string& source,
                            const std::string& target, std::optional<std::size_t> max_length,
                            const std::function<bool(const AdapterChain&)>& visit) {
  graph.interface(source);
  graph.interface(target);
  if (source == target) {
    visit(AdapterChain{});
    return;
  }
  const std::size_t longest = std::min(max_length.value_or(graph.interfaces().size()),
                                       graph.interfaces().size() - 1);
  for (std::size_t length = 1; length <= longest; ++length) {
    std::set<std::string> visited{source};
    AdapterChain prefix;
    bool reached_depth = false;
    if (!walk_exact(graph, source, target, length, visited, prefix, reached_depth, visit)) return;
    // No partial path of this length exists, so none longer can either.
    if (!reached_depth) return;
  }
}

std::vector<AdapterChain> enumerate_acyclic_chains(const InterfaceAdapterGraph& graph,
                                                   const std::string& source,
                                                   const std::string& target,
                                                   std::optional<std::size_t> max_length) {
  std::vector<AdapterChain> out;
  for_each_acyclic_chain(graph, source, target, max_length, [&](const AdapterChain& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

}  // namespace adapterchain
