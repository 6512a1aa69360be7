#pragma once

// Embedding of the discrete (available / unavailable) model into the
// probabilistic one: dependencies are kept, every conversion on the
// dependency support succeeds with probability one, and true/false
// availabilities become 1/0.

#include <string>
#include <vector>

#include "adapterchain/algebra.hpp"
#include "adapterchain/graph.hpp"

namespace adapterchain {

struct DiscreteAdapterSpec {
  std::string name;
  std::string source;
  std::string target;
  DependencyMatrix dep;
};

/// Adapter graph whose edges carry only dependency matrices.
class DiscreteAdapterGraph {
 public:
  /// Same endpoint, naming and shape rules as InterfaceAdapterGraph::build.
  static DiscreteAdapterGraph build(std::vector<InterfaceSpec> interfaces,
                                    std::vector<DiscreteAdapterSpec> adapters);

  const std::vector<InterfaceSpec>& interfaces() const { return interfaces_; }
  /// Sorted by name.
  const std::vector<DiscreteAdapterSpec>& adapters() const { return adapters_; }

  const InterfaceSpec& interface(const std::string& name) const;
  const DiscreteAdapterSpec& adapter(const std::string& name) const;

 private:
  DiscreteAdapterGraph() = default;

  std::vector<InterfaceSpec> interfaces_;
  std::vector<DiscreteAdapterSpec> adapters_;
};

AdaptationFactor reduce_dependency(const DependencyMatrix& dep);
MethodAvailability reduce_availability(const DiscreteAvailability& p);
InterfaceAdapterGraph reduce_graph(const DiscreteAdapterGraph& graph);

/// Discrete fold of a non-empty chain applied to the fully available source.
DiscreteAvailability discrete_chain_availability(const DiscreteAdapterGraph& graph,
                                                 const AdapterChain& chain);

/// True iff some acyclic chain from `source` makes at least `required`
/// methods of `target` available. Answered through the probabilistic engine
/// with uniform weights and threshold required / M.
bool chain_decision_discrete(const DiscreteAdapterGraph& graph, const std::string& source,
                             const std::string& target, std::size_t required);

}  // namespace adapterchain
