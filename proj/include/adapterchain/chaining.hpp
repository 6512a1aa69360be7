#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adapterchain/algebra.hpp"
#include "adapterchain/graph.hpp"

namespace adapterchain {

/// Relative invocation probabilities over the methods of one target
/// interface. Indexed like the algebra (dummy at 0, always weight 0) and
/// normalized to sum to one on construction.
class InvocationWeights {
 public:
  /// 1/M for each of the M non-dummy methods.
  static InvocationWeights uniform(const InterfaceSpec& target);
  /// Weights by method name; missing methods get 0. Throws GraphError on
  /// unknown names, negative or non-finite weights, or a zero sum.
  static InvocationWeights from_map(const InterfaceSpec& target,
                                    const std::map<std::string, double>& weights);
  /// Weights for non-dummy methods in declaration order.
  static InvocationWeights from_vector(const InterfaceSpec& target, std::vector<double> weights);

  const std::string& interface_name() const { return interface_; }
  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

 private:
  InvocationWeights(std::string interface, std::vector<double> weights)
      : interface_(std::move(interface)), weights_(std::move(weights)) {}

  std::string interface_;
  std::vector<double> weights_;
};

struct ChainSearchResult {
  AdapterChain chain;
  /// Weighted availability sum_m r_m v_m.
  double availability = 0.0;
  /// Always exactly 1 - availability.
  double loss = 1.0;
  MethodAvailability per_method;
};

/// Evaluates an explicit chain ending at `target`. The empty chain leaves
/// the target fully available.
ChainSearchResult evaluate_chain(const InterfaceAdapterGraph& graph, const AdapterChain& chain,
                                 const std::string& target, const InvocationWeights& weights);

double prob_loss(const InterfaceAdapterGraph& graph, const AdapterChain& chain,
                 const std::string& target, const InvocationWeights& weights);

/// Optional instrumentation for greedy_chain.
struct GreedyTrace {
  struct Pop {
    AdapterChain chain;
    double loss;
  };
  std::vector<Pop> pops;
  /// Every chain inserted into the frontier, in insertion order.
  std::vector<AdapterChain> inserted;
};

/// Best-first search from the target backwards: chains ending at `target`
/// are popped in order of increasing loss until one starts at `source`.
/// Ties break on length, then on the adapter-name sequence.
std::optional<ChainSearchResult> greedy_chain(const InterfaceAdapterGraph& graph,
                                              const std::string& source,
                                              const std::string& target,
                                              const InvocationWeights& weights,
                                              GreedyTrace* trace = nullptr);

/// As greedy_chain, stopping at the first chain whose source is any of
/// `sources`.
std::optional<ChainSearchResult> greedy_chain_multi_source(
    const InterfaceAdapterGraph& graph, std::span<const std::string> sources,
    const std::string& target, const InvocationWeights& weights, GreedyTrace* trace = nullptr);

/// Exhaustive minimum over every acyclic chain, same tie-break as
/// greedy_chain.
std::optional<ChainSearchResult> brute_force_optimal(const InterfaceAdapterGraph& graph,
                                                     const std::string& source,
                                                     const std::string& target,
                                                     const InvocationWeights& weights);

/// True iff some chain reaches weighted availability >= threshold.
bool prob_chain_decision(const InterfaceAdapterGraph& graph, const std::string& source,
                         const std::string& target, const InvocationWeights& weights,
                         double threshold);

/// Strict ordering used to pick among equally good chains: loss, then
/// length, then adapter names.
bool better_candidate(double loss_a, const AdapterChain& a, double loss_b, const AdapterChain& b);

}  // namespace adapterchain
