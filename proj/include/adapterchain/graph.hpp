#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "adapterchain/algebra.hpp"

namespace adapterchain {

/// Raised for invalid graphs, unknown names and broken chains. what() joins
/// all diagnostics with newlines; diagnostics() lists them individually.
class GraphError : public std::runtime_error {
 public:
  explicit GraphError(std::string message);
  explicit GraphError(std::vector<std::string> diagnostics);

  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

/// Named interface. `methods` excludes the dummy, which always sits at
/// index 0, so method i of the list has algebra index i + 1.
struct InterfaceSpec {
  std::string name;
  std::vector<std::string> methods;

  /// Method count including the dummy.
  std::size_t size() const { return methods.size() + 1; }
  /// Algebra index of a named method.
  std::optional<std::size_t> index_of(const std::string& method) const;
};

/// Adapter providing `target` on top of `source`.
struct AdapterSpec {
  std::string name;
  std::string source;
  std::string target;
  AdaptationFactor factor;
};

/// Adapters in source-to-target order.
struct AdapterChain {
  std::vector<std::string> adapters;

  bool empty() const { return adapters.empty(); }
  std::size_t size() const { return adapters.size(); }

  friend bool operator==(const AdapterChain&, const AdapterChain&) = default;
  friend auto operator<=>(const AdapterChain&, const AdapterChain&) = default;
};

std::string to_string(const AdapterChain& chain);

/// Directed multigraph with interfaces as nodes and adapters as edges.
/// Immutable once built.
class InterfaceAdapterGraph {
 public:
  /// Validates endpoints, name uniqueness, factor shapes and factor
  /// invariants. Throws GraphError listing every problem found.
  static InterfaceAdapterGraph build(std::vector<InterfaceSpec> interfaces,
                                     std::vector<AdapterSpec> adapters);

  const std::vector<InterfaceSpec>& interfaces() const { return interfaces_; }
  /// Sorted by name.
  const std::vector<AdapterSpec>& adapters() const { return adapters_; }

  bool has_interface(const std::string& name) const;
  const InterfaceSpec& interface(const std::string& name) const;
  const AdapterSpec& adapter(const std::string& name) const;

  /// Indices into adapters() of edges whose target is `name`, in name order.
  const std::vector<std::size_t>& adapters_into(const std::string& name) const;
  /// Indices into adapters() of edges whose source is `name`, in name order.
  const std::vector<std::size_t>& adapters_from(const std::string& name) const;

 private:
  InterfaceAdapterGraph() = default;

  std::vector<InterfaceSpec> interfaces_;
  std::vector<AdapterSpec> adapters_;
  std::map<std::string, std::size_t> interface_index_;
  std::map<std::string, std::size_t> adapter_index_;
  std::vector<std::vector<std::size_t>> into_;
  std::vector<std::vector<std::size_t>> from_;
};

struct ChainEndpoints {
  std::string source;
  std::string target;
};

/// Checks adapter names, consecutive compatibility and acyclicity of a
/// non-empty chain.
ChainEndpoints check_chain(const InterfaceAdapterGraph& graph, const AdapterChain& chain);

/// Composite factor of a non-empty chain: factor(last) x ... x factor(first).
AdaptationFactor chain_factor(const InterfaceAdapterGraph& graph, const AdapterChain& chain);

/// Calls `visit` for each acyclic chain from `source` to `target`, shorter
/// chains first and equal lengths in lexicographic order of adapter names.
/// The empty chain is visited iff source == target. Returning false from
/// `visit` stops the enumeration.
void for_each_acyclic_chain(const InterfaceAdapterGraph& graph, const std::string& source,
                            const std::string& target, std::optional<std::size_t> max_length,
                            const std::function<bool(const AdapterChain&)>& visit);

std::vector<AdapterChain> enumerate_acyclic_chains(
    const InterfaceAdapterGraph& graph, const std::string& source, const std::string& target,
    std::optional<std::size_t> max_length = std::nullopt);

}  // namespace adapterchain
