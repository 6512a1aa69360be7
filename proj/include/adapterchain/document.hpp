#pragma once

// JSON graph documents.
//
//   {
//     "interfaces": [{"name": "Video1", "methods": ["playFile"]}, ...],
//     "adapters": [{
//       "name": "A1", "source": "Video1", "target": "Video2",
//       "methods": {"play": [{"method": "playFile", "p": 0.6666666666666666}]}
//     }, ...]
//   }
//
// Each target method maps to "always", "never" or a dependency list. Every
// target method must be listed. Discrete documents use the same layout
// without "p".

#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "adapterchain/chaining.hpp"
#include "adapterchain/graph.hpp"
#include "adapterchain/reduction.hpp"

namespace adapterchain {

using Json = nlohmann::ordered_json;

/// Malformed JSON text; the message carries line and column.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

/// Throws GraphError with one diagnostic per problem.
InterfaceAdapterGraph graph_from_json(const Json& doc);
DiscreteAdapterGraph discrete_graph_from_json(const Json& doc);

Json adapter_to_json(const std::string& name, const InterfaceSpec& source,
                     const InterfaceSpec& target, const AdaptationFactor& factor);
Json discrete_adapter_to_json(const std::string& name, const InterfaceSpec& source,
                              const InterfaceSpec& target, const DependencyMatrix& dep);
Json graph_to_json(const InterfaceAdapterGraph& graph);

/// Weights document: {"method": weight, ...}.
std::map<std::string, double> weights_from_json(const Json& doc);

/// {"chain": [...], "availability": x, "loss": 1 - x, "per_method": {...}}
Json result_to_json(const InterfaceSpec& target, const ChainSearchResult& result);

}  // namespace adapterchain
