#include "adapterchain/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace adapterchain {
namespace {

enum class Mode { kProbabilistic, kDiscrete };

struct ParsedAdapter {
  std::string name;
  std::string source;
  std::string target;
  AdaptationFactor factor;
};

struct ParsedDocument {
  std::vector<InterfaceSpec> interfaces;
  std::vector<ParsedAdapter> adapters;
};

std::string describe_position(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

bool is_string(const Json& j, const char* key) { return j.contains(key) && j[key].is_string(); }

const InterfaceSpec* find_interface(const std::vector<InterfaceSpec>& all, const std::string& n) {
  for (const auto& i : all) {
    if (i.name == n) return &i;
  }
  return nullptr;
}

// Fills one dependency row. Returns false (after recording problems) when
// the row cannot be built.
void parse_row(const Json& value, const InterfaceSpec& source, std::size_t row,
               AdaptationFactor& factor, Mode mode, const std::string& where,
               std::vector<std::string>& problems) {
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    if (s == "never") {
      factor.dep.set(row, 0, true);
    } else if (s != "always") {
      problems.push_back(where + ": expected \"always\", \"never\" or a list, got \"" + s + "\"");
    }
    return;
  }
  if (!value.is_array()) {
    problems.push_back(where + ": expected \"always\", \"never\" or a list");
    return;
  }
  std::set<std::string> seen;
  for (const auto& entry : value) {
    if (!entry.is_object() || !is_string(entry, "method")) {
      problems.push_back(where + ": each dependency needs a \"method\" string");
      continue;
    }
    const auto& method = entry["method"].get_ref<const std::string&>();
    const std::string dep_where = where + " -> " + method;
    const auto col = source.index_of(method);
    if (!col) {
      problems.push_back(dep_where + ": unknown method of source interface '" + source.name + "'");
      continue;
    }
    if (!seen.insert(method).second) {
      problems.push_back(dep_where + ": listed twice");
      continue;
    }
    factor.dep.set(row, *col, true);
    if (mode == Mode::kDiscrete) {
      if (entry.contains("p")) {
        problems.push_back(dep_where + ": \"p\" is not allowed in a discrete document");
      }
      continue;
    }
    if (!entry.contains("p") || !entry["p"].is_number()) {
      problems.push_back(dep_where + ": missing numeric \"p\"");
      continue;
    }
    const double p = entry["p"].get<double>();
    if (!(p >= 0.0 && p <= 1.0)) {
      std::ostringstream os;
      os << dep_where << ": p = " << p << " is outside [0, 1]";
      problems.push_back(os.str());
      continue;
    }
    factor.conv(row, *col) = p;
  }
}

ParsedDocument parse_document(const Json& doc, Mode mode) {
  std::vector<std::string> problems;
  ParsedDocument out;
  if (!doc.is_object()) throw GraphError("graph document must be a JSON object");

  if (!doc.contains("interfaces") || !doc["interfaces"].is_array()) {
    problems.push_back("missing \"interfaces\" array");
  } else {
    for (const auto& entry : doc["interfaces"]) {
      if (!entry.is_object() || !is_string(entry, "name")) {
        problems.push_back("interface entry needs a \"name\" string");
        continue;
      }
      InterfaceSpec spec{entry["name"].get<std::string>(), {}};
      if (!entry.contains("methods") || !entry["methods"].is_array()) {
        problems.push_back("interface '" + spec.name + "': missing \"methods\" array");
        continue;
      }
      for (const auto& m : entry["methods"]) {
        if (!m.is_string()) {
          problems.push_back("interface '" + spec.name + "': method names must be strings");
          continue;
        }
        spec.methods.push_back(m.get<std::string>());
      }
      out.interfaces.push_back(std::move(spec));
    }
  }

  if (!doc.contains("adapters") || !doc["adapters"].is_array()) {
    problems.push_back("missing \"adapters\" array");
  } else {
    for (const auto& entry : doc["adapters"]) {
      if (!entry.is_object() || !is_string(entry, "name") || !is_string(entry, "source") ||
          !is_string(entry, "target")) {
        problems.push_back("adapter entry needs \"name\", \"source\" and \"target\" strings");
        continue;
      }
      ParsedAdapter a{entry["name"].get<std::string>(), entry["source"].get<std::string>(),
                      entry["target"].get<std::string>(),
                      {DependencyMatrix(0, 0), ConversionMatrix(0, 0)}};
      const std::string who = "adapter '" + a.name + "'";
      const auto* source = find_interface(out.interfaces, a.source);
      const auto* target = find_interface(out.interfaces, a.target);
      if (!source) problems.push_back(who + ": unknown source interface '" + a.source + "'");
      if (!target) problems.push_back(who + ": unknown target interface '" + a.target + "'");
      if (!entry.contains("methods") || !entry["methods"].is_object()) {
        problems.push_back(who + ": missing \"methods\" object");
        continue;
      }
      if (!source || !target) continue;

      a.factor = {DependencyMatrix(target->size(), source->size()),
                  ConversionMatrix(target->size(), source->size())};
      a.factor.dep.set(0, 0, true);
      const auto& methods = entry["methods"];
      for (const auto& [key, value] : methods.items()) {
        if (!target->index_of(key)) {
          problems.push_back(who + ": '" + key + "' is not a method of target interface '" +
                             target->name + "'");
        }
      }
      for (std::size_t row = 1; row < target->size(); ++row) {
        const auto& method = target->methods[row - 1];
        if (!methods.contains(method)) {
          problems.push_back(who + ": target method '" + method + "' is not specified");
          continue;
        }
        parse_row(methods[method], *source, row, a.factor, mode, who + " method '" + method + "'",
                  problems);
      }
      out.adapters.push_back(std::move(a));
    }
  }
  if (!problems.empty()) throw GraphError(std::move(problems));
  return out;
}

Json row_to_json(const InterfaceSpec& source, const AdaptationFactor& factor, std::size_t row,
                 Mode mode) {
  if (factor.dep(row, 0)) return "never";
  if (factor.dep.row_empty(row)) return "always";
  Json list = Json::array();
  for (std::size_t col = 1; col < factor.dep.cols(); ++col) {
    if (!factor.dep(row, col)) continue;
    Json dep = {{"method", source.methods[col - 1]}};
    if (mode == Mode::kProbabilistic) dep["p"] = factor.conv(row, col);
    list.push_back(std::move(dep));
  }
  return list;
}

Json entry_to_json(const std::string& name, const InterfaceSpec& source,
                   const InterfaceSpec& target, const AdaptationFactor& factor, Mode mode) {
  Json methods = Json::object();
  for (std::size_t row = 1; row < factor.dep.rows(); ++row) {
    methods[target.methods[row - 1]] = row_to_json(source, factor, row, mode);
  }
  Json out;
  out["name"] = name;
  out["source"] = source.name;
  out["target"] = target.name;
  out["methods"] = std::move(methods);
  return out;
}

Json interfaces_to_json(const std::vector<InterfaceSpec>& interfaces) {
  Json out = Json::array();
  for (const auto& i : interfaces) {
    Json entry;
    entry["name"] = i.name;
    entry["methods"] = i.methods;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError("parse error at " + describe_position(text, e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const DocumentError& e) {
    throw DocumentError(path + ": " + e.what());
  }
}

InterfaceAdapterGraph graph_from_json(const Json& doc) {
  auto parsed = parse_document(doc, Mode::kProbabilistic);
  std::vector<AdapterSpec> adapters;
  for (auto& a : parsed.adapters) {
    adapters.push_back({std::move(a.name), std::move(a.source), std::move(a.target),
                        std::move(a.factor)});
  }
  return InterfaceAdapterGraph::build(std::move(parsed.interfaces), std::move(adapters));
}

DiscreteAdapterGraph discrete_graph_from_json(const Json& doc) {
  auto parsed = parse_document(doc, Mode::kDiscrete);
  std::vector<DiscreteAdapterSpec> adapters;
  for (auto& a : parsed.adapters) {
    adapters.push_back({std::move(a.name), std::move(a.source), std::move(a.target),
                        std::move(a.factor.dep)});
  }
  return DiscreteAdapterGraph::build(std::move(parsed.interfaces), std::move(adapters));
}

Json adapter_to_json(const std::string& name, const InterfaceSpec& source,
                     const InterfaceSpec& target, const AdaptationFactor& factor) {
  return entry_to_json(name, source, target, factor, Mode::kProbabilistic);
}

Json discrete_adapter_to_json(const std::string& name, const InterfaceSpec& source,
                              const InterfaceSpec& target, const DependencyMatrix& dep) {
  return entry_to_json(name, source, target, {dep, ConversionMatrix(dep.rows(), dep.cols())},
                       Mode::kDiscrete);
}

Json graph_to_json(const InterfaceAdapterGraph& graph) {
  Json adapters = Json::array();
  for (const auto& a : graph.adapters()) {
    adapters.push_back(adapter_to_json(a.name, graph.interface(a.source),
                                       graph.interface(a.target), a.factor));
  }
  Json out;
  out["interfaces"] = interfaces_to_json(graph.interfaces());
  out["adapters"] = std::move(adapters);
  return out;
}

std::map<std::string, double> weights_from_json(const Json& doc) {
  if (!doc.is_object()) throw GraphError("weights document must be an object of numbers");
  std::map<std::string, double> out;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_number()) throw GraphError("weight for '" + key + "' is not a number");
    out[key] = value.get<double>();
  }
  return out;
}

Json result_to_json(const InterfaceSpec& target, const ChainSearchResult& result) {
  Json out;
  out["chain"] = result.chain.adapters;
  out["availability"] = result.availability;
  out["loss"] = result.loss;
  Json per_method = Json::object();
  for (std::size_t m = 1; m < result.per_method.size(); ++m) {
    per_method[target.methods[m - 1]] = result.per_method[m];
  }
  out["per_method"] = std::move(per_method);
  return out;
}

}  // namespace adapterchain
