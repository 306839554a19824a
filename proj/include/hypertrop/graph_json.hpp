#pragma once

#include <json.hpp>

#include "hypertrop/graph.hpp"

namespace hypertrop {

using Json = nlohmann::json;

/// Parsed form of the graph document:
/// {"vertices":[{"id":"v1","weight":0}],
///  "edges":[{"id":"e1","ends":["v1","v2"],"length":"3/2"}],
///  "relation":[["e1","e2"],["e3"]]}
/// Weights default to 0, lengths to "1", the relation to all singletons.
struct GraphDocument {
  Graph graph;
  std::vector<Rational> lengths;
  std::vector<int> weights;
  bool has_weights = false;
  std::vector<int> edge_class;  // empty when no relation was given
};

/// Throws InvalidInputError on any schema violation.
GraphDocument parse_graph_document(const Json& doc);

Model model_from_json(const Json& doc);
ConstrainedType type_from_json(const Json& doc);

Json to_json(const Graph& g);
Json to_json(const Model& m);
Json to_json(const ConstrainedType& t);

}  // namespace hypertrop
