#include "hypertrop/graph_json.hpp"

#include <map>

namespace hypertrop {

namespace {

const Json& require(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw InvalidInputError(std::string("graph json: missing '") + key + "'");
  return obj.at(key);
}

std::string require_string(const Json& j, const char* what) {
  if (!j.is_string()) throw InvalidInputError(std::string("graph json: ") + what + " must be a string");
  return j.get<std::string>();
}

Rational parse_length(const Json& j) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  } catch (const std::exception& e) {
    throw InvalidInputError(std::string("graph json: bad length: ") + e.what());
  }
  throw InvalidInputError("graph json: length must be a string \"p/q\" or an integer");
}

}  // namespace

GraphDocument parse_graph_document(const Json& doc) {
  if (!doc.is_object()) throw InvalidInputError("graph json: document must be an object");
  const Json& vertices = require(doc, "vertices");
  const Json& edges = require(doc, "edges");
  if (!vertices.is_array() || !edges.is_array()) throw InvalidInputError("graph json: vertices and edges must be arrays");

  GraphDocument out;
  std::vector<std::string> ids;
  std::map<std::string, int> index;
  for (const auto& v : vertices) {
    auto id = require_string(require(v, "id"), "vertex id");
    int w = 0;
    if (v.contains("weight")) {
      if (!v.at("weight").is_number_integer() || v.at("weight").get<int>() < 0) {
        throw InvalidInputError("graph json: weight must be a nonnegative integer");
      }
      w = v.at("weight").get<int>();
      out.has_weights = true;
    }
    if (!index.emplace(id, static_cast<int>(ids.size())).second) {
      throw InvalidInputError("graph json: duplicate vertex id '" + id + "'");
    }
    ids.push_back(std::move(id));
    out.weights.push_back(w);
  }
  std::vector<Edge> es;
  for (const auto& e : edges) {
    auto id = require_string(require(e, "id"), "edge id");
    const Json& ends = require(e, "ends");
    if (!ends.is_array() || ends.size() != 2) throw InvalidInputError("graph json: ends must list two vertex ids");
    std::array<int, 2> idx{};
    for (int k = 0; k < 2; ++k) {
      const auto name = require_string(ends[k], "endpoint");
      auto it = index.find(name);
      if (it == index.end()) throw InvalidInputError("graph json: edge '" + id + "' references unknown vertex '" + name + "'");
      idx[k] = it->second;
    }
    out.lengths.push_back(e.contains("length") ? parse_length(e.at("length")) : Rational(1));
    es.push_back({std::move(id), idx[0], idx[1]});
  }
  out.graph = Graph(std::move(ids), std::move(es));

  if (doc.contains("relation")) {
    const Json& rel = doc.at("relation");
    if (!rel.is_array()) throw InvalidInputError("graph json: relation must be an array of arrays");
    out.edge_class.assign(out.graph.num_edges(), -1);
    int cls = 0;
    for (const auto& group : rel) {
      if (!group.is_array() || group.empty()) throw InvalidInputError("graph json: relation classes must be nonempty arrays");
      for (const auto& name : group) {
        auto e = out.graph.find_edge(require_string(name, "relation member"));
        if (!e) throw InvalidInputError("graph json: relation names unknown edge");
        if (out.edge_class[*e] != -1) throw InvalidInputError("graph json: relation classes overlap");
        out.edge_class[*e] = cls;
      }
      ++cls;
    }
    for (int c : out.edge_class) {
      if (c == -1) throw InvalidInputError("graph json: relation does not cover every edge");
    }
  }
  return out;
}

Model model_from_json(const Json& doc) {
  auto d = parse_graph_document(doc);
  return {std::move(d.graph), std::move(d.lengths), d.has_weights ? std::optional(std::move(d.weights)) : std::nullopt};
}

ConstrainedType type_from_json(const Json& doc) {
  auto d = parse_graph_document(doc);
  return {std::move(d.graph), std::move(d.weights), std::move(d.edge_class)};
}

Json to_json(const Graph& g) {
  Json vs = Json::array();
  for (const auto& id : g.vertex_ids()) vs.push_back({{"id", id}});
  Json es = Json::array();
  for (const auto& e : g.edges()) es.push_back({{"id", e.id}, {"ends", {g.vertex_id(e.u), g.vertex_id(e.v)}}});
  return {{"vertices", vs}, {"edges", es}};
}

Json to_json(const Model& m) {
  Json j = to_json(m.graph());
  for (int v = 0; v < m.graph().num_vertices(); ++v) {
    if (m.has_weights()) j["vertices"][v]["weight"] = m.weight(v);
  }
  for (int e = 0; e < m.graph().num_edges(); ++e) j["edges"][e]["length"] = m.length(e).str();
  return j;
}

Json to_json(const ConstrainedType& t) {
  Json j = to_json(t.graph());
  for (int v = 0; v < t.graph().num_vertices(); ++v) j["vertices"][v]["weight"] = t.weight(v);
  Json rel = Json::array();
  for (const auto& cls : t.classes()) {
    Json group = Json::array();
    for (int e : cls) group.push_back(t.graph().edge(e).id);
    rel.push_back(group);
  }
  j["relation"] = rel;
  return j;
}

}  // namespace hypertrop
