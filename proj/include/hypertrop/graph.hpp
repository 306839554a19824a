#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypertrop/errors.hpp"
#include "hypertrop/rational.hpp"

namespace hypertrop {

struct Edge {
  std::string id;
  int u = 0;
  int v = 0;

  [[nodiscard]] bool is_loop() const { return u == v; }
  [[nodiscard]] int other(int x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Connected multigraph with loops. Vertices and edges carry opaque string ids;
/// all algorithms address them by dense index.
class Graph {
 public:
  Graph() = default;
  /// Throws InvalidInputError on duplicate ids, dangling endpoints, an empty
  /// vertex set, or a disconnected graph.
  Graph(std::vector<std::string> vertex_ids, std::vector<Edge> edges);

  [[nodiscard]] int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
  [[nodiscard]] int num_edges() const { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const std::string& vertex_id(int v) const { return vertex_ids_.at(v); }
  [[nodiscard]] const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  [[nodiscard]] const Edge& edge(int e) const { return edges_.at(e); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] std::optional<int> find_vertex(std::string_view id) const;
  [[nodiscard]] std::optional<int> find_edge(std::string_view id) const;

  /// Number of half-edges at v; a loop contributes 2.
  [[nodiscard]] int valence(int v) const;
  /// Edge indices incident to v, each loop listed once, in increasing order.
  [[nodiscard]] const std::vector<int>& incident(int v) const { return incidence_.at(v); }
  [[nodiscard]] int num_loops_at(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_ids_ == b.vertex_ids_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

/// Whether a Model rejects metric graphs homeomorphic to a circle. Quotients
/// of valid models may legitimately be circles, so the harmonic module builds
/// its codomains with kAllow.
enum class CirclePolicy { kReject, kAllow };

/// A graph with positive rational edge lengths and optional vertex weights.
class Model {
 public:
  Model() = default;
  Model(Graph graph, std::vector<Rational> lengths, std::optional<std::vector<int>> weights = std::nullopt,
        CirclePolicy circles = CirclePolicy::kReject);

  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] const std::vector<Rational>& lengths() const { return lengths_; }
  [[nodiscard]] const Rational& length(int e) const { return lengths_.at(e); }
  [[nodiscard]] bool has_weights() const { return has_weights_; }
  [[nodiscard]] int weight(int v) const { return weights_.at(v); }
  [[nodiscard]] const std::vector<int>& weights() const { return weights_; }
  [[nodiscard]] std::optional<std::vector<int>> optional_weights() const {
    return has_weights_ ? std::optional(weights_) : std::nullopt;
  }

  friend bool operator==(const Model&, const Model&) = default;

 private:
  Graph graph_;
  std::vector<Rational> lengths_;
  std::vector<int> weights_;
  bool has_weights_ = false;
};

/// Combinatorial type (G, w) together with an equivalence relation on edges.
/// The relation is stored as a class index per edge, numbered in order of
/// first appearance.
class ConstrainedType {
 public:
  ConstrainedType() = default;
  /// An empty `edge_class` means the all-singletons relation.
  ConstrainedType(Graph graph, std::vector<int> weights, std::vector<int> edge_class = {});

  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] const std::vector<int>& weights() const { return weights_; }
  [[nodiscard]] int weight(int v) const { return weights_.at(v); }
  [[nodiscard]] int edge_class(int e) const { return edge_class_.at(e); }
  [[nodiscard]] const std::vector<int>& edge_classes() const { return edge_class_; }
  [[nodiscard]] int num_classes() const { return num_classes_; }
  /// Edge indices grouped by class, in class order.
  [[nodiscard]] std::vector<std::vector<int>> classes() const;

  friend bool operator==(const ConstrainedType&, const ConstrainedType&) = default;

 private:
  Graph graph_;
  std::vector<int> weights_;
  std::vector<int> edge_class_;
  int num_classes_ = 0;
};

/// True if every weight-0 vertex has valence >= 3. Valence-2 vertices whose
/// two edges run to the same neighbour with equal length are loop midpoints
/// and are exempt when `lengths` is supplied.
bool is_stable(const Graph& g, std::span<const int> weights, std::span<const Rational> lengths = {});

/// First Betti number |E| - |V| + 1.
int betti_number(const Graph& g);
int genus(const ConstrainedType& t);
int genus(const Model& m);

/// True when the metric graph of g is homeomorphic to a circle.
bool is_circle(const Graph& g);

Model canonical_loopless_model(const Model& m);
Model add_weight_loops(const Model& m);

std::vector<int> bridges(const Graph& g);
bool is_2_edge_connected(const Graph& g);
/// No bridges; unlike is_2_edge_connected this accepts the edgeless graph.
bool is_bridgeless(const Graph& g);

/// Contracts every edge in `edges`, which must be a union of relation classes.
ConstrainedType contract(const ConstrainedType& t, std::span<const int> edges);
/// Contracts the listed relation classes.
ConstrainedType contract_classes(const ConstrainedType& t, std::span<const int> class_ids);
/// Contracts the given edges of a model, summing lengths nowhere (edges vanish)
/// and merging weights; used for bridge contraction.
Model contract_edges(const Model& m, std::span<const int> edges);

/// Convenience builders used throughout tests and the CLI.
Graph make_graph(int num_vertices, const std::vector<std::pair<int, int>>& edges);
Model unit_model(const Graph& g, std::optional<std::vector<int>> weights = std::nullopt);

}  // namespace hypertrop
