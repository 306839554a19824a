#include "hypertrop/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace hypertrop {

namespace {

bool connected(int n, const std::vector<Edge>& edges) {
  if (n == 0) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int components = n;
  for (const auto& e : edges) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

Graph::Graph(std::vector<std::string> vertex_ids, std::vector<Edge> edges)
    : vertex_ids_(std::move(vertex_ids)), edges_(std::move(edges)) {
  const int n = num_vertices();
  if (n == 0) throw InvalidInputError("graph has no vertices");
  std::set<std::string_view> seen;
  for (const auto& id : vertex_ids_) {
    if (!seen.insert(id).second) throw InvalidInputError("duplicate vertex id '" + id + "'");
  }
  seen.clear();
  for (const auto& e : edges_) {
    if (!seen.insert(e.id).second) throw InvalidInputError("duplicate edge id '" + e.id + "'");
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InvalidInputError("edge '" + e.id + "' references a missing vertex");
    }
  }
  if (!connected(n, edges_)) throw InvalidInputError("graph is not connected");
  incidence_.assign(n, {});
  for (int i = 0; i < num_edges(); ++i) {
    incidence_[edges_[i].u].push_back(i);
    if (!edges_[i].is_loop()) incidence_[edges_[i].v].push_back(i);
  }
}

std::optional<int> Graph::find_vertex(std::string_view id) const {
  for (int i = 0; i < num_vertices(); ++i) {
    if (vertex_ids_[i] == id) return i;
  }
  return std::nullopt;
}

std::optional<int> Graph::find_edge(std::string_view id) const {
  for (int i = 0; i < num_edges(); ++i) {
    if (edges_[i].id == id) return i;
  }
  return std::nullopt;
}

int Graph::valence(int v) const {
  int d = 0;
  for (int e : incidence_.at(v)) d += edges_[e].is_loop() ? 2 : 1;
  return d;
}

int Graph::num_loops_at(int v) const {
  return static_cast<int>(std::count_if(incidence_.at(v).begin(), incidence_.at(v).end(),
                                        [&](int e) { return edges_[e].is_loop(); }));
}

namespace {

bool is_loop_midpoint(const Graph& g, int v, std::span<const Rational> lengths) {
  if (lengths.empty() || g.valence(v) != 2 || g.num_loops_at(v) != 0) return false;
  const auto& inc = g.incident(v);
  const Edge& a = g.edge(inc[0]);
  const Edge& b = g.edge(inc[1]);
  return a.other(v) == b.other(v) && lengths[inc[0]] == lengths[inc[1]];
}

}  // namespace

bool is_stable(const Graph& g, std::span<const int> weights, std::span<const Rational> lengths) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (weights[v] < 0) return false;
    if (weights[v] == 0 && g.valence(v) < 3 && !is_loop_midpoint(g, v, lengths)) return false;
  }
  return true;
}

bool is_circle(const Graph& g) {
  if (g.num_edges() == 0) return false;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.valence(v) != 2) return false;
  }
  return true;
}

Model::Model(Graph graph, std::vector<Rational> lengths, std::optional<std::vector<int>> weights,
             CirclePolicy circles)
    : graph_(std::move(graph)), lengths_(std::move(lengths)) {
  if (static_cast<int>(lengths_.size()) != graph_.num_edges()) {
    throw InvalidInputError("model: one length per edge required");
  }
  for (int e = 0; e < graph_.num_edges(); ++e) {
    if (lengths_[e].sign() <= 0) throw InvalidInputError("model: edge '" + graph_.edge(e).id + "' has nonpositive length");
  }
  has_weights_ = weights.has_value();
  weights_ = weights ? std::move(*weights) : std::vector<int>(graph_.num_vertices(), 0);
  if (static_cast<int>(weights_.size()) != graph_.num_vertices()) {
    throw InvalidInputError("model: one weight per vertex required");
  }
  if (has_weights_ && !is_stable(graph_, weights_, lengths_)) {
    throw InvalidInputError("model: weights violate the stability condition");
  }
  const bool weightless = std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 0; });
  if (circles == CirclePolicy::kReject && weightless && is_circle(graph_)) throw CircleGraphError();
}

ConstrainedType::ConstrainedType(Graph graph, std::vector<int> weights, std::vector<int> edge_class)
    : graph_(std::move(graph)), weights_(std::move(weights)) {
  const int m = graph_.num_edges();
  if (static_cast<int>(weights_.size()) != graph_.num_vertices()) {
    throw InvalidInputError("type: one weight per vertex required");
  }
  if (!is_stable(graph_, weights_)) throw InvalidInputError("type: weights violate the stability condition");
  if (edge_class.empty()) {
    edge_class.resize(m);
    std::iota(edge_class.begin(), edge_class.end(), 0);
  }
  if (static_cast<int>(edge_class.size()) != m) throw InvalidInputError("type: relation must cover every edge");
  std::map<int, int> renumber;
  edge_class_.resize(m);
  for (int e = 0; e < m; ++e) {
    auto [it, inserted] = renumber.try_emplace(edge_class[e], static_cast<int>(renumber.size()));
    edge_class_[e] = it->second;
  }
  num_classes_ = static_cast<int>(renumber.size());
}

std::vector<std::vector<int>> ConstrainedType::classes() const {
  std::vector<std::vector<int>> out(num_classes_);
  for (int e = 0; e < graph_.num_edges(); ++e) out[edge_class_[e]].push_back(e);
  return out;
}

int betti_number(const Graph& g) { return g.num_edges() - g.num_vertices() + 1; }

int genus(const ConstrainedType& t) {
  return betti_number(t.graph()) + std::accumulate(t.weights().begin(), t.weights().end(), 0);
}

int genus(const Model& m) {
  return betti_number(m.graph()) + std::accumulate(m.weights().begin(), m.weights().end(), 0);
}

namespace {

struct MutableModel {
  std::vector<std::string> vids;
  std::vector<int> weights;
  std::vector<Edge> edges;
  std::vector<Rational> lengths;
  std::vector<bool> alive_v;
  std::vector<bool> alive_e;

  explicit MutableModel(const Model& m)
      : vids(m.graph().vertex_ids()),
        weights(m.weights()),
        edges(m.graph().edges()),
        lengths(m.lengths()),
        alive_v(vids.size(), true),
        alive_e(edges.size(), true) {}

  [[nodiscard]] std::vector<int> incident(int v) const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      if (alive_e[e] && (edges[e].u == v || edges[e].v == v)) out.push_back(e);
    }
    return out;
  }

  Model finish(bool weighted, CirclePolicy circles) const {
    std::vector<int> new_index(vids.size(), -1);
    std::vector<std::string> ids;
    std::vector<int> w;
    for (int v = 0; v < static_cast<int>(vids.size()); ++v) {
      if (!alive_v[v]) continue;
      new_index[v] = static_cast<int>(ids.size());
      ids.push_back(vids[v]);
      w.push_back(weights[v]);
    }
    std::vector<Edge> es;
    std::vector<Rational> ls;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      if (!alive_e[e]) continue;
      es.push_back({edges[e].id, new_index[edges[e].u], new_index[edges[e].v]});
      ls.push_back(lengths[e]);
    }
    return {Graph(std::move(ids), std::move(es)), std::move(ls),
            weighted ? std::optional(std::move(w)) : std::nullopt, circles};
  }
};

}  // namespace

Model canonical_loopless_model(const Model& m) {
  MutableModel mm(m);
  const int n = static_cast<int>(mm.vids.size());
  // Suppress weight-0 valence-2 points, leaving genuine loop midpoints alone.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!mm.alive_v[v] || mm.weights[v] != 0) continue;
      const auto inc = mm.incident(v);
      if (inc.size() != 2) continue;
      const int e1 = inc[0];
      const int e2 = inc[1];
      if (mm.edges[e1].is_loop() || mm.edges[e2].is_loop()) continue;
      const int a = mm.edges[e1].other(v);
      const int b = mm.edges[e2].other(v);
      if (a == b && mm.lengths[e1] == mm.lengths[e2]) continue;  // loop midpoint
      mm.edges[e1] = {mm.edges[e1].id, a, b};
      mm.lengths[e1] = mm.lengths[e1] + mm.lengths[e2];
      mm.alive_e[e2] = false;
      mm.alive_v[v] = false;
      changed = true;
    }
  }
  // Put a midpoint on every remaining loop.
  const int m_edges = static_cast<int>(mm.edges.size());
  for (int e = 0; e < m_edges; ++e) {
    if (!mm.alive_e[e] || !mm.edges[e].is_loop()) continue;
    const Edge loop = mm.edges[e];
    const Rational half = mm.lengths[e] / Rational(2);
    const int mid = static_cast<int>(mm.vids.size());
    mm.vids.push_back(loop.id + ".mid");
    mm.weights.push_back(0);
    mm.alive_v.push_back(true);
    mm.edges[e] = {loop.id + ".a", loop.u, mid};
    mm.lengths[e] = half;
    mm.edges.push_back({loop.id + ".b", loop.u, mid});
    mm.lengths.push_back(half);
    mm.alive_e.push_back(true);
  }
  return mm.finish(m.has_weights(), CirclePolicy::kAllow);
}

Model add_weight_loops(const Model& m) {
  const auto& w = m.weights();
  if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })) return m;
  std::vector<Edge> edges = m.graph().edges();
  std::vector<Rational> lengths = m.lengths();
  for (int v = 0; v < m.graph().num_vertices(); ++v) {
    for (int k = 1; k <= w[v]; ++k) {
      edges.push_back({m.graph().vertex_id(v) + ".w" + std::to_string(k), v, v});
      lengths.emplace_back(1);
    }
  }
  return {Graph(m.graph().vertex_ids(), std::move(edges)), std::move(lengths)};
}

std::vector<int> bridges(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<int> out;
  int timer = 0;
  // Iterative DFS; the parent edge is skipped by index so parallel edges count.
  struct Frame {
    int v;
    int parent_edge;
    std::size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const int e = inc[f.next++];
        const Edge& edge = g.edge(e);
        if (edge.is_loop() || e == f.parent_edge) continue;
        const int w = edge.other(f.v);
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& p = stack.back();
          low[p.v] = std::min(low[p.v], low[done.v]);
          if (low[done.v] > disc[p.v]) out.push_back(done.parent_edge);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_2_edge_connected(const Graph& g) { return g.num_edges() >= 1 && bridges(g).empty(); }

bool is_bridgeless(const Graph& g) { return bridges(g).empty(); }

namespace {

struct Contraction {
  std::vector<int> vertex_group;  // old vertex -> new vertex
  std::vector<std::string> ids;
  std::vector<int> weights;
  std::vector<int> kept_edges;
  std::vector<Edge> edges;
};

Contraction contract_impl(const Graph& g, std::span<const int> weights, std::span<const int> to_contract) {
  const int n = g.num_vertices();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<int> w(weights.begin(), weights.end());
  std::vector<bool> gone(g.num_edges(), false);
  for (int e : to_contract) {
    if (e < 0 || e >= g.num_edges()) throw InvalidInputError("contract: edge index out of range");
    if (gone[e]) continue;
    gone[e] = true;
    const int a = find(g.edge(e).u);
    const int b = find(g.edge(e).v);
    if (a == b) {
      w[a] += 1;  // loop, possibly created by earlier merges
    } else {
      const int keep = std::min(a, b);
      const int drop = std::max(a, b);
      parent[drop] = keep;
      w[keep] += w[drop];
    }
  }
  Contraction c;
  c.vertex_group.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (find(v) == v) {
      c.vertex_group[v] = static_cast<int>(c.ids.size());
      c.ids.push_back(g.vertex_id(v));
      c.weights.push_back(w[v]);
    }
  }
  for (int v = 0; v < n; ++v) c.vertex_group[v] = c.vertex_group[find(v)];
  for (int e = 0; e < g.num_edges(); ++e) {
    if (gone[e]) continue;
    c.kept_edges.push_back(e);
    c.edges.push_back({g.edge(e).id, c.vertex_group[g.edge(e).u], c.vertex_group[g.edge(e).v]});
  }
  return c;
}

}  // namespace

ConstrainedType contract(const ConstrainedType& t, std::span<const int> edges) {
  std::set<int> chosen(edges.begin(), edges.end());
  for (const auto& cls : t.classes()) {
    const auto hits = std::count_if(cls.begin(), cls.end(), [&](int e) { return chosen.count(e) > 0; });
    if (hits != 0 && hits != static_cast<long>(cls.size())) {
      throw InvalidInputError("contract: edge set is not a union of relation classes");
    }
  }
  std::vector<int> ordered(chosen.begin(), chosen.end());
  auto c = contract_impl(t.graph(), t.weights(), ordered);
  std::vector<int> cls;
  cls.reserve(c.kept_edges.size());
  for (int e : c.kept_edges) cls.push_back(t.edge_class(e));
  return {Graph(std::move(c.ids), std::move(c.edges)), std::move(c.weights), std::move(cls)};
}

ConstrainedType contract_classes(const ConstrainedType& t, std::span<const int> class_ids) {
  std::set<int> wanted(class_ids.begin(), class_ids.end());
  std::vector<int> edges;
  for (int e = 0; e < t.graph().num_edges(); ++e) {
    if (wanted.count(t.edge_class(e))) edges.push_back(e);
  }
  return contract(t, edges);
}

Model contract_edges(const Model& m, std::span<const int> edges) {
  auto c = contract_impl(m.graph(), m.weights(), edges);
  std::vector<Rational> lengths;
  for (int e : c.kept_edges) lengths.push_back(m.length(e));
  return {Graph(std::move(c.ids), std::move(c.edges)), std::move(lengths),
          m.has_weights() ? std::optional(std::move(c.weights)) : std::nullopt, CirclePolicy::kAllow};
}

Graph make_graph(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::string> ids;
  for (int v = 0; v < num_vertices; ++v) ids.push_back("v" + std::to_string(v));
  std::vector<Edge> es;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    es.push_back({"e" + std::to_string(i), edges[i].first, edges[i].second});
  }
  return {std::move(ids), std::move(es)};
}

Model unit_model(const Graph& g, std::optional<std::vector<int>> weights) {
  return {g, std::vector<Rational>(g.num_edges(), Rational(1)), std::move(weights)};
}

}  // namespace hypertrop
