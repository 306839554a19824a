#include "hypertrop/moduli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hypertrop/harmonic.hpp"

namespace hypertrop {

namespace {

// Plain edge-list form used while generating types.
struct RawType {
  int n = 1;
  std::vector<int> weights;
  std::vector<std::pair<int, int>> edges;

  [[nodiscard]] ConstrainedType build() const { return {make_graph(n, edges), weights}; }

  [[nodiscard]] int valence(int v) const {
    int k = 0;
    for (auto [a, b] : edges) k += (a == v) + (b == v);
    return k;
  }
};

RawType raw_of(const ConstrainedType& t) {
  RawType r;
  r.n = t.graph().num_vertices();
  r.weights = t.weights();
  for (const auto& e : t.graph().edges()) r.edges.emplace_back(e.u, e.v);
  return r;
}

// Every type obtained by one inverse contraction: a weight unit turned into
// a loop, or a vertex split in two along a new edge.
std::vector<RawType> uncontractions(const RawType& t) {
  std::vector<RawType> out;
  for (int v = 0; v < t.n; ++v) {
    if (t.weights[v] > 0) {
      RawType r = t;
      r.weights[v] -= 1;
      r.edges.emplace_back(v, v);
      out.push_back(std::move(r));
    }
    // Half-edges at v: (edge index, which end).
    std::vector<std::pair<int, int>> half;
    for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
      if (t.edges[e].first == v) half.emplace_back(e, 0);
      if (t.edges[e].second == v) half.emplace_back(e, 1);
    }
    const int h = static_cast<int>(half.size());
    for (std::uint32_t mask = 0; mask < (1U << h); ++mask) {
      const int moved = std::popcount(mask);
      for (int w1 = 0; w1 <= t.weights[v]; ++w1) {
        const int w2 = t.weights[v] - w1;
        if (w1 == 0 && h - moved + 1 < 3) continue;
        if (w2 == 0 && moved + 1 < 3) continue;
        RawType r = t;
        r.n = t.n + 1;
        r.weights[v] = w1;
        r.weights.push_back(w2);
        for (int i = 0; i < h; ++i) {
          if (!(mask & (1U << i))) continue;
          auto& ed = r.edges[half[i].first];
          (half[i].second == 0 ? ed.first : ed.second) = t.n;
        }
        r.edges.emplace_back(v, t.n);
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

std::vector<int> singleton_classes(int k) {
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  return c;
}

}  // namespace

std::vector<ConstrainedType> enumerate_stable_types(int g) {
  if (g < 2 || g > 5) throw UnsupportedRangeError("stable types: genus must lie in [2, 5]");
  std::map<CanonicalLabel, ConstrainedType> seen;
  RawType root;
  root.weights = {g};
  std::vector<RawType> level{root};
  seen.emplace(canonical_form(root.build()), root.build());
  std::vector<std::pair<int, CanonicalLabel>> order{{0, seen.begin()->first}};
  while (!level.empty()) {
    std::vector<RawType> next;
    for (const auto& t : level) {
      for (auto& child : uncontractions(t)) {
        ConstrainedType ct = child.build();
        auto label = canonical_form(ct);
        if (seen.count(label)) continue;
        order.emplace_back(static_cast<int>(child.edges.size()), label);
        seen.emplace(std::move(label), std::move(ct));
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  std::sort(order.begin(), order.end());
  std::vector<ConstrainedType> out;
  for (const auto& [k, label] : order) out.push_back(seen.at(label));
  return out;
}

Model unit_loopless_model(const ConstrainedType& t) {
  const Model m = unit_model(t.graph(), t.weights());
  return canonical_loopless_model(add_weight_loops(m));
}

std::optional<std::vector<int>> hyperelliptic_relation(const ConstrainedType& t) {
  const Graph& g = t.graph();
  const Model c = unit_loopless_model(t);
  if (c.graph().num_vertices() == 2) return singleton_classes(g.num_edges());
  const auto invs = tree_quotient_involutions(c);
  if (invs.empty()) return std::nullopt;
  const Automorphism& inv = invs.front();
  std::vector<int> cls = singleton_classes(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    if (g.edge(e).is_loop()) continue;
    const int ce = *c.graph().find_edge(g.edge(e).id);
    const int partner = inv.edge_perm[ce];
    if (partner == ce) continue;
    const auto pe = g.find_edge(c.graph().edge(partner).id);
    if (!pe) throw std::logic_error("hyperelliptic relation: involution moves an edge of G onto a half-loop");
    cls[e] = std::min(cls[e], *pe);
    cls[*pe] = std::min(cls[*pe], e);
  }
  return cls;
}

Cell make_cell(ConstrainedType t) {
  Cell c;
  c.dimension = t.num_classes();
  c.label = canonical_form(t);
  c.type = std::move(t);
  return c;
}

namespace {

CellPoset finish_poset(int g, bool two_ec, std::vector<Cell> cells, int max_dim) {
  CellPoset p;
  p.genus = g;
  p.two_edge_connected = two_ec;
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return a.dimension != b.dimension ? a.dimension < b.dimension : a.label < b.label;
  });
  p.cells = std::move(cells);
  p.f_vector.assign(max_dim + 1, 0);
  std::map<CanonicalLabel, int> index;
  for (int i = 0; i < static_cast<int>(p.cells.size()); ++i) {
    index[p.cells[i].label] = i;
    if (p.cells[i].dimension > max_dim) throw std::logic_error("cell dimension exceeds the expected range");
    ++p.f_vector[p.cells[i].dimension];
  }
  std::set<std::pair<int, int>> covers;
  for (int i = 0; i < static_cast<int>(p.cells.size()); ++i) {
    const auto& t = p.cells[i].type;
    for (int c = 0; c < t.num_classes(); ++c) {
      const std::vector<int> one{c};
      auto it = index.find(canonical_form(contract_classes(t, one)));
      if (it == index.end()) {
        p.closed = false;
        continue;
      }
      covers.emplace(i, it->second);
    }
  }
  p.covers.assign(covers.begin(), covers.end());
  return p;
}

}  // namespace

CellPoset enumerate_H2(int g) {
  if (g < 3 || g > 5) throw UnsupportedRangeError("H2: genus must lie in [3, 5]");
  std::vector<Cell> cells;
  for (const auto& t : enumerate_stable_types(g)) {
    if (!is_bridgeless(t.graph())) continue;
    if (auto r = hyperelliptic_relation(t)) cells.push_back(make_cell(ConstrainedType(t.graph(), t.weights(), *r)));
  }
  return finish_poset(g, true, std::move(cells), 2 * g - 1);
}

CellPoset enumerate_H(int g) {
  if (g < 3 || g > 4) throw UnsupportedRangeError("H: genus must lie in [3, 4]");
  std::vector<Cell> cells;
  for (const auto& t : enumerate_stable_types(g)) {
    const auto br = bridges(t.graph());
    std::vector<int> kept;
    for (int e = 0; e < t.graph().num_edges(); ++e) {
      if (!std::binary_search(br.begin(), br.end(), e)) kept.push_back(e);
    }
    const ConstrainedType core = contract(t, br);
    const auto r = hyperelliptic_relation(core);
    if (!r) continue;
    // Bridges are singletons; other edges inherit the relation of the core.
    std::vector<int> cls(t.graph().num_edges());
    for (int e : br) cls[e] = t.graph().num_edges() + e;
    for (std::size_t j = 0; j < kept.size(); ++j) cls[kept[j]] = kept[(*r)[j]];
    cells.push_back(make_cell(ConstrainedType(t.graph(), t.weights(), cls)));
  }
  return finish_poset(g, false, std::move(cells), 3 * g - 3);
}

bool check_full_closure(const CellPoset& p) {
  std::set<CanonicalLabel> labels;
  for (const auto& c : p.cells) labels.insert(c.label);
  for (const auto& c : p.cells) {
    const int k = c.type.num_classes();
    for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
      std::vector<int> chosen;
      for (int i = 0; i < k; ++i) {
        if (mask & (1U << i)) chosen.push_back(i);
      }
      if (!labels.count(canonical_form(contract_classes(c.type, chosen)))) return false;
    }
  }
  return true;
}

std::vector<Cell> maximal_cells(const CellPoset& p) {
  std::vector<char> covered(p.cells.size(), 0);
  for (auto [from, to] : p.covers) covered[to] = 1;
  std::vector<Cell> out;
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    if (!covered[i]) out.push_back(p.cells[i]);
  }
  return out;
}

std::vector<int> tree_degrees(const Tree& t) {
  std::vector<int> deg(t.n, 0);
  for (auto [a, b] : t.edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

std::string tree_canonical_form(const Tree& t) {
  if (t.n == 1) return "()";
  std::vector<std::vector<int>> adj(t.n);
  for (auto [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // Centers by repeated leaf removal.
  std::vector<int> deg = tree_degrees(t);
  std::vector<int> layer;
  for (int v = 0; v < t.n; ++v) {
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = t.n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int u : adj[v]) {
        if (--deg[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::function<std::string(int, int)> encode = [&](int v, int parent) {
    std::vector<std::string> kids;
    for (int u : adj[v]) {
      if (u != parent) kids.push_back(encode(u, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  std::string best;
  for (int c : layer) {
    auto s = encode(c, -1);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

std::vector<Tree> trees_max_deg3(int n) {
  if (n < 1) throw InvalidInputError("trees: n must be positive");
  std::map<std::string, Tree> level{{"()", Tree{}}};
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, Tree> next;
    for (const auto& [key, t] : level) {
      const auto deg = tree_degrees(t);
      for (int v = 0; v < t.n; ++v) {
        if (deg[v] >= 3) continue;
        Tree c = t;
        c.edges.emplace_back(v, t.n);
        c.n = t.n + 1;
        next.emplace(tree_canonical_form(c), std::move(c));
      }
    }
    level = std::move(next);
  }
  std::vector<Tree> out;
  for (auto& [key, t] : level) out.push_back(std::move(t));
  return out;
}

ConstrainedType ladder(const Tree& t) {
  if (t.n < 2) throw InvalidInputError("ladder: tree must have at least two vertices");
  const auto deg = tree_degrees(t);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> cls;
  int next_class = 0;
  for (auto [a, b] : t.edges) {
    edges.emplace_back(a, b);
    edges.emplace_back(a + t.n, b + t.n);
    cls.push_back(next_class);
    cls.push_back(next_class);
    ++next_class;
  }
  for (int v = 0; v < t.n; ++v) {
    if (deg[v] > 3) throw InvalidInputError("ladder: tree has a vertex of degree > 3");
    for (int k = 0; k < 3 - deg[v]; ++k) {
      edges.emplace_back(v, v + t.n);
      cls.push_back(next_class++);
    }
  }
  return {make_graph(2 * t.n, edges), std::vector<int>(2 * t.n, 0), cls};
}

std::vector<Cell> maximal_cells(int g) {
  if (g < 3) throw UnsupportedRangeError("maximal cells: genus must be at least 3");
  if (g > 16) throw UnsupportedRangeError("maximal cells: genus must be at most 16");
  std::vector<Cell> out;
  for (const auto& t : trees_max_deg3(g - 1)) out.push_back(make_cell(ladder(t)));
  return out;
}

Json to_json(const CellPoset& p) {
  Json cells = Json::array();
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    const auto& c = p.cells[i];
    cells.push_back({{"index", i}, {"dimension", c.dimension}, {"label", c.label.digest()}, {"type", to_json(c.type)}});
  }
  Json covers = Json::array();
  for (auto [a, b] : p.covers) covers.push_back({a, b});
  return {{"genus", p.genus},
          {"two_edge_connected", p.two_edge_connected},
          {"num_cells", p.cells.size()},
          {"cells", cells},
          {"covers", covers},
          {"f_vector", p.f_vector},
          {"closed_under_contraction", p.closed}};
}

std::string to_dot(const CellPoset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  std::map<int, std::vector<int>> by_dim;
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    const auto& c = p.cells[i];
    os << "  c" << i << " [label=\"" << c.dimension << ": |V|=" << c.type.graph().num_vertices()
       << " |E|=" << c.type.graph().num_edges() << "\"];\n";
    by_dim[c.dimension].push_back(static_cast<int>(i));
  }
  for (const auto& [d, ids] : by_dim) {
    os << "  { rank=same;";
    for (int i : ids) os << " c" << i << ";";
    os << " }\n";
  }
  for (auto [a, b] : p.covers) os << "  c" << b << " -> c" << a << ";\n";
  os << "}\n";
  return os.str();
}

Json to_json(const Tree& t) {
  Json edges = Json::array();
  for (auto [a, b] : t.edges) edges.push_back({a, b});
  return {{"vertices", t.n}, {"edges", edges}};
}

}  // namespace hypertrop
