#include "hypertrop/harmonic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hypertrop {

namespace {

void require_loopless(const Model& m, const char* what) {
  for (const auto& e : m.graph().edges()) {
    if (e.is_loop()) throw InvalidInputError(std::string(what) + ": model must be loopless");
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ModelMorphism::ModelMorphism(Model domain, Model codomain, std::vector<int> vertex_map,
                             std::vector<EdgeImage> edge_map)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)) {
  require_loopless(domain_, "morphism domain");
  require_loopless(codomain_, "morphism codomain");
  const Graph& g = domain_.graph();
  const Graph& h = codomain_.graph();
  if (static_cast<int>(vertex_map_.size()) != g.num_vertices() ||
      static_cast<int>(edge_map_.size()) != g.num_edges()) {
    throw InvalidInputError("morphism: maps must cover every vertex and edge");
  }
  for (int x : vertex_map_) {
    if (x < 0 || x >= h.num_vertices()) throw InvalidInputError("morphism: vertex image out of range");
  }
  slopes_.assign(g.num_edges(), 0);
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const EdgeImage& im = edge_map_[e];
    const int a = vertex_map_[ed.u];
    const int b = vertex_map_[ed.v];
    if (im.collapsed) {
      if (im.target < 0 || im.target >= h.num_vertices() || a != im.target || b != im.target) {
        throw InvalidInputError("morphism: collapsed edge '" + ed.id + "' must have both ends over its image");
      }
      continue;
    }
    if (im.target < 0 || im.target >= h.num_edges()) throw InvalidInputError("morphism: edge image out of range");
    const Edge& te = h.edge(im.target);
    if (!((te.u == a && te.v == b) || (te.u == b && te.v == a))) {
      throw InvalidInputError("morphism: edge '" + ed.id + "' does not join the images of its ends");
    }
    const Rational mu = codomain_.length(im.target) / domain_.length(e);
    if (!mu.is_integer() || mu.num() <= 0) {
      throw InvalidInputError("morphism: slope on edge '" + ed.id + "' is not a positive integer");
    }
    slopes_[e] = mu.num();
  }
}

NonHarmonicError::NonHarmonicError(int vertex_, int edge_a_, int edge_b_)
    : PreconditionError("morphism is not harmonic at vertex " + std::to_string(vertex_)),
      vertex(vertex_),
      edge_a(edge_a_),
      edge_b(edge_b_) {}

std::int64_t horizontal_multiplicity(const ModelMorphism& phi, int x) {
  const Graph& g = phi.domain().graph();
  const Graph& h = phi.codomain().graph();
  const int y = phi.vertex_image(x);
  std::map<int, std::int64_t> sums;
  for (int e2 : h.incident(y)) sums[e2] = 0;
  for (int e : g.incident(x)) {
    const auto& im = phi.edge_image(e);
    if (!im.collapsed) sums[im.target] += phi.slope(e);
  }
  if (sums.empty()) return 0;
  const auto first = sums.begin();
  for (const auto& [e2, s] : sums) {
    if (s != first->second) throw NonHarmonicError(x, first->first, e2);
  }
  return first->second;
}

bool is_harmonic(const ModelMorphism& phi) {
  try {
    for (int x = 0; x < phi.domain().graph().num_vertices(); ++x) (void)horizontal_multiplicity(phi, x);
  } catch (const NonHarmonicError&) {
    return false;
  }
  return true;
}

std::int64_t degree(const ModelMorphism& phi) {
  for (int x = 0; x < phi.domain().graph().num_vertices(); ++x) (void)horizontal_multiplicity(phi, x);
  if (phi.codomain().graph().num_edges() == 0) return 0;
  std::int64_t d = 0;
  for (int e = 0; e < phi.domain().graph().num_edges(); ++e) {
    const auto& im = phi.edge_image(e);
    if (!im.collapsed && im.target == 0) d += phi.slope(e);
  }
  return d;
}

bool is_nondegenerate(const ModelMorphism& phi) {
  for (int x = 0; x < phi.domain().graph().num_vertices(); ++x) {
    if (horizontal_multiplicity(phi, x) <= 0) return false;
  }
  return true;
}

ModelMorphism identity_morphism(const Model& m) {
  std::vector<int> vm(m.graph().num_vertices());
  std::iota(vm.begin(), vm.end(), 0);
  std::vector<EdgeImage> em;
  for (int e = 0; e < m.graph().num_edges(); ++e) em.push_back({false, e});
  return {m, m, std::move(vm), std::move(em)};
}

ModelMorphism morphism_from_json(const Model& domain, const Model& codomain, const Json& doc) {
  if (!doc.is_object() || !doc.contains("vertex_map") || !doc.contains("edge_map") ||
      !doc.at("vertex_map").is_object() || !doc.at("edge_map").is_object()) {
    throw InvalidInputError("morphism json: expected {\"vertex_map\":{...},\"edge_map\":{...}}");
  }
  const Graph& g = domain.graph();
  const Graph& h = codomain.graph();
  std::vector<int> vm(g.num_vertices(), -1);
  std::vector<EdgeImage> em(g.num_edges(), {true, -1});
  for (const auto& [id, target] : doc.at("vertex_map").items()) {
    auto v = g.find_vertex(id);
    if (!v || !target.is_string()) throw InvalidInputError("morphism json: bad vertex_map entry '" + id + "'");
    auto t = h.find_vertex(target.get<std::string>());
    if (!t) throw InvalidInputError("morphism json: unknown codomain vertex for '" + id + "'");
    vm[*v] = *t;
  }
  for (const auto& [id, target] : doc.at("edge_map").items()) {
    auto e = g.find_edge(id);
    if (!e || !target.is_string()) throw InvalidInputError("morphism json: bad edge_map entry '" + id + "'");
    const auto name = target.get<std::string>();
    if (auto te = h.find_edge(name)) {
      em[*e] = {false, *te};
    } else if (auto tv = h.find_vertex(name)) {
      em[*e] = {true, *tv};
    } else {
      throw InvalidInputError("morphism json: unknown codomain cell '" + name + "'");
    }
  }
  if (std::find(vm.begin(), vm.end(), -1) != vm.end()) throw InvalidInputError("morphism json: vertex_map incomplete");
  for (const auto& im : em) {
    if (im.target < 0) throw InvalidInputError("morphism json: edge_map incomplete");
  }
  return {domain, codomain, std::move(vm), std::move(em)};
}

Json to_json(const ModelMorphism& phi) {
  const Graph& g = phi.domain().graph();
  const Graph& h = phi.codomain().graph();
  Json vm = Json::object();
  Json em = Json::object();
  Json slopes = Json::object();
  for (int v = 0; v < g.num_vertices(); ++v) vm[g.vertex_id(v)] = h.vertex_id(phi.vertex_image(v));
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& im = phi.edge_image(e);
    em[g.edge(e).id] = im.collapsed ? h.vertex_id(im.target) : h.edge(im.target).id;
    if (!im.collapsed) slopes[g.edge(e).id] = phi.slope(e);
  }
  return {{"vertex_map", vm}, {"edge_map", em}, {"slopes", slopes}};
}

Automorphism identity_automorphism(const Model& m) {
  Automorphism a;
  a.vertex_perm.resize(m.graph().num_vertices());
  a.edge_perm.resize(m.graph().num_edges());
  std::iota(a.vertex_perm.begin(), a.vertex_perm.end(), 0);
  std::iota(a.edge_perm.begin(), a.edge_perm.end(), 0);
  return a;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  Automorphism c;
  c.vertex_perm.resize(b.vertex_perm.size());
  c.edge_perm.resize(b.edge_perm.size());
  for (std::size_t v = 0; v < b.vertex_perm.size(); ++v) c.vertex_perm[v] = a.vertex_perm[b.vertex_perm[v]];
  for (std::size_t e = 0; e < b.edge_perm.size(); ++e) c.edge_perm[e] = a.edge_perm[b.edge_perm[e]];
  return c;
}

Automorphism inverse(const Automorphism& a) {
  Automorphism c;
  c.vertex_perm.resize(a.vertex_perm.size());
  c.edge_perm.resize(a.edge_perm.size());
  for (std::size_t v = 0; v < a.vertex_perm.size(); ++v) c.vertex_perm[a.vertex_perm[v]] = static_cast<int>(v);
  for (std::size_t e = 0; e < a.edge_perm.size(); ++e) c.edge_perm[a.edge_perm[e]] = static_cast<int>(e);
  return c;
}

bool is_automorphism(const Model& m, const Automorphism& a) {
  const Graph& g = m.graph();
  const int n = g.num_vertices();
  const int k = g.num_edges();
  if (static_cast<int>(a.vertex_perm.size()) != n || static_cast<int>(a.edge_perm.size()) != k) return false;
  std::vector<char> seen_v(n, 0);
  std::vector<char> seen_e(k, 0);
  for (int v = 0; v < n; ++v) {
    const int t = a.vertex_perm[v];
    if (t < 0 || t >= n || seen_v[t]) return false;
    seen_v[t] = 1;
    if (m.weight(v) != m.weight(t)) return false;
  }
  for (int e = 0; e < k; ++e) {
    const int f = a.edge_perm[e];
    if (f < 0 || f >= k || seen_e[f]) return false;
    seen_e[f] = 1;
    const Edge& x = g.edge(e);
    const Edge& y = g.edge(f);
    const int pu = a.vertex_perm[x.u];
    const int pv = a.vertex_perm[x.v];
    if (!((y.u == pu && y.v == pv) || (y.u == pv && y.v == pu))) return false;
    if (m.length(e) != m.length(f)) return false;
  }
  return true;
}

bool is_involution(const Automorphism& a) {
  const Automorphism sq = compose(a, a);
  bool identity = true;
  for (std::size_t v = 0; v < a.vertex_perm.size(); ++v) identity = identity && a.vertex_perm[v] == static_cast<int>(v);
  for (std::size_t e = 0; e < a.edge_perm.size(); ++e) identity = identity && a.edge_perm[e] == static_cast<int>(e);
  if (identity) return false;
  for (std::size_t v = 0; v < sq.vertex_perm.size(); ++v) {
    if (sq.vertex_perm[v] != static_cast<int>(v)) return false;
  }
  for (std::size_t e = 0; e < sq.edge_perm.size(); ++e) {
    if (sq.edge_perm[e] != static_cast<int>(e)) return false;
  }
  return true;
}

namespace {

/// Pairwise edge data of a loopless model: edge indices and sorted lengths
/// between every ordered vertex pair.
class PairTable {
 public:
  explicit PairTable(const Model& m) : m_(m), n_(m.graph().num_vertices()) {
    edges_.assign(n_ * n_, {});
    lengths_.assign(n_ * n_, {});
    for (int e = 0; e < m.graph().num_edges(); ++e) {
      const Edge& ed = m.graph().edge(e);
      edges_[ed.u * n_ + ed.v].push_back(e);
      if (ed.u != ed.v) edges_[ed.v * n_ + ed.u].push_back(e);
    }
    for (int i = 0; i < n_ * n_; ++i) {
      for (int e : edges_[i]) lengths_[i].push_back(m.length(e));
      std::sort(lengths_[i].begin(), lengths_[i].end());
    }
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const std::vector<int>& edges(int a, int b) const { return edges_[a * n_ + b]; }
  [[nodiscard]] const std::vector<Rational>& lengths(int a, int b) const { return lengths_[a * n_ + b]; }
  [[nodiscard]] bool vertex_compatible(int a, int b) const {
    return m_.weight(a) == m_.weight(b) && m_.graph().valence(a) == m_.graph().valence(b) &&
           lengths(a, a) == lengths(b, b);
  }

 private:
  const Model& m_;
  int n_;
  std::vector<std::vector<int>> edges_;
  std::vector<std::vector<Rational>> lengths_;
};

// Enumerates all edge bijections compatible with a vertex permutation.
void extend_edges(const Model& m, const PairTable& pt, const std::vector<int>& sigma, std::vector<Automorphism>& out) {
  const int n = pt.n();
  // Each block: source edges and target edges of one length between one pair.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const auto& src = pt.edges(a, b);
      if (src.empty()) continue;
      const auto& dst = pt.edges(sigma[a], sigma[b]);
      std::map<Rational, std::pair<std::vector<int>, std::vector<int>>> by_len;
      for (int e : src) by_len[m.length(e)].first.push_back(e);
      for (int e : dst) by_len[m.length(e)].second.push_back(e);
      for (auto& [len, blk] : by_len) blocks.push_back(std::move(blk));
    }
  }
  std::vector<std::vector<int>> perms;
  for (auto& blk : blocks) perms.push_back(blk.second);
  Automorphism a;
  a.vertex_perm = sigma;
  a.edge_perm.assign(m.graph().num_edges(), -1);
  // Odometer over the permutations of every block.
  while (true) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (std::size_t j = 0; j < blocks[i].first.size(); ++j) a.edge_perm[blocks[i].first[j]] = perms[i][j];
    }
    out.push_back(a);
    std::size_t i = 0;
    while (i < perms.size() && !std::next_permutation(perms[i].begin(), perms[i].end())) ++i;
    if (i == perms.size()) break;
  }
}

void vertex_search(const Model& m, const PairTable& pt, std::vector<int>& sigma, std::vector<char>& used, int i,
                   std::vector<Automorphism>& out) {
  const int n = pt.n();
  if (i == n) {
    extend_edges(m, pt, sigma, out);
    return;
  }
  for (int t = 0; t < n; ++t) {
    if (used[t] || !pt.vertex_compatible(i, t)) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) ok = pt.lengths(i, j) == pt.lengths(t, sigma[j]);
    if (!ok) continue;
    sigma[i] = t;
    used[t] = 1;
    vertex_search(m, pt, sigma, used, i + 1, out);
    used[t] = 0;
  }
  sigma[i] = -1;
}

}  // namespace

std::vector<Automorphism> automorphisms(const Model& m) {
  require_loopless(m, "automorphisms");
  const PairTable pt(m);
  std::vector<int> sigma(pt.n(), -1);
  std::vector<char> used(pt.n(), 0);
  std::vector<Automorphism> out;
  vertex_search(m, pt, sigma, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Automorphism> generate_group(const Model& m, std::span<const Automorphism> generators) {
  for (const auto& g : generators) {
    if (!is_automorphism(m, g)) throw InvalidInputError("group generator is not a length-preserving automorphism");
  }
  std::set<Automorphism> group{identity_automorphism(m)};
  std::vector<Automorphism> queue(group.begin(), group.end());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : generators) {
      Automorphism x = compose(g, queue[i]);
      if (group.insert(x).second) queue.push_back(std::move(x));
    }
  }
  return {group.begin(), group.end()};
}

std::vector<std::vector<Automorphism>> subgroups(const std::vector<Automorphism>& group) {
  const int n = static_cast<int>(group.size());
  std::map<Automorphism, int> index;
  for (int i = 0; i < n; ++i) index[group[i]] = i;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[i][j] = index.at(compose(group[i], group[j]));
  }
  int id = 0;
  for (int i = 0; i < n; ++i) {
    if (table[i][i] == i) id = i;
  }
  auto closure = [&](std::vector<char> members) {
    std::vector<int> list;
    for (int i = 0; i < n; ++i) {
      if (members[i]) list.push_back(i);
    }
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = 0; b <= a; ++b) {
        for (int p : {table[list[a]][list[b]], table[list[b]][list[a]]}) {
          if (!members[p]) {
            members[p] = 1;
            list.push_back(p);
          }
        }
      }
    }
    return members;
  };
  std::vector<char> trivial(n, 0);
  trivial[id] = 1;
  std::set<std::vector<char>> seen{trivial};
  std::vector<std::vector<char>> queue{trivial};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int g = 0; g < n; ++g) {
      if (queue[i][g]) continue;
      auto next = queue[i];
      next[g] = 1;
      next = closure(std::move(next));
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<std::vector<Automorphism>> out;
  for (const auto& mask : seen) {
    std::vector<Automorphism> h;
    for (int i = 0; i < n; ++i) {
      if (mask[i]) h.push_back(group[i]);
    }
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  return out;
}

Quotient quotient(const Model& m, std::span<const Automorphism> generators) {
  require_loopless(m, "quotient");
  const Graph& g = m.graph();
  auto group = generate_group(m, generators);
  UnionFind vuf(g.num_vertices());
  UnionFind euf(g.num_edges());
  for (const auto& a : group) {
    for (int v = 0; v < g.num_vertices(); ++v) vuf.unite(v, a.vertex_perm[v]);
    for (int e = 0; e < g.num_edges(); ++e) euf.unite(e, a.edge_perm[e]);
  }
  std::vector<int> vindex(g.num_vertices(), -1);
  std::vector<std::string> ids;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (vuf.find(v) == v) {
      vindex[v] = static_cast<int>(ids.size());
      ids.push_back(g.vertex_id(v));
    }
  }
  std::vector<int> vertex_map(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) vertex_map[v] = vindex[vuf.find(v)];

  std::vector<int> orbit_size(g.num_edges(), 0);
  for (int e = 0; e < g.num_edges(); ++e) ++orbit_size[euf.find(e)];
  std::vector<int> eindex(g.num_edges(), -1);
  std::vector<Edge> edges;
  std::vector<Rational> lengths;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (euf.find(e) != e) continue;
    const int a = vertex_map[g.edge(e).u];
    const int b = vertex_map[g.edge(e).v];
    if (a == b) continue;
    const auto stab = static_cast<std::int64_t>(group.size()) / orbit_size[e];
    eindex[e] = static_cast<int>(edges.size());
    edges.push_back({g.edge(e).id, a, b});
    lengths.push_back(m.length(e) * Rational(stab));
  }
  std::vector<EdgeImage> edge_map(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    const int rep = euf.find(e);
    edge_map[e] = eindex[rep] < 0 ? EdgeImage{true, vertex_map[g.edge(e).u]} : EdgeImage{false, eindex[rep]};
  }
  Model q(Graph(std::move(ids), std::move(edges)), std::move(lengths), std::nullopt, CirclePolicy::kAllow);
  ModelMorphism phi(m, q, std::move(vertex_map), std::move(edge_map));
  return {std::move(q), std::move(phi), std::move(group)};
}

namespace {

// Builds the unique edge involution over sigma that can give a tree
// quotient, or nothing if no such choice exists.
std::optional<Automorphism> tree_candidate(const Model& m, const PairTable& pt, const std::vector<int>& sigma) {
  const int n = pt.n();
  Automorphism a;
  a.vertex_perm = sigma;
  a.edge_perm.assign(m.graph().num_edges(), -1);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const auto& src = pt.edges(x, y);
      if (src.empty()) continue;
      if (sigma[x] == y) {
        for (int e : src) a.edge_perm[e] = e;
      } else if (sigma[x] == x && sigma[y] == y) {
        if (src.size() == 1) {
          a.edge_perm[src[0]] = src[0];
        } else if (src.size() == 2 && m.length(src[0]) == m.length(src[1])) {
          a.edge_perm[src[0]] = src[1];
          a.edge_perm[src[1]] = src[0];
        } else {
          return std::nullopt;
        }
      } else {
        const auto& dst = pt.edges(sigma[x], sigma[y]);
        if (src.size() != 1 || dst.size() != 1) return std::nullopt;
        a.edge_perm[src[0]] = dst[0];
      }
    }
  }
  // Quotient is a tree iff #edge orbits (uncollapsed) = #vertex orbits - 1.
  int vorbits = 0;
  for (int v = 0; v < n; ++v) vorbits += sigma[v] >= v;
  int eorbits = 0;
  for (int e = 0; e < m.graph().num_edges(); ++e) {
    const Edge& ed = m.graph().edge(e);
    if (sigma[ed.u] == ed.v) continue;
    eorbits += a.edge_perm[e] >= e;
  }
  if (eorbits != vorbits - 1 || !is_involution(a)) return std::nullopt;
  return a;
}

void involution_search(const Model& m, const PairTable& pt, std::vector<int>& sigma, int i,
                       std::vector<Automorphism>& out) {
  const int n = pt.n();
  while (i < n && sigma[i] >= 0) ++i;
  if (i == n) {
    if (auto a = tree_candidate(m, pt, sigma)) out.push_back(std::move(*a));
    return;
  }
  auto consistent = [&](int v) {
    for (int j = 0; j < n; ++j) {
      if (sigma[j] >= 0 && pt.lengths(v, j) != pt.lengths(sigma[v], sigma[j])) return false;
    }
    return true;
  };
  for (int t = i; t < n; ++t) {
    if (sigma[t] >= 0 || !pt.vertex_compatible(i, t)) continue;
    sigma[i] = t;
    sigma[t] = i;
    if (consistent(i) && consistent(t)) involution_search(m, pt, sigma, i + 1, out);
    sigma[i] = -1;
    sigma[t] = -1;
  }
}

Model hyperelliptic_input(const Model& m) {
  Model c = canonical_loopless_model(m.has_weights() ? add_weight_loops(m) : m);
  for (int v = 0; v < c.graph().num_vertices(); ++v) {
    if (c.graph().valence(v) == 1) throw InvalidInputError("hyperelliptic: metric graph has a point of valence 1");
  }
  return c;
}

}  // namespace

std::vector<Automorphism> tree_quotient_involutions(const Model& loopless) {
  require_loopless(loopless, "involutions");
  const PairTable pt(loopless);
  std::vector<int> sigma(pt.n(), -1);
  std::vector<Automorphism> out;
  involution_search(loopless, pt, sigma, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

HyperellipticDecision is_hyperelliptic(const Model& m) {
  HyperellipticDecision d;
  d.model = hyperelliptic_input(m);
  const Model& c = d.model;
  const Graph& g = c.graph();
  if (g.num_vertices() == 2) {
    d.hyperelliptic = true;
    d.two_vertex = true;
    return d;
  }
  const auto br = bridges(g);
  const Model contracted = br.empty() ? c : contract_edges(c, br);
  const auto invs = tree_quotient_involutions(contracted);
  if (invs.empty()) return d;

  Automorphism inv = invs.front();
  if (!br.empty()) {
    // Lift to the uncontracted model, fixing every bridge pointwise.
    UnionFind uf(g.num_vertices());
    for (int e : br) uf.unite(g.edge(e).u, g.edge(e).v);
    std::vector<int> group_index(g.num_vertices(), -1);
    std::vector<std::vector<int>> members;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (uf.find(v) == v) {
        group_index[v] = static_cast<int>(members.size());
        members.emplace_back();
      }
    }
    for (int v = 0; v < g.num_vertices(); ++v) members[group_index[uf.find(v)]].push_back(v);
    std::vector<int> kept;
    for (int e = 0; e < g.num_edges(); ++e) {
      if (!std::binary_search(br.begin(), br.end(), e)) kept.push_back(e);
    }
    Automorphism lifted = identity_automorphism(c);
    for (int v = 0; v < g.num_vertices(); ++v) {
      const int grp = group_index[uf.find(v)];
      const int img = inv.vertex_perm[grp];
      if (members[grp].size() > 1 || members[img].size() > 1) {
        if (img != grp) throw std::logic_error("hyperelliptic: involution moves a contracted bridge vertex");
        continue;
      }
      lifted.vertex_perm[v] = members[img][0];
    }
    for (std::size_t j = 0; j < kept.size(); ++j) lifted.edge_perm[kept[j]] = kept[inv.edge_perm[j]];
    if (!is_automorphism(c, lifted) || !is_involution(lifted)) {
      throw std::logic_error("hyperelliptic: involution does not lift across bridges");
    }
    inv = std::move(lifted);
  }
  d.hyperelliptic = true;
  d.involution = inv;
  const std::vector<Automorphism> gens{inv};
  d.quotient = quotient(c, gens);
  return d;
}

std::optional<bool> hyperelliptic_involution_unique(const Model& m) {
  const Model c = hyperelliptic_input(m);
  if (c.graph().num_vertices() == 2) return std::nullopt;
  if (!is_2_edge_connected(c.graph())) throw PreconditionError("involution uniqueness: model is not 2-edge-connected");
  const auto invs = tree_quotient_involutions(c);
  if (invs.empty()) throw PreconditionError("involution uniqueness: model is not hyperelliptic");
  return invs.size() == 1;
}

Json to_json(const Model& m, const Automorphism& a) {
  const Graph& g = m.graph();
  Json vm = Json::object();
  Json em = Json::object();
  for (int v = 0; v < g.num_vertices(); ++v) vm[g.vertex_id(v)] = g.vertex_id(a.vertex_perm[v]);
  for (int e = 0; e < g.num_edges(); ++e) em[g.edge(e).id] = g.edge(a.edge_perm[e]).id;
  return {{"vertex_map", vm}, {"edge_map", em}};
}

}  // namespace hypertrop
