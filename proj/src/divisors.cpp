#include "hypertrop/divisors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace hypertrop {

int Subdivision::locate(int base_edge, const Rational& offset) const {
  const auto& pts = edge_points.at(base_edge);
  const Rational pieces = Rational(static_cast<std::int64_t>(pts.size()) - 1);
  const Rational k = offset * pieces / base.length(base_edge);
  if (!k.is_integer() || k.num() < 0 || k.num() >= static_cast<std::int64_t>(pts.size())) {
    throw InvalidInputError("subdivision: point is not a subdivision vertex");
  }
  return pts[k.num()];
}

Subdivision subdivide(const Model& m, int refinement) {
  if (refinement < 1) throw InvalidInputError("subdivide: refinement must be positive");
  Subdivision s;
  s.base = m;
  std::int64_t l = 1;
  for (const auto& len : m.lengths()) l = lcm_checked(l, len.den());
  s.scale = checked_mul(l, refinement);
  const Graph& g = m.graph();
  std::vector<std::string> ids = g.vertex_ids();
  std::vector<Edge> edges;
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& base = g.edge(e);
    const Rational pieces = m.length(e) * Rational(s.scale);
    const std::int64_t n = pieces.num();
    std::vector<int> pts{base.u};
    for (std::int64_t k = 1; k < n; ++k) {
      pts.push_back(static_cast<int>(ids.size()));
      ids.push_back(base.id + ":" + std::to_string(k));
    }
    pts.push_back(base.v);
    for (std::int64_t k = 0; k < n; ++k) {
      edges.push_back({base.id + "#" + std::to_string(k), pts[k], pts[k + 1]});
    }
    s.edge_points.push_back(std::move(pts));
  }
  s.conductance.assign(edges.size(), 1);
  s.graph = Graph(std::move(ids), std::move(edges));
  return s;
}

std::int64_t degree(const Divisor& d) { return std::accumulate(d.begin(), d.end(), std::int64_t{0}); }

bool is_effective(const Divisor& d) {
  return std::all_of(d.begin(), d.end(), [](std::int64_t x) { return x >= 0; });
}

Divisor div(const Subdivision& s, const RationalFunction& f) {
  if (static_cast<int>(f.size()) != s.num_vertices()) throw InvalidInputError("div: function size mismatch");
  Divisor d(f.size(), 0);
  for (int e = 0; e < s.graph.num_edges(); ++e) {
    const auto& ed = s.graph.edge(e);
    const std::int64_t slope = s.conductance[e] * (f[ed.v] - f[ed.u]);
    d[ed.u] += slope;
    d[ed.v] -= slope;
  }
  return d;
}

namespace {

/// Adjacency view used by the chip-firing routines; loops are dropped.
class ChipGraph {
 public:
  explicit ChipGraph(const Subdivision& s) : n_(s.num_vertices()), adj_(n_) {
    for (int e = 0; e < s.graph.num_edges(); ++e) {
      const auto& ed = s.graph.edge(e);
      if (ed.is_loop()) continue;
      adj_[ed.u].emplace_back(ed.v, s.conductance[e]);
      adj_[ed.v].emplace_back(ed.u, s.conductance[e]);
    }
  }

  [[nodiscard]] int size() const { return n_; }

  // Fire every vertex with in_set true, `times` times.
  void fire(std::vector<std::int64_t>& chips, std::vector<std::int64_t>& script, const std::vector<char>& in_set,
            std::int64_t times) const {
    for (int a = 0; a < n_; ++a) {
      if (!in_set[a]) continue;
      script[a] += times;
      for (auto [b, c] : adj_[a]) {
        if (in_set[b]) continue;
        chips[a] -= c * times;
        chips[b] += c * times;
      }
    }
  }

  Reduction reduce(Divisor chips, int q) const {
    if (static_cast<int>(chips.size()) != n_) throw InvalidInputError("reduce: divisor size mismatch");
    if (q < 0 || q >= n_) throw InvalidInputError("reduce: base point out of range");
    std::vector<std::int64_t> script(n_, 0);

    // Distance layers from q.
    std::vector<int> dist(n_, -1);
    std::vector<int> order{q};
    dist[q] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int a = order[i];
      for (auto [b, c] : adj_[a]) {
        if (dist[b] < 0) {
          dist[b] = dist[a] + 1;
          order.push_back(b);
        }
      }
    }
    const int depth = dist[order.back()];
    for (int layer = depth; layer >= 1; --layer) {
      std::int64_t times = 0;
      for (int v = 0; v < n_; ++v) {
        if (dist[v] != layer || chips[v] >= 0) continue;
        std::int64_t gain = 0;
        for (auto [b, c] : adj_[v]) {
          if (dist[b] == layer - 1) gain += c;
        }
        times = std::max(times, (-chips[v] + gain - 1) / gain);
      }
      if (times == 0) continue;
      std::vector<char> ball(n_, 0);
      for (int v = 0; v < n_; ++v) ball[v] = dist[v] < layer;
      fire(chips, script, ball, times);
    }

    // Dhar burning.
    while (true) {
      std::vector<char> burnt(n_, 0);
      std::vector<std::int64_t> heat(n_, 0);
      std::vector<int> queue{q};
      burnt[q] = 1;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto [b, c] : adj_[queue[i]]) {
          if (burnt[b]) continue;
          heat[b] += c;
          if (heat[b] > chips[b]) {
            burnt[b] = 1;
            queue.push_back(b);
          }
        }
      }
      if (static_cast<int>(queue.size()) == n_) break;
      std::vector<char> unburnt(n_, 0);
      std::int64_t times = -1;
      for (int v = 0; v < n_; ++v) {
        if (burnt[v]) continue;
        unburnt[v] = 1;
        if (heat[v] > 0) {
          const std::int64_t t = chips[v] / heat[v];
          times = times < 0 ? t : std::min(times, t);
        }
      }
      fire(chips, script, unburnt, times);
    }
    return {std::move(chips), std::move(script)};
  }

  // d - E is equivalent to an effective divisor for every effective E of degree k.
  bool rank_at_least(const Divisor& d, int k) const {
    if (k < 0) return true;
    if (degree(d) < k) return false;
    if (k == 0) return reduce(d, 0).divisor[0] >= 0;
    // Multisets v[0] <= ... <= v[k-1], in colex order.
    std::vector<int> v(k, 0);
    Divisor work = d;
    while (true) {
      for (int x : v) work[x] -= 1;
      const int q = v[k - 1];
      const bool ok = reduce(work, q).divisor[q] >= 0;
      for (int x : v) work[x] += 1;
      if (!ok) return false;
      int i = 0;
      while (i < k && v[i] == (i + 1 < k ? v[i + 1] : n_ - 1)) ++i;
      if (i == k) return true;
      ++v[i];
      for (int j = 0; j < i; ++j) v[j] = 0;
    }
  }

 private:
  int n_;
  std::vector<std::vector<std::pair<int, std::int64_t>>> adj_;
};

}  // namespace

Reduction reduce(const Subdivision& s, const Divisor& d, int q) { return ChipGraph(s).reduce(d, q); }

bool rank_at_least(const Subdivision& s, const Divisor& d, int k) { return ChipGraph(s).rank_at_least(d, k); }

int rank(const Subdivision& s, const Divisor& d) {
  const ChipGraph cg(s);
  if (!cg.rank_at_least(d, 0)) return -1;
  int k = 1;
  while (k <= degree(d) && cg.rank_at_least(d, k)) ++k;
  return k - 1;
}

namespace {

Divisor lift_base_chips(const Subdivision& s, const std::vector<std::int64_t>& base_chips) {
  if (static_cast<int>(base_chips.size()) != s.base.graph().num_vertices()) {
    throw InvalidInputError("rank: divisor must be supported on base vertices");
  }
  Divisor d(s.num_vertices(), 0);
  std::copy(base_chips.begin(), base_chips.end(), d.begin());
  return d;
}

}  // namespace

int rank(const Model& m, const std::vector<std::int64_t>& base_chips, bool guard) {
  const Subdivision s1 = subdivide(m, 1);
  const int r = rank(s1, lift_base_chips(s1, base_chips));
  if (guard) {
    const Subdivision s2 = subdivide(m, 2);
    if (rank(s2, lift_base_chips(s2, base_chips)) != r) {
      throw std::runtime_error("rank: value changed under refinement");
    }
  }
  return r;
}

std::vector<std::pair<int, int>> rank_one_pairs(const Model& loopless) {
  const Subdivision s = subdivide(loopless, 1);
  const ChipGraph cg(s);
  const int n = loopless.graph().num_vertices();
  std::vector<std::pair<int, int>> out;
  Divisor d(s.num_vertices(), 0);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x <= y; ++x) {
      d[x] += 1;
      d[y] += 1;
      if (cg.rank_at_least(d, 1) && !cg.rank_at_least(d, 2)) out.emplace_back(x, y);
      d[x] -= 1;
      d[y] -= 1;
    }
  }
  return out;
}

RankHyperellipticity is_hyperelliptic_by_rank(const Model& m, bool guard) {
  RankHyperellipticity out;
  out.model = canonical_loopless_model(m.has_weights() ? add_weight_loops(m) : m);
  const Subdivision s = subdivide(out.model, 1);
  const ChipGraph cg(s);
  const int n = out.model.graph().num_vertices();
  Divisor d(s.num_vertices(), 0);
  for (int y = 0; y < n && !out.witness; ++y) {
    for (int x = 0; x <= y; ++x) {
      d[x] += 1;
      d[y] += 1;
      const bool hit = cg.rank_at_least(d, 1) && !cg.rank_at_least(d, 2);
      d[x] -= 1;
      d[y] -= 1;
      if (hit) {
        out.witness = std::pair(x, y);
        break;
      }
    }
  }
  out.hyperelliptic = out.witness.has_value();
  if (out.witness && guard) {
    std::vector<std::int64_t> chips(n, 0);
    chips[out.witness->first] += 1;
    chips[out.witness->second] += 1;
    const Subdivision s2 = subdivide(out.model, 2);
    if (rank(s2, lift_base_chips(s2, chips)) != 1) throw std::runtime_error("rank: value changed under refinement");
  }
  return out;
}

Divisor divisor_from_json(const Subdivision& s, const Json& doc) {
  if (!doc.is_object() || !doc.contains("chips") || !doc.at("chips").is_object()) {
    throw InvalidInputError("divisor json: expected {\"chips\":{...}}");
  }
  Divisor d(s.num_vertices(), 0);
  for (const auto& [id, value] : doc.at("chips").items()) {
    auto v = s.graph.find_vertex(id);
    if (!v) throw InvalidInputError("divisor json: unknown point '" + id + "'");
    if (!value.is_number_integer()) throw InvalidInputError("divisor json: chip counts must be integers");
    d[*v] += value.get<std::int64_t>();
  }
  return d;
}

Json divisor_to_json(const Subdivision& s, const Divisor& d) {
  Json chips = Json::object();
  for (int v = 0; v < s.num_vertices(); ++v) {
    if (d[v] != 0) chips[s.graph.vertex_id(v)] = d[v];
  }
  return {{"chips", chips}};
}

RationalFunction function_from_json(const Subdivision& s, const Json& doc) {
  if (!doc.is_object() || !doc.contains("values") || !doc.at("values").is_object()) {
    throw InvalidInputError("function json: expected {\"values\":{...}}");
  }
  RationalFunction f(s.num_vertices(), 0);
  std::vector<char> seen(s.num_vertices(), 0);
  for (const auto& [id, value] : doc.at("values").items()) {
    auto v = s.graph.find_vertex(id);
    if (!v) throw InvalidInputError("function json: unknown point '" + id + "'");
    if (!value.is_number_integer()) throw InvalidInputError("function json: values must be integers");
    f[*v] = value.get<std::int64_t>();
    seen[*v] = 1;
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw InvalidInputError("function json: every subdivision point needs a value");
  }
  return f;
}

}  // namespace hypertrop
