#include <doctest.h>

#include <random>
#include <set>

#include "hypertrop/errors.hpp"
#include "hypertrop/newton.hpp"

using namespace hypertrop;

namespace {

std::int64_t binom(std::int64_t n, std::int64_t k) {
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Dual graph of the triangulation with leaves pruned; a bridge is an edge
// whose removal disconnects what is left.
bool core_has_bridge(const LatticeTriangulation& t) {
  const int n = static_cast<int>(t.triangles.size());
  std::vector<std::pair<int, int>> adj;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int shared = 0;
      for (const auto& p : t.triangles[i]) shared += std::count(t.triangles[j].begin(), t.triangles[j].end(), p);
      if (shared == 2) adj.emplace_back(i, j);
    }
  }
  std::vector<char> alive(n, 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      int deg = 0;
      for (auto [a, b] : adj) deg += (alive[a] && alive[b] && (a == v || b == v));
      if (deg <= 1) {
        alive[v] = 0;
        changed = true;
      }
    }
  }
  const auto reach = [&](int skip) {
    int start = -1;
    for (int v = 0; v < n; ++v) {
      if (alive[v]) start = v;
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int e = 0; e < static_cast<int>(adj.size()); ++e) {
        auto [a, b] = adj[e];
        if (e == skip || !alive[a] || !alive[b]) continue;
        const int o = a == v ? b : (b == v ? a : -1);
        if (o >= 0 && !seen[o]) {
          seen[o] = 1;
          stack.push_back(o);
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (alive[v] && !seen[v]) return false;
    }
    return true;
  };
  for (int e = 0; e < static_cast<int>(adj.size()); ++e) {
    if (alive[adj[e].first] && alive[adj[e].second] && !reach(e)) return true;
  }
  return false;
}

bool has_segment(const LatticeTriangulation& t, LatticePoint a, LatticePoint b) {
  for (const auto& tri : t.triangles) {
    if (std::count(tri.begin(), tri.end(), a) && std::count(tri.begin(), tri.end(), b)) return true;
  }
  return false;
}

int nonhorizontal_edges(const LatticeTriangulation& t) {
  std::set<std::pair<LatticePoint, LatticePoint>> segs;
  for (const auto& tri : t.triangles) {
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (tri[i].y != tri[j].y) segs.insert({tri[i], tri[j]});
      }
    }
  }
  return static_cast<int>(segs.size());
}

}  // namespace

TEST_CASE("trapezoids") {
  CHECK(trapezoid_triangulations(0, 1, 0, 1).size() == 2);
  CHECK(trapezoid_triangulations(0, 2, 0, 1).size() == 3);
  CHECK_THROWS_AS(trapezoid_triangulations(1, 1, 0, 2), InvalidInputError);
  CHECK_THROWS_AS(trapezoid_triangulations(0, 2, 3, 2), InvalidInputError);
  for (int bw = 1; bw <= 5; ++bw) {
    for (int tw = 1; tw <= 5; ++tw) {
      const auto ts = trapezoid_triangulations(2, 2 + bw, -1, -1 + tw);
      CHECK(static_cast<std::int64_t>(ts.size()) == binom(bw + tw, bw));
      for (const auto& t : ts) {
        CHECK(is_valid_triangulation(t));
        CHECK(nonhorizontal_edges(t) == bw + tw + 1);
      }
      // Independent count by flips.
      const auto all = flip_closure(ts.front());
      CHECK(all.size() == ts.size());
    }
  }
}

TEST_CASE("census structure") {
  const auto g3 = bridgeless_core_triangulations(3);
  std::map<std::pair<bool, bool>, int> by_case;
  for (const auto& t : g3) {
    CHECK(is_valid_triangulation(t));
    CHECK_FALSE(core_has_bridge(t));
    CHECK(has_segment(t, {0, 2}, {1, 0}) == t.uses_e1);
    CHECK(has_segment(t, {0, 2}, {7, 0}) == t.uses_e2);
    ++by_case[{t.uses_e1, t.uses_e2}];
  }
  CHECK(by_case[{false, false}] == 495);
  CHECK(by_case[{true, false}] + by_case[{false, true}] == 240);
  CHECK(by_case[{true, true}] == 28);
  CHECK(g3.size() == 763);

  for (int g = 3; g <= 12; ++g) {
    const CensusCounts c = count_bridgeless_core_triangulations(g);
    CHECK(c.neither == binom(3 * g + 3, g + 1));
    CHECK(c.one == 2 * binom(3 * g + 1, g));
    CHECK(c.both == binom(3 * g - 1, g - 1));
  }
  CHECK(bridgeless_core_triangulations(4).size() == 4598);

  for (int g : {3, 4}) {
    const auto census = bridgeless_core_triangulations(g);
    std::set<std::vector<LatticeTriangle>> structural;
    for (const auto& t : census) structural.insert(t.triangles);
    std::set<std::vector<LatticeTriangle>> brute;
    int forbidden = 0;
    for (const auto& t : flip_closure(census.front())) {
      const bool bridge = core_has_bridge(t);
      if (!bridge) brute.insert(t.triangles);
      for (std::int64_t x = 2; x <= 2 * g; ++x) {
        if (has_segment(t, {0, 2}, {x, 0})) {
          ++forbidden;
          CHECK(bridge);
          break;
        }
      }
    }
    CHECK(brute == structural);
    CHECK(forbidden > 100);
  }
  CHECK_THROWS_AS(bridgeless_core_triangulations(2), UnsupportedRangeError);
  CHECK_THROWS_AS(count_bridgeless_core_triangulations(21), UnsupportedRangeError);
}

TEST_CASE("regular lifts") {
  LatticeTriangulation single;
  single.polygon = {{0, 0}, {1, 0}, {0, 1}};
  single.triangles = {make_triangle({0, 0}, {1, 0}, {0, 1})};
  const std::map<LatticePoint, std::int64_t> zero{{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 0}};
  CHECK(induces(single, zero));
  const RegularLift sl = regular_lift(single);
  CHECK(sl.regular);

  for (const auto& t : trapezoid_triangulations(0, 2, 0, 1)) {
    const RegularLift lift = regular_lift(t);
    REQUIRE(lift.regular);
    CHECK(induces(t, lift.heights));
    std::map<LatticePoint, std::int64_t> flat;
    for (const auto& [p, h] : lift.heights) flat[p] = 0;
    CHECK_FALSE(induces(t, flat));
  }
}

TEST_CASE("dual curves") {
  LatticeTriangulation single;
  single.polygon = {{0, 0}, {1, 0}, {0, 1}};
  single.triangles = {make_triangle({0, 0}, {1, 0}, {0, 1})};
  const EmbeddedCurve line = dual_curve(single, {{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 0}});
  REQUIRE(line.vertices.size() == 1);
  CHECK(line.vertices[0] == RationalPoint{0, 0});
  CHECK(line.edges.empty());
  std::set<LatticePoint> dirs;
  for (const auto& r : line.rays) dirs.insert(r.direction);
  CHECK(dirs == std::set<LatticePoint>{{0, 1}, {1, 0}, {-1, -1}});

  const auto [dir, k] = primitive_direction(3, 6);
  CHECK(dir == LatticePoint{1, 2});
  CHECK(k == Rational(3));
  const auto [dir2, k2] = primitive_direction(Rational(-3, 2), 0);
  CHECK(dir2 == LatticePoint{-1, 0});
  CHECK(k2 == Rational(3, 2));
  CHECK_THROWS_AS(primitive_direction(0, 0), InvalidInputError);

  const auto census = bridgeless_core_triangulations(3);
  for (std::size_t i = 0; i < census.size(); i += 37) {
    const auto& t = census[i];
    const RegularLift lift = regular_lift(t);
    REQUIRE(lift.regular);
    const EmbeddedCurve c = dual_curve(t, lift.heights);
    CHECK(c.vertices.size() == t.triangles.size());
    for (const auto& e : c.edges) {
      const LatticePoint along{e.dual[1].x - e.dual[0].x, e.dual[1].y - e.dual[0].y};
      CHECK(e.direction.x * along.x + e.direction.y * along.y == 0);
      CHECK(c.vertices[e.to].x - c.vertices[e.from].x == e.length * Rational(e.direction.x));
      CHECK(c.vertices[e.to].y - c.vertices[e.from].y == e.length * Rational(e.direction.y));
    }
    // The three terms of each triangle tie and are minimal at its vertex.
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
      const auto& x = c.vertices[v];
      const auto term = [&](LatticePoint p) {
        return Rational(lift.heights.at(p)) + Rational(p.x) * x.x + Rational(p.y) * x.y;
      };
      const Rational tie = term(t.triangles[v][0]);
      CHECK(term(t.triangles[v][1]) == tie);
      CHECK(term(t.triangles[v][2]) == tie);
      for (const auto& [p, h] : lift.heights) CHECK(term(p) >= tie);
    }
  }
}

TEST_CASE("cores") {
  const Model dumbbell(make_graph(2, {{0, 0}, {1, 1}, {0, 1}}), {2, 2, 1});
  const Core kd = core(dumbbell);
  CHECK(kd.model.graph().num_edges() == 3);

  const Model theta_leaf(make_graph(3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}}), {1, 2, 3, 5}, std::nullopt,
                         CirclePolicy::kAllow);
  const Core kt = core(theta_leaf);
  CHECK(kt.model.graph().num_vertices() == 2);
  CHECK(kt.model.graph().num_edges() == 3);
  CHECK(kt.edge_origin == std::vector<int>{0, 1, 2});
  const Core again = core(kt.model);
  CHECK(again.model == kt.model);
  CHECK(betti_number(kt.model.graph()) == betti_number(theta_leaf.graph()));

  const Model path(make_graph(3, {{0, 1}, {1, 2}}), {1, 1}, std::nullopt, CirclePolicy::kAllow);
  CHECK_THROWS_AS(core(path), PreconditionError);
}

TEST_CASE("ladder certificates") {
  const auto census = bridgeless_core_triangulations(3);
  for (const auto& t : census) {
    const RegularLift lift = regular_lift(t);
    REQUIRE(lift.regular);
    const EmbeddedCurve c = dual_curve(t, lift.heights);
    const Core k = core(c);
    CHECK(betti_number(k.model.graph()) == 3);
    const LadderCertificate cert = certify_standard_ladder(c, k, 3);
    CHECK(cert.ok());
    CHECK(cert.bridgeless == bridges(k.model.graph()).empty());
  }

  const RegularLift lift = regular_lift(census.front());
  const EmbeddedCurve c = dual_curve(census.front(), lift.heights);
  Core fake;
  fake.model = unit_model(make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  const LadderCertificate k4 = certify_standard_ladder(c, fake, 3);
  CHECK_FALSE(k4.is_standard_ladder);
  CHECK_FALSE(k4.ok());
  CHECK(k4.bridgeless);

  const std::string svg = to_svg(c, core(c));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("stroke-width=\"4.00\"") != std::string::npos);
}

TEST_CASE("g = 4 sample") {
  const auto census = bridgeless_core_triangulations(4);
  std::mt19937 rng(4);
  for (int i = 0; i < 40; ++i) {
    const auto& t = census[rng() % census.size()];
    const RegularLift lift = regular_lift(t);
    REQUIRE(lift.regular);
    const EmbeddedCurve c = dual_curve(t, lift.heights);
    CHECK(certify_standard_ladder(c, core(c), 4).ok());
  }
}
