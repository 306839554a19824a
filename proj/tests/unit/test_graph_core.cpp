#include <doctest.h>

#include <algorithm>
#include <random>

#include "hypertrop/canonical.hpp"
#include "hypertrop/graph.hpp"
#include "hypertrop/graph_json.hpp"

using namespace hypertrop;

namespace {

Graph k4() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Graph banana(int k) {
  std::vector<std::pair<int, int>> es(k, {0, 1});
  return make_graph(2, es);
}

Model dumbbell() {
  return {make_graph(2, {{0, 0}, {1, 1}, {0, 1}}), {Rational(2), Rational(2), Rational(1)}};
}

ConstrainedType relabel(const ConstrainedType& t, const std::vector<int>& perm, std::mt19937& rng) {
  const Graph& g = t.graph();
  std::vector<std::string> ids(g.num_vertices());
  std::vector<int> w(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    ids[perm[v]] = "x" + std::to_string(v);
    w[perm[v]] = t.weight(v);
  }
  std::vector<int> eorder(g.num_edges());
  std::iota(eorder.begin(), eorder.end(), 0);
  std::shuffle(eorder.begin(), eorder.end(), rng);
  std::vector<Edge> es;
  std::vector<int> cls;
  for (int e : eorder) {
    const auto& ed = g.edge(e);
    if (rng() % 2) {
      es.push_back({ed.id, perm[ed.v], perm[ed.u]});
    } else {
      es.push_back({ed.id, perm[ed.u], perm[ed.v]});
    }
    cls.push_back(t.edge_class(e));
  }
  return {Graph(ids, es), w, cls};
}

}  // namespace

TEST_CASE("genus formula") {
  CHECK(genus(ConstrainedType(k4(), std::vector<int>(4, 0))) == 3);
  CHECK(genus(ConstrainedType(make_graph(1, {}), {5})) == 5);
  for (int g = 2; g <= 6; ++g) CHECK(genus(unit_model(banana(g + 1))) == g);
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(Model(make_graph(2, {{0, 1}}), {Rational(0)}), InvalidInputError);
  CHECK_THROWS_AS(unit_model(make_graph(3, {{0, 1}, {1, 2}, {2, 0}})), CircleGraphError);
  CHECK_THROWS_AS(unit_model(make_graph(1, {{0, 0}})), CircleGraphError);
  // A loop on a positive-weight vertex is a legitimate genus-2 curve.
  CHECK_NOTHROW(unit_model(make_graph(1, {{0, 0}}), std::vector<int>{1}));
  CHECK_THROWS_AS(unit_model(make_graph(2, {{0, 1}, {0, 1}}), std::vector<int>{0, 0}), InvalidInputError);
  CHECK_THROWS_AS(Graph({"a", "b"}, {}), InvalidInputError);
  CHECK_THROWS_AS(Graph({"a", "a"}, {{"e", 0, 1}}), InvalidInputError);
}

TEST_CASE("canonical loopless model") {
  SUBCASE("dumbbell") {
    const Model c = canonical_loopless_model(dumbbell());
    CHECK(c.graph().num_vertices() == 4);
    CHECK(c.graph().num_edges() == 5);
    for (int e = 0; e < c.graph().num_edges(); ++e) {
      CHECK_FALSE(c.graph().edge(e).is_loop());
      CHECK(c.length(e) == Rational(1));
    }
    CHECK(canonical_loopless_model(c) == c);
  }
  SUBCASE("theta unchanged") {
    const Model theta = unit_model(banana(3));
    CHECK(canonical_loopless_model(theta) == theta);
  }
  SUBCASE("subdivided path suppressed") {
    // Endpoints carry loops; the path between them has three unit edges.
    const Model m = unit_model(make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 0}, {3, 3}}));
    const Model c = canonical_loopless_model(m);
    REQUIRE(c.graph().num_vertices() == 4);
    REQUIRE(c.graph().num_edges() == 5);
    CHECK(c.length(0) == Rational(3));
  }
}

TEST_CASE("add weight loops") {
  const Model one(make_graph(1, {{0, 0}}), {Rational(5)}, std::vector<int>{1});
  const Model l = add_weight_loops(one);
  CHECK(l.graph().num_edges() == 2);
  CHECK(l.length(0) == Rational(5));
  CHECK(l.length(1) == Rational(1));
  CHECK_FALSE(l.has_weights());
  CHECK(genus(l) == genus(one));

  const Model zero = unit_model(k4(), std::vector<int>(4, 0));
  CHECK(add_weight_loops(zero) == zero);

  const Model two(make_graph(3, {{0, 1}, {0, 2}, {1, 1}, {2, 2}}), {1, 1, 1, 1}, std::vector<int>{2, 0, 0});
  const Model t = add_weight_loops(two);
  CHECK(t.graph().num_loops_at(0) == 2);
  CHECK(t.graph().num_edges() == 6);
}

TEST_CASE("bridges") {
  CHECK(bridges(dumbbell().graph()) == std::vector<int>{2});
  CHECK(bridges(k4()).empty());
  CHECK(bridges(make_graph(4, {{0, 1}, {1, 2}, {2, 3}})) == std::vector<int>{0, 1, 2});
  CHECK(bridges(banana(2)).empty());
  CHECK(is_2_edge_connected(k4()));
  CHECK_FALSE(is_2_edge_connected(dumbbell().graph()));
  CHECK_FALSE(is_2_edge_connected(make_graph(2, {{0, 1}})));
  CHECK_FALSE(is_2_edge_connected(make_graph(1, {})));
  CHECK(is_bridgeless(make_graph(1, {})));
}

TEST_CASE("contraction") {
  SUBCASE("loop") {
    const ConstrainedType t(make_graph(2, {{0, 0}, {0, 1}, {0, 1}}), {0, 1});
    const auto c = contract(t, std::vector<int>{0});
    CHECK(c.weight(0) == 1);
    CHECK(genus(c) == genus(t));
  }
  SUBCASE("nothing") {
    const ConstrainedType t(k4(), std::vector<int>(4, 0));
    CHECK(contract(t, std::vector<int>{}) == t);
  }
  SUBCASE("parallel class") {
    const ConstrainedType t(make_graph(3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 2}}), {0, 0, 0}, {0, 0, 1, 2, 3});
    const auto c = contract_classes(t, std::vector<int>{0});
    CHECK(c.graph().num_vertices() == 2);
    CHECK(c.weight(0) == 1);
    CHECK(genus(c) == genus(t));
    CHECK_THROWS_AS(contract(t, std::vector<int>{0}), InvalidInputError);
  }
}

TEST_CASE("canonical form") {
  std::mt19937 rng(7);
  const ConstrainedType tk4(k4(), std::vector<int>(4, 0));
  std::vector<int> perm{0, 1, 2, 3};
  for (int i = 0; i < 24; ++i) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(relabel(tk4, perm, rng)) == canonical_form(tk4));
  }
  const ConstrainedType split(banana(2), {1, 1}, {0, 1});
  const ConstrainedType joined(banana(2), {1, 1}, {0, 0});
  CHECK(canonical_form(split) != canonical_form(joined));

  const ConstrainedType theta(banana(3), {0, 0});
  const ConstrainedType b3_loopy(make_graph(2, {{0, 1}, {0, 0}, {1, 1}}), {0, 0});
  CHECK(canonical_form(theta) != canonical_form(b3_loopy));

  // Ladder L(P_2) with the rail relation vs. a rung relation.
  const Graph lp2 = make_graph(4, {{0, 1}, {2, 3}, {0, 2}, {0, 2}, {1, 3}, {1, 3}});
  const ConstrainedType rails(lp2, {0, 0, 0, 0}, {0, 0, 1, 2, 3, 4});
  const ConstrainedType rungs(lp2, {0, 0, 0, 0}, {0, 1, 2, 2, 3, 4});
  CHECK(canonical_form(rails) != canonical_form(rungs));
  for (int i = 0; i < 100; ++i) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(relabel(rails, perm, rng)) == canonical_form(rails));
  }
}

TEST_CASE("graph json round trip") {
  const Json doc = Json::parse(R"({"vertices":[{"id":"a","weight":1},{"id":"b"}],
    "edges":[{"id":"e1","ends":["a","b"],"length":"3/2"},{"id":"e2","ends":["a","b"]},
             {"id":"e3","ends":["b","b"],"length":2}],"relation":[["e1","e2"],["e3"]]})");
  const Model m = model_from_json(doc);
  CHECK(m.length(0) == Rational(3, 2));
  CHECK(m.length(1) == Rational(1));
  CHECK(m.weight(0) == 1);
  CHECK(model_from_json(to_json(m)) == m);
  const ConstrainedType t = type_from_json(doc);
  CHECK(t.num_classes() == 2);
  CHECK(type_from_json(to_json(t)) == t);
  CHECK_THROWS_AS(model_from_json(Json::parse(R"({"vertices":[{"id":"a"}],"edges":[{"id":"e","ends":["a","z"]}]})")),
                  InvalidInputError);
  CHECK_THROWS_AS(model_from_json(Json::parse(R"([1,2])")), InvalidInputError);
}
