#include <doctest.h>

#include <random>

#include "hypertrop/divisors.hpp"
#include "hypertrop/harmonic.hpp"
#include "hypertrop/pullback.hpp"

using namespace hypertrop;

namespace {

Graph k4() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Graph banana(int k) {
  std::vector<std::pair<int, int>> es(k, {0, 1});
  return make_graph(2, es);
}

// L(P_2): rails 0-1 and 2-3, double rungs 0-2 and 1-3.
Model ladder2(Rational top = 1, Rational bottom = 1) {
  return {make_graph(4, {{0, 1}, {2, 3}, {0, 2}, {0, 2}, {1, 3}, {1, 3}}), {top, bottom, 1, 1, 1, 1}};
}

Automorphism rung_involution() { return {{2, 3, 0, 1}, {1, 0, 2, 3, 4, 5}}; }

Model dumbbell() { return {make_graph(2, {{0, 0}, {1, 1}, {0, 1}}), {Rational(2), Rational(2), Rational(1)}}; }

}  // namespace

TEST_CASE("morphism validation") {
  const Model path = Model(make_graph(2, {{0, 1}}), {1}, std::nullopt, CirclePolicy::kAllow);
  CHECK_THROWS_AS(ModelMorphism(unit_model(banana(3)), path, {0, 0}, {{false, 0}, {false, 0}, {false, 0}}),
                  InvalidInputError);
  CHECK_THROWS_AS(ModelMorphism(unit_model(banana(3)), path, {0, 1}, {{true, 0}, {false, 0}, {false, 0}}),
                  InvalidInputError);
  const Model half(banana(3), {Rational(2), 1, 1});
  CHECK_THROWS_AS(ModelMorphism(half, path, {0, 1}, {{false, 0}, {false, 0}, {false, 0}}), InvalidInputError);
  CHECK_NOTHROW(ModelMorphism(unit_model(banana(3)), path, {0, 1}, {{false, 0}, {false, 0}, {false, 0}}));
}

TEST_CASE("identity morphism") {
  const auto id = identity_morphism(unit_model(k4()));
  for (int v = 0; v < 4; ++v) CHECK(horizontal_multiplicity(id, v) == 1);
  CHECK(is_harmonic(id));
  CHECK(degree(id) == 1);
  CHECK(is_nondegenerate(id));
}

TEST_CASE("non-harmonic map") {
  const Model dom(make_graph(3, {{0, 1}, {0, 1}, {1, 2}}), {1, 1, 1}, std::nullopt, CirclePolicy::kAllow);
  const Model cod(make_graph(3, {{0, 1}, {1, 2}}), {1, 1}, std::nullopt, CirclePolicy::kAllow);
  const ModelMorphism phi(dom, cod, {0, 1, 2}, {{false, 0}, {false, 0}, {false, 1}});
  CHECK_FALSE(is_harmonic(phi));
  try {
    (void)horizontal_multiplicity(phi, 1);
    FAIL("expected NonHarmonicError");
  } catch (const NonHarmonicError& e) {
    CHECK(e.vertex == 1);
    CHECK(e.edge_a == 0);
    CHECK(e.edge_b == 1);
  }
  CHECK_THROWS_AS((void)degree(phi), NonHarmonicError);
}

TEST_CASE("automorphism groups") {
  CHECK(automorphisms(unit_model(banana(3))).size() == 12);
  const Model tree(make_graph(3, {{0, 1}, {1, 2}}), {1, 2}, std::nullopt, CirclePolicy::kAllow);
  CHECK(automorphisms(tree).size() == 1);
  const auto aut = automorphisms(ladder2());
  CHECK(aut.size() == 16);
  for (const auto& a : aut) {
    CHECK(is_automorphism(ladder2(), a));
    for (const auto& b : aut) CHECK(std::binary_search(aut.begin(), aut.end(), compose(a, b)));
    CHECK(std::binary_search(aut.begin(), aut.end(), inverse(a)));
  }
  CHECK(automorphisms(ladder2(2, 3)).size() == 8);
  CHECK(automorphisms(unit_model(k4())).size() == 24);
}

TEST_CASE("quotients") {
  SUBCASE("ladder by rung involution") {
    const std::vector<Automorphism> gens{rung_involution()};
    const Quotient q = quotient(ladder2(), gens);
    CHECK(q.model.graph().num_vertices() == 2);
    CHECK(q.model.graph().num_edges() == 1);
    CHECK(q.model.length(0) == Rational(1));
    CHECK(is_harmonic(q.morphism));
    CHECK(degree(q.morphism) == 2);
    CHECK(horizontal_multiplicity(q.morphism, 0) == 1);
    CHECK(is_nondegenerate(q.morphism));
  }
  SUBCASE("trivial group") {
    const Quotient q = quotient(unit_model(k4()), {});
    CHECK(q.model.graph().num_edges() == 6);
    CHECK(degree(q.morphism) == 1);
  }
  SUBCASE("theta with a long edge") {
    const Model theta(banana(3), {1, 1, 2});
    const std::vector<Automorphism> gens{{{0, 1}, {1, 0, 2}}};
    const Quotient q = quotient(theta, gens);
    REQUIRE(q.model.graph().num_edges() == 2);
    CHECK(q.model.length(0) == Rational(1));
    CHECK(q.model.length(1) == Rational(4));
    CHECK(degree(q.morphism) == 2);
    CHECK(is_nondegenerate(q.morphism));
  }
  SUBCASE("theta by vertex swap") {
    const std::vector<Automorphism> gens{{{1, 0}, {0, 1, 2}}};
    const Quotient q = quotient(unit_model(banana(3)), gens);
    CHECK(q.model.graph().num_vertices() == 1);
    CHECK(horizontal_multiplicity(q.morphism, 0) == 0);
    CHECK(degree(q.morphism) == 0);
    CHECK_FALSE(is_nondegenerate(q.morphism));
  }
  SUBCASE("non-automorphism generator") {
    const std::vector<Automorphism> gens{{{0, 1}, {2, 1, 0}}};
    CHECK_THROWS_AS(quotient(Model(banana(3), {1, 1, 2}), gens), InvalidInputError);
  }
  SUBCASE("every subgroup") {
    for (const Model& m : {ladder2(), unit_model(k4()), unit_model(banana(4))}) {
      const auto groups = subgroups(automorphisms(m));
      for (const auto& h : groups) {
        const Quotient q = quotient(m, h);
        CHECK(is_harmonic(q.morphism));
        if (q.model.graph().num_edges() > 0) {
          CHECK(degree(q.morphism) == static_cast<std::int64_t>(h.size()));
          CHECK(is_nondegenerate(q.morphism));
        }
      }
    }
    CHECK(subgroups(automorphisms(unit_model(k4()))).size() == 30);
  }
}

TEST_CASE("hyperelliptic decision") {
  const auto b4 = is_hyperelliptic(unit_model(banana(5)));
  CHECK(b4.hyperelliptic);
  CHECK(b4.two_vertex);
  CHECK_FALSE(b4.involution.has_value());

  CHECK_FALSE(is_hyperelliptic(unit_model(k4())).hyperelliptic);
  CHECK(tree_quotient_involutions(unit_model(k4())).empty());

  const auto db = is_hyperelliptic(dumbbell());
  REQUIRE(db.hyperelliptic);
  REQUIRE(db.quotient.has_value());
  CHECK(is_harmonic(db.quotient->morphism));
  CHECK(degree(db.quotient->morphism) == 2);
  CHECK(is_nondegenerate(db.quotient->morphism));
  CHECK(is_bridgeless(db.quotient->model.graph()) == false);
  CHECK(db.quotient->model.graph().num_edges() == db.quotient->model.graph().num_vertices() - 1);
  CHECK(is_hyperelliptic_by_rank(dumbbell()).hyperelliptic);

  const auto lad = is_hyperelliptic(ladder2());
  REQUIRE(lad.hyperelliptic);
  CHECK(lad.involution == rung_involution());

  const Model leafy(make_graph(3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}}), {1, 1, 1, 1});
  CHECK_THROWS_AS(is_hyperelliptic(leafy), InvalidInputError);
}

TEST_CASE("involution uniqueness") {
  // Rails must match; rungs are generic.
  const Model generic(ladder2().graph(), {2, 2, 3, 5, 7, 11});
  CHECK(hyperelliptic_involution_unique(generic) == std::optional<bool>(true));
  CHECK_THROWS_AS(hyperelliptic_involution_unique(ladder2(2, 3)), PreconditionError);
  CHECK(hyperelliptic_involution_unique(ladder2()) == std::optional<bool>(true));
  CHECK_FALSE(hyperelliptic_involution_unique(unit_model(banana(3))).has_value());
  CHECK_THROWS_AS(hyperelliptic_involution_unique(unit_model(k4())), PreconditionError);
}

TEST_CASE("pullbacks") {
  const std::vector<Automorphism> gens{rung_involution()};
  const Quotient q = quotient(ladder2(), gens);
  const Subdivision cs = subdivide(q.model, 1);
  const Model& lad = ladder2();

  Divisor d(cs.num_vertices(), 0);
  d[cs.locate(0)] = 1;
  const Divisor pd = pullback_divisor(q.morphism, cs, d);
  CHECK(degree(pd) == 2);
  CHECK(pd[0] == 1);
  CHECK(pd[2] == 1);
  CHECK(pullback_divisor(q.morphism, cs, Divisor(cs.num_vertices(), 0)) == Divisor(pd.size(), 0));

  const RationalFunction lin{0, 1};
  const RationalFunction pf = pullback_function(q.morphism, cs, lin);
  const Pullback pb = pullback_subdivision(q.morphism, cs);
  CHECK(pf[0] == 0);
  CHECK(pf[1] == 1);
  CHECK(pf[2] == 0);
  CHECK(pf[3] == 1);
  CHECK(pullback_function(q.morphism, cs, {4, 4}) == RationalFunction(pb.sub.num_vertices(), 4));

  const auto id = identity_morphism(lad);
  const Subdivision ls = subdivide(lad, 1);
  const RationalFunction g{3, 1, 4, 1};
  CHECK(pullback_function(id, ls, g) == g);
  CHECK(pullback_divisor(id, ls, Divisor{1, -2, 0, 5}) == Divisor{1, -2, 0, 5});

  // Stretched edge: theta (1,1,2) modulo the unit-edge swap has slope 2 on e3.
  const Model theta(banana(3), {1, 1, 2});
  const std::vector<Automorphism> tg{{{0, 1}, {1, 0, 2}}};
  const Quotient tq = quotient(theta, tg);
  const Subdivision ts = subdivide(tq.model, 1);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    RationalFunction f(ts.num_vertices());
    for (auto& x : f) x = static_cast<std::int64_t>(rng() % 9) - 4;
    const Pullback tp = pullback_subdivision(tq.morphism, ts);
    CHECK(pullback_divisor(tq.morphism, ts, div(ts, f)) == div(tp.sub, pullback_function(tq.morphism, ts, f)));
  }
}
