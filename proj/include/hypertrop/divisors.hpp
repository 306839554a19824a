#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hypertrop/graph.hpp"
#include "hypertrop/graph_json.hpp"

namespace hypertrop {

/// A model refined so that every edge has unit length 1/scale. Base vertices
/// keep their indices; interior points of base edge e are named "<e>:k".
/// Each unit edge carries an integer conductance (1 unless built by a pullback).
struct Subdivision {
  Model base;
  std::int64_t scale = 1;
  Graph graph;
  std::vector<std::int64_t> conductance;
  /// Subdivision vertices along base edge e, from its first end to its second.
  std::vector<std::vector<int>> edge_points;

  [[nodiscard]] int num_vertices() const { return graph.num_vertices(); }
  [[nodiscard]] int locate(int base_vertex) const { return base_vertex; }
  /// Point at distance `offset` (base length units) from the first end of
  /// base edge e. Throws InvalidInputError if it is not a subdivision vertex.
  [[nodiscard]] int locate(int base_edge, const Rational& offset) const;
};

/// Scale = lcm of length denominators times `refinement`; each edge of length
/// l becomes l * scale unit edges.
Subdivision subdivide(const Model& m, int refinement = 1);

using Divisor = std::vector<std::int64_t>;
using RationalFunction = std::vector<std::int64_t>;

std::int64_t degree(const Divisor& d);
bool is_effective(const Divisor& d);

/// (div f)(v) = sum over unit edges vu of c(vu) * (f(u) - f(v)).
Divisor div(const Subdivision& s, const RationalFunction& f);

struct Reduction {
  Divisor divisor;
  /// reduced = d + div(script)
  RationalFunction script;
};

/// q-reduced representative of the class of d. Distance layers are first
/// made nonnegative from the outside in, then Dhar burning fires every
/// unburnt set until the whole graph burns.
Reduction reduce(const Subdivision& s, const Divisor& d, int q);

/// True iff d - E is equivalent to an effective divisor for every effective
/// E of degree k supported on subdivision vertices.
bool rank_at_least(const Subdivision& s, const Divisor& d, int k);

/// Baker-Norine rank on the subdivision (-1 if d is not equivalent to an
/// effective divisor).
int rank(const Subdivision& s, const Divisor& d);

/// Rank of a divisor given by chips on base vertices of m. Computed on
/// subdivide(m, 1); with `guard` the value is recomputed at refinement 2 and
/// a mismatch throws std::runtime_error.
int rank(const Model& m, const std::vector<std::int64_t>& base_chips, bool guard = true);

struct RankHyperellipticity {
  bool hyperelliptic = false;
  /// Canonical loopless model of the graph with weight loops added.
  Model model;
  /// Witness x + y as vertex indices of `model`, first in colex order.
  std::optional<std::pair<int, int>> witness;
};

/// Searches all effective degree-2 divisors supported on vertices of the
/// canonical loopless model of add_weight_loops(m) for one of rank 1.
RankHyperellipticity is_hyperelliptic_by_rank(const Model& m, bool guard = true);

/// All rank-1 degree-2 vertex-supported divisors x + y (x <= y) on the
/// canonical loopless model, in colex order.
std::vector<std::pair<int, int>> rank_one_pairs(const Model& loopless);

/// Divisor JSON {"chips":{"v1":2}}; ids name subdivision vertices.
Divisor divisor_from_json(const Subdivision& s, const Json& doc);
Json divisor_to_json(const Subdivision& s, const Divisor& d);
/// Function JSON {"values":{...}}; every subdivision vertex must be given.
RationalFunction function_from_json(const Subdivision& s, const Json& doc);

}  // namespace hypertrop
