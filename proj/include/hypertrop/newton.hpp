#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hypertrop/graph.hpp"
#include "hypertrop/graph_json.hpp"
#include "hypertrop/rational.hpp"

namespace hypertrop {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Vertices in increasing order.
using LatticeTriangle = std::array<LatticePoint, 3>;

LatticeTriangle make_triangle(LatticePoint a, LatticePoint b, LatticePoint c);
/// Twice the signed area of (a, b, c).
std::int64_t orientation(LatticePoint a, LatticePoint b, LatticePoint c);
bool is_unimodular(const LatticeTriangle& t);

struct LatticeTriangulation {
  /// Convex polygon, counterclockwise.
  std::vector<LatticePoint> polygon;
  /// Sorted.
  std::vector<LatticeTriangle> triangles;
  /// Trapezoid steps: 'B' advances the bottom row, 'T' the top row.
  std::string staircase;
  bool uses_e1 = false;
  bool uses_e2 = false;
};

/// Unimodular triangles that tile the polygon with consistent shared edges.
bool is_valid_triangulation(const LatticeTriangulation& t);
/// Lattice points of the polygon (boundary included), sorted.
std::vector<LatticePoint> lattice_points(const std::vector<LatticePoint>& polygon);

/// Unimodular triangulations of the trapezoid (a,0), (b,0), (d,1), (c,1),
/// ordered by staircase string.
std::vector<LatticeTriangulation> trapezoid_triangulations(std::int64_t a, std::int64_t b, std::int64_t c,
                                                           std::int64_t d);

/// (0,0), (2g+2,0), (0,2).
std::vector<LatticePoint> delta_polygon(int g);

/// Unimodular triangulations of the triangle above whose dual curve has a
/// bridgeless core: cases (neither, e1 only, e2 only, both), then staircase.
/// 3 <= g <= 5.
std::vector<LatticeTriangulation> bridgeless_core_triangulations(int g);

struct CensusCounts {
  std::int64_t neither = 0;
  std::int64_t one = 0;  // e1 only plus e2 only
  std::int64_t both = 0;
  [[nodiscard]] std::int64_t total() const { return neither + one + both; }
};

/// Staircase counts by lattice-path recursion, without building the
/// triangulations. 3 <= g <= 20.
CensusCounts count_bridgeless_core_triangulations(int g);

/// Every full triangulation reachable from `start` by diagonal flips (all of
/// them, for a lattice polygon). Brute force; small polygons only.
std::vector<LatticeTriangulation> flip_closure(const LatticeTriangulation& start, std::size_t limit = 5'000'000);

struct RegularLift {
  bool regular = false;
  /// Integer heights per lattice point when regular.
  std::map<LatticePoint, std::int64_t> heights;
};

/// Strictly convex lift over the triangulation, found by exact linear
/// feasibility. `regular` is false when none exists.
RegularLift regular_lift(const LatticeTriangulation& t);
/// Whether the lower faces of the lifted points are exactly the triangles.
bool induces(const LatticeTriangulation& t, const std::map<LatticePoint, std::int64_t>& heights);

struct RationalPoint {
  Rational x;
  Rational y;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// Primitive integer direction of (dx, dy) and the multiple k > 0 with
/// (dx, dy) = k (p, q). Throws InvalidInputError for the zero vector.
std::pair<LatticePoint, Rational> primitive_direction(const Rational& dx, const Rational& dy);

struct CurveEdge {
  int from = 0;  // triangle indices
  int to = 0;
  std::array<LatticePoint, 2> dual;  // shared triangulation edge
  LatticePoint direction;            // primitive, from -> to
  Rational length;                   // lattice length
};

struct CurveRay {
  int vertex = 0;
  std::array<LatticePoint, 2> dual;  // boundary edge
  LatticePoint direction;
};

struct EmbeddedCurve {
  LatticeTriangulation triangulation;
  std::vector<RationalPoint> vertices;  // one per triangle
  std::vector<CurveEdge> edges;
  std::vector<CurveRay> rays;
};

/// Min-plus dual: triangle -> point where its three terms h_p + <p, x> tie.
EmbeddedCurve dual_curve(const LatticeTriangulation& t, const std::map<LatticePoint, std::int64_t>& heights);

struct Core {
  /// Bounded part with leaves pruned; lengths are lattice lengths.
  Model model;
  std::vector<int> vertex_origin;  // vertex -> triangle / input vertex
  std::vector<int> edge_origin;    // edge -> curve edge / input edge
};

/// Throws PreconditionError when the bounded part is a tree.
Core core(const EmbeddedCurve& c);
Core core(const Model& m);

struct LadderCertificate {
  bool is_standard_ladder = false;
  bool vertical_rungs = false;  // V_i and W_i share their x coordinate
  bool opposite_sides_equal = false;
  bool bridgeless = false;
  [[nodiscard]] bool ok() const { return is_standard_ladder && vertical_rungs && opposite_sides_equal && bridgeless; }
};

/// Exact check that the core is L(path on g-1 vertices) with equal opposite
/// rails. Never throws on a negative answer.
LadderCertificate certify_standard_ladder(const EmbeddedCurve& c, const Core& k, int g);

Json to_json(const LatticeTriangulation& t);
Json to_json(const EmbeddedCurve& c);
Json to_json(const LadderCertificate& c);
/// Curve with rays clipped to a fixed length; core edges drawn thick.
std::string to_svg(const EmbeddedCurve& c, const Core& k);

}  // namespace hypertrop
