#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypertrop/canonical.hpp"
#include "hypertrop/graph.hpp"
#include "hypertrop/graph_json.hpp"

namespace hypertrop {

/// All connected stable weighted multigraphs of genus g (2 <= g <= 5), one
/// per isomorphism class, with the all-singletons relation. Ordered by edge
/// count, then canonical label.
std::vector<ConstrainedType> enumerate_stable_types(int g);

/// G^w_-: weight loops added and every loop split by a midpoint, unit lengths.
Model unit_loopless_model(const ConstrainedType& t);

/// Edge classes of the hyperelliptic relation on E(G), or nothing if G^w_-
/// has no tree-quotient involution. Two non-loop edges are related iff the
/// involution swaps them; the two-vertex case gives all singletons.
std::optional<std::vector<int>> hyperelliptic_relation(const ConstrainedType& t);

struct Cell {
  ConstrainedType type;
  int dimension = 0;
  CanonicalLabel label;
};

struct CellPoset {
  int genus = 0;
  bool two_edge_connected = false;
  /// Sorted by dimension, then label.
  std::vector<Cell> cells;
  /// (i, j): cell j is obtained from cell i by contracting one class.
  std::vector<std::pair<int, int>> covers;
  std::vector<int> f_vector;
  /// Every single-class contraction of a member is a member.
  bool closed = true;
};

/// 2-edge-connected hyperelliptic cells, 3 <= g <= 5.
CellPoset enumerate_H2(int g);
/// Hyperelliptic cells (bridges contracted to a member of H2), 3 <= g <= 4.
CellPoset enumerate_H(int g);

/// Re-verifies closure for every union of classes of every cell.
bool check_full_closure(const CellPoset& p);

/// Cells not covered by any other cell.
std::vector<Cell> maximal_cells(const CellPoset& p);

struct Tree {
  int n = 1;
  std::vector<std::pair<int, int>> edges;
};

/// Degree sequence helper.
std::vector<int> tree_degrees(const Tree& t);
/// AHU canonical string of a free tree (rooted at its center or centers).
std::string tree_canonical_form(const Tree& t);
/// Free trees on n vertices with maximum degree <= 3, one per isomorphism
/// class, sorted by canonical form.
std::vector<Tree> trees_max_deg3(int n);

/// Ladder L(T) with w = 0 and the relation pairing each tree edge with its
/// copy (rungs are singletons). Vertices i and i' = i + n.
ConstrainedType ladder(const Tree& t);

/// Maximal cells of H_g^(2) built from ladders of trees on g - 1 vertices.
std::vector<Cell> maximal_cells(int g);

Cell make_cell(ConstrainedType t);

Json to_json(const CellPoset& p);
std::string to_dot(const CellPoset& p);
Json to_json(const Tree& t);

}  // namespace hypertrop
