#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hypertrop/graph.hpp"
#include "hypertrop/graph_json.hpp"

namespace hypertrop {

/// Image of a domain edge: a codomain edge (horizontal) or a codomain vertex
/// (collapsed).
struct EdgeImage {
  bool collapsed = false;
  int target = 0;
  friend bool operator==(const EdgeImage&, const EdgeImage&) = default;
};

/// Morphism of loopless models. Construction checks that vertices go to
/// vertices, collapsed edges have both ends over the image vertex,
/// horizontal edges join the images of their ends, and every slope
/// l'(phi(e)) / l(e) is a positive integer.
class ModelMorphism {
 public:
  ModelMorphism(Model domain, Model codomain, std::vector<int> vertex_map, std::vector<EdgeImage> edge_map);

  [[nodiscard]] const Model& domain() const { return domain_; }
  [[nodiscard]] const Model& codomain() const { return codomain_; }
  [[nodiscard]] int vertex_image(int v) const { return vertex_map_.at(v); }
  [[nodiscard]] const EdgeImage& edge_image(int e) const { return edge_map_.at(e); }
  [[nodiscard]] const std::vector<int>& vertex_map() const { return vertex_map_; }
  [[nodiscard]] const std::vector<EdgeImage>& edge_map() const { return edge_map_; }
  /// mu(e); 0 for collapsed edges.
  [[nodiscard]] std::int64_t slope(int e) const { return slopes_.at(e); }

 private:
  Model domain_;
  Model codomain_;
  std::vector<int> vertex_map_;
  std::vector<EdgeImage> edge_map_;
  std::vector<std::int64_t> slopes_;
};

class NonHarmonicError : public PreconditionError {
 public:
  NonHarmonicError(int vertex, int edge_a, int edge_b);
  int vertex;
  int edge_a;  // two codomain edges at phi(vertex) with different fiber sums
  int edge_b;
};

/// Common fiber sum over codomain edges at phi(x); 0 when phi(x) has no
/// incident edge. Throws NonHarmonicError if the sums differ.
std::int64_t horizontal_multiplicity(const ModelMorphism& phi, int x);
bool is_harmonic(const ModelMorphism& phi);
/// Fiber sum over any codomain edge; 0 for an edgeless codomain. Throws
/// NonHarmonicError for non-harmonic input.
std::int64_t degree(const ModelMorphism& phi);
bool is_nondegenerate(const ModelMorphism& phi);

ModelMorphism identity_morphism(const Model& m);
ModelMorphism morphism_from_json(const Model& domain, const Model& codomain, const Json& doc);
Json to_json(const ModelMorphism& phi);

/// Length-preserving automorphism of a loopless model.
struct Automorphism {
  std::vector<int> vertex_perm;
  std::vector<int> edge_perm;
  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

Automorphism identity_automorphism(const Model& m);
/// (a * b)(x) = a(b(x)).
Automorphism compose(const Automorphism& a, const Automorphism& b);
Automorphism inverse(const Automorphism& a);
bool is_automorphism(const Model& m, const Automorphism& a);
bool is_involution(const Automorphism& a);

/// Full automorphism group of a loopless model (weights respected when
/// present), sorted.
std::vector<Automorphism> automorphisms(const Model& m);
/// Closure of the generators under composition, sorted.
std::vector<Automorphism> generate_group(const Model& m, std::span<const Automorphism> generators);
/// Every subgroup of a finite group given by its element list.
std::vector<std::vector<Automorphism>> subgroups(const std::vector<Automorphism>& group);

struct Quotient {
  Model model;
  ModelMorphism morphism;
  std::vector<Automorphism> group;
};

/// Quotient of a loopless model by the group generated by `generators`.
/// Edges with equivalent ends collapse; [e] gets length l(e) |Stab(e)|.
Quotient quotient(const Model& m, std::span<const Automorphism> generators);

/// Involutions of a loopless model whose quotient is a tree, in
/// lexicographic order of vertex maps.
std::vector<Automorphism> tree_quotient_involutions(const Model& loopless);

struct HyperellipticDecision {
  bool hyperelliptic = false;
  /// Canonical loopless model of the input (after adding weight loops).
  Model model;
  /// True when `model` has exactly two vertices (answer true, no witness).
  bool two_vertex = false;
  std::optional<Automorphism> involution;
  std::optional<Quotient> quotient;
};

/// Main decision procedure. Throws InvalidInputError if the loopless model
/// has a point of valence 1.
HyperellipticDecision is_hyperelliptic(const Model& m);

/// For 2-edge-connected hyperelliptic input: whether exactly one involution
/// has a tree quotient. nullopt (not applicable) when the loopless model has
/// two vertices. Throws PreconditionError otherwise.
std::optional<bool> hyperelliptic_involution_unique(const Model& m);

Json to_json(const Model& m, const Automorphism& a);

}  // namespace hypertrop
