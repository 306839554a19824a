#pragma once

#include "hypertrop/divisors.hpp"
#include "hypertrop/harmonic.hpp"

namespace hypertrop {

/// Subdivision of phi's domain compatible with a unit subdivision of its
/// codomain: a horizontal edge e is cut into as many pieces as phi(e), each
/// carrying conductance mu(e); collapsed edges keep the unit 1/scale.
struct Pullback {
  Subdivision sub;
  /// Codomain subdivision vertex under each domain subdivision vertex.
  std::vector<int> image;
  /// Horizontal multiplicity at each domain subdivision vertex.
  std::vector<std::int64_t> multiplicity;
};

/// Throws InvalidInputError if `codomain` does not subdivide phi's codomain,
/// NonHarmonicError if phi is not harmonic.
Pullback pullback_subdivision(const ModelMorphism& phi, const Subdivision& codomain);

/// (phi^* D)(x) = m(x) D(phi(x)), on pullback_subdivision(phi, codomain).sub.
Divisor pullback_divisor(const ModelMorphism& phi, const Subdivision& codomain, const Divisor& d);

/// phi^* g = g o phi, on pullback_subdivision(phi, codomain).sub.
RationalFunction pullback_function(const ModelMorphism& phi, const Subdivision& codomain, const RationalFunction& g);

}  // namespace hypertrop
