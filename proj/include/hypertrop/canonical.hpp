#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hypertrop/graph.hpp"

namespace hypertrop {

/// Isomorphism-invariant code of a constrained type. Two types receive equal
/// labels iff some graph isomorphism preserves weights and maps relation
/// classes onto relation classes.
class CanonicalLabel {
 public:
  CanonicalLabel() = default;
  explicit CanonicalLabel(std::vector<int> code) : code_(std::move(code)) {}

  [[nodiscard]] const std::vector<int>& code() const { return code_; }
  /// Full code as dot-separated integers.
  [[nodiscard]] std::string str() const;
  /// 16 hex digit FNV-1a digest of the code, for compact display.
  [[nodiscard]] std::string digest() const;

  friend auto operator<=>(const CanonicalLabel&, const CanonicalLabel&) = default;
  friend bool operator==(const CanonicalLabel&, const CanonicalLabel&) = default;

 private:
  std::vector<int> code_;
};

/// Colour refinement followed by individualisation search over the remaining
/// non-singleton cells. Intended for desk-scale graphs (a few dozen vertices).
CanonicalLabel canonical_form(const ConstrainedType& t);

/// Canonical vertex order realising the label: position -> vertex index.
std::vector<int> canonical_order(const ConstrainedType& t);

}  // namespace hypertrop
