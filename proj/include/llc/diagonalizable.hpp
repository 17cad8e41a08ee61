#pragma once

// Diagonalizable group schemes over Zbar_ell, handled through their character
// groups. Every function computes on characters: a kernel of group schemes is
// a cokernel of character maps and vice versa.

#include "llc/abelian_group.hpp"
#include "llc/integer.hpp"

#include <optional>
#include <string>

namespace llc {

class DiagGroup {
 public:
  DiagGroup() = default;
  explicit DiagGroup(FinGenAbGroup characters, std::string label = {})
      : characters_(std::move(characters)), label_(std::move(label)) {}

  const FinGenAbGroup& character_group() const noexcept { return characters_; }
  const std::string& label() const noexcept { return label_; }

  bool is_torus() const noexcept { return characters_.is_free(); }
  bool is_finite() const noexcept { return characters_.is_finite(); }
  bool is_trivial() const noexcept { return characters_.is_trivial(); }

  /// Isomorphism; the label is ignored.
  friend bool operator==(const DiagGroup& a, const DiagGroup& b) { return a.characters_ == b.characters_; }

 private:
  FinGenAbGroup characters_;
  std::string label_;
};

/// Homomorphism of tori given by its (contravariant) map on characters.
/// char_map has rank(source) rows and rank(target) cols: it sends characters
/// of the target to characters of the source.
struct DiagHom {
  DiagGroup source;
  DiagGroup target;
  IntMatrix char_map;
};

DiagGroup torus(std::size_t rank);

/// Throws InvalidArgument for n <= 0.
DiagGroup mu(const Integer& n);

/// Kernel of a map of tori; its character group is coker(char_map).
/// Throws TorusExpected / DimensionMismatch.
DiagGroup torus_hom_kernel(const DiagHom& f);

/// Free part plus the ell-primary torsion of the characters.
DiagGroup identity_component(const DiagGroup& d, const Integer& ell);

/// pi_0 over Zbar_ell: the prime-to-ell torsion of the characters.
FinGenAbGroup component_group(const DiagGroup& d, const Integer& ell);

/// Number of Fbar_ell-points; nullopt means infinite (positive free rank).
std::optional<Integer> geometric_points(const DiagGroup& d, const Integer& ell);

DiagGroup product(const DiagGroup& a, const DiagGroup& b);

}  // namespace llc
