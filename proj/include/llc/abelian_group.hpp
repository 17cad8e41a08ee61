#pragma once

#include "llc/integer.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace llc {

/// Finitely generated abelian group Z^freeRank + Z/d_1 + ... + Z/d_m with
/// d_1 | d_2 | ... | d_m and every d_i >= 2. The representation is unique, so
/// operator== is isomorphism.
class FinGenAbGroup {
 public:
  FinGenAbGroup() = default;

  /// Normalizes arbitrary cyclic orders: 0 counts as a free summand, +-1 is
  /// dropped, and the rest is brought to invariant-factor form.
  static FinGenAbGroup from_cyclic_orders(std::size_t free_rank, const std::vector<Integer>& orders);
  static FinGenAbGroup free(std::size_t rank) { return from_cyclic_orders(rank, {}); }
  static FinGenAbGroup cyclic(const Integer& n) { return from_cyclic_orders(0, {n}); }
  static FinGenAbGroup trivial() { return {}; }

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }

  bool is_trivial() const noexcept { return free_rank_ == 0 && factors_.empty(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  bool is_free() const noexcept { return factors_.empty(); }
  bool is_cyclic() const noexcept { return free_rank_ + factors_.size() <= 1; }

  /// The torsion subgroup (free rank dropped).
  FinGenAbGroup torsion() const;

  /// Product of the invariant factors; 1 for a free group.
  Integer torsion_order() const;

  /// "Z^2 + Z/2 + Z/4", "0" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const FinGenAbGroup&, const FinGenAbGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> factors_;
};

/// Z^rows / A * Z^cols.
FinGenAbGroup cokernel(const IntMatrix& a);

FinGenAbGroup direct_sum(const FinGenAbGroup& g, const FinGenAbGroup& h);

/// prod d_i, or nullopt ("infinite") when the free rank is positive.
std::optional<Integer> group_order(const FinGenAbGroup& g);

/// Torsion factors Z/ell^{v_ell(d_i)}; free part dropped. Throws InvalidPrime.
FinGenAbGroup ell_primary_part(const FinGenAbGroup& g, const Integer& ell);

/// Torsion factors Z/(d_i / ell^{v_ell(d_i)}); free part dropped. Throws InvalidPrime.
FinGenAbGroup prime_to_ell_part(const FinGenAbGroup& g, const Integer& ell);

}  // namespace llc
