#include "llc/diagonalizable.hpp"

#include "llc/errors.hpp"

namespace llc {

DiagGroup torus(std::size_t rank) { return DiagGroup(FinGenAbGroup::free(rank)); }

DiagGroup mu(const Integer& n) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "mu_n needs n >= 1, got " + to_string(n));
  return DiagGroup(FinGenAbGroup::cyclic(n));
}

DiagGroup torus_hom_kernel(const DiagHom& f) {
  if (!f.source.is_torus() || !f.target.is_torus()) {
    throw Error(ErrorCode::TorusExpected, "torus_hom_kernel needs a map between tori");
  }
  const auto src_rank = static_cast<Eigen::Index>(f.source.character_group().free_rank());
  const auto tgt_rank = static_cast<Eigen::Index>(f.target.character_group().free_rank());
  if (f.char_map.rows() != src_rank || f.char_map.cols() != tgt_rank) {
    throw Error(ErrorCode::DimensionMismatch, "character map must be rank(source) x rank(target)");
  }
  return DiagGroup(cokernel(f.char_map));
}

DiagGroup identity_component(const DiagGroup& d, const Integer& ell) {
  const auto& x = d.character_group();
  return DiagGroup(direct_sum(FinGenAbGroup::free(x.free_rank()), ell_primary_part(x, ell)));
}

FinGenAbGroup component_group(const DiagGroup& d, const Integer& ell) {
  return prime_to_ell_part(d.character_group(), ell);
}

std::optional<Integer> geometric_points(const DiagGroup& d, const Integer& ell) {
  const auto pi0 = prime_to_ell_part(d.character_group(), ell);
  if (!d.is_finite()) return std::nullopt;
  return pi0.torsion_order();
}

DiagGroup product(const DiagGroup& a, const DiagGroup& b) {
  return DiagGroup(direct_sum(a.character_group(), b.character_group()));
}

}  // namespace llc
