#include "llc/block_side.hpp"

#include "llc/errors.hpp"
#include "llc/smith.hpp"

namespace llc {

FinGenAbGroup finite_torus(Eigen::Index rank, const IntMatrix& w, const Integer& q) {
  if (w.rows() != rank || w.cols() != rank) {
    throw Error(ErrorCode::DimensionMismatch, "twist is not " + std::to_string(rank) + "x" + std::to_string(rank));
  }
  if (!is_unimodular(w)) throw Error(ErrorCode::InvalidWeylTwist, "twist on the cocharacter lattice is not unimodular");
  auto t = cokernel(IntMatrix(q * w - identity_matrix(rank)));
  if (!t.is_finite()) throw Error(ErrorCode::InternalError, "q w - 1 is singular");
  return t;
}

FinGenAbGroup ell_block_invariant(const FinGenAbGroup& t, const Integer& ell) {
  if (!t.is_finite()) throw Error(ErrorCode::InfiniteGroup, "the block invariant needs a finite torus");
  return ell_primary_part(t, ell);
}

BlockDescriptor block_descriptor(const RootDatum& rd, const WeylTwist& w, const Integer& q, const Integer& ell) {
  Admissible::check(q, ell);
  if (w.matrix.rows() != rd.rank || w.matrix.cols() != rd.rank) {
    throw Error(ErrorCode::DimensionMismatch, "twist size does not match " + rd.name);
  }
  BlockDescriptor b;
  b.datum = rd.name;
  b.finite_torus = finite_torus(rd.rank, contragredient(w.matrix), q);
  b.finite_torus_order = b.finite_torus.torsion_order();
  b.torsion = ell_block_invariant(b.finite_torus, ell);
  b.k = valuation(b.finite_torus_order, ell);
  // For split G, X_*(T_G) / coroots of G is X^*(That) / roots of Ghat.
  b.fundamental_group = cokernel(rd.roots);
  b.free_rank = b.fundamental_group.free_rank();
  b.coxeter_number = coxeter_number(rd);
  b.q_exceeds_coxeter_number = q > b.coxeter_number;
  return b;
}

BlockDescriptor gln_block_descriptor(std::size_t n, const Integer& q, const Integer& ell) {
  const auto rd = preset(Family::GL, n);
  return block_descriptor(rd, coxeter_twist(rd), q, ell);
}

MatchReport match_sides(const ComponentDescriptor& c, const BlockDescriptor& b) {
  MatchReport r;
  r.mu_char_group = c.mu.character_group();
  r.block_torsion = b.torsion;
  r.isomorphic = r.mu_char_group == r.block_torsion;
  r.free_ranks_agree = static_cast<std::size_t>(c.orbit_torus_rank) == b.free_rank;
  r.gradings_agree = c.center == b.fundamental_group;
  r.grading = {c.center, {"X^*(Z(Ghat))", "pi_1(G)_Gamma"}};

  const auto fixed_order = group_order(c.fixed_scheme.character_group());
  r.context_consistent = c.datum == b.datum && fixed_order && *fixed_order == b.finite_torus_order;

  r.applicability_flags.push_back(b.q_exceeds_coxeter_number ? "q_exceeds_coxeter_number"
                                                             : "q_not_above_coxeter_number");
  if (!r.context_consistent) r.applicability_flags.push_back("context_mismatch");
  if (!c.elliptic) r.applicability_flags.push_back("not_elliptic");
  return r;
}

CategoricalSummary categorical_summary(std::size_t n, const Integer& q, const Integer& ell) {
  const auto rd = preset(Family::GL, n);
  const auto w = coxeter_twist(rd);
  CategoricalSummary s;
  s.n = n;
  s.q = q;
  s.ell = ell;
  s.component = component_descriptor(rd, w, q, ell);
  s.block = gln_block_descriptor(n, q, ell);
  s.match = match_sides(s.component, s.block);
  s.parameter_side.grading = {s.component.center, {"X^*(Z(Ghat))"}};
  s.parameter_side.cell = {static_cast<std::size_t>(s.component.orbit_torus_rank), s.component.mu.character_group()};
  s.representation_side.grading = {s.block.fundamental_group, {"pi_1(G)_Gamma"}};
  s.representation_side.cell = {s.block.free_rank, s.block.torsion};
  return s;
}

}  // namespace llc
