#pragma once

// Representation side: finite tori, their ell-blocks, and the comparison with
// the parameter side.

#include "llc/abelian_group.hpp"
#include "llc/integer.hpp"
#include "llc/root_datum.hpp"
#include "llc/torus_cocycles.hpp"

#include <string>
#include <vector>

namespace llc {

struct BlockDescriptor {
  std::string datum;
  FinGenAbGroup torsion;           // Z/ell^k, acting as Zbar_ell[s]/(s^{ell^k} - 1)
  std::size_t free_rank = 0;       // Zbar_ell[t, t^{-1}] directions (center of G)
  Integer finite_torus_order;      // |T^{wF}|
  FinGenAbGroup finite_torus;
  unsigned k = 0;                  // v_ell(|T^{wF}|)
  FinGenAbGroup fundamental_group; // pi_1(G)_Gamma, indexes the basic isocrystals
  Integer coxeter_number;
  bool q_exceeds_coxeter_number = false;
};

struct GradingIndex {
  FinGenAbGroup group;
  std::vector<std::string> identifications;
};

struct MatchReport {
  FinGenAbGroup mu_char_group;
  FinGenAbGroup block_torsion;
  bool isomorphic = false;
  bool free_ranks_agree = false;
  bool gradings_agree = false;
  GradingIndex grading;
  /// Both sides were computed for the same finite torus; false flags aliasing
  /// between unrelated inputs that happen to share the same ell-part.
  bool context_consistent = false;
  std::vector<std::string> applicability_flags;

  bool matched() const { return isomorphic && free_ranks_agree; }
};

/// coker(q w - 1) on the cocharacter lattice. Throws DimensionMismatch,
/// InvalidWeylTwist (w not unimodular), InternalError (infinite result).
FinGenAbGroup finite_torus(Eigen::Index rank, const IntMatrix& w, const Integer& q);

/// ell-primary part of a finite group. Throws InfiniteGroup, InvalidPrime.
FinGenAbGroup ell_block_invariant(const FinGenAbGroup& t, const Integer& ell);

/// Block of the finite torus attached to (rd, w): the cocharacter action is the
/// contragredient of w. Throws the admissibility errors.
BlockDescriptor block_descriptor(const RootDatum& rd, const WeylTwist& w, const Integer& q, const Integer& ell);

/// Depth-zero supercuspidal block of GL_n(F): Z/ell^k with k = v_ell(q^n - 1)
/// and one central direction.
BlockDescriptor gln_block_descriptor(std::size_t n, const Integer& q, const Integer& ell);

MatchReport match_sides(const ComponentDescriptor& c, const BlockDescriptor& b);

struct CellFactor {
  std::size_t free_rank = 0;
  FinGenAbGroup torsion;
  friend bool operator==(const CellFactor&, const CellFactor&) = default;
};

struct SideSummary {
  GradingIndex grading;
  CellFactor cell;
};

struct CategoricalSummary {
  std::size_t n = 0;
  Integer q, ell;
  SideSummary parameter_side;
  SideSummary representation_side;
  ComponentDescriptor component;
  BlockDescriptor block;
  MatchReport match;
};

CategoricalSummary categorical_summary(std::size_t n, const Integer& q, const Integer& ell);

}  // namespace llc
