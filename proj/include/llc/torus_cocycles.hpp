#pragma once

// Parameter side: tame cocycles valued in a torus T with Frobenius acting
// through a Weyl twist, and the invariants of the component they cut out.

#include "llc/abelian_group.hpp"
#include "llc/diagonalizable.hpp"
#include "llc/integer.hpp"
#include "llc/root_datum.hpp"

#include <string_view>

namespace llc {

/// Residue field size q = p^e and coefficient prime ell with p, ell odd and
/// distinct. Throws InvalidPrimePower, CharacteristicTwo, InvalidPrime,
/// EllIsTwo, EllEqualsCharacteristic.
struct Admissible {
  Integer q;
  Integer p;
  Integer ell;

  static Admissible check(const Integer& q, const Integer& ell);
};

/// T with Fr acting on X^*(T) by w.
class FrobTorus {
 public:
  /// Throws DimensionMismatch, InvalidWeylTwist (not unimodular) and the
  /// Admissible errors.
  FrobTorus(WeylTwist w, const Integer& q, const Integer& ell);

  Eigen::Index rank() const { return w_.matrix.rows(); }
  const WeylTwist& twist() const { return w_; }
  const Integer& q() const { return params_.q; }
  const Integer& ell() const { return params_.ell; }

 private:
  WeylTwist w_;
  Admissible params_;
};

enum class ProductForm { PointModStabilizer, TorusQuotient };

std::string_view product_form_name(ProductForm f);

struct ComponentDescriptor {
  std::string datum;            // name of Ghat
  Eigen::Index orbit_torus_rank = 0;
  DiagGroup fixed_scheme;       // T^{Fr = (-)^q}
  DiagGroup stabilizer;         // S_psi
  DiagGroup mu;                 // identity component of the fixed scheme
  FinGenAbGroup center;         // X^*(Z(Ghat))
  bool elliptic = false;
  ProductForm product_form = ProductForm::TorusQuotient;
};

struct CocycleSpace {
  Eigen::Index free_torus_rank = 0;  // the eta(Fr) coordinate
  DiagGroup fixed_scheme;            // the eta(s_0) coordinate
  Integer component_count;
  DiagGroup component_shape;         // T x identity component
};

/// Character group coker(w - q).
DiagGroup frob_fixed_scheme(const FrobTorus& t);

DiagGroup mu_invariant(const FrobTorus& t);

CocycleSpace cocycle_space(const FrobTorus& t);

/// Kernel of t -> t n t^{-1} n^{-1}: character group coker(1 - w).
DiagGroup twisted_centralizer(const FrobTorus& t);

/// free rank of coker(1 - w) equals the free rank of the center.
bool ellipticity_check(const RootDatum& rd, const WeylTwist& w);

ComponentDescriptor component_descriptor(const RootDatum& rd, const WeylTwist& w, const Integer& q,
                                         const Integer& ell);

}  // namespace llc
