#include "llc/torus_cocycles.hpp"

#include "llc/errors.hpp"
#include "llc/smith.hpp"

namespace llc {

Admissible Admissible::check(const Integer& q, const Integer& ell) {
  auto pe = prime_power_decomposition(q);
  if (!pe) {
    throw Error(ErrorCode::InvalidPrimePower, "q = " + to_string(q) + " is not a prime power",
                "q is the residue field size p^e");
  }
  if (pe->first == 2) {
    throw Error(ErrorCode::CharacteristicTwo, "residue characteristic p = 2 is excluded", "use an odd q");
  }
  if (ell == 2) throw Error(ErrorCode::EllIsTwo, "ell = 2 is excluded", "use an odd prime ell");
  if (!is_prime(ell)) throw Error(ErrorCode::InvalidPrime, "ell = " + to_string(ell) + " is not prime");
  if (ell == pe->first) {
    throw Error(ErrorCode::EllEqualsCharacteristic, "ell must differ from the residue characteristic",
                "pick ell not dividing q");
  }
  return {q, pe->first, ell};
}

FrobTorus::FrobTorus(WeylTwist w, const Integer& q, const Integer& ell)
    : w_(std::move(w)), params_(Admissible::check(q, ell)) {
  if (w_.matrix.rows() != w_.matrix.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "Weyl twist must be square");
  }
  if (!is_unimodular(w_.matrix)) throw Error(ErrorCode::InvalidWeylTwist, "Weyl twist is not unimodular");
}

std::string_view product_form_name(ProductForm f) {
  return f == ProductForm::PointModStabilizer ? "point_mod_S_psi" : "torus_quotient";
}

DiagGroup frob_fixed_scheme(const FrobTorus& t) {
  const IntMatrix a = t.twist().matrix - t.q() * identity_matrix(t.rank());
  auto g = cokernel(a);
  // An integer eigenvalue q >= 2 of a unimodular matrix would have to divide det = +-1.
  if (!g.is_finite()) throw Error(ErrorCode::InternalError, "w - q is singular");
  return DiagGroup(std::move(g));
}

DiagGroup mu_invariant(const FrobTorus& t) { return identity_component(frob_fixed_scheme(t), t.ell()); }

CocycleSpace cocycle_space(const FrobTorus& t) {
  CocycleSpace s;
  s.free_torus_rank = t.rank();
  s.fixed_scheme = frob_fixed_scheme(t);
  s.component_count = component_group(s.fixed_scheme, t.ell()).torsion_order();
  s.component_shape = product(torus(static_cast<std::size_t>(t.rank())), identity_component(s.fixed_scheme, t.ell()));
  return s;
}

DiagGroup twisted_centralizer(const FrobTorus& t) {
  return DiagGroup(cokernel(identity_matrix(t.rank()) - t.twist().matrix));
}

bool ellipticity_check(const RootDatum& rd, const WeylTwist& w) {
  if (w.matrix.rows() != rd.rank || w.matrix.cols() != rd.rank) {
    throw Error(ErrorCode::DimensionMismatch, "twist size does not match the rank of " + rd.name);
  }
  const auto centralizer = cokernel(identity_matrix(rd.rank) - w.matrix);
  return centralizer.free_rank() == center_char_group(rd).free_rank();
}

ComponentDescriptor component_descriptor(const RootDatum& rd, const WeylTwist& w, const Integer& q,
                                         const Integer& ell) {
  const FrobTorus t(w, q, ell);
  if (t.rank() != rd.rank) throw Error(ErrorCode::DimensionMismatch, "twist size does not match " + rd.name);
  ComponentDescriptor c;
  c.datum = rd.name;
  c.orbit_torus_rank = rd.rank - matrix_rank(IntMatrix(identity_matrix(rd.rank) - w.matrix));
  c.fixed_scheme = frob_fixed_scheme(t);
  c.stabilizer = twisted_centralizer(t);
  c.mu = identity_component(c.fixed_scheme, ell);
  c.center = center_char_group(rd);
  c.elliptic = ellipticity_check(rd, w);
  c.product_form =
      (c.elliptic && c.center.is_finite()) ? ProductForm::PointModStabilizer : ProductForm::TorusQuotient;
  return c;
}

}  // namespace llc
