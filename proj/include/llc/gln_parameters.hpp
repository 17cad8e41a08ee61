#pragma once

// Tame irreducible L-parameters of GL_n, phi = Ind eta, recorded by exponents.
//
// A root of unity zeta^e in mu_{q^n - 1} is stored as e mod q^n - 1. The
// inertia exponent a describes psi(s_0) = diag(zeta^a, zeta^{aq}, ...), the
// Frobenius exponent b is the corner entry zeta^b of psi(Fr).

#include "llc/integer.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace llc {

enum class Coefficients { FbarEll, ZbarEll };

std::string_view coefficients_name(Coefficients c);  // "fbar" / "zbar"
/// Accepts "fbar"/"zbar". Throws InvalidArgument.
Coefficients parse_coefficients(std::string_view name);

/// q^n - 1.
Integer full_modulus(std::size_t n, const Integer& q);

/// Modulus for the inertia exponent: q^n - 1 over Zbar_ell, its prime-to-ell
/// part over Fbar_ell.
Integer inertia_modulus(std::size_t n, const Integer& q, const Integer& ell, Coefficients coeff);

/// Smallest element of {a, aq, ..., aq^{n-1}} mod m.
Integer orbit_minimum(const Integer& a, const Integer& q, const Integer& m, std::size_t n);

/// a, aq, ..., aq^{n-1} pairwise distinct mod m and aq^n = a mod m.
bool is_regular(std::size_t n, const Integer& q, const Integer& a, const Integer& m);

class TrselpGL {
 public:
  /// Reduces a into [0, modulus) and replaces it by its orbit minimum; b is
  /// reduced mod q^n - 1. Throws InvalidArgument (n = 0) and the admissibility
  /// errors of (q, ell).
  static TrselpGL make(std::size_t n, const Integer& q, const Integer& ell, Coefficients coeff, const Integer& a,
                       const Integer& b = 0);

  std::size_t n() const { return n_; }
  const Integer& q() const { return q_; }
  const Integer& ell() const { return ell_; }
  Coefficients coeff() const { return coeff_; }
  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  /// Modulus of a.
  const Integer& modulus() const { return modulus_; }
  /// q^n - 1, the modulus of b and of matrix exponents.
  Integer full_modulus() const { return llc::full_modulus(n_, q_); }
  /// v_ell(q^n - 1).
  unsigned k() const;
  bool regular() const { return is_regular(n_, q_, a_, modulus_); }

  friend bool operator==(const TrselpGL&, const TrselpGL&) = default;

 private:
  TrselpGL() = default;
  std::size_t n_ = 0;
  Integer q_, ell_;
  Coefficients coeff_ = Coefficients::ZbarEll;
  Integer a_, b_, modulus_;
};

/// An n x n matrix whose entries are 0 or a root of unity zeta^e, e mod modulus.
struct ExponentMatrix {
  std::size_t n = 0;
  std::vector<std::optional<Integer>> entries;  // row-major; nullopt is 0

  static ExponentMatrix zeros(std::size_t n) { return {n, std::vector<std::optional<Integer>>(n * n)}; }
  std::optional<Integer>& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  const std::optional<Integer>& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

struct ParamMatrices {
  ExponentMatrix x;  // psi(s_0)
  ExponentMatrix y;  // psi(Fr)
  Integer modulus;   // q^n - 1
};

struct EnumerateOptions {
  std::uint64_t max_modulus = 10'000'000;
};

/// Canonical inertia exponents (orbit minima) of all regular q-orbits on
/// Z/M, ascending. Throws ModulusTooLarge when M exceeds the cap.
std::vector<std::uint64_t> enumerate_exponents(std::size_t n, const Integer& q, const Integer& ell,
                                               Coefficients coeff, const EnumerateOptions& opts = {});

/// The same, as parameters with b = 0.
std::vector<TrselpGL> enumerate(std::size_t n, const Integer& q, const Integer& ell, Coefficients coeff,
                                const EnumerateOptions& opts = {});

/// Throws CoefficientMismatch for Fbar_ell parameters.
ParamMatrices matrices(const TrselpGL& p);

/// y x y^{-1} = x^q in exponent arithmetic. Needs x diagonal with nonzero
/// diagonal and y monomial; anything else is reported as false.
bool verify_cocycle(const ParamMatrices& m, const Integer& q);

/// Zbar_ell -> Fbar_ell: keep a mod the prime-to-ell part of q^n - 1.
/// Throws CoefficientMismatch for Fbar_ell input.
TrselpGL reduction(const TrselpGL& p);

/// All ell^k lifts of phi to Zbar_ell coefficients. The lift whose exponent is
/// divisible by ell^k (prime-to-ell order) comes first, the rest ascend.
/// Throws CoefficientMismatch for Zbar_ell input.
std::vector<TrselpGL> lifts_in_component(const TrselpGL& phi);

/// Same q-orbit of a and equal b. Throws ShapeMismatch if n, q, ell or the
/// coefficients differ.
bool equivalent(const TrselpGL& p1, const TrselpGL& p2);

/// 1-based positions (i, j) with a (q^{i-1} - q^{j-1}) = 0 mod the parameter's
/// modulus, sorted. For a regular parameter this is exactly the diagonal.
std::vector<std::pair<std::size_t, std::size_t>> nilpotent_support_fixed_positions(const TrselpGL& p);

}  // namespace llc
