#include "llc/errors.hpp"
#include "llc/gln_parameters.hpp"
#include "oracles/orbit_scan.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace llc;

namespace {

TrselpGL zbar(std::size_t n, long q, long ell, long a, long b = 0) {
  return TrselpGL::make(n, q, ell, Coefficients::ZbarEll, a, b);
}

TrselpGL fbar(std::size_t n, long q, long ell, long a) { return TrselpGL::make(n, q, ell, Coefficients::FbarEll, a); }

std::vector<Integer> exponents(const std::vector<TrselpGL>& ps) {
  std::vector<Integer> out;
  for (const auto& p : ps) out.push_back(p.a());
  return out;
}

}  // namespace

TEST_CASE("moduli") {
  CHECK(full_modulus(2, 11) == 120);
  CHECK(inertia_modulus(2, 11, 5, Coefficients::ZbarEll) == 120);
  CHECK(inertia_modulus(2, 11, 5, Coefficients::FbarEll) == 24);
  CHECK(inertia_modulus(2, 11, 7, Coefficients::FbarEll) == 120);
  CHECK(inertia_modulus(2, 7, 3, Coefficients::FbarEll) == 16);
}

TEST_CASE("regularity") {
  CHECK(is_regular(2, 11, 1, 120));
  CHECK_FALSE(is_regular(2, 11, 12, 120));
  for (std::size_t n = 2; n <= 5; ++n) CHECK_FALSE(is_regular(n, 11, 0, full_modulus(n, 11)));
  CHECK(is_regular(1, 11, 0, 10));
}

TEST_CASE("canonical form") {
  const auto p = zbar(2, 11, 5, 11);
  CHECK(p.a() == 1);
  CHECK(p.modulus() == 120);
  CHECK(p.k() == 1);
  CHECK(zbar(2, 11, 5, -1).a() == orbit_minimum(119, 11, 120, 2));
  CHECK(zbar(2, 11, 5, 1, 125).b() == 5);
  CHECK_THROWS_AS(zbar(0, 11, 5, 1), Error);
  CHECK_THROWS_AS(zbar(2, 12, 5, 1), Error);
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate(2, 11, 5, Coefficients::ZbarEll).size() == 55);
  CHECK(enumerate(2, 11, 5, Coefficients::FbarEll).size() == 11);
  for (long q : {3, 5, 11}) {
    CHECK(enumerate(1, q, 7, Coefficients::ZbarEll).size() == static_cast<std::size_t>(q - 1));
  }
  CHECK(enumerate(1, 11, 5, Coefficients::FbarEll).size() == 2);
}

TEST_CASE("enumeration agrees with a direct orbit scan") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (long q : {3, 5, 7, 9}) {
      for (long ell : {3, 5, 7}) {
        if (q % ell == 0) continue;
        for (auto coeff : {Coefficients::ZbarEll, Coefficients::FbarEll}) {
          const auto m = inertia_modulus(n, q, ell, coeff).convert_to<std::uint64_t>();
          const auto exps = enumerate_exponents(n, q, ell, coeff);
          CHECK(exps.size() == oracle::count_regular_orbits(n, static_cast<std::uint64_t>(q), m));
          for (auto a : exps) CHECK(oracle::is_regular_orbit_minimum(a, static_cast<std::uint64_t>(q) % m, m, n));
          CHECK(std::is_sorted(exps.begin(), exps.end()));
        }
      }
    }
  }
}

TEST_CASE("enumeration cap") {
  EnumerateOptions small;
  small.max_modulus = 100;
  try {
    enumerate_exponents(2, 11, 5, Coefficients::ZbarEll, small);
    FAIL("expected ModulusTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModulusTooLarge);
  }
  CHECK(enumerate_exponents(2, 11, 5, Coefficients::FbarEll, small).size() == 11);
}

TEST_CASE("parameter matrices") {
  const auto m = matrices(zbar(2, 11, 5, 1));
  CHECK(m.modulus == 120);
  CHECK(m.x.at(0, 0) == Integer(1));
  CHECK(m.x.at(1, 1) == Integer(11));
  CHECK_FALSE(m.x.at(0, 1).has_value());
  CHECK(m.y.at(0, 1) == Integer(0));
  CHECK(m.y.at(1, 0) == Integer(0));
  CHECK_FALSE(m.y.at(0, 0).has_value());

  const auto one = matrices(zbar(1, 11, 5, 3, 7));
  CHECK(one.x.at(0, 0) == Integer(3));
  CHECK(one.y.at(0, 0) == Integer(7));

  const auto three = matrices(zbar(3, 7, 19, 1));
  CHECK(three.modulus == 342);
  CHECK(three.x.at(0, 0) == Integer(1));
  CHECK(three.x.at(1, 1) == Integer(7));
  CHECK(three.x.at(2, 2) == Integer(49));

  CHECK_THROWS_AS(matrices(fbar(2, 11, 5, 1)), Error);
}

TEST_CASE("order three example embeds with exponent 40") {
  // zeta_3 = zeta^40 in mu_120
  const auto p = zbar(2, 11, 5, 40);
  CHECK(p.a() == 40);
  CHECK(p.regular());  // 40 * 11 = 440 = 80 mod 120
  const auto m = matrices(p);
  CHECK(m.x.at(1, 1) == Integer(80));
  CHECK(verify_cocycle(m, 11));
}

TEST_CASE("cocycle relation") {
  CHECK(verify_cocycle(matrices(zbar(2, 11, 5, 1)), 11));
  CHECK(verify_cocycle(matrices(zbar(2, 11, 5, 0)), 11));
  CHECK(verify_cocycle(matrices(zbar(4, 5, 3, 7, 13)), 5));

  auto corrupted = matrices(zbar(2, 11, 5, 1));
  corrupted.x.at(1, 1) = Integer(12);
  CHECK_FALSE(verify_cocycle(corrupted, 11));

  auto not_diagonal = matrices(zbar(2, 11, 5, 1));
  not_diagonal.x.at(0, 1) = Integer(0);
  CHECK_FALSE(verify_cocycle(not_diagonal, 11));
}

TEST_CASE("reduction") {
  CHECK(reduction(zbar(2, 11, 5, 25)).a() == 1);
  CHECK(reduction(zbar(2, 11, 5, 0)).a() == 0);
  CHECK(reduction(zbar(2, 11, 5, 49)).a() == 1);
  CHECK(reduction(zbar(2, 11, 5, 25)).modulus() == 24);
  CHECK(reduction(zbar(2, 11, 5, 25)).coeff() == Coefficients::FbarEll);
  CHECK_THROWS_AS(reduction(fbar(2, 11, 5, 1)), Error);
}

TEST_CASE("lifts") {
  const auto lifts = lifts_in_component(fbar(2, 11, 5, 1));
  REQUIRE(lifts.size() == 5);
  CHECK(lifts.front().a() == 25);
  // 1, 49, 73, 97 in canonical (orbit minimum) form
  std::vector<Integer> rest;
  for (long a : {1, 49, 73, 97}) rest.push_back(orbit_minimum(a, 11, 120, 2));
  std::sort(rest.begin(), rest.end());
  const auto exps = exponents(lifts);
  CHECK(std::vector<Integer>(exps.begin() + 1, exps.end()) == rest);
  for (const auto& l : lifts) CHECK(reduction(l) == fbar(2, 11, 5, 1));

  CHECK(lifts_in_component(fbar(2, 11, 7, 1)).size() == 1);

  const auto zero = exponents(lifts_in_component(fbar(2, 11, 5, 0)));
  std::vector<Integer> expected;
  for (long a : {0, 24, 48, 72, 96}) expected.push_back(orbit_minimum(a, 11, 120, 2));
  CHECK(zero.front() == 0);
  std::sort(expected.begin(), expected.end());
  auto sorted = zero;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == expected);

  CHECK_THROWS_AS(lifts_in_component(zbar(2, 11, 5, 1)), Error);
}

TEST_CASE("lift count is ell^k") {
  for (long q : {3, 7, 17}) {
    for (long ell : {3, 5}) {
      if (q % ell == 0) continue;
      for (std::size_t n = 1; n <= 3; ++n) {
        const Integer full = full_modulus(n, q);
        const Integer ell_k = ipow(Integer(ell), valuation(full, ell));
        for (const auto& phi : enumerate(n, q, ell, Coefficients::FbarEll)) {
          const auto lifts = lifts_in_component(phi);
          CHECK(Integer(lifts.size()) == ell_k);
          CHECK(lifts.front().a() % ell_k == 0);
        }
      }
    }
  }
}

TEST_CASE("equivalence") {
  CHECK(equivalent(zbar(2, 11, 5, 1), zbar(2, 11, 5, 11)));
  CHECK_FALSE(equivalent(zbar(2, 11, 5, 1), zbar(2, 11, 5, 2)));
  CHECK(equivalent(zbar(2, 11, 5, 7), zbar(2, 11, 5, 7)));
  CHECK_FALSE(equivalent(zbar(2, 11, 5, 1, 0), zbar(2, 11, 5, 1, 3)));
  try {
    equivalent(zbar(2, 11, 5, 1), zbar(3, 11, 5, 1));
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ShapeMismatch);
  }
  CHECK_THROWS_AS(equivalent(zbar(2, 11, 5, 1), fbar(2, 11, 5, 1)), Error);
}

TEST_CASE("nilpotent support") {
  using Pos = std::vector<std::pair<std::size_t, std::size_t>>;
  const Pos all{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  CHECK(nilpotent_support_fixed_positions(zbar(2, 11, 5, 1)) == Pos{{1, 1}, {2, 2}});
  CHECK(nilpotent_support_fixed_positions(zbar(2, 11, 5, 0)) == all);
  CHECK(nilpotent_support_fixed_positions(zbar(2, 11, 5, 12)) == all);
}

TEST_CASE("coefficient names") {
  CHECK(parse_coefficients("fbar") == Coefficients::FbarEll);
  CHECK(coefficients_name(Coefficients::ZbarEll) == "zbar");
  CHECK_THROWS_AS(parse_coefficients("qbar"), Error);
}
