#include "llc/abelian_group.hpp"
#include "llc/errors.hpp"
#include "llc/smith.hpp"
#include "oracles/coset_enumeration.hpp"

#include <doctest.h>

#include <random>

using namespace llc;

namespace {

bool is_diagonal_chain(const IntMatrix& d) {
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      if (i != j && d(i, j) != 0) return false;
    }
  }
  const Eigen::Index m = std::min(d.rows(), d.cols());
  for (Eigen::Index i = 0; i < m; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < m && d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
    if (i + 1 < m && d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0) return false;
  }
  return true;
}

IntMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = entry(rng);
  }
  return a;
}

std::vector<oracle::Vec> columns_of(const IntMatrix& a) {
  std::vector<oracle::Vec> cols;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    oracle::Vec c;
    for (Eigen::Index i = 0; i < a.rows(); ++i) c.push_back(a(i, j).convert_to<std::int64_t>());
    cols.push_back(c);
  }
  return cols;
}

std::vector<std::int64_t> factors_of(const FinGenAbGroup& g) {
  std::vector<std::int64_t> out;
  for (const auto& d : g.invariant_factors()) out.push_back(d.convert_to<std::int64_t>());
  return out;
}

}  // namespace

TEST_CASE("smith normal form: identity") {
  auto snf = smith_normal_form(make_matrix({{1, 0}, {0, 1}}));
  CHECK(snf.D == make_matrix({{1, 0}, {0, 1}}));
  CHECK(snf.rank == 2);
}

TEST_CASE("smith normal form: [[2,4],[6,8]] is diag(2,4), matching coset enumeration") {
  const IntMatrix a = make_matrix({{2, 4}, {6, 8}});
  auto snf = smith_normal_form(a);
  CHECK(snf.D == make_matrix({{2, 0}, {0, 4}}));
  CHECK(snf.U * a * snf.V == snf.D);

  const auto cosets = oracle::enumerate_cosets(columns_of(a), 8);
  CHECK(cosets.order == 8);
  CHECK(cosets.exponent == 4);
  CHECK(cosets.torsion_counts == oracle::torsion_counts_of({2, 4}, 8));
}

TEST_CASE("smith normal form: swap - 11 I gives diag(1, 120)") {
  const IntMatrix a = make_matrix({{-11, 1}, {1, -11}});
  auto snf = smith_normal_form(a);
  CHECK(snf.D == make_matrix({{1, 0}, {0, 120}}));
  CHECK(snf.U * a * snf.V == snf.D);
  CHECK(is_unimodular(snf.U));
  CHECK(is_unimodular(snf.V));
}

TEST_CASE("smith normal form of empty and zero matrices") {
  auto empty = smith_normal_form(IntMatrix(0, 3));
  CHECK(empty.rank == 0);
  CHECK(empty.V == identity_matrix(3));
  CHECK(empty.U.rows() == 0);

  auto zero = smith_normal_form(zero_matrix(2, 3));
  CHECK(zero.rank == 0);
  CHECK(zero.D == zero_matrix(2, 3));
}

TEST_CASE("smith normal form is generic over the scalar") {
  Matrix<long long> a(2, 2);
  a << 2, 4, 6, 8;
  auto snf = smith_normal_form(a);
  CHECK(snf.D(0, 0) == 2);
  CHECK(snf.D(1, 1) == 4);
  CHECK((snf.U * a * snf.V) == snf.D);
}

TEST_CASE("smith normal form on big entries") {
  const Integer big = ipow(Integer(11), 18) - 1;
  IntMatrix a(2, 2);
  a << big, Integer(0), Integer(0), Integer(6);
  auto snf = smith_normal_form(a);
  CHECK(snf.D(0, 0) == 6);
  CHECK(snf.D(1, 1) == big);  // 6 | 11^18 - 1
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(0, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const IntMatrix a = random_matrix(rng, size(rng), size(rng), 9);
    auto snf = smith_normal_form(a);
    REQUIRE(snf.U * a * snf.V == snf.D);
    CHECK(is_unimodular(snf.U));
    CHECK(is_unimodular(snf.V));
    CHECK(is_diagonal_chain(snf.D));
    // Transpose law.
    const auto g = cokernel(a), gt = cokernel(a.transpose());
    CHECK(g.torsion() == gt.torsion());
    if (a.rows() == a.cols()) CHECK(g.free_rank() == gt.free_rank());
  }
}

TEST_CASE("cokernel order equals |det| and matches coset enumeration") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> size(1, 4);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto r = size(rng);
    const IntMatrix a = random_matrix(rng, r, r, 4);
    const Integer det = abs(determinant(a));
    if (det == 0 || det > 2000) continue;
    const auto g = cokernel(a);
    REQUIRE(g.is_finite());
    CHECK(g.torsion_order() == det);
    const auto d = det.convert_to<std::int64_t>();
    const auto cosets = oracle::enumerate_cosets(columns_of(a), d);
    CHECK(cosets.order == d);
    CHECK(cosets.torsion_counts == oracle::torsion_counts_of(factors_of(g), d));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("cokernel examples") {
  CHECK(cokernel(make_matrix({{1, 0}, {0, 0}})) == FinGenAbGroup::free(1));
  CHECK(cokernel(make_matrix({{-11, 1}, {1, -11}})) == FinGenAbGroup::cyclic(120));
  CHECK(cokernel(make_matrix({{1, -1}, {-1, 1}})) == FinGenAbGroup::free(1));
  CHECK(cokernel(IntMatrix(2, 0)) == FinGenAbGroup::free(2));
  CHECK(cokernel(IntMatrix(0, 2)).is_trivial());
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(identity_matrix(2)).cols() == 0);
  CHECK(kernel_basis(identity_matrix(2)).rows() == 2);

  const IntMatrix a = make_matrix({{1, -1}, {-1, 1}});
  const IntMatrix k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  CHECK(k == make_matrix({{1}, {1}}));

  CHECK(kernel_basis(zero_matrix(2, 2)) == identity_matrix(2));
}

TEST_CASE("kernel basis columns are primitive, annihilated and saturated") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> size(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix a = random_matrix(rng, size(rng), size(rng), 5);
    const IntMatrix k = kernel_basis(a);
    CHECK(k.cols() == a.cols() - matrix_rank(a));
    CHECK((a * k).isZero());
    for (Eigen::Index j = 0; j < k.cols(); ++j) {
      Integer g = 0;
      for (Eigen::Index i = 0; i < k.rows(); ++i) g = gcd(g, k(i, j));
      CHECK(g == 1);
    }
    // Saturated: Z^cols / span(k) is torsion free.
    CHECK(cokernel(k).is_free());
  }
}

TEST_CASE("invariant factor normalization") {
  auto g = FinGenAbGroup::from_cyclic_orders(0, {Integer(4), Integer(2), Integer(1), Integer(0)});
  CHECK(g.free_rank() == 1);
  CHECK(g.invariant_factors() == std::vector<Integer>{2, 4});

  auto h = FinGenAbGroup::from_cyclic_orders(0, {Integer(6), Integer(10)});
  CHECK(h.invariant_factors() == std::vector<Integer>{2, 30});
  CHECK(FinGenAbGroup::from_cyclic_orders(0, {Integer(2), Integer(3)}) == FinGenAbGroup::cyclic(6));
  CHECK(g.to_string() == "Z + Z/2 + Z/4");
}

TEST_CASE("group order") {
  CHECK(group_order(FinGenAbGroup::from_cyclic_orders(0, {Integer(2), Integer(4)})) == Integer(8));
  CHECK_FALSE(group_order(FinGenAbGroup::free(1)).has_value());
  CHECK(group_order(FinGenAbGroup::cyclic(120)) == Integer(120));
  CHECK(group_order(FinGenAbGroup::trivial()) == Integer(1));
}

TEST_CASE("ell-primary and prime-to-ell parts") {
  const auto z120 = FinGenAbGroup::cyclic(120);
  CHECK(ell_primary_part(z120, 5) == FinGenAbGroup::cyclic(5));
  CHECK(ell_primary_part(z120, 7).is_trivial());
  CHECK(ell_primary_part(FinGenAbGroup::free(1), 5).is_trivial());

  CHECK(prime_to_ell_part(FinGenAbGroup::cyclic(10), 5) == FinGenAbGroup::cyclic(2));
  CHECK(prime_to_ell_part(FinGenAbGroup::cyclic(8), 5) == FinGenAbGroup::cyclic(8));
  CHECK(prime_to_ell_part(FinGenAbGroup::trivial(), 5).is_trivial());

  CHECK_THROWS_AS(ell_primary_part(z120, 4), Error);
  try {
    prime_to_ell_part(z120, 9);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidPrime);
  }
}

TEST_CASE("primary decomposition preserves torsion order") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> order(1, 5000);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = FinGenAbGroup::from_cyclic_orders(0, {Integer(order(rng)), Integer(order(rng))});
    for (int ell : {3, 5, 7, 11}) {
      CHECK(ell_primary_part(g, ell).torsion_order() * prime_to_ell_part(g, ell).torsion_order() ==
            g.torsion_order());
    }
  }
}

TEST_CASE("determinant and unimodular inverse") {
  CHECK(determinant(make_matrix({{2, 4}, {6, 8}})) == -8);
  CHECK(determinant(make_matrix({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  const IntMatrix w = make_matrix({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  CHECK(unimodular_inverse(w) * w == identity_matrix(3));
  CHECK_THROWS_AS(unimodular_inverse(make_matrix({{2}})), Error);
}

TEST_CASE("number theory helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(19));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(21));
  CHECK(prime_power_decomposition(Integer(9)) == std::make_pair(Integer(3), 2u));
  CHECK_FALSE(prime_power_decomposition(Integer(12)).has_value());
  CHECK(valuation(Integer(120), Integer(2)) == 3);
  CHECK(mod_floor(Integer(-1), Integer(120)) == 119);
}
