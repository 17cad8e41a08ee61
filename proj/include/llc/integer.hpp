#pragma once

// Arbitrary-precision integer scalar and the dense Eigen types built on it.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace llc {

/// Exact integer. Expression templates are off so Eigen sees a plain value type.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// A matrix with r rows and c cols is the homomorphism Z^c -> Z^r on column vectors.
using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

/// Builds an IntMatrix from nested rows; all rows must have equal length.
IntMatrix make_matrix(const std::vector<std::vector<long long>>& rows);
IntMatrix identity_matrix(Eigen::Index n);
IntMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols);

// ---- number theory on small inputs (trial division) -------------------------

bool is_prime(const Integer& n);

/// Returns (p, e) with n = p^e, e >= 1, or nullopt if n is not a prime power.
std::optional<std::pair<Integer, unsigned>> prime_power_decomposition(const Integer& n);

/// Largest k with p^k | n. n must be nonzero, p >= 2.
unsigned valuation(Integer n, const Integer& p);

Integer ipow(const Integer& base, unsigned exponent);

/// Least nonnegative residue.
Integer mod_floor(const Integer& a, const Integer& m);

/// Integer with truncation toward -infinity, matching mod_floor.
Integer div_floor(const Integer& a, const Integer& m);

std::string to_string(const Integer& n);

/// Exact conversion when the value fits.
std::optional<std::int64_t> to_int64(const Integer& n);

}  // namespace llc
