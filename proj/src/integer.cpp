#include "llc/integer.hpp"

#include "llc/errors.hpp"

#include <limits>

namespace llc {

IntMatrix make_matrix(const std::vector<std::vector<long long>>& rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = rows.empty() ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.front().size());
  IntMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != c) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    }
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Integer(rows[i][j]);
  }
  return m;
}

IntMatrix identity_matrix(Eigen::Index n) {
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols) { return IntMatrix::Zero(rows, cols); }

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Integer d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<Integer, unsigned>> prime_power_decomposition(const Integer& n) {
  if (n < 2) return std::nullopt;
  Integer p = 0;
  if (n % 2 == 0) {
    p = 2;
  } else {
    for (Integer d = 3; d * d <= n; d += 2) {
      if (n % d == 0) {
        p = d;
        break;
      }
    }
    if (p == 0) p = n;
  }
  Integer rest = n;
  unsigned e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, e);
}

unsigned valuation(Integer n, const Integer& p) {
  if (n == 0 || p < 2) throw Error(ErrorCode::InvalidArgument, "valuation needs n != 0 and p >= 2");
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

Integer ipow(const Integer& base, unsigned exponent) {
  Integer result = 1;
  Integer b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

Integer div_floor(const Integer& a, const Integer& m) {
  Integer q = a / m;
  if ((a % m != 0) && ((a < 0) != (m < 0))) q -= 1;
  return q;
}

std::string to_string(const Integer& n) { return n.str(); }

std::optional<std::int64_t> to_int64(const Integer& n) {
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return n.convert_to<std::int64_t>();
}

}  // namespace llc
