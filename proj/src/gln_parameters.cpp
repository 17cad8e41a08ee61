#include "llc/gln_parameters.hpp"

#include "llc/errors.hpp"
#include "llc/torus_cocycles.hpp"

#include <algorithm>

namespace llc {

namespace {

Integer mod_inverse(const Integer& a, const Integer& m) {
  // Extended Euclid on (a mod m, m).
  Integer old_r = mod_floor(a, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    const Integer quotient = old_r / r;
    old_r -= quotient * r;
    std::swap(old_r, r);
    old_s -= quotient * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw Error(ErrorCode::InternalError, "no modular inverse");
  return mod_floor(old_s, m);
}

void require_coeff(const TrselpGL& p, Coefficients expected, const char* op) {
  if (p.coeff() != expected) {
    throw Error(ErrorCode::CoefficientMismatch,
                std::string(op) + " needs " + std::string(coefficients_name(expected)) + " coefficients");
  }
}

}  // namespace

std::string_view coefficients_name(Coefficients c) { return c == Coefficients::FbarEll ? "fbar" : "zbar"; }

Coefficients parse_coefficients(std::string_view name) {
  if (name == "fbar") return Coefficients::FbarEll;
  if (name == "zbar") return Coefficients::ZbarEll;
  throw Error(ErrorCode::InvalidArgument, "unknown coefficients '" + std::string(name) + "'", "use fbar or zbar");
}

Integer full_modulus(std::size_t n, const Integer& q) { return ipow(q, static_cast<unsigned>(n)) - 1; }

Integer inertia_modulus(std::size_t n, const Integer& q, const Integer& ell, Coefficients coeff) {
  const Integer full = full_modulus(n, q);
  if (coeff == Coefficients::ZbarEll) return full;
  return full / ipow(ell, valuation(full, ell));
}

Integer orbit_minimum(const Integer& a, const Integer& q, const Integer& m, std::size_t n) {
  Integer x = mod_floor(a, m);
  Integer best = x;
  for (std::size_t i = 1; i < n; ++i) {
    x = (x * q) % m;
    best = std::min(best, x);
  }
  return best;
}

bool is_regular(std::size_t n, const Integer& q, const Integer& a, const Integer& m) {
  std::vector<Integer> orbit;
  orbit.reserve(n);
  Integer x = mod_floor(a, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(orbit.begin(), orbit.end(), x) != orbit.end()) return false;
    orbit.push_back(x);
    x = (x * q) % m;
  }
  return x == orbit.front();
}

TrselpGL TrselpGL::make(std::size_t n, const Integer& q, const Integer& ell, Coefficients coeff, const Integer& a,
                        const Integer& b) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "GL_n needs n >= 1");
  Admissible::check(q, ell);
  TrselpGL p;
  p.n_ = n;
  p.q_ = q;
  p.ell_ = ell;
  p.coeff_ = coeff;
  p.modulus_ = inertia_modulus(n, q, ell, coeff);
  p.a_ = orbit_minimum(a, q, p.modulus_, n);
  p.b_ = mod_floor(b, llc::full_modulus(n, q));
  return p;
}

unsigned TrselpGL::k() const { return valuation(full_modulus(), ell_); }

std::vector<std::uint64_t> enumerate_exponents(std::size_t n, const Integer& q, const Integer& ell,
                                               Coefficients coeff, const EnumerateOptions& opts) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "GL_n needs n >= 1");
  Admissible::check(q, ell);
  const Integer big_m = inertia_modulus(n, q, ell, coeff);
  if (big_m > opts.max_modulus) {
    throw Error(ErrorCode::ModulusTooLarge,
                "modulus " + to_string(big_m) + " exceeds the enumeration cap " + std::to_string(opts.max_modulus),
                "raise LLC_PARAMS_MAX_MODULUS or pick smaller n, q");
  }
  const auto m = big_m.convert_to<std::uint64_t>();
  const auto qm = (q % big_m).convert_to<std::uint64_t>();
  // m <= cap keeps x * qm inside 64 bits for any sane cap.
  std::vector<bool> seen(m, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a < m; ++a) {
    if (seen[a]) continue;
    std::size_t size = 0;
    std::uint64_t x = a;
    do {
      seen[x] = true;
      ++size;
      x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * qm) % m);
    } while (x != a && size <= n);
    // Ascending scan: the first unseen element is its orbit's minimum.
    if (size == n && x == a) out.push_back(a);
  }
  return out;
}

std::vector<TrselpGL> enumerate(std::size_t n, const Integer& q, const Integer& ell, Coefficients coeff,
                                const EnumerateOptions& opts) {
  std::vector<TrselpGL> out;
  for (auto a : enumerate_exponents(n, q, ell, coeff, opts)) out.push_back(TrselpGL::make(n, q, ell, coeff, a));
  return out;
}

ParamMatrices matrices(const TrselpGL& p) {
  require_coeff(p, Coefficients::ZbarEll, "matrices");
  const std::size_t n = p.n();
  ParamMatrices m{ExponentMatrix::zeros(n), ExponentMatrix::zeros(n), p.full_modulus()};
  Integer e = p.a();
  for (std::size_t i = 0; i < n; ++i) {
    m.x.at(i, i) = e;
    e = (e * p.q()) % m.modulus;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) m.y.at(i, i + 1) = Integer(0);
  m.y.at(n - 1, 0) = p.b();
  return m;
}

bool verify_cocycle(const ParamMatrices& m, const Integer& q) {
  const std::size_t n = m.x.n;
  if (m.y.n != n || n == 0 || m.modulus <= 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((i == j) != m.x.at(i, j).has_value()) return false;
    }
  }
  // y e_j = zeta^{c_j} e_{sigma(j)}; then y x y^{-1} carries x_j to position sigma(j).
  std::vector<std::size_t> sigma(n, n);
  std::vector<bool> row_used(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!m.y.at(i, j)) continue;
      if (sigma[j] != n || row_used[i]) return false;
      sigma[j] = i;
      row_used[i] = true;
    }
    if (sigma[j] == n) return false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Integer& conjugated = *m.x.at(j, j);
    const Integer& target = *m.x.at(sigma[j], sigma[j]);
    if (mod_floor(conjugated - q * target, m.modulus) != 0) return false;
  }
  return true;
}

TrselpGL reduction(const TrselpGL& p) {
  require_coeff(p, Coefficients::ZbarEll, "reduction");
  return TrselpGL::make(p.n(), p.q(), p.ell(), Coefficients::FbarEll, p.a(), p.b());
}

std::vector<TrselpGL> lifts_in_component(const TrselpGL& phi) {
  require_coeff(phi, Coefficients::FbarEll, "lifts_in_component");
  const Integer full = phi.full_modulus();
  const Integer prime_to_ell = phi.modulus();
  const Integer ell_part = full / prime_to_ell;

  // Lifts are a + t * M' for t in [0, ell^k); the canonical one has t with
  // a + t M' = 0 mod ell^k.
  Integer canonical_t = 0;
  if (ell_part > 1) canonical_t = mod_floor(-phi.a() * mod_inverse(prime_to_ell, ell_part), ell_part);

  auto lift = [&](const Integer& t) {
    return TrselpGL::make(phi.n(), phi.q(), phi.ell(), Coefficients::ZbarEll, phi.a() + t * prime_to_ell, phi.b());
  };
  std::vector<TrselpGL> rest;
  for (Integer t = 0; t < ell_part; ++t) {
    if (t != canonical_t) rest.push_back(lift(t));
  }
  std::sort(rest.begin(), rest.end(), [](const TrselpGL& x, const TrselpGL& y) { return x.a() < y.a(); });
  std::vector<TrselpGL> out{lift(canonical_t)};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

bool equivalent(const TrselpGL& p1, const TrselpGL& p2) {
  if (p1.n() != p2.n() || p1.q() != p2.q() || p1.ell() != p2.ell() || p1.coeff() != p2.coeff()) {
    throw Error(ErrorCode::ShapeMismatch, "parameters live over different (n, q, ell, coefficients)");
  }
  // Both exponents are already orbit minima.
  return p1.a() == p2.a() && p1.b() == p2.b();
}

std::vector<std::pair<std::size_t, std::size_t>> nilpotent_support_fixed_positions(const TrselpGL& p) {
  const std::size_t n = p.n();
  std::vector<Integer> powers(n);
  powers[0] = 1;
  for (std::size_t i = 1; i < n; ++i) powers[i] = powers[i - 1] * p.q();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (mod_floor(p.a() * (powers[i] - powers[j]), p.modulus()) == 0) out.emplace_back(i + 1, j + 1);
    }
  }
  return out;
}

}  // namespace llc
