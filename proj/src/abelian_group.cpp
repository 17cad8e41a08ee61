#include "llc/abelian_group.hpp"

#include "llc/errors.hpp"
#include "llc/smith.hpp"

#include <algorithm>

namespace llc {

namespace {

void require_prime(const Integer& ell) {
  if (!is_prime(ell)) throw Error(ErrorCode::InvalidPrime, to_string(ell) + " is not prime");
}

// Pairwise (gcd, lcm) replacement turns any list of cyclic orders into a
// divisibility chain without factoring.
std::vector<Integer> invariant_factors_from(std::vector<Integer> orders) {
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      const Integer g = gcd(orders[i], orders[j]);
      orders[j] = orders[i] / g * orders[j];
      orders[i] = g;
    }
  }
  std::erase_if(orders, [](const Integer& d) { return d == 1; });
  return orders;
}

}  // namespace

FinGenAbGroup FinGenAbGroup::from_cyclic_orders(std::size_t free_rank, const std::vector<Integer>& orders) {
  FinGenAbGroup g;
  g.free_rank_ = free_rank;
  std::vector<Integer> nontrivial;
  for (const auto& d : orders) {
    if (d == 0) {
      ++g.free_rank_;
    } else if (abs(d) != 1) {
      nontrivial.push_back(abs(d));
    }
  }
  // Already a chain (the common case coming out of SNF): keep as is.
  bool chain = true;
  for (std::size_t i = 1; i < nontrivial.size(); ++i) {
    if (nontrivial[i] % nontrivial[i - 1] != 0) chain = false;
  }
  g.factors_ = chain ? nontrivial : invariant_factors_from(nontrivial);
  return g;
}

FinGenAbGroup FinGenAbGroup::torsion() const { return from_cyclic_orders(0, factors_); }

Integer FinGenAbGroup::torsion_order() const {
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

std::string FinGenAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  if (free_rank_ > 0) s = free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_);
  for (const auto& d : factors_) {
    if (!s.empty()) s += " + ";
    s += "Z/" + llc::to_string(d);
  }
  return s;
}

FinGenAbGroup cokernel(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  std::vector<Integer> orders = snf.diagonal();
  orders.resize(static_cast<std::size_t>(snf.rank));
  const auto free_rank = static_cast<std::size_t>(a.rows() - snf.rank);
  return FinGenAbGroup::from_cyclic_orders(free_rank, orders);
}

FinGenAbGroup direct_sum(const FinGenAbGroup& g, const FinGenAbGroup& h) {
  std::vector<Integer> orders = g.invariant_factors();
  orders.insert(orders.end(), h.invariant_factors().begin(), h.invariant_factors().end());
  return FinGenAbGroup::from_cyclic_orders(g.free_rank() + h.free_rank(), orders);
}

std::optional<Integer> group_order(const FinGenAbGroup& g) {
  if (!g.is_finite()) return std::nullopt;
  return g.torsion_order();
}

FinGenAbGroup ell_primary_part(const FinGenAbGroup& g, const Integer& ell) {
  require_prime(ell);
  std::vector<Integer> orders;
  for (const auto& d : g.invariant_factors()) orders.push_back(ipow(ell, valuation(d, ell)));
  return FinGenAbGroup::from_cyclic_orders(0, orders);
}

FinGenAbGroup prime_to_ell_part(const FinGenAbGroup& g, const Integer& ell) {
  require_prime(ell);
  std::vector<Integer> orders;
  for (const auto& d : g.invariant_factors()) orders.push_back(d / ipow(ell, valuation(d, ell)));
  return FinGenAbGroup::from_cyclic_orders(0, orders);
}

}  // namespace llc
