#pragma once

// Split root data of dual groups and Weyl twists acting on their character
// lattices.

#include "llc/abelian_group.hpp"
#include "llc/integer.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace llc {

/// Family of the group G. The preset built from it is the datum of the dual
/// group: GL_n -> GL_n, SL_n -> PGL_n, PGL_n -> SL_n.
enum class Family { GL, SL, PGL };

std::string_view family_name(Family f);
/// Throws UnsupportedFamily.
Family parse_family(std::string_view name);

struct RootDatum {
  std::string name;
  Eigen::Index rank = 0;
  IntMatrix roots;    // rank x N, one root per column
  IntMatrix coroots;  // rank x N, coroots[:, i] pairs with roots[:, i]

  // Preset bookkeeping; empty for user-supplied data.
  std::optional<Family> family;
  std::size_t n = 0;
  std::vector<Eigen::Index> simple_roots;  // column indices into roots

  Eigen::Index root_count() const { return roots.cols(); }
  bool is_preset() const { return family.has_value(); }
};

/// Automorphism of the character lattice induced by conjugation by psi(Fr).
struct WeylTwist {
  IntMatrix matrix;
  std::string name;  // "coxeter", "identity", or "matrix"
};

/// Basis conventions: standard coordinates for GL_n, simple roots for PGL_n
/// (adjoint), fundamental weights for SL_n (simply connected).
/// Throws InvalidRank (n < 1 for GL, n < 2 otherwise).
RootDatum preset(Family family, std::size_t n);

/// X^*(Z(Ghat)) = character lattice / root lattice.
FinGenAbGroup center_char_group(const RootDatum& rd);

/// Product of the simple reflections s_1 s_2 ... s_{n-1}. For GL_n this is the
/// cyclic shift e_i -> e_{i+1}. Throws UnsupportedFamily for non-presets.
WeylTwist coxeter_twist(const RootDatum& rd);

WeylTwist identity_twist(const RootDatum& rd);

/// Validates a raw matrix: square of the datum's rank, unimodular, permutes
/// the roots. Throws DimensionMismatch / InvalidWeylTwist.
WeylTwist twist_from_matrix(const RootDatum& rd, const IntMatrix& m);

/// Accepts "coxeter", "identity" or a JSON matrix literal such as "[[0,1],[1,0]]".
WeylTwist parse_twist(const RootDatum& rd, std::string_view text);

/// s_alpha(x) = x - <x, alpha^vee> alpha, as a matrix on the character lattice.
IntMatrix reflection(const RootDatum& rd, Eigen::Index root_index);

/// Human-readable violations of the datum invariants; empty means valid.
std::vector<std::string> validate(const RootDatum& rd);

/// True iff the matrix maps the root set onto itself.
bool permutes_roots(const RootDatum& rd, const IntMatrix& m);

/// Smallest m in [1, bound] with w^m = 1, or nullopt.
std::optional<unsigned> twist_order(const IntMatrix& w, unsigned bound);

/// |roots| / semisimple rank; 1 when there are no roots.
Integer coxeter_number(const RootDatum& rd);

/// The action on the dual (cocharacter) lattice: (w^T)^{-1}.
IntMatrix contragredient(const IntMatrix& w);

nlohmann::json to_json(const RootDatum& rd);
/// Throws InvalidArgument on malformed input.
RootDatum root_datum_from_json(const nlohmann::json& j);

}  // namespace llc
