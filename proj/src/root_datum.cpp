#include "llc/root_datum.hpp"

#include "llc/errors.hpp"
#include "llc/smith.hpp"

#include <nlohmann/json.hpp>

#include <set>

namespace llc {

namespace {

using Json = nlohmann::json;

IntMatrix columns_to_matrix(Eigen::Index rank, const std::vector<std::vector<long long>>& cols) {
  IntMatrix m(rank, static_cast<Eigen::Index>(cols.size()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < rank; ++i) m(i, j) = Integer(cols[j][i]);
  }
  return m;
}

// Type A_{n-1} Cartan matrix entry (symmetric).
long long cartan(std::size_t i, std::size_t j) {
  if (i == j) return 2;
  return (i + 1 == j || j + 1 == i) ? -1 : 0;
}

std::set<std::vector<Integer>> root_set(const RootDatum& rd) {
  std::set<std::vector<Integer>> s;
  for (Eigen::Index j = 0; j < rd.roots.cols(); ++j) {
    s.insert(std::vector<Integer>(rd.roots.col(j).begin(), rd.roots.col(j).end()));
  }
  return s;
}

Json matrix_columns_json(const IntMatrix& m) {
  Json cols = Json::array();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    Json col = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) col.push_back(m(i, j).convert_to<long long>());
    cols.push_back(std::move(col));
  }
  return cols;
}

IntMatrix matrix_from_columns_json(const Json& j, Eigen::Index rank) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "expected an array of vectors");
  IntMatrix m(rank, static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    const auto& col = j.at(static_cast<std::size_t>(c));
    if (!col.is_array() || static_cast<Eigen::Index>(col.size()) != rank) {
      throw Error(ErrorCode::InvalidArgument, "vector length differs from the lattice rank");
    }
    for (Eigen::Index i = 0; i < rank; ++i) m(i, c) = Integer(col.at(static_cast<std::size_t>(i)).get<long long>());
  }
  return m;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::PGL: return "PGL";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "GL") return Family::GL;
  if (name == "SL") return Family::SL;
  if (name == "PGL") return Family::PGL;
  throw Error(ErrorCode::UnsupportedFamily, "unsupported group family '" + std::string(name) + "'",
              "use one of GL, SL, PGL");
}

RootDatum preset(Family family, std::size_t n) {
  const std::size_t min_n = family == Family::GL ? 1 : 2;
  if (n < min_n) {
    throw Error(ErrorCode::InvalidRank, std::string(family_name(family)) + "_n needs n >= " + std::to_string(min_n));
  }
  RootDatum rd;
  rd.family = family;
  rd.n = n;
  std::vector<std::vector<long long>> roots, coroots;

  if (family == Family::GL) {
    rd.name = "GL_" + std::to_string(n);
    rd.rank = static_cast<Eigen::Index>(n);
    std::vector<std::vector<long long>> positive;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        std::vector<long long> v(n, 0);
        v[i] = 1;
        v[j] = -1;
        if (j == i + 1) rd.simple_roots.push_back(static_cast<Eigen::Index>(positive.size()));
        positive.push_back(v);
      }
    }
    roots = positive;
    for (auto v : positive) {
      for (auto& x : v) x = -x;
      roots.push_back(v);
    }
    coroots = roots;
  } else {
    // Type A_{n-1} on a rank n-1 lattice. Positive roots are alpha_i + ... + alpha_j.
    const std::size_t r = n - 1;
    rd.rank = static_cast<Eigen::Index>(r);
    // PGL_n: characters in the simple-root basis, cocharacters in the coweight basis.
    // SL_n: characters in the fundamental-weight basis, cocharacters in the coroot basis.
    const bool adjoint = family == Family::SL;
    rd.name = (adjoint ? "PGL_" : "SL_") + std::to_string(n);
    auto indicator = [&](std::size_t i, std::size_t j) {
      std::vector<long long> v(r, 0);
      for (std::size_t k = i; k <= j; ++k) v[k] = 1;
      return v;
    };
    auto cartan_sum = [&](std::size_t i, std::size_t j) {
      std::vector<long long> v(r, 0);
      for (std::size_t k = i; k <= j; ++k) {
        for (std::size_t m = 0; m < r; ++m) v[m] += cartan(m, k);
      }
      return v;
    };
    std::vector<std::vector<long long>> pos_roots, pos_coroots;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i; j < r; ++j) {
        if (i == j) rd.simple_roots.push_back(static_cast<Eigen::Index>(pos_roots.size()));
        pos_roots.push_back(adjoint ? indicator(i, j) : cartan_sum(i, j));
        pos_coroots.push_back(adjoint ? cartan_sum(i, j) : indicator(i, j));
      }
    }
    roots = pos_roots;
    coroots = pos_coroots;
    for (auto v : pos_roots) {
      for (auto& x : v) x = -x;
      roots.push_back(v);
    }
    for (auto v : pos_coroots) {
      for (auto& x : v) x = -x;
      coroots.push_back(v);
    }
  }
  rd.roots = columns_to_matrix(rd.rank, roots);
  rd.coroots = columns_to_matrix(rd.rank, coroots);
  return rd;
}

FinGenAbGroup center_char_group(const RootDatum& rd) { return cokernel(rd.roots); }

IntMatrix reflection(const RootDatum& rd, Eigen::Index root_index) {
  return identity_matrix(rd.rank) - rd.roots.col(root_index) * rd.coroots.col(root_index).transpose();
}

WeylTwist coxeter_twist(const RootDatum& rd) {
  if (!rd.is_preset()) {
    throw Error(ErrorCode::UnsupportedFamily, "the Coxeter twist is only defined for preset data",
                "pass an explicit matrix with --weyl");
  }
  IntMatrix w = identity_matrix(rd.rank);
  for (auto idx : rd.simple_roots) w = w * reflection(rd, idx);
  return {std::move(w), "coxeter"};
}

WeylTwist identity_twist(const RootDatum& rd) { return {identity_matrix(rd.rank), "identity"}; }

bool permutes_roots(const RootDatum& rd, const IntMatrix& m) {
  if (m.rows() != rd.rank || m.cols() != rd.rank) return false;
  const auto roots = root_set(rd);
  const IntMatrix image = m * rd.roots;
  std::set<std::vector<Integer>> images;
  for (Eigen::Index j = 0; j < image.cols(); ++j) {
    std::vector<Integer> v(image.col(j).begin(), image.col(j).end());
    if (!roots.contains(v)) return false;
    images.insert(std::move(v));
  }
  return images.size() == roots.size();
}

WeylTwist twist_from_matrix(const RootDatum& rd, const IntMatrix& m) {
  if (m.rows() != rd.rank || m.cols() != rd.rank) {
    throw Error(ErrorCode::DimensionMismatch,
                "twist must be " + std::to_string(rd.rank) + "x" + std::to_string(rd.rank));
  }
  if (!is_unimodular(m)) throw Error(ErrorCode::InvalidWeylTwist, "twist matrix is not unimodular");
  if (!permutes_roots(rd, m)) {
    throw Error(ErrorCode::InvalidWeylTwist, "twist matrix does not permute the roots of " + rd.name);
  }
  return {m, "matrix"};
}

WeylTwist parse_twist(const RootDatum& rd, std::string_view text) {
  if (text == "coxeter") return coxeter_twist(rd);
  if (text == "identity") return identity_twist(rd);
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_array()) {
    throw Error(ErrorCode::InvalidWeylTwist, "cannot parse Weyl twist '" + std::string(text) + "'",
                "use coxeter, identity, or a row-major matrix literal like [[0,1],[1,0]]");
  }
  std::vector<std::vector<long long>> rows;
  try {
    for (const auto& row : j) rows.push_back(row.get<std::vector<long long>>());
  } catch (const Json::exception&) {
    throw Error(ErrorCode::InvalidWeylTwist, "Weyl twist literal must be a list of integer rows");
  }
  if (rows.empty() && rd.rank == 0) return twist_from_matrix(rd, IntMatrix(0, 0));
  return twist_from_matrix(rd, make_matrix(rows));
}

std::vector<std::string> validate(const RootDatum& rd) {
  std::vector<std::string> violations;
  if (rd.roots.rows() != rd.rank || rd.coroots.rows() != rd.rank) {
    violations.push_back("root or coroot vectors do not live in a rank " + std::to_string(rd.rank) + " lattice");
    return violations;
  }
  if (rd.roots.cols() != rd.coroots.cols()) {
    violations.push_back("roots and coroots are not in bijection");
    return violations;
  }
  for (Eigen::Index i = 0; i < rd.roots.cols(); ++i) {
    const Integer pairing = rd.roots.col(i).dot(rd.coroots.col(i));
    if (pairing != 2) {
      violations.push_back("<alpha_" + std::to_string(i) + ", alpha_" + std::to_string(i) +
                           "^vee> = " + to_string(pairing) + ", expected 2");
    }
  }
  if (root_set(rd).size() != static_cast<std::size_t>(rd.roots.cols())) {
    violations.push_back("root list has duplicates");
  }
  if (violations.empty()) {
    for (Eigen::Index i = 0; i < rd.roots.cols(); ++i) {
      if (!permutes_roots(rd, reflection(rd, i))) {
        violations.push_back("reflection s_alpha_" + std::to_string(i) + " does not preserve the roots");
      }
    }
  }
  if (rd.family) {
    const std::size_t expected = rd.n * (rd.n - 1);
    if (static_cast<std::size_t>(rd.roots.cols()) != expected) {
      violations.push_back("root count " + std::to_string(rd.roots.cols()) + " differs from n(n-1) = " +
                           std::to_string(expected));
    }
  }
  return violations;
}

std::optional<unsigned> twist_order(const IntMatrix& w, unsigned bound) {
  const IntMatrix id = identity_matrix(w.rows());
  IntMatrix power = w;
  for (unsigned m = 1; m <= bound; ++m) {
    if (power == id) return m;
    power = power * w;
  }
  return std::nullopt;
}

Integer coxeter_number(const RootDatum& rd) {
  if (rd.roots.cols() == 0) return 1;
  return Integer(rd.roots.cols()) / Integer(matrix_rank(rd.roots));
}

IntMatrix contragredient(const IntMatrix& w) { return unimodular_inverse(w).transpose(); }

nlohmann::json to_json(const RootDatum& rd) {
  Json j;
  j["name"] = rd.name;
  j["charLatticeRank"] = rd.rank;
  j["cocharLatticeRank"] = rd.rank;
  j["roots"] = matrix_columns_json(rd.roots);
  j["coroots"] = matrix_columns_json(rd.coroots);
  j["pairing"] = "dot";
  if (rd.family) {
    j["family"] = family_name(*rd.family);
    j["n"] = rd.n;
  }
  return j;
}

RootDatum root_datum_from_json(const nlohmann::json& j) {
  try {
    if (j.contains("family")) {
      return preset(parse_family(j.at("family").get<std::string>()), j.at("n").get<std::size_t>());
    }
    RootDatum rd;
    rd.name = j.value("name", std::string("custom"));
    rd.rank = j.at("charLatticeRank").get<Eigen::Index>();
    if (j.contains("cocharLatticeRank") && j.at("cocharLatticeRank").get<Eigen::Index>() != rd.rank) {
      throw Error(ErrorCode::InvalidArgument, "character and cocharacter lattices must have equal rank");
    }
    if (j.value("pairing", std::string("dot")) != "dot") {
      throw Error(ErrorCode::InvalidArgument, "only the standard dot-product pairing is supported");
    }
    rd.roots = matrix_from_columns_json(j.at("roots"), rd.rank);
    rd.coroots = matrix_from_columns_json(j.at("coroots"), rd.rank);
    return rd;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed root datum JSON: ") + e.what());
  }
}

}  // namespace llc
