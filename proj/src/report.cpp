#include "llc/report.hpp"

#include <sstream>

namespace llc::report {

using Json = nlohmann::json;

Json integer(const Integer& n) {
  if (auto v = to_int64(n)) return *v;
  return to_string(n);
}

Json group(const FinGenAbGroup& g) {
  Json torsion = Json::array();
  for (const auto& d : g.invariant_factors()) torsion.push_back(integer(d));
  return {{"freeRank", g.free_rank()}, {"torsion", torsion}};
}

Json group(const DiagGroup& d) {
  Json j = group(d.character_group());
  j["notation"] = notation(d);
  return j;
}

Json matrix(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(integer(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json component(const ComponentDescriptor& c) {
  return {
      {"datum", c.datum},
      {"orbitTorusRank", c.orbit_torus_rank},
      {"fixedScheme", group(c.fixed_scheme)},
      {"stabilizer", group(c.stabilizer)},
      {"mu", group(c.mu)},
      {"center", group(c.center)},
      {"elliptic", c.elliptic},
      {"productForm", std::string(product_form_name(c.product_form))},
      {"notation", notation(c)},
  };
}

Json cocycles(const CocycleSpace& s) {
  return {
      {"freeTorusRank", s.free_torus_rank},
      {"fixedScheme", group(s.fixed_scheme)},
      {"componentCount", integer(s.component_count)},
      {"componentShape", group(s.component_shape)},
  };
}

Json block(const BlockDescriptor& b) {
  return {
      {"datum", b.datum},
      {"torsion", group(b.torsion)},
      {"freeRank", b.free_rank},
      {"finiteTorus", group(b.finite_torus)},
      {"finiteTorusOrder", integer(b.finite_torus_order)},
      {"k", b.k},
      {"fundamentalGroup", group(b.fundamental_group)},
      {"coxeterNumber", integer(b.coxeter_number)},
  };
}

Json match(const MatchReport& m) {
  return {
      {"muCharGroup", group(m.mu_char_group)},
      {"blockTorsion", group(m.block_torsion)},
      {"isomorphic", m.isomorphic},
      {"freeRanksAgree", m.free_ranks_agree},
      {"gradingsAgree", m.gradings_agree},
      {"grading", {{"group", group(m.grading.group)}, {"identifications", m.grading.identifications}}},
      {"contextConsistent", m.context_consistent},
      {"applicabilityFlags", m.applicability_flags},
      {"matched", m.matched()},
  };
}

Json parameter(const TrselpGL& p) {
  return {
      {"n", p.n()},
      {"q", integer(p.q())},
      {"ell", integer(p.ell())},
      {"coeff", std::string(coefficients_name(p.coeff()))},
      {"a", integer(p.a())},
      {"b", integer(p.b())},
      {"modulus", integer(p.modulus())},
  };
}

Json exponent_matrix(const ExponentMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.n; ++j) {
      const auto& e = m.at(i, j);
      row.push_back(e ? Json{{"exp", integer(*e)}} : Json{{"zero", true}});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json summary(const CategoricalSummary& s) {
  auto side = [](const SideSummary& side) {
    return Json{{"gradingIndex", {{"group", group(side.grading.group)}, {"identifications", side.grading.identifications}}},
                {"cellFactor", {{"freeRank", side.cell.free_rank}, {"torsion", group(side.cell.torsion)}}}};
  };
  return {
      {"n", s.n},
      {"q", integer(s.q)},
      {"ell", integer(s.ell)},
      {"parameterSide", side(s.parameter_side)},
      {"representationSide", side(s.representation_side)},
      {"component", component(s.component)},
      {"block", block(s.block)},
      {"match", match(s.match)},
  };
}

std::string notation(const FinGenAbGroup& characters) {
  std::string s;
  if (characters.free_rank() == 1) s = "G_m";
  if (characters.free_rank() > 1) s = "G_m^" + std::to_string(characters.free_rank());
  for (const auto& d : characters.invariant_factors()) {
    if (!s.empty()) s += " × ";
    s += "μ_" + to_string(d);
  }
  return s.empty() ? "1" : s;
}

std::string notation(const DiagGroup& d) { return notation(d.character_group()); }

std::string notation(const ComponentDescriptor& c) {
  std::string orbit = "*";
  if (c.product_form == ProductForm::TorusQuotient && c.orbit_torus_rank > 0) {
    orbit = notation(FinGenAbGroup::free(static_cast<std::size_t>(c.orbit_torus_rank)));
  }
  return "[" + orbit + "/" + notation(c.stabilizer) + "] × " + notation(c.mu);
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string text(const ComponentDescriptor& c) {
  std::ostringstream os;
  os << "component of " << c.datum << '\n'
     << "  fixed scheme      " << notation(c.fixed_scheme) << '\n'
     << "  mu                " << notation(c.mu) << '\n'
     << "  stabilizer S_psi  " << notation(c.stabilizer) << '\n'
     << "  orbit torus rank  " << c.orbit_torus_rank << '\n'
     << "  center X^*(Z)     " << c.center.to_string() << '\n'
     << "  elliptic          " << yes_no(c.elliptic) << '\n'
     << "  shape             " << notation(c) << " (" << product_form_name(c.product_form) << ")\n";
  return os.str();
}

std::string text(const BlockDescriptor& b) {
  std::ostringstream os;
  os << "block for " << b.datum << '\n'
     << "  finite torus      " << b.finite_torus.to_string() << " (order " << to_string(b.finite_torus_order) << ")\n"
     << "  ell-block         " << b.torsion.to_string() << " (k = " << b.k << ")\n"
     << "  central rank      " << b.free_rank << '\n'
     << "  pi_1(G)_Gamma     " << b.fundamental_group.to_string() << '\n'
     << "  q > Coxeter number " << to_string(b.coxeter_number) << ": " << yes_no(b.q_exceeds_coxeter_number) << '\n';
  return os.str();
}

std::string text(const MatchReport& m) {
  std::ostringstream os;
  os << "match\n"
     << "  X^*(mu)           " << m.mu_char_group.to_string() << '\n'
     << "  block torsion     " << m.block_torsion.to_string() << '\n'
     << "  isomorphic        " << yes_no(m.isomorphic) << '\n'
     << "  free ranks agree  " << yes_no(m.free_ranks_agree) << '\n'
     << "  grading           " << m.grading.group.to_string() << (m.gradings_agree ? "" : " (sides differ)") << '\n'
     << "  context           " << (m.context_consistent ? "consistent" : "MISMATCH") << '\n';
  os << "  flags            ";
  for (const auto& f : m.applicability_flags) os << ' ' << f;
  os << '\n' << "  verdict           " << (m.matched() ? "matched" : "not matched") << '\n';
  return os.str();
}

std::string text(const CategoricalSummary& s) {
  std::ostringstream os;
  auto cell = [](const CellFactor& c) {
    return notation(direct_sum(FinGenAbGroup::free(c.free_rank), c.torsion));
  };
  os << "GL_" << s.n << ", q = " << to_string(s.q) << ", ell = " << to_string(s.ell) << '\n'
     << "  parameter side       (+)_{chi in " << s.parameter_side.grading.group.to_string() << "} Perf("
     << cell(s.parameter_side.cell) << ")\n"
     << "  representation side  (+)_{b in " << s.representation_side.grading.group.to_string() << "} Perf("
     << cell(s.representation_side.cell) << ")\n"
     << "  verdict              " << (s.match.matched() ? "matched" : "not matched") << '\n';
  return os.str();
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace llc::report
