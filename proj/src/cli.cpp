#include "llc/cli.hpp"

#include "llc/block_side.hpp"
#include "llc/errors.hpp"
#include "llc/gln_parameters.hpp"
#include "llc/report.hpp"
#include "llc/root_datum.hpp"
#include "llc/torus_cocycles.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace llc::cli {

namespace {

using Json = nlohmann::json;

struct Options {
  std::string group = "GL";
  std::size_t n = 0;
  std::string q;
  std::string ell;
  std::string weyl = "coxeter";
  std::string datum_path;
  std::string output = "text";
  std::string coeff = "zbar";
  std::string a;
  std::string b = "0";
  std::uint64_t limit = 100;
  std::uint64_t offset = 0;
};

Integer parse_integer(const std::string& text, const char* what) {
  const bool digits = !text.empty() && text.find_first_not_of("0123456789", text[0] == '-' ? 1 : 0) == std::string::npos &&
                      text != "-";
  if (!digits) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be an integer, got '" + text + "'");
  return Integer(text);
}

std::uint64_t max_modulus_from_env() {
  const char* raw = std::getenv("LLC_PARAMS_MAX_MODULUS");
  if (raw == nullptr || *raw == '\0') return EnumerateOptions{}.max_modulus;
  const Integer v = parse_integer(raw, "LLC_PARAMS_MAX_MODULUS");
  if (v <= 0 || v > Integer(std::numeric_limits<std::uint32_t>::max())) {
    throw Error(ErrorCode::InvalidArgument, "LLC_PARAMS_MAX_MODULUS must be in [1, 2^32)");
  }
  return v.convert_to<std::uint64_t>();
}

RootDatum load_datum(const Options& o) {
  if (o.datum_path.empty()) return preset(parse_family(o.group), o.n);
  std::ifstream in(o.datum_path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open datum file '" + o.datum_path + "'");
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::InvalidArgument, "datum file is not valid JSON");
  auto rd = root_datum_from_json(j);
  if (auto v = validate(rd); !v.empty()) throw Error(ErrorCode::InvalidArgument, "invalid root datum: " + v.front());
  return rd;
}

void require_gl(const Options& o, const char* command) {
  if (parse_family(o.group) != Family::GL || !o.datum_path.empty()) {
    throw Error(ErrorCode::UnsupportedFamily, std::string(command) + " is only available for GL_n",
                "drop --datum and use --group GL");
  }
  if (o.n == 0) throw Error(ErrorCode::InvalidRank, "GL_n needs n >= 1");
}

Json input_json(const Options& o, const char* command) {
  Json j{{"group", o.group}, {"n", o.n}, {"q", o.q}, {"ell", o.ell}};
  if (!o.datum_path.empty()) j["datum"] = o.datum_path;
  const std::string c = command;
  if (c == "component" || c == "block" || c == "match") j["weyl"] = o.weyl;
  if (c == "enumerate" || c == "verify") j["coeff"] = o.coeff;
  if (c == "verify") {
    j["a"] = o.a;
    j["b"] = o.b;
  }
  if (c == "enumerate") {
    j["limit"] = o.limit;
    j["offset"] = o.offset;
  }
  return j;
}

Json envelope(const Options& o, const char* command) {
  return {{"schemaVersion", report::kSchemaVersion}, {"command", command}, {"input", input_json(o, command)}};
}

void emit(std::ostream& out, const Options& o, const Json& j, const std::string& text) {
  if (o.output == "json") {
    out << report::dump(j);
  } else {
    out << text;
  }
}

int cmd_component(const Options& o, std::ostream& out) {
  const auto rd = load_datum(o);
  const auto w = parse_twist(rd, o.weyl);
  const Integer q = parse_integer(o.q, "--q");
  const Integer ell = parse_integer(o.ell, "--ell");
  const auto c = component_descriptor(rd, w, q, ell);
  const auto space = cocycle_space(FrobTorus(w, q, ell));
  Json j = envelope(o, "component");
  j["datum"] = to_json(rd);
  j["weylMatrix"] = report::matrix(w.matrix);
  j["component"] = report::component(c);
  j["cocycleSpace"] = report::cocycles(space);
  std::ostringstream text;
  text << report::text(c) << "  cocycle components " << to_string(space.component_count) << " of shape "
       << report::notation(space.component_shape) << '\n';
  emit(out, o, j, text.str());
  return kOk;
}

int cmd_block(const Options& o, std::ostream& out) {
  const auto rd = load_datum(o);
  const auto w = parse_twist(rd, o.weyl);
  const auto b = block_descriptor(rd, w, parse_integer(o.q, "--q"), parse_integer(o.ell, "--ell"));
  Json j = envelope(o, "block");
  j["block"] = report::block(b);
  emit(out, o, j, report::text(b));
  return kOk;
}

int cmd_match(const Options& o, std::ostream& out) {
  const auto rd = load_datum(o);
  const auto w = parse_twist(rd, o.weyl);
  const Integer q = parse_integer(o.q, "--q");
  const Integer ell = parse_integer(o.ell, "--ell");
  const auto c = component_descriptor(rd, w, q, ell);
  const auto b = block_descriptor(rd, w, q, ell);
  const auto m = match_sides(c, b);
  Json j = envelope(o, "match");
  j["component"] = report::component(c);
  j["block"] = report::block(b);
  j["match"] = report::match(m);
  emit(out, o, j, report::text(c) + report::text(b) + report::text(m));
  return kOk;
}

int cmd_summary(const Options& o, std::ostream& out) {
  require_gl(o, "summary");
  const auto s = categorical_summary(o.n, parse_integer(o.q, "--q"), parse_integer(o.ell, "--ell"));
  Json j = envelope(o, "summary");
  j["summary"] = report::summary(s);
  emit(out, o, j, report::text(s));
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  require_gl(o, "enumerate");
  const Integer q = parse_integer(o.q, "--q");
  const Integer ell = parse_integer(o.ell, "--ell");
  const auto coeff = parse_coefficients(o.coeff);
  const auto exps = enumerate_exponents(o.n, q, ell, coeff, {max_modulus_from_env()});
  const Integer modulus = inertia_modulus(o.n, q, ell, coeff);

  Json params = Json::array();
  std::ostringstream text;
  text << exps.size() << " parameters of GL_" << o.n << " over " << coefficients_name(coeff) << " (inertia modulus "
       << to_string(modulus) << ")\n";
  const auto begin = std::min<std::uint64_t>(o.offset, exps.size());
  const auto end = std::min<std::uint64_t>(begin + o.limit, exps.size());
  for (auto i = begin; i < end; ++i) {
    const auto p = TrselpGL::make(o.n, q, ell, coeff, exps[i]);
    params.push_back(report::parameter(p));
    text << "  a = " << exps[i] << '\n';
  }
  if (end < exps.size()) text << "  ... " << (exps.size() - end) << " more (use --offset/--limit)\n";

  Json j = envelope(o, "enumerate");
  j["modulus"] = report::integer(modulus);
  j["count"] = exps.size();
  j["offset"] = o.offset;
  j["limit"] = o.limit;
  j["parameters"] = params;
  emit(out, o, j, text.str());
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_gl(o, "verify");
  if (o.a.empty()) throw Error(ErrorCode::InvalidArgument, "verify needs --a");
  const auto p = TrselpGL::make(o.n, parse_integer(o.q, "--q"), parse_integer(o.ell, "--ell"),
                                parse_coefficients(o.coeff), parse_integer(o.a, "--a"), parse_integer(o.b, "--b"));
  Json j = envelope(o, "verify");
  j["parameter"] = report::parameter(p);
  j["regular"] = p.regular();
  j["k"] = p.k();
  std::ostringstream text;
  text << "GL_" << p.n() << " parameter a = " << to_string(p.a()) << " mod " << to_string(p.modulus())
       << ", b = " << to_string(p.b()) << " (" << coefficients_name(p.coeff()) << ")\n"
       << "  regular           " << (p.regular() ? "yes" : "no") << '\n';

  if (p.coeff() == Coefficients::ZbarEll) {
    const auto m = matrices(p);
    const bool holds = verify_cocycle(m, p.q());
    Json support = Json::array();
    for (auto [i, jj] : nilpotent_support_fixed_positions(p)) support.push_back({i, jj});
    j["matrices"] = {{"x", report::exponent_matrix(m.x)}, {"y", report::exponent_matrix(m.y)},
                     {"modulus", report::integer(m.modulus)}};
    j["cocycleHolds"] = holds;
    j["nilpotentSupport"] = support;
    j["reduction"] = report::parameter(reduction(p));
    text << "  y x y^-1 = x^q    " << (holds ? "holds" : "FAILS") << '\n'
         << "  fixed positions   " << support.size() << (support.size() == p.n() ? " (diagonal)" : "") << '\n'
         << "  reduction         a = " << to_string(reduction(p).a()) << '\n';
  } else {
    const auto lifts = lifts_in_component(p);
    Json list = Json::array();
    for (const auto& l : lifts) list.push_back(report::parameter(l));
    j["lifts"] = list;
    text << "  lifts             " << lifts.size() << ", canonical a = " << to_string(lifts.front().a()) << '\n';
  }
  emit(out, o, j, text.str());
  return kOk;
}

Json error_json(std::string_view code, const std::string& message, const std::string& hint) {
  return {{"schemaVersion", report::kSchemaVersion},
          {"error", {{"code", std::string(code)}, {"message", message}, {"hint", hint}}}};
}

void report_error(std::ostream& out, std::ostream& err, bool json, std::string_view code, const std::string& message,
                  const std::string& hint) {
  if (json) {
    out << report::dump(error_json(code, message, hint));
  } else {
    err << "error [" << code << "]: " << message;
    if (!hint.empty()) err << " (hint: " << hint << ')';
    err << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  Options o;
  bool grid = false;
  CLI::App app{"Combinatorial invariants of tame elliptic L-parameters and depth-zero blocks", "llc-params"};
  app.add_flag("--grid", grid, "Run the acceptance sweep and print a pass/fail table");
  app.add_option("--output", o.output, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.require_subcommand(0, 1);

  auto add_common = [&](CLI::App* sub, bool with_twist) {
    sub->add_option("--group", o.group, "Group family of G (GL, SL, PGL)");
    sub->add_option("--n", o.n, "Rank parameter n");
    sub->add_option("--q", o.q, "Residue field size q = p^e")->required();
    sub->add_option("--ell", o.ell, "Coefficient prime ell")->required();
    sub->add_option("--output", o.output, "Output format")->check(CLI::IsMember({"json", "text"}));
    if (with_twist) {
      sub->add_option("--weyl", o.weyl, "coxeter, identity, or a matrix literal [[..],[..]]");
      sub->add_option("--datum", o.datum_path, "Root datum JSON file instead of a preset");
    }
  };
  auto* component = app.add_subcommand("component", "Component of the parameter stack");
  add_common(component, true);
  auto* block = app.add_subcommand("block", "Depth-zero block invariant");
  add_common(block, true);
  auto* match = app.add_subcommand("match", "Compare both sides");
  add_common(match, true);
  auto* summary = app.add_subcommand("summary", "Both sides of the categorical correspondence for GL_n");
  add_common(summary, false);
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate irreducible tame parameters of GL_n");
  add_common(enumerate, false);
  enumerate->add_option("--coeff", o.coeff, "fbar or zbar");
  enumerate->add_option("--limit", o.limit, "Maximum parameters listed");
  enumerate->add_option("--offset", o.offset, "First parameter listed");
  auto* verify = app.add_subcommand("verify", "Build and check one parameter of GL_n");
  add_common(verify, false);
  verify->add_option("--coeff", o.coeff, "fbar or zbar");
  verify->add_option("--a", o.a, "Inertia exponent")->required();
  verify->add_option("--b", o.b, "Frobenius exponent");

  std::vector<const char*> argv{"llc-params"};
  for (const auto& a : args) argv.push_back(a.c_str());

  const auto wants_json = [&] {
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
      if (args[i] == "--output" && args[i + 1] == "json") return true;
    }
    return o.output == "json";
  };

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(out, err, wants_json(), "USAGE", e.what(), "run with --help");
    return kValidation;
  }

  try {
    if (grid) {
      if (!hooks.grid) throw Error(ErrorCode::InternalError, "this build has no acceptance sweep");
      return hooks.grid(out, o.output == "json");
    }
    if (component->parsed()) return cmd_component(o, out);
    if (block->parsed()) return cmd_block(o, out);
    if (match->parsed()) return cmd_match(o, out);
    if (summary->parsed()) return cmd_summary(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    out << app.help();
    return kValidation;
  } catch (const Error& e) {
    report_error(out, err, o.output == "json", error_code_name(e.code()), e.what(), e.hint());
    return e.code() == ErrorCode::InternalError ? kInternal : kValidation;
  } catch (const std::exception& e) {
    report_error(out, err, o.output == "json", "INTERNAL_ERROR", e.what(), "");
    return kInternal;
  }
}

}  // namespace llc::cli
