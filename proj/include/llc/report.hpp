#pragma once

// JSON and text rendering for CLI reports. JSON output is schema version 1,
// documented in docs/report-schema.json. Integers that fit in 64 bits are
// JSON numbers; larger ones are decimal strings.

#include "llc/abelian_group.hpp"
#include "llc/block_side.hpp"
#include "llc/diagonalizable.hpp"
#include "llc/gln_parameters.hpp"
#include "llc/torus_cocycles.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace llc::report {

inline constexpr int kSchemaVersion = 1;

nlohmann::json integer(const Integer& n);
nlohmann::json group(const FinGenAbGroup& g);
nlohmann::json group(const DiagGroup& d);
nlohmann::json matrix(const IntMatrix& m);  // row-major nested arrays
nlohmann::json component(const ComponentDescriptor& c);
nlohmann::json cocycles(const CocycleSpace& s);
nlohmann::json block(const BlockDescriptor& b);
nlohmann::json match(const MatchReport& m);
nlohmann::json parameter(const TrselpGL& p);
nlohmann::json exponent_matrix(const ExponentMatrix& m);  // rows of {zero:true} | {exp:e}
nlohmann::json summary(const CategoricalSummary& s);

/// "G_m^2 × μ_5", "1" when trivial.
std::string notation(const DiagGroup& d);
std::string notation(const FinGenAbGroup& characters);
/// "[G_m/G_m] × μ_5" or "[*/μ_2] × μ_3".
std::string notation(const ComponentDescriptor& c);

std::string text(const ComponentDescriptor& c);
std::string text(const BlockDescriptor& b);
std::string text(const MatchReport& m);
std::string text(const CategoricalSummary& s);

/// Stable serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace llc::report
