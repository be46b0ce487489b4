#pragma once

#include "klr/crystal.hpp"
#include "klr/dims.hpp"
#include "klr/garnir.hpp"
#include "klr/klrmod.hpp"
#include "klr/roots.hpp"

#include <json.hpp>

#include <string>

namespace klr {

inline constexpr const char* kSchema = "klr-workbench/1";

using Json = nlohmann::ordered_json;

/// {"<exponent>": coeff}; coefficients beyond int64 are rendered as strings.
Json to_json(const LaurentPoly& p);
Json to_json(const Partition& mu);
Json to_json(const Node& n);
Json to_json(const Tableau& t);
Json to_json(const ContentVector& c);
Json to_json(const FormalCharacter& ch);
Json to_json(const SignatureReport& s);
Json to_json(const BranchTable& t);
Json to_json(const SoclePrediction& s);
Json to_json(const GarnirData& g);
Json to_json(const GarnirElement& e);
Json to_json(const SpechtPresentation& sp);
Json to_json(const GradedModule& m);
Json to_json(const RelationReport& r);
Json to_json(const AffineRoot& r, const Arith& a);
Json to_json(const RootPartition& rp, const Arith& a);
Json to_json(const CrystalGraph& g);

std::string to_dot(const CrystalGraph& g);

}  // namespace klr
