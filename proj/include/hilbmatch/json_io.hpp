#pragma once

#include <json.hpp>

#include "hilbmatch/matcher.hpp"
#include "hilbmatch/verify.hpp"

namespace hilbmatch {

// Coefficients ascending, each {"num": "...", "den": "..."} in decimal.
// The zero polynomial is the empty array.
nlohmann::json coefficients_json(const RatPoly& p);
RatPoly ratpoly_from_coefficients_json(const nlohmann::json& j);

// {"family": ..., "params": {...}, "assumptions": [...]} plus "children"
// for products only. Round-trips exactly.
nlohmann::json descriptor_json(const FamilyDescriptor& d);
FamilyDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json match_json(const MatchRecord& m);
nlohmann::json solution_json(const CY4Solution& s);
nlohmann::json check_json(const CheckResult& c);

}  // namespace hilbmatch
