#pragma once

#include <string_view>
#include <vector>

#include "hilbmatch/matcher.hpp"

namespace hilbmatch {

// One side of a match command.
//   simple:   "enriques:m=1..10"  "blownup-plane:p=3..6,k=1..35"  "k3:r=88"
//   product:  "product[k3:r=80..90,blownup-plane:p=4..4,k=12..12]"
// A bare value is shorthand for a point range (r=88 means r=88..88).
struct SideSpec {
    std::vector<ParamRange> factors;
    bool is_product = false;
};

// Throws std::invalid_argument with a message naming what is malformed.
SideSpec parse_side_spec(std::string_view text);

std::vector<PolarizedFamily> enumerate_side(const SideSpec& side);

std::vector<MatchRecord> match_sides(const SideSpec& left, const SideSpec& right);

}  // namespace hilbmatch
