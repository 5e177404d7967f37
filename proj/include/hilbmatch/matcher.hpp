#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "hilbmatch/catalog.hpp"

namespace hilbmatch {

struct ParamBound {
    std::string name;
    long long lo = 0;
    long long hi = 0;
    bool operator==(const ParamBound&) const = default;
};

// Inclusive integer box over one family's parameters, canonical order.
struct ParamRange {
    Family family = Family::Product;
    std::vector<ParamBound> bounds;
    bool operator==(const ParamRange&) const = default;
};

struct MatchRecord {
    FamilyDescriptor left;
    FamilyDescriptor right;
    RatPoly polynomial;
    std::string interpretation;
    bool operator==(const MatchRecord&) const = default;
};

// What a coincidence of Hilbert polynomials buys geometrically.
inline constexpr std::string_view kMatchInterpretation =
    "fibers of a flat projective morphism over a connected base (Hartshorne connectedness)";

// All guard-passing parameter tuples in lexicographic order, with their
// polynomials. Throws UnsupportedFamily for Product ranges and
// std::invalid_argument for malformed bounds.
std::vector<PolarizedFamily> enumerate_family(const ParamRange& range);

// Cartesian product of per-factor enumerations, first factor slowest.
// A single factor enumerates bare; two or more wrap in a Product descriptor.
// Throws EmptyProduct on an empty factor list.
std::vector<PolarizedFamily> enumerate_product_side(const std::vector<ParamRange>& factors);

// Every cross pair with identical polynomials, ordered by (left enumeration,
// right enumeration), i.e. sorted by left then right parameter tuples.
std::vector<MatchRecord> match_enumerated(const std::vector<PolarizedFamily>& left,
                                          const std::vector<PolarizedFamily>& right);

std::vector<MatchRecord> find_matches(const ParamRange& left, const ParamRange& right);

std::vector<MatchRecord> compose_and_match(const std::vector<ParamRange>& left_factors,
                                           const std::vector<ParamRange>& right_factors);

// One point of the degree-4 coincidence system:
//   (p^2 - 3p) r     = 3xy(x+y)z + x^2 y^2
//   p^2 - 3p + r     = (6(x+y)z + 2x^2 + 9xy + 2y^2) / 2   (numerator must be even)
struct CY4Solution {
    long long p = 0, r = 0, x = 0, y = 0, z = 0;
    bool satisfies_system() const;
    auto operator<=>(const CY4Solution&) const = default;
};

// Exhaustive scan of 4 <= p <= p_max, 1 <= r <= r_max, 1 <= x,y,z <= xyz_max.
// Returns every solution in lexicographic (p,r,x,y,z) order; each is re-verified
// on emission. Bounds must be >= 1 (std::invalid_argument otherwise).
std::vector<CY4Solution> solve_cy4_system(long long p_max, long long r_max, long long xyz_max);

// The one-parameter slice y = 2x, z = x, where the system collapses to
// p^2 - 3p = x^2, r = 22 x^2. Integer-root test per x in [1, x_max].
std::vector<CY4Solution> solve_cy4_reduced(long long x_max);

// True iff deg(poly) == d and the n^{d-1} coefficient vanishes (the shape
// forced on the Hilbert polynomial by K trivial). Requires d >= 1.
bool cy_coefficient_check(const RatPoly& poly, int d);

// Reference implementations: same contracts, no threading, no bucketing.
// Kept as oracles for the tests and as baselines for the benchmark.
namespace serial {
std::vector<MatchRecord> find_matches(const std::vector<PolarizedFamily>& left,
                                      const std::vector<PolarizedFamily>& right);
std::vector<CY4Solution> solve_cy4_system(long long p_max, long long r_max, long long xyz_max);
}  // namespace serial

}  // namespace hilbmatch
