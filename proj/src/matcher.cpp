#include "hilbmatch/matcher.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hilbmatch {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

bool guard_ok(Family f, const std::vector<long long>& v) {
    switch (f) {
        case Family::BlownUpPlane:
            return v[0] > 2 && v[1] > 0 && static_cast<i128>(v[1]) < static_cast<i128>(v[0]) * v[0];
        case Family::EnriquesFm: return v[0] >= 1;
        case Family::K3: return v[0] >= 1;
        case Family::EllipticCurve: return v[0] >= 1;
        case Family::CY3FiberProduct: return v[0] >= 3;
        case Family::HypersurfaceW: return v[0] >= 1 && v[1] >= 1 && v[2] >= 1;
        case Family::Product: return false;
    }
    return false;
}

PolarizedFamily construct(Family f, const std::vector<long long>& v) {
    switch (f) {
        case Family::BlownUpPlane: return blownup_plane(v[0], v[1]);
        case Family::EnriquesFm: return enriques_fm(v[0]);
        case Family::K3: return k3_polarized(v[0]);
        case Family::EllipticCurve: return elliptic_curve(v[0]);
        case Family::CY3FiberProduct: return cy3_fiber_product(v[0]);
        case Family::HypersurfaceW: return hypersurface_w(v[0], v[1], v[2]);
        case Family::Product: break;
    }
    throw UnsupportedFamily("cannot construct a product from a flat parameter tuple");
}

void validate_range(const ParamRange& range) {
    if (range.family == Family::Product)
        throw UnsupportedFamily("product ranges cannot be enumerated directly; "
                                "enumerate factors and compose");
    auto expected = family_param_names(range.family);
    if (range.bounds.size() != expected.size()) {
        std::ostringstream os;
        os << family_name(range.family) << " takes " << expected.size()
           << " parameter(s), got " << range.bounds.size();
        throw std::invalid_argument(os.str());
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (range.bounds[i].name != expected[i]) {
            std::ostringstream os;
            os << family_name(range.family) << " parameter " << i + 1 << " must be '"
               << expected[i] << "', got '" << range.bounds[i].name << "'";
            throw std::invalid_argument(os.str());
        }
        if (range.bounds[i].lo > range.bounds[i].hi) {
            std::ostringstream os;
            os << "empty range " << range.bounds[i].name << "=" << range.bounds[i].lo << ".."
               << range.bounds[i].hi;
            throw std::invalid_argument(os.str());
        }
    }
}

MatchRecord make_record(const PolarizedFamily& l, const PolarizedFamily& r) {
    return {l.descriptor, r.descriptor, l.polynomial, std::string(kMatchInterpretation)};
}

// Shared scan body: all (x,y,z) in [1,B]^3 against fixed (p,r), appended in
// lexicographic order. Both equation sides fit __int128 for any plausible box.
void scan_xyz(long long p, long long r, long long B, std::vector<CY4Solution>& out) {
    const i128 q = static_cast<i128>(p) * p - 3 * p;
    const i128 qr = q * r;
    const i128 s2 = q + r;
    for (long long x = 1; x <= B; ++x) {
        for (long long y = 1; y <= B; ++y) {
            const i128 xy = static_cast<i128>(x) * y;
            const i128 zcoef = 3 * xy * (x + y);
            const i128 xy2 = xy * xy;
            const i128 quad_base =
                2 * static_cast<i128>(x) * x + 9 * xy + 2 * static_cast<i128>(y) * y;
            for (long long z = 1; z <= B; ++z) {
                if (qr != zcoef * z + xy2) continue;
                const i128 quad_num = 6 * static_cast<i128>(x + y) * z + quad_base;
                if (quad_num % 2 != 0) continue;
                if (s2 != quad_num / 2) continue;
                CY4Solution sol{p, r, x, y, z};
                if (!sol.satisfies_system())
                    throw InternalInconsistency("cy4 scan emitted a non-solution");
                out.push_back(sol);
            }
        }
    }
}

void check_positive(long long v, const char* name) {
    if (v < 1) {
        std::ostringstream os;
        os << name << " must be >= 1 (got " << v << ")";
        throw std::invalid_argument(os.str());
    }
}

}  // namespace

std::vector<PolarizedFamily> enumerate_family(const ParamRange& range) {
    validate_range(range);
    const std::size_t np = range.bounds.size();

    // Collect guard-passing tuples serially (cheap), then build the
    // polynomials in parallel and merge by index so order is preserved.
    std::vector<std::vector<long long>> tuples;
    std::vector<long long> cur(np);
    for (std::size_t i = 0; i < np; ++i) cur[i] = range.bounds[i].lo;
    for (bool more = true; more;) {
        if (guard_ok(range.family, cur)) tuples.push_back(cur);
        more = false;
        for (std::size_t pos = np; pos-- > 0;) {
            if (cur[pos] < range.bounds[pos].hi) {
                ++cur[pos];
                for (std::size_t j = pos + 1; j < np; ++j) cur[j] = range.bounds[j].lo;
                more = true;
                break;
            }
        }
    }

    std::vector<PolarizedFamily> out(tuples.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(tuples.size()); ++i)
        out[static_cast<std::size_t>(i)] = construct(range.family, tuples[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<PolarizedFamily> enumerate_product_side(const std::vector<ParamRange>& factors) {
    if (factors.empty()) throw EmptyProduct("a match side needs at least one factor");
    if (factors.size() == 1) return enumerate_family(factors[0]);

    std::vector<std::vector<PolarizedFamily>> per;
    per.reserve(factors.size());
    std::size_t total = 1;
    for (const auto& f : factors) {
        per.push_back(enumerate_family(f));
        total *= per.back().size();
    }
    if (total == 0) return {};

    std::vector<PolarizedFamily> out(total);
#pragma omp parallel for schedule(static)
    for (long long flat = 0; flat < static_cast<long long>(total); ++flat) {
        std::size_t rem = static_cast<std::size_t>(flat);
        std::vector<PolarizedFamily> children(per.size());
        for (std::size_t f = per.size(); f-- > 0;) {
            children[f] = per[f][rem % per[f].size()];
            rem /= per[f].size();
        }
        out[static_cast<std::size_t>(flat)] = product_family(std::move(children));
    }
    return out;
}

std::vector<MatchRecord> match_enumerated(const std::vector<PolarizedFamily>& left,
                                          const std::vector<PolarizedFamily>& right) {
    std::vector<std::string> lkeys(left.size()), rkeys(right.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(left.size()); ++i)
        lkeys[static_cast<std::size_t>(i)] = left[static_cast<std::size_t>(i)].polynomial.key();
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(right.size()); ++i)
        rkeys[static_cast<std::size_t>(i)] = right[static_cast<std::size_t>(i)].polynomial.key();

    std::unordered_map<std::string, std::vector<std::size_t>> right_by_key;
    right_by_key.reserve(right.size());
    for (std::size_t j = 0; j < right.size(); ++j) right_by_key[rkeys[j]].push_back(j);

    std::vector<MatchRecord> out;
    for (std::size_t i = 0; i < left.size(); ++i) {
        auto it = right_by_key.find(lkeys[i]);
        if (it == right_by_key.end()) continue;
        for (std::size_t j : it->second) {
            // Keys are injective on canonical coefficient lists; recheck anyway.
            if (!(left[i].polynomial == right[j].polynomial))
                throw InternalInconsistency("match key collision with unequal polynomials");
            out.push_back(make_record(left[i], right[j]));
        }
    }
    return out;
}

std::vector<MatchRecord> find_matches(const ParamRange& left, const ParamRange& right) {
    return match_enumerated(enumerate_family(left), enumerate_family(right));
}

std::vector<MatchRecord> compose_and_match(const std::vector<ParamRange>& left_factors,
                                           const std::vector<ParamRange>& right_factors) {
    return match_enumerated(enumerate_product_side(left_factors),
                            enumerate_product_side(right_factors));
}

bool CY4Solution::satisfies_system() const {
    if (p < 4 || r < 1 || x < 1 || y < 1 || z < 1) return false;
    const i128 q = static_cast<i128>(p) * p - 3 * p;
    const i128 lead = 3 * static_cast<i128>(x) * y * (x + y) * z +
                      static_cast<i128>(x) * x * static_cast<i128>(y) * y;
    if (q * r != lead) return false;
    const i128 quad_num = 6 * static_cast<i128>(x + y) * z + 2 * static_cast<i128>(x) * x +
                          9 * static_cast<i128>(x) * y + 2 * static_cast<i128>(y) * y;
    if (quad_num % 2 != 0) return false;
    return q + r == quad_num / 2;
}

std::vector<CY4Solution> solve_cy4_system(long long p_max, long long r_max, long long xyz_max) {
    check_positive(p_max, "p-max");
    check_positive(r_max, "r-max");
    check_positive(xyz_max, "xyz-max");
    if (p_max < 4) return {};

    // One chunk per (p, r); chunk order is lexicographic, so a flat merge
    // restores the global (p, r, x, y, z) order no matter the schedule.
    const long long nchunks = (p_max - 4 + 1) * r_max;
    std::vector<std::vector<CY4Solution>> chunks(static_cast<std::size_t>(nchunks));
#pragma omp parallel for schedule(dynamic, 16)
    for (long long c = 0; c < nchunks; ++c) {
        const long long p = 4 + c / r_max;
        const long long r = 1 + c % r_max;
        scan_xyz(p, r, xyz_max, chunks[static_cast<std::size_t>(c)]);
    }

    std::vector<CY4Solution> out;
    for (const auto& ch : chunks) out.insert(out.end(), ch.begin(), ch.end());
    return out;
}

std::vector<CY4Solution> solve_cy4_reduced(long long x_max) {
    check_positive(x_max, "x-max");
    std::vector<CY4Solution> out;
    for (long long x = 1; x <= x_max; ++x) {
        // p^2 - 3p = x^2 has an integer root iff 9 + 4x^2 is a perfect square.
        const u128 disc = 9 + 4 * static_cast<u128>(x) * static_cast<u128>(x);
        u128 root = static_cast<u128>(std::sqrt(static_cast<double>(disc)));
        while (root * root > disc) --root;
        while ((root + 1) * (root + 1) <= disc) ++root;
        if (root * root != disc) continue;
        if ((3 + root) % 2 != 0) continue;
        const long long p = static_cast<long long>((3 + root) / 2);
        if (p < 4) continue;
        const i128 r_wide = 22 * static_cast<i128>(x) * x;
        if (r_wide > std::numeric_limits<long long>::max())
            throw std::overflow_error("reduced solution r = 22 x^2 exceeds the integer range");
        CY4Solution sol{p, static_cast<long long>(r_wide), x, 2 * x, x};
        if (!sol.satisfies_system())
            throw InternalInconsistency("reduced cy4 slice emitted a non-solution");
        out.push_back(sol);
    }
    return out;
}

bool cy_coefficient_check(const RatPoly& poly, int d) {
    if (d < 1) throw std::invalid_argument("cy coefficient check needs dimension >= 1");
    return poly.degree() == d && poly.coeff(static_cast<std::size_t>(d - 1)) == 0;
}

namespace serial {

std::vector<MatchRecord> find_matches(const std::vector<PolarizedFamily>& left,
                                      const std::vector<PolarizedFamily>& right) {
    std::vector<MatchRecord> out;
    for (const auto& l : left)
        for (const auto& r : right)
            if (l.polynomial == r.polynomial) out.push_back(make_record(l, r));
    return out;
}

std::vector<CY4Solution> solve_cy4_system(long long p_max, long long r_max, long long xyz_max) {
    check_positive(p_max, "p-max");
    check_positive(r_max, "r-max");
    check_positive(xyz_max, "xyz-max");
    std::vector<CY4Solution> out;
    for (long long p = 4; p <= p_max; ++p)
        for (long long r = 1; r <= r_max; ++r) scan_xyz(p, r, xyz_max, out);
    return out;
}

}  // namespace serial

}  // namespace hilbmatch
