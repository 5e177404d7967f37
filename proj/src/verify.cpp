#include "hilbmatch/verify.hpp"

#include <algorithm>
#include <sstream>

namespace hilbmatch {

namespace {

// Enriques and blown-up-plane polynomials coincide along k = 3p, where both
// equal (p(p-3)/2) n^2 + 1.
CheckResult check_enriques_rational_surface_match() {
    CheckResult res{"enriques-rational-surface-match", true, ""};
    int count = 0;
    for (long long p = 4; p <= 12; ++p) {
        const long long m = p * (p - 3) / 2;
        const auto enr = enriques_fm(m);
        const auto blown = blownup_plane(p, 3 * p);
        const RatPoly closed{Rational(1), Rational(0), to_rational(m)};
        if (!(enr.polynomial == blown.polynomial) || !(enr.polynomial == closed)) {
            res.pass = false;
            res.detail = "failed at p=" + std::to_string(p);
            return res;
        }
        ++count;
    }
    res.detail = "p=4..12, k=3p: " + std::to_string(count) +
                 " exact coincidences, each equal to (p(p-3)/2)n^2 + 1";
    return res;
}

// The threefold with m = p(p-3)+1 matches the product of the blown-up plane
// (k = 3p) with a degree-2 elliptic curve.
CheckResult check_cy3_product_match() {
    CheckResult res{"cy3-product-match", true, ""};
    int count = 0;
    for (long long p = 4; p <= 12; ++p) {
        const long long m = p * (p - 3) + 1;
        const auto threefold = cy3_fiber_product(m);
        const auto prod = product_family({blownup_plane(p, 3 * p), elliptic_curve(2)});
        if (!(threefold.polynomial == prod.polynomial)) {
            res.pass = false;
            res.detail = "failed at p=" + std::to_string(p);
            return res;
        }
        if (p == 4 &&
            !(threefold.polynomial == RatPoly{Rational(0), Rational(2), Rational(0), Rational(4)})) {
            res.pass = false;
            res.detail = "p=4 polynomial is not 4n^3 + 2n";
            return res;
        }
        ++count;
    }
    res.detail = "p=4..12, m=p(p-3)+1: " + std::to_string(count) +
                 " exact coincidences; p=4 gives 4n^3 + 2n";
    return res;
}

// The fourfold identity at (x,y,z)=(2,4,2), r=88, (p,k)=(4,12), plus the
// exhaustive box scan that certifies no further solutions besides the x<->y
// mirror of the same variety.
CheckResult check_cy4_hypersurface_match() {
    CheckResult res{"cy4-hypersurface-match", true, ""};
    const auto w = hypersurface_w(2, 4, 2);
    const auto prod = product_family({k3_polarized(88), blownup_plane(4, 12)});
    const RatPoly expected{Rational(2), Rational(0), Rational(92), Rational(0), Rational(176)};
    if (!(w.polynomial == prod.polynomial) || !(w.polynomial == expected)) {
        res.pass = false;
        res.detail = "W(2,4,2) vs K3(88) x blownup-plane(4,12) mismatch";
        return res;
    }
    const auto sols = solve_cy4_system(10, 100, 5);
    const std::vector<CY4Solution> box_expected{{4, 88, 2, 4, 2}, {4, 88, 4, 2, 2}};
    const bool has_witness =
        std::find(sols.begin(), sols.end(), CY4Solution{4, 88, 2, 4, 2}) != sols.end();
    if (!has_witness || sols != box_expected) {
        res.pass = false;
        std::ostringstream os;
        os << "scan p<=10, r<=100, xyz<=5 returned " << sols.size() << " solution(s)";
        res.detail = os.str();
        return res;
    }
    res.detail = "W(2,4,2) = K3(88) x blownup-plane(4,12) = 176n^4 + 92n^2 + 2; "
                 "scan p<=10, r<=100, xyz<=5 finds only (4,88,2,4,2) and its x<->y mirror";
    return res;
}

// Both routes to the hypersurface polynomial, compared coefficientwise over
// the full cube.
CheckResult check_hypersurface_dual_path() {
    CheckResult res{"hypersurface-dual-path", true, ""};
    int count = 0;
    for (long long x = 1; x <= 20; ++x)
        for (long long y = 1; y <= 20; ++y)
            for (long long z = 1; z <= 20; ++z) {
                if (!(hypersurface_w_from_sequence(x, y, z) ==
                      hypersurface_w_closed_form(x, y, z))) {
                    res.pass = false;
                    std::ostringstream os;
                    os << "routes disagree at x=" << x << ", y=" << y << ", z=" << z;
                    res.detail = os.str();
                    return res;
                }
                ++count;
            }
    res.detail = "Euler sequence route == closed form on all " + std::to_string(count) +
                 " points of [1,20]^3";
    return res;
}

// Multiplying both sides of the dimension-3 coincidence by K3 factors (odd
// target dimension) or by the threefold itself plus K3 factors (even target
// dimension) lifts it to dimensions 5 through 8.
CheckResult check_product_lifting() {
    CheckResult res{"product-lifting-d5-d8", true, ""};
    const long long k3_rs[] = {1, 7, 88};
    int count = 0;
    for (long long p = 4; p <= 12; ++p) {
        const long long m = p * (p - 3) + 1;
        for (int d = 5; d <= 8; ++d) {
            const bool even = d % 2 == 0;
            const int k3_copies = even ? (d - 6) / 2 : (d - 3) / 2;
            for (long long r : k3_rs) {
                std::vector<PolarizedFamily> lhs{cy3_fiber_product(m)};
                std::vector<PolarizedFamily> rhs{blownup_plane(p, 3 * p), elliptic_curve(2)};
                if (even) {
                    lhs.push_back(cy3_fiber_product(m));
                    rhs.push_back(cy3_fiber_product(m));
                }
                for (int i = 0; i < k3_copies; ++i) {
                    lhs.push_back(k3_polarized(r));
                    rhs.push_back(k3_polarized(r));
                }
                const auto L = product_family(lhs);
                const auto R = product_family(rhs);
                if (!(L.polynomial == R.polynomial) || L.polynomial.degree() != d) {
                    res.pass = false;
                    std::ostringstream os;
                    os << "failed at p=" << p << ", d=" << d << ", r=" << r;
                    res.detail = os.str();
                    return res;
                }
                ++count;
                if (k3_copies == 0) break;  // no K3 factor, so r does not vary the identity
            }
        }
    }
    res.detail = "p=4..12, d=5..8, K3 lifts r in {1,7,88}: " + std::to_string(count) +
                 " exact product identities";
    return res;
}

// Trivial canonical bundle forces deg == dim and a vanishing n^{dim-1} term.
CheckResult check_cy_leading_coefficient() {
    CheckResult res{"cy-leading-coefficient", true, ""};
    int count = 0;
    for (long long m = 3; m <= 20; ++m) {
        if (!cy_coefficient_check(cy3_fiber_product(m).polynomial, 3)) {
            res.pass = false;
            res.detail = "threefold shape failed at m=" + std::to_string(m);
            return res;
        }
        ++count;
    }
    for (long long x = 1; x <= 6; ++x)
        for (long long y = 1; y <= 6; ++y)
            for (long long z = 1; z <= 6; ++z) {
                if (!cy_coefficient_check(hypersurface_w(x, y, z).polynomial, 4)) {
                    res.pass = false;
                    std::ostringstream os;
                    os << "fourfold shape failed at x=" << x << ", y=" << y << ", z=" << z;
                    res.detail = os.str();
                    return res;
                }
                ++count;
            }
    res.detail = "degree and vanishing subleading coefficient hold for " +
                 std::to_string(count) + " scanned families (threefolds m=3..20, fourfolds [1,6]^3)";
    return res;
}

}  // namespace

std::vector<CheckResult> run_identity_checks() {
    return {
        check_enriques_rational_surface_match(),
        check_cy3_product_match(),
        check_cy4_hypersurface_match(),
        check_hypersurface_dual_path(),
        check_product_lifting(),
        check_cy_leading_coefficient(),
    };
}

std::vector<CheckResult> run_identity_checks_with_injected_failure() {
    auto checks = run_identity_checks();
    // A deliberately wrong claim: the Enriques polynomial with m=2 is not n^2+1.
    const bool bogus = enriques_fm(2).polynomial == RatPoly{Rational(1), Rational(0), Rational(1)};
    checks.push_back({"injected-failure", bogus, "deliberately broken identity, must fail"});
    return checks;
}

std::vector<PolarizedFamily> default_scan_box() {
    std::vector<PolarizedFamily> box;
    auto append = [&box](std::vector<PolarizedFamily> v) {
        box.insert(box.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    };
    append(enumerate_family({Family::BlownUpPlane, {{"p", 3, 10}, {"k", 1, 35}}}));
    append(enumerate_family({Family::EnriquesFm, {{"m", 1, 20}}}));
    append(enumerate_family({Family::K3, {{"r", 1, 20}}}));
    append(enumerate_family({Family::EllipticCurve, {{"deg", 1, 20}}}));
    append(enumerate_family({Family::CY3FiberProduct, {{"m", 3, 20}}}));
    append(enumerate_family({Family::HypersurfaceW, {{"x", 1, 6}, {"y", 1, 6}, {"z", 1, 6}}}));
    for (long long p = 4; p <= 10; ++p)
        box.push_back(product_family({blownup_plane(p, 3 * p), elliptic_curve(2)}));
    for (long long r : {1, 7, 88})
        box.push_back(product_family({k3_polarized(r), blownup_plane(4, 12)}));
    return box;
}

}  // namespace hilbmatch
