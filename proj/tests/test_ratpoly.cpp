#include <doctest.h>

#include <random>
#include <vector>

#include "hilbmatch/ratpoly.hpp"

using hilbmatch::is_integer;
using hilbmatch::LinearTwist;
using hilbmatch::make_rational;
using hilbmatch::proj_space_chi;
using hilbmatch::Rational;
using hilbmatch::RatPoly;

namespace {

// Small random rationals and polynomials for the law tests. Fixed seed so a
// failure is reproducible.
Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    return make_rational(num(rng), den(rng));
}

RatPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 6);
    std::vector<Rational> c;
    const int n = deg(rng);
    c.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c.push_back(random_rational(rng));
    return RatPoly(std::move(c));
}

}  // namespace

TEST_CASE("zero polynomial is canonically empty") {
    CHECK(RatPoly{}.is_zero());
    CHECK(RatPoly{}.degree() == -1);
    CHECK(RatPoly{Rational(0)} == RatPoly{});
    CHECK(RatPoly{Rational(0), Rational(0), Rational(0)}.is_zero());
    CHECK(RatPoly{Rational(1)} - RatPoly{Rational(1)} == RatPoly{});
    CHECK(RatPoly{}.key().empty());
}

TEST_CASE("trailing zeros are trimmed on every operation") {
    // (n + 1) - n = 1: the degree must collapse to 0.
    RatPoly a{Rational(1), Rational(1)};
    RatPoly b{Rational(0), Rational(1)};
    RatPoly diff = a - b;
    CHECK(diff.degree() == 0);
    CHECK(diff == RatPoly{Rational(1)});
}

TEST_CASE("arithmetic on known polynomials") {
    // (2n^2 + 1) + (n - 1) = 2n^2 + n
    RatPoly p{Rational(1), Rational(0), Rational(2)};
    RatPoly q{Rational(-1), Rational(1)};
    CHECK(p + q == RatPoly{Rational(0), Rational(1), Rational(2)});

    // (n + 1)(n - 1) = n^2 - 1
    RatPoly r{Rational(1), Rational(1)};
    RatPoly s{Rational(-1), Rational(1)};
    CHECK(r * s == RatPoly{Rational(-1), Rational(0), Rational(1)});

    // (2n^2 + 1)(2n) = 4n^3 + 2n
    RatPoly t{Rational(0), Rational(2)};
    CHECK(p * t == RatPoly{Rational(0), Rational(2), Rational(0), Rational(4)});
}

TEST_CASE("evaluation uses exact rationals") {
    // P = 7/2 n^4 + 25/2 n^2 + 2 at n=1: 7/2 + 25/2 + 2 = 18
    RatPoly p{Rational(2), Rational(0), make_rational(25, 2), Rational(0), make_rational(7, 2)};
    CHECK(p.eval(Rational(1)) == Rational(18));
    CHECK(p.eval(Rational(0)) == Rational(2));
    CHECK(p.eval(Rational(-1)) == Rational(18));
    // at n = 1/2: 7/32 + 25/8 + 2 = 171/32
    CHECK(p.eval(make_rational(1, 2)) == make_rational(171, 32));
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        RatPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + RatPoly{} == a);
        CHECK(a * RatPoly{Rational(1)} == a);
        CHECK(a - a == RatPoly{});
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(77002);
    for (int trial = 0; trial < 200; ++trial) {
        RatPoly a = random_poly(rng), b = random_poly(rng);
        Rational t = random_rational(rng);
        CHECK((a + b).eval(t) == a.eval(t) + b.eval(t));
        CHECK((a * b).eval(t) == a.eval(t) * b.eval(t));
        CHECK((-a).eval(t) == -a.eval(t));
    }
}

TEST_CASE("canonical key format") {
    // 88n^2 + 2 keys to "2,0,88": ascending, denominator elided when 1.
    RatPoly p{Rational(2), Rational(0), Rational(88)};
    CHECK(p.key() == "2,0,88");

    RatPoly q{make_rational(-1, 2), Rational(3)};
    CHECK(q.key() == "-1/2,3");

    CHECK(RatPoly{}.key() == "");
}

TEST_CASE("key round-trips exactly") {
    CHECK(RatPoly::from_key("2,0,88") == RatPoly{Rational(2), Rational(0), Rational(88)});
    CHECK(RatPoly::from_key("") == RatPoly{});

    std::mt19937 rng(5150);
    for (int trial = 0; trial < 300; ++trial) {
        RatPoly p = random_poly(rng);
        CHECK(RatPoly::from_key(p.key()) == p);
    }

    CHECK_THROWS_AS(RatPoly::from_key("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(RatPoly::from_key("abc"), std::invalid_argument);
}

TEST_CASE("text rendering, descending powers") {
    CHECK(RatPoly{Rational(1), Rational(0), Rational(2)}.str() == "2n^2 + 1");
    CHECK(RatPoly{Rational(2), Rational(0), make_rational(25, 2), Rational(0), make_rational(7, 2)}
              .str() == "7/2 n^4 + 25/2 n^2 + 2");
    CHECK(RatPoly{Rational(0), Rational(2), Rational(0), Rational(4)}.str() == "4n^3 + 2n");
    CHECK(RatPoly{}.str() == "0");
    CHECK(RatPoly{Rational(0), Rational(1)}.str() == "n");
    CHECK(RatPoly{Rational(1), Rational(-1)}.str() == "-n + 1");
    CHECK(RatPoly{Rational(0), Rational(0), Rational(0), Rational(-1)}.str() == "-n^3");
    CHECK(RatPoly{Rational(-3), make_rational(1, 2)}.str() == "1/2 n - 3");
}

TEST_CASE("projective space chi") {
    // dim 2, twist t(n) = n: (n+1)(n+2)/2 = 1/2 n^2 + 3/2 n + 1
    CHECK(proj_space_chi(2, {1, 0}) ==
          RatPoly{Rational(1), make_rational(3, 2), make_rational(1, 2)});
    // dim 2, twist 2n: (2n+1)(2n+2)/2 = 2n^2 + 3n + 1
    CHECK(proj_space_chi(2, {2, 0}) == RatPoly{Rational(1), Rational(3), Rational(2)});
    // dim 1, twist n - 2: (n - 2) + 1 = n - 1
    CHECK(proj_space_chi(1, {1, -2}) == RatPoly{Rational(-1), Rational(1)});
    // dim 0 is the point: constant 1 regardless of twist
    CHECK(proj_space_chi(0, {5, 3}) == RatPoly{Rational(1)});
    CHECK_THROWS_AS(proj_space_chi(-1, {1, 0}), std::invalid_argument);
}

TEST_CASE("rational helpers") {
    CHECK(make_rational(4, 6) == make_rational(2, 3));
    CHECK(make_rational(3, -6) == make_rational(-1, 2));
    CHECK(make_rational(3, -6).get_den() == 2);  // denominator kept positive
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
    CHECK(is_integer(Rational(7)));
    CHECK(!is_integer(make_rational(7, 2)));
    CHECK(hilbmatch::factorial(0) == 1);
    CHECK(hilbmatch::factorial(5) == 120);
    CHECK(hilbmatch::factorial(20) == hilbmatch::BigInt("2432902008176640000"));
}
