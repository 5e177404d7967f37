#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace hilbmatch {

using BigInt = mpz_class;
using Rational = mpq_class;

// Reduced fraction with positive denominator. Throws std::invalid_argument on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

// gmpxx constructors stop at long; widen through the exact string form.
BigInt to_bigint(long long v);
inline Rational to_rational(long long v) { return Rational(to_bigint(v)); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

BigInt factorial(unsigned long n);

// The twist t(n) = slope*n + intercept fed into an Euler characteristic.
struct LinearTwist {
    long long slope = 0;
    long long intercept = 0;
};

// Dense univariate polynomial over Q, coefficients ascending by power.
// Invariant: no trailing zero coefficient; the zero polynomial is the empty list.
class RatPoly {
  public:
    RatPoly() = default;
    RatPoly(std::initializer_list<Rational> ascending);
    explicit RatPoly(std::vector<Rational> ascending);

    static RatPoly constant(const Rational& c);
    static RatPoly monomial(const Rational& c, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    Rational coeff(std::size_t i) const;  // 0 beyond the degree
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational eval(const Rational& t) const;

    // Canonical key: coefficients ascending, comma-joined, each as "num" or
    // "num/den" in lowest terms. Zero polynomial keys to the empty string.
    std::string key() const;
    static RatPoly from_key(const std::string& key);

    // Human form, descending powers: "2n^2 + 1", "7/2 n^4 + 25/2 n^2 + 2", "0".
    std::string str() const;

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const RatPoly& o) { *this = *this * o; return *this; }
    RatPoly operator-() const;

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { a += b; return a; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { a -= b; return a; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  private:
    void canonicalize();
    std::vector<Rational> coeffs_;
};

// chi(P^dim, O(t(n))) = prod_{i=1..dim} (t(n) + i) / dim! as a polynomial in n.
// dim = 0 gives the constant 1. Throws std::invalid_argument for dim < 0.
RatPoly proj_space_chi(int dim, const LinearTwist& twist);

}  // namespace hilbmatch
