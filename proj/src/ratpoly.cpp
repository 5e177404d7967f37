#include "hilbmatch/ratpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace hilbmatch {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

BigInt to_bigint(long long v) {
    return BigInt(std::to_string(v));
}

BigInt factorial(unsigned long n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

RatPoly::RatPoly(std::initializer_list<Rational> ascending) : coeffs_(ascending) {
    canonicalize();
}

RatPoly::RatPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
    canonicalize();
}

RatPoly RatPoly::constant(const Rational& c) {
    return RatPoly{c};
}

RatPoly RatPoly::monomial(const Rational& c, std::size_t power) {
    if (c == 0) return RatPoly{};
    std::vector<Rational> v(power + 1, Rational(0));
    v[power] = c;
    return RatPoly(std::move(v));
}

void RatPoly::canonicalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational RatPoly::eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    canonicalize();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    canonicalize();
    return *this;
}

RatPoly RatPoly::operator-() const {
    RatPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly{};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RatPoly(std::move(out));
}

std::string RatPoly::key() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ',';
        s += coeffs_[i].get_str();
    }
    return s;
}

RatPoly RatPoly::from_key(const std::string& key) {
    if (key.empty()) return RatPoly{};
    std::vector<Rational> v;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = key.find(',', start);
        std::string tok = key.substr(start, comma == std::string::npos ? comma : comma - start);
        if (tok.empty()) throw std::invalid_argument("empty coefficient in key '" + key + "'");
        Rational q;
        if (mpq_set_str(q.get_mpq_t(), tok.c_str(), 10) != 0)
            throw std::invalid_argument("bad coefficient '" + tok + "' in key");
        q.canonicalize();
        v.push_back(q);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return RatPoly(std::move(v));
}

std::string RatPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = abs(c);
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        if (i == 0) {
            out += a.get_str();
        } else {
            if (a != 1) {
                out += a.get_str();
                if (!is_integer(a)) out += ' ';
            }
            out += (i == 1) ? "n" : "n^" + std::to_string(i);
        }
    }
    return out;
}

RatPoly proj_space_chi(int dim, const LinearTwist& twist) {
    if (dim < 0) throw std::invalid_argument("projective dimension must be nonnegative");
    RatPoly result{Rational(1)};
    RatPoly linear{to_rational(twist.intercept), to_rational(twist.slope)};
    for (int i = 1; i <= dim; ++i) result *= linear + RatPoly{Rational(i)};
    return result * RatPoly::constant(make_rational(1, factorial(static_cast<unsigned long>(dim))));
}

}  // namespace hilbmatch
