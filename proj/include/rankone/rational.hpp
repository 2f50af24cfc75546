#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace rankone {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

/// "num/den" with den > 0; integers keep the "/1" suffix.
std::string to_string(const Rational& q);

/// Parses "a", "a/b" or a signed decimal integer; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& q);
/// Requires is_integer(q).
std::int64_t to_int64(const Rational& q);
double to_double(const Rational& q);

Integer factorial(unsigned n);
Integer binomial(std::int64_t n, std::int64_t k);

/// Dense univariate polynomial, coeffs[i] multiplies x^i. Trailing zeros are trimmed.
struct Poly {
    std::vector<Rational> coeffs;

    Poly() = default;
    explicit Poly(std::vector<Rational> c);
    static Poly constant(const Rational& c);
    /// 1 + x, raised to the power e.
    static Poly one_plus_x_pow(unsigned e);

    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return coeffs.empty(); }
    Rational operator()(const Rational& x) const;
    double eval(double x) const;
    Poly derivative() const;
    /// p(-x)
    Poly reflect() const;
    void trim();
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& c, const Poly& p);
bool operator==(const Poly& a, const Poly& b);

}  // namespace rankone
