#include "rankone/rational.hpp"

#include <stdexcept>

namespace rankone {

std::string to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    auto parse_int = [&](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("bad rational: '" + text + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("bad rational: '" + text + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad rational: '" + text + "'");
        return Integer(s[0] == '+' ? s.substr(1) : s);
    };
    if (slash == std::string::npos) return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(num, den);
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

std::int64_t to_int64(const Rational& q) {
    if (!is_integer(q)) throw std::invalid_argument("not an integer: " + to_string(q));
    return numerator(q).convert_to<std::int64_t>();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Poly::Poly(std::vector<Rational> c) : coeffs(std::move(c)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::one_plus_x_pow(unsigned e) {
    std::vector<Rational> c(e + 1);
    for (unsigned i = 0; i <= e; ++i) c[i] = Rational(binomial(e, i));
    return Poly(std::move(c));
}

int Poly::degree() const { return static_cast<int>(coeffs.size()) - 1; }

void Poly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval(double x) const {
    double acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

Poly Poly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < coeffs.size(); ++i) d.push_back(coeffs[i] * static_cast<long>(i));
    return Poly(std::move(d));
}

Poly Poly::reflect() const {
    Poly r = *this;
    for (std::size_t i = 1; i < r.coeffs.size(); i += 2) r.coeffs[i] = -r.coeffs[i];
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rational(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return Poly(std::move(c));
}

Poly operator*(const Rational& c, const Poly& p) {
    std::vector<Rational> r = p.coeffs;
    for (auto& x : r) x *= c;
    return Poly(std::move(r));
}

bool operator==(const Poly& a, const Poly& b) { return a.coeffs == b.coeffs; }

}  // namespace rankone
