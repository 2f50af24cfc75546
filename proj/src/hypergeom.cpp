#include "rankone/hypergeom.hpp"

#include "rankone/errors.hpp"

#include <algorithm>
#include <random>

namespace rankone {

Rational pochhammer(const Rational& q, unsigned n) {
    Rational r = 1;
    for (unsigned i = 0; i < n; ++i) r *= q + i;
    return r;
}

static bool nonpositive_integer(const Rational& x) { return is_integer(x) && x <= 0; }

int termination_degree(const Rational& a, const Rational& b) {
    int d = -1;
    for (const Rational* x : {&a, &b})
        if (nonpositive_integer(*x)) {
            int k = static_cast<int>(-to_int64(*x));
            d = d < 0 ? k : std::min(d, k);
        }
    return d;
}

bool f21_valid(const Rational& a, const Rational& b, const Rational& c) {
    int d = termination_degree(a, b);
    if (d < 0) return false;
    // (c)_j for j <= d uses the factors c, ..., c+d-1.
    for (int i = 0; i < d; ++i)
        if (c + i == 0) return false;
    return true;
}

F21Poly f21(const Rational& a, const Rational& b, const Rational& c) {
    int d = termination_degree(a, b);
    if (d < 0) throw DomainError("F(a,b;c;z) does not terminate for a=" + to_string(a) + ", b=" + to_string(b));
    if (!f21_valid(a, b, c)) throw DomainError("(c)_j vanishes before termination for c=" + to_string(c));
    std::vector<Rational> co(d + 1);
    co[0] = 1;
    for (int j = 1; j <= d; ++j) co[j] = co[j - 1] * (a + j - 1) * (b + j - 1) / ((c + j - 1) * j);
    F21Poly f{a, b, c, Poly{}};
    f.poly.coeffs = std::move(co);  // keep the full list, zeros included
    return f;
}

Rational eval(const F21Poly& f, const Rational& z) { return f.poly(z); }

Poly derivative(const F21Poly& f) {
    Poly p(f.poly.coeffs);
    return p.derivative();
}

namespace {

Poly P(const Rational& a, const Rational& b, const Rational& c) {
    if (!f21_valid(a, b, c))
        throw DomainError("relation instance F(" + to_string(a) + "," + to_string(b) + ";" + to_string(c) +
                          ") is not a valid terminating series");
    return Poly(f21(a, b, c).poly.coeffs);
}

// coef * F(a,b;c), skipping the series entirely when coef vanishes.
Poly T(const Rational& coef, const Rational& a, const Rational& b, const Rational& c) {
    return coef == 0 ? Poly{} : coef * P(a, b, c);
}

const Poly z_poly({Rational(0), Rational(1)});
const Poly z_minus_1({Rational(-1), Rational(1)});

}  // namespace

bool check_contiguous(const std::string& id, const Rational& a, const Rational& b, const Rational& c) {
    Poly lhs, rhs;
    if (id == "i") {
        lhs = P(a, b, c).derivative();
        // When ab = 0 the right side vanishes whatever F(a+1,b+1,c+1) is.
        rhs = T(a * b / c, a + 1, b + 1, c + 1);
    } else if (id == "ii") {
        lhs = (c - b - a) * P(a, b, c);
        rhs = T(c - b, a, b - 1, c) + z_minus_1 * T(a, a + 1, b, c);
    } else if (id == "iii") {
        lhs = (c - b - a) * P(a, b, c);
        rhs = T(c - a, a - 1, b, c) + z_minus_1 * T(b, a, b + 1, c);
    } else if (id == "iv") {
        lhs = P(a, b + 1, c) - P(a, b, c);
        rhs = z_poly * T(a / c, a + 1, b + 1, c + 1);
    } else if (id == "v") {
        lhs = P(a + 1, b, c) - P(a, b, c);
        rhs = z_poly * T(b / c, a + 1, b + 1, c + 1);
    } else {
        throw DomainError("unknown relation id '" + id + "'");
    }
    return lhs == rhs;
}


std::vector<std::array<Rational, 3>> random_terminating_triples(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> a_dist(1, 8), den(1, 6), b_num(-20, 20), c_pick(0, 10);
    std::vector<std::array<Rational, 3>> out;
    while (int(out.size()) < count) {
        Rational a = -a_dist(rng);
        Rational b(b_num(rng), den(rng));
        int ci = c_pick(rng);
        Rational c = ci < 5 ? Rational(2 * ci + 1, 2) : Rational(ci - 4);
        bool ok = true;
        for (const auto& id : contiguous_relation_ids) {
            try {
                check_contiguous(id, a, b, c);
            } catch (const DomainError&) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back({a, b, c});
    }
    return out;
}

}  // namespace rankone
