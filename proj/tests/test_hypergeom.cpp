#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rankone/errors.hpp"
#include "rankone/hypergeom.hpp"

using namespace rankone;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

std::vector<Rational> v(std::initializer_list<Rational> xs) { return xs; }

// Independent term-by-term series, no shared code with f21.
std::vector<Rational> naive_series(const Rational& a, const Rational& b, const Rational& c, int terms) {
    std::vector<Rational> out;
    for (int j = 0; j < terms; ++j) {
        Rational t = 1;
        for (int i = 0; i < j; ++i) t *= (a + i) * (b + i) / ((c + i) * (i + 1));
        out.push_back(t);
    }
    return out;
}

}  // namespace

TEST_CASE("Pochhammer") {
    CHECK(pochhammer(q(7, 3), 0) == 1);
    CHECK(pochhammer(-2, 3) == 0);
    CHECK(pochhammer(q(1, 2), 2) == q(3, 4));
    CHECK(pochhammer(3, 4) == 360);
}

TEST_CASE("terminating series") {
    CHECK(f21(0, q(5, 2), 3).coeffs() == v({1}));
    CHECK(f21(-1, q(5, 2), 3).coeffs() == v({1, q(-5, 6)}));
    // degree follows the smaller terminating parameter; the z^2 term of the raw series is 0
    CHECK(f21(-2, -1, 4).coeffs() == v({1, q(1, 2)}));
    CHECK(naive_series(-2, -1, 4, 3) == v({1, q(1, 2), 0}));
    CHECK(f21(-3, q(1, 2), q(3, 2)).coeffs() == naive_series(-3, q(1, 2), q(3, 2), 4));
    CHECK(termination_degree(-4, -2) == 2);
    CHECK(termination_degree(q(1, 2), 3) == -1);
    CHECK(f21(-2, 1, 1).coeffs().front() == 1);
}

TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(f21(q(1, 2), q(1, 3), 2), DomainError);
    CHECK_THROWS_AS(f21(-3, 1, -1), DomainError);
    CHECK(f21_valid(-3, 1, -5));
    CHECK_FALSE(f21_valid(-3, 1, -1));
}

TEST_CASE("evaluation and derivative") {
    CHECK(eval(f21(0, 3, 4), q(9, 7)) == 1);
    CHECK(eval(f21(-1, 1, 2), 1) == q(1, 2));
    Rational b = q(2, 3), c = q(5, 2);
    Poly lhs = derivative(f21(-2, b, c));
    Poly rhs = (-2 * b / c) * f21(-1, b + 1, c + 1).poly;
    CHECK(lhs == rhs);
    // Derivative against the (i) closed form over a small grid.
    for (int a = -6; a <= -1; ++a)
        for (int bn = -5; bn <= 5; ++bn)
            for (int cd = 1; cd <= 5; ++cd) {
                Rational bb(bn, 3), cc = Rational(2 * cd + 1, 2);
                CHECK(derivative(f21(a, bb, cc)) == (Rational(a) * bb / cc) * f21(a + 1, bb + 1, cc + 1).poly);
            }
}

TEST_CASE("contiguous relations, pinned instances") {
    CHECK(check_contiguous("ii", -3, -2, q(7, 2)));
    CHECK(check_contiguous("iii", -2, -1, 3));
    CHECK(check_contiguous("iv", 0, 2, 3));
    CHECK(check_contiguous("v", -4, q(1, 3), q(5, 2)));
    CHECK(check_contiguous("i", -5, q(-7, 2), q(3, 2)));
    CHECK_THROWS_AS(check_contiguous("vi", -1, 1, 1), DomainError);
}

TEST_CASE("contiguous relations, seeded sweep") {
    auto triples = random_terminating_triples(200, 20240601);
    CHECK(triples.size() == 200);
    for (const auto& t : triples)
        for (const auto& id : contiguous_relation_ids) {
            CAPTURE(id);
            CAPTURE(to_string(t[0]) + " " + to_string(t[1]) + " " + to_string(t[2]));
            CHECK(check_contiguous(id, t[0], t[1], t[2]));
        }
    CHECK(random_terminating_triples(5, 3) == random_terminating_triples(5, 3));
}
