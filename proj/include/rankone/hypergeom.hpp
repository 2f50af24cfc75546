#pragma once

#include "rankone/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace rankone {

/// Terminating Gauss series F(a,b;c;z) stored as an explicit polynomial in z.
struct F21Poly {
    Rational a, b, c;
    Poly poly;  // coeffs[j] = (a)_j (b)_j / ((c)_j j!)

    int degree() const { return poly.degree(); }
    const std::vector<Rational>& coeffs() const { return poly.coeffs; }
};

Rational pochhammer(const Rational& q, unsigned n);

/// Number of terms minus one, or -1 if neither a nor b is a nonpositive integer.
int termination_degree(const Rational& a, const Rational& b);

/// Throws DomainError when the series does not terminate or (c)_j vanishes
/// before termination.
F21Poly f21(const Rational& a, const Rational& b, const Rational& c);
bool f21_valid(const Rational& a, const Rational& b, const Rational& c);

Rational eval(const F21Poly& f, const Rational& z);
Poly derivative(const F21Poly& f);

/// Relation ids "i".."v". Throws DomainError when some instance in the
/// relation is not a valid terminating series.
bool check_contiguous(const std::string& relation_id, const Rational& a, const Rational& b, const Rational& c);


inline const std::vector<std::string> contiguous_relation_ids{"i", "ii", "iii", "iv", "v"};

/// Seeded triples with a in -8..-1, c in {1/2,..,9/2} or {1..6} for which every relation
/// instance is a valid terminating series.
std::vector<std::array<Rational, 3>> random_terminating_triples(int count, std::uint64_t seed);

}  // namespace rankone
