#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rankone/errors.hpp"
#include "rankone/tensor.hpp"

#include <algorithm>

using namespace rankone;

namespace {

// Doubled coordinates from integer coordinates.
IWeight iw(std::initializer_list<int> xs) {
    IWeight v;
    for (int x : xs) v.push_back(2 * x);
    return v;
}

std::vector<IWeight> sorted(std::vector<IWeight> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<GroupFamily> families() {
    std::vector<GroupFamily> out;
    for (int n = 3; n <= 8; ++n) out.push_back(GroupFamily::so(n));
    for (int n = 2; n <= 5; ++n) out.push_back(GroupFamily::su(n));
    for (int n = 2; n <= 4; ++n) out.push_back(GroupFamily::sp(n));
    out.push_back(GroupFamily::f4());
    return out;
}

std::int64_t total(const WeightMultiset& m) {
    std::int64_t t = 0;
    for (auto& [w, c] : m) t += c;
    return t;
}

}  // namespace

TEST_CASE("weights of p") {
    auto so5 = weights_of_p(GroupFamily::so(5));
    CHECK(total(so5) == 5);
    CHECK(so5.count(iw({0, 0})) == 1);
    CHECK(so5.count(iw({-1, 0})) == 1);
    auto sp2 = weights_of_p(GroupFamily::sp(2));
    CHECK(total(sp2) == 8);
    CHECK(sp2.count(iw({1, 0, -1})) == 1);
    auto f4 = weights_of_p(GroupFamily::f4());
    CHECK(total(f4) == 16);
    CHECK(f4.count(IWeight{1, -1, 1, -1}) == 1);
    for (const auto& g : families()) CHECK(total(weights_of_p(g)) == structural_data(g).dim_p);
    CHECK_THROWS_AS(weights_of_p(GroupFamily::so(2)), Unsupported);
}

TEST_CASE("odd orthogonal decompositions") {
    auto g = GroupFamily::so(5);
    for (int k = 1; k <= 6; ++k) {
        auto d = racah_speiser(g, KTypeLabel(g, {k}));
        CHECK(sorted(d.weights()) == sorted({iw({k - 1, 0}), iw({k + 1, 0}), iw({k, 1})}));
        int spherical = int(std::count_if(d.summands.begin(), d.summands.end(), [](auto& s) { return s.m_spherical; }));
        CHECK(spherical == 2);
    }
    auto g3 = GroupFamily::so(3);
    for (int k = 1; k <= 6; ++k)
        CHECK(sorted(racah_speiser(g3, KTypeLabel(g3, {k})).weights()) == sorted({iw({k - 1}), iw({k}), iw({k + 1})}));
    CHECK(racah_speiser(g3, KTypeLabel(g3, {0})).weights() == std::vector<IWeight>{iw({1})});
}

TEST_CASE("SO(4) carries the conjugate summand") {
    auto g = GroupFamily::so(4);
    for (int k = 1; k <= 6; ++k) {
        auto d = racah_speiser(g, KTypeLabel(g, {k}));
        CHECK(sorted(d.weights()) == sorted({iw({k - 1, 0}), iw({k + 1, 0}), iw({k, 1}), iw({k, -1})}));
        CHECK(dimension_sum_check(g, KTypeLabel(g, {k})).ok);
    }
}

TEST_CASE("unitary decomposition has six summands in the interior") {
    for (int n = 2; n <= 5; ++n) {
        auto g = GroupFamily::su(n);
        for (int p = 1; p <= 4; ++p)
            for (int q = 1; q <= 4; ++q) {
                auto d = racah_speiser(g, KTypeLabel(g, {p, q}));
                // SU(1) factor is trivial for n = 2: only the four spherical summands survive
                CHECK(d.summands.size() == (n == 2 ? 4u : 6u));
                int spherical = int(std::count_if(d.summands.begin(), d.summands.end(), [](auto& s) { return s.m_spherical; }));
                CHECK(spherical == 4);
            }
    }
}

TEST_CASE("stated forms agree with Racah-Speiser") {
    for (const auto& g : families())
        for (const auto& l : labels_up_to(g, 10)) {
            CAPTURE(g.name());
            CAPTURE(l.name());
            auto d = racah_speiser(g, l);
            CHECK(sorted(d.weights()) == sorted(stated_decomposition(g, l)));
            for (const auto& s : d.summands) CHECK(s.multiplicity == 1);
        }
}

TEST_CASE("character oracle agrees on small instances") {
    std::vector<GroupFamily> gs;
    for (int n = 3; n <= 9; ++n) gs.push_back(GroupFamily::so(n));
    for (int n = 2; n <= 4; ++n) gs.push_back(GroupFamily::su(n));
    gs.push_back(GroupFamily::sp(2));
    gs.push_back(GroupFamily::sp(3));
    gs.push_back(GroupFamily::f4());
    for (const auto& g : gs)
        for (const auto& l : labels_up_to(g, 4)) {
            CAPTURE(g.name());
            CAPTURE(l.name());
            auto a = racah_speiser(g, l), b = character_oracle(g, l);
            REQUIRE(a.summands.size() == b.summands.size());
            for (std::size_t i = 0; i < a.summands.size(); ++i) {
                CHECK(a.summands[i].weight == b.summands[i].weight);
                CHECK(a.summands[i].multiplicity == b.summands[i].multiplicity);
            }
        }
}

TEST_CASE("trivial type tensors to p") {
    for (const auto& g : families()) {
        auto d = racah_speiser(g, labels_up_to(g, 0).front());
        // p splits into p+ and p- when K has a central circle
        REQUIRE(d.summands.size() == (g.variant() == Variant::SU ? 2u : 1u));
        Integer total = 0;
        for (const auto& s : d.summands) total += weyl_dim(g, s.weight);
        CHECK(total == structural_data(g).dim_p);
    }
}

TEST_CASE("Freudenthal character sizes") {
    auto g = GroupFamily::so(5);
    CHECK(total(character(g, iw({2, 0}))) == 14);
    CHECK(total(character(GroupFamily::f4(), IWeight{1, 1, 1, 1})) == 16);
    CHECK(total(character(GroupFamily::su(3), highest_iweight(KTypeLabel(GroupFamily::su(3), {1, 1})))) == 8);
}

TEST_CASE("dimension sums") {
    auto sp = GroupFamily::sp(2);
    auto r = dimension_sum_check(sp, KTypeLabel(sp, {2, 1}));
    CHECK(r.ok);
    CHECK(r.total == 8 * weyl_dim(KTypeLabel(sp, {2, 1})));
    auto f4 = GroupFamily::f4();
    auto s = dimension_sum_check(f4, KTypeLabel(f4, {2, 0}));
    CHECK(s.ok);
    CHECK(s.total == 16 * 9);
    for (const auto& g : families())
        for (const auto& l : labels_up_to(g, 10)) CHECK(dimension_sum_check(g, l).ok);
}

TEST_CASE("adjacency is symmetric on spherical labels") {
    for (const auto& g : families())
        for (const auto& a : labels_up_to(g, 8))
            for (const auto& b : spherical_neighbours(g, a)) {
                auto back = spherical_neighbours(g, b);
                CHECK(std::find(back.begin(), back.end(), a) != back.end());
            }
}
