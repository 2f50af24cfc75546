#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rankone/errors.hpp"
#include "rankone/ktypes.hpp"
#include "rankone/so_model.hpp"

#include <cmath>

using namespace rankone;
using namespace rankone::so;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

// Gegenbauer C_k^{lambda}(x) by the three-term recurrence, normalized at 1.
double gegenbauer_normalized(int k, double lambda, double x) {
    auto C = [&](double t) {
        double c0 = 1, c1 = 2 * lambda * t;
        if (k == 0) return c0;
        for (int j = 2; j <= k; ++j) {
            double c2 = (2 * t * (j + lambda - 1) * c1 - (j + 2 * lambda - 2) * c0) / j;
            c0 = c1;
            c1 = c2;
        }
        return c1;
    };
    return C(x) / C(1.0);
}

}  // namespace

TEST_CASE("Lie algebra conventions") {
    for (int n = 2; n <= 5; ++n) {
        Mat H = boost_H(n);
        for (int j = 1; j < n; ++j) {
            Mat N = nilpotent(n, j);
            CHECK(max_abs(H * N - N * H - N) == 0);
        }
    }
}

TEST_CASE("Iwasawa on simple elements") {
    int n = 4;
    auto d = iwasawa(Mat::Identity(n + 1, n + 1));
    CHECK(max_abs(d.k - Mat::Identity(n + 1, n + 1)) < 1e-14);
    CHECK(d.s == doctest::Approx(0));
    for (double v : d.n_coords) CHECK(v == 0);

    auto a = iwasawa(a_element(n, 0.8));
    CHECK(max_abs(a.k - Mat::Identity(n + 1, n + 1)) < 1e-12);
    CHECK(a.s == doctest::Approx(0.8));
    for (double v : a.n_coords) CHECK(std::abs(v) < 1e-12);

    std::vector<double> v{0, 0.3, -0.7, 0.2, 0};
    auto nn = iwasawa(n_element(n, v));
    CHECK(std::abs(nn.s) < 1e-12);
    for (int j = 0; j <= n; ++j) CHECK(nn.n_coords[j] == doctest::Approx(v[j]));

    Mat bad = Mat::Identity(n + 1, n + 1);
    bad(0, 0) = 2;
    CHECK_THROWS_AS(iwasawa(bad), DomainError);
}

TEST_CASE("Iwasawa round trip on seeded random elements") {
    std::mt19937_64 rng(42);
    for (int n = 2; n <= 5; ++n)
        for (int i = 0; i < 100; ++i) {
            Mat g = random_lorentz(n, rng);
            REQUIRE(is_lorentz(g));
            auto d = iwasawa(g);
            CHECK(max_abs(reconstruct(d) - g) <= 1e-9);
            CHECK(max_abs(d.k.transpose() * d.k - Mat::Identity(n + 1, n + 1)) <= 1e-9);
            CHECK(std::abs(d.k(n, n) - 1) <= 1e-12);
        }
}

TEST_CASE("sphere moments") {
    CHECK(sphere_moment(3, {2, 0, 0}) == q(1, 3));
    CHECK(sphere_moment(2, {2, 2}) == q(1, 8));
    CHECK(sphere_moment(4, {1, 2}) == 0);
    CHECK(sphere_moment(5, {}) == 1);
    // sum of x_i^2 over S^{n-1} is 1.
    for (int n = 2; n <= 7; ++n) CHECK(sphere_moment(n, {2}) * n == 1);
    // x^4 on S^2: 1/5.
    CHECK(sphere_moment(3, {4}) == q(1, 5));
}

TEST_CASE("zonal polynomials") {
    for (int n = 3; n <= 6; ++n)
        for (int k = 0; k <= 8; ++k) {
            ZonalPoly z = zonal_poly(n, k);
            CHECK(z.p(1) == 1);
            CHECK(harmonic_extension_check(z));
            for (double x : {-0.9, -0.3, 0.2, 0.75})
                CHECK(z(x) == doctest::Approx(gegenbauer_normalized(k, (n - 2) / 2.0, x)).epsilon(1e-12));
        }
    // A non-harmonic polynomial is caught.
    ZonalPoly wrong{3, 2, Poly({Rational(0), Rational(0), Rational(1)})};
    CHECK_FALSE(harmonic_extension_check(wrong));
}

TEST_CASE("zonal norms") {
    CHECK(zonal_l2_norm(3, 1) == q(1, 3));
    CHECK(zonal_l2_norm(4, 0) == 1);
    CHECK(zonal_l2_norm(5, 2) == q(1, 14));
    for (int n = 3; n <= 5; ++n)
        for (int k = 0; k <= 8; ++k)
            CHECK(zonal_l2_norm(n, k) * Rational(weyl_dim(KTypeLabel(GroupFamily::so(n), {k}))) == 1);
}

TEST_CASE("reproducing property") {
    RMat id = pythagorean_rotation(3, 0, 1, 1, 0, 1);
    CHECK(reproducing_check_exact(3, 2, {id}));
    CHECK(reproducing_check_exact(3, 1, {pythagorean_rotation(3, 0, 1, 3, 4, 5)}));
    CHECK(reproducing_check_exact(5, 4, {pythagorean_rotation(5, 0, 3, 8, 15, 17)}));
    std::mt19937_64 rng(9);
    CHECK(reproducing_check(4, 2, {random_rotation(4, rng), random_rotation(4, rng)}));
    CHECK_THROWS_AS(pythagorean_rotation(3, 0, 1, 1, 1, 1), DomainError);
}

TEST_CASE("Poisson transform of the delta") {
    int n = 3, k = 2;
    Rational mu = q(1, 2);
    std::mt19937_64 rng(5);
    auto pts = sphere_points(n, 20, rng);
    ZonalPoly z = zonal_poly(n, k);
    auto at_e = poisson_delta(n, k, mu, Mat::Identity(n + 1, n + 1), pts);
    auto at_n = poisson_delta(n, k, mu, n_element(n, {0, 0.4, -1.1, 0}), pts);
    double s = 0.6;
    auto at_a = poisson_delta(n, k, mu, a_element(n, s), pts);
    double factor = std::exp(s * (0.5 + 1.0));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(at_e[i] == doctest::Approx(z(pts[i][0])).epsilon(1e-12));
        CHECK(at_n[i] == doctest::Approx(z(pts[i][0])).epsilon(1e-12));
        CHECK(at_a[i] == doctest::Approx(factor * z(pts[i][0])).epsilon(1e-12));
    }
}

TEST_CASE("intertwining scalars, grid") {
    const Rational mus[] = {-2, -1, q(-1, 2), 0, q(1, 2), 1};
    for (int n = 3; n <= 4; ++n)
        for (int k = 0; k <= 3; ++k)
            for (const auto& mu : mus) {
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(to_string(mu));
                auto r = verify_intertwining(n, k, mu, 1e-4, 50, 1);
                CHECK(r.max_residual <= 1e-5);
                CHECK(r.h_direction_residual <= 1e-5);
                CHECK(r.projections[k + 1] == doctest::Approx(to_double(r.t_up)).epsilon(1e-6));
                if (k > 0) CHECK(r.projections[k - 1] == doctest::Approx(to_double(r.t_down)).epsilon(1e-6));
                CHECK(std::abs(r.projections[k]) <= 1e-6);
            }
    auto r5 = verify_intertwining(5, 2, q(3, 2));
    CHECK(r5.max_residual <= 1e-5);
}

TEST_CASE("intertwining at exceptional parameters") {
    // Source Y_1 at mu=-1 in SO(3,1): coefficients -2/3 on Y_0 and 2/3 on Y_2.
    auto r = verify_intertwining(3, 1, -1);
    CHECK(r.t_down == q(-2, 3));
    CHECK(r.t_up == q(2, 3));
    for (int n = 3; n <= 5; ++n)
        for (int l = 0; l <= 3; ++l) CHECK(std::abs(exceptional_projection(n, l)) <= 1e-5);
}

TEST_CASE("2 rho identities") {
    CHECK(two_rho(2).pairing == 1);
    CHECK(two_rho(3).pairing == 2);
    CHECK(two_rho(5).pairing == 4);
    for (int n = 2; n <= 6; ++n) {
        auto r = two_rho(n);
        CHECK(r.bracket_is_multiple_of_H);
        CHECK(r.bracket_coeff == -(n - 1));
        CHECK(check_2rho(n));
    }
}
