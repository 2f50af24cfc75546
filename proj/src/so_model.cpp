#include "rankone/so_model.hpp"

#include "rankone/errors.hpp"
#include "rankone/hypergeom.hpp"
#include "rankone/ktypes.hpp"
#include "rankone/scalars.hpp"

#include <cmath>
#include <map>

namespace rankone::so {

Mat lorentz_J(int n) {
    Mat J = Mat::Identity(n + 1, n + 1);
    J(n, n) = -1;
    return J;
}

Mat boost_H(int n) {
    Mat H = Mat::Zero(n + 1, n + 1);
    H(0, n) = H(n, 0) = 1;
    return H;
}

Mat nilpotent(int n, int j) {
    Mat N = Mat::Zero(n + 1, n + 1);
    N(j, 0) = 1;
    N(0, j) = -1;
    N(j, n) = -1;
    N(n, j) = -1;
    return N;
}

bool is_lorentz(const Mat& g, double tol) {
    if (g.rows() != g.cols() || g.rows() < 3) return false;
    int n = int(g.rows()) - 1;
    Mat J = lorentz_J(n);
    double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
    if ((g.transpose() * J * g - J).cwiseAbs().maxCoeff() > tol * scale * scale) return false;
    return g(n, n) >= 1 - tol && std::abs(g.determinant() - 1) <= tol * std::pow(scale, n + 1);
}

Mat a_element(int n, double s) {
    Mat a = Mat::Identity(n + 1, n + 1);
    a(0, 0) = a(n, n) = std::cosh(s);
    a(0, n) = a(n, 0) = std::sinh(s);
    return a;
}

Mat n_element(int n, const std::vector<double>& v) {
    Mat X = Mat::Zero(n + 1, n + 1);
    for (int j = 1; j < n; ++j) X += v[j] * nilpotent(n, j);
    Mat X2 = X * X;
    return Mat::Identity(n + 1, n + 1) + X + X2 / 2 + X2 * X / 6;
}

Mat rotation(int n, int i, int j, double t) {
    Mat r = Mat::Identity(n + 1, n + 1);
    r(i, i) = r(j, j) = std::cos(t);
    r(i, j) = -std::sin(t);
    r(j, i) = std::sin(t);
    return r;
}

Mat boost(int n, int i, double t) {
    Mat b = Mat::Identity(n + 1, n + 1);
    b(i, i) = b(n, n) = std::cosh(t);
    b(i, n) = b(n, i) = std::sinh(t);
    return b;
}

Iwasawa iwasawa(const Mat& g) {
    if (!is_lorentz(g)) throw DomainError("iwasawa: not an element of the identity component of SO(n,1)");
    int n = int(g.rows()) - 1;
    double es = g(n, n) + g(n, 0);
    Iwasawa d{Mat::Zero(n + 1, n + 1), std::log(es), std::vector<double>(n + 1, 0.0)};
    Vec geta = g.col(0) + g.col(n);
    d.k.col(0) = geta / es;
    d.k(n, 0) -= 1;
    for (int j = 1; j < n; ++j) {
        d.n_coords[j] = -g(n, j) / es;
        d.k.col(j) = g.col(j) + d.n_coords[j] * geta;
    }
    d.k(n, n) = 1;
    return d;
}

Mat reconstruct(const Iwasawa& d) {
    int n = int(d.k.rows()) - 1;
    return d.k * a_element(n, d.s) * n_element(n, d.n_coords);
}

Mat random_lorentz(int n, std::mt19937_64& rng, int factors) {
    std::uniform_real_distribution<double> t(-1, 1);
    std::uniform_int_distribution<int> idx(0, n - 1);
    Mat g = Mat::Identity(n + 1, n + 1);
    for (int f = 0; f < factors; ++f) {
        int i = idx(rng), j = idx(rng);
        if (i != j) g = g * rotation(n, i, j, t(rng));
        g = g * boost(n, idx(rng), t(rng));
    }
    return g;
}

std::vector<Vec> sphere_points(int n, int count, std::mt19937_64& rng) {
    std::normal_distribution<double> z;
    std::vector<Vec> pts;
    while (int(pts.size()) < count) {
        Vec x(n);
        for (int i = 0; i < n; ++i) x[i] = z(rng);
        if (x.norm() > 1e-8) pts.push_back(x / x.norm());
    }
    return pts;
}

Rational sphere_moment(int n, const std::vector<int>& alpha) {
    if (n < 2 || int(alpha.size()) > n) throw DomainError("sphere_moment: bad dimension");
    int total = 0;
    Rational num = 1;
    for (int a : alpha) {
        if (a < 0) throw DomainError("sphere_moment: negative index");
        if (a % 2) return 0;
        for (int t = 0; t < a / 2; ++t) num *= Rational(2 * t + 1, 2);
        total += a;
    }
    Rational den = 1;
    for (int t = 0; t < total / 2; ++t) den *= Rational(n + 2 * t, 2);
    return num / den;
}

ZonalPoly zonal_poly(int n, int k) {
    if (n < 2 || k < 0) throw DomainError("zonal_poly: need n >= 2, k >= 0");
    F21Poly f = f21(Rational(-k, 2), Rational(1 - k, 2), Rational(n - 1, 2));
    Poly one_minus_x2({Rational(1), Rational(0), Rational(-1)});
    Poly acc;
    for (int j = 0; j < int(f.coeffs().size()); ++j) {
        Poly term = Poly::constant(j % 2 ? -f.coeffs()[j] : f.coeffs()[j]);
        std::vector<Rational> mono(k - 2 * j + 1);
        mono.back() = 1;
        term = term * Poly(mono);
        for (int t = 0; t < j; ++t) term = term * one_minus_x2;
        acc = acc + term;
    }
    return {n, k, acc};
}

bool harmonic_extension_check(const ZonalPoly& z) {
    // x1^i R^s with R = |x|^2; Laplacian computed term by term.
    std::map<std::pair<int, int>, Rational> lap;
    for (int i = 0; i < int(z.p.coeffs.size()); ++i) {
        const Rational& a = z.p.coeffs[i];
        if (a == 0) continue;
        if ((z.k - i) % 2) return false;
        int s = (z.k - i) / 2;
        if (i >= 2) lap[{i - 2, s}] += a * i * (i - 1);
        if (s >= 1) lap[{i, s - 1}] += a * (4 * i * s + 2 * s * (z.n + 2 * s - 2));
    }
    for (auto& [key, c] : lap)
        if (c != 0) return false;
    return true;
}

namespace {

Poly square(const Poly& p) { return p * p; }

template <class T>
using MultiPoly = std::map<std::vector<int>, T>;

template <class T>
T to_scalar(const Rational& q) {
    if constexpr (std::is_same_v<T, double>)
        return to_double(q);
    else
        return q;
}

// Integral over S^{n-1} of p(x1) p(w . x).
template <class T>
T pair_integral(int n, const Poly& p, const std::vector<T>& w) {
    MultiPoly<T> lin;
    for (int j = 0; j < n; ++j) {
        std::vector<int> e(n, 0);
        e[j] = 1;
        lin[e] = w[j];
    }
    MultiPoly<T> power{{std::vector<int>(n, 0), T(1)}}, other;
    for (int d = 0; d < int(p.coeffs.size()); ++d) {
        if (d > 0) {
            MultiPoly<T> next;
            for (auto& [e1, c1] : power)
                for (auto& [e2, c2] : lin) {
                    std::vector<int> e(n);
                    for (int i = 0; i < n; ++i) e[i] = e1[i] + e2[i];
                    next[e] += c1 * c2;
                }
            power = std::move(next);
        }
        T c = to_scalar<T>(p.coeffs[d]);
        for (auto& [e, v] : power) other[e] += c * v;
    }
    T total(0);
    for (int i = 0; i < int(p.coeffs.size()); ++i) {
        T a = to_scalar<T>(p.coeffs[i]);
        if (a == T(0)) continue;
        for (auto& [e, v] : other) {
            std::vector<int> ee = e;
            ee[0] += i;
            total += a * v * to_scalar<T>(sphere_moment(n, ee));
        }
    }
    return total;
}

}  // namespace

Rational zonal_l2_norm(int n, int k) {
    Poly sq = square(zonal_poly(n, k).p);
    Rational total = 0;
    for (int i = 0; i < int(sq.coeffs.size()); ++i)
        if (sq.coeffs[i] != 0) total += sq.coeffs[i] * sphere_moment(n, {i});
    return total;
}

RMat pythagorean_rotation(int n, int i, int j, int a, int b, int c) {
    if (a * a + b * b != c * c || c == 0) throw DomainError("pythagorean_rotation: need a^2 + b^2 = c^2");
    RMat r(n, std::vector<Rational>(n, Rational(0)));
    for (int t = 0; t < n; ++t) r[t][t] = 1;
    r[i][i] = r[j][j] = Rational(a, c);
    r[i][j] = Rational(-b, c);
    r[j][i] = Rational(b, c);
    return r;
}

bool reproducing_check_exact(int n, int k, const std::vector<RMat>& rotations) {
    ZonalPoly z = zonal_poly(n, k);
    Rational inv_dim = Rational(1) / Rational(weyl_dim(KTypeLabel(GroupFamily::so(n), {k})));
    for (const auto& R : rotations) {
        std::vector<Rational> w(n);
        for (int j = 0; j < n; ++j) w[j] = R[j][0];
        if (z.p(R[0][0]) * inv_dim != pair_integral<Rational>(n, z.p, w)) return false;
    }
    return true;
}

bool reproducing_check(int n, int k, const std::vector<Mat>& rotations, double tol) {
    ZonalPoly z = zonal_poly(n, k);
    double inv_dim = 1.0 / to_double(Rational(weyl_dim(KTypeLabel(GroupFamily::so(n), {k}))));
    for (const auto& R : rotations) {
        std::vector<double> w(n);
        for (int j = 0; j < n; ++j) w[j] = R(j, 0);
        if (std::abs(z(R(0, 0)) * inv_dim - pair_integral<double>(n, z.p, w)) > tol) return false;
    }
    return true;
}

Mat random_rotation(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> t(-M_PI, M_PI);
    Mat r = Mat::Identity(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Mat p = Mat::Identity(n, n);
            double a = t(rng);
            p(i, i) = p(j, j) = std::cos(a);
            p(i, j) = -std::sin(a);
            p(j, i) = std::sin(a);
            r = r * p;
        }
    return r;
}

std::vector<double> poisson_delta(int n, int k, const Rational& mu, const Mat& g, const std::vector<Vec>& points) {
    Mat J = lorentz_J(n);
    Iwasawa d = iwasawa(J * g.transpose() * J);
    ZonalPoly z = zonal_poly(n, k);
    double scale = std::exp(-d.s * (to_double(mu) + (n - 1) / 2.0));
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& x : points) {
        double y0 = 0;
        for (int j = 0; j < n; ++j) y0 += d.k(j, 0) * x[j];
        out.push_back(scale * z(y0));
    }
    return out;
}

namespace {

struct Combined {
    std::vector<double> values;
    std::vector<double> h_direction;
};

Combined combined_gradient(int n, int k, const Rational& mu, double h, const std::vector<Vec>& pts) {
    Combined c{std::vector<double>(pts.size(), 0.0), {}};
    for (int j = 0; j < n; ++j) {
        auto fp = poisson_delta(n, k, mu, boost(n, j, h), pts);
        auto fm = poisson_delta(n, k, mu, boost(n, j, -h), pts);
        std::vector<double> d(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            d[i] = (fp[i] - fm[i]) / (2 * h);
            c.values[i] += pts[i][j] * d[i];
        }
        if (j == 0) c.h_direction = d;
    }
    return c;
}

std::vector<double> project(int n, int top, const std::vector<double>& values, const std::vector<Vec>& pts) {
    Mat A(pts.size(), top + 1);
    Vec b(pts.size());
    for (int d = 0; d <= top; ++d) {
        ZonalPoly z = zonal_poly(n, d);
        for (std::size_t i = 0; i < pts.size(); ++i) A(i, d) = z(pts[i][0]);
    }
    for (std::size_t i = 0; i < pts.size(); ++i) b[i] = values[i];
    Vec c = A.colPivHouseholderQr().solve(b);
    return {c.data(), c.data() + c.size()};
}

}  // namespace

IntertwiningResult verify_intertwining(int n, int k, const Rational& mu, double step_h, int samples,
                                       std::uint64_t seed) {
    if (n < 3 || k < 0) throw DomainError("verify_intertwining: need n >= 3, k >= 0");
    std::mt19937_64 rng(seed);
    auto pts = sphere_points(n, samples, rng);
    GroupFamily g = GroupFamily::so(n);
    KTypeLabel Yk(g, {k});
    IntertwiningResult r;
    r.t_up = t_scalar(g, Yk, KTypeLabel(g, {k + 1}), {mu});
    r.t_down = k > 0 ? t_scalar(g, Yk, KTypeLabel(g, {k - 1}), {mu}) : Rational(0);
    Combined c = combined_gradient(n, k, mu, step_h, pts);
    ZonalPoly up = zonal_poly(n, k + 1), self = zonal_poly(n, k);
    ZonalPoly down = zonal_poly(n, std::max(k - 1, 0));
    double tu = to_double(r.t_up), td = to_double(r.t_down), mr = to_double(mu) + (n - 1) / 2.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double x1 = pts[i][0];
        double expect = tu * up(x1) + (k > 0 ? td * down(x1) : 0.0);
        r.max_residual = std::max(r.max_residual, std::abs(c.values[i] - expect));
        r.h_direction_residual = std::max(r.h_direction_residual, std::abs(c.h_direction[i] - mr * self(x1)));
    }
    r.projections = project(n, k + 2, c.values, pts);
    return r;
}

double exceptional_projection(int n, int l, double step_h, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pts = sphere_points(n, samples, rng);
    Rational mu = -Rational(n - 1, 2) - l;
    Combined c = combined_gradient(n, l, mu, step_h, pts);
    return project(n, l + 2, c.values, pts)[l + 1];
}

namespace {

using QMat = std::vector<std::vector<Rational>>;

QMat qzero(int N) { return QMat(N, std::vector<Rational>(N, Rational(0))); }

QMat qmul(const QMat& a, const QMat& b) {
    int N = int(a.size());
    QMat c = qzero(N);
    for (int i = 0; i < N; ++i)
        for (int t = 0; t < N; ++t)
            if (a[i][t] != 0)
                for (int j = 0; j < N; ++j) c[i][j] += a[i][t] * b[t][j];
    return c;
}

QMat qlin(const Rational& x, const QMat& a, const Rational& y, const QMat& b) {
    QMat c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c[i][j] = x * a[i][j] + y * b[i][j];
    return c;
}

Rational killing(const QMat& a, const QMat& b) {
    QMat p = qmul(a, b);
    Rational t = 0;
    for (std::size_t i = 0; i < p.size(); ++i) t += p[i][i];
    return t / 2;
}

QMat bracket(const QMat& a, const QMat& b) { return qlin(1, qmul(a, b), -1, qmul(b, a)); }

}  // namespace

TwoRho two_rho(int n) {
    if (n < 2) throw DomainError("two_rho: need n >= 2");
    int N = n + 1;
    QMat J = qzero(N), H = qzero(N);
    for (int i = 0; i < n; ++i) J[i][i] = 1;
    J[n][n] = -1;
    H[0][n] = H[n][0] = 1;
    auto theta = [&](const QMat& x) { return qmul(qmul(J, x), J); };
    TwoRho r{0, true, 0};
    QMat total = qzero(N);
    for (int j = 1; j < n; ++j) {
        QMat Nj = qzero(N);
        Nj[j][0] = 1;
        Nj[0][j] = -1;
        Nj[j][n] = -1;
        Nj[n][j] = -1;
        if (bracket(H, Nj) != Nj) throw CheckFailure("nilpotent basis is not in the positive root space");
        QMat Y = qlin(Rational(1, 2), Nj, 0, Nj);
        if (killing(Y, theta(Y)) != Rational(-1, 2)) throw CheckFailure("root vector normalization failed");
        QMat X = qlin(1, Y, -1, theta(Y));
        QMat kp = qlin(-1, Y, -1, theta(Y));
        QMat Xt = qlin(1 / killing(X, X), X, 0, X);
        r.pairing += killing(bracket(Xt, kp), H);
        total = qlin(1, total, 1, bracket(kp, Xt));
    }
    r.bracket_coeff = total[0][n];
    r.bracket_is_multiple_of_H = qlin(1, total, -r.bracket_coeff, H) == qzero(N);
    return r;
}

bool check_2rho(int n) {
    TwoRho r = two_rho(n);
    Rational two_rho_H = 2 * structural_data(GroupFamily::so(n)).rho_H;
    return r.pairing == two_rho_H && r.bracket_is_multiple_of_H && r.bracket_coeff == -two_rho_H;
}

}  // namespace rankone::so
