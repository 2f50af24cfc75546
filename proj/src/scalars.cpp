#include "rankone/scalars.hpp"

#include "rankone/errors.hpp"
#include "rankone/spherical.hpp"

#include <cmath>

namespace rankone {

namespace {

void require_supported(const GroupFamily& g) {
    if (g.is_so21()) throw Unsupported("Poisson scalars are not provided for SO(2,1)");
}

// Index of Y among the four neighbour directions of V (two for SO), or -1.
int direction(const GroupFamily& g, const KTypeLabel& V, const KTypeLabel& Y) {
    const auto& v = V.coords();
    const auto& y = Y.coords();
    if (v.size() != y.size()) return -1;
    if (g.variant() == Variant::SO) {
        if (y[0] == v[0] + 1) return 0;
        if (y[0] == v[0] - 1) return 1;
        return -1;
    }
    int d0 = y[0] - v[0], d1 = y[1] - v[1];
    if (g.variant() == Variant::F4) {
        if (d0 == 1 && d1 == 1) return 0;
        if (d0 == -1 && d1 == 1) return 1;
        if (d0 == 1 && d1 == -1) return 2;
        if (d0 == -1 && d1 == -1) return 3;
        return -1;
    }
    if (d0 == 1 && d1 == 0) return 0;
    if (d0 == 0 && d1 == -1) return 1;
    if (d0 == 0 && d1 == 1) return 2;
    if (d0 == -1 && d1 == 0) return 3;
    return -1;
}

// nu(V,Y) / lambda(V,Y).
Rational nu_ratio(const GroupFamily& g, const KTypeLabel& V, int dir) {
    Rational rho = structural_data(g).rho_H;
    int n = g.n();
    switch (g.variant()) {
        case Variant::SO: {
            int l = V[0];
            return dir == 0 ? Rational(l) : -(2 * rho + l - 1);
        }
        case Variant::SU: {
            int p = V[0], q = V[1];
            switch (dir) {
                case 0: return 2 * p;
                case 1: return -2 * (rho + q - 1);
                case 2: return 2 * q;
                default: return -2 * (rho + p - 1);
            }
        }
        case Variant::Sp: {
            int a = V[0], b = V[1];
            switch (dir) {
                case 0: return 2 * a;
                case 1: return -(4 * n - 2 + 2 * b);
                case 2: return 2 * (b - 1);
                default: return -(4 * n + 2 * a);
            }
        }
        case Variant::F4: {
            int m = V[0], l = V[1];
            switch (dir) {
                case 0: return m + l;
                case 1: return -(14 + m - l);
                case 2: return m - l - 6;
                default: return -(20 + m + l);
            }
        }
    }
    return 0;
}

int related_direction(const GroupFamily& g, const KTypeLabel& V, const KTypeLabel& Y) {
    require_supported(g);
    int dir = direction(g, V, Y);
    if (dir < 0 || lambda_scalar(g, V, Y) == 0)
        throw DomainError(V.name() + " and " + Y.name() + " are not omega-related");
    return dir;
}

}  // namespace

Rational nu_scalar(const GroupFamily& g, const KTypeLabel& V, const KTypeLabel& Y) {
    int dir = related_direction(g, V, Y);
    return nu_ratio(g, V, dir) * lambda_scalar(g, V, Y);
}

ScalarPair scalar_pair(const GroupFamily& g, const KTypeLabel& V, const KTypeLabel& Y) {
    return {lambda_scalar(g, V, Y), nu_scalar(g, V, Y)};
}

Rational t_scalar(const GroupFamily& g, const KTypeLabel& V, const KTypeLabel& Y, const SpectralParam& mu) {
    Rational rho = structural_data(g).rho_H;
    return (mu.mu_H + rho) * lambda_scalar(g, V, Y) + nu_scalar(g, V, Y);
}

Rational t_root(const GroupFamily& g, const KTypeLabel& V, const KTypeLabel& Y) {
    Rational lam = lambda_scalar(g, V, Y);
    return -nu_scalar(g, V, Y) / lam - structural_data(g).rho_H;
}

Rational proof_table_root(const GroupFamily& g, const KTypeLabel& V, const KTypeLabel& Y) {
    int dir = related_direction(g, V, Y);
    Rational rho = structural_data(g).rho_H;
    switch (g.variant()) {
        case Variant::SO: {
            int l = V[0];
            return dir == 0 ? -rho - l : rho + l - 1;
        }
        case Variant::SU: {
            int p = V[0], q = V[1];
            switch (dir) {
                case 0: return -2 * p - rho;
                case 1: return rho + 2 * (q - 1);
                case 2: return -2 * q - rho;
                default: return rho + 2 * (p - 1);
            }
        }
        case Variant::Sp: {
            int a = V[0], b = V[1];
            switch (dir) {
                case 0: return -(rho + 2 * a);
                case 1: return rho + 2 * b - 4;
                case 2: return -(rho - 2 + 2 * b);
                default: return rho - 2 + 2 * a;
            }
        }
        case Variant::F4: {
            int m = V[0], l = V[1];
            switch (dir) {
                case 0: return -(rho + m + l);
                case 1: return rho + m - l - 8;
                case 2: return -(rho - 6 + m - l);
                default: return rho - 2 + m + l;
            }
        }
    }
    return 0;
}

VanishingReport vanishing_table_details(const GroupFamily& g, int bound) {
    require_supported(g);
    VanishingReport rep;
    for (const auto& V : labels_up_to(g, bound)) {
        for (const auto& [Y, lam] : omega_h_expand(g, V).terms) {
            ++rep.rows;
            Rational mu = proof_table_root(g, V, Y);
            if (t_scalar(g, V, Y, {mu}) != 0 || t_root(g, V, Y) != mu || lam == 0)
                rep.failures.push_back(V.name() + "->" + Y.name() + " at mu(H)=" + to_string(mu));
        }
    }
    return rep;
}

bool vanishing_table_check(const GroupFamily& g, int bound) { return vanishing_table_details(g, bound).ok(); }

GrowthSpec growth_spec(const GroupFamily& g, int ell) {
    switch (g.variant()) {
        case Variant::SU: return {g, ell, 2 * g.n() + ell};
        case Variant::Sp: return {g, ell, 2 * g.n() - 1 + 2 * ell};
        case Variant::F4: return {g, ell, 7 + 2 * ell - 2};
        default: throw Unsupported("growth products exist for SU, Sp and F4 only");
    }
}

namespace {

Rational fact(long v) { return Rational(factorial(static_cast<unsigned>(v))); }

// r-th ratio of the product (r starts at 2) without dimension factors.
Rational su_ratio(int n, int l, int q, int r) {
    int p = l + r;
    return Rational((n + p - 2) * (n + p + q - 1), p * (n + p + q - 2)) * Rational(n + p, p - 1 - l);
}

Rational sp_factor(int n, int l, int r) { return Rational(2 * n - 1 + 2 * l + r, r); }

// F4 ratio at diagonal index j = (m+k)/2.
Rational f4_ratio(int l, int j) { return Rational(7 + l + j, 2 - l + j); }

Rational sp_dim(const GroupFamily& g, int a, int b) { return Rational(weyl_dim(KTypeLabel(g, {a, b}))); }

}  // namespace

std::pair<Rational, Rational> growth_product(const GroupFamily& g, int ell, int steps, int fixed) {
    if (steps < 1 || ell < 0 || fixed < 0) throw DomainError("growth_product needs steps >= 1, ell >= 0, fixed >= 0");
    int n = g.n();
    Rational iter = 1, closed;
    switch (g.variant()) {
        case Variant::SU: {
            int q = fixed, m = steps + 1;
            for (int r = 2; r <= m; ++r) iter *= su_ratio(n, ell, q, r);
            closed = Rational(n + ell + m + q - 1) * fact(n + ell + m - 2) * fact(ell + 1) * fact(n + ell + m) /
                     (Rational(n + ell + q) * fact(n + ell - 1) * fact(ell + m) * fact(m - 1) * fact(n + ell + 1));
            break;
        }
        case Variant::Sp: {
            int b = fixed, m = steps + 1;
            if (b > ell + 1) throw DomainError("Sp growth needs b <= ell+1");
            for (int r = 2; r <= m; ++r) iter *= sp_factor(n, ell, r) * sp_dim(g, ell + r, b) / sp_dim(g, ell + r - 1, b);
            closed = fact(2 * n - 1 + 2 * ell + m) / (fact(m) * fact(2 * n + 2 * ell)) * sp_dim(g, ell + m, b) /
                     sp_dim(g, ell + 1, b);
            break;
        }
        case Variant::F4: {
            int p = steps + 1;
            for (int j = ell + 2; j <= ell + p; ++j) iter *= f4_ratio(ell, j);
            closed = 6 * fact(7 + 2 * ell + p) / (fact(8 + 2 * ell) * fact(2 + p));
            break;
        }
        default: throw Unsupported("growth products exist for SU, Sp and F4 only");
    }
    return {iter, closed};
}

int growth_order_estimate(const GroupFamily& g, int ell, int max_steps) {
    if (max_steps < 64) throw DomainError("growth_order_estimate needs max_steps >= 64");
    growth_spec(g, ell);
    int n = g.n();
    std::vector<double> xs, ys;
    double logp = 0;
    for (int step = 1; step <= max_steps; ++step) {
        int m = step + 1;
        switch (g.variant()) {
            case Variant::SU: logp += std::log(to_double(su_ratio(n, ell, 0, m))); break;
            case Variant::Sp: logp += std::log(to_double(sp_factor(n, ell, m))); break;
            default: logp += std::log(to_double(f4_ratio(ell, ell + m))); break;
        }
        if (2 * step >= max_steps) {
            xs.push_back(std::log(double(m)));
            ys.push_back(logp);
        }
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
    mx /= xs.size();
    my /= ys.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return static_cast<int>(std::lround(sxy / sxx));
}

}  // namespace rankone
