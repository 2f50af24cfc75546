#include "rankone/spherical.hpp"

#include "rankone/errors.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace rankone {

CosPoly cos_times_f21(int d, const F21Poly& f) { return {d, Poly(f.coeffs()).reflect()}; }

namespace {

void require_supported(const GroupFamily& g) {
    if (g.is_so21()) throw Unsupported("spherical recurrences are not provided for SO(2,1)");
}

const CosPoly one{};

CosPoly times_cos(CosPoly c) {
    c.cos_pow += 1;
    return c;
}

}  // namespace

Rational PhiSpec::base_point_value() const {
    Rational az = 1;
    if (azimuthal == Azimuthal::Chebyshev) az = azimuthal_index + 1;
    if (azimuthal == Azimuthal::Gegenbauer) az = eval(azimuthal_f21, 0);
    return normalization * az * eval(radial, 0);
}

std::string PhiSpec::description() const {
    auto f = [](const F21Poly& p) {
        return "F(" + to_string(p.a) + "," + to_string(p.b) + ";" + to_string(p.c) + ";-tan^2)";
    };
    std::string r = "cos^" + std::to_string(radial_cos_power) + "(xi) " + f(radial);
    switch (azimuthal) {
        case Azimuthal::None: return r;
        case Azimuthal::Exponential: return "exp(i(" + std::to_string(azimuthal_index) + ")phi) " + r;
        case Azimuthal::Chebyshev:
            return to_string(normalization) + " sin(" + std::to_string(azimuthal_index + 1) + "t)/sin(t) " + r;
        case Azimuthal::Gegenbauer:
            return "cos^" + std::to_string(azimuthal_index) + "(phi) " + f(azimuthal_f21) + " " + r;
    }
    return r;
}

PhiSpec phi(const GroupFamily& g, const KTypeLabel& l) {
    require_supported(g);
    int n = g.n();
    switch (g.variant()) {
        case Variant::SO: {
            int k = l[0];
            return {g, l, f21(Rational(-k, 2), Rational(1 - k, 2), Rational(n - 1, 2)), k, Azimuthal::None, 0, {}, 1};
        }
        case Variant::SU: {
            int p = l[0], q = l[1];
            return {g, l, f21(-p, -q, n - 1), p + q, Azimuthal::Exponential, p - q, {}, 1};
        }
        case Variant::Sp: {
            int a = l[0], b = l[1];
            return {g, l, f21(-b, -(a + 1), 2 * (n - 1)), a + b, Azimuthal::Chebyshev, a - b, {}, Rational(1, a - b + 1)};
        }
        case Variant::F4: {
            int m = l[0], k = l[1];
            return {g, l, f21(Rational(k - m, 2), Rational(-m - k - 6, 2), 4), m, Azimuthal::Gegenbauer, k,
                    f21(Rational(-k, 2), Rational(1 - k, 2), Rational(7, 2)), 1};
        }
    }
    throw Unsupported("unknown family");
}

CosPoly radial_factor(const PhiSpec& s) { return cos_times_f21(s.radial_cos_power, s.radial); }

CosPoly azimuthal_factor(const PhiSpec& s) {
    switch (s.azimuthal) {
        case Azimuthal::Chebyshev: return chebyshev_chi(s.azimuthal_index);
        case Azimuthal::Gegenbauer: return cos_times_f21(s.azimuthal_index, s.azimuthal_f21);
        default: return one;
    }
}

CosPoly su_h(int n, int p, int q) { return cos_times_f21(p + q, f21(-p, -q, n - 1)); }
CosPoly sp_h(int n, int a, int b) { return cos_times_f21(a + b, f21(-b, -(a + 1), 2 * (n - 1))); }
CosPoly f4_h(int m, int l) { return cos_times_f21(m, f21(Rational(l - m, 2), Rational(-m - l - 6, 2), 4)); }
CosPoly f4_chi(int l) { return cos_times_f21(l, f21(Rational(-l, 2), Rational(1 - l, 2), Rational(7, 2))); }

CosPoly chebyshev_chi(int q) {
    if (q < 0) return {0, Poly{}};
    Poly p;
    for (int j = 0; 2 * j <= q; ++j) {
        Rational c = Rational(binomial(q - j, j)) * Rational(Integer(1) << (q - 2 * j));
        if (j % 2) c = -c;
        p = p + c * Poly::one_plus_x_pow(j);
    }
    return {q, p};
}

Poly chebyshev_chi_in_cos(int q) {
    if (q < 0) return {};
    std::vector<Rational> c(q + 1);
    for (int j = 0; 2 * j <= q; ++j) {
        Rational v = Rational(binomial(q - j, j)) * Rational(Integer(1) << (q - 2 * j));
        c[q - 2 * j] = j % 2 ? -v : v;
    }
    return Poly(std::move(c));
}

bool identity_holds(const std::vector<IdentityTerm>& terms) {
    using Key = std::tuple<int, int, int>;
    auto parity = [](int d) { return ((d % 2) + 2) % 2; };
    std::map<Key, std::vector<const IdentityTerm*>> groups;
    for (auto& t : terms)
        if (t.coef != 0 && !t.A.p.is_zero() && !t.B.p.is_zero())
            groups[{t.mode, parity(t.A.cos_pow), parity(t.B.cos_pow)}].push_back(&t);
    for (auto& [key, group] : groups) {
        int DA = group.front()->A.cos_pow, DB = group.front()->B.cos_pow;
        for (auto* t : group) {
            DA = std::max(DA, t->A.cos_pow);
            DB = std::max(DB, t->B.cos_pow);
        }
        std::map<std::pair<int, int>, Rational> acc;
        for (auto* t : group) {
            Poly pa = Poly::one_plus_x_pow((DA - t->A.cos_pow) / 2) * t->A.p;
            Poly pb = Poly::one_plus_x_pow((DB - t->B.cos_pow) / 2) * t->B.p;
            for (std::size_t i = 0; i < pa.coeffs.size(); ++i)
                for (std::size_t j = 0; j < pb.coeffs.size(); ++j)
                    acc[{int(i), int(j)}] += t->coef * pa.coeffs[i] * pb.coeffs[j];
        }
        for (auto& [ij, c] : acc)
            if (c != 0) return false;
    }
    return true;
}

namespace {

// Raw coefficients, invalid targets still present.
std::vector<std::pair<std::vector<int>, Rational>> raw_row(const GroupFamily& g, const KTypeLabel& l) {
    int n = g.n();
    switch (g.variant()) {
        case Variant::SO: {
            int k = l[0];
            Rational d = n + 2 * k - 2;
            return {{{k - 1}, k / d}, {{k + 1}, (n + k - 2) / d}};
        }
        case Variant::SU: {
            int p = l[0], q = l[1];
            Rational d = 2 * (p + q + n - 1);
            return {{{p + 1, q}, (p + n - 1) / d}, {{p, q - 1}, q / d}, {{p, q + 1}, (q + n - 1) / d}, {{p - 1, q}, p / d}};
        }
        case Variant::Sp: {
            int a = l[0], b = l[1];
            Rational d = 2 * (a - b + 1) * (2 * n - 1 + a + b);
            return {{{a + 1, b}, (a - b + 2) * (2 * n - 1 + a) / d},
                    {{a, b - 1}, b * (a - b + 2) / d},
                    {{a, b + 1}, (a - b) * (2 * n - 2 + b) / d},
                    {{a - 1, b}, (a - b) * (a + 1) / d}};
        }
        case Variant::F4: {
            int m = l[0], k = l[1];
            Rational d = (6 + 2 * k) * (14 + 2 * m);
            return {{{m + 1, k + 1}, (6 + k) * (14 + m + k) / d},
                    {{m - 1, k + 1}, (6 + k) * (m - k) / d},
                    {{m + 1, k - 1}, k * (8 + m - k) / d},
                    {{m - 1, k - 1}, k * (m + k + 6) / d}};
        }
    }
    return {};
}

}  // namespace

RecurrenceRow omega_h_expand(const GroupFamily& g, const KTypeLabel& l) {
    require_supported(g);
    RecurrenceRow row{l, {}};
    for (auto& [c, v] : raw_row(g, l)) {
        auto t = KTypeLabel::make(g, c);
        if (t) {
            row.terms.emplace_back(*t, v);
        } else if (v != 0) {
            throw CheckFailure("nonzero coefficient on an invalid label from " + l.name());
        }
    }
    return row;
}

Rational lambda_scalar(const GroupFamily& g, const KTypeLabel& V, const KTypeLabel& Y) {
    for (auto& [t, c] : omega_h_expand(g, V).terms)
        if (t == Y) return c;
    return 0;
}

bool OmegaIdentityReport::all() const {
    return lemma && std::all_of(ingredients.begin(), ingredients.end(), [](auto& p) { return p.second; });
}

namespace {

// cos * h == c1 * h1 + c2 * h2, dropping terms whose coefficient vanishes.
bool three_term(const CosPoly& h, const Rational& c1, const CosPoly& h1, const Rational& c2, const CosPoly& h2) {
    std::vector<IdentityTerm> t{{1, 0, one, times_cos(h)}};
    if (c1 != 0) t.push_back({-c1, 0, one, h1});
    if (c2 != 0) t.push_back({-c2, 0, one, h2});
    return identity_holds(t);
}

bool chebyshev_three_term(int q) {
    Poly c2({Rational(0), Rational(2)});
    return c2 * chebyshev_chi_in_cos(q) == chebyshev_chi_in_cos(q + 1) + chebyshev_chi_in_cos(q - 1);
}

}  // namespace

OmegaIdentityReport omega_identity_details(const GroupFamily& g, const KTypeLabel& l) {
    require_supported(g);
    OmegaIdentityReport rep;
    int n = g.n();
    PhiSpec s = phi(g, l);
    CosPoly A = azimuthal_factor(s), B = radial_factor(s);

    // Left side: omega(H) phi_V.
    std::vector<IdentityTerm> terms;
    switch (g.variant()) {
        case Variant::SO: terms.push_back({1, 0, one, times_cos(B)}); break;
        case Variant::SU:
            terms.push_back({Rational(1, 2), s.azimuthal_index + 1, one, times_cos(B)});
            terms.push_back({Rational(1, 2), s.azimuthal_index - 1, one, times_cos(B)});
            break;
        case Variant::Sp:
        case Variant::F4: terms.push_back({s.normalization, 0, times_cos(A), times_cos(B)}); break;
    }
    for (auto& [t, c] : omega_h_expand(g, l).terms) {
        PhiSpec st = phi(g, t);
        int mode = g.variant() == Variant::SU ? st.azimuthal_index : 0;
        terms.push_back({-c * st.normalization, mode, azimuthal_factor(st), radial_factor(st)});
    }
    rep.lemma = identity_holds(terms);

    switch (g.variant()) {
        case Variant::SO: break;
        case Variant::SU: {
            int p = l[0], q = l[1];
            Rational d = p + q + n - 1;
            auto h = [&](int a, int b) { return a < 0 || b < 0 ? CosPoly{0, Poly{}} : su_h(n, a, b); };
            rep.ingredients.push_back({"cos*h raising p", three_term(su_h(n, p, q), (p + n - 1) / d, h(p + 1, q), q / d, h(p, q - 1))});
            rep.ingredients.push_back({"cos*h raising q", three_term(su_h(n, p, q), (q + n - 1) / d, h(p, q + 1), p / d, h(p - 1, q))});
            break;
        }
        case Variant::Sp: {
            int a = l[0], b = l[1];
            Rational d = 2 * n + a + b - 1;
            auto h = [&](int x, int y) { return x < -1 || y < 0 ? CosPoly{0, Poly{}} : sp_h(n, x, y); };
            rep.ingredients.push_back({"cos*h toward (a,b+1),(a-1,b)", three_term(sp_h(n, a, b), (2 * n - 2 + b) / d, h(a, b + 1), (a + 1) / d, h(a - 1, b))});
            rep.ingredients.push_back({"cos*h toward (a+1,b),(a,b-1)", three_term(sp_h(n, a, b), (2 * n - 1 + a) / d, h(a + 1, b), b / d, h(a, b - 1))});
            rep.ingredients.push_back({"chebyshev three-term", chebyshev_three_term(a - b)});
            break;
        }
        case Variant::F4: {
            int m = l[0], k = l[1];
            Rational dc = 6 + 2 * k, dh = 14 + 2 * m;
            auto chi = [&](int j) { return j < 0 ? CosPoly{0, Poly{}} : f4_chi(j); };
            rep.ingredients.push_back({"cos*chi", three_term(f4_chi(k), (6 + k) / dc, chi(k + 1), k / dc, chi(k - 1))});
            if (k >= 1)
                rep.ingredients.push_back({"cos*h toward l-1", three_term(f4_h(m, k), (8 + m - k) / dh, f4_h(m + 1, k - 1), (m + k + 6) / dh, f4_h(m - 1, k - 1))});
            rep.ingredients.push_back({"cos*h toward l+1", three_term(f4_h(m, k), (14 + m + k) / dh, f4_h(m + 1, k + 1), (m - k) / dh, f4_h(m - 1, k + 1))});
            break;
        }
    }
    return rep;
}

bool verify_omega_identity(const GroupFamily& g, const KTypeLabel& l) { return omega_identity_details(g, l).all(); }

}  // namespace rankone
