#include "rankone/groups.hpp"

#include "rankone/errors.hpp"

#include <algorithm>
#include <cctype>

namespace rankone {

GroupFamily::GroupFamily(Variant v, int n) : variant_(v), n_(v == Variant::F4 ? 0 : n) {
    if (v != Variant::F4 && n < 2)
        throw DomainError("family parameter n must be >= 2, got " + std::to_string(n));
}

GroupFamily GroupFamily::parse(const std::string& variant, int n) {
    std::string s;
    for (char c : variant) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (s == "SO") return so(n);
    if (s == "SU") return su(n);
    if (s == "SP") return sp(n);
    if (s == "F4") return f4();
    throw DomainError("unknown family '" + variant + "'");
}

std::string GroupFamily::name() const {
    switch (variant_) {
        case Variant::SO: return "SO(" + std::to_string(n_) + ",1)";
        case Variant::SU: return "SU(" + std::to_string(n_) + ",1)";
        case Variant::Sp: return "Sp(" + std::to_string(n_) + ",1)";
        case Variant::F4: return "F4";
    }
    return {};
}

StructuralData structural_data(const GroupFamily& g) {
    int n = g.n();
    int ma = 0, m2a = 0;
    switch (g.variant()) {
        case Variant::SO: ma = n - 1; m2a = 0; break;
        case Variant::SU: ma = 2 * n - 2; m2a = 1; break;
        case Variant::Sp: ma = 4 * n - 4; m2a = 3; break;
        case Variant::F4: ma = 8; m2a = 7; break;
    }
    StructuralData d;
    d.m_alpha = ma;
    d.m_2alpha = m2a;
    d.rho_H = Rational(ma, 2) + m2a;
    d.dim_p = ma + m2a + 1;
    d.sphere_dim = d.dim_p - 1;
    return d;
}

std::pair<Rational, Rational> e_inverse_gamma_args(const GroupFamily& g, const SpectralParam& mu) {
    auto d = structural_data(g);
    Rational half_ma = Rational(d.m_alpha, 2);
    return {(half_ma + 1 + mu.mu_H) / 2, (half_ma + d.m_2alpha + mu.mu_H) / 2};
}

static bool gamma_pole(const Rational& x) { return is_integer(x) && x <= 0; }

bool is_exceptional(const GroupFamily& g, const SpectralParam& mu) {
    auto [a, b] = e_inverse_gamma_args(g, mu);
    return gamma_pole(a) || gamma_pole(b);
}

Rational exceptional_param(const GroupFamily& g, int ell) {
    if (ell < 0) throw DomainError("ell must be >= 0");
    Rational rho = structural_data(g).rho_H;
    switch (g.variant()) {
        case Variant::SO: return -rho - ell;
        case Variant::SU: return -rho - 2 * ell;
        case Variant::Sp: return -rho - (2 * ell - 2);
        case Variant::F4: return -rho - (2 * ell - 6);
    }
    return {};
}

std::vector<SpectralParam> exceptional_params(const GroupFamily& g, int count) {
    if (count < 1) throw DomainError("count must be positive");
    std::vector<SpectralParam> out;
    for (int l = 0; l < count; ++l) out.push_back({exceptional_param(g, l)});
    return out;
}

std::vector<Rational> exceptional_by_scan(const GroupFamily& g, const Rational& lo, const Rational& hi) {
    // Poles need 2*arg in Z, i.e. mu_H in (1/2)Z; scan that grid from hi downwards.
    std::vector<Rational> out;
    Integer start = numerator(hi * 2) / denominator(hi * 2);
    if (Rational(start) > hi * 2) start -= 1;
    for (Rational x = Rational(start, 2); x >= lo; x -= Rational(1, 2))
        if (is_exceptional(g, {x})) out.push_back(x);
    return out;
}

}  // namespace rankone
