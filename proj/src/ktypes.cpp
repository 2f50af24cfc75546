#include "rankone/ktypes.hpp"

#include "rankone/errors.hpp"

#include <algorithm>
#include <sstream>

namespace rankone {

bool valid_label_coords(const GroupFamily& g, const std::vector<int>& c) {
    if (c.size() != (g.variant() == Variant::SO ? 1u : 2u)) return false;
    switch (g.variant()) {
        case Variant::SO: return g.is_so21() || c[0] >= 0;
        case Variant::SU: return c[0] >= 0 && c[1] >= 0;
        case Variant::Sp: return c[0] >= c[1] && c[1] >= 0;
        case Variant::F4: return c[0] >= c[1] && c[1] >= 0 && (c[0] - c[1]) % 2 == 0;
    }
    return false;
}

KTypeLabel::KTypeLabel(const GroupFamily& g, std::vector<int> coords) : family_(g), coords_(std::move(coords)) {
    if (!valid_label_coords(g, coords_)) throw DomainError("invalid K-type label " + name() + " for " + g.name());
}

std::optional<KTypeLabel> KTypeLabel::make(const GroupFamily& g, std::vector<int> coords) {
    if (!valid_label_coords(g, coords)) return std::nullopt;
    return KTypeLabel(g, std::move(coords));
}

std::string KTypeLabel::name() const {
    std::string s = (family_.variant() == Variant::SO || family_.variant() == Variant::SU) ? "Y" : "V";
    for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? "," : "") + std::to_string(coords_[i]);
    return s;
}

KTypeLabel KTypeLabel::parse(const GroupFamily& g, const std::string& text) {
    std::string t = text;
    if (!t.empty() && (t[0] == 'Y' || t[0] == 'V' || t[0] == 'y' || t[0] == 'v')) t = t.substr(1);
    std::vector<int> c;
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            c.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw DomainError("cannot parse K-type label '" + text + "'");
        }
    }
    return KTypeLabel(g, std::move(c));
}

std::vector<KTypeLabel> labels_up_to(const GroupFamily& g, int bound) {
    std::vector<KTypeLabel> out;
    if (g.variant() == Variant::SO) {
        for (int k = g.is_so21() ? -bound : 0; k <= bound; ++k) out.emplace_back(g, std::vector<int>{k});
        return out;
    }
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; b <= bound; ++b)
            if (auto l = KTypeLabel::make(g, {a, b})) out.push_back(*l);
    return out;
}

Weight to_weight(const IWeight& w) {
    Weight r;
    for (auto x : w) r.emplace_back(x, 2);
    return r;
}

IWeight to_iweight(const Weight& w) {
    IWeight r;
    for (auto& x : w) {
        Rational d = x * 2;
        if (!is_integer(d)) throw DomainError("weight coordinate is not a half-integer: " + to_string(x));
        r.push_back(to_int64(d));
    }
    return r;
}

IWeight highest_iweight(const KTypeLabel& l) {
    const auto& g = l.family();
    CompactSystem cs(g);
    IWeight w(cs.dim(), 0);
    int n = g.n();
    switch (g.variant()) {
        case Variant::SO: w[0] = 2 * l[0]; break;
        case Variant::SU:
            w[0] += 2 * l[1];
            w[n - 1] += -2 * l[0];
            w[n] = 2 * (l[0] - l[1]);
            break;
        case Variant::Sp:
            w[0] = 2 * l[0];
            w[1] = 2 * l[1];
            w[n] = 2 * (l[0] - l[1]);
            break;
        case Variant::F4:
            w = {l[0], l[1], l[1], l[1]};
            break;
    }
    return w;
}

Weight highest_weight(const KTypeLabel& l) { return to_weight(highest_iweight(l)); }

std::optional<KTypeLabel> spherical_label_of(const GroupFamily& g, const IWeight& w) {
    auto zero_between = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            if (w[i] != 0) return false;
        return true;
    };
    auto even = [&](std::int64_t x) { return x % 2 == 0; };
    std::optional<KTypeLabel> l;
    int n = g.n();
    switch (g.variant()) {
        case Variant::SO:
            if (even(w[0]) && zero_between(1, w.size())) l = KTypeLabel::make(g, {int(w[0] / 2)});
            break;
        case Variant::SU:
            if (n == 2) {
                if (even(w[0]) && even(w[1])) l = KTypeLabel::make(g, {int(-w[1] / 2), int(w[0] / 2)});
            } else if (even(w[0]) && even(w[n - 1]) && zero_between(1, n - 1)) {
                l = KTypeLabel::make(g, {int(-w[n - 1] / 2), int(w[0] / 2)});
            }
            break;
        case Variant::Sp:
            if (even(w[0]) && even(w[1]) && zero_between(2, n)) l = KTypeLabel::make(g, {int(w[0] / 2), int(w[1] / 2)});
            break;
        case Variant::F4:
            if (w[1] == w[2] && w[2] == w[3]) l = KTypeLabel::make(g, {int(w[0]), int(w[1])});
            break;
    }
    if (l && highest_iweight(*l) == w) return l;
    return std::nullopt;
}

Weight rho_c(const GroupFamily& g) { return to_weight(CompactSystem(g).rho2()); }

Integer weyl_dim(const GroupFamily& g, const IWeight& lambda) {
    CompactSystem cs(g);
    if (static_cast<int>(lambda.size()) != cs.dim()) throw DomainError("weight has wrong length");
    if (!cs.is_dominant(lambda)) throw DomainError("weight is not dominant");
    Rational r = 1;
    IWeight lr = lambda;
    for (std::size_t i = 0; i < lr.size(); ++i) lr[i] += cs.rho2()[i];
    for (auto& a : cs.positive_roots()) r *= Rational(dot(lr, a), dot(cs.rho2(), a));
    if (!is_integer(r)) throw CheckFailure("Weyl dimension is not an integer");
    return numerator(r);
}

Integer weyl_dim(const GroupFamily& g, const Weight& lambda) { return weyl_dim(g, to_iweight(lambda)); }
Integer weyl_dim(const KTypeLabel& l) { return weyl_dim(l.family(), highest_iweight(l)); }

Integer closed_form_dim(const KTypeLabel& l) {
    const auto& g = l.family();
    int n = g.n();
    Rational r;
    switch (g.variant()) {
        case Variant::SO: {
            int k = l[0];
            if (n == 2) return 1;
            if (n == 3) return 2 * k + 1;
            r = Rational(binomial(n + k - 3, k)) * Rational(n + 2 * k - 2, n - 2);
            break;
        }
        case Variant::SU: {
            int p = l[0], q = l[1];
            r = Rational(binomial(q + n - 2, n - 2) * binomial(p + n - 2, n - 2)) * Rational(n + p + q - 1, n - 1);
            break;
        }
        case Variant::Sp:
            r = sp_dim_W(n, l[0], l[1], l[0] - l[1]);
            break;
        case Variant::F4:
            r = f4_dim_W({Rational(l[0], 2), Rational(l[1], 2), Rational(l[1], 2), Rational(l[1], 2)});
            break;
    }
    if (!is_integer(r)) throw CheckFailure("closed-form dimension is not an integer");
    return numerator(r);
}

Rational su_dim_lowered(int n, int p, int q) {
    // weight q e1 - e_{n-1} - p e_n + (p-q+1) e_{n+1}
    return Rational(binomial(q + n - 1, q) * binomial(p + n - 2, p)) *
           Rational((n + p + q - 1) * p * (n - 2), (n + q - 2) * (p + 1));
}

Rational sp_dim_W(int n, const Rational& x1, const Rational& x2, const Rational& x3) {
    auto bin = [](const Rational& top, int k) { return Rational(binomial(to_int64(top), k)); };
    return (x1 + x2 + 2 * n - 1) / ((2 * n - 1) * (2 * n - 2)) * (x1 - x2 + 1) * (x3 + 1) *
           bin(x1 + 2 * n - 2, 2 * n - 3) * bin(x2 + 2 * n - 3, 2 * n - 3);
}

Rational sp_dim_W1(int n, const Rational& x1, const Rational& x2, const Rational& x3) {
    auto bin = [](const Rational& top, int k) { return Rational(binomial(to_int64(top), k)); };
    return bin(x1 + 2 * n - 1, 2 * n - 3) * bin(x2 + 2 * n - 2, 2 * n - 1) * (x1 + x2 + 2 * n - 1) * (2 * n - 4) *
           (x1 - x2 + 1) / (2 * (x1 + 2 * n - 2) * (x2 + 2 * n - 3)) * (x1 + 1) * (x3 + 1) / (x2 + 1);
}

Rational f4_dim_W(const std::vector<Rational>& a) {
    Rational r = Rational(1) / Rational(factorial(6) * factorial(4) * 2 * 7 * 5 * 3);
    for (int i = 1; i <= 4; ++i) {
        for (int j = i + 1; j <= 4; ++j)
            r *= (a[i - 1] + a[j - 1] + 9 - i - j) * (a[i - 1] - a[j - 1] + j - i);
        r *= 9 + 2 * (a[i - 1] - i);
    }
    return r;
}

Rational mintype_norm(const GroupFamily& g, const Weight& lambda, const Rational& scale) {
    auto rc = rho_c(g);
    if (lambda.size() != rc.size()) throw DomainError("weight has wrong length");
    Rational s = 0;
    for (std::size_t i = 0; i < rc.size(); ++i) {
        Rational x = lambda[i] + 2 * rc[i];
        s += x * x;
    }
    return scale * s;
}

bool socle_contains(const GroupFamily& g, int ell, const KTypeLabel& l) {
    if (ell < 0) throw DomainError("ell must be >= 0");
    if (!(l.family() == g)) throw DomainError("label belongs to a different family");
    switch (g.variant()) {
        case Variant::SO: return (g.is_so21() ? std::abs(l[0]) : l[0]) >= ell + 1;
        case Variant::SU: return l[0] >= ell + 1 && l[1] >= ell + 1;
        case Variant::Sp: return l[0] >= l[1] && l[1] >= ell + 1;
        case Variant::F4: return l[0] - l[1] >= 2 * ell + 2 && (l[0] - l[1]) % 2 == 0;
    }
    return false;
}

std::vector<KTypeLabel> minimal_ktype(const GroupFamily& g, int ell, int search_bound, const Rational& scale) {
    if (search_bound <= 0) search_bound = 4 * (ell + 2);
    if (scale <= 0) throw DomainError("scale must be positive");
    std::optional<Rational> best;
    std::vector<KTypeLabel> arg;
    for (auto& l : labels_up_to(g, search_bound)) {
        if (!socle_contains(g, ell, l)) continue;
        Rational v = mintype_norm(g, highest_weight(l), scale);
        if (!best || v < *best) {
            best = v;
            arg = {l};
        } else if (v == *best) {
            arg.push_back(l);
        }
    }
    if (!best) throw CheckFailure("search box contains no socle label; increase search_bound");
    // Outside the box some coordinate exceeds the bound. For dominant lambda,
    // <lambda, rho_c> >= 0, so |lambda+2rho_c|^2 >= |lambda|^2 + |2rho_c|^2, and
    // |lambda|^2 >= c (bound+1)^2 with c = 1/4 for F4 (m/2 e1 part), 1 otherwise.
    Rational rho_sq = mintype_norm(g, Weight(rho_c(g).size(), Rational(0)), 1);
    Rational c = g.variant() == Variant::F4 ? Rational(1, 4) : Rational(1);
    Rational outside = scale * (c * (search_bound + 1) * (search_bound + 1) + rho_sq);
    if (!(outside > *best)) throw CheckFailure("inconclusive truncation; increase search_bound");
    return arg;
}

std::vector<KTypeLabel> minimal_ktype_closed_form(const GroupFamily& g, int ell) {
    switch (g.variant()) {
        case Variant::SO:
            if (g.is_so21()) return {KTypeLabel(g, {-(ell + 1)}), KTypeLabel(g, {ell + 1})};
            return {KTypeLabel(g, {ell + 1})};
        case Variant::SU: return {KTypeLabel(g, {ell + 1, ell + 1})};
        case Variant::Sp: return {KTypeLabel(g, {ell + 1, ell + 1})};
        case Variant::F4: return {KTypeLabel(g, {2 * ell + 2, 0})};
    }
    return {};
}

LanglandsRecord langlands(const GroupFamily& g, int ell) {
    if (ell < 0) throw DomainError("ell must be >= 0");
    LanglandsRecord r{};
    int n = g.n();
    bool compact_cartan = g.variant() == Variant::F4 || n == 2;
    if (compact_cartan) {
        r.S = 'G';
        r.tempered = true;
        Rational mu = exceptional_param(g, ell);
        r.discrete_series = mu <= -structural_data(g).rho_H;
        r.limit_of_discrete_series = !r.discrete_series;
        r.omega_validated = false;
        return r;
    }
    r.S = 'P';
    r.tempered = false;
    std::string k = std::to_string(ell + 1);
    switch (g.variant()) {
        case Variant::SO:
            r.omega_weight = k + "e1";
            r.omega_validated = true;
            r.nu_H = Rational(2 * n - 3, 2);
            break;
        case Variant::SU:
            r.omega_weight = k + "(epsbb_2-epsbb_" + std::to_string(n) + ")";
            r.omega_validated = false;
            r.nu_H = Rational(n - 2);
            break;
        case Variant::Sp:
            r.omega_weight = k + "(epsb_2+epsb_3)";
            r.omega_validated = false;
            r.nu_H = Rational(2 * n - 3);
            break;
        case Variant::F4: break;
    }
    return r;
}

bool langlands_invariants_hold(const LanglandsRecord& r) {
    if ((r.S == 'G') != r.tempered) return false;
    if (r.discrete_series && !r.tempered) return false;
    if (r.discrete_series && r.limit_of_discrete_series) return false;
    if (r.S == 'G' && (r.discrete_series == r.limit_of_discrete_series)) return false;
    if (r.S == 'P' && (!r.nu_H || !r.omega_weight)) return false;
    return true;
}

Rational casimir_scalar(const GroupFamily& g, const SpectralParam& mu) {
    Rational rho = structural_data(g).rho_H;
    return mu.mu_H * mu.mu_H - rho * rho;
}

}  // namespace rankone
