#pragma once

#include "rankone/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rankone {

enum class Variant { SO, SU, Sp, F4 };

/// One of SO(n,1), SU(n,1), Sp(n,1), F4. The constructor enforces n >= 2.
class GroupFamily {
public:
    GroupFamily(Variant v, int n);
    static GroupFamily so(int n) { return {Variant::SO, n}; }
    static GroupFamily su(int n) { return {Variant::SU, n}; }
    static GroupFamily sp(int n) { return {Variant::Sp, n}; }
    static GroupFamily f4() { return {Variant::F4, 0}; }
    /// Accepts "SO", "SU", "Sp" (case-insensitive) with n, or "F4".
    static GroupFamily parse(const std::string& variant, int n);

    Variant variant() const { return variant_; }
    /// 0 for F4.
    int n() const { return n_; }
    std::string name() const;
    /// SO(2,1) is covered by groups/ktypes only.
    bool is_so21() const { return variant_ == Variant::SO && n_ == 2; }

    friend bool operator==(const GroupFamily&, const GroupFamily&) = default;

private:
    Variant variant_;
    int n_;
};

struct StructuralData {
    int m_alpha;
    int m_2alpha;
    Rational rho_H;
    int dim_p;
    int sphere_dim;
};

/// mu = mu_H * alpha, alpha(H) = 1.
struct SpectralParam {
    Rational mu_H;
};

StructuralData structural_data(const GroupFamily& g);

/// The two Gamma arguments of the inverse e-function at mu.
std::pair<Rational, Rational> e_inverse_gamma_args(const GroupFamily& g, const SpectralParam& mu);

/// True iff some Gamma argument is a nonpositive integer.
bool is_exceptional(const GroupFamily& g, const SpectralParam& mu);

/// mu_ell(H) from the closed form, ell >= 0.
Rational exceptional_param(const GroupFamily& g, int ell);

/// First `count` exceptional parameters, decreasing.
std::vector<SpectralParam> exceptional_params(const GroupFamily& g, int count);

/// Exceptional mu(H) found by scanning the Gamma-pole predicate over the
/// half-integer grid in [lo, hi].
std::vector<Rational> exceptional_by_scan(const GroupFamily& g, const Rational& lo, const Rational& hi);

}  // namespace rankone
