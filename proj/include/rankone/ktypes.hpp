#pragma once

#include "rankone/groups.hpp"
#include "rankone/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rankone {

using Weight = std::vector<Rational>;

/// M-spherical K-type label. SO: (k); SU: (p,q); Sp: (a,b); F4: (m,k).
/// SO(2,1) allows a signed k.
class KTypeLabel {
public:
    KTypeLabel(const GroupFamily& g, std::vector<int> coords);

    const GroupFamily& family() const { return family_; }
    const std::vector<int>& coords() const { return coords_; }
    int operator[](std::size_t i) const { return coords_[i]; }
    /// "Y3", "Y1,2", "V2,1", "V4,0".
    std::string name() const;
    /// Parses "Y3", "Y1,2", "V2,1", "3", "1,2".
    static KTypeLabel parse(const GroupFamily& g, const std::string& text);
    /// nullopt when coords violate the family's constraints.
    static std::optional<KTypeLabel> make(const GroupFamily& g, std::vector<int> coords);

    friend bool operator==(const KTypeLabel& a, const KTypeLabel& b) {
        return a.family_ == b.family_ && a.coords_ == b.coords_;
    }
    friend bool operator<(const KTypeLabel& a, const KTypeLabel& b) { return a.coords_ < b.coords_; }

private:
    GroupFamily family_;
    std::vector<int> coords_;
};

bool valid_label_coords(const GroupFamily& g, const std::vector<int>& coords);

/// All labels whose coordinates lie in [0, bound].
std::vector<KTypeLabel> labels_up_to(const GroupFamily& g, int bound);

Weight to_weight(const IWeight& w);
IWeight to_iweight(const Weight& w);

Weight highest_weight(const KTypeLabel& label);
IWeight highest_iweight(const KTypeLabel& label);
/// Inverse of highest_weight on the family's M-spherical lattice.
std::optional<KTypeLabel> spherical_label_of(const GroupFamily& g, const IWeight& w);

Weight rho_c(const GroupFamily& g);

/// Weyl dimension formula; throws DomainError on a non-dominant weight.
Integer weyl_dim(const GroupFamily& g, const Weight& lambda);
Integer weyl_dim(const GroupFamily& g, const IWeight& lambda);
Integer weyl_dim(const KTypeLabel& label);

/// Dimension from the family-specific closed forms (independent of weyl_dim).
Integer closed_form_dim(const KTypeLabel& label);

/// Dimension formulas for non-spherical weights used in the tensor checks.
/// SU: weight q e1 - e_{n-1} - p e_n + (p-q+1) e_{n+1}.
Rational su_dim_lowered(int n, int p, int q);
/// Sp: weight x1 e1 + x2 e2 + x3 e_{n+1}.
Rational sp_dim_W(int n, const Rational& x1, const Rational& x2, const Rational& x3);
/// Sp: weight x1 e1 + x2 e2 + e3 + x3 e_{n+1} (n >= 3).
Rational sp_dim_W1(int n, const Rational& x1, const Rational& x2, const Rational& x3);
/// Spin(9): weight a1 e1 + ... + a4 e4.
Rational f4_dim_W(const std::vector<Rational>& a);

/// |lambda + 2 rho_c|^2 scaled by `scale`.
Rational mintype_norm(const GroupFamily& g, const Weight& lambda, const Rational& scale = 1);

bool socle_contains(const GroupFamily& g, int ell, const KTypeLabel& label);

/// Argmin of mintype_norm over socle labels within the search box. Throws
/// CheckFailure when the boundary of the box does not dominate the interior
/// minimum. Default bound: 4(ell+2).
std::vector<KTypeLabel> minimal_ktype(const GroupFamily& g, int ell, int search_bound = 0,
                                      const Rational& scale = 1);

/// Closed-form minimal K-types of the socle.
std::vector<KTypeLabel> minimal_ktype_closed_form(const GroupFamily& g, int ell);

struct LanglandsRecord {
    char S;  // 'G' or 'P'
    std::optional<std::string> omega_weight;
    bool omega_validated;
    std::optional<Rational> nu_H;
    bool tempered;
    bool discrete_series;
    bool limit_of_discrete_series;
};

LanglandsRecord langlands(const GroupFamily& g, int ell);
bool langlands_invariants_hold(const LanglandsRecord& r);

/// mu(H)^2 - rho(H)^2.
Rational casimir_scalar(const GroupFamily& g, const SpectralParam& mu);

}  // namespace rankone
