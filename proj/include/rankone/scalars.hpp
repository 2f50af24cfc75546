#pragma once

#include "rankone/groups.hpp"
#include "rankone/ktypes.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rankone {

struct ScalarPair {
    Rational lam;
    Rational nu;
};

/// nu(V,Y) from the direction table; throws DomainError when V, Y are not omega-related.
Rational nu_scalar(const GroupFamily& g, const KTypeLabel& V, const KTypeLabel& Y);
ScalarPair scalar_pair(const GroupFamily& g, const KTypeLabel& V, const KTypeLabel& Y);

/// (mu+rho)(H) lambda(V,Y) + nu(V,Y).
Rational t_scalar(const GroupFamily& g, const KTypeLabel& V, const KTypeLabel& Y, const SpectralParam& mu);
/// The unique mu(H) where t_scalar vanishes.
Rational t_root(const GroupFamily& g, const KTypeLabel& V, const KTypeLabel& Y);
/// The same root written independently as the proof table lists it.
Rational proof_table_root(const GroupFamily& g, const KTypeLabel& V, const KTypeLabel& Y);

struct VanishingReport {
    int rows = 0;
    std::vector<std::string> failures;
    bool ok() const { return rows > 0 && failures.empty(); }
};

VanishingReport vanishing_table_details(const GroupFamily& g, int bound);
bool vanishing_table_check(const GroupFamily& g, int bound);

struct GrowthSpec {
    GroupFamily family;
    int ell;
    /// Stated exponent: 2n+l (SU), 2n-1+2l (Sp), 7+2l-2 (F4).
    int order;
};

GrowthSpec growth_spec(const GroupFamily& g, int ell);

/// (iterated product over `steps` ratios, closed form). fixed_coord is q for SU
/// and b for Sp, ignored for F4. Throws DomainError on invalid ranges.
std::pair<Rational, Rational> growth_product(const GroupFamily& g, int ell, int steps, int fixed_coord = 0);

/// Rounded log-log slope over the top half of 1..max_steps.
int growth_order_estimate(const GroupFamily& g, int ell, int max_steps = 1024);

}  // namespace rankone
