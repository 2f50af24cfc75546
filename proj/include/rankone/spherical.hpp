#pragma once

#include "rankone/hypergeom.hpp"
#include "rankone/ktypes.hpp"

#include <string>
#include <vector>

namespace rankone {

/// cos(theta)^cos_pow * p(tan(theta)^2).
struct CosPoly {
    int cos_pow = 0;
    Poly p = Poly::constant(1);
};

/// cos^d(theta) * F(a,b;c;-tan^2 theta).
CosPoly cos_times_f21(int d, const F21Poly& f);

enum class Azimuthal { None, Exponential, Chebyshev, Gegenbauer };

struct PhiSpec {
    GroupFamily family;
    KTypeLabel label;
    F21Poly radial;
    int radial_cos_power;
    Azimuthal azimuthal;
    int azimuthal_index;   // p-q (exponential), q (Chebyshev), l (Gegenbauer)
    F21Poly azimuthal_f21;  // Gegenbauer factor only
    Rational normalization;  // 1/(a-b+1) for Sp, 1 otherwise

    /// Value at the base point (all angles zero).
    Rational base_point_value() const;
    std::string description() const;
};

PhiSpec phi(const GroupFamily& g, const KTypeLabel& label);

/// Radial and azimuthal factors of phi_Y in CosPoly form.
CosPoly radial_factor(const PhiSpec& s);
/// Trivial for SO and SU (SU carries the exponential as a mode index).
CosPoly azimuthal_factor(const PhiSpec& s);

struct RecurrenceRow {
    KTypeLabel source;
    std::vector<std::pair<KTypeLabel, Rational>> terms;
};

RecurrenceRow omega_h_expand(const GroupFamily& g, const KTypeLabel& label);
Rational lambda_scalar(const GroupFamily& g, const KTypeLabel& V, const KTypeLabel& Y);

/// Radial building blocks.
CosPoly su_h(int n, int p, int q);
CosPoly sp_h(int n, int a, int b);
CosPoly f4_h(int m, int l);
CosPoly f4_chi(int l);
/// sin((q+1)t)/sin t as cos^q t times a polynomial in tan^2 t; zero for q < 0.
CosPoly chebyshev_chi(int q);
/// sin((q+1)t)/sin t as a polynomial in cos t.
Poly chebyshev_chi_in_cos(int q);

/// coef * e^{i mode phi} * A(first angle) * B(second angle).
struct IdentityTerm {
    Rational coef;
    int mode = 0;
    CosPoly A;
    CosPoly B;
};

/// True iff the terms sum to zero identically.
bool identity_holds(const std::vector<IdentityTerm>& terms);

struct OmegaIdentityReport {
    bool lemma = false;
    std::vector<std::pair<std::string, bool>> ingredients;
    bool all() const;
};

OmegaIdentityReport omega_identity_details(const GroupFamily& g, const KTypeLabel& label);
bool verify_omega_identity(const GroupFamily& g, const KTypeLabel& label);

}  // namespace rankone
