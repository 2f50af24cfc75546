#pragma once

#include "rankone/groups.hpp"
#include "rankone/rational.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <vector>

namespace rankone::so {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// diag(1,...,1,-1) of size n+1.
Mat lorentz_J(int n);
/// H = E_{1,n+1} + E_{n+1,1}.
Mat boost_H(int n);
/// Nilpotent basis N_j (j = 1..n-1, 0-based spatial index), [H, N_j] = N_j.
Mat nilpotent(int n, int j);

/// g^T J g = J, det g = 1 and g_{n+1,n+1} >= 1, all within tol.
bool is_lorentz(const Mat& g, double tol = 1e-10);

/// exp(s H).
Mat a_element(int n, double s);
/// exp(sum_j v_j N_j); v has length n+1 with v[0] = v[n] = 0.
Mat n_element(int n, const std::vector<double>& v);
/// Rotation by angle t in the (i,j) coordinate plane (0-based, i,j < n).
Mat rotation(int n, int i, int j, double t);
/// Boost by rapidity t in the (i, n+1) plane.
Mat boost(int n, int i, double t);

struct Iwasawa {
    Mat k;
    double s;
    std::vector<double> n_coords;  // v_j, length n+1
};

/// g = k exp(sH) n. Throws DomainError on non-Lorentz input.
Iwasawa iwasawa(const Mat& g);
Mat reconstruct(const Iwasawa& d);

/// Product of `factors` random rotations and boosts with parameters in [-1,1].
Mat random_lorentz(int n, std::mt19937_64& rng, int factors = 6);
/// Uniform points on S^{n-1}.
std::vector<Vec> sphere_points(int n, int count, std::mt19937_64& rng);

/// Normalized integral of x^alpha over S^{n-1}; alpha may be shorter than n.
Rational sphere_moment(int n, const std::vector<int>& alpha);

/// phi_{Y_k} as a polynomial in x1.
struct ZonalPoly {
    int n;
    int k;
    Poly p;

    double operator()(double x1) const { return p.eval(x1); }
};

ZonalPoly zonal_poly(int n, int k);
/// Exact: the degree-k homogeneous extension x1^i |x|^{k-i} is harmonic on R^n.
bool harmonic_extension_check(const ZonalPoly& z);
Rational zonal_l2_norm(int n, int k);

/// Rational rotation matrices (n x n) are checked exactly.
using RMat = std::vector<std::vector<Rational>>;
RMat pythagorean_rotation(int n, int i, int j, int a, int b, int c);
bool reproducing_check_exact(int n, int k, const std::vector<RMat>& rotations);
bool reproducing_check(int n, int k, const std::vector<Mat>& rotations, double tol = 1e-10);
/// Random n x n rotation (product of plane rotations).
Mat random_rotation(int n, std::mt19937_64& rng);

/// a_I(g^{-1})^{-(mu+rho)} phi_{Y_k}(k_I(g^{-1})^{-1} x) at each x in S^{n-1}.
std::vector<double> poisson_delta(int n, int k, const Rational& mu, const Mat& g, const std::vector<Vec>& points);

struct IntertwiningResult {
    double max_residual = 0;
    /// |(grad F)(e)(H) - (mu+rho) phi_k| over the sample.
    double h_direction_residual = 0;
    /// Least-squares coefficients of the combined function on phi_0 .. phi_{k+2}.
    std::vector<double> projections;
    /// Expected coefficients t(Y_k -> Y_{k+1}) and t(Y_k -> Y_{k-1}) (0 when k = 0).
    Rational t_up, t_down;
};

/// Central differences of the Poisson transform of delta along an orthonormal
/// basis of p, combined with omega weights, against the exact scalars.
IntertwiningResult verify_intertwining(int n, int k, const Rational& mu, double step_h = 1e-4, int samples = 50,
                                       std::uint64_t seed = 1);

/// Numerical phi_{l+1} coefficient of the combined function for source Y_l at
/// the exceptional parameter mu_l = -rho - l.
double exceptional_projection(int n, int l, double step_h = 1e-4, int samples = 50, std::uint64_t seed = 1);

struct TwoRho {
    Rational pairing;      // sum B([X~_j, (X_j)_k], H)
    bool bracket_is_multiple_of_H;
    Rational bracket_coeff;  // sum [(X_j)_k, X~_j] = coeff * H
};

TwoRho two_rho(int n);
/// pairing = 2 rho(H) and bracket = -2 rho(H) H, exactly.
bool check_2rho(int n);

}  // namespace rankone::so
