#pragma once

#include "sdiff/sphere_harmonics.hpp"

namespace sdiff {

enum class SphereField { e01, e02, e03 };
enum class Surface { S2, RP2 };

const char* to_string(SphereField f);
const char* to_string(Surface s);

struct CurvatureCoefficients {
    double theta = 0.0;
    double rho = 0.0;
    double gamma = 0.0;
};

/// The three coefficient functions entering C(e03, e_l^m); finite and
/// nonnegative for l >= 3, |m| <= l, and symmetric in m -> -m.
/// Throws domain_error for l < 3.
CurvatureCoefficients theta_rho_gamma(int l, int m);

/// Sectional curvature in the plane spanned by the rotation field e01 and
/// e_l^m: 3 m^2 / (8 pi l^2 (l+1)^2).
double sectional_e01(int l, int m);

/// Sectional curvature in the plane spanned by the zonal field e02 and
/// e_l^m (l >= 2; the formula is singular at l = 1).
double sectional_e02(int l, int m);

/// Sectional curvature in the plane spanned by the trade-wind field e03
/// and e_l^m (l >= 3; the pair (3,0) spans no plane and is rejected).
double sectional_e03(int l, int m);

/// Large-l limits of the two families along m/l -> q, |q| <= 1:
/// e03: -(525/(32 pi)) q^4 (1 - q^2), minimized at q = +-sqrt(2/3) with
/// value -175/(72 pi); e02: -(15/(8 pi)) q^4.
double asymptotic_e03(double q);
double asymptotic_e02(double q);

/// Normalized Ricci curvature constants: e03 -> -15/(8 pi) on both S^2 and
/// RP^2; e02 -> -3/(4 pi) on S^2 only (e02 does not descend to RP^2, which
/// is rejected).
double ricci_analytic_sphere(SphereField field, Surface surface);

struct SphereRicciEstimate {
    double empirical_average = 0.0;  // mean of the sectional values
    double profile_average = 0.0;    // same mean of the asymptotic profile
    double profile_integral = 0.0;   // sum_m f(m/l)/l at l = l_max
    double analytic = 0.0;           // the closed-form constant
    long count = 0;
    int l_min = 0;
    int l_max = 0;
    bool odd_only = false;
};

/// Diagnostic averages of the sectional curvatures over all basis
/// directions with l <= l_max (odd l only on RP^2). Reported alongside the
/// analytic constant without a pass/fail verdict: the plain average of the
/// asymptotic profile over [-1, 1] is half the profile's integral, and the
/// two disagree by that factor of two.
SphereRicciEstimate ricci_numeric_estimate(SphereField field, Surface surface, int l_max);

}  // namespace sdiff
