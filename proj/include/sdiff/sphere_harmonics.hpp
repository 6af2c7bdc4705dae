#pragma once

#include <complex>
#include <vector>

namespace sdiff {

/// Spherical-harmonic index (l, m), |m| <= l. Only the odd-l harmonics are
/// anti-invariant under the antipodal map and descend to RP^2.
struct SphericalMode {
    int l = 0;
    int m = 0;

    bool valid() const { return l >= 0 && m >= -l && m <= l; }
    bool on_rp2() const { return l % 2 != 0; }
};

/// Associated Legendre polynomial P_l^m(z) for 0 <= m <= l, |z| <= 1,
/// without the Condon-Shortley phase:
/// P_l^m(z) = (1 - z^2)^{m/2} d^m/dz^m P_l(z).
/// Throws domain_error for |z| > 1 or an invalid (l, m).
double legendre_p(int l, int m, double z);

/// Orthonormal spherical harmonic
/// Y_l^m(theta, phi) = sqrt((l-m)!/(l+m)! (2l+1)/(4pi)) e^{i m phi} P_l^m(cos theta),
/// with Y_l^{-m} = (-1)^m conj(Y_l^m). Evaluated through a normalized
/// recurrence, stable for large l.
std::complex<double> evaluate_Ylm(int l, int m, double theta, double phi);

struct Quadrature {
    std::vector<double> nodes;    // Gauss-Legendre points in z = cos(theta)
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (exact for polynomials of degree
/// <= 2n - 1).
Quadrature gauss_legendre(int n);

/// Quadrature approximation of <Y_l^m, Y_{l'}^{m'}> over the sphere
/// (Gauss-Legendre in cos theta, uniform trapezoid in phi); equals
/// delta_{l l'} delta_{m m'} up to roundoff for the chosen rule sizes.
std::complex<double> harmonic_inner_product(int l, int m, int lp, int mp);

/// max over a sample grid of |Y(pi - theta, pi + phi) - (-1)^l Y(theta, phi)|.
double harmonic_parity_residual(int l, int m, int samples_per_axis = 48);

}  // namespace sdiff
