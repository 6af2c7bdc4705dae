#pragma once

#include <complex>
#include <map>
#include <numbers>

#include "sdiff/lattice.hpp"

namespace sdiff {

using Complex = std::complex<double>;

/// Area of the standard 2pi x 2pi torus R^2 / (2pi Z)^2.
inline constexpr double kDefaultTorusArea = 4.0 * std::numbers::pi * std::numbers::pi;

/// A (complexified) stream function on the flat torus with finite Fourier
/// support: f = sum_k b_k e_k, e_k = exp(i k.x). The zero mode is never
/// stored (stream functions have zero mean).
class FourierVector {
public:
    using Map = std::map<LatticeMode, Complex>;

    FourierVector() = default;
    explicit FourierVector(double torus_area) : area_(torus_area) {}

    static FourierVector mode(LatticeMode k, Complex coeff = 1.0,
                              double torus_area = kDefaultTorusArea);

    double torus_area() const { return area_; }

    /// Coefficient b_k (zero for modes outside the support).
    Complex coeff(LatticeMode k) const;

    /// Adds c to b_k; erases the entry if the result is exactly zero.
    void add(LatticeMode k, Complex c);
    void set(LatticeMode k, Complex c);

    /// Removes every coefficient with |b_k| <= tol.
    void prune(double tol);

    FourierVector& operator+=(const FourierVector& o);
    FourierVector& operator-=(const FourierVector& o);
    FourierVector& operator*=(Complex c);
    friend FourierVector operator+(FourierVector a, const FourierVector& b) { return a += b; }
    friend FourierVector operator-(FourierVector a, const FourierVector& b) { return a -= b; }
    friend FourierVector operator*(Complex c, FourierVector v) { return v *= c; }

    bool empty() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }
    const Map& coefficients() const { return coeffs_; }

    /// b_{-l} == conj(b_l) for every l in the support.
    bool is_real(double tol = 0.0) const;

    /// Real-valuedness plus b_{lbar} == (-1)^{l2+1} conj(b_l): the stream
    /// function descends to the Klein bottle (f o I = -f).
    bool is_klein(double tol = 0.0) const;

    Complex evaluate(double x1, double x2) const;

    /// Pointwise value assuming the real-valuedness constraint holds.
    double evaluate_real(double x1, double x2) const;

private:
    Map coeffs_;
    double area_ = kDefaultTorusArea;
};

/// Hermitian L2 inner product of the associated vector fields:
/// <u,v> = sum_k u_k conj(v_k) ||k||^2 S_T.
/// Throws config_error if the operands disagree on the torus area.
Complex inner_product(const FourierVector& u, const FourierVector& v);

/// C-bilinear pairing sum_k u_k v_{-k} ||k||^2 S_T, the linear extension
/// used by the curvature-tensor contraction. Coincides with inner_product
/// when the second operand is real-valued.
Complex bilinear_pairing(const FourierVector& u, const FourierVector& v);

/// sqrt(Re<u,u>).
double norm(const FourierVector& u);

/// cos(k.x) = (e_k + e_{-k})/2 and sin(k.x) = (e_k - e_{-k})/(2i).
FourierVector cos_mode(LatticeMode k, double torus_area = kDefaultTorusArea);
FourierVector sin_mode(LatticeMode k, double torus_area = kDefaultTorusArea);

}  // namespace sdiff
