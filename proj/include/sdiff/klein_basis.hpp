#pragma once

#include <utility>
#include <vector>

#include "sdiff/fourier.hpp"

namespace sdiff {

/// The four stream-function families spanning the fields that descend to
/// the Klein bottle. The trigonometric shape is tied to the parity of k2:
/// the cos*cos / cos*sin families require odd k2, sin*sin / sin*cos even k2.
enum class BasisKind {
    cos_cos,  // 4 cos(k1 x1) cos(k2 x2), k2 odd,  real coefficient
    cos_sin,  // 4 cos(k1 x1) sin(k2 x2), k2 odd,  imaginary coefficient
    sin_sin,  // 4 sin(k1 x1) sin(k2 x2), k2 even, real coefficient
    sin_cos,  // 4 sin(k1 x1) cos(k2 x2), k2 even, imaginary coefficient
};

const char* to_string(BasisKind kind);

/// True for the two families built from a real leading coefficient.
bool is_real_family(BasisKind kind);

/// Orientation-reversing involution I(x1, x2) = (2pi - x1, pi + x2) on the
/// torus cover; the Klein bottle is the quotient by it.
std::pair<double, double> involution_klein(double x1, double x2);

/// Index-set membership for the leading index k in N_0^2: the real family
/// excludes (n,0) and (0,2n); the imaginary family excludes (0,2n).
bool in_index_set_re(LatticeMode k);
bool in_index_set_im(LatticeMode k);

/// A four-mode element xi_k = a_k e_k + conj(a_k) e_{-k}
/// + (-1)^{k2+1} conj(a_k) e_{kbar} + (-1)^{k2+1} a_k e_{-kbar}, with
/// a_k real or imaginary according to the kind.
struct KleinBasisElement {
    LatticeMode k;
    Complex a;
    BasisKind kind;

    FourierVector expand(double torus_area = kDefaultTorusArea) const;
};

/// Basis element with the canonical amplitude (a_k = 1 for the real
/// families, a_k = -i for the imaginary ones). Throws precondition_error
/// if k is outside the matching index set or the parity does not match.
KleinBasisElement make_basis_element(BasisKind kind, LatticeMode k);

/// Expansion of make_basis_element as a stream function on the cover.
FourierVector basis_element(BasisKind kind, LatticeMode k,
                            double torus_area = kDefaultTorusArea);

/// Number of lattice points (x, y) in N_0^2 with x^2 + y^2 <= R^2.
long gauss_count(double radius);

/// |B_R| = 2(A(R) - floor(R/2) - 1) - floor(R): the number of basis
/// elements with ||k|| <= R.
long count_basis(double radius);

/// All basis elements with ||k|| <= R, ordered by descending Laplace
/// eigenvalue -||k||^2, ties broken lexicographically by (k1, k2, kind).
std::vector<KleinBasisElement> enumerate_basis(double radius);

/// max over an n x n sample grid of |f(I(x)) + f(x)|; small iff the stream
/// function is I-anti-invariant (descends to the Klein bottle).
double anti_invariance_residual(const FourierVector& f, int samples_per_axis = 64);

}  // namespace sdiff
