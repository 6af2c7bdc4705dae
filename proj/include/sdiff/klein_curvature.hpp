#pragma once

#include <vector>

#include "sdiff/fourier.hpp"
#include "sdiff/klein_basis.hpp"

namespace sdiff {

/// Sectional curvature of the measure-preserving diffeomorphism group of
/// the torus in the plane spanned by zeta_k = cos(k.x) and a real-valued
/// eta orthogonal to it:
///   C * sum_l |b_l|^2 ||l||^2
///     = -1/(2 S_T ||k||^2) sum_l (k x l)^4 / ||k+l||^2 |b_l + b_{2k+l}|^2.
double sectional_torus(LatticeMode k, const FourierVector& eta);

/// Sectional curvature of SDiff(K) in the plane spanned by a compressed
/// four-mode element xi_k and a Klein-flagged eta orthogonal to it (the
/// three-sum closed form, evaluated over the finitely many contributing
/// indices). Works for axis indices (k1 = 0 or k2 = 0) as well, where the
/// four modes collapse pairwise and the normalization is adjusted to the
/// actual ||xi||^2.
double sectional_klein(const KleinBasisElement& xi, const FourierVector& eta);

/// Specialized four-term formula for two basis-type elements with
/// k1 != l1 and k2 != l2 (independent of the coefficients):
///   C = -1/(4 S_T ||k||^2 ||l||^2) [ (kxl)^4/||k+l||^2 + (kxl)^4/||k-l||^2
///        + (kxlbar)^4/||k+lbar||^2 + (kxlbar)^4/||k-lbar||^2 ].
/// Strictly negative; throws precondition_error when the hypothesis fails.
double sectional_klein_pair(LatticeMode k, LatticeMode l,
                            double torus_area = kDefaultTorusArea);

/// Limit of the positive-curvature sequence C(xi_k, eta_{l_m}) as m grows:
/// k2^2 (4 k1^2 - 3 k2^2) / (2 ||k||^2 S_T) for k1 >= k2, symmetric
/// otherwise.
double pos_sequence_limit(LatticeMode k, double torus_area = kDefaultTorusArea);

/// The m-th element eta of that sequence (index (m, k2) for k1 >= k2, else
/// (k1, m)), with the coefficient family matching xi so that a^2 b^2 > 0.
/// Throws precondition_error for the parallel index m = k1 (resp. k2) and
/// for indices outside the basis.
KleinBasisElement pos_sequence_element(LatticeMode k, int m, bool real_family = true);

/// Limit of C(xi_k, eta_l) along a ray of directions lambda as ||l|| grows:
/// -||k||^2/(2 S_T) (sin^4(lambda - kappa) + sin^4(lambda + kappa)),
/// kappa = atan(k2/k1).
double asymptotic_limit(LatticeMode k, double lambda,
                        double torus_area = kDefaultTorusArea);

/// Uniform bound 9||k||^2/(2 S_T) + 2 min(k1^2, k2^2)/S_T on
/// |C(xi_k, eta_l)| over all basis elements eta_l.
double curvature_bound(LatticeMode k, double torus_area = kDefaultTorusArea);

/// Normalized Ricci curvature of SDiff(K) in a basis direction xi_k:
/// -3 ||k||^2 / (8 S_T).
double ricci_analytic(LatticeMode k, double torus_area = kDefaultTorusArea);

struct RicciPartialSum {
    double radius = 0.0;
    double value = 0.0;  // mean of C(xi_k, E_l) over the included elements
    long count = 0;      // number of included elements (excludes xi itself)
};

/// Partial averages of C(xi, E_l) over the basis elements with ||l|| <= R,
/// for R = step, 2 step, ..., r_max. Elements parallel to xi are skipped.
/// The sweep fans out across threads; the reduction order is fixed by the
/// enumeration order, so results are bit-stable for any thread count.
std::vector<RicciPartialSum> ricci_partial_sums(const KleinBasisElement& xi, double r_max,
                                                double step, int threads = 1,
                                                double torus_area = kDefaultTorusArea);

/// Mean over the basis directions lambda_l (||l|| <= R) of
/// (4 cos(2 lambda) cos(2 kappa) - cos(4 lambda) cos(4 kappa)) / 8,
/// i.e. the angular correction profile in units of ||k||^2 / S_T.
/// Tends to zero as R grows.
double f_lambda_average(double kappa, double radius);

/// Torus analogue of the Ricci sweep: partial averages of
/// C(zeta_k, eta) over the real torus eigenbasis {cos(l.x), sin(l.x)},
/// ||l|| <= R (one representative per +-l pair), excluding the plane of
/// zeta_k itself. Converges to the same -3 ||k||^2 / (8 S_T).
std::vector<RicciPartialSum> torus_ricci_partial_sums(LatticeMode k, double r_max, double step,
                                                      int threads = 1,
                                                      double torus_area = kDefaultTorusArea);

}  // namespace sdiff
