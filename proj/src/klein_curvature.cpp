#include "sdiff/klein_curvature.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sdiff/errors.hpp"
#include "sdiff/parallel.hpp"

namespace sdiff {

namespace {

double max_coeff_abs(const FourierVector& v) {
    double m = 0.0;
    for (const auto& [k, b] : v.coefficients()) m = std::max(m, std::abs(b));
    return m;
}

void require_klein(const FourierVector& eta) {
    if (eta.empty()) throw precondition_error("eta is the zero field");
    if (!eta.is_klein(1e-10 * std::max(1.0, max_coeff_abs(eta)))) {
        throw precondition_error("eta does not satisfy the Klein coefficient constraints");
    }
}

void require_orthogonal(const FourierVector& a, const FourierVector& b) {
    const double ip = inner_product(a, b).real();
    if (std::abs(ip) > 1e-9 * norm(a) * norm(b)) {
        throw precondition_error("the two stream functions are not orthogonal");
    }
}

/// sum_l |b_l|^2 ||l||^2 = <eta,eta> / S_T.
double coefficient_energy(const FourierVector& eta) {
    double sum = 0.0;
    for (const auto& [l, b] : eta.coefficients()) {
        sum += std::norm(b) * static_cast<double>(norm2(l));
    }
    return sum;
}

}  // namespace

double sectional_torus(LatticeMode k, const FourierVector& eta) {
    if (k.is_zero()) throw precondition_error("zeta_k needs a nonzero index");
    if (eta.empty()) throw precondition_error("eta is the zero field");
    if (!eta.is_real(1e-10 * std::max(1.0, max_coeff_abs(eta)))) {
        throw precondition_error("eta must be real-valued");
    }
    const double area = eta.torus_area();
    require_orthogonal(cos_mode(k, area), eta);

    const LatticeMode shift = 2 * k;
    std::set<LatticeMode> indices;
    for (const auto& [l, b] : eta.coefficients()) {
        indices.insert(l);
        indices.insert(l - shift);
    }

    double sum = 0.0;
    for (const LatticeMode l : indices) {
        if ((k + l).is_zero()) continue;  // k x l = 0 there
        const double c = static_cast<double>(cross(k, l));
        if (c == 0.0) continue;
        const double c4 = c * c * c * c;
        sum += c4 / static_cast<double>(norm2(k + l)) * std::norm(eta.coeff(l) + eta.coeff(l + shift));
    }
    const double numerator = -sum / (2.0 * area * static_cast<double>(norm2(k)));
    return numerator / coefficient_energy(eta);
}

double sectional_klein(const KleinBasisElement& xi, const FourierVector& eta) {
    require_klein(eta);
    const double area = eta.torus_area();
    const FourierVector xi_f = xi.expand(area);
    require_orthogonal(xi_f, eta);

    const LatticeMode k = xi.k;
    const Complex a = xi.a;
    const double ksq = static_cast<double>(norm2(k));
    if (ksq == 0.0 || a == Complex{0.0, 0.0}) {
        throw precondition_error("xi is degenerate");
    }

    const double a_sq = std::norm(a);
    const Complex a2 = a * a;
    const LatticeMode kbar = k.conj_flip();
    const LatticeMode v1 = kbar - k;              // (0, -2 k2)
    const LatticeMode v2 = (kbar + k).negated();  // (-2 k1, 0)
    const double sign2 = (k.k2 % 2 == 0) ? 1.0 : -1.0;  // (-1)^{k2}

    // First sum, over the support and its 2k-shift.
    const LatticeMode shift = 2 * k;
    std::set<LatticeMode> indices;
    for (const auto& [l, b] : eta.coefficients()) {
        indices.insert(l);
        indices.insert(l - shift);
    }
    double s1 = 0.0;
    for (const LatticeMode l : indices) {
        if ((k + l).is_zero()) continue;
        const double c = static_cast<double>(cross(k, l));
        if (c == 0.0) continue;
        const double c4 = c * c * c * c;
        s1 += c4 / static_cast<double>(norm2(k + l)) *
              std::norm(a * eta.coeff(l) + std::conj(a) * eta.coeff(l + shift));
    }
    s1 *= -1.0 / (2.0 * area * ksq);

    // Second and third sums, over the support.
    double s2 = 0.0;
    double s3 = 0.0;
    for (const auto& [l, b] : eta.coefficients()) {
        const Complex p1 = b * eta.coeff(v1 - l);  // pairs with a^2
        const Complex p2 = b * eta.coeff(v2 - l);  // pairs with |a|^2
        if (p1 == Complex{0.0, 0.0} && p2 == Complex{0.0, 0.0}) continue;

        if (!(k + l).is_zero()) {
            const double ckl = static_cast<double>(cross(k, l));
            if (ckl != 0.0) {
                const double cbar = static_cast<double>(cross(kbar, k + l));
                s2 += cbar * cbar * ckl * ckl / static_cast<double>(norm2(k + l)) *
                      (a2 * p1 + a_sq * p2).real();
            }
        }
        const double l1 = static_cast<double>(l.k1);
        const double l2 = static_cast<double>(l.k2);
        s3 += l1 * l1 * (a2 * p1).real() + l2 * l2 * (a_sq * p2).real();
    }
    s2 *= sign2 / (area * ksq);
    const double k1k2 = static_cast<double>(k.k1) * static_cast<double>(k.k2);
    s3 *= -sign2 * 4.0 * k1k2 * k1k2 / (area * ksq);

    const double raw = (s1 + s2 + s3) / (a_sq * coefficient_energy(eta));

    // The closed form folds in ||xi||^2 = 4 |a_k|^2 ||k||^2 S_T, which is
    // off by 2 when the four modes collapse pairwise (k1 = 0 or k2 = 0).
    const double xi_sq = inner_product(xi_f, xi_f).real();
    return raw * (4.0 * a_sq * ksq * area / xi_sq);
}

double sectional_klein_pair(LatticeMode k, LatticeMode l, double torus_area) {
    if (k.k1 == l.k1 || k.k2 == l.k2) {
        throw precondition_error(
            "sectional_klein_pair needs k1 != l1 and k2 != l2; use sectional_klein instead");
    }
    if (k.k1 < 0 || k.k2 < 0 || l.k1 < 0 || l.k2 < 0 || k.is_zero() || l.is_zero()) {
        throw precondition_error("indices must be nonzero points of N_0^2");
    }
    const LatticeMode lbar = l.conj_flip();
    const double x = static_cast<double>(cross(k, l));
    const double y = static_cast<double>(cross(k, lbar));
    double bracket = 0.0;
    for (const auto& [c, d] : {std::pair{x, k + l}, {x, k - l}, {y, k + lbar}, {y, k - lbar}}) {
        if (d.is_zero()) continue;
        bracket += c * c * c * c / static_cast<double>(norm2(d));
    }
    return -bracket /
           (4.0 * torus_area * static_cast<double>(norm2(k)) * static_cast<double>(norm2(l)));
}

double pos_sequence_limit(LatticeMode k, double torus_area) {
    const double k1 = k.k1, k2 = k.k2;
    const double ksq = static_cast<double>(norm2(k));
    if (ksq == 0.0) throw precondition_error("k must be nonzero");
    if (k.k1 >= k.k2) {
        return k2 * k2 * (4.0 * k1 * k1 - 3.0 * k2 * k2) / (2.0 * ksq * torus_area);
    }
    return k1 * k1 * (4.0 * k2 * k2 - 3.0 * k1 * k1) / (2.0 * ksq * torus_area);
}

KleinBasisElement pos_sequence_element(LatticeMode k, int m, bool real_family) {
    const bool along_first = k.k1 >= k.k2;
    const int fixed = along_first ? k.k2 : k.k1;
    const int parallel_at = along_first ? k.k1 : k.k2;
    if (m == parallel_at) {
        throw precondition_error("m = " + std::to_string(m) + " gives the plane of xi itself");
    }
    const LatticeMode index = along_first ? LatticeMode{m, fixed} : LatticeMode{fixed, m};
    const bool odd = (index.k2 % 2) != 0;
    const BasisKind kind = real_family ? (odd ? BasisKind::cos_cos : BasisKind::sin_sin)
                                       : (odd ? BasisKind::cos_sin : BasisKind::sin_cos);
    return make_basis_element(kind, index);
}

double asymptotic_limit(LatticeMode k, double lambda, double torus_area) {
    const double kappa = std::atan2(static_cast<double>(k.k2), static_cast<double>(k.k1));
    const double sm = std::sin(lambda - kappa);
    const double sp = std::sin(lambda + kappa);
    return -static_cast<double>(norm2(k)) / (2.0 * torus_area) *
           (sm * sm * sm * sm + sp * sp * sp * sp);
}

double curvature_bound(LatticeMode k, double torus_area) {
    const double ksq = static_cast<double>(norm2(k));
    const double mn = static_cast<double>(std::min(
        static_cast<long long>(k.k1) * k.k1, static_cast<long long>(k.k2) * k.k2));
    return 9.0 * ksq / (2.0 * torus_area) + 2.0 * mn / torus_area;
}

double ricci_analytic(LatticeMode k, double torus_area) {
    return -3.0 * static_cast<double>(norm2(k)) / (8.0 * torus_area);
}

std::vector<RicciPartialSum> ricci_partial_sums(const KleinBasisElement& xi, double r_max,
                                                double step, int threads, double torus_area) {
    if (r_max <= 0.0 || step <= 0.0) throw precondition_error("r_max and step must be positive");
    const auto basis = enumerate_basis(r_max);
    std::vector<double> values(basis.size(), 0.0);
    std::vector<char> included(basis.size(), 0);
    parallel_for_indexed(basis.size(), threads, [&](std::size_t i) {
        const KleinBasisElement& el = basis[i];
        if (el.k == xi.k && el.kind == xi.kind) return;  // degenerate plane
        values[i] = sectional_klein(xi, el.expand(torus_area));
        included[i] = 1;
    });

    std::vector<RicciPartialSum> out;
    double sum = 0.0;
    long count = 0;
    std::size_t i = 0;
    for (double r = step; r <= r_max + 1e-12; r += step) {
        const double r2 = r * r + 1e-12;
        while (i < basis.size() && static_cast<double>(norm2(basis[i].k)) <= r2) {
            if (included[i]) {
                sum += values[i];
                ++count;
            }
            ++i;
        }
        out.push_back({r, count > 0 ? sum / count : 0.0, count});
    }
    return out;
}

std::vector<RicciPartialSum> torus_ricci_partial_sums(LatticeMode k, double r_max, double step,
                                                      int threads, double torus_area) {
    if (r_max <= 0.0 || step <= 0.0) throw precondition_error("r_max and step must be positive");
    if (k.is_zero()) throw precondition_error("k must be nonzero");

    // representatives of the +-l pairs, ordered like the basis enumeration
    std::vector<std::pair<LatticeMode, bool>> elements;  // (index, is_sin)
    const int rmax = static_cast<int>(std::floor(r_max));
    for (int l1 = -rmax; l1 <= rmax; ++l1) {
        for (int l2 = -rmax; l2 <= rmax; ++l2) {
            const LatticeMode l{l1, l2};
            if (l.is_zero() || static_cast<double>(norm2(l)) > r_max * r_max) continue;
            if (l1 < 0 || (l1 == 0 && l2 < 0)) continue;
            elements.emplace_back(l, false);
            elements.emplace_back(l, true);
        }
    }
    std::sort(elements.begin(), elements.end(), [](const auto& a, const auto& b) {
        return std::tuple(norm2(a.first), a.first.k1, a.first.k2, a.second) <
               std::tuple(norm2(b.first), b.first.k1, b.first.k2, b.second);
    });

    const LatticeMode krep = (k.k1 < 0 || (k.k1 == 0 && k.k2 < 0)) ? k.negated() : k;
    std::vector<double> values(elements.size(), 0.0);
    std::vector<char> included(elements.size(), 0);
    parallel_for_indexed(elements.size(), threads, [&](std::size_t i) {
        const auto& [l, is_sin] = elements[i];
        if (l == krep && !is_sin) return;  // the plane of zeta_k itself
        const FourierVector eta = is_sin ? sin_mode(l, torus_area) : cos_mode(l, torus_area);
        values[i] = sectional_torus(k, eta);
        included[i] = 1;
    });

    std::vector<RicciPartialSum> out;
    double sum = 0.0;
    long count = 0;
    std::size_t i = 0;
    for (double r = step; r <= r_max + 1e-12; r += step) {
        const double r2 = r * r + 1e-12;
        while (i < elements.size() && static_cast<double>(norm2(elements[i].first)) <= r2) {
            if (included[i]) {
                sum += values[i];
                ++count;
            }
            ++i;
        }
        out.push_back({r, count > 0 ? sum / count : 0.0, count});
    }
    return out;
}

double f_lambda_average(double kappa, double radius) {
    const auto basis = enumerate_basis(radius);
    if (basis.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& el : basis) {
        const double lambda =
            std::atan2(static_cast<double>(el.k.k2), static_cast<double>(el.k.k1));
        sum += (4.0 * std::cos(2.0 * lambda) * std::cos(2.0 * kappa) -
                std::cos(4.0 * lambda) * std::cos(4.0 * kappa)) / 8.0;
    }
    return sum / static_cast<double>(basis.size());
}

}  // namespace sdiff
