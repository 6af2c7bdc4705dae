#include "sdiff/sphere_harmonics.hpp"

#include <cmath>
#include <numbers>

#include "sdiff/errors.hpp"

namespace sdiff {

namespace {

constexpr double kPi = std::numbers::pi;

/// Fully normalized P: N_l^m(z) = sqrt((2l+1)/(4pi) (l-m)!/(l+m)!) P_l^m(z),
/// computed by the stable diagonal-then-upward recurrence, m >= 0.
double normalized_legendre(int l, int m, double z) {
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    double pmm = 1.0 / std::sqrt(4.0 * kPi);
    for (int i = 1; i <= m; ++i) {
        pmm *= std::sqrt((2.0 * i + 1.0) / (2.0 * i)) * s;
    }
    if (l == m) return pmm;
    double pm1 = z * std::sqrt(2.0 * m + 3.0) * pmm;
    if (l == m + 1) return pm1;
    for (int ll = m + 2; ll <= l; ++ll) {
        const double a = std::sqrt((4.0 * ll * ll - 1.0) /
                                   (static_cast<double>(ll - m) * (ll + m)));
        const double b = std::sqrt(((2.0 * ll + 1.0) * (ll - 1.0 - m) * (ll - 1.0 + m)) /
                                   ((2.0 * ll - 3.0) * (ll - m) * (ll + m)));
        const double p = a * z * pm1 - b * pmm;
        pmm = pm1;
        pm1 = p;
    }
    return pm1;
}

}  // namespace

double legendre_p(int l, int m, double z) {
    if (l < 0 || m < 0 || m > l) throw domain_error("legendre_p requires 0 <= m <= l");
    if (std::abs(z) > 1.0) throw domain_error("legendre_p requires |z| <= 1");

    // Diagonal term P_m^m = (2m-1)!! (1-z^2)^{m/2}, positive without the
    // Condon-Shortley phase.
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    double pmm = 1.0;
    for (int i = 1; i <= m; ++i) pmm *= (2.0 * i - 1.0) * s;
    if (l == m) return pmm;
    double pm1 = z * (2.0 * m + 1.0) * pmm;
    if (l == m + 1) return pm1;
    for (int ll = m + 2; ll <= l; ++ll) {
        const double p = ((2.0 * ll - 1.0) * z * pm1 - (ll + m - 1.0) * pmm) / (ll - m);
        pmm = pm1;
        pm1 = p;
    }
    return pm1;
}

std::complex<double> evaluate_Ylm(int l, int m, double theta, double phi) {
    if (l < 0 || std::abs(m) > l) throw domain_error("evaluate_Ylm requires |m| <= l");
    const int ma = std::abs(m);
    double r = normalized_legendre(l, ma, std::cos(theta));
    if (m < 0 && ma % 2 != 0) r = -r;  // Y_l^{-m} = (-1)^m conj(Y_l^m)
    return r * std::complex<double>{std::cos(m * phi), std::sin(m * phi)};
}

Quadrature gauss_legendre(int n) {
    if (n < 1) throw domain_error("gauss_legendre needs n >= 1");
    Quadrature q;
    q.nodes.resize(n);
    q.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Newton iteration from the Chebyshev-based initial guess.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        q.nodes[i] = x;
        q.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return q;
}

std::complex<double> harmonic_inner_product(int l, int m, int lp, int mp) {
    const int lmax = std::max(l, lp);
    const Quadrature q = gauss_legendre(lmax + 2);
    const int nphi = 2 * lmax + 3;
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        const double theta = std::acos(q.nodes[i]);
        std::complex<double> ring{0.0, 0.0};
        for (int j = 0; j < nphi; ++j) {
            const double phi = 2.0 * kPi * j / nphi;
            ring += evaluate_Ylm(l, m, theta, phi) * std::conj(evaluate_Ylm(lp, mp, theta, phi));
        }
        sum += q.weights[i] * ring * (2.0 * kPi / nphi);
    }
    return sum;
}

double harmonic_parity_residual(int l, int m, int samples_per_axis) {
    double worst = 0.0;
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    for (int i = 1; i < samples_per_axis; ++i) {
        const double theta = kPi * i / samples_per_axis;
        for (int j = 0; j < samples_per_axis; ++j) {
            const double phi = 2.0 * kPi * j / samples_per_axis;
            const auto lhs = evaluate_Ylm(l, m, kPi - theta, kPi + phi);
            const auto rhs = sign * evaluate_Ylm(l, m, theta, phi);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

}  // namespace sdiff
