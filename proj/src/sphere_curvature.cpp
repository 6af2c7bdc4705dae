#include "sdiff/sphere_curvature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sdiff/errors.hpp"

namespace sdiff {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

const char* to_string(SphereField f) {
    switch (f) {
        case SphereField::e01: return "e01";
        case SphereField::e02: return "e02";
        case SphereField::e03: return "e03";
    }
    return "?";
}

const char* to_string(Surface s) { return s == Surface::S2 ? "S2" : "RP2"; }

CurvatureCoefficients theta_rho_gamma(int l_i, int m_i) {
    if (l_i < 3) throw domain_error("theta_rho_gamma requires l >= 3");
    if (std::abs(m_i) > l_i) throw domain_error("theta_rho_gamma requires |m| <= l");
    const double l = l_i;
    const double m2 = static_cast<double>(m_i) * m_i;

    const double up = ((l + 2) * (l + 2) - m2) * ((l + 1) * (l + 1) - m2);
    const double dn = ((l - 1) * (l - 1) - m2) * (l * l - m2);
    const double up_den = (2 * l + 3) * (2 * l + 3) * (2 * l + 5) * (2 * l + 1);
    const double dn_den = (2 * l - 3) * (2 * l - 1) * (2 * l - 1) * (2 * l + 1);

    const double shared = (l * l - m2) / ((2 * l + 1) * (2 * l - 1)) +
                          ((l + 1) * (l + 1) - m2) / ((2 * l + 3) * (2 * l + 1)) - 0.2;
    const double t3 = shared * shared / 8.0;

    CurvatureCoefficients c;
    c.theta = up * (l + 1) * l / (8.0 * up_den * (l + 2) * (l + 3)) +
              dn * (l + 1) * l / (8.0 * dn_den * (l - 2) * (l - 1)) + t3;
    c.rho = up / (8.0 * up_den) + dn / (8.0 * dn_den) + t3;
    c.gamma = up * (l + 2) * (l + 3) / (8.0 * up_den * (l + 1) * l) +
              dn * (l - 2) * (l - 1) / (8.0 * dn_den * (l + 1) * l) + t3;
    return c;
}

double sectional_e01(int l, int m) {
    if (l < 1 || std::abs(m) > l) throw domain_error("sectional_e01 requires l >= 1, |m| <= l");
    const double ll = l;
    return 3.0 * static_cast<double>(m) * m / (8.0 * kPi * ll * ll * (ll + 1) * (ll + 1));
}

double sectional_e02(int l_i, int m_i) {
    if (l_i < 2) throw domain_error("sectional_e02 requires l >= 2");
    if (std::abs(m_i) > l_i) throw domain_error("sectional_e02 requires |m| <= l");
    const double l = l_i;
    const double m2 = static_cast<double>(m_i) * m_i;
    const double c = 6.0 / (l * (l + 1));
    const double bl = (l + 1) / (l - 1);
    const double bl1 = (l + 2) / l;
    const double al = (l * l - m2) / (4 * l * l - 1);
    const double al1 = ((l + 1) * (l + 1) - m2) / (4 * (l + 1) * (l + 1) - 1);
    // The (1 - c)^2 weight mirrors the (h - 1)^2 one in the e03 formula
    // (c and h are the eigenvalue ratios lambda_2/lambda_l, lambda_3/lambda_l)
    // and is what matches both the bracket/B-operator oracle and the
    // -(15/(8 pi)) q^4 tail.
    return 15.0 * m2 / (32.0 * kPi) *
           ((1 - c) * (1 - c) * (al * bl + al1 / bl1) + 2 * (1 + c) * (al + al1) -
            3 * (al / bl + al1 * bl1));
}

double sectional_e03(int l, int m) {
    if (l < 3) throw domain_error("sectional_e03 requires l >= 3");
    if (std::abs(m) > l) throw domain_error("sectional_e03 requires |m| <= l");
    if (l == 3 && m == 0) {
        throw precondition_error("e03 and e_3^0 span no plane");
    }
    const auto [theta, rho, gamma] = theta_rho_gamma(l, m);
    const double h = 12.0 / (static_cast<double>(l) * (l + 1));
    const double m2 = static_cast<double>(m) * m;
    return -525.0 * m2 / (32.0 * kPi) *
           (3.0 * gamma - 2.0 * (h + 1.0) * rho - (h - 1.0) * (h - 1.0) * theta);
}

double asymptotic_e03(double q) {
    if (std::abs(q) > 1.0) throw domain_error("asymptotic_e03 requires |q| <= 1");
    const double q2 = q * q;
    return -525.0 / (32.0 * kPi) * q2 * q2 * (1.0 - q2);
}

double asymptotic_e02(double q) {
    if (std::abs(q) > 1.0) throw domain_error("asymptotic_e02 requires |q| <= 1");
    const double q2 = q * q;
    return -15.0 / (8.0 * kPi) * q2 * q2;
}

double ricci_analytic_sphere(SphereField field, Surface surface) {
    if (field == SphereField::e03) return -15.0 / (8.0 * kPi);
    if (field == SphereField::e02) {
        if (surface == Surface::RP2) {
            throw domain_error("e02 does not descend to a vector field on RP2");
        }
        return -3.0 / (4.0 * kPi);
    }
    throw domain_error(std::string("no Ricci constant for field ") + to_string(field));
}

SphereRicciEstimate ricci_numeric_estimate(SphereField field, Surface surface, int l_max) {
    if (field != SphereField::e02 && field != SphereField::e03) {
        throw domain_error("ricci_numeric_estimate supports e02 and e03");
    }
    if (field == SphereField::e02 && surface == Surface::RP2) {
        throw domain_error("e02 does not descend to a vector field on RP2");
    }
    if (l_max < 5) throw domain_error("ricci_numeric_estimate requires l_max >= 5");

    SphereRicciEstimate est;
    est.analytic = ricci_analytic_sphere(field, surface);
    est.l_min = (field == SphereField::e03) ? 3 : 2;
    est.l_max = l_max;
    est.odd_only = (surface == Surface::RP2);
    const int self_l = est.l_min;  // the direction itself: (3,0) resp. (2,0)

    double sum = 0.0;
    double profile_sum = 0.0;
    long count = 0;
    for (int l = est.l_min; l <= l_max; ++l) {
        if (est.odd_only && l % 2 == 0) continue;
        for (int m = -l; m <= l; ++m) {
            if (l == self_l && m == 0) continue;  // degenerate plane
            sum += (field == SphereField::e03) ? sectional_e03(l, m) : sectional_e02(l, m);
            const double q = static_cast<double>(m) / l;
            profile_sum += (field == SphereField::e03) ? asymptotic_e03(q) : asymptotic_e02(q);
            ++count;
        }
    }
    est.count = count;
    est.empirical_average = sum / count;
    est.profile_average = profile_sum / count;

    // Riemann-sum approximation of the profile integral over [-1, 1] at the
    // largest degree (spacing 1/l): twice the plain average of the profile.
    const int l = est.odd_only && l_max % 2 == 0 ? l_max - 1 : l_max;
    double integral = 0.0;
    for (int m = -l; m <= l; ++m) {
        const double q = static_cast<double>(m) / l;
        integral += ((field == SphereField::e03) ? asymptotic_e03(q) : asymptotic_e02(q)) / l;
    }
    est.profile_integral = integral;
    return est;
}

}  // namespace sdiff
