#include "sdiff/torus_algebra.hpp"

#include <cmath>
#include <vector>

#include "sdiff/errors.hpp"

namespace sdiff {

namespace {

void require_same_area(const FourierVector& u, const FourierVector& v) {
    if (u.torus_area() != v.torus_area()) {
        throw config_error("operands carry different torus areas");
    }
}

using PairRule = Complex (*)(LatticeMode, LatticeMode);

FourierVector bilinear_expand(const FourierVector& u, const FourierVector& v, PairRule rule) {
    require_same_area(u, v);
    FourierVector out(u.torus_area());
    for (const auto& [k, a] : u.coefficients()) {
        for (const auto& [l, b] : v.coefficients()) {
            const Complex c = rule(k, l);
            if (c != Complex{0.0, 0.0}) out.add(k + l, a * b * c);
        }
    }
    return out;
}

Complex bracket_rule(LatticeMode k, LatticeMode l) {
    return static_cast<double>(cross(k, l));
}

Complex b_rule(LatticeMode k, LatticeMode l) {
    const LatticeMode s = k + l;
    if (s.is_zero()) return 0.0;  // k x l = 0 there as well
    return static_cast<double>(cross(k, l)) * static_cast<double>(norm2(k)) /
           static_cast<double>(norm2(s));
}

Complex nabla_rule(LatticeMode k, LatticeMode l) {
    const LatticeMode s = k + l;
    if (s.is_zero()) return 0.0;
    return static_cast<double>(cross(k, l)) * static_cast<double>(dot(k, l) + norm2(l)) /
           static_cast<double>(norm2(s));
}

/// d_{uv} = (u x v)^2 / ||u+v||, with the removable zero at u+v = 0.
double d_factor(LatticeMode u, LatticeMode v) {
    const LatticeMode s = u + v;
    if (s.is_zero()) return 0.0;
    const double c = static_cast<double>(cross(u, v));
    return c * c / std::sqrt(static_cast<double>(norm2(s)));
}

}  // namespace

FourierVector poisson_bracket(const FourierVector& u, const FourierVector& v) {
    return bilinear_expand(u, v, bracket_rule);
}

FourierVector b_operator(const FourierVector& u, const FourierVector& v) {
    return bilinear_expand(u, v, b_rule);
}

FourierVector covariant_derivative(const FourierVector& u, const FourierVector& v) {
    return bilinear_expand(u, v, nabla_rule);
}

FourierVector riemann_apply(const FourierVector& u, const FourierVector& v,
                            const FourierVector& w) {
    FourierVector out = covariant_derivative(v, covariant_derivative(u, w));
    out -= covariant_derivative(u, covariant_derivative(v, w));
    out += covariant_derivative(poisson_bracket(u, v), w);
    return out;
}

double riemann_quadruple(LatticeMode k, LatticeMode l, LatticeMode m, LatticeMode n,
                         double torus_area) {
    if (!(k + l + m + n).is_zero()) return 0.0;
    return (d_factor(l, n) * d_factor(k, m) - d_factor(l, m) * d_factor(k, n)) * torus_area;
}

double riemann_contraction(const FourierVector& u, const FourierVector& v) {
    require_same_area(u, v);
    Complex sum{0.0, 0.0};
    for (const auto& [k, a1] : u.coefficients()) {
        for (const auto& [l, b1] : v.coefficients()) {
            for (const auto& [m, a2] : u.coefficients()) {
                const LatticeMode n = (k + l + m).negated();
                const Complex b2 = v.coeff(n);
                if (b2 == Complex{0.0, 0.0}) continue;
                sum += a1 * b1 * a2 * b2 * riemann_quadruple(k, l, m, n, u.torus_area());
            }
        }
    }
    return sum.real();
}

double sectional_curvature_oracle(const FourierVector& u, const FourierVector& v,
                                  OracleMethod method) {
    require_same_area(u, v);
    const double uu = inner_product(u, u).real();
    const double vv = inner_product(v, v).real();
    const double uv = inner_product(u, v).real();
    const double gram = uu * vv - uv * uv;
    if (!(gram > 1e-12 * uu * vv) || uu == 0.0 || vv == 0.0) {
        throw precondition_error("sectional curvature needs two non-parallel nonzero fields");
    }

    if (method == OracleMethod::tensor) {
        return riemann_contraction(u, v) / gram;
    }

    // Orthonormalize, then apply the delta/beta/alpha formula.
    FourierVector un = u;
    un *= 1.0 / std::sqrt(uu);
    FourierVector vn = v;
    vn -= (uv / uu) * FourierVector(u);
    vn *= 1.0 / norm(vn);

    const FourierVector buv = b_operator(un, vn);
    const FourierVector bvu = b_operator(vn, un);
    FourierVector delta = buv;
    delta += bvu;
    delta *= 0.5;
    FourierVector beta = buv;
    beta -= bvu;
    beta *= 0.5;
    FourierVector alpha = poisson_bracket(un, vn);
    alpha *= 0.5;

    // The <B(u,u), B(v,v)> term vanishes when either field is a Laplace
    // eigenfunction; it is needed for mixed-eigenvalue operands.
    return inner_product(delta, delta).real() + 2.0 * inner_product(alpha, beta).real() -
           3.0 * inner_product(alpha, alpha).real() -
           inner_product(b_operator(un, un), b_operator(vn, vn)).real();
}

}  // namespace sdiff
