#include "sdiff/fourier.hpp"

#include <cmath>

#include "sdiff/errors.hpp"

namespace sdiff {

namespace {

void require_same_area(const FourierVector& u, const FourierVector& v) {
    if (u.torus_area() != v.torus_area()) {
        throw config_error("operands carry different torus areas");
    }
}

}  // namespace

FourierVector FourierVector::mode(LatticeMode k, Complex coeff, double torus_area) {
    FourierVector v(torus_area);
    v.add(k, coeff);
    return v;
}

Complex FourierVector::coeff(LatticeMode k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Complex{0.0, 0.0} : it->second;
}

void FourierVector::add(LatticeMode k, Complex c) {
    if (k.is_zero()) return;  // zero-mean: constant mode is dropped
    auto [it, inserted] = coeffs_.try_emplace(k, c);
    if (!inserted) it->second += c;
    if (it->second == Complex{0.0, 0.0}) coeffs_.erase(it);
}

void FourierVector::set(LatticeMode k, Complex c) {
    if (k.is_zero()) return;
    if (c == Complex{0.0, 0.0}) {
        coeffs_.erase(k);
    } else {
        coeffs_[k] = c;
    }
}

void FourierVector::prune(double tol) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (std::abs(it->second) <= tol) {
            it = coeffs_.erase(it);
        } else {
            ++it;
        }
    }
}

FourierVector& FourierVector::operator+=(const FourierVector& o) {
    require_same_area(*this, o);
    for (const auto& [k, c] : o.coeffs_) add(k, c);
    return *this;
}

FourierVector& FourierVector::operator-=(const FourierVector& o) {
    require_same_area(*this, o);
    for (const auto& [k, c] : o.coeffs_) add(k, -c);
    return *this;
}

FourierVector& FourierVector::operator*=(Complex c) {
    if (c == Complex{0.0, 0.0}) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [k, b] : coeffs_) b *= c;
    return *this;
}

bool FourierVector::is_real(double tol) const {
    for (const auto& [k, b] : coeffs_) {
        if (std::abs(coeff(k.negated()) - std::conj(b)) > tol) return false;
    }
    return true;
}

bool FourierVector::is_klein(double tol) const {
    if (!is_real(tol)) return false;
    for (const auto& [k, b] : coeffs_) {
        const double sign = (k.k2 % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k2+1}
        if (std::abs(coeff(k.conj_flip()) - sign * std::conj(b)) > tol) return false;
    }
    return true;
}

Complex FourierVector::evaluate(double x1, double x2) const {
    Complex sum{0.0, 0.0};
    for (const auto& [k, b] : coeffs_) {
        const double phase = k.k1 * x1 + k.k2 * x2;
        sum += b * Complex{std::cos(phase), std::sin(phase)};
    }
    return sum;
}

double FourierVector::evaluate_real(double x1, double x2) const {
    return evaluate(x1, x2).real();
}

Complex inner_product(const FourierVector& u, const FourierVector& v) {
    require_same_area(u, v);
    Complex sum{0.0, 0.0};
    for (const auto& [k, b] : u.coefficients()) {
        const Complex c = v.coeff(k);
        if (c != Complex{0.0, 0.0}) {
            sum += b * std::conj(c) * static_cast<double>(norm2(k));
        }
    }
    return sum * u.torus_area();
}

Complex bilinear_pairing(const FourierVector& u, const FourierVector& v) {
    require_same_area(u, v);
    Complex sum{0.0, 0.0};
    for (const auto& [k, b] : u.coefficients()) {
        const Complex c = v.coeff(k.negated());
        if (c != Complex{0.0, 0.0}) {
            sum += b * c * static_cast<double>(norm2(k));
        }
    }
    return sum * u.torus_area();
}

double norm(const FourierVector& u) { return std::sqrt(inner_product(u, u).real()); }

FourierVector cos_mode(LatticeMode k, double torus_area) {
    FourierVector v(torus_area);
    v.add(k, 0.5);
    v.add(k.negated(), 0.5);
    return v;
}

FourierVector sin_mode(LatticeMode k, double torus_area) {
    FourierVector v(torus_area);
    v.add(k, Complex{0.0, -0.5});
    v.add(k.negated(), Complex{0.0, 0.5});
    return v;
}

}  // namespace sdiff
