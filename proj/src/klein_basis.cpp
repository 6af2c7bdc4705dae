#include "sdiff/klein_basis.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "sdiff/errors.hpp"

namespace sdiff {

namespace {

constexpr double kPi = std::numbers::pi;

bool parity_matches(BasisKind kind, LatticeMode k) {
    const bool odd = (k.k2 % 2) != 0;
    switch (kind) {
        case BasisKind::cos_cos:
        case BasisKind::cos_sin:
            return odd;
        case BasisKind::sin_sin:
        case BasisKind::sin_cos:
            return !odd;
    }
    return false;
}

int kind_rank(BasisKind kind) { return is_real_family(kind) ? 0 : 1; }

}  // namespace

const char* to_string(BasisKind kind) {
    switch (kind) {
        case BasisKind::cos_cos: return "cos-cos";
        case BasisKind::cos_sin: return "cos-sin";
        case BasisKind::sin_sin: return "sin-sin";
        case BasisKind::sin_cos: return "sin-cos";
    }
    return "?";
}

bool is_real_family(BasisKind kind) {
    return kind == BasisKind::cos_cos || kind == BasisKind::sin_sin;
}

std::pair<double, double> involution_klein(double x1, double x2) {
    return {2.0 * kPi - x1, kPi + x2};
}

bool in_index_set_re(LatticeMode k) {
    if (k.k1 < 0 || k.k2 < 0) return false;
    if (k.k2 == 0) return false;                     // (n, 0)
    if (k.k1 == 0 && k.k2 % 2 == 0) return false;    // (0, 2n)
    return true;
}

bool in_index_set_im(LatticeMode k) {
    if (k.k1 < 0 || k.k2 < 0) return false;
    if (k.k1 == 0 && k.k2 % 2 == 0) return false;    // (0, 2n), incl. origin
    return true;
}

FourierVector KleinBasisElement::expand(double torus_area) const {
    // a_{-k} = conj(a_k), a_{kbar} = (-1)^{k2+1} conj(a_k),
    // a_{-kbar} = (-1)^{k2+1} a_k. Accumulation handles collapsing modes
    // (k1 = 0 or k2 = 0).
    const double sign = (k.k2 % 2 == 0) ? -1.0 : 1.0;
    FourierVector f(torus_area);
    f.add(k, a);
    f.add(k.negated(), std::conj(a));
    f.add(k.conj_flip(), sign * std::conj(a));
    f.add(k.conj_flip().negated(), sign * a);
    return f;
}

KleinBasisElement make_basis_element(BasisKind kind, LatticeMode k) {
    if (!parity_matches(kind, k)) {
        throw precondition_error("basis kind " + std::string(to_string(kind)) +
                                 " does not match the parity of k2 for k = " + k.str());
    }
    const bool ok = is_real_family(kind) ? in_index_set_re(k) : in_index_set_im(k);
    if (!ok) {
        throw precondition_error("index " + k.str() + " is outside the index set of " +
                                 to_string(kind));
    }
    const Complex a = is_real_family(kind) ? Complex{1.0, 0.0} : Complex{0.0, -1.0};
    return {k, a, kind};
}

FourierVector basis_element(BasisKind kind, LatticeMode k, double torus_area) {
    return make_basis_element(kind, k).expand(torus_area);
}

long gauss_count(double radius) {
    if (radius < 0.0) return 0;
    const double r2 = radius * radius;
    const int rmax = static_cast<int>(std::floor(radius));
    long count = 0;
    for (int x = 0; x <= rmax; ++x) {
        for (int y = 0; y * y + x * x <= r2; ++y) ++count;
    }
    return count;
}

long count_basis(double radius) {
    if (radius < 0.0) return 0;
    return 2 * (gauss_count(radius) - static_cast<long>(std::floor(radius / 2.0)) - 1) -
           static_cast<long>(std::floor(radius));
}

std::vector<KleinBasisElement> enumerate_basis(double radius) {
    std::vector<KleinBasisElement> out;
    const double r2 = radius * radius;
    const int rmax = static_cast<int>(std::floor(radius));
    for (int k1 = 0; k1 <= rmax; ++k1) {
        for (int k2 = 0; k1 * k1 + k2 * k2 <= r2; ++k2) {
            const LatticeMode k{k1, k2};
            const bool odd = (k2 % 2) != 0;
            if (in_index_set_re(k)) {
                out.push_back(make_basis_element(odd ? BasisKind::cos_cos : BasisKind::sin_sin, k));
            }
            if (in_index_set_im(k)) {
                out.push_back(make_basis_element(odd ? BasisKind::cos_sin : BasisKind::sin_cos, k));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const KleinBasisElement& a, const KleinBasisElement& b) {
        return std::tuple(norm2(a.k), a.k.k1, a.k.k2, kind_rank(a.kind)) <
               std::tuple(norm2(b.k), b.k.k1, b.k.k2, kind_rank(b.kind));
    });
    return out;
}

double anti_invariance_residual(const FourierVector& f, int samples_per_axis) {
    double worst = 0.0;
    const double h = 2.0 * kPi / samples_per_axis;
    for (int i = 0; i < samples_per_axis; ++i) {
        for (int j = 0; j < samples_per_axis; ++j) {
            const double x1 = i * h;
            const double x2 = j * h;
            const auto [y1, y2] = involution_klein(x1, x2);
            worst = std::max(worst,
                             std::abs(f.evaluate_real(y1, y2) + f.evaluate_real(x1, x2)));
        }
    }
    return worst;
}

}  // namespace sdiff
