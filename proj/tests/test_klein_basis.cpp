#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "sdiff/errors.hpp"
#include "sdiff/klein_basis.hpp"
#include "sdiff/torus_algebra.hpp"
#include "test_support.hpp"

using namespace sdiff;

namespace {
constexpr double PI = std::numbers::pi;
}

TEST_CASE("involution") {
    {
        const auto [y1, y2] = involution_klein(0.0, 0.0);
        CHECK(y1 == doctest::Approx(2 * PI));
        CHECK(y2 == doctest::Approx(PI));
    }
    {
        const auto [y1, y2] = involution_klein(1.0, 2.0);
        const auto [z1, z2] = involution_klein(y1, y2);
        // applying twice returns the input modulo the lattice
        CHECK(std::remainder(z1 - 1.0, 2 * PI) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(std::remainder(z2 - 2.0, 2 * PI) == doctest::Approx(0.0).epsilon(1e-12));
    }
    {
        const auto [y1, y2] = involution_klein(PI, PI / 2);
        CHECK(y1 == doctest::Approx(PI));
        CHECK(y2 == doctest::Approx(3 * PI / 2));
    }
}

TEST_CASE("index sets") {
    CHECK(in_index_set_re({1, 1}));
    CHECK(in_index_set_re({0, 1}));
    CHECK_FALSE(in_index_set_re({1, 0}));   // (n, 0)
    CHECK_FALSE(in_index_set_re({3, 0}));
    CHECK_FALSE(in_index_set_re({0, 2}));   // (0, 2n)
    CHECK_FALSE(in_index_set_re({0, 0}));
    CHECK(in_index_set_im({1, 0}));
    CHECK(in_index_set_im({0, 1}));
    CHECK_FALSE(in_index_set_im({0, 2}));
    CHECK_FALSE(in_index_set_im({0, 0}));
}

TEST_CASE("basis elements") {
    SUBCASE("cos-cos (1,1) has the four unit modes") {
        const auto f = basis_element(BasisKind::cos_cos, {1, 1});
        CHECK(f.support_size() == 4);
        for (const LatticeMode k : {LatticeMode{1, 1}, {-1, -1}, {1, -1}, {-1, 1}}) {
            CHECK(f.coeff(k) == Complex{1.0, 0.0});
        }
        CHECK(f.is_klein());
        // pointwise: 4 cos(x1) cos(x2)
        CHECK(f.evaluate_real(0.4, 1.1) ==
              doctest::Approx(4 * std::cos(0.4) * std::cos(1.1)));
    }

    SUBCASE("cos-sin (0,1) is the trade wind stream 4 sin(x2)") {
        const auto f = basis_element(BasisKind::cos_sin, {0, 1});
        CHECK(f.support_size() == 2);
        CHECK(f.is_klein());
        for (double x2 : {0.0, 0.3, 2.2, 5.0}) {
            CHECK(f.evaluate_real(0.7, x2) == doctest::Approx(4 * std::sin(x2)));
        }
    }

    SUBCASE("parity and index-set violations") {
        CHECK_THROWS_AS((void)basis_element(BasisKind::cos_cos, {1, 2}), precondition_error);
        CHECK_THROWS_AS((void)basis_element(BasisKind::sin_sin, {1, 1}), precondition_error);
        CHECK_THROWS_AS((void)basis_element(BasisKind::sin_sin, {0, 2}), precondition_error);
        CHECK_THROWS_AS((void)basis_element(BasisKind::sin_cos, {0, 2}), precondition_error);
        CHECK_THROWS_AS((void)basis_element(BasisKind::cos_cos, {-1, 1}), precondition_error);
    }

    SUBCASE("axis elements collapse to two modes") {
        const auto f = basis_element(BasisKind::sin_cos, {1, 0});  // 4 sin(x1)
        CHECK(f.support_size() == 2);
        CHECK(f.coeff({1, 0}) == Complex{0.0, -2.0});
        CHECK(f.evaluate_real(0.9, 0.1) == doctest::Approx(4 * std::sin(0.9)));
    }
}

TEST_CASE("counting") {
    CHECK(count_basis(1.0) == 3);
    CHECK(count_basis(2.0) == 6);
    for (int r = 1; r <= 60; ++r) {
        CAPTURE(r);
        CHECK(count_basis(r) == static_cast<long>(enumerate_basis(r).size()));
    }
    const double asymptotic = PI / 2 * 100.0 * 100.0;
    CHECK(std::abs(count_basis(100.0) - asymptotic) < 0.05 * asymptotic);
}

TEST_CASE("enumeration order") {
    const auto b1 = enumerate_basis(1.0);
    REQUIRE(b1.size() == 3);
    CHECK(b1[0].k == LatticeMode{0, 1});
    CHECK(b1[0].kind == BasisKind::cos_cos);
    CHECK(b1[1].k == LatticeMode{0, 1});
    CHECK(b1[1].kind == BasisKind::cos_sin);
    CHECK(b1[2].k == LatticeMode{1, 0});
    CHECK(b1[2].kind == BasisKind::sin_cos);

    // eigenvalues are sorted (descending -||k||^2) and the order is stable
    const auto b = enumerate_basis(6.0);
    for (std::size_t i = 1; i < b.size(); ++i) {
        CHECK(norm2(b[i - 1].k) <= norm2(b[i].k));
    }
    const auto again = enumerate_basis(6.0);
    REQUIRE(again.size() == b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(again[i].k == b[i].k);
        CHECK(again[i].kind == b[i].kind);
    }
}

TEST_CASE("orthogonality of the basis") {
    const auto basis = enumerate_basis(5.0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto fi = basis[i].expand();
        const double ni = norm(fi);
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const auto fj = basis[j].expand();
            CHECK(std::abs(inner_product(fi, fj).real()) <= 1e-12 * ni * norm(fj));
        }
    }
}

TEST_CASE("anti-invariance") {
    SUBCASE("all enumerated elements up to R = 5") {
        for (const auto& el : enumerate_basis(5.0)) {
            CAPTURE(el.k.k1);
            CAPTURE(el.k.k2);
            CHECK(anti_invariance_residual(el.expand(), 64) < 1e-12);
        }
    }

    SUBCASE("an I-invariant function fails loudly") {
        CHECK(anti_invariance_residual(cos_mode({0, 2}), 64) == doctest::Approx(2.0));
    }

    SUBCASE("general coefficient a = 1 + i") {
        const KleinBasisElement xi{{2, 3}, Complex{1.0, 1.0}, BasisKind::cos_cos};
        const auto f = xi.expand();
        CHECK(f.is_klein(1e-14));
        CHECK(anti_invariance_residual(f, 64) < 1e-12);
    }
}

TEST_CASE("bracket closure on random pairs") {
    std::mt19937 rng(17);
    const auto basis = enumerate_basis(6.0);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < 100; ++t) {
        const auto& a = basis[pick(rng)];
        const auto& b = basis[pick(rng)];
        const auto br = poisson_bracket(a.expand(), b.expand());
        CAPTURE(a.k.str());
        CAPTURE(b.k.str());
        CHECK(br.is_klein(1e-10));
    }
}
