#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sdiff/errors.hpp"
#include "sdiff/klein_curvature.hpp"
#include "sdiff/torus_algebra.hpp"
#include "test_support.hpp"

using namespace sdiff;
using sdiff::testing::random_real_field;
using sdiff::testing::rel_gap;

namespace {
const double S = kDefaultTorusArea;
constexpr double PI = std::numbers::pi;
}

TEST_CASE("sectional curvature on the torus") {
    SUBCASE("zeta_(0,1) against cos(x1)") {
        CHECK(sectional_torus({0, 1}, cos_mode({1, 0})) == doctest::Approx(-1.0 / (2.0 * S)));
    }

    SUBCASE("eta parallel to k gives a flat plane") {
        CHECK(sectional_torus({0, 1}, cos_mode({0, 2})) == 0.0);
        CHECK(sectional_torus({0, 1}, sin_mode({0, 1})) == 0.0);
    }

    SUBCASE("matches the tensor oracle on random planes") {
        std::mt19937 rng(31);
        const LatticeMode k{1, 2};
        const auto zeta = cos_mode(k);
        int done = 0;
        while (done < 40) {
            auto eta = random_real_field(rng, 5, 3);
            eta -= (inner_product(eta, zeta).real() / inner_product(zeta, zeta).real()) *
                   FourierVector(zeta);
            eta.prune(1e-13);
            if (eta.empty()) continue;
            const double closed = sectional_torus(k, eta);
            const double oracle = sectional_curvature_oracle(zeta, eta, OracleMethod::tensor);
            CHECK(rel_gap(closed, oracle) < 1e-9);
            CHECK(closed <= 1e-15);  // never positive on the torus
            ++done;
        }
    }

    SUBCASE("non-orthogonal eta is rejected") {
        CHECK_THROWS_AS((void)sectional_torus({0, 1}, cos_mode({0, 1})), precondition_error);
    }
}

TEST_CASE("sectional curvature on the klein bottle") {
    SUBCASE("reference plane xi_(1,1), eta_(2,2)") {
        const auto xi = make_basis_element(BasisKind::cos_cos, {1, 1});
        const auto eta = basis_element(BasisKind::sin_sin, {2, 2});
        const double c = sectional_klein(xi, eta);
        CHECK(c == doctest::Approx(-0.0203).epsilon(2e-3));
        CHECK(c == doctest::Approx(-0.8 / S).epsilon(1e-14));
    }

    SUBCASE("table row: k = (20,10)") {
        const auto xi = make_basis_element(BasisKind::sin_sin, {20, 10});
        CHECK(sectional_klein(xi, pos_sequence_element({20, 10}, 5).expand()) ==
              doctest::Approx(-1.6).epsilon(0.05));
        CHECK(sectional_klein(xi, pos_sequence_element({20, 10}, 45).expand()) ==
              doctest::Approx(2.2).epsilon(0.05));
        CHECK(sectional_klein(xi, pos_sequence_element({20, 10}, 500).expand()) ==
              doctest::Approx(3.2843).epsilon(2e-4));
    }

    SUBCASE("not klein / not orthogonal inputs are rejected") {
        const auto xi = make_basis_element(BasisKind::cos_cos, {1, 1});
        CHECK_THROWS_AS((void)sectional_klein(xi, cos_mode({2, 2})), precondition_error);
        CHECK_THROWS_AS((void)sectional_klein(xi, xi.expand()), precondition_error);
        CHECK_THROWS_AS((void)sectional_klein(xi, FourierVector()), precondition_error);
    }

    SUBCASE("matches the oracles on every basis pair with radius 5") {
        const auto basis = enumerate_basis(5.0);
        double worst = 0.0;
        for (const auto& xi : basis) {
            const auto xi_f = xi.expand();
            for (const auto& el : basis) {
                if (el.k == xi.k && el.kind == xi.kind) continue;
                const auto eta = el.expand();
                const double closed = sectional_klein(xi, eta);
                worst = std::max(
                    worst,
                    rel_gap(closed, sectional_curvature_oracle(xi_f, eta, OracleMethod::tensor)));
                worst = std::max(worst,
                                 rel_gap(closed, sectional_curvature_oracle(
                                                     xi_f, eta, OracleMethod::short_formula)));
            }
        }
        CHECK(worst < 1e-10);
    }

    SUBCASE("klein flag of a random aggregate eta") {
        std::mt19937 rng(5);
        const auto xi = make_basis_element(BasisKind::cos_cos, {1, 1});
        const auto xi_f = xi.expand();
        int done = 0;
        while (done < 20) {
            auto eta = sdiff::testing::random_klein_field(rng, 5.0, 3);
            eta -= (inner_product(eta, xi_f).real() / inner_product(xi_f, xi_f).real()) *
                   FourierVector(xi_f);
            eta.prune(1e-13);
            if (eta.empty() || !eta.is_klein(1e-10)) continue;
            const double closed = sectional_klein(xi, eta);
            const double oracle = sectional_curvature_oracle(xi_f, eta, OracleMethod::tensor);
            CHECK(rel_gap(closed, oracle) < 1e-9);
            ++done;
        }
    }
}

TEST_CASE("pair formula") {
    SUBCASE("reference value and agreement with the full formula") {
        CHECK(sectional_klein_pair({1, 1}, {2, 2}) == doctest::Approx(-0.8 / S).epsilon(1e-14));
        const auto xi = make_basis_element(BasisKind::cos_cos, {1, 1});
        CHECK(sectional_klein_pair({1, 1}, {2, 2}) ==
              doctest::Approx(sectional_klein(xi, basis_element(BasisKind::sin_sin, {2, 2})))
                  .epsilon(1e-12));
    }

    SUBCASE("hypothesis violations are rejected") {
        CHECK_THROWS_AS((void)sectional_klein_pair({1, 1}, {1, 2}), precondition_error);
        CHECK_THROWS_AS((void)sectional_klein_pair({2, 1}, {3, 1}), precondition_error);
    }

    SUBCASE("strict negativity and both bounds on random admissible pairs") {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> coord(0, 30);
        int done = 0;
        while (done < 500) {
            const LatticeMode k{coord(rng), coord(rng)};
            const LatticeMode l{coord(rng), coord(rng)};
            if (norm2(k) == 0 || norm2(l) == 0) continue;
            if (norm2(k) > 900 || norm2(l) > 900) continue;
            if (k.k1 == l.k1 || k.k2 == l.k2) continue;
            const double c = sectional_klein_pair(k, l);
            CAPTURE(k.str());
            CAPTURE(l.str());
            CHECK(c < 0.0);
            CHECK(c >= -std::min(static_cast<double>(norm2(k)), static_cast<double>(norm2(l))) / S);
            CHECK(std::abs(c) <= curvature_bound(k));
            ++done;
        }
    }

    SUBCASE("agreement with the full formula on random pairs, any kinds") {
        std::mt19937 rng(77);
        std::uniform_int_distribution<int> coord(0, 12);
        int done = 0;
        while (done < 60) {
            const LatticeMode k{coord(rng), coord(rng)};
            const LatticeMode l{coord(rng), coord(rng)};
            if (norm2(k) == 0 || norm2(l) == 0 || k.k1 == l.k1 || k.k2 == l.k2) continue;
            const bool k_re = in_index_set_re(k), k_im = in_index_set_im(k);
            const bool l_re = in_index_set_re(l), l_im = in_index_set_im(l);
            if (!(k_re || k_im) || !(l_re || l_im)) continue;
            const auto xi = make_basis_element(
                k_re ? ((k.k2 % 2) ? BasisKind::cos_cos : BasisKind::sin_sin)
                     : ((k.k2 % 2) ? BasisKind::cos_sin : BasisKind::sin_cos),
                k);
            const auto eta = make_basis_element(
                l_im ? ((l.k2 % 2) ? BasisKind::cos_sin : BasisKind::sin_cos)
                     : ((l.k2 % 2) ? BasisKind::cos_cos : BasisKind::sin_sin),
                l);
            CHECK(rel_gap(sectional_klein_pair(k, l), sectional_klein(xi, eta.expand())) <
                  1e-12);
            ++done;
        }
    }
}

TEST_CASE("positive sequence") {
    SUBCASE("limits") {
        CHECK(pos_sequence_limit({20, 10}) == doctest::Approx(65.0 / (2 * PI * PI)).epsilon(1e-15));
        CHECK(pos_sequence_limit({1, 1}) == doctest::Approx(1.0 / (4.0 * S)).epsilon(1e-15));
        CHECK(pos_sequence_limit({1, 2}) == doctest::Approx(13.0 / (10.0 * S)).epsilon(1e-15));
    }

    SUBCASE("elements") {
        const auto el = pos_sequence_element({20, 10}, 45);
        CHECK(el.k == LatticeMode{45, 10});
        CHECK(el.kind == BasisKind::sin_sin);
        CHECK_THROWS_AS((void)pos_sequence_element({20, 10}, 20), precondition_error);
        // k1 < k2 walks the second coordinate
        CHECK(pos_sequence_element({2, 5}, 9).k == LatticeMode{2, 9});
        CHECK_THROWS_AS((void)pos_sequence_element({2, 5}, 5), precondition_error);
    }

    SUBCASE("values increase monotonically toward the limit for m >= 25") {
        const auto xi = make_basis_element(BasisKind::sin_sin, {20, 10});
        const double limit = pos_sequence_limit({20, 10});
        double prev = -1e9;
        for (int m = 25; m <= 120; m += 5) {
            const double c = sectional_klein(xi, pos_sequence_element({20, 10}, m).expand());
            CAPTURE(m);
            CHECK(c > prev);
            CHECK(c < limit);
            prev = c;
        }
    }
}

TEST_CASE("asymptotic limit along directions") {
    SUBCASE("closed form values") {
        CHECK(asymptotic_limit({0, 1}, 0.0) == doctest::Approx(-1.0 / S));
        CHECK(asymptotic_limit({3, 0}, std::atan2(0.0, 3.0)) == doctest::Approx(0.0));
        // trigonometric identity: mean over lambda equals -3||k||^2/(8 S_T)
        const LatticeMode k{2, 1};
        double mean = 0.0;
        const int n = 2048;
        for (int i = 0; i < n; ++i) mean += asymptotic_limit(k, 2 * PI * i / n);
        mean /= n;
        CHECK(mean == doctest::Approx(ricci_analytic(k)).epsilon(1e-12));
    }

    SUBCASE("pair formula approaches the limit along a ray") {
        const LatticeMode k{20, 10};
        const double lambda = std::atan(0.5) + 0.3;
        double prev = 1e9;
        for (int m : {50, 100, 200}) {
            const LatticeMode l{static_cast<int>(std::lround(m * std::cos(lambda))),
                                static_cast<int>(std::lround(m * std::sin(lambda)))};
            const double lam = std::atan2(static_cast<double>(l.k2), static_cast<double>(l.k1));
            const double err = std::abs(sectional_klein_pair(k, l) - asymptotic_limit(k, lam));
            CHECK(err < prev);
            prev = err;
        }
        CHECK(prev < 0.05);
    }
}

TEST_CASE("curvature bound") {
    CHECK(curvature_bound({1, 1}) == doctest::Approx(11.0 / S));
    CHECK(curvature_bound({0, 1}) == doctest::Approx(9.0 / (2.0 * S)));

    // dominance over full-formula values on random basis pairs
    std::mt19937 rng(4242);
    const auto basis = enumerate_basis(20.0);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < 1000; ++t) {
        const auto& a = basis[pick(rng)];
        const auto& b = basis[pick(rng)];
        if (a.k == b.k && a.kind == b.kind) continue;
        CAPTURE(a.k.str());
        CAPTURE(b.k.str());
        CHECK(std::abs(sectional_klein(a, b.expand())) <= curvature_bound(a.k));
    }
}

TEST_CASE("ricci curvature") {
    SUBCASE("analytic values") {
        CHECK(ricci_analytic({0, 1}) == doctest::Approx(-3.0 / (32.0 * PI * PI)).epsilon(1e-15));
        CHECK(ricci_analytic({20, 10}) ==
              doctest::Approx(-1500.0 / (32.0 * PI * PI)).epsilon(1e-15));
        CHECK(ricci_analytic({4, 6}) == doctest::Approx(4.0 * ricci_analytic({2, 3})));
    }

    SUBCASE("partial sums approach the analytic value") {
        const auto xi = make_basis_element(BasisKind::cos_cos, {0, 1});
        const auto sums = ricci_partial_sums(xi, 60.0, 20.0, 2);
        REQUIRE(sums.size() == 3);
        CHECK(sums[0].count == count_basis(20.0) - 1);  // xi itself is excluded
        CHECK(sums[2].count == count_basis(60.0) - 1);
        const double target = ricci_analytic({0, 1});
        double prev = 1e9;
        for (const auto& ps : sums) {
            const double gap = std::abs(ps.value - target);
            CHECK(gap < prev);
            prev = gap;
        }
        CHECK(std::abs(sums[2].value - target) < 0.01 * std::abs(target));
    }

    SUBCASE("partial sums for k = (1,1) tighten over R = 50, 100, 200") {
        const auto xi = make_basis_element(BasisKind::cos_cos, {1, 1});
        const double target = ricci_analytic({1, 1});
        double prev = 1e9;
        for (const auto& ps : ricci_partial_sums(xi, 200.0, 50.0, 4)) {
            if (ps.radius == 150.0) continue;
            const double gap = std::abs(ps.value - target);
            CHECK(gap < prev);
            prev = gap;
        }
    }

    SUBCASE("thread count does not change the result") {
        const auto xi = make_basis_element(BasisKind::sin_sin, {1, 2});
        const auto s1 = ricci_partial_sums(xi, 30.0, 30.0, 1);
        const auto s4 = ricci_partial_sums(xi, 30.0, 30.0, 4);
        REQUIRE(s1.size() == s4.size());
        for (std::size_t i = 0; i < s1.size(); ++i) {
            CHECK(s1[i].value == s4[i].value);  // bit-stable reduction
            CHECK(s1[i].count == s4[i].count);
        }
    }

    SUBCASE("torus sweep converges to the same constant") {
        const auto sums = torus_ricci_partial_sums({0, 1}, 120.0, 40.0, 4);
        REQUIRE(sums.size() == 3);
        const double target = ricci_analytic({0, 1});
        double prev = 1e9;
        for (const auto& ps : sums) {
            const double gap = std::abs(ps.value - target);
            CHECK(gap < prev);
            prev = gap;
        }
        CHECK(std::abs(sums.back().value - target) < 0.02 * std::abs(target));
    }
}

TEST_CASE("angular profile average") {
    // continuous mean vanishes; the discrete average decays with R
    CHECK(std::abs(f_lambda_average(std::atan(0.5), 200.0)) < 0.02);
    const double a100 = std::abs(f_lambda_average(0.0, 100.0));
    const double a400 = std::abs(f_lambda_average(0.0, 400.0));
    CHECK(a400 < a100);
}
