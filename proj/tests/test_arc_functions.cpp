#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eisarc/arc_functions.hpp"
#include "eisarc/sample_grid.hpp"

using namespace eisarc;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("FormSpec invariants") {
    CHECK_NOTHROW(FormSpec::single(4));
    CHECK_THROWS_AS(FormSpec::single(3), std::invalid_argument);
    CHECK_NOTHROW(FormSpec::power(2, 10));
    CHECK_THROWS_AS(FormSpec::power(2, 8), std::invalid_argument);
    CHECK_NOTHROW(FormSpec::power(3, 16));
    CHECK_THROWS_AS(FormSpec::power(3, 14), std::invalid_argument);
    CHECK_THROWS_AS(FormSpec::power(4, 20), std::invalid_argument);
    CHECK_NOTHROW(FormSpec::product(12, 10));
    CHECK_THROWS_AS(FormSpec::product(10, 10), std::invalid_argument);
    CHECK_THROWS_AS(FormSpec::product(12, 8), std::invalid_argument);

    CHECK(FormSpec::single(12).weight() == 12);
    CHECK(FormSpec::power(2, 10).weight() == 20);
    CHECK(FormSpec::power(3, 16).weight() == 48);
    CHECK(FormSpec::product(12, 10).weight() == 22);
}

TEST_CASE("f_k at forced zeros and a pinned sample point") {
    CHECK(std::fabs(f_k(4, 2.0 * kPi / 3.0).real_part) < 1e-8);
    CHECK(std::fabs(f_k(6, kPi / 2.0).real_part) < 1e-8);

    // k = 12 at theta = pi/2 (sample index m = 3): negative sign, and the
    // value stays within |N| + B(12) of the main term M = -2
    const auto v = f_k(12, kPi / 2.0);
    CHECK(v.real_part < 0.0);
    CHECK(std::fabs(v.real_part - (-2.0)) <= 1.0 + 0.0357);
    // frozen high-precision value: F_12(pi/2) = -E_12(i)
    CHECK(v.real_part == doctest::Approx(-1.9689399767614335).epsilon(1e-12));

    CHECK_THROWS_AS(f_k(12, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(f_k(12, 2.2), std::invalid_argument);
}

TEST_CASE("main terms closed forms") {
    // N = 1 at theta = 2pi/3 for every weight
    CHECK(main_terms(8, 2.0 * kPi / 3.0).second == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(main_terms(48, 2.0 * kPi / 3.0).second == doctest::Approx(1.0).epsilon(1e-12));
    // k = 12 at pi/2: N = 2^{-6}, M = 2cos(3pi) = -2
    const auto [m, n] = main_terms(12, kPi / 2.0);
    CHECK(n == doctest::Approx(0.015625).epsilon(1e-14));
    CHECK(m == doctest::Approx(-2.0).epsilon(1e-14));
}

TEST_CASE("remainder_bound_single values and decay") {
    // frozen direct evaluations of the displayed three-term formula
    CHECK(remainder_bound_single(12) == doctest::Approx(0.0356218187325).epsilon(1e-9));
    CHECK(remainder_bound_single(10) == doctest::Approx(0.0931127369521).epsilon(1e-9));
    // spec-level tolerances
    CHECK(std::fabs(remainder_bound_single(12) - 0.03563) < 5e-5);
    CHECK(std::fabs(remainder_bound_single(10) - 0.09312) < 5e-5);
    CHECK(remainder_bound_single(100) < 1e-15);
    for (int k = 10; k < 60; k += 2)
        CHECK(remainder_bound_single(k + 2) < remainder_bound_single(k));
}

TEST_CASE("power form: identity, signs, cross-oracle") {
    // algebraic identity F_{2,10} = F_10^2 + F_20
    const double th = kPi / 2.0;
    const double lhs = f_power(2, 10, th).real_part;
    const double f10 = f_k(10, th).real_part;
    const double f20 = f_k(20, th).real_part;
    CHECK(std::fabs(lhs - (f10 * f10 + f20)) < 1e-10);

    // positive at even-m sample points (n = 2, k = 10, weight 20)
    for (const auto& s : sample_points_for_weight(20)) {
        const double v = f_power(2, 10, s.theta).real_part;
        if (s.odd)
            CHECK(v < 0.0);
        else
            CHECK(v > 0.0);
    }

    // n = 3, k = 16 at rho against the composed evaluation
    const double th2 = 2.0 * kPi / 3.0;
    const double direct = f_power(3, 16, th2).real_part;
    const double f16 = f_k(16, th2).real_part;
    const double f48 = f_k(48, th2).real_part;
    CHECK(std::fabs(direct - (f16 * f16 * f16 + f48)) < 1e-9);
}

TEST_CASE("main_term_power closed forms") {
    // (2cos(4pi) + 1)^2 + 2cos(8pi) + 1 = 12 at theta = 2pi/3, n = 2, k = 12
    CHECK(main_term_power(2, 12, 2.0 * kPi / 3.0) == doctest::Approx(12.0).epsilon(1e-12));
    // n = 3, k = 16 at pi/2: (2 + 2^{-8})^3 + 2 + 2^{-24}
    const double expect = std::pow(2.0 + std::pow(2.0, -8.0), 3) + 2.0 + std::pow(2.0, -24.0);
    CHECK(main_term_power(3, 16, kPi / 2.0) == doctest::Approx(expect).epsilon(1e-13));
    // the M_{2k} contribution at even-m theta_{2k} sample points is +2
    const auto pts = sample_points_for_weight(20);  // n=2, k=10
    for (const auto& s : pts) {
        if (s.odd) continue;
        const auto [m2k, n2k] = main_terms(20, s.theta);
        CHECK(m2k == doctest::Approx(2.0).epsilon(1e-12));
    }
}

TEST_CASE("remainder_bound_power constants") {
    CHECK(std::fabs(remainder_bound_power(2, 10) - 0.56875) < 1e-3);
    CHECK(std::fabs(remainder_bound_power(3, 16) - 0.17999) < 1e-3);
    // frozen direct evaluations
    CHECK(remainder_bound_power(2, 10) == doctest::Approx(0.56874706073).epsilon(1e-9));
    CHECK(remainder_bound_power(3, 16) == doctest::Approx(0.179981041341).epsilon(1e-9));
    CHECK(remainder_bound_power(2, 40) < 0.01);
    for (int k = 10; k < 60; k += 2)
        CHECK(remainder_bound_power(2, k + 2) < remainder_bound_power(2, k));
}

TEST_CASE("product form: identity, alternation, minus linearity") {
    const double th = kPi / 2.0;
    const double plus = g_product(12, 10, th, Sign::plus).real_part;
    const double f12 = f_k(12, th).real_part;
    const double f10 = f_k(10, th).real_part;
    const double f22 = f_k(22, th).real_part;
    CHECK(std::fabs(plus - (f12 * f10 + f22)) < 1e-10);

    for (const auto& s : sample_points_for_weight(22)) {
        const double v = g_product(12, 10, s.theta).real_part;
        if (s.odd)
            CHECK(v < 0.0);
        else
            CHECK(v > 0.0);
    }

    const double th2 = 0.6 * kPi;
    const double p2 = g_product(12, 10, th2, Sign::plus).real_part;
    const double m2 = g_product(12, 10, th2, Sign::minus).real_part;
    const double f22b = f_k(22, th2).real_part;
    CHECK(std::fabs((p2 - 2.0 * f22b) - m2) < 1e-10);
}

TEST_CASE("pq_split identities") {
    // P > 2 at even m
    for (const auto& s : sample_points_for_weight(22)) {
        const auto pq = pq_split(12, 10, s.m);
        if (!s.odd) CHECK(pq.p > 2.0);
    }
    // (-1)^m M_{k,l}(theta_m) = P + Q, (k,l) = (14,10)
    for (const auto& s : sample_points_for_weight(24)) {
        const auto pq = pq_split(14, 10, s.m);
        const double par = s.odd ? -1.0 : 1.0;
        const double m = main_term_product(14, 10, s.theta);
        CHECK(std::fabs(par * m - (pq.p + pq.q)) < 1e-12);
    }
    // M_k(theta_m) = (-1)^m M_l(theta_m) for (12,10)
    for (const auto& s : sample_points_for_weight(22)) {
        const double par = s.odd ? -1.0 : 1.0;
        const double mk = main_terms(12, s.theta).first;
        const double ml = main_terms(10, s.theta).first;
        CHECK(std::fabs(mk - par * ml) < 1e-12);
    }
    CHECK_THROWS_AS(pq_split(12, 10, 4), std::invalid_argument);  // m below w/4
}

TEST_CASE("remainder_bound_product values and monotonicity") {
    CHECK(std::fabs(remainder_bound_product(12, 10) - 0.39018) < 1e-3);
    CHECK(remainder_bound_product(12, 10) == doctest::Approx(0.390177492913).epsilon(1e-9));
    // direct evaluation at (40, 38); the decay brings it to the 1e-5 scale
    CHECK(remainder_bound_product(40, 38) == doctest::Approx(9.04488e-6).epsilon(1e-5));
    CHECK(remainder_bound_product(40, 38) < 1e-5);
    CHECK(remainder_bound_product(14, 10) < remainder_bound_product(12, 10));
    CHECK(remainder_bound_product(14, 12) < remainder_bound_product(14, 10));
}

TEST_CASE("reality on a dense grid") {
    const FormSpec forms[] = {FormSpec::single(12), FormSpec::single(38),
                              FormSpec::power(2, 10), FormSpec::power(3, 16),
                              FormSpec::product(12, 10), FormSpec::product(16, 14, Sign::minus)};
    for (const auto& form : forms) {
        for (int j = 0; j < 1000; ++j) {
            const double th =
                arc_theta_lo() + (arc_theta_hi() - arc_theta_lo()) * (j + 0.5) / 1000.0;
            const auto v = eval_form(form, th);
            CAPTURE(form.name());
            CAPTURE(th);
            CHECK(v.imag_leak <= 1e-8 * std::max(1.0, std::fabs(v.real_part)));
        }
    }
}

TEST_CASE("empirical remainder domination on the arc") {
    // |F_k - M_k - N_k| <= B(k) across the grid, a few representative weights
    for (int k : {10, 12, 24, 42, 60}) {
        const double bound = remainder_bound_single(k);
        for (int j = 0; j < 500; ++j) {
            const double th =
                arc_theta_lo() + (arc_theta_hi() - arc_theta_lo()) * (j + 0.5) / 500.0;
            const auto [m, n] = main_terms(k, th);
            CHECK(std::fabs(f_k(k, th).real_part - m - n) <= bound);
        }
    }
}

TEST_CASE("evaluator choice never moves an arc value by more than 1e-9") {
    // both sides of the internal q-expansion/lattice crossover
    for (int k : {12, 38, 40, 60}) {
        for (double th : {1.6, 1.9, 2.05}) {
            const UpperHalfPoint tau{std::cos(th), std::sin(th)};
            const auto qe = eval_qexp_auto(k, tau);
            const auto lat = eval_lattice(k, tau, 50);
            CHECK(std::abs(qe.value - lat.value) <=
                  1e-9 * std::max(1.0, std::abs(qe.value)));
            // and f_k itself agrees with either route through the prefactor
            const double direct = f_k(k, th).real_part;
            const double via_lattice = (std::polar(1.0, 0.5 * k * th) * lat.value).real();
            CHECK(std::fabs(direct - via_lattice) <= 1e-9 * std::max(1.0, std::fabs(direct)));
        }
    }
}

TEST_CASE("sample-point values clear the remainder envelope around zero") {
    // the counting mechanism: |F(theta_m)| > remainder bound
    const double bound = remainder_bound_power(3, 16);
    for (const auto& s : sample_points_for_weight(48))
        CHECK(std::fabs(f_power(3, 16, s.theta).real_part) > bound);
}

TEST_CASE("N is increasing at the sample points") {
    for (int w : {20, 30, 48, 120, 399 + 1}) {
        const auto pts = sample_points_for_weight(w);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const double a = main_terms(w, pts[i].theta).second;
            const double b = main_terms(w, pts[i + 1].theta).second;
            CHECK(b > a);
        }
    }
}
