#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eisarc/sample_grid.hpp"

using namespace eisarc;

namespace {
constexpr double kPi = std::numbers::pi;

// enumeration oracle: largest odd m with theta_m in [pi/2, 2pi/3]
int m_odd_enumerated(int weight) {
    int best = -1;
    for (int m = 0; m <= weight; ++m)
        if (4 * m >= weight && 3 * m <= weight && m % 2 != 0) best = m;
    return best;
}
}  // namespace

TEST_CASE("decompose_weight basics and round trip") {
    const auto d12 = decompose_weight(12);
    CHECK(d12.n == 1);
    CHECK(d12.s == 0);
    const auto d26 = decompose_weight(26);
    CHECK(d26.n == 1);
    CHECK(d26.s == 14);
    const auto d20 = decompose_weight(20);
    CHECK(d20.n == 1);
    CHECK(d20.s == 8);

    for (int w = 4; w <= 400; w += 2) {
        const auto d = decompose_weight(w);
        CHECK(12 * d.n + d.s == w);
        CHECK((d.s == 0 || d.s == 4 || d.s == 6 || d.s == 8 || d.s == 10 || d.s == 14));
        CHECK(d.n >= 0);
    }
    CHECK_THROWS_AS(decompose_weight(7), std::invalid_argument);
}

TEST_CASE("decompose_power") {
    const auto a = decompose_power(10, 2);
    CHECK(a.l_n == 1);
    CHECK(a.s_n == 4);
    const auto b = decompose_power(16, 3);
    CHECK(b.l_n == 4);
    CHECK(b.s_n == 0);
    const auto c = decompose_power(12, 2);
    CHECK(c.l_n == 2);
    CHECK(c.s_n == 0);
    CHECK_THROWS_AS(decompose_power(12, 4), std::invalid_argument);

    for (int k = 4; k <= 400; k += 2) {
        for (int n : {2, 3}) {
            const auto d = decompose_power(k, n);
            CHECK((12 / n) * d.l_n + d.s_n == k);
            CHECK(d.s_n >= 0);
            CHECK(d.s_n <= 12 / n - 2);
        }
    }
}

TEST_CASE("sample points: membership, order, endpoints") {
    const auto single12 = sample_points(FormSpec::single(12));
    REQUIRE(single12.size() == 2);
    CHECK(single12[0].m == 3);
    CHECK(single12[1].m == 4);
    CHECK(single12[0].theta == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(single12[1].theta == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-15));

    const auto p = sample_points(FormSpec::power(2, 10));
    REQUIRE(p.size() == 2);
    CHECK(p[0].m == 5);
    CHECK(p[1].m == 6);

    const auto g = sample_points(FormSpec::product(12, 10));
    REQUIRE(g.size() == 2);
    CHECK(g[0].m == 6);
    CHECK(g[1].m == 7);

    for (int w = 4; w <= 400; w += 2) {
        const auto pts = sample_points_for_weight(w);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            CHECK(4 * pts[i].m >= w);
            CHECK(3 * pts[i].m <= w);
            if (i) CHECK(pts[i].m == pts[i - 1].m + 1);
            CHECK(pts[i].odd == (pts[i].m % 2 != 0));
        }
    }
}

TEST_CASE("expected_count equals enumeration for all even weights in [4, 400]") {
    CHECK(expected_count(FormSpec::single(24)) == 3);
    CHECK(expected_count(FormSpec::power(3, 16)) == 5);
    CHECK(expected_count(FormSpec::product(14, 10)) == 3);
    for (int w = 4; w <= 400; w += 2)
        CHECK(static_cast<int>(sample_points_for_weight(w).size()) ==
              decompose_weight(w).n + 1);
}

TEST_CASE("m_odd closed forms vs enumeration") {
    CHECK(m_odd_power(12, 2) == 7);
    CHECK(m_odd_power(10, 2) == 5);
    CHECK(largest_odd_sample_index(22) == 7);
    for (int k = 10; k <= 400; k += 2) CHECK(m_odd_power(k, 2) == m_odd_enumerated(2 * k));
    for (int w = 22; w <= 400; w += 2) CHECK(largest_odd_sample_index(w) == m_odd_enumerated(w));
    // n = 3: the largest odd integer in [3k/4, k] is k - 1
    for (int k = 16; k <= 132; k += 2) CHECK(m_odd_power(k, 3) == m_odd_enumerated(3 * k));
}

TEST_CASE("theta_star closed forms") {
    // l = 12: 2pi/3 - pi/12, where M_12 hits zero from below
    const double t12 = theta_star(12, 0);
    CHECK(t12 == doctest::Approx(2.0 * kPi / 3.0 - kPi / 12.0).epsilon(1e-15));
    CHECK(std::fabs(2.0 * std::cos(6.0 * t12)) < 1e-12);
    // l = 14: 2pi/3 - 7pi/42 = pi/2, M_14(pi/2) = 0
    const double t14 = theta_star(14, 2);
    CHECK(t14 == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(std::fabs(2.0 * std::cos(7.0 * t14)) < 1e-12);
    // l = 10: the interval split point 2pi/3 - pi/15
    CHECK(theta_star(10, 4) == doctest::Approx(2.0 * kPi / 3.0 - kPi / 15.0).epsilon(1e-15));

    CHECK_THROWS_AS(theta_star(12, 2), std::invalid_argument);
    CHECK_THROWS_AS(theta_star(12, 1), std::invalid_argument);
    CHECK_THROWS_AS(theta_star(8, 2), std::invalid_argument);
}
