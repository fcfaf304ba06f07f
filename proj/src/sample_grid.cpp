#include "eisarc/sample_grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace eisarc {

namespace {
constexpr double kPi = std::numbers::pi;
}

WeightDecomposition decompose_weight(int weight) {
    validate_weight(weight);
    WeightDecomposition d;
    d.weight = weight;
    d.s = weight % 12;
    d.n = weight / 12;
    if (d.s == 2) {  // 2 is not in the s-set; borrow from n (s = 14)
        d.s = 14;
        d.n -= 1;
    }
    return d;
}

PowerDecomposition decompose_power(int k, int n) {
    validate_weight(k);
    if (n != 2 && n != 3) throw std::invalid_argument("decompose_power needs n in {2, 3}");
    const int base = 12 / n;
    PowerDecomposition d;
    d.k = k;
    d.n = n;
    d.s_n = k % base;
    d.l_n = k / base;
    return d;
}

std::vector<SamplePoint> sample_points_for_weight(int weight) {
    validate_weight(weight);
    std::vector<SamplePoint> pts;
    const int m_lo = (weight + 3) / 4;  // ceil(weight/4)
    const int m_hi = weight / 3;        // floor(weight/3)
    for (int m = m_lo; m <= m_hi; ++m)
        pts.push_back({m, 2.0 * kPi * m / weight, m % 2 != 0});
    return pts;
}

std::vector<SamplePoint> sample_points(const FormSpec& form) {
    form.validate();
    return sample_points_for_weight(form.weight());
}

int largest_odd_sample_index(int weight) {
    validate_weight(weight);
    if (weight < 12)
        throw std::invalid_argument("largest_odd_sample_index needs weight >= 12");
    int r = weight % 6;  // map to {-2, 0, 2}
    if (r == 4) r = -2;
    return (weight - (3 + r)) / 3;
}

int m_odd_power(int k, int n) {
    validate_weight(k);
    if (n == 2) return largest_odd_sample_index(2 * k);
    if (n == 3) return k - 1;
    throw std::invalid_argument("m_odd_power needs n in {2, 3}");
}

double theta_star(int l, int residue_case) {
    validate_weight(l);
    if (l < 10) throw std::invalid_argument("theta_star needs l >= 10");
    if (residue_case != 0 && residue_case != 2 && residue_case != 4)
        throw std::invalid_argument("theta_star residue_case must be 0, 2 or 4");
    if (l % 6 != residue_case)
        throw std::invalid_argument("residue_case " + std::to_string(residue_case) +
                                    " does not match l = " + std::to_string(l) + " (mod 6)");
    const double two_thirds = 2.0 * kPi / 3.0;
    switch (residue_case) {
        case 0: return two_thirds - kPi / l;
        case 2: return two_thirds - 7.0 * kPi / (3.0 * l);
        default: return two_thirds - 2.0 * kPi / (3.0 * l);
    }
}

int expected_count(const FormSpec& form) {
    form.validate();
    return decompose_weight(form.weight()).n + 1;
}

}  // namespace eisarc
