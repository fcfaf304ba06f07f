#ifndef EISARC_SAMPLE_GRID_HPP
#define EISARC_SAMPLE_GRID_HPP

#include <vector>

#include "eisarc/arc_functions.hpp"

namespace eisarc {

/// weight = 12 n + s with s in {0, 4, 6, 8, 10, 14}; the decomposition that
/// fixes the forced vanishing orders at i and rho.
struct WeightDecomposition {
    int weight = 0;
    int n = 0;
    int s = 0;
};

/// k = (12/n) l_n + s_n, s_n even in {0, ..., 12/n - 2}.
struct PowerDecomposition {
    int k = 0;
    int n = 0;
    int l_n = 0;
    int s_n = 0;
};

struct SamplePoint {
    int m = 0;
    double theta = 0.0;
    bool odd = false;
};

WeightDecomposition decompose_weight(int weight);
PowerDecomposition decompose_power(int k, int n);

/// All integers m with theta_m = 2 m pi / weight in [pi/2, 2pi/3], i.e.
/// m in [weight/4, weight/3], decided by exact integer comparison.
std::vector<SamplePoint> sample_points_for_weight(int weight);
std::vector<SamplePoint> sample_points(const FormSpec& form);

/// Largest odd integer in [weight/4, weight/3] via the closed form
/// weight/3 - (3 + r)/3, weight = 6q + r, r in {-2, 0, 2}. Needs weight >= 12.
int largest_odd_sample_index(int weight);

/// Closed form for the power grids: n = 2 uses the weight-2k rule above,
/// n = 3 gives k - 1.
int m_odd_power(int k, int n);

/// theta* of the product-form casework: the largest angle in the case's
/// interval where M_l is still <= 0 (cases 0 and 2 mod 6), or the interval
/// split point (case 4 mod 6).
double theta_star(int l, int residue_case);

/// Sample-point count the counting argument predicts: interior budget + 1.
int expected_count(const FormSpec& form);

}  // namespace eisarc

#endif
