#ifndef EISARC_ZERO_LOCATOR_HPP
#define EISARC_ZERO_LOCATOR_HPP

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "eisarc/sample_grid.hpp"

namespace eisarc {

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    double f_lo = 0.0;
    double f_hi = 0.0;
};

enum class MultiplicityNote { simple, endpoint_forced };

struct ZeroRecord {
    double theta_hat = 0.0;
    std::complex<double> tau_hat;
    double residual = 0.0;
    double bracket_width = 0.0;
    MultiplicityNote note = MultiplicityNote::simple;
};

struct ScanReport {
    std::vector<ZeroRecord> zeros;     // sorted by theta_hat
    std::vector<Bracket> stalled;      // brackets where bisection lost the sign
    bool fallback_grid_used = false;

    int interior_count() const;        // zeros away from the elliptic endpoints
};

struct BoundaryZeroRecord {
    double y_hat = 0.0;
    std::complex<double> tau_hat;      // -1/2 + i y_hat
    double residual = 0.0;
    double bracket_width = 0.0;
};

struct LeftBoundaryScan {
    std::vector<BoundaryZeroRecord> zeros;
    bool y_max_warning = false;        // sign still changing near y_max
};

struct ReducedPoint {
    UpperHalfPoint tau;
    std::array<long long, 4> matrix;   // (a, b, c, d), det = 1
};

// Zeros inside an arbitrary endpoint window are flagged endpoint_forced and
// excluded from interior counts; they belong to the elliptic-order budget.
constexpr double kEndpointExclusionRadius = 1e-6;

/// Sign scan at the sample points of `weight`, bisection refinement of each
/// sign change; falls back to a uniform 4096-cell grid when the sample scan
/// undershoots the expected bracket count or a sample value sits at noise
/// level.
ScanReport scan_function(const std::function<double(double)>& f, int weight,
                         int expected_zero_count, int fallback_grid = 4096);

ScanReport scan_and_refine(const FormSpec& form);

/// Sign-scan of the sample-point gaps of a real function on [lo, hi] using
/// cell midpoints, for cross-checks against the bracketed set.
std::vector<Bracket> grid_sign_scan(const std::function<double(double)>& f, double lo,
                                    double hi, int cells);

/// Zeros of (E_k E_l - E_{k+l})(-1/2 + iy) on (sqrt(3)/2, y_max]. The
/// restriction is real (real q-coefficients, q real negative); the imaginary
/// part is checked, not assumed.
LeftBoundaryScan locate_left_boundary(int k, int l, double y_max = 4.0);
LeftBoundaryScan locate_left_boundary(const FormSpec& form, double y_max = 4.0);

/// Translation/inversion reduction into the standard fundamental domain,
/// boundary convention |tau| >= 1, -1/2 <= Re <= 0 closed on the left side.
ReducedPoint reduce_to_fundamental_domain(UpperHalfPoint tau);

bool in_fundamental_domain(UpperHalfPoint tau);

}  // namespace eisarc

#endif
