#ifndef EISARC_EISENSTEIN_HPP
#define EISARC_EISENSTEIN_HPP

#include <complex>
#include <vector>

namespace eisarc {

/// A point in the upper half plane (im > 0 enforced by the operations).
struct UpperHalfPoint {
    double re = 0.0;
    double im = 1.0;
};

/// Result of a truncated series evaluation together with a rigorous
/// truncation bound for the dropped tail.
struct SeriesValue {
    std::complex<double> value;
    double abs_error_bound = 0.0;
};

/// Normalization multiplier of the q-expansion, -2k/B_k, kept both as a
/// plain double and in sign/log form so it stays usable when the double
/// under- or overflows.
struct CoeffScale {
    double value = 0.0;
    double log_abs = 0.0;
    int sign = 1;
};

// Throws std::invalid_argument unless k is even and >= 4.
void validate_weight(int k);

// Exact Bernoulli number B_k as a decimal-string pair (num, den), valid for
// 0 <= k <= 64 where the rational recurrence is evaluated exactly.
std::pair<std::string, std::string> bernoulli_rational(int k);

// -2k/B_k. Exact rational arithmetic for k <= 64, log-space Stirling/zeta
// form beyond.
double qexp_coefficient_scale(int k);
const CoeffScale& qexp_coefficient_log_scale(int k);

// log sigma_{k-1}(n), evaluated as a log-sum over divisors.
double log_sigma(int power, int n);

// Upper bound for zeta(s), s >= 2 (64 terms plus an integral-test tail).
double zeta_upper(double s);

/// Truncated coprime lattice sum over the disc c^2 + d^2 <= radius^2.
/// The bound is an integral-test tail estimate; the actual truncation error
/// is typically far smaller because the angular average of (c tau + d)^-k
/// over large circles vanishes.
SeriesValue eval_lattice(int k, UpperHalfPoint tau, int radius = 50);

/// Truncated q-expansion 1 + c_k sum sigma_{k-1}(n) q^n, n <= n_terms.
/// Requires im >= 0.5. Terms are assembled in log space so sigma and c_k
/// never overflow separately.
SeriesValue eval_qexp(int k, UpperHalfPoint tau, int n_terms);

/// q-expansion with the built-in term-count rule: smallest N whose tail
/// majorant drops below 1e-14 of the partial sum, capped at 200.
SeriesValue eval_qexp_auto(int k, UpperHalfPoint tau);

// E_k(e^{i theta}) for theta on the lower boundary arc. Picks the evaluator
// per weight: q-expansion for small k, lattice sum once binary64 rounding of
// the q-series (which grows like (1/sin theta)^k) would dominate.
std::complex<double> eisenstein_on_circle(int k, double theta);

} // namespace eisarc

#endif
