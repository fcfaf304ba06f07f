#include "eisarc/eisenstein.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eisarc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kExactBernoulliMax = 64;

// z^e for e >= 0 by binary powering.
std::complex<double> ipow(std::complex<double> z, int e) {
    std::complex<double> r = 1.0;
    while (e > 0) {
        if (e & 1) r *= z;
        z *= z;
        e >>= 1;
    }
    return r;
}

double floor_bound(double b) {
    // exp() underflow would turn a valid tail bound into a claim of
    // exactness; 1e-300 is still a true upper bound there.
    return std::max(b, 1e-300);
}

// Accumulated-rounding allowance: the truncation tail alone can sit below
// one ulp of the partial sums, and the bound has to stay valid there. The
// k factor covers the power/exp amplification per term.
double rounding_slack(int k, double abs_accum) {
    return (32.0 + k) * std::numeric_limits<double>::epsilon() * abs_accum;
}

struct BernoulliTable {
    mpq_t b[kExactBernoulliMax + 1];  // B_0 .. B_64

    BernoulliTable() {
        for (auto& q : b) mpq_init(q);
        mpq_set_ui(b[0], 1, 1);
        mpz_t binom;
        mpz_init(binom);
        mpq_t term, acc;
        mpq_init(term);
        mpq_init(acc);
        // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m
        for (int m = 1; m <= kExactBernoulliMax; ++m) {
            mpq_set_ui(acc, 0, 1);
            for (int j = 0; j < m; ++j) {
                mpz_bin_uiui(binom, static_cast<unsigned>(m + 1), static_cast<unsigned>(j));
                mpq_set_z(term, binom);
                mpq_mul(term, term, b[j]);
                mpq_add(acc, acc, term);
            }
            mpq_set_si(term, -1, static_cast<unsigned>(m + 1));
            mpq_mul(b[m], acc, term);
            mpq_canonicalize(b[m]);
        }
        mpz_clear(binom);
        mpq_clear(term);
        mpq_clear(acc);
    }
};

const BernoulliTable& bernoulli_table() {
    static const BernoulliTable table;
    return table;
}

double log_abs_mpz(const mpz_t z) {
    long exp2 = 0;
    double d = mpz_get_d_2exp(&exp2, z);
    return std::log(std::fabs(d)) + static_cast<double>(exp2) * std::numbers::ln2;
}

// zeta(s) by direct summation, 64 terms.
double zeta_direct(double s) {
    double z = 0.0;
    for (int n = 64; n >= 1; --n) z += std::pow(static_cast<double>(n), -s);
    return z;
}

CoeffScale make_coeff_scale(int k) {
    CoeffScale cs;
    if (k <= kExactBernoulliMax) {
        const auto& tab = bernoulli_table();
        mpq_t c;
        mpq_init(c);
        mpq_set_si(c, -2L * k, 1);
        mpq_div(c, c, tab.b[k]);
        cs.value = mpq_get_d(c);
        cs.sign = mpq_sgn(c) >= 0 ? 1 : -1;
        cs.log_abs = log_abs_mpz(mpq_numref(c)) - log_abs_mpz(mpq_denref(c));
        mpq_clear(c);
    } else {
        // |B_k| = 2 k! zeta(k) / (2 pi)^k for even k
        const double log_bk = std::numbers::ln2 + std::lgamma(k + 1.0) +
                              std::log(zeta_direct(k)) - k * std::log(kTwoPi);
        cs.log_abs = std::log(2.0 * k) - log_bk;
        cs.sign = (k / 2) % 2 == 0 ? 1 : -1;  // sign of -2k/B_k
        cs.value = cs.sign * std::exp(cs.log_abs);
    }
    return cs;
}

// Tail of the q-series after N terms: |c_k| zeta(k-1) sum_{n>N} n^{k-1} x^n,
// bounded by a geometric majorant with ratio ((N+2)/(N+1))^{k-1} x.
double qexp_tail_bound(int k, double im, int n_terms) {
    const double t = k - 1.0;
    const double log_x = -kTwoPi * im;
    const double log_ratio = t * std::log((n_terms + 2.0) / (n_terms + 1.0)) + log_x;
    if (log_ratio >= 0.0) return std::numeric_limits<double>::infinity();
    const CoeffScale& cs = qexp_coefficient_log_scale(k);
    const double log_bound = cs.log_abs + std::log(zeta_upper(t)) +
                             t * std::log(n_terms + 1.0) + (n_terms + 1.0) * log_x -
                             std::log1p(-std::exp(log_ratio));
    if (log_bound > 700.0) return std::numeric_limits<double>::infinity();
    return floor_bound(std::exp(log_bound));
}

// Smallest eigenvalue of the Gram form |c tau + d|^2 on unit vectors.
double min_gram_eigenvalue(UpperHalfPoint tau) {
    const double n = tau.re * tau.re + tau.im * tau.im;
    const double disc = std::sqrt((n - 1.0) * (n - 1.0) + 4.0 * tau.re * tau.re);
    return 0.5 * ((n + 1.0) - disc);
}

double lattice_tail_bound(int k, UpperHalfPoint tau, int radius) {
    const double lambda = min_gram_eigenvalue(tau);
    if (!(lambda > 0.0)) return std::numeric_limits<double>::infinity();
    const double r0 = radius - std::numbers::sqrt2;
    const double log_r0 = std::log(r0);
    const double t1 = (2.0 - k) * log_r0 - std::log(k - 2.0);
    const double t2 = 0.5 * std::numbers::ln2 - std::numbers::ln2 + (1.0 - k) * log_r0 -
                      std::log(k - 1.0);  // log(sqrt(2)/2) = -ln2/2
    const double hi = std::max(t1, t2);
    const double log_bound = std::log(kPi) - 0.5 * k * std::log(lambda) + hi +
                             std::log1p(std::exp(std::min(t1, t2) - hi));
    if (log_bound > 700.0) return std::numeric_limits<double>::infinity();
    return floor_bound(std::exp(log_bound));
}

const std::vector<double>& log_sigma_table(int k, int n_terms) {
    thread_local std::map<int, std::vector<double>> cache;
    auto& tab = cache[k];
    for (int n = static_cast<int>(tab.size()) + 1; n <= n_terms; ++n)
        tab.push_back(log_sigma(k - 1, n));
    return tab;
}

}  // namespace

void validate_weight(int k) {
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("weight must be an even integer >= 4, got " +
                                    std::to_string(k));
}

std::pair<std::string, std::string> bernoulli_rational(int k) {
    if (k < 0 || k > kExactBernoulliMax)
        throw std::invalid_argument("bernoulli_rational supports 0 <= k <= 64");
    const auto& tab = bernoulli_table();
    char* num = mpz_get_str(nullptr, 10, mpq_numref(tab.b[k]));
    char* den = mpz_get_str(nullptr, 10, mpq_denref(tab.b[k]));
    std::pair<std::string, std::string> out{num, den};
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(num, std::strlen(num) + 1);
    freefunc(den, std::strlen(den) + 1);
    return out;
}

const CoeffScale& qexp_coefficient_log_scale(int k) {
    validate_weight(k);
    static std::map<int, CoeffScale> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, make_coeff_scale(k)).first;
    return it->second;
}

double qexp_coefficient_scale(int k) { return qexp_coefficient_log_scale(k).value; }

double log_sigma(int power, int n) {
    if (n < 1) throw std::invalid_argument("log_sigma needs n >= 1");
    // sigma_p(n) = n^p * sum_{d|n} (d/n)^p, summed smallest-first
    const double logn = std::log(static_cast<double>(n));
    double rest = 0.0;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        const int e = n / d;
        if (d < n) rest += std::exp(power * (std::log(static_cast<double>(d)) - logn));
        if (e != d && e < n) rest += std::exp(power * (std::log(static_cast<double>(e)) - logn));
    }
    return power * logn + std::log1p(rest);
}

double zeta_upper(double s) {
    return zeta_direct(s) + std::pow(64.0, 1.0 - s) / (s - 1.0);
}

SeriesValue eval_lattice(int k, UpperHalfPoint tau, int radius) {
    validate_weight(k);
    if (!(tau.im > 0.0)) throw std::invalid_argument("eval_lattice requires Im(tau) > 0");
    if (radius < 2) throw std::invalid_argument("eval_lattice requires radius >= 2");

    const std::complex<double> t(tau.re, tau.im);
    const long r2 = static_cast<long>(radius) * radius;
    std::complex<double> sum = 1.0;  // (c, d) = (0, 1)
    double abs_accum = 1.0;
    for (long c = 1; c <= radius; ++c) {
        const long dmax = static_cast<long>(std::sqrt(static_cast<double>(r2 - c * c)));
        const std::complex<double> ct = static_cast<double>(c) * t;
        for (long d = -dmax; d <= dmax; ++d) {
            if (std::gcd(c, std::abs(d)) != 1) continue;
            const std::complex<double> term = ipow(1.0 / (ct + static_cast<double>(d)), k);
            sum += term;
            abs_accum += std::abs(term);
        }
    }
    return {sum, lattice_tail_bound(k, tau, radius) + rounding_slack(k, abs_accum)};
}

SeriesValue eval_qexp(int k, UpperHalfPoint tau, int n_terms) {
    validate_weight(k);
    if (!(tau.im >= 0.5))
        throw std::invalid_argument("eval_qexp requires Im(tau) >= 0.5; use eval_lattice below");
    if (n_terms < 1) throw std::invalid_argument("eval_qexp requires n_terms >= 1");

    const CoeffScale& cs = qexp_coefficient_log_scale(k);
    const double log_q = -kTwoPi * tau.im;
    const double phi = kTwoPi * (tau.re - std::round(tau.re));
    const auto& logsig = log_sigma_table(k, n_terms);

    std::complex<double> sum = 1.0;
    double abs_accum = 1.0;
    for (int n = 1; n <= n_terms; ++n) {
        const double mag = cs.sign * std::exp(cs.log_abs + logsig[n - 1] + n * log_q);
        sum += mag * std::polar(1.0, n * phi);
        abs_accum += std::fabs(mag);
    }
    return {sum, qexp_tail_bound(k, tau.im, n_terms) + rounding_slack(k, abs_accum)};
}

SeriesValue eval_qexp_auto(int k, UpperHalfPoint tau) {
    validate_weight(k);
    if (!(tau.im >= 0.5))
        throw std::invalid_argument("eval_qexp requires Im(tau) >= 0.5; use eval_lattice below");

    const CoeffScale& cs = qexp_coefficient_log_scale(k);
    const double log_q = -kTwoPi * tau.im;
    const double phi = kTwoPi * (tau.re - std::round(tau.re));
    const int cap = 200;
    const auto& logsig = log_sigma_table(k, cap);

    std::complex<double> sum = 1.0;
    double abs_accum = 1.0;
    double bound = std::numeric_limits<double>::infinity();
    int n = 0;
    while (n < cap) {
        ++n;
        const double mag = cs.sign * std::exp(cs.log_abs + logsig[n - 1] + n * log_q);
        sum += mag * std::polar(1.0, n * phi);
        abs_accum += std::fabs(mag);
        bound = qexp_tail_bound(k, tau.im, n);
        if (bound < 1e-14 * std::abs(sum)) break;
    }
    return {sum, bound + rounding_slack(k, abs_accum)};
}

std::complex<double> eisenstein_on_circle(int k, double theta) {
    const UpperHalfPoint tau{std::cos(theta), std::sin(theta)};
    if (k < 40) return eval_qexp_auto(k, tau).value;
    int radius = 5;
    while (radius < 40 && lattice_tail_bound(k, tau, radius) > 1e-15) radius += 2;
    return eval_lattice(k, tau, radius).value;
}

}  // namespace eisarc
