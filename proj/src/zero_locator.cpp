#include "eisarc/zero_locator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eisarc {

namespace {

constexpr double kBracketWidthTarget = 1e-12;
constexpr int kMaxBisectIter = 80;

int sgn(double x) { return (x > 0.0) - (x < 0.0); }

// A bracket is degenerate when the function sits at noise level across the
// whole of it; bisection signs mean nothing there.
bool bracket_stalled(const std::function<double(double)>& f, const Bracket& b,
                     double noise_floor) {
    const double w = b.hi - b.lo;
    double m = std::max(std::fabs(b.f_lo), std::fabs(b.f_hi));
    for (double frac : {0.25, 0.5, 0.75}) m = std::max(m, std::fabs(f(b.lo + frac * w)));
    return m <= noise_floor;
}

// Plain bisection; sign validity is what the counting argument rests on, so
// no secant/Brent acceleration.
std::pair<double, double> bisect(const std::function<double(double)>& f, double lo,
                                 double hi, double f_lo) {
    int s_lo = sgn(f_lo);
    for (int it = 0; it < kMaxBisectIter && hi - lo > kBracketWidthTarget; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return {mid, 0.0};
        if (sgn(fm) == s_lo)
            lo = mid;
        else
            hi = mid;
    }
    return {0.5 * (lo + hi), hi - lo};
}

}  // namespace

int ScanReport::interior_count() const {
    int c = 0;
    for (const auto& z : zeros)
        if (z.note == MultiplicityNote::simple) ++c;
    return c;
}

std::vector<Bracket> grid_sign_scan(const std::function<double(double)>& f, double lo,
                                    double hi, int cells) {
    if (cells < 2) throw std::invalid_argument("grid_sign_scan needs at least 2 cells");
    std::vector<Bracket> brackets;
    const double step = (hi - lo) / cells;
    double prev_t = lo + 0.5 * step;
    double prev_f = f(prev_t);
    for (int j = 1; j < cells; ++j) {
        const double t = lo + (j + 0.5) * step;
        const double ft = f(t);
        if (sgn(prev_f) * sgn(ft) < 0) brackets.push_back({prev_t, t, prev_f, ft});
        prev_t = t;
        prev_f = ft;
    }
    return brackets;
}

ScanReport scan_function(const std::function<double(double)>& f, int weight,
                         int expected_zero_count, int fallback_grid) {
    const auto samples = sample_points_for_weight(weight);
    std::vector<double> fv(samples.size());
    double scale = 1.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        fv[i] = f(samples[i].theta);
        scale = std::max(scale, std::fabs(fv[i]));
    }
    const double noise_floor = 1e-12 * scale;

    std::vector<Bracket> brackets;
    bool unreliable = false;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        if (std::fabs(fv[i]) < noise_floor || std::fabs(fv[i + 1]) < noise_floor)
            unreliable = true;
        if (sgn(fv[i]) * sgn(fv[i + 1]) < 0)
            brackets.push_back({samples[i].theta, samples[i + 1].theta, fv[i], fv[i + 1]});
    }

    ScanReport report;
    const int needed = expected_zero_count > 0 ? expected_zero_count - 1 : 0;
    if (unreliable || static_cast<int>(brackets.size()) < needed) {
        brackets = grid_sign_scan(f, arc_theta_lo(), arc_theta_hi(), fallback_grid);
        report.fallback_grid_used = true;
    }

    for (const auto& b : brackets) {
        if (bracket_stalled(f, b, noise_floor)) {
            report.stalled.push_back(b);
            continue;
        }
        const auto [theta, width] = bisect(f, b.lo, b.hi, b.f_lo);
        ZeroRecord rec;
        rec.theta_hat = theta;
        rec.tau_hat = std::polar(1.0, theta);
        rec.residual = std::fabs(f(theta));
        rec.bracket_width = width;
        if (theta - arc_theta_lo() < kEndpointExclusionRadius ||
            arc_theta_hi() - theta < kEndpointExclusionRadius)
            rec.note = MultiplicityNote::endpoint_forced;
        report.zeros.push_back(rec);
    }
    std::sort(report.zeros.begin(), report.zeros.end(),
              [](const ZeroRecord& a, const ZeroRecord& b) { return a.theta_hat < b.theta_hat; });
    return report;
}

ScanReport scan_and_refine(const FormSpec& form) {
    form.validate();
    auto f = [&form](double theta) { return eval_form(form, theta).real_part; };
    return scan_function(f, form.weight(), expected_count(form));
}

LeftBoundaryScan locate_left_boundary(int k, int l, double y_max) {
    validate_weight(k);
    validate_weight(l);
    if (!(k > l && l >= 14))
        throw std::invalid_argument("left-boundary scan needs k > l >= 14");
    if (!(y_max >= 2.0)) throw std::invalid_argument("left-boundary scan needs y_max >= 2");

    auto g = [k, l](double y) {
        const UpperHalfPoint tau{-0.5, y};
        const std::complex<double> v = eval_qexp_auto(k, tau).value * eval_qexp_auto(l, tau).value -
                                       eval_qexp_auto(k + l, tau).value;
        const double scale = std::max(1.0, std::fabs(v.real()));
        if (std::fabs(v.imag()) > 1e-10 * scale)
            throw std::runtime_error("left-boundary restriction is not numerically real");
        return v.real();
    };

    const double y_lo = std::sqrt(3.0) / 2.0 + kEndpointExclusionRadius;  // rho excluded
    const int points = 2048;
    const double step = (y_max - y_lo) / (points - 1);

    LeftBoundaryScan out;
    std::vector<Bracket> brackets;
    double prev_y = y_lo, prev_g = g(y_lo);
    for (int j = 1; j < points; ++j) {
        const double y = y_lo + j * step;
        const double gy = g(y);
        if (sgn(prev_g) * sgn(gy) < 0) {
            brackets.push_back({prev_y, y, prev_g, gy});
            if (j >= points - points / 10) out.y_max_warning = true;
        }
        prev_y = y;
        prev_g = gy;
    }

    for (const auto& b : brackets) {
        const auto [y, width] = bisect(g, b.lo, b.hi, b.f_lo);
        BoundaryZeroRecord rec;
        rec.y_hat = y;
        rec.tau_hat = {-0.5, y};
        rec.residual = std::fabs(g(y));
        rec.bracket_width = width;
        out.zeros.push_back(rec);
    }
    return out;
}

LeftBoundaryScan locate_left_boundary(const FormSpec& form, double y_max) {
    form.validate();
    if (form.kind != FormKind::product_sum || form.sign != Sign::minus)
        throw std::invalid_argument("left-boundary scan applies to the minus product form only");
    return locate_left_boundary(form.k, form.l, y_max);
}

bool in_fundamental_domain(UpperHalfPoint tau) {
    const double n = tau.re * tau.re + tau.im * tau.im;
    if (tau.re > 0.0) return n > 1.0 && tau.re < 0.5;
    return n >= 1.0 && tau.re >= -0.5;
}

ReducedPoint reduce_to_fundamental_domain(UpperHalfPoint tau) {
    if (!(tau.im > 0.0)) throw std::invalid_argument("reduction needs Im(tau) > 0");
    long long a = 1, b = 0, c = 0, d = 1;
    double re = tau.re, im = tau.im;
    for (int iter = 0; iter < 4096; ++iter) {
        if (in_fundamental_domain({re, im})) return {{re, im}, {a, b, c, d}};
        const double shift = std::floor(re + 0.5);  // to Re in [-1/2, 1/2)
        if (shift != 0.0) {
            const long long s = static_cast<long long>(shift);
            re -= shift;
            a -= s * c;
            b -= s * d;
            continue;
        }
        // tau -> -1/tau; also flips |tau| = 1, Re > 0 onto the closed left arc
        const double n = re * re + im * im;
        const double new_re = -re / n;
        const double new_im = im / n;
        re = new_re;
        im = new_im;
        const long long na = -c, nb = -d;
        c = a;
        d = b;
        a = na;
        b = nb;
    }
    throw std::logic_error("fundamental-domain reduction exceeded the iteration cap");
}

}  // namespace eisarc
