#include "eisarc/arc_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace eisarc {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLo = kPi / 2.0;
const double kHi = 2.0 * kPi / 3.0;
constexpr double kAngleSlack = 1e-12;

ArcValue to_arc_value(std::complex<double> z) { return {z.real(), std::fabs(z.imag())}; }

double binomial(int n, int i) {
    double r = 1.0;
    for (int j = 1; j <= i; ++j) r = r * (n - i + j) / j;
    return r;
}

}  // namespace

double arc_theta_lo() { return kLo; }
double arc_theta_hi() { return kHi; }

void validate_arc_angle(double theta) {
    if (!(theta >= kLo - kAngleSlack && theta <= kHi + kAngleSlack))
        throw std::invalid_argument("theta outside the arc [pi/2, 2pi/3]: " +
                                    std::to_string(theta));
}

FormSpec FormSpec::single(int k) {
    FormSpec f;
    f.kind = FormKind::single;
    f.k = k;
    f.validate();
    return f;
}

FormSpec FormSpec::power(int n, int k) {
    FormSpec f;
    f.kind = FormKind::power_sum;
    f.n = n;
    f.k = k;
    f.validate();
    return f;
}

FormSpec FormSpec::product(int k, int l, Sign sign) {
    FormSpec f;
    f.kind = FormKind::product_sum;
    f.k = k;
    f.l = l;
    f.sign = sign;
    f.validate();
    return f;
}

int FormSpec::weight() const {
    switch (kind) {
        case FormKind::single: return k;
        case FormKind::power_sum: return n * k;
        case FormKind::product_sum: return k + l;
    }
    return 0;
}

void FormSpec::validate() const {
    switch (kind) {
        case FormKind::single:
            validate_weight(k);
            return;
        case FormKind::power_sum:
            validate_weight(k);
            if (n == 2) {
                if (k < 10)
                    throw std::invalid_argument("power-sum form needs k >= 10 when n = 2");
            } else if (n == 3) {
                if (k < 16)
                    throw std::invalid_argument("power-sum form needs k >= 16 when n = 3");
            } else {
                throw std::invalid_argument("power-sum form needs n in {2, 3}");
            }
            return;
        case FormKind::product_sum:
            validate_weight(l);
            validate_weight(k);
            if (!(k > l && l >= 10))
                throw std::invalid_argument("product-sum form needs k > l >= 10");
            return;
    }
    throw std::invalid_argument("unknown form kind");
}

std::string FormSpec::name() const {
    switch (kind) {
        case FormKind::single: return "E_" + std::to_string(k);
        case FormKind::power_sum:
            return "E_" + std::to_string(k) + "^" + std::to_string(n) + "+E_" +
                   std::to_string(n * k);
        case FormKind::product_sum:
            return "E_" + std::to_string(k) + "*E_" + std::to_string(l) +
                   (sign == Sign::plus ? "+" : "-") + "E_" + std::to_string(k + l);
    }
    return "?";
}

ArcValue f_k(int k, double theta) {
    validate_weight(k);
    validate_arc_angle(theta);
    return to_arc_value(std::polar(1.0, 0.5 * k * theta) * eisenstein_on_circle(k, theta));
}

std::pair<double, double> main_terms(int k, double theta) {
    validate_weight(k);
    validate_arc_angle(theta);
    const double m = 2.0 * std::cos(0.5 * k * theta);
    const double n = std::pow(2.0 * std::cos(0.5 * theta), -k);
    return {m, n};
}

double remainder_bound_single(int k) {
    validate_weight(k);
    const double kd = k;
    return std::pow(0.5, kd / 2.0) + 4.0 * std::pow(0.4, kd / 2.0) +
           (20.0 * std::numbers::sqrt2 / (kd - 3.0)) * std::pow(2.0 / 9.0, (kd - 3.0) / 2.0);
}

ArcValue f_power_general(int n, int k, double theta) {
    validate_weight(k);
    validate_arc_angle(theta);
    if (n < 2) throw std::invalid_argument("power form needs n >= 2");
    const std::complex<double> ek = eisenstein_on_circle(k, theta);
    const std::complex<double> enk = eisenstein_on_circle(n * k, theta);
    std::complex<double> p = ek;
    for (int i = 1; i < n; ++i) p *= ek;
    return to_arc_value(std::polar(1.0, 0.5 * n * k * theta) * (p + enk));
}

ArcValue f_power(int n, int k, double theta) {
    FormSpec::power(n, k);  // contract check
    return f_power_general(n, k, theta);
}

double power_main_term_general(int n, int k, double theta) {
    const auto [mk, nk] = main_terms(k, theta);
    const auto [mnk, nnk] = main_terms(n * k, theta);
    return std::pow(mk + nk, n) + mnk + nnk;
}

double main_term_power(int n, int k, double theta) {
    if (n != 2 && n != 3) throw std::invalid_argument("main_term_power needs n in {2, 3}");
    validate_weight(k);
    return power_main_term_general(n, k, theta);
}

double power_remainder_bound_general(int n, int k) {
    validate_weight(k);
    if (n < 2) throw std::invalid_argument("power remainder bound needs n >= 2");
    const double b = remainder_bound_single(k);
    double s = 0.0;
    for (int i = 1; i <= n - 1; ++i) s += binomial(n, i) * std::pow(3.0, i) * std::pow(b, n - i);
    return s + std::pow(b, n) + remainder_bound_single(n * k);
}

double remainder_bound_power(int n, int k) {
    FormSpec::power(n, k);
    return power_remainder_bound_general(n, k);
}

ArcValue g_product(int k, int l, double theta, Sign sign) {
    FormSpec::product(k, l, sign);
    validate_arc_angle(theta);
    const std::complex<double> ek = eisenstein_on_circle(k, theta);
    const std::complex<double> el = eisenstein_on_circle(l, theta);
    const std::complex<double> ekl = eisenstein_on_circle(k + l, theta);
    const double s = sign == Sign::plus ? 1.0 : -1.0;
    return to_arc_value(std::polar(1.0, 0.5 * (k + l) * theta) * (ek * el + s * ekl));
}

double main_term_product(int k, int l, double theta) {
    FormSpec::product(k, l);
    const auto [mk, nk] = main_terms(k, theta);
    const auto [ml, nl] = main_terms(l, theta);
    const auto [mkl, nkl] = main_terms(k + l, theta);
    return (mk + nk) * (ml + nl) + mkl + nkl;
}

PQSplit pq_split(int k, int l, int m) {
    FormSpec::product(k, l);
    const int w = k + l;
    if (!(4 * m >= w && 3 * m <= w))
        throw std::invalid_argument("sample index m outside [w/4, w/3] for w = " +
                                    std::to_string(w));
    const double theta = 2.0 * kPi * m / w;
    const double par = (m % 2 == 0) ? 1.0 : -1.0;
    const auto [mk, nk] = main_terms(k, theta);
    const auto [ml, nl] = main_terms(l, theta);
    const auto [mkl, nkl] = main_terms(w, theta);
    (void)mk;
    (void)mkl;
    PQSplit out;
    out.p = 2.0 + 2.0 * par * nkl;
    out.q = ml * ml + ml * (nl + par * nk);
    return out;
}

double remainder_bound_product(int k, int l) {
    FormSpec::product(k, l);
    const double bk = remainder_bound_single(k);
    const double bl = remainder_bound_single(l);
    return 3.0 * bl + 3.0 * bk + bk * bl + remainder_bound_single(k + l);
}

ArcValue eval_form(const FormSpec& form, double theta) {
    form.validate();
    switch (form.kind) {
        case FormKind::single: return f_k(form.k, theta);
        case FormKind::power_sum: return f_power(form.n, form.k, theta);
        case FormKind::product_sum: return g_product(form.k, form.l, theta, form.sign);
    }
    throw std::invalid_argument("unknown form kind");
}

}  // namespace eisarc
