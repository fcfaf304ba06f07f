#ifndef EISARC_ARC_FUNCTIONS_HPP
#define EISARC_ARC_FUNCTIONS_HPP

#include "eisarc/eisenstein.hpp"

namespace eisarc {

// The lower boundary arc is theta in [pi/2, 2pi/3]; every function here is
// real there, up to rounding, and the imaginary leak is reported so callers
// can watch it.

enum class FormKind { single, power_sum, product_sum };
enum class Sign { plus, minus };

/// Which combined form is under study.
struct FormSpec {
    FormKind kind = FormKind::single;
    int k = 0;
    int n = 0;       // power_sum only (2 or 3)
    int l = 0;       // product_sum only
    Sign sign = Sign::plus;  // product_sum only

    static FormSpec single(int k);
    static FormSpec power(int n, int k);
    static FormSpec product(int k, int l, Sign sign = Sign::plus);

    int weight() const;
    void validate() const;  // throws std::invalid_argument
    std::string name() const;
};

struct ArcValue {
    double real_part = 0.0;
    double imag_leak = 0.0;
};

void validate_arc_angle(double theta);

double arc_theta_lo();
double arc_theta_hi();

/// F_k(theta) = e^{ik theta/2} E_k(e^{i theta}).
ArcValue f_k(int k, double theta);

/// (M_k, N_k) = (2cos(k theta/2), (2cos(theta/2))^{-k}).
std::pair<double, double> main_terms(int k, double theta);

/// Closed-form tail bound B(k) for |F_k - M_k - N_k| on the arc.
double remainder_bound_single(int k);

/// F_{n,k}(theta) = e^{ink theta/2} (E_k^n + E_{nk})(e^{i theta}), n in {2,3}.
ArcValue f_power(int n, int k, double theta);

/// M_{n,k} = (M_k + N_k)^n + M_{nk} + N_{nk}.
double main_term_power(int n, int k, double theta);

/// Corrected binomial expansion of the power-form remainder bound:
/// sum_{i=1}^{n-1} C(n,i) 3^i B(k)^{n-i} + B(k)^n + B(nk).
double remainder_bound_power(int n, int k);

/// G_{k,l}(theta) = e^{i(k+l) theta/2} (E_k E_l +/- E_{k+l})(e^{i theta}).
ArcValue g_product(int k, int l, double theta, Sign sign = Sign::plus);

double main_term_product(int k, int l, double theta);

struct PQSplit {
    double p = 0.0;  // 2 + 2(-1)^m N_{k+l}
    double q = 0.0;  // M_l^2 + M_l (N_l + (-1)^m N_k)
};

/// Decomposition (-1)^m M_{k,l}(theta_m) = P + Q at the sample point
/// theta_m = 2 m pi / (k + l).
PQSplit pq_split(int k, int l, int m);

double remainder_bound_product(int k, int l);

/// Evaluate whatever form the spec describes at theta on the arc.
ArcValue eval_form(const FormSpec& form, double theta);

// Generalized power-form helpers, valid for n >= 2. The public n in {2,3}
// operations wrap these; the higher-n exploration needs them unrestricted.
double power_main_term_general(int n, int k, double theta);
double power_remainder_bound_general(int n, int k);
ArcValue f_power_general(int n, int k, double theta);

}  // namespace eisarc

#endif
