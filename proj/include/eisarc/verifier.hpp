#ifndef EISARC_VERIFIER_HPP
#define EISARC_VERIFIER_HPP

#include <string>
#include <vector>

#include "eisarc/zero_locator.hpp"

namespace eisarc {

/// Valence-formula bookkeeping of weight = 12n + s: forced orders at the
/// elliptic points and the interior zero budget. The identity
/// 12 nu_inf + 6 nu_i + 4 nu_rho + 12 interior = weight holds exactly.
struct ValenceBudget {
    int weight = 0;
    int nu_inf = 0;
    int nu_i_min = 0;
    int nu_rho_min = 0;
    int interior = 0;
};

ValenceBudget valence_budget(int weight, int nu_inf = 0);

enum class CheckStatus { pass, fail, warn };

struct Witness {
    std::string parameters;
    double observed = 0.0;
    double required = 0.0;
};

struct VerificationReport {
    std::string check_id;
    std::string parameter_range;
    CheckStatus status = CheckStatus::pass;
    std::vector<Witness> witnesses;
    std::string notes;
};

/// Inclusive range of even integers.
struct IntRange {
    int lo = 0;
    int hi = 0;
};

enum class FormFamily { rsd, power2, power3, product_plus };

enum class PropId {
    R_single,
    R_power,
    R_product,
    M_power2,
    M_power3,
    P_product,
    Q_product,
    combined_product
};

struct VerifyOptions {
    int grid_density = 2000;   // theta grid for empirical bound sweeps
    int fallback_grid = 4096;  // zero-count cross-check grid
    unsigned jobs = 0;         // 0 = available parallelism
    double residual_tol = 1e-7;
};

/// Per parameter tuple: sign alternation at every sample point, interior
/// arc-zero count equal to the valence budget (with a fallback-grid
/// cross-check), and residual discipline. Any miss fails the report with a
/// witness; there is no partial pass.
VerificationReport verify_theorem(FormFamily family, IntRange k_range,
                                  IntRange l_range = {0, 0}, const VerifyOptions& opts = {});

/// Two layers per proposition: the closed-form bound expression evaluated at
/// the stated extremal parameters against the printed constant, and a dense
/// empirical sweep that the actual main terms / remainders respect the
/// inequalities.
VerificationReport verify_prop_bounds(PropId prop, IntRange k_range, IntRange l_range = {0, 0},
                                      int n = 0, const VerifyOptions& opts = {});

/// Evidence (never a theorem) for n in [4, 6]: sample points where the
/// corrected remainder bound swallows the main-term margin, and arc-zero
/// deficits against the valence budget.
VerificationReport explore_higher_n(int n, IntRange k_range, const VerifyOptions& opts = {});

const char* to_string(CheckStatus s);
const char* to_string(FormFamily f);
const char* to_string(PropId p);

}  // namespace eisarc

#endif
