#include "eisarc/verifier.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "eisarc/parallel.hpp"

namespace eisarc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kWeightEnvelope = 400;  // binary64 validation envelope

// printed constants, as they appear in the source propositions
constexpr double kPrintedRSingleAdopted = 0.03563;  // formula value; see notes
constexpr double kPrintedRSingleTypo = 0.3563;
constexpr double kPrintedRPower2 = 0.56875;
constexpr double kPrintedRPower3 = 0.17999;
constexpr double kPrintedRProduct = 0.39018;
constexpr double kPrintedM2Case0 = 1.98223;   // k = 0 (mod 6), extremal k = 12
constexpr double kPrintedM2Case4 = 1.99804;   // k = -2 (mod 6), extremal k = 10
constexpr double kPrintedM2Case2 = 1.64849;   // k = 2 (mod 6), extremal k = 14
constexpr double kPrintedM3Odd = 0.32869;     // k = 16
constexpr double kPrintedPCase0 = 1.98222;    // k+l = 0 (mod 6), extremal 24
constexpr double kPrintedPCase2 = 1.99970;    // k+l = 2 (mod 6), extremal 26; see notes
constexpr double kPrintedPCase4 = 1.64160;    // k+l = 4 (mod 6), extremal 22
constexpr double kPrintedQCase0 = -0.31566;   // l = 0 (mod 6), extremal l = 12
constexpr double kPrintedQCase2 = -0.02344;   // l = 2 (mod 6) main window, l = 14
constexpr double kPrintedQCase4 = -0.68390;   // l = 4 (mod 6) main window, l = 10
constexpr double kPrintedCombined0 = 1.32594;
constexpr double kPrintedCombinedOther = 0.64161;
constexpr double kConstTol = 2e-3;      // printed-constant reproduction tolerance
constexpr double kPCase2Slack = 1.5e-3; // widened slack for the 1.99970 discrepancy

std::vector<int> even_range(IntRange r) {
    std::vector<int> v;
    int lo = r.lo + (r.lo % 2 != 0 ? 1 : 0);
    for (int k = lo; k <= r.hi; k += 2) v.push_back(k);
    return v;
}

std::string range_str(IntRange k, IntRange l = {0, 0}) {
    std::ostringstream os;
    os << "k=" << k.lo << ":" << k.hi;
    if (l.hi > 0) os << ",l=" << l.lo << ":" << l.hi;
    return os.str();
}

struct WitnessSink {
    std::vector<Witness> witnesses;
    void add(std::string params, double observed, double required) {
        witnesses.push_back({std::move(params), observed, required});
    }
};

std::string param_str(int k, int l, int m) {
    std::ostringstream os;
    os << "k=" << k;
    if (l > 0) os << ",l=" << l;
    if (m >= 0) os << ",m=" << m;
    return os.str();
}

// closed-form bound expressions at their extremal parameters

double analytic_m2_case(int k_ext) {
    const int m_odd = largest_odd_sample_index(2 * k_ext);
    const double theta = 2.0 * kPi * m_odd / (2.0 * k_ext);
    return 2.0 - 2.0 * main_terms(2 * k_ext, theta).second;
}

double analytic_m3_odd(int k_ext) {
    const double theta = 2.0 * kPi * (k_ext - 1) / (3.0 * k_ext);
    const double nk = main_terms(k_ext, theta).second;
    const double n3k = main_terms(3 * k_ext, theta).second;
    return std::pow(1.0 + nk, 3) - 2.0 + n3k;  // upper bound on M at odd m
}

double analytic_p_case(int w_ext) {
    const int m_odd = largest_odd_sample_index(w_ext);
    const double theta = 2.0 * kPi * m_odd / w_ext;
    return 2.0 - 2.0 * main_terms(w_ext, theta).second;
}

double analytic_q_case(int l_ext) {
    const double ts = theta_star(l_ext, l_ext % 6);
    return -2.0 * (main_terms(l_ext, ts).second + main_terms(l_ext + 2, ts).second);
}

double m_power2_case_constant(int k) {
    switch (k % 6) {
        case 0: return kPrintedM2Case0;
        case 2: return kPrintedM2Case2;
        default: return kPrintedM2Case4;
    }
}

double p_case_constant(int w) {
    switch (w % 6) {
        case 0: return kPrintedPCase0;
        case 2: return kPrintedPCase2;
        default: return kPrintedPCase4;
    }
}

// grid-search oracle for theta*: largest theta in the case interval with
// M_l strictly below -delta
double theta_star_grid(int l, double delta = 1e-9) {
    double hi = arc_theta_hi();
    if (l % 6 == 2) hi -= kPi / (3.0 * l);
    if (l % 6 == 4) hi -= 2.0 * kPi / (3.0 * l);
    const double lo = arc_theta_lo();
    auto m_l = [l](double th) { return 2.0 * std::cos(0.5 * l * th); };
    const int cells = 200000;
    const double step = (hi - lo) / cells;
    if (m_l(hi) <= -delta) return hi;
    double upper = hi;  // m_l(upper) > -delta
    for (int j = 1; j <= cells; ++j) {
        const double th = hi - j * step;
        if (m_l(th) <= -delta) {
            // refine the crossing of m_l = -delta in [th, upper]
            double a = th, b = upper;
            for (int it = 0; it < 80 && b - a > 1e-13; ++it) {
                const double mid = 0.5 * (a + b);
                (m_l(mid) <= -delta ? a : b) = mid;
            }
            return a;
        }
        upper = th;
    }
    // degenerate case (e.g. l = 14): M_l only touches zero at the left
    // endpoint and is positive inside the interval
    if (std::fabs(m_l(lo)) <= 1e-9) return lo;
    throw std::runtime_error("theta_star_grid: no non-positive region found");
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// The analytic remainder bounds decay below binary64 evaluation noise near
// weight ~90; empirical sweeps compare against bound + resolution so wide
// ranges stay meaningful. Far below every bound inside the theorem ranges.
constexpr double kEvalResolution = 1e-10;

double eval_allowance(double f_value) {
    return kEvalResolution * std::max(1.0, std::fabs(f_value));
}

void merge_status(CheckStatus& dst, CheckStatus s) {
    if (s == CheckStatus::fail || dst == CheckStatus::fail)
        dst = CheckStatus::fail;
    else if (s == CheckStatus::warn || dst == CheckStatus::warn)
        dst = CheckStatus::warn;
}

}  // namespace

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::warn: return "warn";
    }
    return "?";
}

const char* to_string(FormFamily f) {
    switch (f) {
        case FormFamily::rsd: return "rsd";
        case FormFamily::power2: return "power2";
        case FormFamily::power3: return "power3";
        case FormFamily::product_plus: return "product-plus";
    }
    return "?";
}

const char* to_string(PropId p) {
    switch (p) {
        case PropId::R_single: return "R-single";
        case PropId::R_power: return "R-power";
        case PropId::R_product: return "R-product";
        case PropId::M_power2: return "M-power2";
        case PropId::M_power3: return "M-power3";
        case PropId::P_product: return "P-product";
        case PropId::Q_product: return "Q-product";
        case PropId::combined_product: return "combined-product";
    }
    return "?";
}

ValenceBudget valence_budget(int weight, int nu_inf) {
    validate_weight(weight);
    if (nu_inf < 0) throw std::invalid_argument("nu_inf must be >= 0");
    const auto d = decompose_weight(weight);
    ValenceBudget b;
    b.weight = weight;
    b.nu_inf = nu_inf;
    switch (d.s) {
        case 0: b.nu_i_min = 0; b.nu_rho_min = 0; break;
        case 4: b.nu_i_min = 0; b.nu_rho_min = 1; break;
        case 6: b.nu_i_min = 1; b.nu_rho_min = 0; break;
        case 8: b.nu_i_min = 0; b.nu_rho_min = 2; break;
        case 10: b.nu_i_min = 1; b.nu_rho_min = 1; break;
        case 14: b.nu_i_min = 1; b.nu_rho_min = 2; break;
        default: throw std::logic_error("bad weight decomposition");
    }
    b.interior = d.n - nu_inf;
    if (b.interior < 0)
        throw std::invalid_argument("no form of this weight admits nu_inf = " +
                                    std::to_string(nu_inf));
    return b;
}

VerificationReport verify_theorem(FormFamily family, IntRange k_range, IntRange l_range,
                                  const VerifyOptions& opts) {
    std::vector<FormSpec> tuples;
    switch (family) {
        case FormFamily::rsd:
            require(k_range.lo >= 4, "rsd family requires k >= 4");
            require(k_range.hi <= kWeightEnvelope, "weight above binary64 envelope (400)");
            for (int k : even_range(k_range)) tuples.push_back(FormSpec::single(k));
            break;
        case FormFamily::power2:
            require(k_range.lo >= 10, "power2 family requires k >= 10");
            require(2 * k_range.hi <= kWeightEnvelope, "weight above binary64 envelope (400)");
            for (int k : even_range(k_range)) tuples.push_back(FormSpec::power(2, k));
            break;
        case FormFamily::power3:
            require(k_range.lo >= 16, "power3 family requires k >= 16");
            require(3 * k_range.hi <= kWeightEnvelope, "weight above binary64 envelope (400)");
            for (int k : even_range(k_range)) tuples.push_back(FormSpec::power(3, k));
            break;
        case FormFamily::product_plus:
            require(l_range.lo >= 10, "product family requires l >= 10");
            require(k_range.hi + l_range.hi <= kWeightEnvelope,
                    "weight above binary64 envelope (400)");
            for (int l : even_range(l_range))
                for (int k : even_range(k_range))
                    if (k > l) tuples.push_back(FormSpec::product(k, l));
            break;
    }

    VerificationReport report;
    report.check_id = std::string("theorem/") + to_string(family);
    report.parameter_range = range_str(k_range, l_range);

    std::vector<std::vector<Witness>> per_tuple(tuples.size());
    parallel_for(tuples.size(), opts.jobs, [&](std::size_t i) {
        const FormSpec& form = tuples[i];
        WitnessSink sink;
        auto f = [&form](double th) { return eval_form(form, th).real_part; };

        const auto samples = sample_points(form);
        for (const auto& s : samples) {
            const double v = f(s.theta);
            const bool ok = s.odd ? v < 0.0 : v > 0.0;
            if (!ok)
                sink.add("alternation:" + param_str(form.k, form.l, s.m), v, 0.0);
        }

        const ValenceBudget budget = valence_budget(form.weight());
        const ScanReport scan = scan_and_refine(form);
        if (scan.interior_count() != budget.interior)
            sink.add("count:" + param_str(form.k, form.l, -1), scan.interior_count(),
                     budget.interior);
        for (const auto& b : scan.stalled)
            sink.add("stalled-bracket:" + param_str(form.k, form.l, -1), b.lo, b.hi);

        const auto grid = grid_sign_scan(f, arc_theta_lo(), arc_theta_hi(), opts.fallback_grid);
        if (grid.size() != scan.zeros.size()) {
            sink.add("grid-count:" + param_str(form.k, form.l, -1),
                     static_cast<double>(grid.size()), static_cast<double>(scan.zeros.size()));
        } else {
            const double cell = (arc_theta_hi() - arc_theta_lo()) / opts.fallback_grid;
            for (std::size_t j = 0; j < grid.size(); ++j) {
                const double mid = 0.5 * (grid[j].lo + grid[j].hi);
                if (std::fabs(mid - scan.zeros[j].theta_hat) > 2.0 * cell)
                    sink.add("grid-offset:" + param_str(form.k, form.l, -1), mid,
                             scan.zeros[j].theta_hat);
            }
        }

        for (const auto& z : scan.zeros) {
            if (z.residual > opts.residual_tol)
                sink.add("residual:" + param_str(form.k, form.l, -1) + ",theta=" +
                             std::to_string(z.theta_hat),
                         z.residual, opts.residual_tol);
            if (z.bracket_width > 1e-12)
                sink.add("bracket-width:" + param_str(form.k, form.l, -1), z.bracket_width,
                         1e-12);
        }
        per_tuple[i] = std::move(sink.witnesses);
    });

    for (auto& w : per_tuple)
        report.witnesses.insert(report.witnesses.end(), w.begin(), w.end());
    report.status = report.witnesses.empty() ? CheckStatus::pass : CheckStatus::fail;
    std::ostringstream notes;
    notes << tuples.size() << " parameter tuples checked";
    report.notes = notes.str();
    return report;
}

namespace {

void analytic_constant_check(WitnessSink& sink, CheckStatus& status, std::ostringstream& notes,
                             const std::string& id, double computed, double printed,
                             double tol, bool warn_only = false) {
    const double dev = std::fabs(computed - printed);
    notes << id << ": computed " << computed << ", printed " << printed << ", |dev| " << dev
          << (warn_only ? " (widened slack, reported not hidden)" : "") << "; ";
    if (dev > tol) {
        sink.add("analytic:" + id, computed, printed);
        merge_status(status, warn_only ? CheckStatus::warn : CheckStatus::fail);
    }
}

}  // namespace

VerificationReport verify_prop_bounds(PropId prop, IntRange k_range, IntRange l_range, int n,
                                      const VerifyOptions& opts) {
    VerificationReport report;
    report.check_id = std::string("bounds/") + to_string(prop);
    report.parameter_range = range_str(k_range, l_range);
    WitnessSink sink;
    std::ostringstream notes;
    CheckStatus status = CheckStatus::pass;

    const auto grid_thetas = [&]() {
        std::vector<double> t(opts.grid_density);
        for (int j = 0; j < opts.grid_density; ++j)
            t[j] = arc_theta_lo() +
                   (arc_theta_hi() - arc_theta_lo()) * (j + 0.5) / opts.grid_density;
        return t;
    }();

    switch (prop) {
        case PropId::R_single: {
            require(k_range.lo >= 10, "R-single sweep requires k >= 10");
            require(k_range.hi <= kWeightEnvelope, "weight above binary64 envelope (400)");
            analytic_constant_check(sink, status, notes, "B(12)", remainder_bound_single(12),
                                    kPrintedRSingleAdopted, 5e-5);
            notes << "paper prints |R_k| <= " << kPrintedRSingleTypo
                  << " while the displayed formula gives " << remainder_bound_single(12)
                  << "; downstream constants reconcile only with the smaller value; "
                  << "empirical sweep allows " << kEvalResolution
                  << " binary64 evaluation resolution; ";
            const auto ks = even_range(k_range);
            std::vector<std::vector<Witness>> per(ks.size());
            parallel_for(ks.size(), opts.jobs, [&](std::size_t i) {
                const int k = ks[i];
                const double bound = remainder_bound_single(k);
                WitnessSink local;
                for (double th : grid_thetas) {
                    const auto [m, nn] = main_terms(k, th);
                    const double fv = f_k(k, th).real_part;
                    const double r = std::fabs(fv - m - nn);
                    if (r > bound + eval_allowance(fv))
                        local.add("R-single:" + param_str(k, 0, -1) + ",theta=" +
                                      std::to_string(th),
                                  r, bound);
                }
                // monotone decrease from k = 10 on
                if (k + 2 <= k_range.hi && remainder_bound_single(k + 2) >= bound)
                    local.add("monotone:" + param_str(k, 0, -1),
                              remainder_bound_single(k + 2), bound);
                per[i] = std::move(local.witnesses);
            });
            for (auto& w : per) for (auto& x : w) sink.witnesses.push_back(x);
            break;
        }
        case PropId::R_power: {
            std::vector<std::pair<int, int>> nk;
            for (int nn : {2, 3}) {
                if (n != 0 && n != nn) continue;
                const int kmin = nn == 2 ? 10 : 16;
                for (int k : even_range(k_range))
                    if (k >= kmin && nn * k <= kWeightEnvelope) nk.push_back({nn, k});
            }
            require(!nk.empty(), "R-power sweep needs n=2 with k >= 10 or n=3 with k >= 16");
            analytic_constant_check(sink, status, notes, "R(2,10)", remainder_bound_power(2, 10),
                                    kPrintedRPower2, 1e-3);
            analytic_constant_check(sink, status, notes, "R(3,16)", remainder_bound_power(3, 16),
                                    kPrintedRPower3, 1e-3);
            std::vector<std::vector<Witness>> per(nk.size());
            parallel_for(nk.size(), opts.jobs, [&](std::size_t i) {
                const auto [nn, k] = nk[i];
                const double bound = remainder_bound_power(nn, k);
                WitnessSink local;
                for (double th : grid_thetas) {
                    const double fv = f_power(nn, k, th).real_part;
                    const double r = std::fabs(fv - main_term_power(nn, k, th));
                    if (r > bound + eval_allowance(fv))
                        local.add("R-power:n=" + std::to_string(nn) + "," +
                                      param_str(k, 0, -1) + ",theta=" + std::to_string(th),
                                  r, bound);
                }
                per[i] = std::move(local.witnesses);
            });
            for (auto& w : per) for (auto& x : w) sink.witnesses.push_back(x);
            break;
        }
        case PropId::R_product: {
            require(l_range.lo >= 10, "R-product sweep requires l >= 10");
            std::vector<std::pair<int, int>> kl;
            for (int l : even_range(l_range))
                for (int k : even_range(k_range))
                    if (k > l && k + l <= kWeightEnvelope) kl.push_back({k, l});
            require(!kl.empty(), "R-product sweep needs pairs k > l >= 10");
            analytic_constant_check(sink, status, notes, "R(12,10)",
                                    remainder_bound_product(12, 10), kPrintedRProduct, 1e-3);
            std::vector<std::vector<Witness>> per(kl.size());
            parallel_for(kl.size(), opts.jobs, [&](std::size_t i) {
                const auto [k, l] = kl[i];
                const double bound = remainder_bound_product(k, l);
                WitnessSink local;
                for (double th : grid_thetas) {
                    const double fv = g_product(k, l, th).real_part;
                    const double r = std::fabs(fv - main_term_product(k, l, th));
                    if (r > bound + eval_allowance(fv))
                        local.add("R-product:" + param_str(k, l, -1) + ",theta=" +
                                      std::to_string(th),
                                  r, bound);
                }
                per[i] = std::move(local.witnesses);
            });
            for (auto& w : per) for (auto& x : w) sink.witnesses.push_back(x);
            break;
        }
        case PropId::M_power2: {
            require(k_range.lo >= 10, "Prop 3.2 requires k >= 10");
            require(2 * k_range.hi <= kWeightEnvelope, "weight above binary64 envelope (400)");
            analytic_constant_check(sink, status, notes, "M2[k=0(6)]", analytic_m2_case(12),
                                    kPrintedM2Case0, kConstTol);
            analytic_constant_check(sink, status, notes, "M2[k=-2(6)]", analytic_m2_case(10),
                                    kPrintedM2Case4, kConstTol);
            analytic_constant_check(sink, status, notes, "M2[k=2(6)]", analytic_m2_case(14),
                                    kPrintedM2Case2, kConstTol);
            const double rem = remainder_bound_power(2, 10);
            notes << "mechanism: min printed constant " << kPrintedM2Case2
                  << " > remainder bound " << rem << "; ";
            if (kPrintedM2Case2 <= rem) sink.add("mechanism:M2", kPrintedM2Case2, rem);
            const auto ks = even_range(k_range);
            std::vector<std::vector<Witness>> per(ks.size());
            parallel_for(ks.size(), opts.jobs, [&](std::size_t i) {
                const int k = ks[i];
                const double c = m_power2_case_constant(k) - kConstTol;
                WitnessSink local;
                for (const auto& s : sample_points_for_weight(2 * k)) {
                    const double par = s.odd ? -1.0 : 1.0;
                    const double v = par * main_term_power(2, k, s.theta);
                    if (v < c)
                        local.add("M2:" + param_str(k, 0, s.m), v, c + kConstTol);
                }
                per[i] = std::move(local.witnesses);
            });
            for (auto& w : per) for (auto& x : w) sink.witnesses.push_back(x);
            break;
        }
        case PropId::M_power3: {
            require(k_range.lo >= 16, "Prop 3.3 requires k >= 16");
            require(3 * k_range.hi <= kWeightEnvelope, "weight above binary64 envelope (400)");
            analytic_constant_check(sink, status, notes, "M3-odd", -analytic_m3_odd(16),
                                    kPrintedM3Odd, kConstTol);
            const double even_floor =
                std::pow(-1.0 + std::pow(2.0, -8.0), 3) + 2.0 + std::pow(2.0, -24.0);
            notes << "even-m floor at k=16: " << even_floor << " > 1; ";
            if (even_floor <= 1.0) sink.add("mechanism:M3-even", even_floor, 1.0);
            const auto ks = even_range(k_range);
            std::vector<std::vector<Witness>> per(ks.size());
            parallel_for(ks.size(), opts.jobs, [&](std::size_t i) {
                const int k = ks[i];
                WitnessSink local;
                for (const auto& s : sample_points_for_weight(3 * k)) {
                    const double v = main_term_power(3, k, s.theta);
                    if (s.odd) {
                        if (-v < kPrintedM3Odd - kConstTol)
                            local.add("M3-odd:" + param_str(k, 0, s.m), -v, kPrintedM3Odd);
                    } else if (v < 1.0 - 1e-9) {
                        local.add("M3-even:" + param_str(k, 0, s.m), v, 1.0);
                    }
                }
                per[i] = std::move(local.witnesses);
            });
            for (auto& w : per) for (auto& x : w) sink.witnesses.push_back(x);
            break;
        }
        case PropId::P_product: {
            require(l_range.lo >= 10, "Prop 4.2 requires l >= 10");
            analytic_constant_check(sink, status, notes, "P[w=0(6)]", analytic_p_case(24),
                                    kPrintedPCase0, kConstTol);
            analytic_constant_check(sink, status, notes, "P[w=2(6)]", analytic_p_case(26),
                                    kPrintedPCase2, kPCase2Slack, /*warn_only=*/true);
            analytic_constant_check(sink, status, notes, "P[w=4(6)]", analytic_p_case(22),
                                    kPrintedPCase4, kConstTol);
            std::vector<std::pair<int, int>> kl;
            for (int l : even_range(l_range))
                for (int k : even_range(k_range))
                    if (k > l && k + l <= kWeightEnvelope) kl.push_back({k, l});
            std::vector<std::vector<Witness>> per(kl.size());
            parallel_for(kl.size(), opts.jobs, [&](std::size_t i) {
                const auto [k, l] = kl[i];
                const int w = k + l;
                const double tol = (w % 6 == 2) ? kPCase2Slack : kConstTol;
                const double c = p_case_constant(w) - tol;
                WitnessSink local;
                for (const auto& s : sample_points_for_weight(w)) {
                    const double p = pq_split(k, l, s.m).p;
                    if (p < c) local.add("P:" + param_str(k, l, s.m), p, c + tol);
                }
                per[i] = std::move(local.witnesses);
            });
            for (auto& w : per) for (auto& x : w) sink.witnesses.push_back(x);
            break;
        }
        case PropId::Q_product: {
            require(l_range.lo >= 10, "Prop 4.3 requires l >= 10");
            analytic_constant_check(sink, status, notes, "Q[l=0(6)]", analytic_q_case(12),
                                    kPrintedQCase0, kConstTol);
            analytic_constant_check(sink, status, notes, "Q[l=2(6)]", analytic_q_case(14),
                                    kPrintedQCase2, kConstTol);
            analytic_constant_check(sink, status, notes, "Q[l=4(6)]", analytic_q_case(10),
                                    kPrintedQCase4, kConstTol);
            // theta* closed forms vs the strict-negativity grid oracle
            for (int l : even_range(l_range)) {
                const double closed = theta_star(l, l % 6);
                const double grid = theta_star_grid(l);
                if (std::fabs(closed - grid) > 1e-6) {
                    notes << "theta*(l=" << l << ") closed form " << closed
                          << " vs grid oracle " << grid << " (mismatch); ";
                    sink.add("theta-star:l=" + std::to_string(l), grid, closed);
                    merge_status(status, CheckStatus::warn);
                }
            }
            std::vector<std::pair<int, int>> kl;
            for (int l : even_range(l_range))
                for (int k : even_range(k_range))
                    if (k > l && k + l <= kWeightEnvelope) kl.push_back({k, l});
            std::vector<std::vector<Witness>> per(kl.size());
            parallel_for(kl.size(), opts.jobs, [&](std::size_t i) {
                const auto [k, l] = kl[i];
                WitnessSink local;
                const double window_hi = l % 6 == 0 ? arc_theta_hi()
                                         : l % 6 == 2 ? arc_theta_hi() - kPi / (3.0 * l)
                                                      : arc_theta_hi() - 2.0 * kPi / (3.0 * l);
                const double window_const = l % 6 == 0   ? kPrintedQCase0
                                            : l % 6 == 2 ? kPrintedQCase2
                                                         : kPrintedQCase4;
                for (const auto& s : sample_points_for_weight(k + l)) {
                    const double q = pq_split(k, l, s.m).q;
                    const double floor = s.theta <= window_hi + 1e-12
                                             ? window_const - kConstTol
                                             : -1.0 - 1e-9;
                    if (q < floor) local.add("Q:" + param_str(k, l, s.m), q, floor);
                }
                per[i] = std::move(local.witnesses);
            });
            for (auto& w : per) for (auto& x : w) sink.witnesses.push_back(x);
            break;
        }
        case PropId::combined_product: {
            require(l_range.lo >= 10, "combined bound requires l >= 10");
            analytic_constant_check(sink, status, notes, "combined[l=0(6)]",
                                    analytic_p_case(22) + analytic_q_case(12),
                                    kPrintedCombined0, kConstTol);
            analytic_constant_check(sink, status, notes, "combined[other]",
                                    analytic_p_case(22) - 1.0, kPrintedCombinedOther, kConstTol);
            const double rem = remainder_bound_product(12, 10);
            notes << "mechanism: " << kPrintedCombinedOther << " > remainder bound " << rem
                  << "; ";
            if (kPrintedCombinedOther <= rem)
                sink.add("mechanism:combined", kPrintedCombinedOther, rem);
            std::vector<std::pair<int, int>> kl;
            for (int l : even_range(l_range))
                for (int k : even_range(k_range))
                    if (k > l && k + l <= kWeightEnvelope) kl.push_back({k, l});
            std::vector<std::vector<Witness>> per(kl.size());
            parallel_for(kl.size(), opts.jobs, [&](std::size_t i) {
                const auto [k, l] = kl[i];
                const double c =
                    (l % 6 == 0 ? kPrintedCombined0 : kPrintedCombinedOther) - 1e-3;
                WitnessSink local;
                for (const auto& s : sample_points_for_weight(k + l)) {
                    const double par = s.odd ? -1.0 : 1.0;
                    const double v = par * main_term_product(k, l, s.theta);
                    if (v < c) local.add("combined:" + param_str(k, l, s.m), v, c + 1e-3);
                }
                per[i] = std::move(local.witnesses);
            });
            for (auto& w : per) for (auto& x : w) sink.witnesses.push_back(x);
            break;
        }
    }

    report.witnesses = std::move(sink.witnesses);
    if (!report.witnesses.empty()) merge_status(status, CheckStatus::fail);
    report.status = status;
    report.notes = notes.str();
    return report;
}

VerificationReport explore_higher_n(int n, IntRange k_range, const VerifyOptions& opts) {
    if (n < 4 || n > 6)
        throw std::invalid_argument("explore_higher_n covers n in [4, 6] only; the theorem "
                                    "handles n = 2, 3");
    require(n * k_range.hi <= kWeightEnvelope, "weight above binary64 envelope (400)");

    VerificationReport report;
    report.check_id = "explore/n=" + std::to_string(n);
    report.parameter_range = range_str(k_range);
    report.status = CheckStatus::warn;  // evidence only, never a theorem

    const auto ks = even_range(k_range);
    std::vector<std::vector<Witness>> per(ks.size());
    std::vector<std::string> per_notes(ks.size());
    parallel_for(ks.size(), opts.jobs, [&](std::size_t i) {
        const int k = ks[i];
        const int weight = n * k;
        WitnessSink sink;
        const double bound = power_remainder_bound_general(n, k);
        for (const auto& s : sample_points_for_weight(weight)) {
            const double par = s.odd ? -1.0 : 1.0;
            const double margin = par * power_main_term_general(n, k, s.theta);
            if (margin <= bound)
                sink.add("proof-failure:" + param_str(k, 0, s.m) + ",theta=" +
                             std::to_string(s.theta),
                         margin, bound);
        }
        auto f = [n, k](double th) { return f_power_general(n, k, th).real_part; };
        const ValenceBudget budget = valence_budget(weight);
        const ScanReport scan =
            scan_function(f, weight, budget.interior + 1, opts.fallback_grid);
        std::ostringstream os;
        if (scan.interior_count() < budget.interior) {
            os << "off-arc candidates: k=" << k << " found " << scan.interior_count()
               << " interior arc zeros of budget " << budget.interior << " (weight " << weight
               << " = 12*" << decompose_weight(weight).n << "+" << decompose_weight(weight).s
               << ", forced nu_i=" << budget.nu_i_min << ", nu_rho=" << budget.nu_rho_min
               << "); ";
            sink.add("arc-deficit:" + param_str(k, 0, -1), scan.interior_count(),
                     budget.interior);
        }
        per[i] = std::move(sink.witnesses);
        per_notes[i] = os.str();
    });

    std::ostringstream notes;
    notes << "evidence only; sample points where the remainder bound reaches the main-term "
             "margin, plus arc-count deficits against the valence budget; ";
    std::size_t proof_failures = 0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        for (auto& w : per[i]) {
            if (w.parameters.rfind("proof-failure", 0) == 0) ++proof_failures;
            report.witnesses.push_back(std::move(w));
        }
        notes << per_notes[i];
    }
    notes << proof_failures << " proof-technique failure witnesses";
    report.notes = notes.str();
    return report;
}

}  // namespace eisarc
