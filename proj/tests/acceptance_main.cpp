// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "eisarc/parallel.hpp"
#include "eisarc/report.hpp"

using namespace eisarc;

namespace {

constexpr double kPi = std::numbers::pi;
int g_failures = 0;

void report_line(int criterion, const std::string& label, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double n_term(int w, double theta) { return main_terms(w, theta).second; }

double m2_case(int k_ext) {
    const int mo = largest_odd_sample_index(2 * k_ext);
    return 2.0 - 2.0 * n_term(2 * k_ext, 2.0 * kPi * mo / (2.0 * k_ext));
}

double p_case(int w_ext) {
    const int mo = largest_odd_sample_index(w_ext);
    return 2.0 - 2.0 * n_term(w_ext, 2.0 * kPi * mo / w_ext);
}

double q_case(int l_ext) {
    const double ts = theta_star(l_ext, l_ext % 6);
    return -2.0 * (n_term(l_ext, ts) + n_term(l_ext + 2, ts));
}

double m3_odd_bound(int k_ext) {
    const double th = 2.0 * kPi * (k_ext - 1) / (3.0 * k_ext);
    return std::pow(1.0 + n_term(k_ext, th), 3) - 2.0 + n_term(3 * k_ext, th);
}

// criterion 1: RSD reproduction over k in [4, 100]
void criterion_1() {
    const auto rep = verify_theorem(FormFamily::rsd, {4, 100});
    report_line(1, "RSD reproduction, even k in [4, 100]", rep.status == CheckStatus::pass,
                rep.notes + ", " + std::to_string(rep.witnesses.size()) + " witnesses");
}

// criterion 2: power forms, alternation + counts
void criterion_2() {
    const auto p2 = verify_theorem(FormFamily::power2, {10, 100});
    const auto p3 = verify_theorem(FormFamily::power3, {16, 100});
    const bool ok = p2.status == CheckStatus::pass && p3.status == CheckStatus::pass;
    report_line(2, "power sums n=2 (k in [10,100]) and n=3 (k in [16,100])", ok,
                "n=2: " + p2.notes + "; n=3: " + p3.notes);
}

// criterion 3: product forms over 10 <= l < k <= 50
void criterion_3() {
    const auto rep = verify_theorem(FormFamily::product_plus, {12, 50}, {10, 48});
    report_line(3, "products E_k E_l + E_{k+l}, 10 <= l < k <= 50",
                rep.status == CheckStatus::pass,
                rep.notes + ", " + std::to_string(rep.witnesses.size()) + " witnesses");
}

// criterion 4: printed-constant reproduction
void criterion_4() {
    struct Item {
        const char* label;
        double computed;
        double printed;
        double tol;
    };
    const Item items[] = {
        {"R(2,10)=0.56875", remainder_bound_power(2, 10), 0.56875, 2e-3},
        {"R(3,16)=0.17999", remainder_bound_power(3, 16), 0.17999, 2e-3},
        {"R(12,10)=0.39018", remainder_bound_product(12, 10), 0.39018, 2e-3},
        {"M2[0 mod 6]=1.98223", m2_case(12), 1.98223, 2e-3},
        {"M2[-2 mod 6]=1.99804", m2_case(10), 1.99804, 2e-3},
        {"M2[2 mod 6]=1.64849", m2_case(14), 1.64849, 2e-3},
        {"M3 odd=-0.32869", m3_odd_bound(16), -0.32869, 2e-3},
        {"P[0 mod 6]=1.98222", p_case(24), 1.98222, 2e-3},
        {"P[2 mod 6]=1.99970 (widened slack)", p_case(26), 1.99970, 1.5e-3},
        {"P[4 mod 6]=1.64160", p_case(22), 1.64160, 2e-3},
        {"Q[0 mod 6]=-0.31566", q_case(12), -0.31566, 2e-3},
        {"Q[2 mod 6]=-0.02344", q_case(14), -0.02344, 2e-3},
        {"Q[4 mod 6]=-0.68390", q_case(10), -0.68390, 2e-3},
        {"combined[0 mod 6]=1.32594", p_case(22) + q_case(12), 1.32594, 2e-3},
        {"combined[other]=0.64161", p_case(22) - 1.0, 0.64161, 2e-3},
    };
    bool ok = true;
    std::string detail;
    for (const auto& it : items) {
        const double dev = std::fabs(it.computed - it.printed);
        if (dev > it.tol) {
            ok = false;
            detail += std::string(it.label) + " dev=" + format_double(dev) + "; ";
        }
    }
    // empirical combined-product minimum, l not 0 (mod 6), l <= 30
    double min_combined = 1e9;
    for (int l = 10; l <= 30; l += 2) {
        if (l % 6 == 0) continue;
        for (int k = l + 2; k <= 50; k += 2)
            for (const auto& s : sample_points_for_weight(k + l)) {
                const double par = s.odd ? -1.0 : 1.0;
                min_combined = std::min(min_combined, par * main_term_product(k, l, s.theta));
            }
    }
    if (!(min_combined >= 0.64161 - 1e-3)) {
        ok = false;
        detail += "combined empirical min " + format_double(min_combined) + "; ";
    }
    report_line(4, "printed-constant reproduction (15 constants + combined sweep)", ok, detail);
}

// criterion 5: empirical remainder domination
void criterion_5() {
    const int grid = 2000;
    std::vector<std::string> bad;
    auto sweep = [&](const std::string& tag, auto f_minus_main, double bound) {
        for (int j = 0; j < grid; ++j) {
            const double th =
                arc_theta_lo() + (arc_theta_hi() - arc_theta_lo()) * (j + 0.5) / grid;
            if (std::fabs(f_minus_main(th)) > bound) {
                bad.push_back(tag);
                return;
            }
        }
    };

    std::vector<int> singles;
    for (int k = 10; k <= 60; k += 2) singles.push_back(k);
    std::vector<std::string> single_bad(singles.size());
    parallel_for(singles.size(), 0, [&](std::size_t i) {
        const int k = singles[i];
        const double bound = remainder_bound_single(k);
        for (int j = 0; j < grid; ++j) {
            const double th =
                arc_theta_lo() + (arc_theta_hi() - arc_theta_lo()) * (j + 0.5) / grid;
            const auto [m, n] = main_terms(k, th);
            if (std::fabs(f_k(k, th).real_part - m - n) > bound) {
                single_bad[i] = "single k=" + std::to_string(k);
                return;
            }
        }
    });
    for (const auto& s : single_bad)
        if (!s.empty()) bad.push_back(s);

    for (int k = 10; k <= 60; k += 2)
        sweep("power2 k=" + std::to_string(k),
              [k](double th) {
                  return f_power(2, k, th).real_part - main_term_power(2, k, th);
              },
              remainder_bound_power(2, k));
    for (int k = 16; k <= 60; k += 2)
        sweep("power3 k=" + std::to_string(k),
              [k](double th) {
                  return f_power(3, k, th).real_part - main_term_power(3, k, th);
              },
              remainder_bound_power(3, k));
    for (int l = 10; l <= 24; l += 2)
        for (int k = l + 2; k <= 26; k += 2)
            sweep("product (" + std::to_string(k) + "," + std::to_string(l) + ")",
                  [k, l](double th) {
                      return g_product(k, l, th).real_part - main_term_product(k, l, th);
                  },
                  remainder_bound_product(k, l));

    std::string detail;
    for (const auto& b : bad) detail += b + "; ";
    report_line(5, "empirical remainder domination (2000-point grids)", bad.empty(), detail);
}

// criterion 6: oracle equivalence at 20 pseudo-random tau
void criterion_6() {
    std::uint64_t state = 20250809;
    auto unit = [&state]() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return ((z ^ (z >> 31)) >> 11) * 0x1.0p-53;
    };
    std::vector<UpperHalfPoint> taus(20);
    for (auto& t : taus) t = {unit() - 0.5, 0.8 + 1.2 * unit()};

    const std::vector<int> ks = {4, 6, 8, 10, 12, 16, 24};
    std::vector<std::string> bad(ks.size());
    parallel_for(ks.size(), 0, [&](std::size_t i) {
        const int k = ks[i];
        const int radius = k == 4 ? 1000 : k == 6 ? 240 : k == 8 ? 120 : 50;
        double worst = 0.0;
        for (const auto& tau : taus) {
            const auto q = eval_qexp_auto(k, tau);
            const auto lat = eval_lattice(k, tau, radius);
            worst = std::max(worst, std::abs(q.value - lat.value) / std::abs(q.value));
        }
        if (worst > 1e-9)
            bad[i] = "k=" + std::to_string(k) + " worst rel " + format_double(worst);
    });
    std::string detail;
    for (const auto& b : bad)
        if (!b.empty()) detail += b + "; ";
    report_line(6, "oracle equivalence (q-expansion vs lattice, 20 tau, rel <= 1e-9)",
                detail.empty(), detail);
}

// criterion 7: exact counting identities
void criterion_7() {
    bool ok = true;
    std::string detail;
    for (int w = 4; w <= 400 && ok; w += 2)
        if (static_cast<int>(sample_points_for_weight(w).size()) != decompose_weight(w).n + 1) {
            ok = false;
            detail = "count mismatch at weight " + std::to_string(w);
        }
    auto enumerated = [](int w) {
        int best = -1;
        for (int m = 0; m <= w; ++m)
            if (4 * m >= w && 3 * m <= w && m % 2 != 0) best = m;
        return best;
    };
    for (int k = 10; k <= 400 && ok; k += 2)
        if (m_odd_power(k, 2) != enumerated(2 * k)) {
            ok = false;
            detail = "m_odd power mismatch at k=" + std::to_string(k);
        }
    for (int w = 22; w <= 400 && ok; w += 2)
        if (largest_odd_sample_index(w) != enumerated(w)) {
            ok = false;
            detail = "m_odd product mismatch at weight " + std::to_string(w);
        }
    report_line(7, "counting identities, exact, weights up to 400", ok, detail);
}

// criterion 8: higher-n evidence
void criterion_8() {
    const auto rep = explore_higher_n(4, {10, 60});
    int proof_failures = 0;
    for (const auto& w : rep.witnesses)
        if (w.parameters.rfind("proof-failure", 0) == 0) ++proof_failures;
    const bool ok = proof_failures >= 1 && !rep.notes.empty();
    report_line(8, "higher-n evidence (n=4, k in [10,60])", ok,
                std::to_string(proof_failures) + " proof-failure witnesses");
}

// criterion 9: minus-variant budget exhaustion
void criterion_9() {
    const std::pair<int, int> pairs[] = {{16, 14}, {20, 14}, {22, 16}};
    bool ok = true;
    std::string detail;
    for (const auto& [k, l] : pairs) {
        const FormSpec form = FormSpec::product(k, l, Sign::minus);
        const auto arc = scan_and_refine(form);
        const auto line = locate_left_boundary(form);
        const auto budget = valence_budget(k + l, 1);
        const int found = arc.interior_count() + static_cast<int>(line.zeros.size());
        detail += "(" + std::to_string(k) + "," + std::to_string(l) + "): " +
                  std::to_string(arc.interior_count()) + " arc + " +
                  std::to_string(line.zeros.size()) + " boundary vs budget " +
                  std::to_string(budget.interior) + "; ";
        if (found != budget.interior || line.y_max_warning) ok = false;
    }
    report_line(9, "minus-variant budget exhaustion, nu_inf = 1", ok, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::printf("%s: %d criterion(s) failed\n", g_failures == 0 ? "ALL PASS" : "FAILURES",
                g_failures);
    return g_failures;
}
