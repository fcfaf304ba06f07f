// Command-line front end: locate zeros, run theorem/bound verifications,
// emit JSON/CSV reports and plot data.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eisarc/parallel.hpp"
#include "eisarc/report.hpp"

namespace {

using namespace eisarc;

struct CommonOpts {
    std::string format = "json";
    std::string out = "-";
    unsigned jobs = 0;
    double tol = 1e-7;
};

// exit codes: 0 all checks pass, 1 at least one check failed, 2 usage/config/IO
constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

int write_output(const std::string& path, const std::string& payload) {
    if (path == "-") {
        std::cout << payload;
        return kExitPass;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file: " << path << "\n";
        return kExitUsage;
    }
    f << payload;
    if (!f.good()) {
        std::cerr << "error: write failed: " << path << "\n";
        return kExitUsage;
    }
    return kExitPass;
}

int emit_report(RunReport& report, const CommonOpts& common) {
    report.status = overall_status(report.checks);
    const std::string payload =
        common.format == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n";
    const int io = write_output(common.out, payload);
    if (io != kExitPass) return io;
    return report.status == CheckStatus::fail ? kExitCheckFailed : kExitPass;
}

IntRange parse_range(const std::string& text, const std::string& flag) {
    IntRange r;
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, colon));
            r.hi = std::stoi(text.substr(colon + 1));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError(flag, "expected INT or INT:INT, got '" + text + "'");
    }
    if (r.lo > r.hi) throw CLI::ValidationError(flag, "empty range '" + text + "'");
    return r;
}

FormSpec parse_form(const std::string& kind, int n, int k, int l, const std::string& sign) {
    if (kind == "single") return FormSpec::single(k);
    if (kind == "power-sum") return FormSpec::power(n, k);
    if (kind == "product-sum")
        return FormSpec::product(k, l, sign == "-" ? Sign::minus : Sign::plus);
    throw std::invalid_argument("unknown form kind: " + kind);
}

nlohmann::json form_params(const FormSpec& form) {
    return {{"kind", form.kind == FormKind::single       ? "single"
                     : form.kind == FormKind::power_sum ? "power-sum"
                                                         : "product-sum"},
            {"n", form.n},
            {"k", form.k},
            {"l", form.l},
            {"sign", form.sign == Sign::minus ? "-" : "+"}};
}

int run_locate(const FormSpec& form, const CommonOpts& common) {
    RunReport report;
    report.command = "locate";
    report.params = form_params(form);

    const bool cusp = form.kind == FormKind::product_sum && form.sign == Sign::minus;
    const ValenceBudget budget = valence_budget(form.weight(), cusp ? 1 : 0);
    const ScanReport scan = scan_and_refine(form);

    VerificationReport check;
    check.check_id = "locate/" + form.name();
    check.parameter_range = "weight=" + std::to_string(form.weight());
    int located = scan.interior_count();
    for (const auto& z : scan.zeros) report.zeros.push_back(zero_row(form, z));

    std::ostringstream notes;
    if (cusp) {
        const LeftBoundaryScan line = locate_left_boundary(form);
        for (const auto& z : line.zeros) report.zeros.push_back(zero_row(form, z));
        located += static_cast<int>(line.zeros.size());
        notes << scan.interior_count() << " arc + " << line.zeros.size()
              << " left-boundary zeros; ";
        if (line.y_max_warning) {
            check.status = CheckStatus::warn;
            notes << "sign still changing near y_max; ";
        }
    }
    if (located != budget.interior)
        check.witnesses.push_back({"count", static_cast<double>(located),
                                   static_cast<double>(budget.interior)});
    for (const auto& z : scan.zeros)
        if (z.residual > common.tol)
            check.witnesses.push_back({"residual:theta=" + std::to_string(z.theta_hat),
                                       z.residual, common.tol});
    for (const auto& b : scan.stalled)
        check.witnesses.push_back({"stalled-bracket", b.lo, b.hi});
    notes << "interior budget " << budget.interior << " (nu_inf=" << budget.nu_inf
          << ", nu_i=" << budget.nu_i_min << ", nu_rho=" << budget.nu_rho_min << ")";
    check.notes = notes.str();
    if (!check.witnesses.empty()) check.status = CheckStatus::fail;
    report.checks.push_back(std::move(check));
    return emit_report(report, common);
}

int run_oracle_check(IntRange k_range, int points, std::uint64_t seed, double im_lo,
                     double im_hi, double tol, const CommonOpts& common) {
    if (k_range.hi > 48)
        throw std::invalid_argument(
            "oracle-check supports k <= 48: beyond that, binary64 rounding of the q-expansion "
            "exceeds the 1e-9 agreement scale at im >= 0.8");
    if (im_lo < 0.8) throw std::invalid_argument("oracle-check requires im >= 0.8");

    std::vector<int> ks;
    for (int k = std::max(4, k_range.lo + k_range.lo % 2); k <= k_range.hi; k += 2)
        ks.push_back(k);

    // splitmix64-driven deterministic sample points
    auto next_u64 = [state = seed]() mutable {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    auto next_unit = [&]() { return (next_u64() >> 11) * 0x1.0p-53; };

    std::vector<UpperHalfPoint> taus(points);
    for (auto& t : taus) t = {next_unit() - 0.5, im_lo + (im_hi - im_lo) * next_unit()};

    RunReport report;
    report.command = "oracle-check";
    report.params = {{"k_lo", k_range.lo}, {"k_hi", k_range.hi}, {"points", points},
                     {"seed", seed},       {"im_lo", im_lo},     {"im_hi", im_hi},
                     {"tol", tol}};

    VerificationReport check;
    check.check_id = "oracle/qexp-vs-lattice";
    check.parameter_range = "k=" + std::to_string(k_range.lo) + ":" + std::to_string(k_range.hi);

    std::vector<std::vector<Witness>> per(ks.size());
    parallel_for(ks.size(), common.jobs, [&](std::size_t i) {
        const int k = ks[i];
        const int radius = k == 4 ? 1000 : k == 6 ? 240 : k == 8 ? 120 : 50;
        std::vector<Witness> local;
        for (int p = 0; p < points; ++p) {
            const auto q = eval_qexp_auto(k, taus[p]);
            const auto lat = eval_lattice(k, taus[p], radius);
            const double rel = std::abs(q.value - lat.value) / std::abs(q.value);
            if (!(rel <= tol))
                local.push_back({"k=" + std::to_string(k) + ",tau=(" +
                                     format_double(taus[p].re) + "," +
                                     format_double(taus[p].im) + ")",
                                 rel, tol});
        }
        per[i] = std::move(local);
    });
    for (auto& w : per)
        check.witnesses.insert(check.witnesses.end(), w.begin(), w.end());
    if (!check.witnesses.empty()) check.status = CheckStatus::fail;
    std::ostringstream notes;
    notes << ks.size() << " weights x " << points << " points compared";
    check.notes = notes.str();
    report.checks.push_back(std::move(check));
    return emit_report(report, common);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eisenstein-series arc evaluation, zero location and bound verification"};
    app.require_subcommand(1);

    CommonOpts common;
    app.add_option("--format", common.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", common.out, "Output path, '-' for stdout")->capture_default_str();
    app.add_option("--jobs", common.jobs, "Worker count, 0 = available parallelism")
        ->capture_default_str();
    app.add_option("--tol", common.tol, "Residual tolerance override")->capture_default_str();

    // locate
    auto* locate = app.add_subcommand("locate", "Locate zeros of one form on the arc");
    std::string form_kind = "single", sign = "+";
    int n = 2, k = 12, l = 10;
    locate->add_option("--form", form_kind, "single | power-sum | product-sum")
        ->check(CLI::IsMember({"single", "power-sum", "product-sum"}))
        ->capture_default_str();
    locate->add_option("--n", n, "Power (power-sum forms)");
    locate->add_option("--k", k, "Weight k")->required();
    locate->add_option("--l", l, "Weight l (product-sum forms)");
    locate->add_option("--sign", sign, "+ or - (product-sum forms)")
        ->check(CLI::IsMember({"+", "-"}));

    // verify-theorem
    auto* verify = app.add_subcommand("verify-theorem", "Run a theorem family over a range");
    std::string family = "rsd", k_text = "4:100", l_text;
    int grid = 4096;
    verify->add_option("--family", family, "rsd | power2 | power3 | product-plus")
        ->check(CLI::IsMember({"rsd", "power2", "power3", "product-plus"}))
        ->required();
    verify->add_option("--k", k_text, "Range a:b of even k")->required();
    verify->add_option("--l", l_text, "Range a:b of even l (product families)");
    verify->add_option("--grid", grid, "Fallback/cross-check grid cells")
        ->check(CLI::Range(256, 1 << 20))
        ->capture_default_str();

    // check-bounds
    auto* bounds = app.add_subcommand("check-bounds", "Verify proposition bounds and constants");
    std::string prop_text = "R-single", bk_text = "10:60", bl_text;
    int bn = 0, bgrid = 2000;
    bounds->add_option("--prop", prop_text,
                       "R-single | R-power | R-product | M-power2 | M-power3 | P-product | "
                       "Q-product | combined-product")
        ->check(CLI::IsMember({"R-single", "R-power", "R-product", "M-power2", "M-power3",
                               "P-product", "Q-product", "combined-product"}))
        ->required();
    bounds->add_option("--k", bk_text, "Range a:b of even k")->required();
    bounds->add_option("--l", bl_text, "Range a:b of even l (product props)");
    bounds->add_option("--n", bn, "Restrict R-power to n = 2 or 3");
    bounds->add_option("--grid", bgrid, "Empirical sweep grid density")
        ->check(CLI::Range(256, 1 << 20))
        ->capture_default_str();

    // explore-n
    auto* explore = app.add_subcommand("explore-n", "Higher-n evidence (n in [4, 6])");
    int en = 4;
    std::string ek_text = "10:60";
    explore->add_option("--n", en, "Power n in [4, 6]")->required();
    explore->add_option("--k", ek_text, "Range a:b of even k")->required();

    // oracle-check
    auto* oracle = app.add_subcommand("oracle-check", "q-expansion vs lattice-sum agreement");
    std::string ok_text = "4:24";
    int points = 20;
    std::uint64_t seed = 20250809;
    double im_lo = 0.8, im_hi = 2.0, otol = 1e-9;
    oracle->add_option("--k", ok_text, "Range a:b of even k (k <= 48)")->capture_default_str();
    oracle->add_option("--points", points, "Pseudo-random tau count")
        ->check(CLI::Range(1, 100000))
        ->capture_default_str();
    oracle->add_option("--seed", seed, "RNG seed")->capture_default_str();
    oracle->add_option("--im-lo", im_lo, "Lower im bound")->capture_default_str();
    oracle->add_option("--im-hi", im_hi, "Upper im bound")->capture_default_str();
    oracle->add_option("--rel-tol", otol, "Relative agreement tolerance")->capture_default_str();

    // plot-data
    auto* plot = app.add_subcommand("plot-data", "Emit arc-plot data for one form");
    std::string pform = "single", psign = "+";
    int pn = 2, pk = 12, pl = 10, density = 1024;
    plot->add_option("--form", pform, "single | power-sum | product-sum")
        ->check(CLI::IsMember({"single", "power-sum", "product-sum"}))
        ->capture_default_str();
    plot->add_option("--n", pn, "Power (power-sum forms)");
    plot->add_option("--k", pk, "Weight k")->required();
    plot->add_option("--l", pl, "Weight l (product-sum forms)");
    plot->add_option("--sign", psign, "+ or - (product-sum forms)")
        ->check(CLI::IsMember({"+", "-"}));
    plot->add_option("--density", density, "Grid rows (>= 256)")->capture_default_str();

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();  // global flags may follow the subcommand

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        VerifyOptions opts;
        opts.jobs = common.jobs;
        opts.residual_tol = common.tol;

        if (locate->parsed()) return run_locate(parse_form(form_kind, n, k, l, sign), common);

        if (verify->parsed()) {
            opts.fallback_grid = grid;
            const FormFamily fam = family == "rsd"      ? FormFamily::rsd
                                   : family == "power2" ? FormFamily::power2
                                   : family == "power3" ? FormFamily::power3
                                                        : FormFamily::product_plus;
            const IntRange kr = parse_range(k_text, "--k");
            IntRange lr{0, 0};
            if (fam == FormFamily::product_plus) {
                if (l_text.empty())
                    throw std::invalid_argument("product-plus family needs --l a:b");
                lr = parse_range(l_text, "--l");
            }
            RunReport report;
            report.command = "verify-theorem";
            report.params = {{"family", family}, {"k", k_text}, {"l", l_text}, {"grid", grid}};
            report.checks.push_back(verify_theorem(fam, kr, lr, opts));
            return emit_report(report, common);
        }

        if (bounds->parsed()) {
            opts.grid_density = bgrid;
            const PropId prop = prop_text == "R-single"    ? PropId::R_single
                                : prop_text == "R-power"   ? PropId::R_power
                                : prop_text == "R-product" ? PropId::R_product
                                : prop_text == "M-power2"  ? PropId::M_power2
                                : prop_text == "M-power3"  ? PropId::M_power3
                                : prop_text == "P-product" ? PropId::P_product
                                : prop_text == "Q-product" ? PropId::Q_product
                                                           : PropId::combined_product;
            const IntRange kr = parse_range(bk_text, "--k");
            IntRange lr{0, 0};
            const bool needs_l = prop == PropId::R_product || prop == PropId::P_product ||
                                 prop == PropId::Q_product || prop == PropId::combined_product;
            if (needs_l) {
                if (bl_text.empty())
                    throw std::invalid_argument(prop_text + " needs --l a:b");
                lr = parse_range(bl_text, "--l");
            }
            RunReport report;
            report.command = "check-bounds";
            report.params = {{"prop", prop_text}, {"k", bk_text}, {"l", bl_text},
                             {"n", bn},           {"grid", bgrid}};
            report.checks.push_back(verify_prop_bounds(prop, kr, lr, bn, opts));
            return emit_report(report, common);
        }

        if (explore->parsed()) {
            RunReport report;
            report.command = "explore-n";
            report.params = {{"n", en}, {"k", ek_text}};
            report.checks.push_back(explore_higher_n(en, parse_range(ek_text, "--k"), opts));
            return emit_report(report, common);
        }

        if (oracle->parsed())
            return run_oracle_check(parse_range(ok_text, "--k"), points, seed, im_lo, im_hi,
                                    otol, common);

        if (plot->parsed()) {
            const FormSpec form = parse_form(pform, pn, pk, pl, psign);
            return write_output(common.out, plot_data_csv(form, density));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
