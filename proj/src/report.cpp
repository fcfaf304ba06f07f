#include "eisarc/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace eisarc {

namespace {

const char* kind_name(FormKind k) {
    switch (k) {
        case FormKind::single: return "single";
        case FormKind::power_sum: return "power_sum";
        case FormKind::product_sum: return "product_sum";
    }
    return "?";
}

CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "warn") return CheckStatus::warn;
    throw std::invalid_argument("unknown status: " + s);
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

ZeroRow zero_row(const FormSpec& form, const ZeroRecord& z) {
    ZeroRow row;
    row.form_kind = kind_name(form.kind);
    row.n = form.kind == FormKind::power_sum ? form.n : 0;
    row.k = form.k;
    row.l = form.kind == FormKind::product_sum ? form.l : 0;
    row.sign = form.kind == FormKind::product_sum ? (form.sign == Sign::plus ? "+" : "-") : "";
    row.theta_hat = z.theta_hat;
    row.tau_re = z.tau_hat.real();
    row.tau_im = z.tau_hat.imag();
    row.residual = z.residual;
    row.bracket_width = z.bracket_width;
    return row;
}

ZeroRow zero_row(const FormSpec& form, const BoundaryZeroRecord& z) {
    ZeroRow row;
    row.form_kind = kind_name(form.kind);
    row.n = 0;
    row.k = form.k;
    row.l = form.l;
    row.sign = form.sign == Sign::plus ? "+" : "-";
    row.theta_hat = std::nullopt;
    row.tau_re = z.tau_hat.real();
    row.tau_im = z.tau_hat.imag();
    row.residual = z.residual;
    row.bracket_width = z.bracket_width;
    return row;
}

CheckStatus overall_status(const std::vector<VerificationReport>& checks) {
    CheckStatus s = CheckStatus::pass;
    for (const auto& c : checks) {
        if (c.status == CheckStatus::fail) return CheckStatus::fail;
        if (c.status == CheckStatus::warn) s = CheckStatus::warn;
    }
    return s;
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : r.witnesses)
        w.push_back({{"parameters", x.parameters},
                     {"observed", x.observed},
                     {"required", x.required}});
    return {{"check_id", r.check_id},
            {"parameter_range", r.parameter_range},
            {"status", to_string(r.status)},
            {"witnesses", w},
            {"notes", r.notes}};
}

nlohmann::json to_json(const RunReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    nlohmann::json zeros = nlohmann::json::array();
    for (const auto& z : r.zeros) {
        nlohmann::json jz = {{"tau_re", z.tau_re},
                             {"tau_im", z.tau_im},
                             {"residual", z.residual},
                             {"bracket_width", z.bracket_width},
                             {"form_kind", z.form_kind},
                             {"n", z.n},
                             {"k", z.k},
                             {"l", z.l},
                             {"sign", z.sign}};
        if (z.theta_hat)
            jz["theta"] = *z.theta_hat;
        else
            jz["theta"] = nullptr;
        zeros.push_back(jz);
    }
    return {{"schema_version", r.schema_version},
            {"command", r.command},
            {"params", r.params},
            {"status", to_string(r.status)},
            {"checks", checks},
            {"zeros", zeros}};
}

RunReport run_report_from_json(const nlohmann::json& j) {
    RunReport r;
    r.schema_version = j.at("schema_version").get<int>();
    r.command = j.at("command").get<std::string>();
    r.params = j.at("params");
    r.status = status_from_string(j.at("status").get<std::string>());
    for (const auto& jc : j.at("checks")) {
        VerificationReport c;
        c.check_id = jc.at("check_id").get<std::string>();
        c.parameter_range = jc.at("parameter_range").get<std::string>();
        c.status = status_from_string(jc.at("status").get<std::string>());
        c.notes = jc.at("notes").get<std::string>();
        for (const auto& jw : jc.at("witnesses"))
            c.witnesses.push_back({jw.at("parameters").get<std::string>(),
                                   jw.at("observed").get<double>(),
                                   jw.at("required").get<double>()});
        r.checks.push_back(std::move(c));
    }
    for (const auto& jz : j.at("zeros")) {
        ZeroRow z;
        z.form_kind = jz.at("form_kind").get<std::string>();
        z.n = jz.at("n").get<int>();
        z.k = jz.at("k").get<int>();
        z.l = jz.at("l").get<int>();
        z.sign = jz.at("sign").get<std::string>();
        if (!jz.at("theta").is_null()) z.theta_hat = jz.at("theta").get<double>();
        z.tau_re = jz.at("tau_re").get<double>();
        z.tau_im = jz.at("tau_im").get<double>();
        z.residual = jz.at("residual").get<double>();
        z.bracket_width = jz.at("bracket_width").get<double>();
        r.zeros.push_back(std::move(z));
    }
    return r;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_csv(const RunReport& r) {
    std::ostringstream os;
    os << "schema_version,command,status\n"
       << r.schema_version << ',' << csv_escape(r.command) << ',' << to_string(r.status)
       << "\n\nchecks\ncheck_id,parameter_range,status,witness_count,notes\n";
    for (const auto& c : r.checks)
        os << csv_escape(c.check_id) << ',' << csv_escape(c.parameter_range) << ','
           << to_string(c.status) << ',' << c.witnesses.size() << ',' << csv_escape(c.notes)
           << '\n';
    os << "\nwitnesses\ncheck_id,parameters,observed,required\n";
    for (const auto& c : r.checks)
        for (const auto& w : c.witnesses)
            os << csv_escape(c.check_id) << ',' << csv_escape(w.parameters) << ','
               << format_double(w.observed) << ',' << format_double(w.required) << '\n';
    os << "\nzeros\nform_kind,n,k,l,sign,theta_hat,tau_re,tau_im,residual,bracket_width\n";
    for (const auto& z : r.zeros) {
        os << z.form_kind << ',';
        if (z.n > 0) os << z.n;
        os << ',' << z.k << ',';
        if (z.l > 0) os << z.l;
        os << ',' << z.sign << ',';
        if (z.theta_hat) os << format_double(*z.theta_hat);
        os << ',' << format_double(z.tau_re) << ',' << format_double(z.tau_im) << ','
           << format_double(z.residual) << ',' << format_double(z.bracket_width) << '\n';
    }
    return os.str();
}

std::string plot_data_csv(const FormSpec& form, int grid_density) {
    if (grid_density < 256)
        throw std::invalid_argument("plot-data grid density must be >= 256");
    form.validate();

    const auto main_term = [&form](double th) {
        switch (form.kind) {
            case FormKind::single: {
                const auto [m, n] = main_terms(form.k, th);
                return m + n;
            }
            case FormKind::power_sum:
                return main_term_power(form.n, form.k, th);
            case FormKind::product_sum:
                return main_term_product(form.k, form.l, th);
        }
        return 0.0;
    };
    double bound = 0.0;
    switch (form.kind) {
        case FormKind::single: bound = remainder_bound_single(form.k); break;
        case FormKind::power_sum: bound = remainder_bound_power(form.n, form.k); break;
        case FormKind::product_sum: bound = remainder_bound_product(form.k, form.l); break;
    }

    std::ostringstream os;
    os << "theta,f_value,main_term,envelope_plus,envelope_minus\n";
    const double lo = arc_theta_lo(), hi = arc_theta_hi();
    for (int j = 0; j < grid_density; ++j) {
        const double th = lo + (hi - lo) * j / (grid_density - 1.0);
        const double f = eval_form(form, th).real_part;
        const double m = main_term(th);
        os << format_double(th) << ',' << format_double(f) << ',' << format_double(m) << ','
           << format_double(m + bound) << ',' << format_double(m - bound) << '\n';
    }
    os << "\nzeros\ntheta_hat,tau_re,tau_im,residual,bracket_width\n";
    for (const auto& z : scan_and_refine(form).zeros)
        os << format_double(z.theta_hat) << ',' << format_double(z.tau_hat.real()) << ','
           << format_double(z.tau_hat.imag()) << ',' << format_double(z.residual) << ','
           << format_double(z.bracket_width) << '\n';
    return os.str();
}

}  // namespace eisarc
