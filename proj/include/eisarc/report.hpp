#ifndef EISARC_REPORT_HPP
#define EISARC_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eisarc/verifier.hpp"

namespace eisarc {

/// One located zero, flattened for reports. Arc zeros carry theta; left
/// boundary zeros only the tau coordinates.
struct ZeroRow {
    std::string form_kind;  // single | power_sum | product_sum
    int n = 0;
    int k = 0;
    int l = 0;
    std::string sign;       // "+", "-" or empty
    std::optional<double> theta_hat;
    double tau_re = 0.0;
    double tau_im = 0.0;
    double residual = 0.0;
    double bracket_width = 0.0;
};

struct RunReport {
    int schema_version = 1;
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    CheckStatus status = CheckStatus::pass;
    std::vector<VerificationReport> checks;
    std::vector<ZeroRow> zeros;
};

ZeroRow zero_row(const FormSpec& form, const ZeroRecord& z);
ZeroRow zero_row(const FormSpec& form, const BoundaryZeroRecord& z);

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const RunReport& r);
RunReport run_report_from_json(const nlohmann::json& j);

// 17 significant digits: binary64 round-trips losslessly.
std::string format_double(double x);

std::string to_csv(const RunReport& r);

/// theta, f_value, main_term, envelope_plus, envelope_minus rows over a
/// uniform grid, followed by a zeros block.
std::string plot_data_csv(const FormSpec& form, int grid_density);

CheckStatus overall_status(const std::vector<VerificationReport>& checks);

}  // namespace eisarc

#endif
