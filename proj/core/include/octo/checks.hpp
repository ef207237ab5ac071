#ifndef OCTO_CHECKS_HPP
#define OCTO_CHECKS_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace octo {

enum class CheckStatus { pass, fail, flagged };

std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string& s);

struct CheckResult {
    std::string check_id;
    std::string paper_location;
    std::string expected;
    std::string actual;
    CheckStatus status = CheckStatus::fail;
};

struct Report {
    std::string suite;
    std::string engine_version;
    std::string timestamp;
    std::vector<CheckResult> results;

    long long count(CheckStatus s) const;
    bool all_green() const { return count(CheckStatus::fail) == 0; }
};

/// Registered suite names, not including the "all" filter.
const std::vector<std::string>& suite_names();

/// Run every registered check matching the filter ("all", "octonions",
/// "stabilizers", "weyl", "magic", "multiplets", "table35"). Unknown
/// names raise UsageError. Results are in registration order.
Report run_verify(const std::string& suite_filter = "all");

/// Markdown tables computed live: "magic-square", "sugra-triplet",
/// "table35", "spheres". Unknown names raise UsageError.
std::string render_table(const std::string& name);

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string report_to_markdown(const Report& r);

} // namespace octo

#endif
