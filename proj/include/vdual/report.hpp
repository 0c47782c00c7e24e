#ifndef VDUAL_REPORT_HPP
#define VDUAL_REPORT_HPP

#include <json.hpp>

#include "vdual/problem.hpp"

namespace vdual {

inline constexpr const char* kToolName = "vdual";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

struct RunOutcome {
    nlohmann::ordered_json report;
    bool had_errors = false;
};

// Execute the problem's analyses in declaration order.  Each analysis lands
// in the report as {kind, params, ok, result|error}; module errors are
// embedded per analysis and the run continues.  Deterministic for a fixed
// seed up to the timing fields.
RunOutcome run_problem(const ProblemFile& p, uint64_t default_seed);

// Remove the volatile timing fields (for golden-file comparison).
void scrub_timings(nlohmann::ordered_json& report);

struct ReplayStats {
    int lines = 0;
    int failures = 0;
};

// Re-verify every certificate line in a report from the report alone,
// through a fresh engine instance.
ReplayStats replay_report_certificates(const nlohmann::ordered_json& report);

// One-line-per-analysis human rendering.
std::string render_text_report(const nlohmann::ordered_json& report);

} // namespace vdual

#endif
