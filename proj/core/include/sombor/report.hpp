#pragma once

#include <string>
#include <vector>

namespace sombor {

// One checked claim.  `expected` states the claim, `observed` what the
// computation produced.  Skipped rows (hypothesis out of range) set
// pass = true and say "skip" in `expected`.
struct ReportRow {
    std::string case_id;   // no commas; e.g. "n=7 d=4"
    std::string expected;
    std::string observed;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    std::vector<ReportRow> rows;

    bool pass() const;
    std::size_t passed_count() const;
};

// Renders v with 12 significant digits (shortest form, C locale).
std::string format_real(double v);

// CSV with header "suite,case,expected,observed,pass"; fields containing
// commas, quotes or newlines are quoted.
std::string render_csv(const VerificationReport& report);

// JSON object: suite name, array of row objects, and a summary object.
// Two-space indentation, keys in insertion order.
std::string render_json(const VerificationReport& report);

// Concatenates several reports into one (suite taken from `suite`).
VerificationReport merge_reports(const std::string& suite,
                                 const std::vector<VerificationReport>& parts);

} // namespace sombor
