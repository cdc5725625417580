#include "sombor/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace sombor {

bool VerificationReport::pass() const {
    for (const auto& row : rows) {
        if (!row.pass) {
            return false;
        }
    }
    return true;
}

std::size_t VerificationReport::passed_count() const {
    std::size_t count = 0;
    for (const auto& row : rows) {
        count += row.pass ? 1 : 0;
    }
    return count;
}

std::string format_real(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", v);
    return buffer;
}

namespace {

std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

} // namespace

std::string render_csv(const VerificationReport& report) {
    std::string out = "suite,case,expected,observed,pass\n";
    for (const auto& row : report.rows) {
        out += csv_field(report.suite);
        out += ',';
        out += csv_field(row.case_id);
        out += ',';
        out += csv_field(row.expected);
        out += ',';
        out += csv_field(row.observed);
        out += ',';
        out += row.pass ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string render_json(const VerificationReport& report) {
    nlohmann::ordered_json doc;
    doc["suite"] = report.suite;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        doc["rows"].push_back({{"case", row.case_id},
                               {"expected", row.expected},
                               {"observed", row.observed},
                               {"pass", row.pass}});
    }
    doc["summary"] = {{"rows", report.rows.size()},
                      {"passed", report.passed_count()},
                      {"pass", report.pass()}};
    return doc.dump(2) + "\n";
}

VerificationReport merge_reports(const std::string& suite,
                                 const std::vector<VerificationReport>& parts) {
    VerificationReport merged;
    merged.suite = suite;
    for (const auto& part : parts) {
        merged.rows.insert(merged.rows.end(), part.rows.begin(), part.rows.end());
    }
    return merged;
}

} // namespace sombor
