#include <doctest.h>

#include "sombor/report.hpp"

using namespace sombor;

TEST_SUITE_BEGIN("report");

TEST_CASE("format_real uses 12 significant digits") {
    CHECK(format_real(20.746760422099657) == "20.7467604221");
    CHECK(format_real(1.0) == "1");
    CHECK(format_real(-0.029835526) == "-0.029835526");
    CHECK(format_real(2.5e-13) == "2.5e-13");
}

TEST_CASE("csv rendering and escaping") {
    VerificationReport report;
    report.suite = "demo";
    report.rows.push_back({"n=6 d=4", "10", "10", true});
    report.rows.push_back({"case2", "a,b", "say \"hi\"", false});
    const std::string csv = render_csv(report);
    CHECK(csv ==
          "suite,case,expected,observed,pass\n"
          "demo,n=6 d=4,10,10,true\n"
          "demo,case2,\"a,b\",\"say \"\"hi\"\"\",false\n");
}

TEST_CASE("json rendering carries rows and summary") {
    VerificationReport report;
    report.suite = "demo";
    report.rows.push_back({"r1", "e", "o", true});
    report.rows.push_back({"r2", "e", "o", false});
    const std::string json = render_json(report);
    CHECK(json.find("\"suite\": \"demo\"") != std::string::npos);
    CHECK(json.find("\"case\": \"r1\"") != std::string::npos);
    CHECK(json.find("\"passed\": 1") != std::string::npos);
    CHECK(json.find("\"pass\": false") != std::string::npos);
    CHECK(report.passed_count() == 1);
    CHECK_FALSE(report.pass());
}

TEST_CASE("empty report passes vacuously") {
    VerificationReport report;
    report.suite = "empty";
    CHECK(report.pass());
    CHECK(render_csv(report) == "suite,case,expected,observed,pass\n");
}

TEST_CASE("merge_reports concatenates rows in order") {
    VerificationReport a;
    a.suite = "a";
    a.rows.push_back({"r1", "e", "o", true});
    VerificationReport b;
    b.suite = "b";
    b.rows.push_back({"r2", "e", "o", true});
    const auto merged = merge_reports("both", {a, b});
    CHECK(merged.suite == "both");
    REQUIRE(merged.rows.size() == 2);
    CHECK(merged.rows[0].case_id == "r1");
    CHECK(merged.rows[1].case_id == "r2");
}

TEST_SUITE_END();
