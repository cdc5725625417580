#include <cmath>

#include <doctest.h>

#include "sombor/errors.hpp"
#include "sombor/verify.hpp"

using namespace sombor;
using doctest::Approx;

TEST_SUITE_BEGIN("verify");

TEST_CASE("max theorem sweep passes on small orders") {
    for (IndexKind kind : {IndexKind::Sombor, IndexKind::ReducedSombor}) {
        const auto report = verify_max_theorem(6, 7, kind);
        CHECK(report.suite == "max-theorem-" + index_name(kind));
        REQUIRE(report.rows.size() == 3); // (6,4), (7,4), (7,5)
        CHECK(report.pass());
        CHECK(report.rows[0].case_id == "n=6 d=4");
        CHECK(report.rows[2].case_id == "n=7 d=5");
    }
}

TEST_CASE("max theorem precondition checks") {
    CHECK_THROWS_AS(verify_max_theorem(5, 7, IndexKind::Sombor), InputError);
    CHECK_THROWS_AS(verify_max_theorem(7, 6, IndexKind::Sombor), InputError);
    CHECK_THROWS_AS(verify_max_theorem(6, 13, IndexKind::Sombor), InputError);
}

TEST_CASE("min sweep passes and names the cycle") {
    const auto report = verify_min(5, 7);
    CHECK(report.suite == "min-cycle");
    REQUIRE(report.rows.size() == 3);
    CHECK(report.pass());
    CHECK(report.rows[0].case_id == "n=5");
    CHECK_THROWS_AS(verify_min(2, 5), InputError);
}

TEST_CASE("small-diameter sweep: d2, d3 and runner-up rows") {
    const auto report = verify_small_diameter(5, 7);
    REQUIRE(report.rows.size() == 9);
    CHECK(report.pass());
    // n=5 has no d=3 claim; the row is an explicit skip
    CHECK(report.rows[1].case_id == "n=5 d3-max");
    CHECK(report.rows[1].expected.find("skip") == 0);
    CHECK(report.rows[4].case_id == "n=6 d3-max");
    CHECK(report.rows[4].expected.find("skip") == std::string::npos);
    CHECK_THROWS_AS(verify_small_diameter(4, 7), InputError);
}

TEST_CASE("maximizer structure rows on small cases") {
    const auto report = check_maximizer_structure(7, 4);
    REQUIRE(report.rows.size() == 3);
    CHECK(report.pass());
    CHECK(report.rows[0].case_id == "n=7 d=4 cycle-meets-diametral-path");

    // n = d + 2: pendant-deletion rows are hypothesis skips
    const auto tight = check_maximizer_structure(7, 5);
    REQUIRE(tight.rows.size() == 3);
    CHECK(tight.pass());
    CHECK(tight.rows[1].expected.find("skip") == 0);
    CHECK(tight.rows[2].expected.find("skip") == 0);

    CHECK_THROWS_AS(check_maximizer_structure(7, 3), InputError);
    CHECK_THROWS_AS(check_maximizer_structure(7, 6), InputError);
}

TEST_CASE("maximizer structure range covers all (n, d) cells") {
    const auto report = check_maximizer_structure_range(6, 7);
    REQUIRE(report.rows.size() == 9); // (6,4) + (7,4) + (7,5), 3 rows each
    CHECK(report.pass());
    CHECK(report.rows[0].case_id.find("n=6 d=4") == 0);
}

TEST_CASE("radical constant catalog") {
    const auto& catalog = inequality_catalog();
    CHECK(catalog.size() >= 12);

    const auto report = check_inequality_catalog();
    REQUIRE(report.rows.size() == catalog.size());
    CHECK(report.pass());

    // spot-check frozen values computed independently beforehand
    CHECK(catalog[0].id == "diameter-step-triangle");
    CHECK(catalog[0].evaluate() == Approx(-1.748064098).epsilon(1e-8));
    CHECK(catalog[12].id == "branched-support-final-b");
    CHECK(catalog[12].evaluate() == Approx(-0.029835526).epsilon(1e-6));
    for (const auto& entry : catalog) {
        CHECK(entry.evaluate() < -1e-6);
    }
}

TEST_CASE("transformation delta grids") {
    const auto report = check_transformation_deltas(12);
    REQUIRE(report.rows.size() == 16);
    CHECK(report.pass());
    for (const auto& row : report.rows) {
        CHECK(row.observed.find("violations=0") != std::string::npos);
    }

    // a denser grid also passes; tiny grids are rejected
    CHECK(check_transformation_deltas(16).pass());
    CHECK_THROWS_AS(check_transformation_deltas(4), InputError);
}

TEST_CASE("auxiliary function grids") {
    const auto report = check_lemma_grids();
    REQUIRE(report.rows.size() == 5);
    CHECK(report.pass());
    CHECK(report.rows[0].case_id == "degree-step-margin-increasing-x");
}

TEST_SUITE_END();
