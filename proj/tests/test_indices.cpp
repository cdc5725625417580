#include <cmath>

#include <doctest.h>

#include "sombor/constructions.hpp"
#include "sombor/errors.hpp"
#include "sombor/indices.hpp"

using namespace sombor;
using doctest::Approx;

TEST_SUITE_BEGIN("indices");

TEST_CASE("edge weights") {
    CHECK(edge_weight(IndexKind::Sombor, 1, 1) == Approx(std::sqrt(2.0)));
    CHECK(edge_weight(IndexKind::Sombor, 2, 3) == Approx(std::sqrt(13.0)));
    CHECK(edge_weight(IndexKind::ReducedSombor, 1, 1) == Approx(0.0));
    CHECK(edge_weight(IndexKind::ReducedSombor, 3, 5) == Approx(std::sqrt(20.0)));
    CHECK_THROWS_AS(edge_weight(IndexKind::Sombor, 0, 2), InputError);
}

TEST_CASE("index values on basic graphs") {
    const Graph single_edge = graph_from_edges(2, {{0, 1}});
    CHECK(index_value(single_edge, IndexKind::Sombor).value == Approx(std::sqrt(2.0)));
    CHECK(index_value(single_edge, IndexKind::ReducedSombor).value == Approx(0.0));

    CHECK(index_value(build_cycle(5), IndexKind::Sombor).value ==
          Approx(5.0 * std::sqrt(8.0)));
    CHECK(index_value(build_cycle(5), IndexKind::ReducedSombor).value ==
          Approx(5.0 * std::sqrt(2.0)));

    const Graph star = graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(index_value(star, IndexKind::Sombor).value == Approx(3.0 * std::sqrt(10.0)));
    CHECK(index_value(star, IndexKind::ReducedSombor).value == Approx(6.0));

    CHECK(index_value(graph_from_edges(3, {}), IndexKind::Sombor).value == Approx(0.0));
    CHECK_THROWS_AS(index_value(graph_from_edges(0, {}), IndexKind::Sombor), InputError);
}

TEST_CASE("permutation invariance of the index") {
    const Graph g = build_diameter_max_family(9, 5);
    const double reference = index_value(g, IndexKind::Sombor).value;
    const Graph h = permute_vertices(g, {8, 0, 7, 1, 6, 2, 5, 3, 4});
    CHECK(index_value(h, IndexKind::Sombor).value == Approx(reference));
}

TEST_CASE("closed form matches frozen radical expressions") {
    // values frozen from the exact radical forms, not decimal approximations
    CHECK(closed_form_value(6, 4, IndexKind::Sombor).value ==
          Approx(2.0 * std::sqrt(10.0) + 4.0 * std::sqrt(13.0)).epsilon(1e-12));
    CHECK(closed_form_value(6, 4, IndexKind::ReducedSombor).value ==
          Approx(4.0 + 4.0 * std::sqrt(5.0)).epsilon(1e-12));
    CHECK(closed_form_value(10, 5, IndexKind::Sombor).value ==
          Approx(4.0 * std::sqrt(37.0) + 2.0 * std::sqrt(40.0) + 3.0 * std::sqrt(13.0) +
                 std::sqrt(5.0))
              .epsilon(1e-12));
    CHECK(closed_form_value(10, 5, IndexKind::ReducedSombor).value ==
          Approx(21.0 + 2.0 * std::sqrt(26.0) + 3.0 * std::sqrt(5.0)).epsilon(1e-12));
    // d >= 6 branch picks up the sqrt(2) path-edge run
    CHECK(closed_form_value(10, 7, IndexKind::Sombor).value ==
          Approx(2.0 * std::sqrt(17.0) + 2.0 * std::sqrt(20.0) + 2.0 * std::sqrt(2.0) * 2.0 +
                 3.0 * std::sqrt(13.0) + std::sqrt(5.0))
              .epsilon(1e-12));

    CHECK_THROWS_AS(closed_form_value(6, 3, IndexKind::Sombor), InputError);
    CHECK_THROWS_AS(closed_form_value(6, 5, IndexKind::Sombor), InputError);
    CHECK_THROWS_AS(closed_form_value(5, 4, IndexKind::Sombor), InputError);
}

TEST_CASE("closed form equals the direct edge sum on the built family") {
    for (int n : {6, 7, 9, 12, 25, 60, 121, 200}) {
        for (int d = 4; d <= n - 2; d += (n > 20 ? 7 : 1)) {
            const Graph g = build_diameter_max_family(n, d);
            for (IndexKind kind : {IndexKind::Sombor, IndexKind::ReducedSombor}) {
                const double direct = index_value(g, kind).value;
                const double closed = closed_form_value(n, d, kind).value;
                CHECK(direct == Approx(closed).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("degree step margin") {
    CHECK(degree_step_margin(2.0, 1.0) ==
          Approx(std::sqrt(5.0) - std::sqrt(2.0)).epsilon(1e-12));
    CHECK(degree_step_margin(3.0, 4.0) ==
          Approx(5.0 - std::sqrt(20.0)).epsilon(1e-12));
    CHECK_THROWS_AS(degree_step_margin(1.0, 1.0), InputError);
    CHECK_THROWS_AS(degree_step_margin(2.0, 0.0), InputError);
}

TEST_CASE("power pair sum") {
    CHECK(power_pair_sum(4.0, 2.0, 1.0) == Approx(10.0));
    CHECK(power_pair_sum(4.0, 1.0, 3.0) == Approx(4.0));
    CHECK(power_pair_sum(0.0, 2.0, 0.0) == Approx(0.0));
    CHECK_THROWS_AS(power_pair_sum(4.0, 0.5, 1.0), InputError);
    CHECK_THROWS_AS(power_pair_sum(4.0, 2.0, 5.0), InputError);
    CHECK_THROWS_AS(power_pair_sum(4.0, 2.0, -1.0), InputError);
}

TEST_CASE("RealValue comparison and name parsing") {
    const RealValue v{1.0, 1e-9};
    CHECK(v.approx_equal(1.0 + 5e-10));
    CHECK_FALSE(v.approx_equal(1.0 + 5e-9));
    CHECK(parse_index_kind("so") == IndexKind::Sombor);
    CHECK(parse_index_kind("sored") == IndexKind::ReducedSombor);
    CHECK_FALSE(parse_index_kind("nope").has_value());
    CHECK(index_name(IndexKind::Sombor) == "so");
    CHECK(index_name(IndexKind::ReducedSombor) == "sored");
}

TEST_SUITE_END();
