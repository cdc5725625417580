#include <cmath>

#include <doctest.h>

#include "sombor/certificate.hpp"
#include "sombor/constructions.hpp"
#include "sombor/errors.hpp"
#include "sombor/indices.hpp"

using namespace sombor;
using doctest::Approx;

TEST_SUITE_BEGIN("constructions");

TEST_CASE("cycle") {
    const Graph c3 = build_cycle(3);
    CHECK(c3.size() == 3);
    CHECK(is_unicyclic(c3));
    CHECK(diameter(build_cycle(8)) == 4);
    CHECK(diameter(build_cycle(9)) == 4);
    CHECK_THROWS_AS(build_cycle(2), InputError);
}

TEST_CASE("diameter-max family shape") {
    for (int n = 6; n <= 12; ++n) {
        for (int d = 4; d <= n - 2; ++d) {
            const Graph g = build_diameter_max_family(n, d);
            REQUIRE(is_unicyclic(g));
            CHECK(diameter(g) == d);
            CHECK(g.degree(1) == n - d + 1); // hub: path + apex + extra pendants
            CHECK(unique_cycle(g) == std::vector<int>{1, 2, 3, d + 1});
            CHECK(static_cast<int>(pendant_vertices(g).size()) == n - d);
        }
    }
    CHECK_THROWS_AS(build_diameter_max_family(6, 3), InputError);
    CHECK_THROWS_AS(build_diameter_max_family(6, 5), InputError);
}

TEST_CASE("triangle-pendant family shape") {
    const Graph g = build_triangle_pendants(9, 4, 2, 0);
    REQUIRE(is_unicyclic(g));
    CHECK(g.degree(0) == 6);
    CHECK(g.degree(1) == 4);
    CHECK(g.degree(2) == 2);
    CHECK(diameter(g) == 3);
    CHECK(diameter(build_triangle_pendants(7, 4, 0, 0)) == 2);
    CHECK(unique_cycle(g) == std::vector<int>{0, 1, 2});

    CHECK_THROWS_AS(build_triangle_pendants(9, 2, 4, 0), InputError);
    CHECK_THROWS_AS(build_triangle_pendants(9, 4, 1, 0), InputError);
}

TEST_CASE("rewire applies and validates edits") {
    const Graph g = build_cycle(4);
    const RewireSpec spec{{{0, 1}}, {{0, 2}}};
    const Graph h = rewire(g, spec);
    CHECK(h.size() == 4);
    CHECK(h.has_edge(0, 2));
    CHECK_FALSE(h.has_edge(0, 1));

    CHECK_THROWS_AS(rewire(g, {{{0, 2}}, {}}), InputError);   // not an edge
    CHECK_THROWS_AS(rewire(g, {{}, {{0, 1}}}), InputError);   // already present
    CHECK_THROWS_AS(rewire(g, {{}, {{1, 1}}}), InputError);   // loop

    const Graph back = rewire(h, inverse(spec));
    CHECK(back.edges() == g.edges());
}

TEST_CASE("rewiring a triangle tail one step along the path") {
    // A 6-vertex probe of the diameter-monotonicity argument: sliding the
    // triangle one step down the path changes the index by sqrt(10) -
    // sqrt(2), the constant the catalog bounds.
    const Graph before = graph_from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {1, 5}});
    const double so_before = index_value(before, IndexKind::Sombor).value;
    CHECK(so_before ==
          Approx(3.0 * std::sqrt(13.0) + 2.0 * std::sqrt(8.0) + std::sqrt(5.0)).epsilon(1e-12));

    const Graph after = rewire(before, {{{0, 5}}, {{2, 5}}});
    const double so_after = index_value(after, IndexKind::Sombor).value;
    CHECK(so_after == Approx(std::sqrt(10.0) + std::sqrt(18.0) + 3.0 * std::sqrt(13.0) +
                             std::sqrt(5.0))
                          .epsilon(1e-12));

    CHECK(so_after - so_before == Approx(std::sqrt(10.0) - std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("family members are pairwise non-isomorphic across parameters") {
    const auto a = canonical_certificate(build_diameter_max_family(9, 4));
    const auto b = canonical_certificate(build_diameter_max_family(9, 5));
    const auto c = canonical_certificate(build_diameter_max_family(9, 6));
    CHECK(a != b);
    CHECK(b != c);

    const auto t1 = canonical_certificate(build_triangle_pendants(8, 5, 0, 0));
    const auto t2 = canonical_certificate(build_triangle_pendants(8, 4, 1, 0));
    const auto t3 = canonical_certificate(build_triangle_pendants(8, 3, 1, 1));
    CHECK(t1 != t2);
    CHECK(t2 != t3);
}

TEST_SUITE_END();
