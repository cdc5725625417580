#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sombor/graph.hpp"

namespace sombor {

inline constexpr double kDefaultTolerance = 1e-9;

enum class IndexKind {
    Sombor,        // edge weight sqrt(du^2 + dv^2)
    ReducedSombor, // edge weight sqrt((du-1)^2 + (dv-1)^2)
};

std::string index_name(IndexKind kind);
std::optional<IndexKind> parse_index_kind(std::string_view name);

// A real quantity carrying the tolerance under which downstream comparisons
// treat two values as equal.
struct RealValue {
    double value = 0.0;
    double tolerance = kDefaultTolerance;

    bool approx_equal(double other) const;
    bool approx_equal(const RealValue& other) const { return approx_equal(other.value); }
};

// Weight contributed by one edge whose endpoints have degrees du, dv >= 1.
double edge_weight(IndexKind kind, int du, int dv);

// Sum of edge weights over all edges of g.  Throws InputError on the empty
// graph (order 0); an edgeless graph evaluates to 0.
RealValue index_value(const Graph& g, IndexKind kind);

// sqrt(x^2 + y^2) - sqrt((x-1)^2 + y^2): how much one edge weight gains
// when an endpoint degree steps from x-1 to x while the other endpoint
// stays at y.  Requires x > 1 and y > 0; strictly increasing in x and
// strictly decreasing in y on that domain.
double degree_step_margin(double x, double y);

// f(x) = x^p + (a - x)^p for 0 <= x <= a and p >= 1: decreasing on
// [0, a/2], increasing on [a/2, a], symmetric about a/2.
double power_pair_sum(double a, double p, double x);

// Closed-form value of the diameter-extremal family (see constructions) on
// n vertices with diameter d.  Valid for 4 <= d <= n - 2; throws
// InputError outside that range.
RealValue closed_form_value(int n, int d, IndexKind kind);

} // namespace sombor
