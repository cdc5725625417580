#include "sombor/indices.hpp"

#include <cmath>
#include <string>

#include "sombor/errors.hpp"

namespace sombor {

std::string index_name(IndexKind kind) {
    return kind == IndexKind::Sombor ? "so" : "sored";
}

std::optional<IndexKind> parse_index_kind(std::string_view name) {
    if (name == "so" || name == "sombor") {
        return IndexKind::Sombor;
    }
    if (name == "sored" || name == "reduced") {
        return IndexKind::ReducedSombor;
    }
    return std::nullopt;
}

bool RealValue::approx_equal(double other) const {
    return std::fabs(value - other) <= tolerance;
}

double edge_weight(IndexKind kind, int du, int dv) {
    if (du < 1 || dv < 1) {
        throw InputError("edge_weight: endpoint degrees must be >= 1");
    }
    const double a = kind == IndexKind::Sombor ? du : du - 1;
    const double b = kind == IndexKind::Sombor ? dv : dv - 1;
    return std::sqrt(a * a + b * b);
}

RealValue index_value(const Graph& g, IndexKind kind) {
    if (g.order() == 0) {
        throw InputError("index_value: empty graph");
    }
    double sum = 0.0;
    for (auto [u, v] : g.edges()) {
        sum += edge_weight(kind, g.degree(u), g.degree(v));
    }
    return {sum, kDefaultTolerance};
}

double degree_step_margin(double x, double y) {
    if (!(x > 1.0) || !(y > 0.0)) {
        throw InputError("degree_step_margin: requires x > 1 and y > 0");
    }
    return std::sqrt(x * x + y * y) - std::sqrt((x - 1.0) * (x - 1.0) + y * y);
}

double power_pair_sum(double a, double p, double x) {
    if (!(a >= 0.0) || !(p >= 1.0) || x < 0.0 || x > a) {
        throw InputError("power_pair_sum: requires a >= 0, p >= 1, 0 <= x <= a");
    }
    return std::pow(x, p) + std::pow(a - x, p);
}

RealValue closed_form_value(int n, int d, IndexKind kind) {
    if (d < 4 || d > n - 2) {
        throw InputError("closed_form_value: requires 4 <= d <= n - 2, got n=" +
                         std::to_string(n) + " d=" + std::to_string(d));
    }
    const double q = n - d; // shorthand: the hub has degree q + 1
    double sum = 0.0;
    if (kind == IndexKind::Sombor) {
        sum = (n - d - 1) * std::sqrt((q + 1.0) * (q + 1.0) + 1.0) +
              2.0 * std::sqrt((q + 1.0) * (q + 1.0) + 4.0);
        if (d == 4) {
            sum += 2.0 * std::sqrt(13.0) + std::sqrt(10.0);
        } else {
            sum += 2.0 * std::sqrt(2.0) * (d - 5) + 3.0 * std::sqrt(13.0) + std::sqrt(5.0);
        }
    } else {
        sum = (n - d - 1) * q + 2.0 * std::sqrt(q * q + 1.0);
        if (d == 4) {
            sum += 2.0 * std::sqrt(5.0) + 2.0;
        } else {
            sum += std::sqrt(2.0) * (d - 5) + 3.0 * std::sqrt(5.0) + 1.0;
        }
    }
    return {sum, kDefaultTolerance};
}

} // namespace sombor
