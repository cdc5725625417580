#include "sombor/constructions.hpp"

#include <algorithm>
#include <string>

#include "sombor/errors.hpp"

namespace sombor {

Graph build_cycle(int n) {
    if (n < 3) {
        throw InputError("build_cycle: need n >= 3");
    }
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int v = 0; v < n; ++v) {
        edges.push_back({v, (v + 1) % n});
    }
    return graph_from_edges(n, edges);
}

Graph build_diameter_max_family(int n, int d) {
    if (d < 4 || d > n - 2) {
        throw InputError("build_diameter_max_family: requires 4 <= d <= n - 2, got n=" +
                         std::to_string(n) + " d=" + std::to_string(d));
    }
    std::vector<Edge> edges;
    for (int v = 0; v < d; ++v) {
        edges.push_back({v, v + 1}); // the diametral path u_0 .. u_d
    }
    const int w = d + 1;
    edges.push_back({1, w}); // apex closes the 4-cycle u_1 u_2 u_3 w
    edges.push_back({3, w});
    for (int v = d + 2; v < n; ++v) {
        edges.push_back({1, v}); // remaining pendants sit on u_1
    }
    return graph_from_edges(n, edges);
}

Graph build_triangle_pendants(int n, int a, int b, int c) {
    if (!(a >= b && b >= c && c >= 0)) {
        throw InputError("build_triangle_pendants: need a >= b >= c >= 0");
    }
    if (a + b + c != n - 3) {
        throw InputError("build_triangle_pendants: pendant counts must sum to n - 3");
    }
    std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
    int next = 3;
    for (int i = 0; i < a; ++i) {
        edges.push_back({0, next++});
    }
    for (int i = 0; i < b; ++i) {
        edges.push_back({1, next++});
    }
    for (int i = 0; i < c; ++i) {
        edges.push_back({2, next++});
    }
    return graph_from_edges(n, edges);
}

Graph rewire(const Graph& g, const RewireSpec& spec) {
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : spec.removals) {
        if (u > v) {
            std::swap(u, v);
        }
        auto it = std::find(edges.begin(), edges.end(), Edge{u, v});
        if (it == edges.end()) {
            throw InputError("rewire: removal (" + std::to_string(u) + "," +
                             std::to_string(v) + ") is not an edge");
        }
        edges.erase(it);
    }
    for (auto [u, v] : spec.additions) {
        if (u > v) {
            std::swap(u, v);
        }
        if (std::find(edges.begin(), edges.end(), Edge{u, v}) != edges.end()) {
            throw InputError("rewire: addition (" + std::to_string(u) + "," +
                             std::to_string(v) + ") already present");
        }
        edges.push_back({u, v});
    }
    return graph_from_edges(g.order(), edges); // rejects loops/duplicates
}

RewireSpec inverse(const RewireSpec& spec) {
    return {spec.additions, spec.removals};
}

} // namespace sombor
