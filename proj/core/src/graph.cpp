#include "sombor/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <string>

#include "sombor/errors.hpp"

namespace sombor {

namespace {

void check_vertex(const Graph& g, int v, const char* who) {
    if (v < 0 || v >= g.order()) {
        throw InputError(std::string(who) + ": vertex " + std::to_string(v) +
                         " out of range for order " + std::to_string(g.order()));
    }
}

} // namespace

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(*this, v, "neighbors");
    return adjacency_[v];
}

int Graph::degree(int v) const {
    check_vertex(*this, v, "degree");
    return static_cast<int>(adjacency_[v].size());
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(*this, u, "has_edge");
    check_vertex(*this, v, "has_edge");
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (const auto& adj : adjacency_) {
        best = std::max(best, static_cast<int>(adj.size()));
    }
    return best;
}

Graph graph_from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) {
        throw InputError("graph_from_edges: negative order");
    }
    Graph g;
    g.n_ = n;
    g.adjacency_.resize(n);
    g.edges_.reserve(edges.size());
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw InputError("graph_from_edges: edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ") out of range for order " + std::to_string(n));
        }
        if (u == v) {
            throw InputError("graph_from_edges: loop at vertex " + std::to_string(u));
        }
        if (u > v) {
            std::swap(u, v);
        }
        if (!seen.insert({u, v}).second) {
            throw InputError("graph_from_edges: duplicate edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
        }
        g.edges_.push_back({u, v});
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    for (auto& adj : g.adjacency_) {
        std::sort(adj.begin(), adj.end());
    }
    return g;
}

Graph permute_vertices(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) {
        throw InputError("permute_vertices: permutation size mismatch");
    }
    std::vector<bool> hit(n, false);
    for (int image : perm) {
        if (image < 0 || image >= n || hit[image]) {
            throw InputError("permute_vertices: not a permutation");
        }
        hit[image] = true;
    }
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (auto [u, v] : g.edges()) {
        edges.push_back({perm[u], perm[v]});
    }
    return graph_from_edges(n, edges);
}

Graph remove_vertex(const Graph& g, int v) {
    check_vertex(g, v, "remove_vertex");
    std::vector<Edge> edges;
    edges.reserve(g.size());
    auto relabel = [v](int w) { return w > v ? w - 1 : w; };
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) {
            continue;
        }
        edges.push_back({relabel(a), relabel(b)});
    }
    return graph_from_edges(g.order() - 1, edges);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    check_vertex(g, source, "bfs_distances");
    std::vector<int> dist(g.order(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) {
        return false;
    }
    const auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

bool is_unicyclic(const Graph& g) {
    return g.order() >= 3 && g.size() == g.order() && is_connected(g);
}

std::vector<int> unique_cycle(const Graph& g) {
    if (!is_unicyclic(g)) {
        throw StructureError("unique_cycle: graph is not unicyclic");
    }
    // Strip pendant vertices until only the cycle remains.
    const int n = g.order();
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
    }
    std::vector<bool> removed(n, false);
    std::deque<int> leaves;
    for (int v = 0; v < n; ++v) {
        if (degree[v] == 1) {
            leaves.push_back(v);
        }
    }
    while (!leaves.empty()) {
        const int v = leaves.front();
        leaves.pop_front();
        removed[v] = true;
        for (int w : g.neighbors(v)) {
            if (!removed[w] && --degree[w] == 1) {
                leaves.push_back(w);
            }
        }
    }
    // Walk the cycle from its smallest vertex toward its smaller neighbor.
    int start = -1;
    for (int v = 0; v < n; ++v) {
        if (!removed[v]) {
            start = v;
            break;
        }
    }
    std::vector<int> cycle{start};
    int prev = -1;
    int cur = start;
    do {
        int next = -1;
        for (int w : g.neighbors(cur)) {
            if (!removed[w] && w != prev && (next < 0 || w < next)) {
                next = w;
            }
        }
        // A 2-cycle cannot occur in a simple graph, so `next` is valid; on
        // the first step both cycle neighbors are candidates and the
        // smaller one is chosen.
        prev = cur;
        cur = next;
        if (cur != start) {
            cycle.push_back(cur);
        }
    } while (cur != start);
    return cycle;
}

int diameter(const Graph& g) {
    if (g.order() < 2) {
        throw StructureError("diameter: need at least 2 vertices");
    }
    int best = 0;
    for (int v = 0; v < g.order(); ++v) {
        const auto dist = bfs_distances(g, v);
        for (int d : dist) {
            if (d < 0) {
                throw StructureError("diameter: graph is disconnected");
            }
            best = std::max(best, d);
        }
    }
    return best;
}

std::vector<int> pendant_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 1) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<int> non_pendant_neighbors(const Graph& g, int v) {
    std::vector<int> out;
    for (int w : g.neighbors(v)) {
        if (g.degree(w) >= 2) {
            out.push_back(w);
        }
    }
    return out;
}

std::string write_graph_text(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

Graph read_graph_text(std::istream& in) {
    int n = 0;
    int m = 0;
    if (!(in >> n >> m)) {
        throw InputError("read_graph_text: expected header line \"n m\"");
    }
    if (n < 0 || m < 0) {
        throw InputError("read_graph_text: negative counts in header");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u = 0;
        int v = 0;
        if (!(in >> u >> v)) {
            throw InputError("read_graph_text: expected " + std::to_string(m) +
                             " edges, got " + std::to_string(i));
        }
        edges.push_back({u, v});
    }
    return graph_from_edges(n, edges);
}

Graph read_graph_text(const std::string& text) {
    std::istringstream in(text);
    return read_graph_text(in);
}

} // namespace sombor
