#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace sombor {

using Edge = std::pair<int, int>;

// Simple undirected graph with vertices 0..n-1.  Immutable after
// construction; build instances through graph_from_edges() or the
// transformation helpers.  Edges are stored normalized (u < v) and sorted.
class Graph {
public:
    Graph() = default;

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    // Sorted neighbor list of v.  Throws InputError if v is out of range.
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    int max_degree() const noexcept;

private:
    friend Graph graph_from_edges(int n, const std::vector<Edge>& edges);

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

// Builds a graph from an edge list.  Rejects out-of-range labels, loops and
// duplicate edges (in either orientation) with InputError.
Graph graph_from_edges(int n, const std::vector<Edge>& edges);

// Relabels g by perm (old label v becomes perm[v]).  perm must be a
// permutation of 0..n-1.
Graph permute_vertices(const Graph& g, const std::vector<int>& perm);

// Deletes vertex v and all incident edges; remaining vertices are
// renumbered downward to keep labels contiguous.
Graph remove_vertex(const Graph& g, int v);

bool is_connected(const Graph& g);

// True iff g is connected with exactly order() edges (one cycle).
bool is_unicyclic(const Graph& g);

// The vertices of the unique cycle of a unicyclic graph, listed in cycle
// order starting from the smallest cycle vertex, second vertex chosen as
// its smaller cycle neighbor.  Throws StructureError if g is not unicyclic.
std::vector<int> unique_cycle(const Graph& g);

// BFS distances from source (-1 is never produced; g must be connected
// for all entries to be finite, otherwise unreached vertices hold -1).
std::vector<int> bfs_distances(const Graph& g, int source);

// Largest pairwise distance.  Throws StructureError if g is disconnected
// or has fewer than 2 vertices.
int diameter(const Graph& g);

// Degree-1 vertices, ascending.
std::vector<int> pendant_vertices(const Graph& g);

// Neighbors of v with degree >= 2, ascending.
std::vector<int> non_pendant_neighbors(const Graph& g, int v);

// Text format: first line "n m", then m lines "u v" (0-based labels),
// newline-terminated.  Reader throws InputError on malformed input.
std::string write_graph_text(const Graph& g);
Graph read_graph_text(std::istream& in);
Graph read_graph_text(const std::string& text);

} // namespace sombor
