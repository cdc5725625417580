#pragma once

#include <string>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

// Canonical code of an unlabeled rooted tree: "(" + the codes of the root's
// subtrees, concatenated in a fixed total order (non-increasing size, then
// non-increasing code) + ")".  Codes are self-delimiting, so two rooted
// trees are isomorphic iff their codes are equal, and generating each
// subtree multiset once yields each isomorphism class exactly once.

// All canonical codes of rooted trees on vertex_count >= 1 vertices,
// lexicographically sorted.
std::vector<std::string> rooted_tree_codes(int vertex_count);

// Codes grouped by size 1..max_size (index 0 unused).
std::vector<std::vector<std::string>> rooted_tree_codes_up_to(int max_size);

// Number of vertices of the tree a code denotes (= code.size() / 2).
int rooted_tree_size(const std::string& code);

// Appends the tree's edges with the root mapped to `root` and the other
// vertices labeled next_label, next_label+1, ... in code order; returns the
// first label left unused.
int materialize_rooted_tree(const std::string& code, int root, int next_label,
                            std::vector<Edge>& edges);

} // namespace sombor
