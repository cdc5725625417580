#include "sombor/rooted_trees.hpp"

#include <algorithm>

#include "sombor/errors.hpp"

namespace sombor {

namespace {

// Extends `table` (codes by size, table[s] sorted) up to max_size.  A tree
// on s vertices is a root plus a multiset of subtrees with sizes summing to
// s - 1; taking subtree codes in non-increasing order generates each
// multiset once.  To avoid duplicates the recursion picks subtrees in
// non-increasing (size, code) order.
void build_codes(std::vector<std::vector<std::string>>& table, int max_size) {
    if (table.empty()) {
        table.resize(2);
        table[1] = {"()"};
    }
    for (int size = static_cast<int>(table.size()); size <= max_size; ++size) {
        std::vector<std::string> codes;
        // chosen: concatenated child codes so far.  Children are picked in
        // non-increasing (size, table index) order, so each multiset of
        // subtrees is produced exactly once.
        std::string chosen;
        auto rec = [&](auto&& self, int remaining, int max_child_size, int max_child_index) -> void {
            if (remaining == 0) {
                codes.push_back("(" + chosen + ")");
                return;
            }
            for (int s = std::min(remaining, max_child_size); s >= 1; --s) {
                const auto& pool = table[s];
                const int start =
                    s == max_child_size ? std::min<int>(max_child_index, pool.size() - 1)
                                        : static_cast<int>(pool.size()) - 1;
                for (int i = start; i >= 0; --i) {
                    chosen += pool[i];
                    self(self, remaining - s, s, i);
                    chosen.resize(chosen.size() - pool[i].size());
                }
            }
        };
        rec(rec, size - 1, size - 1, static_cast<int>(table[size - 1].size()) - 1);
        std::sort(codes.begin(), codes.end());
        table.push_back(std::move(codes));
    }
}

} // namespace

std::vector<std::vector<std::string>> rooted_tree_codes_up_to(int max_size) {
    if (max_size < 1) {
        throw InputError("rooted_tree_codes_up_to: need max_size >= 1");
    }
    std::vector<std::vector<std::string>> table;
    build_codes(table, max_size);
    table.resize(max_size + 1);
    return table;
}

std::vector<std::string> rooted_tree_codes(int vertex_count) {
    if (vertex_count < 1) {
        throw InputError("rooted_tree_codes: need vertex_count >= 1");
    }
    return rooted_tree_codes_up_to(vertex_count)[vertex_count];
}

int rooted_tree_size(const std::string& code) {
    return static_cast<int>(code.size() / 2);
}

int materialize_rooted_tree(const std::string& code, int root, int next_label,
                            std::vector<Edge>& edges) {
    if (code.size() < 2 || code.front() != '(' || code.back() != ')') {
        throw InputError("materialize_rooted_tree: malformed code");
    }
    // Walk the parenthesization; '(' descends to a new child, ')' returns.
    std::vector<int> stack{root};
    int next = next_label;
    for (std::size_t i = 1; i + 1 < code.size(); ++i) {
        if (code[i] == '(') {
            const int child = next++;
            edges.push_back({stack.back(), child});
            stack.push_back(child);
        } else if (code[i] == ')') {
            if (stack.size() <= 1) {
                throw InputError("materialize_rooted_tree: unbalanced code");
            }
            stack.pop_back();
        } else {
            throw InputError("materialize_rooted_tree: unexpected character");
        }
    }
    if (stack.size() != 1) {
        throw InputError("materialize_rooted_tree: unbalanced code");
    }
    return next;
}

} // namespace sombor
