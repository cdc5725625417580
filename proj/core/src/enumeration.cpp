#include "sombor/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_set>

#include "sombor/errors.hpp"
#include "sombor/parallel.hpp"
#include "sombor/rooted_trees.hpp"

namespace sombor {

namespace {

// A unicyclic graph is a cycle of length c with a rooted tree hanging off
// each cycle vertex (trees include their root, so the c tree sizes sum to
// n).  Two such graphs are isomorphic iff their cycles have equal length
// and their tuples of canonical tree codes agree up to rotation and
// reflection, so keeping only tuples that are minimal in their dihedral
// orbit enumerates each isomorphism class exactly once.
bool tuple_is_dihedral_minimal(const std::vector<const std::string*>& t) {
    const int c = static_cast<int>(t.size());
    for (int r = 0; r < c; ++r) {
        if (r != 0) {
            for (int k = 0; k < c; ++k) {
                const auto& a = *t[k];
                const auto& b = *t[(r + k) % c];
                if (a != b) {
                    if (b < a) {
                        return false;
                    }
                    break;
                }
            }
        }
        for (int k = 0; k < c; ++k) {
            const auto& a = *t[k];
            const auto& b = *t[(c - ((r + k) % c)) % c]; // reflected tuple, rotated by r
            if (a != b) {
                if (b < a) {
                    return false;
                }
                break;
            }
        }
    }
    return true;
}

struct TuplePartition {
    int cycle_len;
    int first_tree_size;
};

// Emits every class whose cycle length and position-0 tree size match the
// partition.  Partitions are disjoint, so per-partition outputs can be
// produced in parallel and concatenated in partition order.
void enumerate_partition(int n, TuplePartition part,
                         const std::vector<std::vector<std::string>>& pool,
                         std::vector<EnumeratedClass>& out) {
    const int c = part.cycle_len;
    std::vector<const std::string*> tuple(c);

    auto emit = [&] {
        if (!tuple_is_dihedral_minimal(tuple)) {
            return;
        }
        std::vector<Edge> edges;
        edges.reserve(n);
        for (int i = 0; i < c; ++i) {
            edges.push_back({i, (i + 1) % c});
        }
        int next = c;
        for (int i = 0; i < c; ++i) {
            next = materialize_rooted_tree(*tuple[i], i, next, edges);
        }
        Graph g = graph_from_edges(n, edges);
        out.push_back({canonical_certificate(g), std::move(g)});
    };

    auto fill = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == c) {
            emit();
            return;
        }
        const int slots_after = c - pos - 1;
        const int s_lo = slots_after == 0 ? remaining : 1; // last slot takes the rest
        for (int s = s_lo; s <= remaining - slots_after; ++s) {
            for (const auto& code : pool[s]) {
                tuple[pos] = &code;
                self(self, pos + 1, remaining - s);
            }
        }
    };

    for (const auto& first : pool[part.first_tree_size]) {
        tuple[0] = &first;
        fill(fill, 1, n - part.first_tree_size);
    }
}

void check_enumeration_order(int n, int bound, const char* who) {
    if (n < 3 || n > bound) {
        throw CapabilityError(std::string(who) + ": order " + std::to_string(n) +
                              " outside supported range 3.." + std::to_string(bound));
    }
}

// --- labeled engine -------------------------------------------------------

// Decodes a tree sequence code (length n-2 over labels 0..n-1) into the
// edge list of the labeled tree it encodes.
std::vector<Edge> sequence_to_tree(const std::vector<int>& seq, int n) {
    std::vector<int> degree(n, 1);
    for (int s : seq) {
        ++degree[s];
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (degree[ptr] != 1) {
        ++ptr;
    }
    int leaf = ptr;
    for (int s : seq) {
        edges.push_back({leaf, s});
        if (--degree[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (degree[ptr] != 1) {
                ++ptr;
            }
            leaf = ptr;
        }
    }
    edges.push_back({leaf, n - 1});
    return edges;
}

// Labeled graphs on n <= 8 vertices fit an edge bitmask with bit u*8+v
// (u < v).
std::uint64_t edge_bit(int u, int v) {
    return std::uint64_t{1} << (u * 8 + v);
}

Graph graph_from_mask(std::uint64_t mask, int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (mask & edge_bit(u, v)) {
                edges.push_back({u, v});
            }
        }
    }
    return graph_from_edges(n, edges);
}

} // namespace

std::vector<EnumeratedClass> enumerate_unicyclic(int n, unsigned jobs) {
    check_enumeration_order(n, kEnumerationOrderBound, "enumerate_unicyclic");

    const auto pool = rooted_tree_codes_up_to(n - 2);
    std::vector<TuplePartition> partitions;
    for (int c = 3; c <= n; ++c) {
        for (int s0 = 1; s0 <= n - c + 1; ++s0) {
            partitions.push_back({c, s0});
        }
    }

    std::vector<std::vector<EnumeratedClass>> slots(partitions.size());
    parallel_for(partitions.size(), jobs,
                 [&](std::size_t i) { enumerate_partition(n, partitions[i], pool, slots[i]); });

    std::vector<EnumeratedClass> classes;
    for (auto& slot : slots) {
        for (auto& entry : slot) {
            classes.push_back(std::move(entry));
        }
    }
    std::sort(classes.begin(), classes.end(),
              [](const EnumeratedClass& a, const EnumeratedClass& b) {
                  return a.certificate < b.certificate;
              });
    classes.erase(std::unique(classes.begin(), classes.end(),
                              [](const EnumeratedClass& a, const EnumeratedClass& b) {
                                  return a.certificate == b.certificate;
                              }),
                  classes.end());
    return classes;
}

std::vector<CanonicalCertificate> enumerate_unicyclic_labeled(int n, unsigned jobs) {
    check_enumeration_order(n, kLabeledEnumerationOrderBound, "enumerate_unicyclic_labeled");

    // Phase 1: every labeled unicyclic graph, as a deduplicated edge mask.
    // Trees come from all n^(n-2) sequence codes, partitioned by the first
    // symbol; a cycle-closing edge is added in every possible way.
    const int seq_len = n - 2;
    std::uint64_t suffix_count = 1;
    for (int i = 1; i < seq_len; ++i) {
        suffix_count *= static_cast<std::uint64_t>(n);
    }

    std::vector<std::vector<std::uint64_t>> buckets(n);
    parallel_for(static_cast<std::size_t>(n), jobs, [&](std::size_t first) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<int> seq(seq_len);
        seq[0] = static_cast<int>(first);
        for (std::uint64_t code = 0; code < suffix_count; ++code) {
            std::uint64_t rest = code;
            for (int i = 1; i < seq_len; ++i) {
                seq[i] = static_cast<int>(rest % n);
                rest /= n;
            }
            std::uint64_t tree_mask = 0;
            for (auto [u, v] : sequence_to_tree(seq, n)) {
                tree_mask |= edge_bit(std::min(u, v), std::max(u, v));
            }
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    const std::uint64_t bit = edge_bit(u, v);
                    if (!(tree_mask & bit)) {
                        seen.insert(tree_mask | bit);
                    }
                }
            }
        }
        buckets[first].assign(seen.begin(), seen.end());
        std::sort(buckets[first].begin(), buckets[first].end());
    });

    std::vector<std::uint64_t> masks;
    for (const auto& bucket : buckets) {
        masks.insert(masks.end(), bucket.begin(), bucket.end());
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

    // Phase 2: canonicalize each labeled graph, then collapse to classes.
    std::vector<CanonicalCertificate> certs(masks.size());
    parallel_for(masks.size(), jobs, [&](std::size_t i) {
        certs[i] = canonical_certificate(graph_from_mask(masks[i], n));
    });
    std::sort(certs.begin(), certs.end());
    certs.erase(std::unique(certs.begin(), certs.end()), certs.end());
    return certs;
}

std::vector<int> observed_diameters(int n, unsigned jobs) {
    std::vector<int> out;
    for (const auto& entry : enumerate_unicyclic(n, jobs)) {
        out.push_back(diameter(entry.graph));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string direction_name(Direction direction) {
    return direction == Direction::Max ? "max" : "min";
}

std::optional<Direction> parse_direction(std::string_view name) {
    if (name == "max") {
        return Direction::Max;
    }
    if (name == "min") {
        return Direction::Min;
    }
    return std::nullopt;
}

ExtremalRecord extremal_record(int n, std::optional<int> diameter_filter, IndexKind kind,
                               Direction direction, double tolerance, unsigned jobs) {
    const auto classes = enumerate_unicyclic(n, jobs);

    std::vector<const EnumeratedClass*> kept;
    std::vector<int> diameters;
    kept.reserve(classes.size());
    for (const auto& entry : classes) {
        const int d = diameter(entry.graph);
        diameters.push_back(d);
        if (!diameter_filter || d == *diameter_filter) {
            kept.push_back(&entry);
        }
    }
    if (kept.empty()) {
        std::sort(diameters.begin(), diameters.end());
        diameters.erase(std::unique(diameters.begin(), diameters.end()), diameters.end());
        std::string feasible;
        for (int d : diameters) {
            feasible += (feasible.empty() ? "" : " ") + std::to_string(d);
        }
        throw DomainError("extremal_record: no unicyclic graph of order " + std::to_string(n) +
                          " has diameter " + std::to_string(*diameter_filter) +
                          "; feasible diameters: " + feasible);
    }

    double best = 0.0;
    bool first = true;
    std::vector<double> values;
    values.reserve(kept.size());
    for (const auto* entry : kept) {
        const double v = index_value(entry->graph, kind).value;
        values.push_back(v);
        const bool better = direction == Direction::Max ? v > best : v < best;
        if (first || better) {
            best = v;
            first = false;
        }
    }

    ExtremalRecord record;
    record.n = n;
    record.diameter_filter = diameter_filter;
    record.kind = kind;
    record.direction = direction;
    record.value = {best, tolerance};
    record.classes_searched = static_cast<long long>(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (std::fabs(values[i] - best) <= tolerance) {
            record.optima.push_back(kept[i]->certificate);
        }
    }
    return record;
}

} // namespace sombor
