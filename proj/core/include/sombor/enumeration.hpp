#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sombor/certificate.hpp"
#include "sombor/graph.hpp"
#include "sombor/indices.hpp"

namespace sombor {

// Bound on the structured (cycle + rooted forests) enumeration.  The class
// count roughly triples per vertex; 12 keeps a full sweep interactive.
inline constexpr int kEnumerationOrderBound = 12;

// Bound on the independent labeled-graph engine, which walks all labeled
// trees on n vertices (n^(n-2) of them) before deduplication.
inline constexpr int kLabeledEnumerationOrderBound = 8;

// One enumerated isomorphism class: its canonical certificate and the
// canonical representative graph.
struct EnumeratedClass {
    CanonicalCertificate certificate;
    Graph graph;
};

// All isomorphism classes of connected unicyclic graphs on n vertices,
// sorted by certificate.  Built by attaching rooted trees to each cycle
// length with a dihedral-minimality filter, partitioned by (cycle length,
// first tree size) for parallelism; output is identical for every `jobs`
// value (0 = hardware concurrency).  Requires 3 <= n <= bound, else
// CapabilityError.
std::vector<EnumeratedClass> enumerate_unicyclic(int n, unsigned jobs = 0);

// Independent engine for cross-checking: generates every labeled tree on n
// vertices from its sequence encoding, adds each absent edge, dedupes the
// labeled edge sets, then canonicalizes.  Returns the sorted certificate
// set.  Requires 3 <= n <= kLabeledEnumerationOrderBound.
std::vector<CanonicalCertificate> enumerate_unicyclic_labeled(int n, unsigned jobs = 0);

// Distinct diameters realized by unicyclic graphs on n vertices, ascending.
std::vector<int> observed_diameters(int n, unsigned jobs = 0);

enum class Direction { Max, Min };

std::string direction_name(Direction direction);
std::optional<Direction> parse_direction(std::string_view name);

// Result of an exhaustive extremal search over one enumerated family.
struct ExtremalRecord {
    int n = 0;
    std::optional<int> diameter_filter;
    IndexKind kind = IndexKind::Sombor;
    Direction direction = Direction::Max;
    RealValue value;                            // the optimal index value
    std::vector<CanonicalCertificate> optima;   // all classes within tolerance, sorted
    long long classes_searched = 0;
};

// Optimizes the index over all unicyclic classes on n vertices, optionally
// restricted to one diameter.  `optima` collects every class whose value
// is within `tolerance` of the best, so a singleton certifies a unique
// optimizer separated from the runner-up by more than `tolerance`.
// Throws DomainError (reporting the feasible diameters) when the filter
// matches nothing.
ExtremalRecord extremal_record(int n, std::optional<int> diameter_filter, IndexKind kind,
                               Direction direction, double tolerance = kDefaultTolerance,
                               unsigned jobs = 0);

} // namespace sombor
