#pragma once

#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

// Cycle 0-1-...-(n-1)-0.  Requires n >= 3.
Graph build_cycle(int n);

// The extremal family for maximizing Sombor-type indices among unicyclic
// graphs of order n and diameter d, valid for 4 <= d <= n - 2:
//   * a path on vertices 0..d,
//   * an apex vertex d+1 adjacent to path vertices 1 and 3 (closing a
//     4-cycle 1-2-3-apex),
//   * n - d - 2 extra pendant vertices d+2..n-1 attached to path vertex 1.
// The result has diameter exactly d.  Throws InputError outside the range.
Graph build_diameter_max_family(int n, int d);

// Triangle 0-1-2 with a, b, c pendants attached to vertices 0, 1, 2
// (labels 3..n-1, in that order).  Requires a >= b >= c >= 0 and
// a + b + c = n - 3.  Diameter is 2 when b == 0 (a > 0), 3 when b > 0.
Graph build_triangle_pendants(int n, int a, int b, int c);

// An edge-rewiring step: delete `removals`, then insert `additions`.
// Checked: removals must exist, additions must not (after removals), and
// the result must stay simple.  Throws InputError on violations.
struct RewireSpec {
    std::vector<Edge> removals;
    std::vector<Edge> additions;
};

Graph rewire(const Graph& g, const RewireSpec& spec);

// The rewiring that undoes `spec` (swaps removals and additions).
RewireSpec inverse(const RewireSpec& spec);

} // namespace sombor
