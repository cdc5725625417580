#pragma once

#include <string>
#include <vector>

#include "sombor/indices.hpp"
#include "sombor/report.hpp"

namespace sombor {

struct VerifyOptions {
    double tolerance = kDefaultTolerance;
    unsigned jobs = 0;          // 0 = hardware concurrency
    int grid_max_degree = 12;   // upper end of degree grids in delta checks
};

// --- Exhaustive theorem checks (brute force vs. closed form) -------------

// For every n in [n_lo, n_hi] and every diameter d in [4, n-2]: the maximum
// of the index over unicyclic graphs with that order and diameter equals
// the closed form, and the unique maximizer is the diameter-extremal
// family.  Requires 6 <= n_lo <= n_hi <= enumeration bound.
VerificationReport verify_max_theorem(int n_lo, int n_hi, IndexKind kind,
                                      const VerifyOptions& options = {});

// For every n in [n_lo, n_hi]: the minimum Sombor index over unicyclic
// graphs is 2*sqrt(2)*n, attained only by the cycle.  Requires n_lo >= 3.
VerificationReport verify_min(int n_lo, int n_hi, const VerifyOptions& options = {});

// Small-diameter and runner-up facts, for every n in [n_lo, n_hi]
// (n_lo >= 5): the diameter-2 Sombor maximizer is the triangle with all
// pendants on one vertex; for n >= 6 the diameter-3 maximizer is the
// triangle with n-4 pendants on one vertex and 1 on another; and that same
// graph is the second-largest Sombor value over all unicyclic graphs.
VerificationReport verify_small_diameter(int n_lo, int n_hi,
                                         const VerifyOptions& options = {});

// Structural facts about maximizers with 4 <= d <= n-2 (skipping rows
// whose hypotheses need n >= d+3 when n == d+2): every diametral path
// whose second or second-to-last vertex carries a pendant meets the cycle
// in at least 2 vertices; some pendant can be deleted without changing the
// diameter; and (d >= 4) some such pendant's support keeps >= 2 non-pendant
// neighbors.  Checked against every brute-force maximizer.
VerificationReport check_maximizer_structure(int n, int d,
                                             const VerifyOptions& options = {});

// check_maximizer_structure over all n in [n_lo, n_hi], d in [4, n-2].
VerificationReport check_maximizer_structure_range(int n_lo, int n_hi,
                                                   const VerifyOptions& options = {});

// --- Proof-step numeric checks -------------------------------------------

// A constant radical inequality: sum of coefficient * sqrt(radicand) terms
// claimed strictly negative.
struct RadicalInequality {
    std::string id;
    std::vector<std::pair<int, int>> terms; // (coefficient, radicand)

    double evaluate() const;
};

// The fixed catalog of constant inequalities used by the proofs.
const std::vector<RadicalInequality>& inequality_catalog();

// Evaluates every catalog entry; passes when the value is negative with
// |value| > 1e-6 (so floating-point error cannot flip the sign).
VerificationReport check_inequality_catalog();

// Evaluates every degree-parameterized transformation delta used by the
// proofs on the integer grid 1..grid_max_degree (with each family's side
// conditions) and asserts strict negativity at every point.
VerificationReport check_transformation_deltas(int grid_max_degree = 12);

// Monotonicity/symmetry grids for the auxiliary functions degree_step_margin
// and power_pair_sum (see indices.hpp for the claimed properties).
VerificationReport check_lemma_grids();

} // namespace sombor
