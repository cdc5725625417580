#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

// Exhaustive canonicalization is exponential in the worst case; orders are
// capped so a single certificate always computes in well under a second.
inline constexpr int kCertificateOrderBound = 12;

// Isomorphism certificate: two graphs have equal certificates iff they are
// isomorphic.  Encoding: one byte holding the vertex count, then the
// upper-triangular adjacency bits of the canonical labeling, packed
// MSB-first.  Cells are ordered column by column -- (0,1), (0,2), (1,2),
// (0,3), (1,3), (2,3), ... -- so the bit prefix for the first k vertices is
// independent of the rest, which is what makes incremental search pruning
// sound.  The canonical labeling is the one minimizing this bitstring over
// all orderings that sort degrees in non-increasing order.
struct CanonicalCertificate {
    std::vector<std::uint8_t> bytes;

    auto operator<=>(const CanonicalCertificate&) const = default;

    // Lowercase hex rendering, two digits per byte.
    std::string hex() const;
};

// Computes the certificate of g.  Throws CapabilityError when
// g.order() > kCertificateOrderBound.
CanonicalCertificate canonical_certificate(const Graph& g);

// Rebuilds the canonical representative encoded by a certificate.
// Throws InputError on malformed bytes.
Graph graph_from_certificate(const CanonicalCertificate& cert);

} // namespace sombor
