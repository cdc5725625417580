#include "sombor/certificate.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "sombor/errors.hpp"

namespace sombor {

namespace {

constexpr int kMaxBits = kCertificateOrderBound * (kCertificateOrderBound - 1) / 2; // 66

// A bitstring of at most kMaxBits bits, MSB-first across two words.
struct BitCode {
    std::array<std::uint64_t, 2> words{0, 0};

    void set(int bit) { words[bit >> 6] |= std::uint64_t{1} << (63 - (bit & 63)); }

    void clear_from(int bit) {
        // Zeroes bits [bit, kMaxBits).
        if (bit < 64) {
            words[0] &= bit == 0 ? 0 : ~std::uint64_t{0} << (64 - bit);
            words[1] = 0;
        } else {
            words[1] &= bit == 64 ? 0 : ~std::uint64_t{0} << (128 - bit);
        }
    }

    // Lexicographic comparison of the first `bits` bits.
    int compare_prefix(const BitCode& other, int bits) const {
        const int full = std::min(bits, 64);
        const std::uint64_t mask0 = full == 0 ? 0 : ~std::uint64_t{0} << (64 - full);
        const std::uint64_t a0 = words[0] & mask0;
        const std::uint64_t b0 = other.words[0] & mask0;
        if (a0 != b0) {
            return a0 < b0 ? -1 : 1;
        }
        if (bits <= 64) {
            return 0;
        }
        const int rest = bits - 64;
        const std::uint64_t mask1 = ~std::uint64_t{0} << (64 - rest);
        const std::uint64_t a1 = words[1] & mask1;
        const std::uint64_t b1 = other.words[1] & mask1;
        if (a1 != b1) {
            return a1 < b1 ? -1 : 1;
        }
        return 0;
    }
};

// State of the minimal-labeling search.  Positions are filled left to
// right; placing vertex v at position p appends p adjacency bits (v against
// the already-placed vertices) to the code, so prefixes only depend on the
// already-placed set and incumbent-based pruning is sound.
struct Search {
    int n = 0;
    std::array<std::uint16_t, kCertificateOrderBound> adjacency{}; // neighbor bitmask per vertex
    std::array<int, kCertificateOrderBound> required_degree{};     // degree forced at each position
    std::array<int, kCertificateOrderBound> degree{};
    std::array<int, kCertificateOrderBound> twin_class{};          // interchangeable-vertex classes
    std::array<int, kCertificateOrderBound> position_of{};         // vertex -> position or -1
    std::array<int, kCertificateOrderBound> placed{};              // position -> vertex
    BitCode current;
    BitCode best;
    bool have_best = false;

    void run(int pos, int bits_done) {
        if (pos == n) {
            if (!have_best || current.compare_prefix(best, bits_done) < 0) {
                best = current;
            }
            have_best = true;
            return;
        }

        // Candidates: unused vertices of the required degree, first unused
        // member of their twin class only (placing a later twin first can
        // be undone by an automorphism, so those branches are redundant).
        struct Candidate {
            std::uint32_t pattern; // adjacency bits against placed vertices, MSB = position 0
            int vertex;
        };
        std::array<Candidate, kCertificateOrderBound> candidates{};
        int count = 0;
        std::uint16_t classes_seen = 0;
        for (int v = 0; v < n; ++v) {
            if (position_of[v] >= 0 || degree[v] != required_degree[pos]) {
                continue;
            }
            const std::uint16_t class_bit = std::uint16_t{1} << twin_class[v];
            if (classes_seen & class_bit) {
                continue;
            }
            classes_seen |= class_bit;
            std::uint32_t pattern = 0;
            for (int p = 0; p < pos; ++p) {
                pattern = (pattern << 1) | ((adjacency[v] >> placed[p]) & 1u);
            }
            candidates[count++] = {pattern, v};
        }
        std::sort(candidates.begin(), candidates.begin() + count,
                  [](const Candidate& a, const Candidate& b) {
                      return a.pattern != b.pattern ? a.pattern < b.pattern : a.vertex < b.vertex;
                  });

        for (int i = 0; i < count; ++i) {
            const auto [pattern, v] = candidates[i];
            current.clear_from(bits_done);
            for (int p = 0; p < pos; ++p) {
                if (pattern & (std::uint32_t{1} << (pos - 1 - p))) {
                    current.set(bits_done + p);
                }
            }
            const int next_bits = bits_done + pos;
            if (have_best && current.compare_prefix(best, next_bits) > 0) {
                // Candidates are sorted by appended bit pattern, so every
                // later branch has a prefix at least as large as this one.
                break;
            }
            position_of[v] = pos;
            placed[pos] = v;
            run(pos + 1, next_bits);
            position_of[v] = -1;
        }
    }
};

} // namespace

std::string CanonicalCertificate::hex() const {
    std::string out;
    out.reserve(bytes.size() * 2);
    char buffer[3];
    for (std::uint8_t b : bytes) {
        std::snprintf(buffer, sizeof buffer, "%02x", b);
        out += buffer;
    }
    return out;
}

CanonicalCertificate canonical_certificate(const Graph& g) {
    const int n = g.order();
    if (n > kCertificateOrderBound) {
        throw CapabilityError("canonical_certificate: order " + std::to_string(n) +
                              " exceeds bound " + std::to_string(kCertificateOrderBound));
    }

    CanonicalCertificate cert;
    cert.bytes.push_back(static_cast<std::uint8_t>(n));
    if (n < 2) {
        return cert;
    }

    Search search;
    search.n = n;
    for (int v = 0; v < n; ++v) {
        std::uint16_t mask = 0;
        for (int w : g.neighbors(v)) {
            mask |= std::uint16_t{1} << w;
        }
        search.adjacency[v] = mask;
        search.degree[v] = g.degree(v);
        search.position_of[v] = -1;
    }

    std::array<int, kCertificateOrderBound> sorted{};
    for (int v = 0; v < n; ++v) {
        sorted[v] = search.degree[v];
    }
    std::sort(sorted.begin(), sorted.begin() + n, std::greater<>());
    search.required_degree = sorted;

    // Twin classes: vertices with equal neighborhoods (ignoring each
    // other) are interchangeable by an automorphism.  A vertex cannot have
    // both an adjacent and a non-adjacent twin, so grouping by the open
    // neighborhood, then by the closed one, yields disjoint classes.
    std::array<int, kCertificateOrderBound> cls{};
    cls.fill(-1);
    int next_class = 0;
    for (int v = 0; v < n; ++v) {
        if (cls[v] >= 0) {
            continue;
        }
        cls[v] = next_class;
        for (int w = v + 1; w < n; ++w) {
            if (cls[w] >= 0) {
                continue;
            }
            const bool open_twin = search.adjacency[v] == search.adjacency[w];
            const bool closed_twin =
                (search.adjacency[v] | std::uint16_t{1} << v) ==
                (search.adjacency[w] | std::uint16_t{1} << w);
            if (open_twin || closed_twin) {
                cls[w] = next_class;
            }
        }
        ++next_class;
    }
    search.twin_class = cls;

    search.run(0, 0);

    const int total_bits = n * (n - 1) / 2;
    for (int bit = 0; bit < total_bits; bit += 8) {
        std::uint8_t byte = 0;
        for (int k = 0; k < 8 && bit + k < total_bits; ++k) {
            const int b = bit + k;
            const std::uint64_t word = search.best.words[b >> 6];
            byte = static_cast<std::uint8_t>(byte |
                                             (((word >> (63 - (b & 63))) & 1u) << (7 - k)));
        }
        cert.bytes.push_back(byte);
    }
    return cert;
}

Graph graph_from_certificate(const CanonicalCertificate& cert) {
    if (cert.bytes.empty()) {
        throw InputError("graph_from_certificate: empty certificate");
    }
    const int n = cert.bytes[0];
    const int total_bits = n * (n - 1) / 2;
    const std::size_t expected = 1 + (static_cast<std::size_t>(total_bits) + 7) / 8;
    if (cert.bytes.size() != expected) {
        throw InputError("graph_from_certificate: byte count does not match order");
    }
    std::vector<Edge> edges;
    int bit = 0;
    // Cells in column-major order: column v lists rows 0..v-1.
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const std::uint8_t byte = cert.bytes[1 + (bit >> 3)];
            if ((byte >> (7 - (bit & 7))) & 1u) {
                edges.push_back({u, v});
            }
        }
    }
    return graph_from_edges(n, edges);
}

} // namespace sombor
