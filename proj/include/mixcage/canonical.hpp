#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mixcage/graph.hpp"

namespace mixcage {

/// Isomorphism-invariant fingerprint of a mixed graph.
///
/// `labeling[v]` is the canonical position of vertex v; relabeling the graph
/// by it yields the canonical representative whose element list is encoded in
/// `fingerprint`. Two graphs have equal fingerprints iff they are isomorphic
/// (edges to edges, arcs to arcs with direction).
struct CanonicalForm {
    std::vector<std::uint32_t> fingerprint;
    std::vector<Vertex> labeling;

    /// Lowercase hex digest of the fingerprint words (stable across runs).
    std::string hex() const;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.fingerprint == b.fingerprint;
    }
    friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        return a.fingerprint <=> b.fingerprint;
    }
};

struct CanonicalStats {
    std::size_t leaves = 0;
    std::size_t automorphisms = 0;
};

CanonicalForm canonical_form(const MixedGraph& g, CanonicalStats* stats = nullptr);

/// Generators of (a subgroup of) the automorphism group found while
/// canonicalising; each is a permutation p with g.relabeled(p) == g.
std::vector<std::vector<Vertex>> automorphism_generators(const MixedGraph& g);

/// Same, restricted to automorphisms preserving a vertex colouring (any int
/// values; only equality matters).
std::vector<std::vector<Vertex>> automorphism_generators(const MixedGraph& g, const std::vector<int>& colors);

bool isomorphic(const MixedGraph& a, const MixedGraph& b);

}  // namespace mixcage
