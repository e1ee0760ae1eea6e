#pragma once

#include <vector>

#include "mixcage/graph.hpp"

namespace mixcage {

/// Cyclic voltage lift description. Each node becomes a fibre of m vertices
/// (node a, position t) -> vertex a*m + t. A self step (s, kind) joins
/// (a,t) to (a,t+s); a link (a, b, offset, kind) joins (a,t) to (b,t+offset).
/// Arcs point from the first endpoint to the second. All arithmetic mod m.
struct LiftSpec {
    struct SelfStep {
        int step = 0;
        ElementKind kind = ElementKind::Edge;
        friend bool operator==(const SelfStep&, const SelfStep&) = default;
    };
    struct Node {
        std::vector<SelfStep> self_steps;
        friend bool operator==(const Node&, const Node&) = default;
    };
    struct Link {
        int a = 0;
        int b = 0;
        int offset = 0;
        ElementKind kind = ElementKind::Edge;
        friend bool operator==(const Link&, const Link&) = default;
    };

    int m = 0;
    std::vector<Node> nodes;
    std::vector<Link> links;

    int order() const { return m * static_cast<int>(nodes.size()); }
    Vertex vertex(int node, int t) const { return node * m + ((t % m) + m) % m; }

    friend bool operator==(const LiftSpec&, const LiftSpec&) = default;
};

/// Builds the lifted graph. Throws std::invalid_argument with a description
/// of the offending step or link when an element would be generated twice,
/// a self-loop arises, or an index is out of range.
MixedGraph lift(const LiftSpec& spec);

/// Permutation mapping (a,t) to (a,t+1) on every fibre; an automorphism of lift(spec).
std::vector<Vertex> fibre_rotation(const LiftSpec& spec);

}  // namespace mixcage
