#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mixcage/graph.hpp"

namespace mixcage {

struct HamiltonianSearch {
    std::optional<std::vector<Vertex>> cycle;  ///< vertex order, starting at 0
    std::uint64_t nodes = 0;
    bool exhausted_budget = false;
};

/// Backtracking search for a Hamiltonian cycle in the undirected part of g.
/// Extends a path from vertex 0, preferring neighbours with the fewest
/// unvisited neighbours, and prunes when an unvisited vertex is left with
/// fewer than two usable neighbours or the unvisited set disconnects.
HamiltonianSearch find_hamiltonian_cycle(const MixedGraph& g, std::uint64_t node_budget = 10'000'000);

/// Replaces the edges of `cycle` (consecutive vertices, closing back to the
/// first) by arcs in cycle order. Throws std::invalid_argument if the cycle is
/// not a Hamiltonian cycle of g's edge set.
MixedGraph orient_cycle(const MixedGraph& g, const std::vector<Vertex>& cycle);

}  // namespace mixcage
