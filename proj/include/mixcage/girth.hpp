#pragma once

#include <optional>

#include "mixcage/graph.hpp"

namespace mixcage {

/// Length of a shortest mixed walk s -> t (arcs forward only, edges either
/// way) that does not use `forbidden`. nullopt when t is unreachable.
std::optional<int> mixed_distance(const MixedGraph& g, Vertex s, Vertex t,
                                  const std::optional<Element>& forbidden = std::nullopt);

/// Mixed girth: shortest closed walk with no repeated edge or arc. 2-cycles
/// (an edge together with an arc on the same pair, or two opposite arcs) count.
/// nullopt for an acyclic mixed graph.
std::optional<int> girth(const MixedGraph& g);

/// Shortest cycle that uses element `e`; nullopt if no cycle passes through it.
/// Throws std::invalid_argument if `e` is not in the graph.
std::optional<int> girth_through_element(const MixedGraph& g, const Element& e);

/// Exhaustive search over closed walks with distinct elements, up to length
/// `cap`. Independent of the BFS route; intended as a test oracle on small graphs.
std::optional<int> brute_force_girth(const MixedGraph& g, int cap);

}  // namespace mixcage
