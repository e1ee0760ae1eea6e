#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mixcage/graph.hpp"
#include "mixcage/lift.hpp"

namespace mixcage {

// Parametrised families. Each throws std::invalid_argument when the
// parameters are outside the range where the family is defined.

/// Circulant digraph on r(g-1)+1 vertices with arcs i -> i+j, 1 <= j <= r.
MixedGraph bcw(int r, int g);

/// Directed (2g-2)-cycle plus the g-1 antipodal edges {i, i+g-1}; a (1,1,g)-graph.
MixedGraph oriented_mobius(int g);

/// Lexicographic product of the directed g-cycle with K2; a (1,2,g)-graph of order 2g.
MixedGraph cyclic_lex_k2(int g);

/// Stored arc step s(g) such that the circulant on f21(g) vertices with edge
/// step 1 and arc step s(g) is a (2,1,g)-graph; nullopt outside the table.
std::optional<int> cage21_arc_step(int g);
/// The smallest arc step that works, found by trying every step; used to
/// regenerate the stored table.
std::optional<int> search_cage21_arc_step(int g);
MixedGraph cage21(int g);

/// Subgraph of C_g[C_g]: g undirected g-cycles, arcs v(i,j) -> v(i+1,j+k), k < z.
MixedGraph theorem_2zg_square(int z, int g);

/// Order g^2 - g construction for even g and z <= g/2 (g-1 rows of g-cycles,
/// arcs advance within each half, the last row wraps to row 0 swapping halves).
MixedGraph theorem_2zg_even(int z, int g);

/// (2,2,g)-graph on ceil(g/2) undirected floor(3g/2)-cycles.
MixedGraph theorem_22g(int g);

/// The order-12 cubic girth-5 graph: a 9-cycle plus three centres, centre c
/// adjacent to cycle positions p with p = c mod 3. Vertices 0..8 are the
/// cycle, 9..11 the centres.
MixedGraph cubic12();

/// (3,1,5)-graph of order 24: two copies of cubic12 joined by a directed
/// 6-cycle on the centres and a directed 18-cycle alternating between copies.
MixedGraph graph315();
/// The same graph drawn as an 18-cycle with chords of length 4 and six centres.
MixedGraph graph315_ring_view();

/// (3,1,6)-graph of order 30 on x, y, z directed 10-cycles.
MixedGraph graph316();

/// Hoffman-Singleton graph: pentagons P_h (j ~ j+1) and pentagrams Q_i
/// (j ~ j+2), with P_h[j] ~ Q_i[h*i + j mod 5].
MixedGraph hoffman_singleton();

/// Ids accepted by builtin_lift_spec.
const std::vector<std::string>& builtin_lift_ids();
/// Throws std::invalid_argument for an unknown id.
LiftSpec builtin_lift_spec(const std::string& id);

struct Expected {
    int r = 0, z = 0, g = 0, order = 0;
    bool totally_regular = true;
};

/// A catalog key: name plus integer parameters.
struct ConstructionId {
    std::string name;
    std::vector<int> params;
    std::string to_string() const;
};

struct CatalogEntry {
    std::string name;
    std::string usage;  ///< e.g. "bcw <r> <g>"
    int arity = 0;
    std::function<MixedGraph(const std::vector<int>&)> build;
    std::function<Expected(const std::vector<int>&)> expected;
    std::string summary;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

/// Builds the graph named by id; throws std::invalid_argument on unknown
/// names or wrong parameter counts, std::runtime_error if a search-backed
/// builder (Hamiltonian orientation) fails.
MixedGraph construct(const ConstructionId& id);
Expected expected_parameters(const ConstructionId& id);

/// Every parameterless catalog entry plus representative members of each
/// family; used by tests and the CLI's `construct --all`.
std::vector<ConstructionId> reference_constructions();

}  // namespace mixcage
