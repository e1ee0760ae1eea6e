#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mixcage/canonical.hpp"
#include "mixcage/graph.hpp"

namespace mixcage {

/// Multiset of directed-cycle lengths, sorted descending.
using CyclePartition = std::vector<int>;

enum class PartitionFilter { All, EqualParts, Explicit };

enum class SearchMode { DirectedFirst, UndirectedFirst, General };

/// Partitions of n into parts >= g, in descending lexicographic order.
std::vector<CyclePartition> enumerate_partitions(int n, int g, PartitionFilter filter = PartitionFilter::All,
                                                 const std::vector<CyclePartition>& explicit_list = {});

std::string partition_label(const CyclePartition& p);

struct SearchConfig {
    int r = 0;
    int z = 1;
    int g = 3;
    int n = 0;
    PartitionFilter filter = PartitionFilter::All;
    std::vector<CyclePartition> partitions;  ///< used with PartitionFilter::Explicit
    SearchMode mode = SearchMode::DirectedFirst;
    std::uint64_t node_budget = 100'000'000;  ///< backtracking nodes per case (partition / scaffold)
    int jobs = 1;
    bool stop_at_first = false;
    /// Restrict the first partner of vertex 0 to orbit representatives of the
    /// scaffold automorphisms fixing vertex 0.
    bool symmetry_pruning = true;
    /// General engine and scaffold generation: besides interchangeable fresh
    /// vertices, keep one new partner set per orbit of the automorphisms of
    /// the partial graph fixing the vertex. Ignored without symmetry_pruning.
    bool orbit_pruning = true;
    /// In-degree cap for the general engine; -1 means z (totally regular).
    int in_degree_cap = -1;

    /// Throws std::invalid_argument describing the first violated constraint.
    void validate() const;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    std::uint64_t girth_prunes = 0;
    std::uint64_t degree_prunes = 0;
    std::uint64_t symmetry_prunes = 0;

    SearchStats& operator+=(const SearchStats& o);
};

/// Outcome for one case: a cycle partition (directed-first), a scaffold
/// (undirected-first) or the whole space (general).
struct CaseSummary {
    std::string label;
    SearchStats stats;
    std::size_t found = 0;  ///< distinct graphs within this case
    bool truncated = false;
    bool skipped = false;
};

struct FoundGraph {
    MixedGraph graph;
    CanonicalForm form;
    std::string origin;  ///< label of the case that produced it first
};

struct SearchResult {
    std::vector<FoundGraph> graphs;  ///< pairwise non-isomorphic, sorted by fingerprint
    std::vector<CaseSummary> cases;
    SearchStats totals;
    bool truncated = false;      ///< some shard hit the node budget
    bool stopped_early = false;  ///< stop_at_first cut the search short
    bool exhaustive = false;     ///< neither of the above
    std::vector<std::string> diagnostics;
};

/// z = 1: fixes the arcs as disjoint directed cycles on consecutive vertex
/// blocks (one case per partition) and backtracks over undirected edges.
SearchResult search_directed_first(const SearchConfig& cfg);

/// z = 1: for each r-regular undirected scaffold of girth >= g, backtracks
/// over out-arc assignments forming a permutation. Scaffolds failing the
/// precondition are skipped with a diagnostic.
SearchResult search_undirected_first(const SearchConfig& cfg, const std::vector<MixedGraph>& scaffolds);

/// Any z: adds edges and arcs together from the empty graph, treating
/// untouched vertices as interchangeable.
SearchResult search_general(const SearchConfig& cfg);

/// All r-regular undirected graphs on n vertices with girth >= g (or acyclic),
/// one per isomorphism class, sorted by fingerprint. Throws std::runtime_error
/// if the budget runs out.
std::vector<MixedGraph> regular_scaffolds(int n, int r, int g, std::uint64_t node_budget = 100'000'000);

/// Disjoint directed cycles on consecutive blocks, longest first.
MixedGraph cycle_scaffold(const CyclePartition& parts);

/// Largest order the search engines support.
constexpr int kMaxSearchOrder = 64;

}  // namespace mixcage
