#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

namespace mixcage {

using Vertex = int;

enum class ElementKind : std::uint8_t { Edge, Arc };

/// An edge {u,v} or an arc (u,v). For edges the pair is stored as given; use
/// `normalized()` when comparing.
struct Element {
    ElementKind kind = ElementKind::Edge;
    Vertex u = 0;
    Vertex v = 0;

    static Element edge(Vertex a, Vertex b) { return {ElementKind::Edge, a, b}; }
    static Element arc(Vertex tail, Vertex head) { return {ElementKind::Arc, tail, head}; }

    Element normalized() const {
        if (kind == ElementKind::Edge && u > v) return {kind, v, u};
        return *this;
    }
    bool is_edge() const { return kind == ElementKind::Edge; }

    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element&, const Element&) = default;
};

struct VertexDegrees {
    int deg = 0;
    int odeg = 0;
    int ideg = 0;
    friend bool operator==(const VertexDegrees&, const VertexDegrees&) = default;
};

using DegreeProfile = std::vector<VertexDegrees>;

/// Mixed graph on vertices 0..n-1 with undirected edges and directed arcs.
///
/// Immutable once built. Edges are kept with u < v, arcs as (tail, head);
/// both lists are sorted. An edge {u,v} may coexist with arc (u,v) or (v,u),
/// which forms a 2-cycle. Construction throws std::invalid_argument on
/// self-loops, duplicates or out-of-range endpoints.
class MixedGraph {
public:
    MixedGraph() = default;
    explicit MixedGraph(int n);
    MixedGraph(int n, std::vector<std::pair<Vertex, Vertex>> edges,
               std::vector<std::pair<Vertex, Vertex>> arcs);

    int order() const { return n_; }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    const std::vector<std::pair<Vertex, Vertex>>& arcs() const { return arcs_; }
    std::size_t size() const { return edges_.size() + arcs_.size(); }

    // Sorted neighbour lists per relation.
    const std::vector<Vertex>& edge_neighbors(Vertex v) const { return edge_nbrs_[v]; }
    const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_nbrs_[v]; }
    const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_nbrs_[v]; }

    bool has_edge(Vertex u, Vertex v) const;
    bool has_arc(Vertex tail, Vertex head) const;
    bool contains(const Element& e) const {
        return e.is_edge() ? has_edge(e.u, e.v) : has_arc(e.u, e.v);
    }

    /// All elements, edges first, each list in sorted order.
    std::vector<Element> elements() const;

    /// Graph with vertex v renamed to perm[v].
    MixedGraph relabeled(const std::vector<Vertex>& perm) const;
    MixedGraph with_element(const Element& e) const;
    MixedGraph without_element(const Element& e) const;
    MixedGraph undirected_part() const { return MixedGraph(n_, edges_, {}); }
    MixedGraph directed_part() const { return MixedGraph(n_, {}, arcs_); }

    /// Sorted neighbour lists agree with the membership sets and element lists.
    bool views_consistent() const;

    friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.arcs_ == b.arcs_;
    }

private:
    static std::uint64_t key(Vertex u, Vertex v) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
               static_cast<std::uint32_t>(v);
    }

    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::pair<Vertex, Vertex>> arcs_;
    std::vector<std::vector<Vertex>> edge_nbrs_;
    std::vector<std::vector<Vertex>> out_nbrs_;
    std::vector<std::vector<Vertex>> in_nbrs_;
    std::unordered_set<std::uint64_t> edge_set_;
    std::unordered_set<std::uint64_t> arc_set_;
};

DegreeProfile degree_profile(const MixedGraph& g);

/// deg(v) == r and odeg(v) == z for every vertex.
bool check_regular(const MixedGraph& g, int r, int z);
/// Regular in degree and out-degree, and in-degree also constant.
bool check_totally_regular(const MixedGraph& g);

/// (r, z) when the graph is regular, nullopt otherwise.
std::optional<std::pair<int, int>> regular_degrees(const MixedGraph& g);

/// Lengths of the cycles of the arc relation when every vertex has exactly one
/// out-arc and one in-arc; nullopt otherwise. Sorted descending.
std::optional<std::vector<int>> arc_cycle_type(const MixedGraph& g);

/// Connected components of the undirected part, each sorted; ordered by least vertex.
std::vector<std::vector<Vertex>> undirected_components(const MixedGraph& g);

}  // namespace mixcage
