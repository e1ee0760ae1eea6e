#include "mixcage/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mixcage {

MixedGraph::MixedGraph(int n) : MixedGraph(n, {}, {}) {}

MixedGraph::MixedGraph(int n, std::vector<std::pair<Vertex, Vertex>> edges,
                       std::vector<std::pair<Vertex, Vertex>> arcs)
    : n_(n), edges_(std::move(edges)), arcs_(std::move(arcs)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    auto check = [n](Vertex u, Vertex v, const char* what) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument(std::string(what) + " endpoint out of range: " +
                                        std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw std::invalid_argument(std::string(what) + " self-loop at " + std::to_string(u));
    };
    for (auto& [u, v] : edges_) {
        check(u, v, "edge");
        if (u > v) std::swap(u, v);
    }
    for (auto& [u, v] : arcs_) check(u, v, "arc");
    std::sort(edges_.begin(), edges_.end());
    std::sort(arcs_.begin(), arcs_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
    if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
        throw std::invalid_argument("duplicate arc");

    edge_nbrs_.assign(n, {});
    out_nbrs_.assign(n, {});
    in_nbrs_.assign(n, {});
    edge_set_.reserve(edges_.size() * 2);
    arc_set_.reserve(arcs_.size());
    for (auto [u, v] : edges_) {
        edge_nbrs_[u].push_back(v);
        edge_nbrs_[v].push_back(u);
        edge_set_.insert(key(u, v));
    }
    for (auto [u, v] : arcs_) {
        out_nbrs_[u].push_back(v);
        in_nbrs_[v].push_back(u);
        arc_set_.insert(key(u, v));
    }
    for (int v = 0; v < n; ++v) {
        std::sort(edge_nbrs_[v].begin(), edge_nbrs_[v].end());
        std::sort(out_nbrs_[v].begin(), out_nbrs_[v].end());
        std::sort(in_nbrs_[v].begin(), in_nbrs_[v].end());
    }
}

bool MixedGraph::has_edge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return edge_set_.count(key(u, v)) != 0;
}

bool MixedGraph::has_arc(Vertex tail, Vertex head) const {
    return arc_set_.count(key(tail, head)) != 0;
}

std::vector<Element> MixedGraph::elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (auto [u, v] : edges_) out.push_back(Element::edge(u, v));
    for (auto [u, v] : arcs_) out.push_back(Element::arc(u, v));
    return out;
}

MixedGraph MixedGraph::relabeled(const std::vector<Vertex>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size does not match order");
    std::vector<std::pair<Vertex, Vertex>> e, a;
    e.reserve(edges_.size());
    a.reserve(arcs_.size());
    for (auto [u, v] : edges_) e.emplace_back(perm[u], perm[v]);
    for (auto [u, v] : arcs_) a.emplace_back(perm[u], perm[v]);
    return MixedGraph(n_, std::move(e), std::move(a));
}

MixedGraph MixedGraph::with_element(const Element& el) const {
    auto e = edges_;
    auto a = arcs_;
    (el.is_edge() ? e : a).emplace_back(el.u, el.v);
    return MixedGraph(n_, std::move(e), std::move(a));
}

MixedGraph MixedGraph::without_element(const Element& el) const {
    auto e = edges_;
    auto a = arcs_;
    auto norm = el.normalized();
    auto& list = el.is_edge() ? e : a;
    auto it = std::find(list.begin(), list.end(), std::pair{norm.u, norm.v});
    if (it == list.end()) throw std::invalid_argument("element not present");
    list.erase(it);
    return MixedGraph(n_, std::move(e), std::move(a));
}

bool MixedGraph::views_consistent() const {
    std::size_t edge_incidences = 0, outs = 0, ins = 0;
    for (int v = 0; v < n_; ++v) {
        if (!std::is_sorted(edge_nbrs_[v].begin(), edge_nbrs_[v].end())) return false;
        for (Vertex u : edge_nbrs_[v])
            if (!has_edge(u, v)) return false;
        for (Vertex u : out_nbrs_[v])
            if (!has_arc(v, u)) return false;
        for (Vertex u : in_nbrs_[v])
            if (!has_arc(u, v)) return false;
        edge_incidences += edge_nbrs_[v].size();
        outs += out_nbrs_[v].size();
        ins += in_nbrs_[v].size();
    }
    return edge_incidences == 2 * edges_.size() && edge_set_.size() == edges_.size() &&
           outs == arcs_.size() && ins == arcs_.size() && arc_set_.size() == arcs_.size();
}

DegreeProfile degree_profile(const MixedGraph& g) {
    DegreeProfile p(g.order());
    for (int v = 0; v < g.order(); ++v) {
        p[v] = {static_cast<int>(g.edge_neighbors(v).size()),
                static_cast<int>(g.out_neighbors(v).size()),
                static_cast<int>(g.in_neighbors(v).size())};
    }
    return p;
}

bool check_regular(const MixedGraph& g, int r, int z) {
    for (int v = 0; v < g.order(); ++v) {
        if (static_cast<int>(g.edge_neighbors(v).size()) != r) return false;
        if (static_cast<int>(g.out_neighbors(v).size()) != z) return false;
    }
    return true;
}

std::optional<std::pair<int, int>> regular_degrees(const MixedGraph& g) {
    if (g.order() == 0) return std::pair{0, 0};
    int r = static_cast<int>(g.edge_neighbors(0).size());
    int z = static_cast<int>(g.out_neighbors(0).size());
    if (!check_regular(g, r, z)) return std::nullopt;
    return std::pair{r, z};
}

bool check_totally_regular(const MixedGraph& g) {
    if (!regular_degrees(g)) return false;
    for (int v = 1; v < g.order(); ++v)
        if (g.in_neighbors(v).size() != g.in_neighbors(0).size()) return false;
    return true;
}

std::optional<std::vector<int>> arc_cycle_type(const MixedGraph& g) {
    const int n = g.order();
    for (int v = 0; v < n; ++v)
        if (g.out_neighbors(v).size() != 1 || g.in_neighbors(v).size() != 1) return std::nullopt;
    std::vector<bool> seen(n, false);
    std::vector<int> lengths;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (Vertex v = s; !seen[v]; v = g.out_neighbors(v)[0]) {
            seen[v] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

std::vector<std::vector<Vertex>> undirected_components(const MixedGraph& g) {
    const int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<Vertex> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (Vertex w : g.edge_neighbors(members[i])) {
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace mixcage
