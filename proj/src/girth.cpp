#include "mixcage/girth.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace mixcage {

namespace {

// Plain BFS, early exit at t. The forbidden element is compared by endpoints.
std::optional<int> bfs_distance(const MixedGraph& g, Vertex s, Vertex t,
                                const std::optional<Element>& forbidden, std::vector<int>& dist,
                                std::vector<Vertex>& queue) {
    if (s == t) return 0;
    const int n = g.order();
    dist.assign(n, -1);
    queue.clear();
    dist[s] = 0;
    queue.push_back(s);
    const bool skip_edge = forbidden && forbidden->is_edge();
    const bool skip_arc = forbidden && !forbidden->is_edge();
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        int d = dist[x] + 1;
        for (Vertex y : g.edge_neighbors(x)) {
            if (dist[y] >= 0) continue;
            if (skip_edge && ((x == forbidden->u && y == forbidden->v) ||
                              (x == forbidden->v && y == forbidden->u)))
                continue;
            if (y == t) return d;
            dist[y] = d;
            queue.push_back(y);
        }
        for (Vertex y : g.out_neighbors(x)) {
            if (dist[y] >= 0) continue;
            if (skip_arc && x == forbidden->u && y == forbidden->v) continue;
            if (y == t) return d;
            dist[y] = d;
            queue.push_back(y);
        }
    }
    return std::nullopt;
}

std::optional<int> min_opt(std::optional<int> a, std::optional<int> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

}  // namespace

std::optional<int> mixed_distance(const MixedGraph& g, Vertex s, Vertex t,
                                  const std::optional<Element>& forbidden) {
    if (s < 0 || t < 0 || s >= g.order() || t >= g.order())
        throw std::out_of_range("vertex out of range");
    std::vector<int> dist;
    std::vector<Vertex> queue;
    return bfs_distance(g, s, t, forbidden, dist, queue);
}

std::optional<int> girth(const MixedGraph& g) {
    std::vector<int> dist;
    std::vector<Vertex> queue;
    std::optional<int> best;
    auto consider = [&](const Element& e, Vertex from, Vertex to) {
        auto d = bfs_distance(g, from, to, e, dist, queue);
        if (d) best = min_opt(best, *d + 1);
    };
    for (auto [u, v] : g.arcs()) {
        consider(Element::arc(u, v), v, u);
        if (best == 2) return best;
    }
    for (auto [u, v] : g.edges()) {
        consider(Element::edge(u, v), v, u);
        consider(Element::edge(u, v), u, v);
        if (best == 2) return best;
    }
    return best;
}

std::optional<int> girth_through_element(const MixedGraph& g, const Element& e) {
    if (!g.contains(e)) throw std::invalid_argument("element not in graph");
    std::vector<int> dist;
    std::vector<Vertex> queue;
    auto back = bfs_distance(g, e.v, e.u, e, dist, queue);
    std::optional<int> best = back ? std::optional<int>(*back + 1) : std::nullopt;
    if (e.is_edge()) {
        auto fwd = bfs_distance(g, e.u, e.v, e, dist, queue);
        if (fwd) best = min_opt(best, *fwd + 1);
    }
    return best;
}

namespace {

// Directed steps available from each vertex; edges contribute two, sharing an id.
struct Step {
    Vertex to;
    int element;
};

struct WalkSearch {
    std::vector<std::vector<Step>> steps;
    std::vector<bool> used;
    Vertex start = 0;

    bool walk(Vertex at, int remaining) {
        for (const Step& s : steps[at]) {
            if (used[s.element]) continue;
            if (s.to == start) return true;
            if (remaining <= 1) continue;
            used[s.element] = true;
            bool found = walk(s.to, remaining - 1);
            used[s.element] = false;
            if (found) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<int> brute_force_girth(const MixedGraph& g, int cap) {
    WalkSearch ws;
    ws.steps.assign(g.order(), {});
    int id = 0;
    for (auto [u, v] : g.edges()) {
        ws.steps[u].push_back({v, id});
        ws.steps[v].push_back({u, id});
        ++id;
    }
    for (auto [u, v] : g.arcs()) ws.steps[u].push_back({v, id++});
    ws.used.assign(id, false);
    // Iterative deepening: the first length with a closed walk is the girth.
    for (int len = 1; len <= cap; ++len) {
        for (Vertex s = 0; s < g.order(); ++s) {
            ws.start = s;
            if (ws.walk(s, len)) return len;
        }
    }
    return std::nullopt;
}

}  // namespace mixcage
