#include "mixcage/hamiltonian.hpp"

#include <algorithm>
#include <stdexcept>

namespace mixcage {

namespace {

class HamiltonSolver {
public:
    HamiltonSolver(const MixedGraph& g, std::uint64_t budget)
        : g_(g), n_(g.order()), budget_(budget), visited_(n_, false) {}

    HamiltonianSearch run() {
        HamiltonianSearch out;
        if (n_ >= 3) {
            path_.push_back(0);
            visited_[0] = true;
            if (extend()) out.cycle = path_;
        }
        out.nodes = nodes_;
        out.exhausted_budget = !out.cycle && nodes_ >= budget_;
        return out;
    }

private:
    int free_degree(Vertex v) const {
        int d = 0;
        for (Vertex w : g_.edge_neighbors(v))
            if (!visited_[w]) ++d;
        return d;
    }

    // Every unvisited vertex must keep two exits (one if adjacent to the path
    // end or to vertex 0), and the unvisited vertices must stay connected to
    // the path end.
    bool viable(Vertex end) const {
        int unvisited = 0;
        for (int v = 0; v < n_; ++v) {
            if (visited_[v]) continue;
            ++unvisited;
            int exits = free_degree(v);
            for (Vertex w : g_.edge_neighbors(v))
                if (w == end || w == 0) ++exits;
            if (exits < 2) return false;
        }
        if (unvisited == 0) return true;
        std::vector<bool> seen(n_, false);
        std::vector<Vertex> stack;
        for (Vertex w : g_.edge_neighbors(end))
            if (!visited_[w] && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        int reached = 0;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            ++reached;
            for (Vertex w : g_.edge_neighbors(x))
                if (!visited_[w] && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        return reached == unvisited;
    }

    bool extend() {
        if (++nodes_ > budget_) return false;
        Vertex end = path_.back();
        if (static_cast<int>(path_.size()) == n_) return g_.has_edge(end, 0);
        std::vector<std::pair<int, Vertex>> next;
        for (Vertex w : g_.edge_neighbors(end))
            if (!visited_[w]) next.emplace_back(free_degree(w), w);
        std::sort(next.begin(), next.end());
        for (auto [deg, w] : next) {
            visited_[w] = true;
            path_.push_back(w);
            if (viable(w) && extend()) return true;
            path_.pop_back();
            visited_[w] = false;
            if (nodes_ > budget_) return false;
        }
        return false;
    }

    const MixedGraph& g_;
    int n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<bool> visited_;
    std::vector<Vertex> path_;
};

}  // namespace

HamiltonianSearch find_hamiltonian_cycle(const MixedGraph& g, std::uint64_t node_budget) {
    return HamiltonSolver(g, node_budget).run();
}

MixedGraph orient_cycle(const MixedGraph& g, const std::vector<Vertex>& cycle) {
    const int n = g.order();
    if (static_cast<int>(cycle.size()) != n || n < 3)
        throw std::invalid_argument("orient_cycle: cycle must visit every vertex");
    std::vector<bool> seen(n, false);
    for (Vertex v : cycle) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("orient_cycle: not a permutation of the vertices");
        seen[v] = true;
    }
    std::vector<std::pair<Vertex, Vertex>> cycle_edges;
    std::vector<std::pair<Vertex, Vertex>> arcs = g.arcs();
    for (int i = 0; i < n; ++i) {
        Vertex u = cycle[i], v = cycle[(i + 1) % n];
        if (!g.has_edge(u, v)) throw std::invalid_argument("orient_cycle: consecutive vertices are not joined by an edge");
        cycle_edges.emplace_back(std::min(u, v), std::max(u, v));
        arcs.emplace_back(u, v);
    }
    std::sort(cycle_edges.begin(), cycle_edges.end());
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set_difference(g.edges().begin(), g.edges().end(), cycle_edges.begin(), cycle_edges.end(),
                        std::back_inserter(edges));
    return MixedGraph(n, std::move(edges), std::move(arcs));
}

}  // namespace mixcage
