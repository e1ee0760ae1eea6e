#include "mixcage/lift.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace mixcage {

namespace {

std::string describe(const LiftSpec::Link& l) {
    return "link " + std::to_string(l.a) + " " + std::to_string(l.b) + " " + std::to_string(l.offset) +
           (l.kind == ElementKind::Edge ? " e" : " a");
}

}  // namespace

MixedGraph lift(const LiftSpec& spec) {
    if (spec.m < 1) throw std::invalid_argument("lift: fibre size must be >= 1");
    const int nodes = static_cast<int>(spec.nodes.size());
    std::set<std::pair<Vertex, Vertex>> edges, arcs;

    auto add = [&](ElementKind kind, Vertex u, Vertex v, const std::string& origin) {
        if (u == v) throw std::invalid_argument("lift: " + origin + " generates a self-loop");
        if (kind == ElementKind::Edge) {
            if (!edges.insert({std::min(u, v), std::max(u, v)}).second)
                throw std::invalid_argument("lift: " + origin + " generates edge {" + std::to_string(u) +
                                            "," + std::to_string(v) + "} twice");
        } else if (!arcs.insert({u, v}).second) {
            throw std::invalid_argument("lift: " + origin + " generates arc (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") twice");
        }
    };

    for (int a = 0; a < nodes; ++a) {
        for (const auto& s : spec.nodes[a].self_steps) {
            int step = ((s.step % spec.m) + spec.m) % spec.m;
            std::string origin = "node " + std::to_string(a) + " self step " + std::to_string(s.step);
            if (step == 0) throw std::invalid_argument("lift: " + origin + " is zero mod m");
            if (s.kind == ElementKind::Edge) {
                // Steps s and m-s give the same edges; for s = m/2 each edge
                // arises from both endpoints, so only half the positions emit.
                bool half = 2 * step == spec.m;
                for (int t = 0; t < spec.m; ++t) {
                    if (half && t >= step) break;
                    add(s.kind, spec.vertex(a, t), spec.vertex(a, t + step), origin);
                }
            } else {
                for (int t = 0; t < spec.m; ++t) add(s.kind, spec.vertex(a, t), spec.vertex(a, t + step), origin);
            }
        }
    }
    for (const auto& l : spec.links) {
        if (l.a < 0 || l.b < 0 || l.a >= nodes || l.b >= nodes)
            throw std::invalid_argument("lift: " + describe(l) + " refers to a missing node");
        if (l.a == l.b) throw std::invalid_argument("lift: " + describe(l) + " joins a node to itself; use a self step");
        for (int t = 0; t < spec.m; ++t) add(l.kind, spec.vertex(l.a, t), spec.vertex(l.b, t + l.offset), describe(l));
    }
    return MixedGraph(spec.order(), {edges.begin(), edges.end()}, {arcs.begin(), arcs.end()});
}

std::vector<Vertex> fibre_rotation(const LiftSpec& spec) {
    std::vector<Vertex> perm(spec.order());
    for (int a = 0; a < static_cast<int>(spec.nodes.size()); ++a)
        for (int t = 0; t < spec.m; ++t) perm[spec.vertex(a, t)] = spec.vertex(a, t + 1);
    return perm;
}

}  // namespace mixcage
