#include "mixcage/constructions.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "mixcage/bounds.hpp"
#include "mixcage/girth.hpp"
#include "mixcage/hamiltonian.hpp"

namespace mixcage {

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

int mod(int a, int m) { return ((a % m) + m) % m; }

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

MixedGraph circulant(int n, const std::vector<int>& edge_steps, const std::vector<int>& arc_steps) {
    LiftSpec spec;
    spec.m = n;
    spec.nodes.resize(1);
    for (int s : edge_steps) spec.nodes[0].self_steps.push_back({s, ElementKind::Edge});
    for (int s : arc_steps) spec.nodes[0].self_steps.push_back({s, ElementKind::Arc});
    return lift(spec);
}

// Per-g arc steps for the (2,1,g) circulants; regenerated by search_cage21_arc_step.
constexpr int kCage21MinGirth = 5;
constexpr int kCage21Steps[] = {
    5,   // g = 5, n = 13
    5,   // g = 6, n = 18
    7,   // g = 7, n = 25
    7,   // g = 8, n = 32
    9,   // g = 9, n = 41
    9,   // g = 10, n = 50
    11,  // g = 11, n = 61
    11,  // g = 12, n = 72
};

bool is_cage21(const MixedGraph& g, int girth_target) {
    auto gi = girth(g);
    return gi && *gi == girth_target && check_regular(g, 2, 1);
}

}  // namespace

MixedGraph bcw(int r, int g) {
    require(r >= 1 && g >= 2, "bcw: need r >= 1 and g >= 2");
    const int n = r * (g - 1) + 1;
    Pairs arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= r; ++j) arcs.emplace_back(i, mod(i + j, n));
    return MixedGraph(n, {}, std::move(arcs));
}

MixedGraph oriented_mobius(int g) {
    require(g >= 4, "oriented_mobius: need g >= 4");
    const int n = 2 * g - 2;
    Pairs edges, arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    for (int i = 0; i < g - 1; ++i) edges.emplace_back(i, i + g - 1);
    return MixedGraph(n, std::move(edges), std::move(arcs));
}

MixedGraph cyclic_lex_k2(int g) {
    require(g >= 3, "cyclic_lex_k2: need g >= 3");
    auto v = [g](int i, int j) { return 2 * mod(i, g) + j; };
    Pairs edges, arcs;
    for (int i = 0; i < g; ++i) {
        edges.emplace_back(v(i, 0), v(i, 1));
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) arcs.emplace_back(v(i, j), v(i + 1, k));
    }
    return MixedGraph(2 * g, std::move(edges), std::move(arcs));
}

std::optional<int> cage21_arc_step(int g) {
    const int idx = g - kCage21MinGirth;
    if (idx < 0 || idx >= static_cast<int>(std::size(kCage21Steps))) return std::nullopt;
    return kCage21Steps[idx];
}

std::optional<int> search_cage21_arc_step(int g) {
    require(g >= 5, "cage21: need g >= 5");
    const int n = static_cast<int>(f21(g));
    for (int s = 1; s < n; ++s) {
        if (s == 1 || s == n - 1) continue;  // would double an edge into a 2-cycle
        if (is_cage21(circulant(n, {1}, {s}), g)) return s;
    }
    return std::nullopt;
}

MixedGraph cage21(int g) {
    require(g >= 5, "cage21: need g >= 5");
    auto step = cage21_arc_step(g);
    if (!step) step = search_cage21_arc_step(g);
    if (!step) throw std::invalid_argument("cage21: no circulant arc step realises g = " + std::to_string(g));
    return circulant(static_cast<int>(f21(g)), {1}, {*step});
}

MixedGraph theorem_2zg_square(int z, int g) {
    require(g >= 3 && z >= 1 && z <= g, "theorem_2zg_square: need g >= 3 and 1 <= z <= g");
    auto v = [g](int i, int j) { return mod(i, g) * g + mod(j, g); };
    Pairs edges, arcs;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            edges.emplace_back(v(i, j), v(i, j + 1));
            for (int k = 0; k < z; ++k) arcs.emplace_back(v(i, j), v(i + 1, j + k));
        }
    return MixedGraph(g * g, std::move(edges), std::move(arcs));
}

MixedGraph theorem_2zg_even(int z, int g) {
    require(g >= 6 && g % 2 == 0, "theorem_2zg_even: need even g >= 6");
    const int h = g / 2;
    require(z >= 1 && z <= h, "theorem_2zg_even: need 1 <= z <= g/2");
    const int rows = g - 1;
    auto v = [g](int i, int j) { return i * g + j; };
    Pairs edges, arcs;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < g; ++j) edges.emplace_back(v(i, j), v(i, (j + 1) % g));
    for (int i = 0; i < g - 2; ++i)
        for (int j = 0; j < h; ++j)
            for (int k = 0; k < z; ++k) {
                arcs.emplace_back(v(i, j), v(i + 1, (j + k) % h));
                arcs.emplace_back(v(i, h + j), v(i + 1, h + (j + k) % h));
            }
    for (int j = 0; j < h; ++j)
        for (int k = 0; k < z; ++k) {
            arcs.emplace_back(v(g - 2, j), v(0, h + (j + k) % h));
            arcs.emplace_back(v(g - 2, j + h), v(0, (j + k) % h));
        }
    return MixedGraph(rows * g, std::move(edges), std::move(arcs));
}

MixedGraph theorem_22g(int g) {
    require(g >= 5, "theorem_22g: need g >= 5");
    const int s = (g + 1) / 2;
    const int t = (3 * g) / 2;
    const int half = g / 2;
    auto v = [t](int i, int j) { return i * t + mod(j, t); };
    Pairs edges, arcs;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) edges.emplace_back(v(i, j), v(i, j + 1));
    for (int i = 0; i + 1 < s; ++i)
        for (int j = 0; j < t; ++j) {
            arcs.emplace_back(v(i, j), v(i + 1, j));
            arcs.emplace_back(v(i, j), v(i + 1, j + 1));
        }
    for (int j = 0; j < t; ++j) {
        arcs.emplace_back(v(s - 1, j), v(0, j + half));
        arcs.emplace_back(v(s - 1, j), v(0, j + half + 1));
    }
    return MixedGraph(s * t, std::move(edges), std::move(arcs));
}

MixedGraph cubic12() {
    Pairs edges;
    for (int p = 0; p < 9; ++p) {
        edges.emplace_back(p, (p + 1) % 9);
        edges.emplace_back(p, 9 + p % 3);
    }
    return MixedGraph(12, std::move(edges), {});
}

MixedGraph graph315() {
    // Left copy L on 0..11, right copy R on 12..23, each laid out as cubic12
    // (outer 9-cycle positions 0..8, centres 9..11). The directed 18-cycle
    // runs L(p) -> R(p) -> L(p+5); the directed 6-cycle visits the centres
    // L0 R0 L2 R2 L1 R1. Outer L(p) and R(p) and the centres they attach to
    // carry matching colours, every arc moving to the next colour.
    constexpr int kRight = 12;
    auto left = [](int p) { return mod(p, 9); };
    auto right = [](int p) { return kRight + mod(p, 9); };
    Pairs edges;
    const MixedGraph copy = cubic12();
    for (auto [u, v] : copy.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(kRight + u, kRight + v);
    }
    Pairs arcs;
    for (int p = 0; p < 9; ++p) {
        arcs.emplace_back(left(p), right(p));
        arcs.emplace_back(right(p), left(p + 5));
    }
    constexpr int centre_cycle[6] = {9, kRight + 9, 11, kRight + 11, 10, kRight + 10};
    for (int i = 0; i < 6; ++i) arcs.emplace_back(centre_cycle[i], centre_cycle[(i + 1) % 6]);
    return MixedGraph(24, std::move(edges), std::move(arcs));
}

MixedGraph graph315_ring_view() {
    Pairs edges, arcs;
    for (int k = 0; k < 18; ++k) {
        arcs.emplace_back(k, (k + 1) % 18);
        edges.emplace_back(k, (k + 4) % 18);
        edges.emplace_back(k, 18 + k % 6);
    }
    for (int c = 0; c < 6; ++c) arcs.emplace_back(18 + c, 18 + (c + 1) % 6);
    return MixedGraph(24, std::move(edges), std::move(arcs));
}

MixedGraph graph316() {
    auto x = [](int i) { return mod(i, 10); };
    auto y = [](int i) { return 10 + mod(i, 10); };
    auto zz = [](int i) { return 20 + mod(i, 10); };
    Pairs edges, arcs;
    for (int i = 0; i < 10; ++i) {
        arcs.emplace_back(x(i), x(i + 1));
        arcs.emplace_back(y(i), y(i + 1));
        arcs.emplace_back(zz(i), zz(i + 1));
        edges.emplace_back(x(i), y(i + 2));
        edges.emplace_back(x(i), y(i - 2));
        if (i < 5) edges.emplace_back(zz(i), zz(i + 5));
        // Colour-matching edges between the two drawings.
        edges.emplace_back(x(i), zz(i));
        edges.emplace_back(y(i + 5), zz(i));
    }
    return MixedGraph(30, std::move(edges), std::move(arcs));
}

MixedGraph hoffman_singleton() {
    auto pentagon = [](int h, int j) { return 5 * h + mod(j, 5); };
    auto pentagram = [](int i, int j) { return 25 + 5 * i + mod(j, 5); };
    Pairs edges;
    for (int h = 0; h < 5; ++h)
        for (int j = 0; j < 5; ++j) {
            edges.emplace_back(pentagon(h, j), pentagon(h, j + 1));
            edges.emplace_back(pentagram(h, j), pentagram(h, j + 2));
        }
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) edges.emplace_back(pentagon(h, j), pentagram(i, h * i + j));
    return MixedGraph(50, std::move(edges), {});
}

namespace {

LiftSpec cycles_with_edge_links(int nodes, int m, std::vector<std::array<int, 3>> links) {
    LiftSpec spec;
    spec.m = m;
    spec.nodes.assign(nodes, LiftSpec::Node{{{1, ElementKind::Arc}}});
    for (auto [a, b, off] : links) spec.links.push_back({a, b, off, ElementKind::Edge});
    return spec;
}

}  // namespace

const std::vector<std::string>& builtin_lift_ids() {
    static const std::vector<std::string> ids = {"lift317", "lift318", "lift415", "lift416",
                                                 "lift516", "circulant225", "graph226"};
    return ids;
}

LiftSpec builtin_lift_spec(const std::string& id) {
    constexpr auto E = ElementKind::Edge;
    constexpr auto A = ElementKind::Arc;
    if (id == "lift317")
        return cycles_with_edge_links(
            6, 10, {{0, 1, 0}, {0, 2, 0}, {0, 3, 0}, {1, 2, 4}, {1, 4, 6}, {2, 5, 4}, {3, 4, 0}, {3, 5, 0}, {4, 5, 6}});
    if (id == "lift318") {
        LiftSpec spec;
        spec.m = 38;
        spec.nodes = {LiftSpec::Node{{{1, A}, {7, E}}}, LiftSpec::Node{{{1, A}, {11, E}}}};
        spec.links = {{0, 1, 0, E}};
        return spec;
    }
    if (id == "lift415") {
        LiftSpec spec;
        spec.m = 17;
        // Inner arcs step -6: with +6 the arcs and spokes close 4-cycles
        // (7 + 2 + 6 + 2 = 17).
        spec.nodes = {LiftSpec::Node{{{7, A}, {1, E}}}, LiftSpec::Node{{{-6, A}, {8, E}}}};
        spec.links = {{0, 1, -2, E}, {0, 1, 2, E}};
        return spec;
    }
    if (id == "lift416")
        return cycles_with_edge_links(6, 8,
                                      {{0, 1, 0},
                                       {0, 2, 0},
                                       {0, 3, 0},
                                       {0, 5, 0},
                                       {1, 2, 3},
                                       {1, 3, 5},
                                       {1, 4, 0},
                                       {2, 4, 2},
                                       {2, 5, 3},
                                       {3, 4, 6},
                                       {3, 5, 5},
                                       {4, 5, 4}});
    if (id == "lift516")
        return cycles_with_edge_links(6, 12,
                                      {{0, 1, 0},
                                       {0, 2, 0},
                                       {1, 2, 3},
                                       {3, 4, 7},
                                       {3, 5, 11},
                                       {4, 5, 1},
                                       {0, 4, 0},
                                       {1, 5, 3},
                                       {0, 3, 0},
                                       {0, 3, 8},
                                       {1, 4, 5},
                                       {1, 4, 9},
                                       {2, 5, 5},
                                       {2, 5, 9},
                                       {2, 3, 3}});
    if (id == "circulant225") {
        // Mixed orientation of the cubic-residue Cayley graph on Z_19:
        // residues {1,7,8,11,12,18}; +-1 undirected, +7 and +8 directed.
        LiftSpec spec;
        spec.m = 19;
        spec.nodes = {LiftSpec::Node{{{1, E}, {7, A}, {8, A}}}};
        return spec;
    }
    if (id == "graph226") {
        // Nodes: 0 blue, 1 red, 2 green, each an undirected 9-cycle.
        LiftSpec spec;
        spec.m = 9;
        spec.nodes.assign(3, LiftSpec::Node{{{1, E}}});
        spec.links = {{0, 1, 0, A}, {0, 1, -1, A}, {1, 2, 0, A}, {1, 2, 1, A}, {2, 0, 4, A}, {2, 0, 5, A}};
        return spec;
    }
    throw std::invalid_argument("unknown lift id: " + id);
}

std::string ConstructionId::to_string() const {
    std::string s = name;
    for (int p : params) s += " " + std::to_string(p);
    return s;
}

namespace {

Expected exp_of(int r, int z, int g, int n) { return {r, z, g, n, true}; }

MixedGraph hs_oriented() {
    auto hs = hoffman_singleton();
    auto found = find_hamiltonian_cycle(hs);
    if (!found.cycle) throw std::runtime_error("hs-oriented: no Hamiltonian cycle found within budget");
    return orient_cycle(hs, *found.cycle);
}

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> c;
    auto fixed = [&](std::string name, std::function<MixedGraph()> build, Expected e, std::string summary) {
        c.push_back({name, name, 0, [build](const std::vector<int>&) { return build(); },
                     [e](const std::vector<int>&) { return e; }, std::move(summary)});
    };
    c.push_back({"bcw", "bcw <r> <g>", 2, [](const std::vector<int>& p) { return bcw(p[0], p[1]); },
                 [](const std::vector<int>& p) { return exp_of(0, p[0], p[1], p[0] * (p[1] - 1) + 1); },
                 "circulant digraph with arc steps 1..r"});
    c.push_back({"mobius", "mobius <g>", 1, [](const std::vector<int>& p) { return oriented_mobius(p[0]); },
                 [](const std::vector<int>& p) { return exp_of(1, 1, p[0], 2 * p[0] - 2); },
                 "Moebius ladder with cyclically oriented rim"});
    c.push_back({"lexk2", "lexk2 <g>", 1, [](const std::vector<int>& p) { return cyclic_lex_k2(p[0]); },
                 [](const std::vector<int>& p) { return exp_of(1, 2, p[0], 2 * p[0]); },
                 "directed g-cycle composed with K2"});
    c.push_back({"cage21", "cage21 <g>", 1, [](const std::vector<int>& p) { return cage21(p[0]); },
                 [](const std::vector<int>& p) { return exp_of(2, 1, p[0], static_cast<int>(f21(p[0]))); },
                 "circulant (2,1,g)-cage"});
    c.push_back({"square", "square <z> <g>", 2,
                 [](const std::vector<int>& p) { return theorem_2zg_square(p[0], p[1]); },
                 [](const std::vector<int>& p) { return exp_of(2, p[0], p[1], p[1] * p[1]); },
                 "subgraph of C_g[C_g], order g^2"});
    c.push_back({"even", "even <z> <g>", 2,
                 [](const std::vector<int>& p) { return theorem_2zg_even(p[0], p[1]); },
                 [](const std::vector<int>& p) { return exp_of(2, p[0], p[1], p[1] * p[1] - p[1]); },
                 "order g^2-g construction for even g, z <= g/2"});
    c.push_back({"thm22", "thm22 <g>", 1, [](const std::vector<int>& p) { return theorem_22g(p[0]); },
                 [](const std::vector<int>& p) { return exp_of(2, 2, p[0], ((p[0] + 1) / 2) * ((3 * p[0]) / 2)); },
                 "(2,2,g)-graph on ceil(g/2) cycles of length floor(3g/2)"});
    fixed("cubic12", cubic12, exp_of(3, 0, 5, 12), "cubic girth-5 graph of order 12");
    fixed("graph315", graph315, exp_of(3, 1, 5, 24), "(3,1,5)-cage of order 24");
    fixed("graph315-ring", graph315_ring_view, exp_of(3, 1, 5, 24), "(3,1,5)-cage, 18-cycle drawing");
    fixed("graph316", graph316, exp_of(3, 1, 6, 30), "(3,1,6)-cage of order 30");
    const std::pair<const char*, Expected> lifts[] = {
        {"lift317", exp_of(3, 1, 7, 60)}, {"lift318", exp_of(3, 1, 8, 76)},
        {"lift415", exp_of(4, 1, 5, 34)}, {"lift416", exp_of(4, 1, 6, 48)},
        {"lift516", exp_of(5, 1, 6, 72)}, {"circulant225", exp_of(2, 2, 5, 19)},
        {"graph226", exp_of(2, 2, 6, 27)},
    };
    for (const auto& [id, e] : lifts) {
        std::string name = id;
        fixed(name, [name] { return lift(builtin_lift_spec(name)); }, e, "voltage lift over Z_m");
    }
    fixed("hoffman-singleton", hoffman_singleton, exp_of(7, 0, 5, 50), "Hoffman-Singleton graph");
    fixed("hs-oriented", hs_oriented, exp_of(5, 1, 5, 50),
          "Hoffman-Singleton graph with a Hamiltonian cycle oriented");
    return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = make_catalog();
    return c;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw std::invalid_argument("unknown construction: " + name);
}

MixedGraph construct(const ConstructionId& id) {
    const auto& e = catalog_entry(id.name);
    if (static_cast<int>(id.params.size()) != e.arity)
        throw std::invalid_argument("construction " + id.name + " expects " + std::to_string(e.arity) +
                                    " parameter(s): " + e.usage);
    return e.build(id.params);
}

Expected expected_parameters(const ConstructionId& id) {
    const auto& e = catalog_entry(id.name);
    if (static_cast<int>(id.params.size()) != e.arity)
        throw std::invalid_argument("construction " + id.name + " expects " + std::to_string(e.arity) +
                                    " parameter(s): " + e.usage);
    return e.expected(id.params);
}

std::vector<ConstructionId> reference_constructions() {
    std::vector<ConstructionId> ids = {
        {"bcw", {3, 5}}, {"mobius", {5}}, {"lexk2", {7}}, {"cage21", {5}}, {"cage21", {6}},
    };
    for (int g = 5; g <= 8; ++g) {
        for (int z = 1; z <= g; ++z) ids.push_back({"square", {z, g}});
        if (g % 2 == 0)
            for (int z = 1; z <= g / 2; ++z) ids.push_back({"even", {z, g}});
        ids.push_back({"thm22", {g}});
    }
    for (const char* name : {"circulant225", "graph226", "graph315", "graph316", "lift317", "lift318", "lift415",
                             "lift416", "lift516", "hs-oriented"})
        ids.push_back({name, {}});
    return ids;
}

}  // namespace mixcage
