#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "mixcage/canonical.hpp"
#include "mixcage/constructions.hpp"
#include "mixcage/girth.hpp"
#include "mixcage/graph.hpp"

using namespace mixcage;

namespace {

MixedGraph random_mixed(std::mt19937& rng, int n, double pe, double pa) {
    std::bernoulli_distribution e(pe), a(pa);
    std::vector<std::pair<Vertex, Vertex>> edges, arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (u < v && e(rng)) edges.emplace_back(u, v);
            if (a(rng)) arcs.emplace_back(u, v);
        }
    return MixedGraph(n, edges, arcs);
}

std::vector<Vertex> random_perm(std::mt19937& rng, int n) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(MixedGraph(3, {{0, 0}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(MixedGraph(3, {}, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(MixedGraph(3, {{0, 3}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(MixedGraph(3, {{0, 1}, {1, 0}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(MixedGraph(3, {}, {{0, 1}, {0, 1}}), std::invalid_argument);
    // edge and arc on the same pair may coexist, as may opposite arcs
    MixedGraph g(2, {{1, 0}}, {{0, 1}, {1, 0}});
    CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}});
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_arc(1, 0));
    CHECK(g.views_consistent());
}

TEST_CASE("degree profiles") {
    for (const auto& d : degree_profile(bcw(3, 5))) CHECK(d == VertexDegrees{0, 3, 3});
    for (const auto& d : degree_profile(MixedGraph(4))) CHECK(d == VertexDegrees{0, 0, 0});
    for (const auto& d : degree_profile(cyclic_lex_k2(7))) CHECK(d == VertexDegrees{1, 2, 2});

    auto m = oriented_mobius(5);
    CHECK(check_regular(m, 1, 1));
    CHECK_FALSE(check_regular(m, 2, 1));
    CHECK(check_totally_regular(construct({"graph226", {}})));

    // out-regular, irregular in-degree
    MixedGraph star(3, {}, {{0, 2}, {1, 2}, {2, 0}});
    CHECK_FALSE(check_totally_regular(star));
    CHECK(regular_degrees(star) == std::pair{0, 1});
    CHECK_FALSE(regular_degrees(MixedGraph(3, {{0, 1}}, {})).has_value());
}

TEST_CASE("arc cycle type and components") {
    CHECK(arc_cycle_type(graph315()) == std::vector<int>{18, 6});
    CHECK(arc_cycle_type(graph316()) == std::vector<int>{10, 10, 10});
    CHECK_FALSE(arc_cycle_type(bcw(2, 4)).has_value());
    auto comps = undirected_components(graph315());
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 12);
    CHECK(comps[1].size() == 12);
}

TEST_CASE("mixed distance") {
    MixedGraph path(3, {{0, 1}, {1, 2}}, {});
    CHECK(mixed_distance(path, 0, 2) == 2);
    CHECK(mixed_distance(path, 2, 0) == 2);
    MixedGraph arc(2, {}, {{0, 1}});
    CHECK(mixed_distance(arc, 0, 1) == 1);
    CHECK_FALSE(mixed_distance(arc, 1, 0).has_value());
    CHECK(mixed_distance(bcw(3, 5), 0, 12) == 4);
    CHECK_FALSE(mixed_distance(path, 0, 2, Element::edge(2, 1)).has_value());
    CHECK_THROWS_AS(mixed_distance(path, 0, 5), std::out_of_range);

    // triangle inequality over concatenated walks
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        auto g = random_mixed(rng, 8, 0.2, 0.2);
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b)
                for (int c = 0; c < 8; ++c) {
                    auto ab = mixed_distance(g, a, b), bc = mixed_distance(g, b, c), ac = mixed_distance(g, a, c);
                    if (ab && bc) {
                        REQUIRE(ac.has_value());
                        CHECK(*ac <= *ab + *bc);
                    }
                }
    }
}

TEST_CASE("girth") {
    CHECK(girth(MixedGraph(2, {{0, 1}}, {{0, 1}})) == 2);
    CHECK(girth(MixedGraph(2, {}, {{0, 1}, {1, 0}})) == 2);
    CHECK_FALSE(girth(MixedGraph(2, {{0, 1}}, {})).has_value());
    CHECK(girth(oriented_mobius(5)) == 5);
    CHECK(girth(graph316()) == 6);

    MixedGraph tri(3, {{0, 1}, {1, 2}, {0, 2}}, {});
    for (auto e : tri.elements()) CHECK(girth_through_element(tri, e) == 3);
    MixedGraph lone(2, {}, {{0, 1}});
    CHECK_FALSE(girth_through_element(lone, Element::arc(0, 1)).has_value());
    CHECK_THROWS(girth_through_element(lone, Element::arc(1, 0)));

    // the last edge of the order-30 girth-6 graph closes a 6-cycle
    auto g316 = graph316();
    auto e = Element::edge(0, 12);  // x0 ~ y2
    REQUIRE(g316.contains(e));
    CHECK(girth_through_element(g316, e) == 6);
    CHECK(girth(g316.without_element(e)) >= 6);
}

TEST_CASE("brute force girth oracle") {
    std::vector<std::pair<Vertex, Vertex>> c5;
    for (int i = 0; i < 5; ++i) c5.emplace_back(i, (i + 1) % 5);
    CHECK(brute_force_girth(MixedGraph(5, c5, {}), 6) == 5);
    CHECK(brute_force_girth(bcw(3, 5), 5) == 5);
    // acyclic orientation of K6
    std::vector<std::pair<Vertex, Vertex>> dag;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) dag.emplace_back(u, v);
    CHECK_FALSE(brute_force_girth(MixedGraph(6, {}, dag), 12).has_value());

    std::mt19937 rng(2024);
    for (int t = 0; t < 300; ++t) {
        std::uniform_int_distribution<int> nd(2, 11);
        std::uniform_real_distribution<double> p(0.0, 0.35);
        auto g = random_mixed(rng, nd(rng), p(rng), p(rng));
        auto bf = brute_force_girth(g, 10);
        auto gi = girth(g);
        if (bf) CHECK(gi == bf);
        else CHECK((!gi || *gi > 10));
    }
}

TEST_CASE("canonical form") {
    std::mt19937 rng(99);
    for (auto id : {"graph315", "graph316", "lift317", "circulant225", "graph226"}) {
        auto g = construct({id, {}});
        auto base = canonical_form(g);
        for (int t = 0; t < 10; ++t) {
            auto p = random_perm(rng, g.order());
            auto h = g.relabeled(p);
            CHECK(canonical_form(h) == base);
            CHECK(girth(h) == girth(g));
        }
        // the labeling produces the canonical representative
        auto again = canonical_form(g.relabeled(base.labeling));
        CHECK(again == base);
    }

    // an edge is not an arc, and arc direction matters
    CHECK_FALSE(isomorphic(MixedGraph(3, {{0, 1}}, {{1, 2}}), MixedGraph(3, {}, {{0, 1}, {1, 2}})));
    CHECK_FALSE(isomorphic(MixedGraph(3, {{0, 1}}, {{1, 2}}), MixedGraph(3, {{0, 1}}, {{2, 1}})));
    CHECK_FALSE(isomorphic(MixedGraph(3, {}, {{0, 1}, {0, 2}}), MixedGraph(3, {}, {{1, 0}, {2, 0}})));

    // BCW(3,5) has steps {1,2,3}; reversing gives steps {-1,-2,-3}, and
    // i -> -i maps one onto the other, so the fingerprints must agree.
    auto b = bcw(3, 5);
    std::vector<std::pair<Vertex, Vertex>> rev;
    for (auto [u, v] : b.arcs()) rev.emplace_back(v, u);
    MixedGraph reversed(13, {}, rev);
    std::vector<Vertex> neg(13);
    for (int i = 0; i < 13; ++i) neg[i] = (13 - i) % 13;
    CHECK(b.relabeled(neg) == reversed);
    CHECK(canonical_form(b) == canonical_form(reversed));

    // a graph that is not isomorphic to its reverse: arcs out of a source
    // plus a tail arc
    MixedGraph asym(4, {}, {{0, 1}, {0, 2}, {1, 3}});
    MixedGraph asym_rev(4, {}, {{1, 0}, {2, 0}, {3, 1}});
    CHECK(canonical_form(asym) != canonical_form(asym_rev));
}

TEST_CASE("automorphism generators are automorphisms") {
    for (auto id : {"graph315", "lift416", "cubic12"}) {
        auto g = construct({id, {}});
        for (const auto& p : automorphism_generators(g)) CHECK(g.relabeled(p) == g);
    }
}

TEST_CASE("coloured automorphisms fix the colour classes") {
    // Petersen graph: vertex-transitive, so pinning one vertex leaves the
    // stabiliser (order 12) acting on its 3 neighbours as one orbit.
    MixedGraph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}},
                        {});
    std::vector<int> colors(10, 7);
    colors[0] = -3;
    auto gens = automorphism_generators(petersen, colors);
    REQUIRE_FALSE(gens.empty());
    std::set<Vertex> orbit{1};
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& p : gens) {
            CHECK(petersen.relabeled(p) == petersen);
            CHECK(p[0] == 0);
            for (Vertex v : std::vector<Vertex>(orbit.begin(), orbit.end())) grew |= orbit.insert(p[v]).second;
        }
    }
    CHECK(orbit == std::set<Vertex>{1, 4, 5});
    CHECK_THROWS_AS(automorphism_generators(petersen, {0, 1}), std::invalid_argument);
}
