#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "mixcage/constructions.hpp"
#include "mixcage/girth.hpp"
#include "mixcage/search.hpp"

using namespace mixcage;

namespace {

SearchConfig config(int r, int z, int g, int n) {
    SearchConfig c;
    c.r = r;
    c.z = z;
    c.g = g;
    c.n = n;
    return c;
}

std::set<std::vector<std::uint32_t>> classes(const SearchResult& res) {
    std::set<std::vector<std::uint32_t>> out;
    for (const auto& fg : res.graphs) out.insert(fg.form.fingerprint);
    return out;
}

void check_sound(const SearchResult& res, const SearchConfig& c) {
    for (const auto& fg : res.graphs) {
        CHECK(fg.graph.order() == c.n);
        CHECK(check_regular(fg.graph, c.r, c.z));
        CHECK(girth(fg.graph) == c.g);
    }
    for (std::size_t i = 1; i < res.graphs.size(); ++i) CHECK(res.graphs[i - 1].form < res.graphs[i].form);
}

MixedGraph disjoint_copies(const MixedGraph& g, int k) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int c = 0; c < k; ++c)
        for (auto [u, v] : g.edges()) edges.emplace_back(u + c * g.order(), v + c * g.order());
    return MixedGraph(g.order() * k, edges, {});
}

}  // namespace

TEST_CASE("partitions") {
    CHECK(enumerate_partitions(20, 5).size() == 13);
    CHECK(enumerate_partitions(22, 5).size() == 18);
    auto eq = enumerate_partitions(24, 5, PartitionFilter::EqualParts);
    CHECK(eq == std::vector<CyclePartition>{{24}, {12, 12}, {8, 8, 8}, {6, 6, 6, 6}});
    auto all = enumerate_partitions(12, 4);
    CHECK(all == std::vector<CyclePartition>{{12}, {8, 4}, {7, 5}, {6, 6}, {4, 4, 4}});
    for (const auto& p : enumerate_partitions(22, 5)) {
        CHECK(std::is_sorted(p.rbegin(), p.rend()));
        CHECK(std::accumulate(p.begin(), p.end(), 0) == 22);
        CHECK(p.back() >= 5);
    }
    CHECK(enumerate_partitions(4, 5).empty());
    CHECK(partition_label({5, 5, 5, 5}) == "5,5,5,5");
    auto ex = enumerate_partitions(20, 5, PartitionFilter::Explicit, {{5, 5, 10}, {10, 5, 5}});
    CHECK(ex == std::vector<CyclePartition>{{10, 5, 5}});
    CHECK_THROWS_AS(enumerate_partitions(20, 5, PartitionFilter::Explicit, {{4, 16}}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_partitions(20, 5, PartitionFilter::Explicit, {{5, 5, 5}}), std::invalid_argument);
}

TEST_CASE("config validation") {
    auto c = config(2, 1, 5, 13);
    CHECK_NOTHROW(c.validate());
    c.node_budget = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = config(2, 2, 5, 13);
    CHECK_THROWS_AS(search_directed_first(c), std::invalid_argument);
    c.mode = SearchMode::UndirectedFirst;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = config(2, 1, 5, 65);
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("minimal orders") {
    for (int n = 5; n <= 8; ++n) {
        auto c = config(1, 1, 5, n);
        auto res = search_directed_first(c);
        CHECK(res.exhaustive);
        check_sound(res, c);
        CHECK(res.graphs.size() == (n == 8 ? 1u : 0u));
        if (n == 8) CHECK(isomorphic(res.graphs[0].graph, oriented_mobius(5)));
    }
    for (int n = 9; n <= 13; ++n) {
        auto c = config(2, 1, 5, n);
        auto res = search_directed_first(c);
        CHECK(res.exhaustive);
        CHECK(res.graphs.empty() == (n < 13));
        check_sound(res, c);
    }
    auto c = config(1, 2, 3, 6);
    c.mode = SearchMode::General;
    auto res = search_general(c);
    CHECK(res.exhaustive);
    check_sound(res, c);
    // four classes at order 6; the lexicographic product is one of them
    REQUIRE(res.graphs.size() == 4);
    CHECK(std::any_of(res.graphs.begin(), res.graphs.end(),
                      [](const auto& fg) { return isomorphic(fg.graph, cyclic_lex_k2(3)); }));
}

TEST_CASE("parity makes odd orders impossible for odd r") {
    auto c = config(1, 1, 5, 9);
    auto res = search_directed_first(c);
    CHECK(res.exhaustive);
    CHECK(res.graphs.empty());
    CHECK(res.totals.degree_prunes > 0);
}

TEST_CASE("engines agree and symmetry pruning is loss-free") {
    for (int r = 0; r <= 2; ++r)
        for (int g = 4; g <= 6; ++g)
            for (int n = g; n <= 10; ++n) {
                CAPTURE(r);
                CAPTURE(g);
                CAPTURE(n);
                auto c = config(r, 1, g, n);
                auto d = search_directed_first(c);
                auto u = search_undirected_first(c, regular_scaffolds(n, r, g));
                auto gen = search_general(c);
                REQUIRE(d.exhaustive);
                REQUIRE(u.exhaustive);
                REQUIRE(gen.exhaustive);
                check_sound(d, c);
                CHECK(classes(d) == classes(u));
                CHECK(classes(d) == classes(gen));
                c.symmetry_pruning = false;
                CHECK(classes(search_directed_first(c)) == classes(d));
                CHECK(classes(search_undirected_first(c, regular_scaffolds(n, r, g))) == classes(d));
                // unpruned general search is a labelled enumeration; keep it small
                if (n <= 8) CHECK(classes(search_general(c)) == classes(d));
                c.symmetry_pruning = true;
                c.orbit_pruning = false;
                CHECK(classes(search_general(c)) == classes(d));
            }
}

TEST_CASE("general engine pruning levels agree for z > 1") {
    for (int z = 2; z <= 3; ++z)
        for (int r = 0; r + z <= 3; ++r)
            for (int g = 3; g <= 6; ++g)
                for (int n = g; n <= 9; ++n) {
                    CAPTURE(r);
                    CAPTURE(z);
                    CAPTURE(g);
                    CAPTURE(n);
                    auto c = config(r, z, g, n);
                    c.mode = SearchMode::General;
                    auto full = search_general(c);
                    REQUIRE(full.exhaustive);
                    check_sound(full, c);
                    c.orbit_pruning = false;
                    CHECK(classes(search_general(c)) == classes(full));
                    c.symmetry_pruning = false;
                    if (n <= 6) CHECK(classes(search_general(c)) == classes(full));
                }
}

TEST_CASE("undirected-first scaffolds") {
    auto c = config(3, 1, 5, 12);
    auto res = search_undirected_first(c, {cubic12()});
    CHECK(res.exhaustive);
    CHECK(res.graphs.empty());

    // wrong order, wrong degree and too-small girth are skipped with a reason
    std::vector<std::pair<Vertex, Vertex>> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    auto bad = search_undirected_first(c, {MixedGraph(4, k4, {}), disjoint_copies(MixedGraph(4, k4, {}), 3),
                                           cubic12()});
    CHECK(bad.diagnostics.size() == 2);
    CHECK(bad.cases[0].skipped);
    CHECK(bad.cases[1].skipped);
    CHECK_FALSE(bad.cases[2].skipped);

    auto scaffolds = regular_scaffolds(10, 3, 5);
    REQUIRE(scaffolds.size() == 1);  // the Petersen graph
    CHECK(regular_scaffolds(12, 3, 5).size() == 2);
    CHECK(regular_scaffolds(14, 3, 5).size() == 9);
}

TEST_CASE("order-24 completions of two cubic12 copies") {
    auto c = config(3, 1, 5, 24);
    c.stop_at_first = true;
    auto res = search_undirected_first(c, {disjoint_copies(cubic12(), 2)});
    REQUIRE(res.graphs.size() == 1);
    CHECK(res.stopped_early);
    CHECK_FALSE(res.exhaustive);
    check_sound(res, c);
}

TEST_CASE("single partition at order 20") {
    auto c = config(3, 1, 5, 20);
    c.filter = PartitionFilter::Explicit;
    c.partitions = {{5, 5, 5, 5}};
    auto res = search_directed_first(c);
    CHECK(res.exhaustive);
    CHECK(res.graphs.empty());
    REQUIRE(res.cases.size() == 1);
    CHECK(res.cases[0].label == "5,5,5,5");
    CHECK(res.cases[0].stats.nodes > 0);
}

TEST_CASE("budget and stop-at-first") {
    auto c = config(3, 1, 5, 20);
    c.filter = PartitionFilter::Explicit;
    c.partitions = {{5, 5, 5, 5}};
    c.node_budget = 50;
    auto res = search_directed_first(c);
    CHECK(res.truncated);
    CHECK_FALSE(res.exhaustive);
    CHECK(res.cases[0].truncated);

    auto f = config(1, 1, 3, 10);
    f.stop_at_first = true;
    auto one = search_directed_first(f);
    CHECK(one.graphs.size() == 1);
    CHECK(one.stopped_early);
    f.jobs = 3;
    auto again = search_directed_first(f);
    REQUIRE(again.graphs.size() == 1);
    CHECK(again.graphs[0].form == one.graphs[0].form);
    CHECK(again.totals.nodes == one.totals.nodes);
}

TEST_CASE("worker count does not change results") {
    for (auto mode : {SearchMode::DirectedFirst, SearchMode::General}) {
        auto c = config(1, 1, 3, 10);
        auto a = mode == SearchMode::General ? search_general(c) : search_directed_first(c);
        c.jobs = 4;
        auto b = mode == SearchMode::General ? search_general(c) : search_directed_first(c);
        REQUIRE(a.graphs.size() == b.graphs.size());
        for (std::size_t i = 0; i < a.graphs.size(); ++i) {
            CHECK(a.graphs[i].graph == b.graphs[i].graph);
            CHECK(a.graphs[i].origin == b.graphs[i].origin);
        }
        CHECK(a.totals.nodes == b.totals.nodes);
        CHECK(a.totals.symmetry_prunes == b.totals.symmetry_prunes);
    }
}

TEST_CASE("cycle scaffold") {
    auto s = cycle_scaffold({6, 5});
    CHECK(s.order() == 11);
    CHECK(arc_cycle_type(s) == std::vector<int>{6, 5});
    CHECK(s.has_arc(5, 0));
    CHECK(s.has_arc(10, 6));
}
