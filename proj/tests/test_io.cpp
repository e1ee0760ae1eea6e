#include <doctest.h>

#include <random>
#include <stdexcept>

#include "mixcage/canonical.hpp"
#include "mixcage/constructions.hpp"
#include "mixcage/girth.hpp"
#include "mixcage/io.hpp"

using namespace mixcage;

namespace {

ParseErrorCode mgf_error(const std::string& text, int* line = nullptr) {
    try {
        parse_mgf(text);
    } catch (const ParseError& e) {
        if (line) *line = e.line();
        return e.code();
    }
    FAIL("no error for: " << text);
    return ParseErrorCode::Syntax;
}

ParseErrorCode g6_error(const std::string& text) {
    try {
        parse_graph6(text);
    } catch (const ParseError& e) {
        return e.code();
    }
    FAIL("no error for: " << text);
    return ParseErrorCode::Syntax;
}

MixedGraph random_undirected(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return MixedGraph(n, edges, {});
}

}  // namespace

TEST_CASE("mgf parse") {
    auto g = parse_mgf("mgf 2\na 0 1\ne 0 1\n");
    CHECK(g.order() == 2);
    CHECK(girth(g) == 2);

    auto doc = parse_mgf_document("# name: demo\nmgf 3 # header\n\n# expect: 1,0,3,3\ne 2 1\n");
    CHECK(doc.metadata.at("name") == "demo");
    CHECK(doc.metadata.at("expect") == "1,0,3,3");
    CHECK(doc.graph.has_edge(1, 2));

    int line = 0;
    CHECK(mgf_error("mgf 3\ne 0 3\n", &line) == ParseErrorCode::OutOfRange);
    CHECK(line == 2);
    CHECK(mgf_error("mgf\n", &line) == ParseErrorCode::BadHeader);
    CHECK(mgf_error("graph 3\n") == ParseErrorCode::BadHeader);
    CHECK(mgf_error("e 0 1\n") == ParseErrorCode::BadHeader);
    CHECK(mgf_error("") == ParseErrorCode::BadHeader);
    CHECK(mgf_error("mgf 3\ne 0 1\ne 1 0\n", &line) == ParseErrorCode::DuplicateElement);
    CHECK(line == 3);
    CHECK(mgf_error("mgf 3\na 0 1\na 0 1\n") == ParseErrorCode::DuplicateElement);
    CHECK(mgf_error("mgf 3\na 2 2\n") == ParseErrorCode::SelfLoop);
    CHECK(mgf_error("mgf 3\nx 0 1\n") == ParseErrorCode::Syntax);
    CHECK(mgf_error("mgf 3\ne 0 one\n") == ParseErrorCode::Syntax);
    CHECK(mgf_error("mgf 3\ne 0 1 2\n") == ParseErrorCode::Syntax);
    CHECK(mgf_error("mgf 3\ne -1 1\n") == ParseErrorCode::OutOfRange);
}

TEST_CASE("mgf round trip over the catalog") {
    for (const auto& id : reference_constructions()) {
        if (id.name == "hs-oriented") continue;
        CAPTURE(id.to_string());
        auto g = construct(id);
        auto text = emit_mgf(g, {{"name", id.to_string()}});
        auto back = parse_mgf_document(text);
        CHECK(back.graph == g);
        CHECK(back.metadata.at("name") == id.to_string());
        CHECK(emit_mgf(back.graph, back.metadata) == text);
    }
    auto g316 = graph316();
    CHECK(canonical_form(parse_mgf(emit_mgf(g316))) == canonical_form(g316));
    CHECK(emit_mgf(MixedGraph(2, {{1, 0}}, {{1, 0}})) == "mgf 2\ne 0 1\na 1 0\n");
}

TEST_CASE("graph6") {
    auto empty = parse_graph6("D??");
    CHECK(empty.order() == 5);
    CHECK(empty.edges().empty());

    auto g = parse_graph6("DQc");
    CHECK(g.order() == 5);
    CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {0, 4}, {1, 3}, {3, 4}});
    CHECK(encode_graph6(g) == "DQc");
    CHECK(parse_graph6(">>graph6<<DQc") == g);

    // Petersen graph in its usual graph6 spelling
    auto petersen = parse_graph6("IheA@GUAo");
    CHECK(petersen.order() == 10);
    CHECK(check_regular(petersen, 3, 0));
    CHECK(girth(petersen) == 5);

    CHECK(g6_error("DQ") == ParseErrorCode::Truncated);
    CHECK(g6_error("") == ParseErrorCode::Truncated);
    CHECK(g6_error("D?\x01") == ParseErrorCode::MalformedByte);
    CHECK(g6_error("DQcc") == ParseErrorCode::MalformedByte);
    CHECK_THROWS_AS(encode_graph6(MixedGraph(2, {}, {{0, 1}})), std::invalid_argument);

    std::mt19937 rng(6);
    for (int t = 0; t < 200; ++t) {
        int n = std::uniform_int_distribution<int>(0, 40)(rng);
        auto h = random_undirected(rng, n, std::uniform_real_distribution<double>(0, 1)(rng));
        auto line = encode_graph6(h);
        CHECK(parse_graph6(line) == h);
        CHECK(encode_graph6(parse_graph6(line)) == line);
    }
    // long-form header
    auto big = random_undirected(rng, 70, 0.1);
    auto line = encode_graph6(big);
    CHECK(line[0] == '~');
    CHECK(parse_graph6(line) == big);

    auto many = parse_graph6_lines("D??\n\nDQc\n");
    CHECK(many.size() == 2);
    try {
        parse_graph6_lines("D??\nDQ\n");
        FAIL("expected error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.code() == ParseErrorCode::Truncated);
    }
}

TEST_CASE("dot") {
    CHECK(emit_dot(MixedGraph(2, {{0, 1}}, {})).find("0 -- 1;") != std::string::npos);
    auto arc = emit_dot(MixedGraph(2, {}, {{0, 1}}));
    CHECK(arc.find("0 -> 1;") != std::string::npos);
    CHECK(arc.find("--") == std::string::npos);

    auto text = emit_dot(graph315());
    auto count = [&](const std::string& needle) {
        std::size_t c = 0;
        for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++c;
        return c;
    };
    CHECK(count("[dir=none]") == 36);
    CHECK(count(" -> ") == 60);
    CHECK(count(";\n") == 24 + 60);
    CHECK(text == emit_dot(graph315()));
}

TEST_CASE("lift spec text") {
    auto spec = builtin_lift_spec("lift416");
    auto text = emit_lift_spec(spec);
    CHECK(parse_lift_spec(text) == spec);
    auto parsed = parse_lift_spec("# one node\nm 13\nnode\nself 1 e\nself 5 a  # arc step\n");
    CHECK(lift(parsed) == cage21(5));

    auto code = [](const std::string& t) {
        try {
            parse_lift_spec(t);
        } catch (const ParseError& e) {
            return e.code();
        }
        return ParseErrorCode::BadHeader;  // unreachable in these cases
    };
    CHECK(code("node\nself 1 e\n") == ParseErrorCode::BadHeader);
    CHECK(code("m 5\nself 1 e\n") == ParseErrorCode::Syntax);
    CHECK(code("m 5\nnode\nself 1 x\n") == ParseErrorCode::Syntax);
    CHECK(code("m 5\nnode\nlink 0 1 0 e\n") == ParseErrorCode::OutOfRange);
    CHECK(code("m 0\n") == ParseErrorCode::OutOfRange);
    CHECK(code("m 5\nm 6\n") == ParseErrorCode::DuplicateElement);
}
