#include "mixcage/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace mixcage {

const char* to_string(ParseErrorCode code) {
    switch (code) {
        case ParseErrorCode::BadHeader: return "bad-header";
        case ParseErrorCode::OutOfRange: return "out-of-range";
        case ParseErrorCode::DuplicateElement: return "duplicate-element";
        case ParseErrorCode::SelfLoop: return "self-loop";
        case ParseErrorCode::Syntax: return "syntax";
        case ParseErrorCode::MalformedByte: return "malformed-byte";
        case ParseErrorCode::Truncated: return "truncated";
    }
    return "unknown";
}

ParseError::ParseError(ParseErrorCode code, int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), code_(code), line_(line) {}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            if (pos < text.size()) lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    for (auto& l : lines)
        if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    return lines;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_int(std::string_view s, long long& out) {
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

// Strips a trailing comment; returns the comment body (after '#') via out param.
std::string_view strip_comment(std::string_view line, std::string_view* comment) {
    auto hash = line.find('#');
    if (hash == std::string_view::npos) return trim(line);
    if (comment) *comment = trim(line.substr(hash + 1));
    return trim(line.substr(0, hash));
}

ElementKind parse_kind(std::string_view tok, int line) {
    if (tok == "e") return ElementKind::Edge;
    if (tok == "a") return ElementKind::Arc;
    throw ParseError(ParseErrorCode::Syntax, line, "expected 'e' or 'a', got '" + std::string(tok) + "'");
}

}  // namespace

MgfDocument parse_mgf_document(std::string_view text) {
    auto lines = split_lines(text);
    MgfDocument doc;
    long long n = -1;
    std::set<std::pair<Vertex, Vertex>> edges, arcs;
    int lineno = 0;
    for (auto raw : lines) {
        ++lineno;
        std::string_view comment;
        auto body = strip_comment(raw, &comment);
        if (!comment.empty()) {
            auto colon = comment.find(':');
            if (colon != std::string_view::npos && colon > 0 && comment.substr(0, colon).find(' ') == std::string_view::npos)
                doc.metadata[std::string(comment.substr(0, colon))] = std::string(trim(comment.substr(colon + 1)));
        }
        if (body.empty()) continue;
        auto tok = tokens(body);
        if (n < 0) {
            if (tok.size() != 2 || tok[0] != "mgf" || !parse_int(tok[1], n) || n < 0)
                throw ParseError(ParseErrorCode::BadHeader, lineno, "expected header 'mgf <n>'");
            continue;
        }
        if (tok.size() != 3 || (tok[0] != "e" && tok[0] != "a"))
            throw ParseError(ParseErrorCode::Syntax, lineno, "expected 'e <u> <v>' or 'a <u> <v>'");
        long long u = 0, v = 0;
        if (!parse_int(tok[1], u) || !parse_int(tok[2], v))
            throw ParseError(ParseErrorCode::Syntax, lineno, "vertex ids must be decimal integers");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(ParseErrorCode::OutOfRange, lineno,
                             "vertex id out of range (n = " + std::to_string(n) + ")");
        if (u == v) throw ParseError(ParseErrorCode::SelfLoop, lineno, "self-loop at vertex " + std::to_string(u));
        bool fresh;
        if (tok[0] == "e") fresh = edges.emplace(std::min(u, v), std::max(u, v)).second;
        else fresh = arcs.emplace(u, v).second;
        if (!fresh) throw ParseError(ParseErrorCode::DuplicateElement, lineno, "duplicate element");
    }
    if (n < 0) throw ParseError(ParseErrorCode::BadHeader, lineno ? 1 : 0, "missing 'mgf <n>' header");
    doc.graph = MixedGraph(static_cast<int>(n), {edges.begin(), edges.end()}, {arcs.begin(), arcs.end()});
    return doc;
}

MixedGraph parse_mgf(std::string_view text) { return parse_mgf_document(text).graph; }

std::string emit_mgf(const MixedGraph& g, const std::map<std::string, std::string>& metadata) {
    std::ostringstream os;
    os << "mgf " << g.order() << '\n';
    for (const auto& [k, v] : metadata) os << "# " << k << ": " << v << '\n';
    auto edges = g.edges();
    auto arcs = g.arcs();
    std::sort(edges.begin(), edges.end());
    std::sort(arcs.begin(), arcs.end());
    for (auto [u, v] : edges) os << "e " << u << ' ' << v << '\n';
    for (auto [u, v] : arcs) os << "a " << u << ' ' << v << '\n';
    return os.str();
}

MixedGraph parse_graph6(std::string_view line) {
    line = trim(line);
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    std::size_t pos = 0;
    auto next = [&](const char* what) -> int {
        if (pos >= line.size()) throw ParseError(ParseErrorCode::Truncated, 0, std::string("graph6: truncated ") + what);
        unsigned char c = static_cast<unsigned char>(line[pos]);
        if (c < 63 || c > 126)
            throw ParseError(ParseErrorCode::MalformedByte, 0,
                             "graph6: byte " + std::to_string(c) + " at offset " + std::to_string(pos) + " outside 63..126");
        ++pos;
        return c - 63;
    };
    long long n = next("header");
    if (n == 63) {
        int k = 3;
        if (pos < line.size() && line[pos] == '~') {
            ++pos;
            k = 6;
        }
        n = 0;
        for (int i = 0; i < k; ++i) n = (n << 6) | next("header");
    }
    if (n > 1'000'000) throw ParseError(ParseErrorCode::MalformedByte, 0, "graph6: order too large");
    std::vector<std::pair<Vertex, Vertex>> edges;
    int word = 0, left = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (left == 0) {
                word = next("bitstring");
                left = 6;
            }
            --left;
            if ((word >> left) & 1) edges.emplace_back(i, j);
        }
    if (pos != line.size())
        throw ParseError(ParseErrorCode::MalformedByte, 0, "graph6: " + std::to_string(line.size() - pos) + " trailing bytes");
    return MixedGraph(static_cast<int>(n), std::move(edges), {});
}

std::string encode_graph6(const MixedGraph& g) {
    if (!g.arcs().empty()) throw std::invalid_argument("graph6 cannot encode arcs");
    const long long n = g.order();
    std::string out;
    auto put = [&](int six) { out.push_back(static_cast<char>(63 + six)); };
    if (n <= 62) {
        put(static_cast<int>(n));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int s = 12; s >= 0; s -= 6) put(static_cast<int>((n >> s) & 63));
    } else {
        out += "~~";
        for (int s = 30; s >= 0; s -= 6) put(static_cast<int>((n >> s) & 63));
    }
    int word = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            word = (word << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                put(word);
                word = filled = 0;
            }
        }
    if (filled) put(word << (6 - filled));
    return out;
}

std::vector<MixedGraph> parse_graph6_lines(std::string_view text) {
    std::vector<MixedGraph> out;
    int lineno = 0;
    for (auto line : split_lines(text)) {
        ++lineno;
        if (trim(line).empty()) continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(e.code(), lineno, e.what());
        }
    }
    return out;
}

std::string emit_dot(const MixedGraph& g, const std::string& name) {
    std::ostringstream os;
    const bool directed = !g.arcs().empty();
    os << (directed ? "digraph " : "graph ") << name << " {\n";
    for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
    auto edges = g.edges();
    auto arcs = g.arcs();
    std::sort(edges.begin(), edges.end());
    std::sort(arcs.begin(), arcs.end());
    for (auto [u, v] : edges) {
        if (directed) os << "  " << u << " -> " << v << " [dir=none];\n";
        else os << "  " << u << " -- " << v << ";\n";
    }
    for (auto [u, v] : arcs) os << "  " << u << " -> " << v << ";\n";
    os << "}\n";
    return os.str();
}

LiftSpec parse_lift_spec(std::string_view text) {
    LiftSpec spec;
    bool have_m = false;
    int lineno = 0;
    auto int_at = [&](std::string_view tok, const char* what) {
        long long v = 0;
        if (!parse_int(tok, v) || v < INT32_MIN || v > INT32_MAX)
            throw ParseError(ParseErrorCode::Syntax, lineno, std::string("expected integer ") + what);
        return static_cast<int>(v);
    };
    for (auto raw : split_lines(text)) {
        ++lineno;
        auto body = strip_comment(raw, nullptr);
        if (body.empty()) continue;
        auto tok = tokens(body);
        if (tok[0] == "m") {
            if (tok.size() != 2) throw ParseError(ParseErrorCode::Syntax, lineno, "expected 'm <int>'");
            if (have_m) throw ParseError(ParseErrorCode::DuplicateElement, lineno, "'m' given twice");
            spec.m = int_at(tok[1], "modulus");
            if (spec.m < 1) throw ParseError(ParseErrorCode::OutOfRange, lineno, "modulus must be positive");
            have_m = true;
        } else if (tok[0] == "node") {
            if (tok.size() != 1) throw ParseError(ParseErrorCode::Syntax, lineno, "'node' takes no arguments");
            spec.nodes.emplace_back();
        } else if (tok[0] == "self") {
            if (tok.size() != 3) throw ParseError(ParseErrorCode::Syntax, lineno, "expected 'self <step> e|a'");
            if (spec.nodes.empty()) throw ParseError(ParseErrorCode::Syntax, lineno, "'self' before any 'node'");
            spec.nodes.back().self_steps.push_back({int_at(tok[1], "step"), parse_kind(tok[2], lineno)});
        } else if (tok[0] == "link") {
            if (tok.size() != 5) throw ParseError(ParseErrorCode::Syntax, lineno, "expected 'link <a> <b> <offset> e|a'");
            spec.links.push_back({int_at(tok[1], "node"), int_at(tok[2], "node"), int_at(tok[3], "offset"),
                                  parse_kind(tok[4], lineno)});
        } else {
            throw ParseError(ParseErrorCode::Syntax, lineno, "unknown directive '" + std::string(tok[0]) + "'");
        }
    }
    if (!have_m) throw ParseError(ParseErrorCode::BadHeader, 0, "lift spec lacks 'm <int>'");
    const int nodes = static_cast<int>(spec.nodes.size());
    for (const auto& l : spec.links)
        if (l.a < 0 || l.b < 0 || l.a >= nodes || l.b >= nodes)
            throw ParseError(ParseErrorCode::OutOfRange, 0,
                             "link " + std::to_string(l.a) + " " + std::to_string(l.b) + " names a missing node");
    return spec;
}

std::string emit_lift_spec(const LiftSpec& spec) {
    std::ostringstream os;
    auto kind = [](ElementKind k) { return k == ElementKind::Edge ? 'e' : 'a'; };
    os << "m " << spec.m << '\n';
    for (const auto& node : spec.nodes) {
        os << "node\n";
        for (const auto& s : node.self_steps) os << "self " << s.step << ' ' << kind(s.kind) << '\n';
    }
    for (const auto& l : spec.links) os << "link " << l.a << ' ' << l.b << ' ' << l.offset << ' ' << kind(l.kind) << '\n';
    return os.str();
}

}  // namespace mixcage
