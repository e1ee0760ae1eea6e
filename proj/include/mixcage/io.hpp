#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mixcage/graph.hpp"
#include "mixcage/lift.hpp"

namespace mixcage {

enum class ParseErrorCode {
    BadHeader = 1,
    OutOfRange,
    DuplicateElement,
    SelfLoop,
    Syntax,
    MalformedByte,
    Truncated,
};

const char* to_string(ParseErrorCode code);

/// Text-format error. line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorCode code, int line, const std::string& what);
    ParseErrorCode code() const noexcept { return code_; }
    int line() const noexcept { return line_; }

private:
    ParseErrorCode code_;
    int line_;
};

// MGF:
//   mgf <n>
//   e <u> <v>      edge
//   a <u> <v>      arc u -> v
// '#' starts a comment; "# key: value" comments are kept as metadata.
struct MgfDocument {
    MixedGraph graph;
    std::map<std::string, std::string> metadata;
};

MgfDocument parse_mgf_document(std::string_view text);
MixedGraph parse_mgf(std::string_view text);
/// Normalised form: header, metadata comments, edges (u < v) sorted, arcs sorted.
std::string emit_mgf(const MixedGraph& g, const std::map<std::string, std::string>& metadata = {});

/// One graph6 line (optional ">>graph6<<" prefix); undirected graphs only.
MixedGraph parse_graph6(std::string_view line);
/// Throws std::invalid_argument if g has arcs.
std::string encode_graph6(const MixedGraph& g);
/// Every non-blank line of text; errors report the line number.
std::vector<MixedGraph> parse_graph6_lines(std::string_view text);

/// "graph" with "--" when there are no arcs; otherwise "digraph" with edges
/// written as "u -> v [dir=none]" (DOT cannot mix the two operators).
std::string emit_dot(const MixedGraph& g, const std::string& name = "G");

// LiftSpec text:
//   m <int>
//   node                 opens the next node
//   self <step> e|a      self step of the current node
//   link <a> <b> <offset> e|a
LiftSpec parse_lift_spec(std::string_view text);
std::string emit_lift_spec(const LiftSpec& spec);

}  // namespace mixcage
