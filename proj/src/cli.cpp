#include "mixcage/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mixcage/bounds.hpp"
#include "mixcage/canonical.hpp"
#include "mixcage/constructions.hpp"
#include "mixcage/girth.hpp"
#include "mixcage/hamiltonian.hpp"
#include "mixcage/io.hpp"
#include "mixcage/search.hpp"

namespace mixcage::cli {

namespace {

namespace fs = std::filesystem;

// Failure carrying an exit code; message goes to stderr.
struct Failure {
    int code;
    std::string message;
};

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Failure{kParseError, "cannot open " + path};
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw Failure{kParseError, "cannot write " + path};
}

enum class Format { Mgf, Graph6, Dot };

Format format_of(const std::string& path) {
    auto ext = fs::path(path).extension().string();
    if (ext == ".g6" || ext == ".graph6") return Format::Graph6;
    if (ext == ".dot" || ext == ".gv") return Format::Dot;
    return Format::Mgf;
}

MgfDocument load_graph(const std::string& path, std::istream& in) {
    auto text = read_input(path, in);
    try {
        if (format_of(path) == Format::Graph6) {
            auto graphs = parse_graph6_lines(text);
            if (graphs.size() != 1)
                throw Failure{kParseError, path + ": expected exactly one graph6 line, found " + std::to_string(graphs.size())};
            return {graphs.front(), {}};
        }
        if (format_of(path) == Format::Dot) throw Failure{kParseError, path + ": DOT is an output-only format"};
        return parse_mgf_document(text);
    } catch (const ParseError& e) {
        throw Failure{kParseError, (path == "-" ? std::string("<stdin>") : path) + ": " + to_string(e.code()) + ": " + e.what()};
    }
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Failure{kUsage, std::string("bad ") + what + ": '" + s + "'"};
        }
    }
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

std::string opt_order(const std::optional<Order>& v) { return v ? std::to_string(*v) : "-"; }

// --- construct -------------------------------------------------------------

int cmd_construct(const std::vector<std::string>& words, const std::string& output, bool list, bool dot,
                  std::ostream& out) {
    if (list) {
        for (const auto& e : catalog()) out << e.usage << "\t" << e.summary << "\n";
        return kOk;
    }
    if (words.empty()) throw Failure{kUsage, "construct: missing construction id (see --list)"};
    ConstructionId id{words.front(), {}};
    for (std::size_t i = 1; i < words.size(); ++i) id.params.push_back(parse_int_list(words[i], "parameter").at(0));
    MixedGraph g;
    Expected ex;
    try {
        g = construct(id);
        ex = expected_parameters(id);
    } catch (const std::invalid_argument& e) {
        throw Failure{kUsage, e.what()};
    }
    std::map<std::string, std::string> meta{
        {"name", id.to_string()},
        {"expect", std::to_string(ex.r) + "," + std::to_string(ex.z) + "," + std::to_string(ex.g) + "," +
                       std::to_string(ex.order)}};
    write_output(output, dot ? emit_dot(g) : emit_mgf(g, meta), out);
    return kOk;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(const std::string& path, const std::string& expect, std::istream& in, std::ostream& out,
               std::ostream& err) {
    auto doc = load_graph(path, in);
    const auto& g = doc.graph;
    auto degrees = regular_degrees(g);
    auto gi = girth(g);
    out << "order=" << g.order() << "\n";
    out << "edges=" << g.edges().size() << "\n";
    out << "arcs=" << g.arcs().size() << "\n";
    out << "regular=" << yes_no(degrees.has_value()) << "\n";
    out << "r=" << (degrees ? std::to_string(degrees->first) : "none") << "\n";
    out << "z=" << (degrees ? std::to_string(degrees->second) : "none") << "\n";
    out << "totally_regular=" << yes_no(degrees && check_totally_regular(g)) << "\n";
    out << "girth=" << opt_int(gi) << "\n";
    std::string spec = expect;
    if (spec.empty()) {
        if (auto it = doc.metadata.find("expect"); it != doc.metadata.end()) spec = it->second;
    }
    if (spec.empty()) return kOk;
    auto want = parse_int_list(spec, "--expect");
    if (want.size() != 4) throw Failure{kUsage, "--expect takes r,z,g,n"};
    bool match = degrees && degrees->first == want[0] && degrees->second == want[1] && gi && *gi == want[2] &&
                 g.order() == want[3];
    out << "expect=" << spec << "\n";
    out << "match=" << yes_no(match) << "\n";
    if (!match) {
        err << "verify: graph does not match (r,z,g,n) = (" << spec << ")\n";
        return kMismatch;
    }
    return kOk;
}

// --- bound -----------------------------------------------------------------

int cmd_bound(const std::vector<std::string>& words, std::ostream& out) {
    if (words.empty()) throw Failure{kUsage, "bound: expected ahm|moore|lower|report|table"};
    const auto& kind = words.front();
    std::vector<int> a;
    for (std::size_t i = 1; i < words.size(); ++i) a.push_back(parse_int_list(words[i], "argument").at(0));
    auto need = [&](std::size_t k, const char* usage) {
        if (a.size() != k) throw Failure{kUsage, std::string("usage: bound ") + usage};
    };
    try {
        if (kind == "ahm") {
            need(2, "ahm <r> <g>");
            out << ahm_bound(a[0], a[1]) << "\n";
        } else if (kind == "moore") {
            need(2, "moore <r> <depth>");
            out << moore_bound(a[0], a[1]) << "\n";
        } else if (kind == "lower") {
            need(3, "lower <r> <z> <g>");
            out << lower_bound(a[0], a[1], a[2]) << "\n";
        } else if (kind == "report") {
            need(3, "report <r> <z> <g>");
            auto rep = bound_report(a[0], a[1], a[2]);
            out << "ahm_lower=" << rep.ahm_lower << "\n";
            out << "parity_lower=" << rep.parity_lower << "\n";
            out << "bcw_digraph_order=" << rep.bcw_digraph_order << "\n";
            if (rep.table_entry) {
                out << "table_lower=" << opt_order(rep.table_entry->lower) << "\n";
                out << "table_exact=" << opt_order(rep.table_entry->exact) << "\n";
                out << "table_upper=" << opt_order(rep.table_entry->upper) << "\n";
                out << "construction=" << rep.table_entry->construction << "\n";
            }
        } else if (kind == "table") {
            need(0, "table");
            // "built" marks rows whose construction this build produces and verifies.
            out << "r\tz\tg\tlower\texact\tupper\tconstruction\tbuilt\n";
            for (const auto& t : bounds_table()) {
                bool built = false;
                try {
                    auto ex = expected_parameters({t.construction, {}});
                    auto g = construct({t.construction, {}});
                    auto gi = girth(g);
                    built = check_regular(g, t.r, t.z) && gi && *gi == t.g && ex.order == g.order();
                } catch (const std::exception&) {
                    built = false;
                }
                out << t.r << "\t" << t.z << "\t" << t.g << "\t" << opt_order(t.lower) << "\t" << opt_order(t.exact)
                    << "\t" << opt_order(t.upper) << "\t" << t.construction << "\t" << (built ? "built" : "cited")
                    << "\n";
            }
        } else {
            throw Failure{kUsage, "bound: unknown kind '" + kind + "'"};
        }
    } catch (const std::invalid_argument& e) {
        throw Failure{kUsage, e.what()};
    } catch (const std::overflow_error& e) {
        throw Failure{kUsage, e.what()};
    }
    return kOk;
}

// --- search ----------------------------------------------------------------

struct SearchArgs {
    std::vector<int> rzgn;
    bool equal_parts = false;
    std::vector<std::string> partitions;
    std::string mode = "directed";
    int jobs = 1;
    std::uint64_t budget = 100'000'000;
    bool first = false;
    bool no_symmetry = false;
    bool no_orbits = false;
    int in_cap = -1;
    std::string scaffolds;
    std::string outdir;
};

int cmd_search(const SearchArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
    SearchConfig cfg;
    cfg.r = a.rzgn[0];
    cfg.z = a.rzgn[1];
    cfg.g = a.rzgn[2];
    cfg.n = a.rzgn[3];
    cfg.jobs = a.jobs;
    cfg.node_budget = a.budget;
    cfg.stop_at_first = a.first;
    cfg.symmetry_pruning = !a.no_symmetry;
    cfg.orbit_pruning = !a.no_orbits;
    cfg.in_degree_cap = a.in_cap;
    if (a.equal_parts) cfg.filter = PartitionFilter::EqualParts;
    if (!a.partitions.empty()) {
        cfg.filter = PartitionFilter::Explicit;
        for (const auto& p : a.partitions) cfg.partitions.push_back(parse_int_list(p, "--partition"));
    }
    if (a.mode == "directed") cfg.mode = SearchMode::DirectedFirst;
    else if (a.mode == "undirected") cfg.mode = SearchMode::UndirectedFirst;
    else if (a.mode == "general") cfg.mode = SearchMode::General;
    else throw Failure{kUsage, "--mode must be directed, undirected or general"};

    SearchResult res;
    try {
        cfg.validate();
        if (cfg.mode == SearchMode::DirectedFirst) {
            res = search_directed_first(cfg);
        } else if (cfg.mode == SearchMode::General) {
            res = search_general(cfg);
        } else {
            std::vector<MixedGraph> scaffolds;
            if (!a.scaffolds.empty()) {
                try {
                    scaffolds = parse_graph6_lines(read_input(a.scaffolds, in));
                } catch (const ParseError& e) {
                    throw Failure{kParseError, a.scaffolds + ": " + to_string(e.code()) + ": " + e.what()};
                }
            } else {
                scaffolds = regular_scaffolds(cfg.n, cfg.r, cfg.g, cfg.node_budget);
            }
            res = search_undirected_first(cfg, scaffolds);
        }
    } catch (const std::invalid_argument& e) {
        throw Failure{kUsage, e.what()};
    } catch (const std::runtime_error& e) {
        throw Failure{kTruncated, e.what()};
    }
    for (const auto& d : res.diagnostics) err << "search: " << d << "\n";

    if (!a.outdir.empty()) {
        std::error_code ec;
        fs::create_directories(a.outdir, ec);
        if (ec) throw Failure{kParseError, "cannot create " + a.outdir + ": " + ec.message()};
        for (std::size_t i = 0; i < res.graphs.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof name, "graph_%04zu.mgf", i);
            std::string expect = std::to_string(cfg.r) + "," + std::to_string(cfg.z) + "," + std::to_string(cfg.g) +
                                 "," + std::to_string(cfg.n);
            write_output((fs::path(a.outdir) / name).string(),
                         emit_mgf(res.graphs[i].graph, {{"expect", expect}, {"origin", res.graphs[i].origin}}), out);
        }
    }

    for (const auto& c : res.cases) {
        out << "case=" << c.label << " found=" << c.found << " nodes=" << c.stats.nodes
            << " leaves=" << c.stats.leaves << " girth_prunes=" << c.stats.girth_prunes
            << " degree_prunes=" << c.stats.degree_prunes << " symmetry_prunes=" << c.stats.symmetry_prunes
            << " truncated=" << yes_no(c.truncated) << (c.skipped ? " skipped=yes" : "") << "\n";
    }
    for (std::size_t i = 0; i < res.graphs.size(); ++i)
        out << "graph." << i << "=" << res.graphs[i].form.hex() << " origin=" << res.graphs[i].origin << "\n";
    out << "cases=" << res.cases.size() << "\n";
    out << "graphs=" << res.graphs.size() << "\n";
    out << "nodes=" << res.totals.nodes << "\n";
    out << "leaves=" << res.totals.leaves << "\n";
    out << "girth_prunes=" << res.totals.girth_prunes << "\n";
    out << "degree_prunes=" << res.totals.degree_prunes << "\n";
    out << "symmetry_prunes=" << res.totals.symmetry_prunes << "\n";
    out << "stopped_early=" << yes_no(res.stopped_early) << "\n";
    out << "exhaustive=" << yes_no(res.exhaustive) << "\n";
    return res.truncated ? kTruncated : kOk;
}

// --- orient / lift / convert ------------------------------------------------

int cmd_orient(const std::string& path, std::uint64_t budget, const std::string& output, std::istream& in,
               std::ostream& out, std::ostream& err) {
    auto doc = load_graph(path, in);
    auto hs = find_hamiltonian_cycle(doc.graph, budget);
    if (!hs.cycle) {
        err << "orient: no Hamiltonian cycle found (" << hs.nodes << " nodes"
            << (hs.exhausted_budget ? ", budget exhausted" : ", search complete") << ")\n";
        return kNoCycle;
    }
    auto oriented = orient_cycle(doc.graph, *hs.cycle);
    std::map<std::string, std::string> meta;
    if (auto it = doc.metadata.find("name"); it != doc.metadata.end()) meta["name"] = it->second + " oriented";
    write_output(output, emit_mgf(oriented, meta), out);
    return kOk;
}

int cmd_lift(const std::string& path, const std::string& builtin, const std::string& output, std::istream& in,
             std::ostream& out) {
    LiftSpec spec;
    try {
        if (!builtin.empty()) spec = builtin_lift_spec(builtin);
        else if (!path.empty()) spec = parse_lift_spec(read_input(path, in));
        else throw Failure{kUsage, "lift: give a spec file or --builtin <id>"};
    } catch (const ParseError& e) {
        throw Failure{kParseError, path + ": " + to_string(e.code()) + ": " + e.what()};
    } catch (const std::invalid_argument& e) {
        throw Failure{kUsage, e.what()};
    }
    MixedGraph g;
    try {
        g = lift(spec);
    } catch (const std::invalid_argument& e) {
        throw Failure{kParseError, std::string("lift: ") + e.what()};
    }
    write_output(output, emit_mgf(g), out);
    return kOk;
}

int cmd_convert(const std::string& from, const std::string& to, std::istream& in, std::ostream& out) {
    auto doc = load_graph(from, in);
    std::string text;
    switch (format_of(to)) {
        case Format::Mgf: text = emit_mgf(doc.graph, doc.metadata); break;
        case Format::Dot: text = emit_dot(doc.graph); break;
        case Format::Graph6:
            if (!doc.graph.arcs().empty()) throw Failure{kParseError, "convert: graph6 cannot hold arcs"};
            text = encode_graph6(doc.graph) + "\n";
            break;
    }
    write_output(to, text, out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mixed-graph cage toolkit: constructions, bounds, verification and exhaustive search", "mixcage"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::vector<std::string> words;
    std::string output, input, expect, second;

    auto* construct_cmd = app.add_subcommand("construct", "Build a catalog graph and print it as MGF");
    bool list = false, dot = false;
    construct_cmd->add_option("id", words, "construction name followed by its integer parameters");
    construct_cmd->add_option("-o,--output", output, "output file (default stdout)");
    construct_cmd->add_flag("--list", list, "list catalog entries");
    construct_cmd->add_flag("--dot", dot, "emit DOT instead of MGF");

    auto* verify_cmd = app.add_subcommand("verify", "Report regularity and girth of a graph");
    input = "-";
    verify_cmd->add_option("file", input, "MGF or graph6 (.g6) file, '-' for stdin");
    verify_cmd->add_option("--expect", expect, "r,z,g,n to check (exit 3 on mismatch)");

    auto* bound_cmd = app.add_subcommand("bound", "Lower bounds: ahm <r> <g> | moore <r> <d> | lower <r> <z> <g> | report <r> <z> <g> | table");
    bound_cmd->add_option("args", words)->required();

    SearchArgs sa;
    auto* search_cmd = app.add_subcommand("search", "Exhaustive search for (r,z,g)-graphs of order n");
    search_cmd->add_option("params", sa.rzgn, "r z g n")->required()->expected(4);
    search_cmd->add_flag("--equal-parts", sa.equal_parts, "only directed-cycle partitions with equal parts");
    search_cmd->add_option("--partition", sa.partitions, "explicit partition p1,p2,... (repeatable)");
    search_cmd->add_option("--mode", sa.mode, "directed | undirected | general")->capture_default_str();
    search_cmd->add_option("--jobs", sa.jobs, "worker threads")->capture_default_str();
    search_cmd->add_option("--budget", sa.budget, "node budget per case (partition or scaffold)")->capture_default_str();
    search_cmd->add_flag("--first", sa.first, "stop at the first graph");
    search_cmd->add_flag("--no-symmetry", sa.no_symmetry, "disable symmetry pruning");
    search_cmd->add_flag("--no-orbits", sa.no_orbits, "general mode: keep only the fresh-vertex symmetry rule");
    search_cmd->add_option("--in-cap", sa.in_cap, "in-degree cap for --mode general (default z)");
    search_cmd->add_option("--scaffolds", sa.scaffolds, "graph6 file of undirected scaffolds (undirected mode)");
    search_cmd->add_option("-o,--output-dir", sa.outdir, "write found graphs as MGF files here");

    auto* orient_cmd = app.add_subcommand("orient", "Orient a Hamiltonian cycle of the undirected part");
    std::uint64_t ham_budget = 10'000'000;
    orient_cmd->add_option("file", input, "MGF or graph6 file, '-' for stdin")->required();
    orient_cmd->add_option("--budget", ham_budget, "search node budget")->capture_default_str();
    orient_cmd->add_option("-o,--output", output, "output file (default stdout)");

    auto* lift_cmd = app.add_subcommand("lift", "Build a cyclic lift from a LiftSpec file");
    std::string builtin;
    std::string spec_path;
    lift_cmd->add_option("specfile", spec_path, "LiftSpec text, '-' for stdin");
    lift_cmd->add_option("--builtin", builtin, "use a built-in spec instead");
    lift_cmd->add_option("-o,--output", output, "output file (default stdout)");

    auto* convert_cmd = app.add_subcommand("convert", "Convert between mgf, graph6 (.g6) and dot by extension");
    convert_cmd->add_option("in", input, "input file")->required();
    convert_cmd->add_option("out", second, "output file, '-' for stdout as MGF")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*construct_cmd) return cmd_construct(words, output, list, dot, out);
        if (*verify_cmd) return cmd_verify(input, expect, in, out, err);
        if (*bound_cmd) return cmd_bound(words, out);
        if (*search_cmd) return cmd_search(sa, in, out, err);
        if (*orient_cmd) return cmd_orient(input, ham_budget, output, in, out, err);
        if (*lift_cmd) return cmd_lift(spec_path, builtin, output, in, out);
        if (*convert_cmd) return cmd_convert(input, second, in, out);
    } catch (const Failure& f) {
        err << "mixcage: " << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        err << "mixcage: " << e.what() << "\n";
        return kParseError;
    }
    return kUsage;
}

}  // namespace mixcage::cli
