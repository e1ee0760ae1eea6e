#include "mixcage/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>

#include "mixcage/canonical.hpp"
#include "mixcage/girth.hpp"

namespace mixcage {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

// Bits strictly above v (all bits for v < 0).
constexpr Mask above(int v) {
    if (v < 0) return ~Mask{0};
    if (v >= 63) return 0;
    return ~Mask{0} << (v + 1);
}

constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

struct Problem {
    int n = 0;
    int r = 0;
    int z = 0;
    int g = 3;
    int in_cap = 0;
    bool add_edges = false;
    bool add_arcs = false;
    /// Untouched vertices are interchangeable: only the least of them is
    /// offered as a partner. Requires touched vertices to form a prefix.
    bool fresh_symmetry = false;
    /// Leaves must have girth exactly g (otherwise >= g, or acyclic).
    bool exact_girth = true;
    /// Arc-only completion with one out-arc per vertex: a vertex's head is a
    /// single choice, so heads in the same orbit of the automorphisms of the
    /// partial graph fixing the vertex lead to isomorphic subtrees.
    bool orbit_pruning = false;
    /// When a vertex starts adding its missing edges (or arcs), the
    /// automorphisms of the partial graph fixing it are recorded; once it is
    /// saturated, its new partner set is kept only if it is the numerically
    /// least set in its orbit. Below that point the search enumerates every
    /// completion of the extended graph, so one set per orbit suffices.
    bool set_orbit_pruning = false;
    std::uint64_t budget = 0;
};

// Depth-first completion of a partial mixed graph. Vertices are processed
// least-index first; a vertex adds its missing edges in ascending partner
// order, then its missing arcs in ascending head order, so every labelled
// completion is reached exactly once. A new element is admitted only if no
// cycle shorter than g passes through it, which is checked with bounded
// reachability balls: edge {v,u} needs u outside both the forward and the
// backward (g-2)-ball of v, arc v->u needs u outside the backward ball.
class Completer {
public:
    using Sink = std::function<bool(const MixedGraph&)>;

    Completer(const Problem& p, const MixedGraph& start) : p_(p), n_(p.n) {
        edge_.assign(n_, 0);
        out_.assign(n_, 0);
        in_.assign(n_, 0);
        deg_e_.assign(n_, 0);
        deg_o_.assign(n_, 0);
        deg_i_.assign(n_, 0);
        last_edge_.assign(n_, -1);
        last_arc_.assign(n_, -1);
        fwd_.assign(n_, 0);
        back_.assign(n_, 0);
        for (auto [u, v] : start.edges()) set_edge(u, v, true);
        for (auto [u, v] : start.arcs()) set_arc(u, v, true);
        touched_ = 0;
        while (touched_ < n_ && (deg_e_[touched_] + deg_o_[touched_] + deg_i_[touched_]) > 0) ++touched_;
        for (int v = touched_; v < n_; ++v)
            if (deg_e_[v] + deg_o_[v] + deg_i_[v] > 0) p_.fresh_symmetry = false;  // untouched must be a suffix
    }

    void force_root(int choice) { root_choice_ = choice; }
    void set_cancel(std::function<bool()> cancel) { cancel_ = std::move(cancel); }

    /// Admissible choices at the first branching, before any symmetry rule.
    std::vector<int> root_candidates() {
        int v = select();
        if (v < 0) return {};
        Mask cand = candidates(v);
        std::vector<int> out;
        for (Mask m = cand; m; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    /// Orbit representatives among root candidates (orbit pruning only).
    std::vector<int> root_orbit_representatives(const std::vector<int>& roots) {
        int v = select();
        if (v < 0 || !p_.orbit_pruning || wants_edge(v) || roots.size() < 2) return roots;
        Mask cand = 0;
        for (int u : roots) cand |= bit(u);
        Mask keep = orbit_representatives(v, cand);
        std::vector<int> out;
        for (int u : roots)
            if (keep & bit(u)) out.push_back(u);
        return out;
    }

    void run(const Sink& sink) {
        sink_ = &sink;
        node(true);
    }

    const SearchStats& stats() const { return stats_; }
    bool truncated() const { return truncated_; }
    bool stopped() const { return stopped_; }

private:
    void set_edge(int u, int v, bool on) {
        if (on) {
            edge_[u] |= bit(v);
            edge_[v] |= bit(u);
            ++deg_e_[u];
            ++deg_e_[v];
        } else {
            edge_[u] &= ~bit(v);
            edge_[v] &= ~bit(u);
            --deg_e_[u];
            --deg_e_[v];
        }
    }

    void set_arc(int u, int v, bool on) {
        if (on) {
            out_[u] |= bit(v);
            in_[v] |= bit(u);
            ++deg_o_[u];
            ++deg_i_[v];
        } else {
            out_[u] &= ~bit(v);
            in_[v] &= ~bit(u);
            --deg_o_[u];
            --deg_i_[v];
        }
    }

    Mask ball(int v, bool forward) const {
        Mask reach = bit(v), frontier = bit(v);
        for (int step = 0; step < p_.g - 2 && frontier; ++step) {
            Mask next = 0;
            for (Mask m = frontier; m; m &= m - 1) {
                int x = std::countr_zero(m);
                next |= edge_[x] | (forward ? out_[x] : in_[x]);
            }
            frontier = next & ~reach;
            reach |= frontier;
        }
        return reach;
    }

    Mask need_edge() const {
        Mask m = 0;
        if (p_.add_edges)
            for (int v = 0; v < n_; ++v)
                if (deg_e_[v] < p_.r) m |= bit(v);
        return m;
    }
    Mask need_out() const {
        Mask m = 0;
        if (p_.add_arcs)
            for (int v = 0; v < n_; ++v)
                if (deg_o_[v] < p_.z) m |= bit(v);
        return m;
    }
    Mask need_in() const {
        Mask m = 0;
        if (p_.add_arcs)
            for (int v = 0; v < n_; ++v)
                if (deg_i_[v] < p_.in_cap) m |= bit(v);
        return m;
    }

    int select() const {
        Mask m = need_edge() | need_out();
        return m ? std::countr_zero(m) : -1;
    }

    bool wants_edge(int v) const { return p_.add_edges && deg_e_[v] < p_.r; }

    // Candidates for v's next element, with the girth rule and ordering applied.
    Mask candidates(int v) {
        Mask cand;
        if (wants_edge(v)) {
            Mask base = need_edge() & ~edge_[v] & ~bit(v) & above(last_edge_[v]);
            Mask blocked = ball(v, true) | ball(v, false);
            stats_.girth_prunes += static_cast<std::uint64_t>(std::popcount(base & blocked));
            cand = base & ~blocked;
        } else {
            Mask base = need_in() & ~out_[v] & ~bit(v) & above(last_arc_[v]);
            Mask blocked = ball(v, false);
            stats_.girth_prunes += static_cast<std::uint64_t>(std::popcount(base & blocked));
            cand = base & ~blocked;
        }
        return cand;
    }

    // Cheap necessary conditions: even total edge deficit, and every vertex
    // still has enough admissible partners for its deficits.
    bool feasible() {
        if (p_.add_edges) {
            Mask ne = need_edge();
            int total = 0;
            for (Mask m = ne; m; m &= m - 1) {
                int w = std::countr_zero(m);
                total += p_.r - deg_e_[w];
            }
            if (total % 2 != 0) return false;
            for (Mask m = ne; m; m &= m - 1) {
                int w = std::countr_zero(m);
                fwd_[w] = ball(w, true);
                back_[w] = ball(w, false);
                Mask avail = ne & ~edge_[w] & ~bit(w) & ~fwd_[w] & ~back_[w];
                if (std::popcount(avail) < p_.r - deg_e_[w]) return false;
            }
        }
        if (p_.add_arcs) {
            Mask no = need_out(), ni = need_in();
            for (Mask m = no; m; m &= m - 1) {
                int w = std::countr_zero(m);
                Mask avail = ni & ~out_[w] & ~bit(w) & ~ball(w, false);
                if (std::popcount(avail) < p_.z - deg_o_[w]) return false;
            }
            if (p_.in_cap == p_.z) {
                for (Mask m = ni; m; m &= m - 1) {
                    int w = std::countr_zero(m);
                    Mask avail = no & ~in_[w] & ~bit(w) & ~ball(w, true);
                    if (std::popcount(avail) < p_.in_cap - deg_i_[w]) return false;
                }
            }
        }
        return true;
    }

    MixedGraph current(int extra = 0) const {
        std::vector<std::pair<Vertex, Vertex>> edges, arcs;
        for (int u = 0; u < n_; ++u) {
            for (Mask m = edge_[u] & above(u); m; m &= m - 1) edges.emplace_back(u, std::countr_zero(m));
            for (Mask m = out_[u]; m; m &= m - 1) arcs.emplace_back(u, std::countr_zero(m));
        }
        return MixedGraph(n_ + extra, std::move(edges), std::move(arcs));
    }

    // Keeps the least candidate of each orbit of Aut(current graph) fixing v.
    // v is pinned by a pendant arc from an extra vertex, which no original
    // vertex can imitate (they all carry edges). Clears symmetric_ once the
    // group found is trivial; deeper nodes then skip the computation.
    Mask orbit_representatives(int v, Mask cand) {
        auto base = current(1);
        auto arcs = base.arcs();
        arcs.emplace_back(n_, v);
        MixedGraph marked(n_ + 1, base.edges(), std::move(arcs));
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool nontrivial = false;
        for (const auto& p : automorphism_generators(marked))
            for (int x = 0; x < n_; ++x)
                if (p[x] != x) {
                    nontrivial = true;
                    int a = find(x), b = find(p[x]);
                    if (a != b) parent[std::max(a, b)] = std::min(a, b);
                }
        if (!nontrivial) {
            symmetric_ = false;
            return cand;
        }
        Mask keep = 0, seen_orbits = 0;
        for (Mask m = cand; m; m &= m - 1) {
            int u = std::countr_zero(m);
            int root = find(u);
            if (seen_orbits & bit(root)) continue;
            seen_orbits |= bit(root);
            keep |= bit(u);
        }
        return keep;
    }

    struct Run {
        Mask before = 0;  // v's partners of the run's kind when it opened
        std::vector<std::vector<Vertex>> gens;
        bool active = false;  // false when the group is trivial
    };

    void open_run(int v, bool is_edge) {
        Run run;
        run.before = is_edge ? edge_[v] : out_[v];
        std::vector<int> colors(n_, 0);
        colors[v] = 1;
        auto graph = current();
        run.gens = automorphism_generators(graph, colors);
        // isolated vertices are interchangeable; make sure the group says so
        int prev = -1;
        for (int x = 0; x < n_; ++x) {
            if (x == v || edge_[x] || out_[x] || in_[x]) continue;
            if (prev >= 0) {
                std::vector<Vertex> swap(n_);
                std::iota(swap.begin(), swap.end(), 0);
                std::swap(swap[prev], swap[x]);
                run.gens.push_back(std::move(swap));
            }
            prev = x;
        }
        run.active = !run.gens.empty();
        runs_.push_back(std::move(run));
    }

    // True if no set in the orbit of `set` is numerically smaller.
    bool orbit_minimal(const Run& run, Mask set) const {
        std::vector<Mask> orbit{set};
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (const auto& p : run.gens) {
                Mask image = 0;
                for (Mask m = orbit[i]; m; m &= m - 1) image |= bit(p[std::countr_zero(m)]);
                if (image < set) return false;
                if (std::find(orbit.begin(), orbit.end(), image) == orbit.end()) orbit.push_back(image);
            }
        return true;
    }

    void leaf() {
        for (int v = 0; v < n_; ++v)
            if (deg_i_[v] > p_.in_cap && p_.add_arcs) return;
        MixedGraph graph = current();
        auto gi = girth(graph);
        bool ok = p_.exact_girth ? (gi && *gi == p_.g) : (!gi || *gi >= p_.g);
        if (!ok) return;
        ++stats_.leaves;
        if (!(*sink_)(graph)) {
            stopped_ = true;
            abort_ = true;
        }
    }

    void node(bool root) {
        if (abort_) return;
        if (++stats_.nodes > p_.budget) {
            truncated_ = true;
            abort_ = true;
            return;
        }
        if (cancel_ && (stats_.nodes & 0x3ff) == 0 && cancel_()) {
            stopped_ = true;
            abort_ = true;
            return;
        }
        int v = select();
        if (v < 0) {
            leaf();
            return;
        }
        if (!feasible()) {
            ++stats_.degree_prunes;
            return;
        }
        const int saved_touched = touched_;
        if (p_.fresh_symmetry && v >= touched_) touched_ = v + 1;
        Mask cand = candidates(v);
        if (p_.fresh_symmetry) {
            Mask allowed = low_bits(touched_) | (touched_ < n_ ? bit(touched_) : 0);
            stats_.symmetry_prunes += static_cast<std::uint64_t>(std::popcount(cand & ~allowed));
            cand &= allowed;
        }
        if (root && root_choice_ >= 0) cand &= bit(root_choice_);
        const bool is_edge = wants_edge(v);
        const bool opens_run = p_.set_orbit_pruning && (is_edge ? last_edge_[v] : last_arc_[v]) < 0;
        if (opens_run) open_run(v, is_edge);
        const std::size_t run = runs_.size() - 1;  // v's open run, if any
        const bool closes_run = p_.set_orbit_pruning && !runs_.empty() && runs_.back().active &&
                                (is_edge ? deg_e_[v] + 1 == p_.r : deg_o_[v] + 1 == p_.z);
        const bool saved_symmetric = symmetric_;
        if (!is_edge && p_.orbit_pruning && symmetric_ && std::popcount(cand) > 1) {
            Mask reps = orbit_representatives(v, cand);
            stats_.symmetry_prunes += static_cast<std::uint64_t>(std::popcount(cand & ~reps));
            cand = reps;
        }
        for (Mask m = cand; m; m &= m - 1) {
            int u = std::countr_zero(m);
            const int saved_inner = touched_;
            if (p_.fresh_symmetry && u >= touched_) touched_ = u + 1;
            const Mask chosen = (is_edge ? edge_[v] : out_[v]) | bit(u);
            if (closes_run && !orbit_minimal(runs_[run], chosen & ~runs_[run].before)) {
                ++stats_.symmetry_prunes;
                touched_ = saved_inner;
                continue;
            }
            if (is_edge) {
                int prev = last_edge_[v];
                set_edge(v, u, true);
                last_edge_[v] = u;
                node(false);
                last_edge_[v] = prev;
                set_edge(v, u, false);
            } else {
                int prev = last_arc_[v];
                set_arc(v, u, true);
                last_arc_[v] = u;
                node(false);
                last_arc_[v] = prev;
                set_arc(v, u, false);
            }
            touched_ = saved_inner;
            if (abort_) break;
        }
        if (opens_run) runs_.pop_back();
        symmetric_ = saved_symmetric;
        touched_ = saved_touched;
    }

    Problem p_;
    int n_;
    std::vector<Mask> edge_, out_, in_;
    std::vector<int> deg_e_, deg_o_, deg_i_;
    std::vector<int> last_edge_, last_arc_;
    std::vector<Mask> fwd_, back_;
    std::vector<Run> runs_;
    int touched_ = 0;
    bool symmetric_ = true;
    int root_choice_ = -1;
    std::function<bool()> cancel_;
    const Sink* sink_ = nullptr;
    SearchStats stats_;
    bool truncated_ = false;
    bool stopped_ = false;
    bool abort_ = false;
};

// One independent unit of work.
struct Shard {
    std::size_t case_index = 0;
    Problem problem;
    MixedGraph start;
    int root_choice = -1;
};

struct ShardOutput {
    SearchStats stats;
    bool truncated = false;
    bool found_any = false;
    std::vector<FoundGraph> graphs;  // distinct within the shard, discovery order
};

struct CaseInput {
    std::string label;
    bool skipped = false;
    std::uint64_t root_symmetry_prunes = 0;
};

bool emit_ok(const MixedGraph& g, const SearchConfig& cfg) {
    if (g.order() != cfg.n || !check_regular(g, cfg.r, cfg.z)) return false;
    auto gi = girth(g);
    return gi && *gi == cfg.g;
}

SearchResult execute(const SearchConfig& cfg, const std::vector<CaseInput>& cases, std::vector<Shard> shards,
                     std::vector<std::string> diagnostics) {
    const std::size_t count = shards.size();
    std::vector<ShardOutput> outputs(count);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> winner{std::numeric_limits<std::size_t>::max()};

    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            if (cfg.stop_at_first && i > winner.load()) continue;
            const Shard& sh = shards[i];
            Completer c(sh.problem, sh.start);
            if (sh.root_choice >= 0) c.force_root(sh.root_choice);
            if (cfg.stop_at_first) c.set_cancel([&winner, i] { return i > winner.load(); });
            ShardOutput& out = outputs[i];
            std::map<std::vector<std::uint32_t>, bool> seen;
            const std::string& label = cases[sh.case_index].label;
            Completer::Sink sink = [&](const MixedGraph& g) {
                if (!emit_ok(g, cfg)) return true;
                auto form = canonical_form(g);
                if (seen.emplace(form.fingerprint, true).second)
                    out.graphs.push_back({g, std::move(form), label});
                out.found_any = true;
                if (cfg.stop_at_first) {
                    std::size_t w = winner.load();
                    while (i < w && !winner.compare_exchange_weak(w, i)) {
                    }
                    return false;
                }
                return true;
            };
            c.run(sink);
            out.stats = c.stats();
            out.truncated = c.truncated();
        }
    };
    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::size_t limit = count;
    SearchResult res;
    res.diagnostics = std::move(diagnostics);
    if (cfg.stop_at_first && winner.load() < count) {
        limit = winner.load() + 1;
        res.stopped_early = true;
    }
    res.cases.resize(cases.size());
    for (std::size_t c = 0; c < cases.size(); ++c) {
        res.cases[c].label = cases[c].label;
        res.cases[c].skipped = cases[c].skipped;
        res.cases[c].stats.symmetry_prunes = cases[c].root_symmetry_prunes;
    }
    std::map<std::vector<std::uint32_t>, FoundGraph> merged;
    std::vector<std::map<std::vector<std::uint32_t>, bool>> per_case(cases.size());
    for (std::size_t i = 0; i < limit; ++i) {
        auto& out = outputs[i];
        auto& cs = res.cases[shards[i].case_index];
        cs.stats += out.stats;
        cs.truncated = cs.truncated || out.truncated;
        res.truncated = res.truncated || out.truncated;
        for (auto& fg : out.graphs) {
            per_case[shards[i].case_index].emplace(fg.form.fingerprint, true);
            if (cfg.stop_at_first && !merged.empty()) break;
            merged.emplace(fg.form.fingerprint, std::move(fg));
            if (cfg.stop_at_first) break;
        }
    }
    for (std::size_t c = 0; c < cases.size(); ++c) {
        res.cases[c].found = per_case[c].size();
        res.totals += res.cases[c].stats;
    }
    for (auto& [fp, fg] : merged) res.graphs.push_back(std::move(fg));
    res.exhaustive = !res.truncated && !res.stopped_early;
    return res;
}

Problem base_problem(const SearchConfig& cfg) {
    Problem p;
    p.n = cfg.n;
    p.r = cfg.r;
    p.z = cfg.z;
    p.g = cfg.g;
    p.in_cap = cfg.in_degree_cap < 0 ? cfg.z : cfg.in_degree_cap;
    p.budget = cfg.node_budget;
    return p;
}

// Orbit minima, under automorphisms of the cycle scaffold fixing vertex 0,
// of the possible partners of vertex 0: every other vertex of 0's own cycle,
// and the first vertex of the first cycle of each length among the rest.
Mask root_orbit_minima(const CyclePartition& parts) {
    Mask m = 0;
    int start = 0;
    std::vector<int> seen_lengths;
    for (std::size_t b = 0; b < parts.size(); ++b) {
        if (b == 0) {
            for (int v = 1; v < parts[0]; ++v) m |= bit(v);
        } else if (std::find(seen_lengths.begin(), seen_lengths.end(), parts[b]) == seen_lengths.end()) {
            seen_lengths.push_back(parts[b]);
            m |= bit(start);
        }
        start += parts[b];
    }
    return m;
}

void add_case_shards(std::vector<Shard>& shards, std::size_t case_index, const Problem& p, const MixedGraph& start,
                     std::optional<Mask> whitelist, CaseInput& info) {
    Completer probe(p, start);
    auto roots = probe.root_candidates();
    if (roots.empty()) {
        shards.push_back({case_index, p, start, -1});
        return;
    }
    auto reps = probe.root_orbit_representatives(roots);
    info.root_symmetry_prunes += roots.size() - reps.size();
    const std::size_t first = shards.size();
    for (int u : reps) {
        if (whitelist && !(*whitelist & bit(u))) {
            ++info.root_symmetry_prunes;
            continue;
        }
        shards.push_back({case_index, p, start, u});
    }
    // The budget belongs to the case; split it evenly so the outcome does not
    // depend on which worker runs which shard.
    const std::uint64_t k = shards.size() - first;
    for (std::size_t i = first; i < shards.size(); ++i) shards[i].problem.budget = std::max<std::uint64_t>(1, (p.budget + k - 1) / k);
}

}  // namespace

SearchStats& SearchStats::operator+=(const SearchStats& o) {
    nodes += o.nodes;
    leaves += o.leaves;
    girth_prunes += o.girth_prunes;
    degree_prunes += o.degree_prunes;
    symmetry_prunes += o.symmetry_prunes;
    return *this;
}

std::vector<CyclePartition> enumerate_partitions(int n, int g, PartitionFilter filter,
                                                 const std::vector<CyclePartition>& explicit_list) {
    if (g < 1) throw std::invalid_argument("enumerate_partitions: g must be positive");
    if (filter == PartitionFilter::Explicit) {
        std::vector<CyclePartition> out;
        for (auto p : explicit_list) {
            std::sort(p.rbegin(), p.rend());
            if (p.empty() || std::accumulate(p.begin(), p.end(), 0) != n || p.back() < g)
                throw std::invalid_argument("partition " + partition_label(p) + " is not a partition of " +
                                            std::to_string(n) + " into parts >= " + std::to_string(g));
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
        }
        std::sort(out.rbegin(), out.rend());
        return out;
    }
    std::vector<CyclePartition> out;
    CyclePartition current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= g; --part) {
            if (remaining - part != 0 && remaining - part < g) continue;
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    if (n >= g) rec(n, n);
    if (filter == PartitionFilter::EqualParts)
        std::erase_if(out, [](const CyclePartition& p) { return p.front() != p.back(); });
    return out;
}

std::string partition_label(const CyclePartition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s;
}

void SearchConfig::validate() const {
    auto fail = [](const std::string& m) { throw std::invalid_argument("search config: " + m); };
    if (n < 1 || n > kMaxSearchOrder) fail("order must be in 1.." + std::to_string(kMaxSearchOrder));
    if (r < 0 || z < 0) fail("degrees must be non-negative");
    if (g < 3) fail("girth must be >= 3");
    if (node_budget == 0) fail("budget must be positive");
    if (jobs < 1) fail("jobs must be >= 1");
    if ((mode == SearchMode::DirectedFirst || mode == SearchMode::UndirectedFirst) && z != 1)
        fail("directed-first and undirected-first modes require z = 1");
    if (in_degree_cap >= 0 && in_degree_cap < z) fail("in-degree cap below z");
    if (filter == PartitionFilter::Explicit && partitions.empty()) fail("explicit filter without partitions");
}

MixedGraph cycle_scaffold(const CyclePartition& parts) {
    std::vector<std::pair<Vertex, Vertex>> arcs;
    int start = 0;
    for (int len : parts) {
        for (int i = 0; i < len; ++i) arcs.emplace_back(start + i, start + (i + 1) % len);
        start += len;
    }
    return MixedGraph(start, {}, std::move(arcs));
}

SearchResult search_directed_first(const SearchConfig& cfg) {
    cfg.validate();
    auto parts = enumerate_partitions(cfg.n, cfg.g, cfg.filter, cfg.partitions);
    Problem p = base_problem(cfg);
    p.add_edges = true;
    std::vector<CaseInput> cases;
    std::vector<Shard> shards;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        cases.push_back({partition_label(parts[i])});
        auto start = cycle_scaffold(parts[i]);
        std::optional<Mask> wl;
        if (cfg.symmetry_pruning) wl = root_orbit_minima(parts[i]);
        add_case_shards(shards, i, p, start, wl, cases.back());
    }
    return execute(cfg, cases, std::move(shards), {});
}

SearchResult search_undirected_first(const SearchConfig& cfg, const std::vector<MixedGraph>& scaffolds) {
    cfg.validate();
    Problem p = base_problem(cfg);
    p.add_arcs = true;
    p.in_cap = 1;
    p.fresh_symmetry = cfg.symmetry_pruning;  // only bites on isolated scaffold vertices
    p.orbit_pruning = cfg.symmetry_pruning && cfg.r > 0;
    std::vector<CaseInput> cases;
    std::vector<Shard> shards;
    std::vector<std::string> diagnostics;
    for (std::size_t i = 0; i < scaffolds.size(); ++i) {
        const auto& s = scaffolds[i];
        std::string label = "scaffold " + std::to_string(i);
        std::string problem;
        if (s.order() != cfg.n) problem = "order " + std::to_string(s.order()) + " != " + std::to_string(cfg.n);
        else if (!s.arcs().empty()) problem = "scaffold contains arcs";
        else if (!check_regular(s, cfg.r, 0)) problem = "not " + std::to_string(cfg.r) + "-regular";
        else if (auto gi = girth(s); gi && *gi < cfg.g) problem = "girth " + std::to_string(*gi) + " < " + std::to_string(cfg.g);
        cases.push_back({label});
        if (!problem.empty()) {
            cases.back().skipped = true;
            diagnostics.push_back(label + " skipped: " + problem);
            continue;
        }
        add_case_shards(shards, i, p, s, std::nullopt, cases.back());
    }
    return execute(cfg, cases, std::move(shards), std::move(diagnostics));
}

SearchResult search_general(const SearchConfig& cfg) {
    cfg.validate();
    Problem p = base_problem(cfg);
    p.add_edges = cfg.r > 0;
    p.add_arcs = cfg.z > 0;
    p.fresh_symmetry = cfg.symmetry_pruning;
    p.set_orbit_pruning = cfg.symmetry_pruning && cfg.orbit_pruning;
    std::vector<CaseInput> cases{{"all"}};
    std::vector<Shard> shards;
    shards.push_back({0, p, MixedGraph(cfg.n), -1});
    return execute(cfg, cases, std::move(shards), {});
}

std::vector<MixedGraph> regular_scaffolds(int n, int r, int g, std::uint64_t node_budget) {
    if (n < 1 || n > kMaxSearchOrder) throw std::invalid_argument("regular_scaffolds: order out of range");
    Problem p;
    p.n = n;
    p.r = r;
    p.g = g;
    p.add_edges = r > 0;
    p.fresh_symmetry = true;
    p.set_orbit_pruning = true;
    p.exact_girth = false;
    p.budget = node_budget;
    Completer c(p, MixedGraph(n));
    std::map<std::vector<std::uint32_t>, MixedGraph> found;
    Completer::Sink sink = [&](const MixedGraph& gr) {
        if (check_regular(gr, r, 0)) found.emplace(canonical_form(gr).fingerprint, gr);
        return true;
    };
    c.run(sink);
    if (c.truncated()) throw std::runtime_error("regular_scaffolds: node budget exhausted");
    std::vector<MixedGraph> out;
    for (auto& [fp, gr] : found) out.push_back(std::move(gr));
    return out;
}

}  // namespace mixcage
