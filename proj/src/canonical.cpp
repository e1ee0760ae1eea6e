#include "mixcage/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace mixcage {

namespace {

constexpr std::size_t kMaxStoredAutomorphisms = 256;

class Canonizer {
public:
    explicit Canonizer(const MixedGraph& g, std::vector<int> initial = {})
        : g_(g), n_(g.order()), initial_(std::move(initial)) {}

    CanonicalForm run(CanonicalStats* stats) {
        std::vector<int> color = initial_.empty() ? std::vector<int>(n_, 0) : initial_;
        std::vector<Vertex> prefix;
        search(color, prefix);
        if (stats) {
            stats->leaves = leaves_;
            stats->automorphisms = automorphisms_found_;
        }
        return {best_code_, best_labeling_};
    }

    const std::vector<std::vector<Vertex>>& automorphisms() const { return autos_; }

private:
    // Splits cells by (own colour, multisets of edge/out/in neighbour colours)
    // until stable. New colours are ranks of the signatures, so cell order is
    // preserved and the result depends only on the isomorphism class.
    void refine(std::vector<int>& color) const {
        std::vector<std::vector<int>> sig(n_);
        std::vector<int> order(n_);
        int cells = count_cells(color);
        while (cells < n_) {
            for (int v = 0; v < n_; ++v) {
                auto& s = sig[v];
                s.clear();
                s.push_back(color[v]);
                append_sorted(s, g_.edge_neighbors(v), color);
                s.push_back(-1);
                append_sorted(s, g_.out_neighbors(v), color);
                s.push_back(-2);
                append_sorted(s, g_.in_neighbors(v), color);
            }
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return sig[a] < sig[b]; });
            int rank = 0;
            std::vector<int> next(n_);
            for (int i = 0; i < n_; ++i) {
                if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
                next[order[i]] = rank;
            }
            int new_cells = rank + 1;
            color.swap(next);
            if (new_cells == cells) break;
            cells = new_cells;
        }
    }

    static void append_sorted(std::vector<int>& s, const std::vector<Vertex>& nbrs,
                              const std::vector<int>& color) {
        std::size_t start = s.size();
        for (Vertex w : nbrs) s.push_back(color[w]);
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(start), s.end());
    }

    int count_cells(const std::vector<int>& color) const {
        if (n_ == 0) return 0;
        return *std::max_element(color.begin(), color.end()) + 1;
    }

    std::vector<std::uint32_t> encode(const std::vector<int>& pos) const {
        std::vector<std::uint32_t> code;
        code.reserve(3 + g_.size());
        code.push_back(static_cast<std::uint32_t>(n_));
        code.push_back(static_cast<std::uint32_t>(g_.edges().size()));
        code.push_back(static_cast<std::uint32_t>(g_.arcs().size()));
        const auto n = static_cast<std::uint32_t>(n_);
        std::size_t mark = code.size();
        for (auto [u, v] : g_.edges()) {
            auto a = static_cast<std::uint32_t>(pos[u]);
            auto b = static_cast<std::uint32_t>(pos[v]);
            if (a > b) std::swap(a, b);
            code.push_back(a * n + b);
        }
        std::sort(code.begin() + static_cast<std::ptrdiff_t>(mark), code.end());
        mark = code.size();
        for (auto [u, v] : g_.arcs())
            code.push_back(static_cast<std::uint32_t>(pos[u]) * n + static_cast<std::uint32_t>(pos[v]));
        std::sort(code.begin() + static_cast<std::ptrdiff_t>(mark), code.end());
        return code;
    }

    void leaf(const std::vector<int>& pos) {
        ++leaves_;
        auto code = encode(pos);
        if (first_code_.empty()) {
            first_code_ = code;
            first_labeling_ = pos;
            best_code_ = std::move(code);
            best_labeling_ = pos;
            return;
        }
        if (code == first_code_) record_automorphism(pos, first_labeling_);
        if (code == best_code_) {
            record_automorphism(pos, best_labeling_);
        } else if (code < best_code_) {
            best_code_ = std::move(code);
            best_labeling_ = pos;
        }
    }

    void record_automorphism(const std::vector<int>& pos, const std::vector<int>& ref) {
        std::vector<Vertex> inv(n_);
        for (int v = 0; v < n_; ++v) inv[ref[v]] = v;
        std::vector<Vertex> perm(n_);
        bool identity = true;
        for (int v = 0; v < n_; ++v) {
            perm[v] = inv[pos[v]];
            identity = identity && perm[v] == v;
        }
        if (identity) return;
        ++automorphisms_found_;
        if (autos_.size() < kMaxStoredAutomorphisms) autos_.push_back(std::move(perm));
    }

    static int find(std::vector<int>& parent, int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    void search(std::vector<int> color, std::vector<Vertex>& prefix) {
        refine(color);
        int cells = count_cells(color);
        if (cells == n_) {
            leaf(color);
            return;
        }
        // Target: the first (lowest-colour) non-singleton cell.
        std::vector<int> cell_size(cells, 0);
        for (int c : color) ++cell_size[c];
        int target = 0;
        while (cell_size[target] == 1) ++target;
        std::vector<Vertex> members;
        for (int v = 0; v < n_; ++v)
            if (color[v] == target) members.push_back(v);

        std::vector<Vertex> tried;
        for (Vertex w : members) {
            if (!tried.empty() && equivalent_to_tried(w, tried, prefix)) continue;
            tried.push_back(w);
            std::vector<int> child(color);
            for (int v = 0; v < n_; ++v) {
                if (child[v] > target) ++child[v];
                else if (child[v] == target && v != w) child[v] = target + 1;
            }
            prefix.push_back(w);
            search(std::move(child), prefix);
            prefix.pop_back();
        }
    }

    // w lies in the orbit of an already-explored sibling under the stored
    // automorphisms that fix the current prefix pointwise.
    bool equivalent_to_tried(Vertex w, const std::vector<Vertex>& tried,
                             const std::vector<Vertex>& prefix) const {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        bool any = false;
        for (const auto& a : autos_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return a[p] == p; });
            if (!fixes) continue;
            any = true;
            for (int v = 0; v < n_; ++v) {
                int x = find(parent, v), y = find(parent, a[v]);
                if (x != y) parent[x] = y;
            }
        }
        if (!any) return false;
        int rw = find(parent, w);
        return std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return find(parent, t) == rw; });
    }

    const MixedGraph& g_;
    int n_;
    std::vector<int> initial_;
    std::vector<std::uint32_t> first_code_, best_code_;
    std::vector<int> first_labeling_, best_labeling_;
    std::vector<std::vector<Vertex>> autos_;
    std::size_t leaves_ = 0;
    std::size_t automorphisms_found_ = 0;
};

}  // namespace

std::string CanonicalForm::hex() const {
    std::string out;
    out.reserve(fingerprint.size() * 8);
    char buf[9];
    for (auto w : fingerprint) {
        std::snprintf(buf, sizeof buf, "%08x", w);
        out += buf;
    }
    return out;
}

CanonicalForm canonical_form(const MixedGraph& g, CanonicalStats* stats) {
    if (g.order() == 0) return {{0, 0, 0}, {}};
    Canonizer c(g);
    return c.run(stats);
}

std::vector<std::vector<Vertex>> automorphism_generators(const MixedGraph& g) {
    if (g.order() == 0) return {};
    Canonizer c(g);
    c.run(nullptr);
    return c.automorphisms();
}

std::vector<std::vector<Vertex>> automorphism_generators(const MixedGraph& g, const std::vector<int>& colors) {
    if (g.order() == 0) return {};
    if (static_cast<int>(colors.size()) != g.order())
        throw std::invalid_argument("automorphism_generators: one colour per vertex required");
    // ranks of the colour values, so refinement sees colours 0..k-1
    std::vector<int> values(colors);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<int> ranked(colors.size());
    for (std::size_t v = 0; v < colors.size(); ++v)
        ranked[v] = static_cast<int>(std::lower_bound(values.begin(), values.end(), colors[v]) - values.begin());
    Canonizer c(g, std::move(ranked));
    c.run(nullptr);
    return c.automorphisms();
}

bool isomorphic(const MixedGraph& a, const MixedGraph& b) {
    if (a.order() != b.order() || a.edges().size() != b.edges().size() ||
        a.arcs().size() != b.arcs().size())
        return false;
    return canonical_form(a).fingerprint == canonical_form(b).fingerprint;
}

}  // namespace mixcage
