#include "coex/canonical.hpp"

#include "coex/errors.hpp"

#include <algorithm>

namespace coex {
namespace {

using Cells = std::vector<std::vector<Vertex>>;

class LabelSearch {
public:
    LabelSearch(const ThreeGraph& g, int roots) : g_(g), n_(g.order()), roots_(roots) {
        compute_twins();
    }

    std::vector<Vertex> run() {
        Cells cells;
        if (roots_ < n_) {
            std::vector<Vertex> free;
            for (Vertex v = roots_ + 1; v <= n_; ++v) free.push_back(v);
            cells.push_back(std::move(free));
        }
        std::vector<Vertex> prefix;
        std::vector<std::uint8_t> bits;
        descend(prefix, cells, bits);
        return best_order_;
    }

private:
    void compute_twins() {
        twin_of_.assign(static_cast<std::size_t>(n_ + 1), 0);
        for (Vertex u = 1; u <= n_; ++u) {
            twin_of_[u] = u;
            for (Vertex w = 1; w < u; ++w) {
                if (twin_of_[w] == w && transposition_is_automorphism(u, w)) {
                    twin_of_[u] = w;
                    break;
                }
            }
        }
    }

    bool transposition_is_automorphism(Vertex u, Vertex w) const {
        const std::uint64_t drop = ~((std::uint64_t{1} << (u - 1)) | (std::uint64_t{1} << (w - 1)));
        for (Vertex x = 1; x <= n_; ++x) {
            if (x == u || x == w) continue;
            if ((g_.link_mask(u, x) & drop) != (g_.link_mask(w, x) & drop)) return false;
        }
        return true;
    }

    // Appends the bits of block (1, b) and refines the cells in place.
    void refine(const std::vector<Vertex>& prefix, Cells& cells, std::vector<std::uint8_t>& bits) const {
        const int b = static_cast<int>(prefix.size());
        const std::uint64_t link = g_.link_mask(prefix.front(), prefix.back());
        for (Vertex c = b + 1; c <= roots_; ++c) bits.push_back(static_cast<std::uint8_t>((link >> (c - 1)) & 1U));
        Cells split;
        split.reserve(cells.size() * 2);
        for (auto& cell : cells) {
            std::vector<Vertex> in;
            std::vector<Vertex> out;
            for (Vertex v : cell) ((link >> (v - 1)) & 1U ? in : out).push_back(v);
            bits.insert(bits.end(), in.size(), 1);
            bits.insert(bits.end(), out.size(), 0);
            if (!in.empty()) split.push_back(std::move(in));
            if (!out.empty()) split.push_back(std::move(out));
        }
        cells = std::move(split);
    }

    void descend(std::vector<Vertex>& prefix, const Cells& cells, const std::vector<std::uint8_t>& bits) {
        const int placed = static_cast<int>(prefix.size());
        if (placed == n_) {
            leaf(prefix, bits);
            return;
        }
        std::vector<Vertex> candidates;
        if (placed < roots_) {
            candidates.push_back(placed + 1);
        } else {
            std::vector<Vertex> seen_twins;
            for (Vertex v : cells.front()) {
                const Vertex cls = twin_of_[v];
                if (std::find(seen_twins.begin(), seen_twins.end(), cls) != seen_twins.end()) continue;
                seen_twins.push_back(cls);
                candidates.push_back(v);
            }
        }
        for (Vertex v : candidates) {
            Cells next = cells;
            if (placed >= roots_) {
                auto& first = next.front();
                first.erase(std::find(first.begin(), first.end(), v));
                if (first.empty()) next.erase(next.begin());
            }
            prefix.push_back(v);
            std::vector<std::uint8_t> next_bits = bits;
            if (prefix.size() >= 2) refine(prefix, next, next_bits);
            if (!worse_than_best(next_bits)) descend(prefix, next, next_bits);
            prefix.pop_back();
        }
    }

    bool worse_than_best(const std::vector<std::uint8_t>& bits) const {
        if (best_order_.empty()) return false;
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] != best_bits_[i]) return bits[i] < best_bits_[i];
        }
        return false;
    }

    void leaf(const std::vector<Vertex>& order, const std::vector<std::uint8_t>& bits) {
        std::vector<Vertex> label(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) label[static_cast<std::size_t>(order[i] - 1)] = i + 1;
        std::vector<Triple> edges;
        edges.reserve(g_.edge_count());
        for (const Triple& t : g_.edges()) {
            edges.push_back(Triple::of(label[t.a - 1], label[t.b - 1], label[t.c - 1]));
        }
        std::sort(edges.begin(), edges.end());
        if (best_order_.empty() || edges < best_edges_) {
            best_order_ = order;
            best_edges_ = std::move(edges);
            best_bits_ = bits;
        }
    }

    const ThreeGraph& g_;
    int n_;
    int roots_;
    std::vector<Vertex> twin_of_;
    std::vector<Vertex> best_order_;
    std::vector<Triple> best_edges_;
    std::vector<std::uint8_t> best_bits_;
};

}  // namespace

std::vector<Vertex> canonical_labeling(const ThreeGraph& g, int fixed_roots) {
    if (g.order() > kMaxCanonicalOrder) {
        throw CapabilityError("canonical form supports order <= " + std::to_string(kMaxCanonicalOrder) +
                              ", got " + std::to_string(g.order()));
    }
    if (fixed_roots < 0 || fixed_roots > g.order()) throw ArgumentError("root count out of range");
    if (g.order() == 0) return {};
    return LabelSearch(g, fixed_roots).run();
}

namespace {

ThreeGraph apply_labeling(const ThreeGraph& g, const std::vector<Vertex>& order) {
    std::vector<Vertex> label(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) label[static_cast<std::size_t>(order[i] - 1)] = i + 1;
    return g.relabeled(label);
}

}  // namespace

ThreeGraph canonical_form(const ThreeGraph& g) { return apply_labeling(g, canonical_labeling(g, 0)); }

RootedGraph rooted_canonical_form(const RootedGraph& f) {
    return {apply_labeling(f.graph, canonical_labeling(f.graph, f.roots)), f.roots};
}

bool are_isomorphic(const ThreeGraph& lhs, const ThreeGraph& rhs) {
    if (lhs.order() != rhs.order() || lhs.edge_count() != rhs.edge_count()) return false;
    return canonical_form(lhs) == canonical_form(rhs);
}

std::string canonical_string(const ThreeGraph& g) { return canonical_form(g).to_string(); }

std::string rooted_canonical_string(const RootedGraph& f) { return rooted_canonical_form(f).to_string(); }

}  // namespace coex
