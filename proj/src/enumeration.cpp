#include "coex/enumeration.hpp"

#include "coex/canonical.hpp"
#include "coex/errors.hpp"
#include "coex/hypergraph.hpp"
#include "coex/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace coex {

AdmissibleBasis::AdmissibleBasis(int order, std::vector<ThreeGraph> forbidden, std::vector<ThreeGraph> graphs)
    : order_(order), forbidden_(std::move(forbidden)), graphs_(std::move(graphs)) {
    for (std::size_t i = 0; i < graphs_.size(); ++i) index_.emplace(canonical_string(graphs_[i]), i);
}

std::optional<std::size_t> AdmissibleBasis::find(const ThreeGraph& g) const {
    if (g.order() != order_) return std::nullopt;
    const auto it = index_.find(canonical_string(g));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

FlagBasis::FlagBasis(RootedGraph type, int flag_order, std::vector<RootedGraph> flags)
    : type_(std::move(type)), flag_order_(flag_order), flags_(std::move(flags)) {
    for (std::size_t i = 0; i < flags_.size(); ++i) index_.emplace(rooted_canonical_string(flags_[i]), i);
}

std::optional<std::size_t> FlagBasis::find(const RootedGraph& f) const {
    if (f.roots != type_order() || f.order() != flag_order_) return std::nullopt;
    return find_key(rooted_canonical_string(f));
}

std::optional<std::size_t> FlagBasis::find_key(const std::string& key) const {
    const auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

namespace {

std::vector<ThreeGraph> extend_by_one_vertex(const ThreeGraph& parent, std::span<const ThreeGraph> forbidden) {
    const int k = parent.order();
    const auto pairs = all_pairs(k);
    const std::size_t m = pairs.size();
    std::map<std::string, ThreeGraph> out;
    std::vector<Triple> edges;
    for (std::uint64_t link = 0; link < (std::uint64_t{1} << m); ++link) {
        edges = parent.edges();
        for (std::size_t p = 0; p < m; ++p) {
            if ((link >> p) & 1U) edges.push_back({pairs[p].first, pairs[p].second, k + 1});
        }
        ThreeGraph child(k + 1, edges);
        if (!is_free_of(child, forbidden)) continue;
        ThreeGraph canon = canonical_form(child);
        auto key = canon.to_string();
        out.emplace(std::move(key), std::move(canon));
    }
    std::vector<ThreeGraph> result;
    result.reserve(out.size());
    for (auto& [key, g] : out) result.push_back(std::move(g));
    return result;
}

bool listing_less(const ThreeGraph& a, const ThreeGraph& b) { return listing_order(a, b) < 0; }

// Calls visit(tuple) for every injective k-tuple of 1..n.
template <class Visit>
void for_each_tuple(int n, int k, Visit&& visit) {
    std::vector<Vertex> tuple(static_cast<std::size_t>(k));
    std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == k) {
            visit(std::span<const Vertex>(tuple));
            return;
        }
        for (Vertex v = 1; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            tuple[pos] = v;
            self(self, pos + 1);
            used[v] = false;
        }
    };
    rec(rec, 0);
}

}  // namespace

AdmissibleBasis enumerate_admissible(std::span<const ThreeGraph> forbidden, int order, int jobs) {
    if (order < 0) throw ArgumentError("order must be non-negative");
    if (order > kMaxAdmissibleOrder) {
        throw CapabilityError("admissible enumeration supports N <= " + std::to_string(kMaxAdmissibleOrder) +
                              ", got " + std::to_string(order));
    }
    std::vector<ThreeGraph> level{ThreeGraph(0)};
    for (int k = 0; k < order; ++k) {
        std::vector<std::vector<ThreeGraph>> children(level.size());
        parallel_for(level.size(), jobs, [&](std::size_t i) { children[i] = extend_by_one_vertex(level[i], forbidden); });
        std::map<std::string, ThreeGraph> merged;
        for (auto& batch : children) {
            for (auto& g : batch) {
                auto key = g.to_string();
                merged.emplace(std::move(key), std::move(g));
            }
        }
        level.clear();
        for (auto& [key, g] : merged) level.push_back(std::move(g));
    }
    std::sort(level.begin(), level.end(), listing_less);
    return AdmissibleBasis(order, {forbidden.begin(), forbidden.end()}, std::move(level));
}

bool type_less(const RootedGraph& lhs, const RootedGraph& rhs) {
    if (lhs.order() != rhs.order()) return lhs.order() < rhs.order();
    return lhs.graph.edges() < rhs.graph.edges();
}

std::vector<RootedGraph> enumerate_types(std::span<const ThreeGraph> forbidden, std::span<const int> sizes) {
    std::vector<RootedGraph> out;
    std::vector<int> distinct(sizes.begin(), sizes.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int size : distinct) {
        if (size > 5) throw CapabilityError("types are enumerated for sizes <= 5");
        const AdmissibleBasis basis = enumerate_admissible(forbidden, size);
        for (const ThreeGraph& g : basis.graphs()) out.push_back({g, size});
    }
    std::sort(out.begin(), out.end(), type_less);
    return out;
}

FlagBasis enumerate_flags(const RootedGraph& type, int flag_order, std::span<const ThreeGraph> forbidden) {
    if (type.roots != type.order()) throw ArgumentError("a type must have every vertex as a root");
    if (flag_order < type.order()) throw ArgumentError("flag order below type order");
    if (flag_order > kMaxFlagOrder) {
        throw CapabilityError("flag enumeration supports order <= " + std::to_string(kMaxFlagOrder));
    }
    const int k = type.order();
    const AdmissibleBasis hosts = enumerate_admissible(forbidden, flag_order);
    std::map<std::string, RootedGraph> found;
    std::vector<Vertex> label(static_cast<std::size_t>(flag_order));
    for (const ThreeGraph& g : hosts.graphs()) {
        for_each_tuple(flag_order, k, [&](std::span<const Vertex> sigma) {
            if (g.induced(sigma) != type.graph) return;
            std::vector<bool> is_root(static_cast<std::size_t>(flag_order + 1), false);
            for (int i = 0; i < k; ++i) {
                label[static_cast<std::size_t>(sigma[i] - 1)] = i + 1;
                is_root[sigma[i]] = true;
            }
            int next = k + 1;
            for (Vertex v = 1; v <= flag_order; ++v) {
                if (!is_root[v]) label[static_cast<std::size_t>(v - 1)] = next++;
            }
            RootedGraph flag = rooted_canonical_form({g.relabeled(label), k});
            auto key = flag.to_string();
            found.emplace(std::move(key), std::move(flag));
        });
    }
    std::vector<RootedGraph> flags;
    flags.reserve(found.size());
    for (auto& [key, f] : found) flags.push_back(std::move(f));
    std::sort(flags.begin(), flags.end(), [](const RootedGraph& a, const RootedGraph& b) { return listing_order(a, b) < 0; });
    return FlagBasis(type, flag_order, std::move(flags));
}

RootedGraph pair_type() { return {ThreeGraph(2), 2}; }

CodegreeProblem CodegreeProblem::build(std::vector<ThreeGraph> forbidden, int order, int jobs) {
    if (order < 3) throw ArgumentError("codegree problems need N >= 3");
    if (order > kMaxFlagOrder) {
        throw CapabilityError("codegree problems are supported for N <= " + std::to_string(kMaxFlagOrder));
    }
    CodegreeProblem p;
    p.order = order;
    p.forbidden = std::move(forbidden);
    p.admissible = enumerate_admissible(p.forbidden, order, jobs);
    std::vector<int> sizes;
    for (int k = order % 2; k <= order - 2; k += 2) sizes.push_back(k);
    p.types = enumerate_types(p.forbidden, sizes);
    p.flag_bases.resize(p.types.size());
    parallel_for(p.types.size(), jobs, [&](std::size_t t) {
        p.flag_bases[t] = enumerate_flags(p.types[t], (order + p.types[t].order()) / 2, p.forbidden);
    });
    p.axiom_basis = enumerate_flags(pair_type(), order - 1, p.forbidden);
    return p;
}

std::optional<std::size_t> CodegreeProblem::find_type(const ThreeGraph& type) const {
    for (std::size_t t = 0; t < types.size(); ++t) {
        if (types[t].graph == type) return t;
    }
    return std::nullopt;
}

}  // namespace coex
