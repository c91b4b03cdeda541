#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coex {

/// Vertices are numbered 1..n.
using Vertex = int;

/// Largest order a ThreeGraph can hold (one 64-bit link word per vertex pair).
inline constexpr int kMaxOrder = 64;

/// A 3-edge with a < b < c.
struct Triple {
    Vertex a = 0;
    Vertex b = 0;
    Vertex c = 0;

    /// Sorts the three vertices; does not validate distinctness.
    static constexpr Triple of(Vertex x, Vertex y, Vertex z) {
        if (x > y) std::swap(x, y);
        if (y > z) std::swap(y, z);
        if (x > y) std::swap(x, y);
        return {x, y, z};
    }

    friend constexpr auto operator<=>(const Triple&, const Triple&) = default;
};

/// Unordered vertex pair stored as (min, max).
using VertexPair = std::pair<Vertex, Vertex>;

inline constexpr VertexPair make_pair_of(Vertex x, Vertex y) {
    return x < y ? VertexPair{x, y} : VertexPair{y, x};
}

/// A 3-uniform hypergraph on {1..n}. Immutable once built.
class ThreeGraph {
public:
    ThreeGraph() = default;
    explicit ThreeGraph(int order);
    /// Each triple may be given in any vertex order; duplicates collapse.
    /// Throws ArgumentError on out-of-range or repeated vertices.
    ThreeGraph(int order, std::span<const Triple> edges);
    ThreeGraph(int order, std::initializer_list<Triple> edges);
    ThreeGraph(int order, std::vector<Triple> edges);

    int order() const { return order_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Triple>& edges() const { return edges_; }

    bool has_edge(Vertex x, Vertex y, Vertex z) const {
        return (link_mask(x, y) >> (z - 1)) & 1U;
    }
    /// Bit z-1 is set iff {x,y,z} is an edge. Requires x != y.
    std::uint64_t link_mask(Vertex x, Vertex y) const {
        return links_[static_cast<std::size_t>((x - 1) * order_ + (y - 1))];
    }
    int codegree(Vertex x, Vertex y) const;
    int degree(Vertex v) const;

    /// Induced subgraph on `vertices`, relabelled 1..k in the given order.
    ThreeGraph induced(std::span<const Vertex> vertices) const;
    /// Relabels vertex v as new_label[v-1]; `new_label` must be a permutation of 1..n.
    ThreeGraph relabeled(std::span<const Vertex> new_label) const;
    /// Copy with the extra edges added.
    ThreeGraph with_edges(std::span<const Triple> extra) const;
    /// Copy with one more (isolated) vertex.
    ThreeGraph with_vertex() const;

    /// Graph string grammar: "<n>:<e1><e2>..." for n <= 9, list form otherwise.
    std::string to_string() const;

    friend bool operator==(const ThreeGraph& lhs, const ThreeGraph& rhs) {
        return lhs.order_ == rhs.order_ && lhs.edges_ == rhs.edges_;
    }

private:
    void build_links();

    int order_ = 0;
    std::vector<Triple> edges_;
    std::vector<std::uint64_t> links_;
};

/// Total order used for every listing: order, then edge count, then edge sequence
/// (which is the encoding-string order for n <= 9).
std::strong_ordering listing_order(const ThreeGraph& lhs, const ThreeGraph& rhs);

/// A flag: a graph whose vertices 1..t are ordered roots.
struct RootedGraph {
    ThreeGraph graph;
    int roots = 0;

    int order() const { return graph.order(); }
    /// Induced graph on the roots (the flag's type, fully labelled).
    ThreeGraph type_graph() const;
    /// "<graph>(<t>)".
    std::string to_string() const;

    friend bool operator==(const RootedGraph&, const RootedGraph&) = default;
};

std::strong_ordering listing_order(const RootedGraph& lhs, const RootedGraph& rhs);

/// Parses the short form "5:123124" or the list form "g{n=12; edges=[1,2,3;4,5,6]}".
/// Throws ParseError.
ThreeGraph parse_graph(std::string_view text);
/// Parses a graph string followed by "(t)".
RootedGraph parse_rooted(std::string_view text);

/// All pairs {x,y} of 1..n, lexicographic.
std::vector<VertexPair> all_pairs(int order);

}  // namespace coex
