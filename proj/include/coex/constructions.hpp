#pragma once

#include "coex/three_graph.hpp"

#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace coex {

/// A = 1..a, B = a+1..a+b, C = a+b+1..a+b+c.
struct Tripartition {
    int a = 0;
    int b = 0;
    int c = 0;

    int order() const { return a + b + c; }
    /// 1, 2 or 3.
    int part_of(Vertex v) const;
    /// Vertices of part 1, 2 or 3 in increasing order.
    std::vector<Vertex> part(int index) const;
    /// A tripartite triple, given its vertices in any order, sorted as (A, B, C).
    bool is_tripartite(const Triple& t) const;
};

/// D_{A,B}: all {a1, a2, b}.
ThreeGraph build_D(int a, int b);
/// T_{A,B,C} = D_{A,B} u D_{B,C} u D_{C,A}.
ThreeGraph build_T(int a, int b, int c);

/// Pairs lying in at least two triples of `triples`, lexicographic.
std::vector<VertexPair> overused_pairs(std::span<const Triple> triples);
bool is_tripartite_matching(std::span<const Triple> triples);

enum class TripartiteMode {
    matching,          // F must have no overused pair; result is T u F
    overused_removal,  // T minus its edges through overused pairs, plus F
};

/// Throws ValidationError if some triple is not tripartite, or (matching mode)
/// if F has an overused pair.
ThreeGraph add_tripartite(const Tripartition& parts, std::span<const Triple> f, TripartiteMode mode);

/// A maximal tripartite matching built by scanning the shuffled tripartite
/// triples once.
std::vector<Triple> random_tripartite_matching(const Tripartition& parts, std::mt19937_64& rng);

/// Colour function on an m x m grid; colour(i, j) in 0..m-1.
class LatinColouring {
public:
    LatinColouring() = default;
    LatinColouring(int m, std::vector<int> colours);
    /// phi(i, j) = i + j mod m.
    static LatinColouring cyclic(int m);
    /// Rows separated by ';', entries by ','.
    static LatinColouring parse(std::string_view text);

    int size() const { return m_; }
    int operator()(int i, int j) const { return colours_[static_cast<std::size_t>(i * m_ + j)]; }
    /// No colour repeats in a row or column, all colours in range.
    bool is_proper() const;

private:
    int m_ = 0;
    std::vector<int> colours_;
};

/// CT(3m): T(m,m,m) plus {a_i, b_j, c_phi(i,j)}. Throws ArgumentError unless
/// n is a positive multiple of 3 and ValidationError on an improper colouring.
ThreeGraph build_CT(int n, const std::optional<LatinColouring>& colouring = std::nullopt);
/// CT(3m+2): CT(3m+3) with its last vertex removed. The colouring, if given,
/// has size m+1.
ThreeGraph build_CT_mod2(int n, const std::optional<LatinColouring>& colouring = std::nullopt);

/// CT_1(3m+1): T(m, m+2, m-1) plus tripartite edges covering every (a, c)
/// pair without overused pairs. Requires m >= 2.
ThreeGraph build_CT1(int m);
/// CT_2(3m+1): T(m+1, m+1, m-1) with S = k vertex-disjoint A x B pairs
/// (a_i, b_i), their T-edges replaced by all {a_i, b_i, c}, then completed so
/// that every (a, c) is covered and S stays the set of overused pairs.
ThreeGraph build_CT2(int m, int k);
/// CT_3(3m+1): T(m+1, m, m) with the T-edges through S removed and
/// tripartite edges added per the family's three rules.
ThreeGraph build_CT3(int m, std::span<const VertexPair> s);

/// Same constructions, exposing the tripartite edge set that was added.
struct TripartiteBuild {
    Tripartition parts;
    std::vector<VertexPair> s;
    std::vector<Triple> added;
    ThreeGraph graph;
};
TripartiteBuild build_CT1_detailed(int m);
TripartiteBuild build_CT2_detailed(int m, int k);
TripartiteBuild build_CT3_detailed(int m, std::span<const VertexPair> s);

/// The 3-cycle choice of S for CT_3: first vertices of V1, V2, V3 pairwise.
std::vector<VertexPair> ct3_cycle(int m);

/// Canonical N-vertex induced subgraphs of T(N,N,N), or of T(N,N,N) plus one
/// tripartite edge, in listing order.
std::vector<ThreeGraph> sharp_compatible_graphs(int order, bool phantom);

struct ConstructionSpec {
    /// D, T, CT0, CT2, CT1a, CT1b, CT1c
    std::string family;
    std::vector<int> sizes;  // D: (a, b); T: (a, b, c)
    int n = 0;               // CT0, CT2
    int m = 0;               // CT1a/b/c
    int k = 0;               // CT1b
    std::vector<VertexPair> s;  // CT1c
    std::optional<LatinColouring> colouring;
};

ThreeGraph build_construction(const ConstructionSpec& spec);

struct GraphStats {
    int order = 0;
    std::size_t edges = 0;
    std::optional<int> min_codegree;  // absent for order < 2
    bool f32_free = false;
};

GraphStats graph_stats(const ThreeGraph& g);
/// One JSON object: n, e, delta2, f32_free plus the spec's parameters.
std::string stats_json(const GraphStats& stats, const ConstructionSpec* spec = nullptr);

}  // namespace coex
