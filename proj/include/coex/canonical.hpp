#pragma once

#include "coex/three_graph.hpp"

#include <vector>

namespace coex {

/// Largest order accepted by the exact canonical labelling.
inline constexpr int kMaxCanonicalOrder = 12;

/// Canonical labelling of `g` with vertices 1..fixed_roots held in place.
///
/// Returns `order` with order[i] = the vertex of g that receives label i+1.
/// The relabelled graph has the lexicographically least sorted edge sequence
/// over all permutations fixing 1..fixed_roots (equivalently the least encoding
/// string for n <= 9).
///
/// Search individualizes labels 1, 2, ... in turn. Once labels 1 and b are
/// placed, the bits of triples {1, b, c} for c > b only depend on which later
/// vertices lie in the joint neighbourhood of the two, so the free vertices
/// are kept as an ordered partition refined by those neighbourhoods and a
/// branch dies as soon as its (1, *)-prefix is worse than the incumbent's.
/// Vertices exchanged by a transposition automorphism are branched on once.
///
/// Throws CapabilityError if g.order() > kMaxCanonicalOrder.
std::vector<Vertex> canonical_labeling(const ThreeGraph& g, int fixed_roots = 0);

ThreeGraph canonical_form(const ThreeGraph& g);
RootedGraph rooted_canonical_form(const RootedGraph& f);

bool are_isomorphic(const ThreeGraph& lhs, const ThreeGraph& rhs);

/// Convenience: canonical form's graph string (a stable isomorphism-class key).
std::string canonical_string(const ThreeGraph& g);
std::string rooted_canonical_string(const RootedGraph& f);

}  // namespace coex
