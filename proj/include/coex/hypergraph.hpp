#pragma once

#include "coex/three_graph.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace coex {

/// Non-induced containment: some injection V(h) -> V(g) maps every edge of h
/// onto an edge of g. Backtracks over h's vertices by descending degree.
bool contains(const ThreeGraph& g, const ThreeGraph& h);

/// An embedding witnessing contains(g, h): image[v-1] is the image of v.
std::optional<std::vector<Vertex>> find_embedding(const ThreeGraph& g, const ThreeGraph& h);

/// True iff g contains no member of `forbidden`.
bool is_free_of(const ThreeGraph& g, std::span<const ThreeGraph> forbidden);

/// Gamma(x, y) in ascending order. Throws ArgumentError if x == y.
std::vector<Vertex> joint_neighbourhood(const ThreeGraph& g, Vertex x, Vertex y);

/// delta_2(g). Throws ArgumentError for order < 2.
int min_codegree(const ThreeGraph& g);

/// F_{3,2}-freeness via the independent-neighbourhood criterion: no Gamma(x, y)
/// spans an edge.
bool is_f32_free(const ThreeGraph& g);

/// Replaces each vertex v by t copies (v-1)*t+1 .. v*t and each edge by all t^3
/// transversal triples. Throws ArgumentError if t < 1.
ThreeGraph blow_up(const ThreeGraph& f, int t);

namespace named {

ThreeGraph f32();
ThreeGraph k4();
ThreeGraph k4_minus();
/// Single edge on 3 vertices.
ThreeGraph k3();
ThreeGraph fano();
/// Star S_k: centre 1, leaves 2..k+1, edges {1, y_i, y_j}.
ThreeGraph star(int k);
/// S'_k: centres 1 and 2, leaves 3..k+2.
ThreeGraph star_prime(int k);
/// K_4'': a=1, b=2, c1=3, c2=4, d1=5, d2=6.
ThreeGraph k4_doubled();

/// Resolves "F32", "K4", "K4minus", "K3", "Fano", "S<k>", "Sprime<k>",
/// "K4doubled" (case-insensitive), or any graph string.
ThreeGraph lookup(std::string_view name);

}  // namespace named

/// Comma-separated list of names/graph strings; "" or "none" gives the empty list.
std::vector<ThreeGraph> parse_graph_list(std::string_view text);

}  // namespace coex
