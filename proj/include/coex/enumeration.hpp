#pragma once

#include "coex/three_graph.hpp"

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace coex {

/// Largest N for enumerate_admissible.
inline constexpr int kMaxAdmissibleOrder = 7;
/// Largest flag order for enumerate_flags.
inline constexpr int kMaxFlagOrder = 6;

/// All F-free graphs on N vertices up to isomorphism, as canonical forms in
/// listing order.
class AdmissibleBasis {
public:
    AdmissibleBasis() = default;
    AdmissibleBasis(int order, std::vector<ThreeGraph> forbidden, std::vector<ThreeGraph> graphs);

    int order() const { return order_; }
    const std::vector<ThreeGraph>& forbidden() const { return forbidden_; }
    const std::vector<ThreeGraph>& graphs() const { return graphs_; }
    std::size_t size() const { return graphs_.size(); }
    const ThreeGraph& operator[](std::size_t i) const { return graphs_[i]; }

    /// Index of the class of `g` (any labelling), if present.
    std::optional<std::size_t> find(const ThreeGraph& g) const;

private:
    int order_ = 0;
    std::vector<ThreeGraph> forbidden_;
    std::vector<ThreeGraph> graphs_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// All flags of a given order on a fully labelled type, as rooted canonical
/// forms in listing order.
class FlagBasis {
public:
    FlagBasis() = default;
    FlagBasis(RootedGraph type, int flag_order, std::vector<RootedGraph> flags);

    const RootedGraph& type() const { return type_; }
    int type_order() const { return type_.roots; }
    int flag_order() const { return flag_order_; }
    const std::vector<RootedGraph>& flags() const { return flags_; }
    std::size_t size() const { return flags_.size(); }
    const RootedGraph& operator[](std::size_t i) const { return flags_[i]; }

    /// Index of the rooted class of `f`, if present. `f` must have the same
    /// root count; its roots need not be canonical.
    std::optional<std::size_t> find(const RootedGraph& f) const;
    /// Same, for a key already produced by rooted_canonical_string.
    std::optional<std::size_t> find_key(const std::string& key) const;

private:
    RootedGraph type_;
    int flag_order_ = 0;
    std::vector<RootedGraph> flags_;
    std::unordered_map<std::string, std::size_t> index_;
};

AdmissibleBasis enumerate_admissible(std::span<const ThreeGraph> forbidden, int order, int jobs = 1);

/// Types of each listed size, ordered by size and then by edge list.
std::vector<RootedGraph> enumerate_types(std::span<const ThreeGraph> forbidden, std::span<const int> sizes);

FlagBasis enumerate_flags(const RootedGraph& type, int flag_order, std::span<const ThreeGraph> forbidden);

/// Order used for type listings: vertex count, then edge list.
bool type_less(const RootedGraph& lhs, const RootedGraph& rhs);

/// The bases of a codegree flag-algebra problem at parameter N: the admissible
/// graphs on N vertices, the types of order k = N mod 2, ..., N-2 with their
/// flags of order (N+k)/2, and the axiom flags (two roots, no edge between
/// them as a type, order N-1).
struct CodegreeProblem {
    int order = 0;
    std::vector<ThreeGraph> forbidden;
    AdmissibleBasis admissible;
    std::vector<RootedGraph> types;
    std::vector<FlagBasis> flag_bases;
    FlagBasis axiom_basis;

    static CodegreeProblem build(std::vector<ThreeGraph> forbidden, int order, int jobs = 1);
    /// Index of the type equal (as a labelled graph) to `type`, if any.
    std::optional<std::size_t> find_type(const ThreeGraph& type) const;
};

/// The 2-vertex type.
RootedGraph pair_type();

}  // namespace coex
