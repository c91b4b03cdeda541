#pragma once

#include "coex/enumeration.hpp"
#include "coex/rational.hpp"

#include <span>
#include <vector>

namespace coex {

/// Number of flag.order()-sets X containing the roots such that (host[X], roots)
/// is rooted-isomorphic to `flag`. Throws PreconditionError if the roots do not
/// induce the flag's type.
long long count_p(const RootedGraph& flag, const ThreeGraph& host, std::span<const Vertex> roots);

/// count_p for every flag of `basis` at once.
std::vector<long long> flag_profile(const FlagBasis& basis, const ThreeGraph& host, std::span<const Vertex> roots);

/// Number of (sigma, X1, X2) with sigma an injective tuple inducing `type`,
/// X1 u X2 = V(host), X1 n X2 = Im sigma, (host[X1], sigma) ~ f1 and
/// (host[X2], sigma) ~ f2. Requires host order = |f1| + |f2| - |type|.
long long joint_count(const RootedGraph& type, const RootedGraph& f1, const RootedGraph& f2, const ThreeGraph& host);

/// Same tuples as joint_count but with |X1 n X2| > |type|; X1 u X2 need not
/// cover the host.
long long overlap_count(const RootedGraph& type, const RootedGraph& f1, const RootedGraph& f2, const ThreeGraph& host);

struct AxiomCounts {
    long long a = 0;  // with {sigma1, sigma2, z} an edge
    long long b = 0;
};

/// Counts (sigma, z) with sigma an ordered pair, z outside sigma, and
/// (host - z, sigma) ~ axiom_flag. Requires host order = axiom_flag order + 1.
AxiomCounts axiom_counts(const RootedGraph& axiom_flag, const ThreeGraph& host);

/// Integer tables of one admissible host.
struct HostTables {
    /// joint[t](u, v) = joint_count(type t, flag u, flag v, host).
    std::vector<CountMatrix> joint;
    std::vector<long long> axiom_a;
    std::vector<long long> axiom_b;
};

struct FlagTables {
    std::vector<HostTables> hosts;
    /// Hosts on which Sum_sigma p_u p_v = J + overlap was checked (all of them
    /// when built with the check on).
    std::size_t identity_checked = 0;
};

/// Builds J, A, B for every admissible host. With `check_identity` the product
/// decomposition is re-derived from independently counted profiles and any
/// mismatch throws std::logic_error.
FlagTables build_tables(const CodegreeProblem& problem, int jobs = 1, bool check_identity = true);

/// The product identity for one host and type: returns the maximum absolute
/// discrepancy over all ordered flag pairs (0 when exact).
long long product_identity_defect(const FlagBasis& basis, const ThreeGraph& host);

}  // namespace coex
