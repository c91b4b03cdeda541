#pragma once

#include "coex/rational.hpp"
#include "coex/three_graph.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coex {

/// Largest host the exhaustive link search accepts (2^28 links).
inline constexpr int kMaxExtensionHost = 8;

/// A point of the simplex over the host's vertex pairs.
class PairWeighting {
public:
    PairWeighting() = default;
    /// weights[i] belongs to all_pairs(host.order())[i]. Throws ArgumentError
    /// on a size mismatch, a negative weight, or a total other than 1.
    PairWeighting(ThreeGraph host, std::vector<Rational> weights);
    /// Pairs not listed get weight 0.
    static PairWeighting from_pairs(ThreeGraph host, std::span<const std::pair<VertexPair, Rational>> weights);

    const ThreeGraph& host() const { return host_; }
    const std::vector<Rational>& weights() const { return weights_; }
    /// Throws ArgumentError for a pair outside the host.
    const Rational& weight(const VertexPair& pair) const;

private:
    ThreeGraph host_;
    std::vector<Rational> weights_;
};

/// Sum of the weights of the pairs in `link`. Throws ArgumentError on a
/// foreign pair.
Rational link_weight(const PairWeighting& w, std::span<const VertexPair> link);

/// The host plus vertex n+1 joined to every pair of `link`.
ThreeGraph extend(const ThreeGraph& host, std::span<const VertexPair> link);

struct ExtensionStats {
    long long examined = 0;         // link graphs visited
    long long above_threshold = 0;  // visited links heavier than the threshold
    long long pruned = 0;           // subtrees skipped (target found or weight bound)
};

struct ExtensionCheckResult {
    bool verified = false;
    std::optional<std::vector<VertexPair>> counterexample;
    Rational counterexample_weight;
    ExtensionStats stats;
};

/// Checks that every link L with w(L) > c (w(L) >= c when !strict) yields an
/// extension containing some target. Links are visited in lexicographic order
/// of their sorted pair lists, so a reported counterexample is the least one.
/// Throws CapabilityError for hosts above kMaxExtensionHost vertices.
ExtensionCheckResult check_extension_lemma(const PairWeighting& w, const Rational& threshold,
                                           std::span<const ThreeGraph> targets, bool strict = true, int jobs = 1);

/// One scripted case analysis: host, weighting, threshold and targets.
struct LemmaCase {
    std::string lemma;  // "sprime-a", "sprime-b", "k4doubled", "triangle"
    int k = 0;          // star size for the S'_k cases, else 0
    PairWeighting weighting;
    Rational threshold;
    std::vector<ThreeGraph> targets;
};

/// S'_k with P1 = (k-1)/(3k-1), P2 = 1/(6k-2), P3 = 2/((k-1)(3k-1)); c = k/(3k-1).
LemmaCase sprime_a_case(int k);
/// S'_k with P1 = (k-2)/(3(k-1)), P2 = 1/(6(k-1)), P3 = 2/(3k(k-1)); c = 1/3.
LemmaCase sprime_b_case(int k);
/// K4'' with 1/6 on ac1, ad1, bc1, bd1, c1c2, d1d2; c = 1/3; targets {F32}.
LemmaCase k4doubled_case();
/// A single edge with 1/3 on each of its pairs; c = 1/3; targets {K4-}.
LemmaCase triangle_case();

/// Weighting on S'_k from the three class weights (centre pair, centre-leaf,
/// leaf-leaf).
PairWeighting sprime_weighting(int k, const Rational& p1, const Rational& p2, const Rational& p3);

struct LemmaOutcome {
    LemmaCase spec;
    ExtensionCheckResult result;
};

struct LemmaSuiteReport {
    std::vector<LemmaOutcome> outcomes;
    bool all_verified() const;
    /// One line per lemma: the S'_k families collapse over k.
    std::vector<std::string> lines() const;
};

/// Runs the S'_k cases (both variants) for k = 3..k_max plus the K4'' and
/// triangle cases. Throws ArgumentError unless 3 <= k_max <= 6.
LemmaSuiteReport lemma_suite(int k_max, int jobs = 1);

/// "12,34" when every vertex is a single digit, "1-12,3-4" otherwise.
std::string pairs_to_string(std::span<const VertexPair> pairs);

}  // namespace coex
