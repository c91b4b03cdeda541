#pragma once

#include "coex/rational.hpp"
#include "coex/three_graph.hpp"

#include <span>
#include <string>
#include <vector>

namespace coex {

/// Largest order searched exhaustively (2^20 edge sets at n = 6).
inline constexpr int kMaxBruteForceOrder = 6;

struct CoexResult {
    int value = 0;
    /// Least maximizer in listing order, canonically labelled.
    ThreeGraph witness;
    long long free_checks = 0;
};

/// max delta_2 over all F-free graphs on n vertices. Gray-code walk over edge
/// sets with incremental codegrees, split on the top 8 edge bits. Throws
/// ArgumentError for n < 2 and CapabilityError for n > 6.
CoexResult brute_force_coex(int n, std::span<const ThreeGraph> forbidden, int jobs = 1);

/// floor(n/3) - 1 when n = 1 mod 3, floor(n/3) otherwise. Throws ArgumentError for n < 3.
int threshold_formula(int n);

/// (1/3 + 3 (1/3 - c)^3) C(n,3). Throws ArgumentError unless 0 <= c <= 1/3.
Rational mixed_bound(const Rational& c, int n);

struct Interpolation {
    int a = 0;
    int b = 0;
    int c = 0;
    ThreeGraph graph;
    std::size_t edges = 0;
    int min_codegree = 0;
};

/// T(|A|, |B|, |C|) with |C| = round(c n), |B| = round(n/3), |A| the rest
/// (halves round up). Throws ArgumentError unless 0 <= c <= 1/3 and n >= 3.
Interpolation interpolating_construction(const Rational& c, int n);

struct BoundRow {
    int n = 0;
    std::string family;  // winning construction, e.g. "CT0", "CT2", "CT1a"
    std::size_t edges = 0;
    int min_codegree = 0;
    bool f32_free = false;
    int formula = 0;
};

/// Best construction per n: CT(n) for n = 0 mod 3, CT(3m+2) for n = 2 mod 3,
/// and the best of CT_1, CT_2 (k = 0), CT_3 (S empty) for n = 1 mod 3.
/// Throws ArgumentError for lo < 5 or lo > hi.
std::vector<BoundRow> lower_bound_table(int lo, int hi);

/// One JSON object per line.
std::string bound_row_json(const BoundRow& row);

}  // namespace coex
