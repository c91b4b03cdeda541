#include "coex/search.hpp"

#include "coex/canonical.hpp"
#include "coex/constructions.hpp"
#include "coex/errors.hpp"
#include "coex/hypergraph.hpp"
#include "coex/parallel.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <optional>

namespace coex {

namespace {

struct Layout {
    int n = 0;
    std::vector<Triple> triples;
    // pair indices touched by each triple
    std::vector<std::array<int, 3>> touches;
    int pair_count = 0;
};

Layout layout(int n) {
    Layout out;
    out.n = n;
    std::vector<std::vector<int>> index(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1)));
    for (int x = 1; x <= n; ++x) {
        for (int y = x + 1; y <= n; ++y) index[x][y] = out.pair_count++;
    }
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            for (int c = b + 1; c <= n; ++c) {
                out.triples.push_back({a, b, c});
                out.touches.push_back({index[a][b], index[a][c], index[b][c]});
            }
        }
    }
    return out;
}

class FreeTest {
public:
    explicit FreeTest(std::span<const ThreeGraph> forbidden) {
        const ThreeGraph f32 = named::f32();
        for (const ThreeGraph& f : forbidden) {
            if (are_isomorphic(f, f32)) {
                f32_ = true;
            } else {
                others_.push_back(f);
            }
        }
    }

    bool free(const ThreeGraph& g) const {
        if (f32_ && !is_f32_free(g)) return false;
        return is_free_of(g, others_);
    }

private:
    bool f32_ = false;
    std::vector<ThreeGraph> others_;
};

ThreeGraph graph_of(const Layout& l, std::uint32_t mask) {
    std::vector<Triple> edges;
    for (std::size_t t = 0; t < l.triples.size(); ++t) {
        if ((mask >> t) & 1U) edges.push_back(l.triples[t]);
    }
    return ThreeGraph(l.n, edges);
}

// Walks every edge set whose top bits equal `high`, in Gray-code order over the
// low bits, calling visit(mask, delta2) for each.
template <class Visit>
void walk_partition(const Layout& l, int low_bits, std::uint32_t high, Visit&& visit) {
    std::vector<int> codeg(static_cast<std::size_t>(l.pair_count), 0);
    std::uint32_t mask = high << low_bits;
    for (std::size_t t = 0; t < l.triples.size(); ++t) {
        if ((mask >> t) & 1U) {
            for (int p : l.touches[t]) ++codeg[p];
        }
    }
    auto delta = [&] { return l.pair_count == 0 ? 0 : *std::min_element(codeg.begin(), codeg.end()); };
    visit(mask, delta());
    const std::uint32_t steps = 1U << low_bits;
    for (std::uint32_t i = 1; i < steps; ++i) {
        const int t = std::countr_zero(i);
        mask ^= 1U << t;
        const int step = ((mask >> t) & 1U) ? 1 : -1;
        for (int p : l.touches[static_cast<std::size_t>(t)]) codeg[p] += step;
        visit(mask, delta());
    }
}

}  // namespace

CoexResult brute_force_coex(int n, std::span<const ThreeGraph> forbidden, int jobs) {
    if (n < 2) throw ArgumentError("brute-force coex needs n >= 2");
    if (n > kMaxBruteForceOrder) {
        throw CapabilityError("exhaustive coex search supports n <= " + std::to_string(kMaxBruteForceOrder));
    }
    const Layout l = layout(n);
    const FreeTest test(forbidden);
    const int total_bits = static_cast<int>(l.triples.size());
    const int high_bits = std::min(8, total_bits);
    const int low_bits = total_bits - high_bits;
    const std::size_t partitions = std::size_t{1} << high_bits;

    // Pass 1: the maximum, testing freeness only for graphs that would beat
    // the partition's running best.
    std::vector<int> best(partitions, -1);
    std::vector<long long> checks(partitions, 0);
    parallel_for(partitions, jobs, [&](std::size_t p) {
        walk_partition(l, low_bits, static_cast<std::uint32_t>(p), [&](std::uint32_t mask, int d) {
            if (d <= best[p]) return;
            ++checks[p];
            if (test.free(graph_of(l, mask))) best[p] = d;
        });
    });
    const int value = *std::max_element(best.begin(), best.end());
    if (value < 0) throw PreconditionError("no graph is free of the forbidden family (the empty graph is not)");

    // Pass 2: the least canonical maximizer in each partition.
    std::vector<std::optional<ThreeGraph>> witness(partitions);
    parallel_for(partitions, jobs, [&](std::size_t p) {
        if (best[p] != value) return;
        std::map<std::string, ThreeGraph> seen;
        walk_partition(l, low_bits, static_cast<std::uint32_t>(p), [&](std::uint32_t mask, int d) {
            if (d != value) return;
            ++checks[p];
            const ThreeGraph g = graph_of(l, mask);
            if (!test.free(g)) return;
            ThreeGraph c = canonical_form(g);
            if (!witness[p] || listing_order(c, *witness[p]) < 0) witness[p] = std::move(c);
        });
    });
    CoexResult out;
    out.value = value;
    for (std::size_t p = 0; p < partitions; ++p) {
        out.free_checks += checks[p];
        if (witness[p] && (out.witness.order() == 0 || listing_order(*witness[p], out.witness) < 0)) {
            out.witness = *witness[p];
        }
    }
    return out;
}

int threshold_formula(int n) {
    if (n < 3) throw ArgumentError("threshold formula needs n >= 3");
    return n % 3 == 1 ? n / 3 - 1 : n / 3;
}

namespace {

BigInt choose3(int n) {
    if (n < 3) return BigInt(0);
    return BigInt(n) * (n - 1) * (n - 2) / 6;
}

void require_c(const Rational& c) {
    if (c < 0 || c > Rational(BigInt(1), BigInt(3))) {
        throw ArgumentError("c must lie in [0, 1/3], got " + to_string(c));
    }
}

}  // namespace

Rational mixed_bound(const Rational& c, int n) {
    require_c(c);
    if (n < 0) throw ArgumentError("n must be non-negative");
    const Rational third(BigInt(1), BigInt(3));
    const Rational gap = third - c;
    return (third + 3 * gap * gap * gap) * Rational(choose3(n));
}

Interpolation interpolating_construction(const Rational& c, int n) {
    require_c(c);
    if (n < 3) throw ArgumentError("interpolating construction needs n >= 3");
    Interpolation out;
    out.c = round_half_up(c * n).convert_to<int>();
    out.b = round_half_up(Rational(BigInt(n), BigInt(3))).convert_to<int>();
    out.a = n - out.b - out.c;
    out.graph = build_T(out.a, out.b, out.c);
    out.edges = out.graph.edge_count();
    out.min_codegree = min_codegree(out.graph);
    return out;
}

std::vector<BoundRow> lower_bound_table(int lo, int hi) {
    if (lo < 5 || lo > hi) throw ArgumentError("bound table needs 5 <= lo <= hi");
    std::vector<BoundRow> rows;
    for (int n = lo; n <= hi; ++n) {
        std::vector<std::pair<std::string, ThreeGraph>> candidates;
        const int m = n / 3;
        if (n % 3 == 0) {
            candidates.emplace_back("CT0", build_CT(n));
        } else if (n % 3 == 2) {
            candidates.emplace_back("CT2", build_CT_mod2(n));
        } else {
            candidates.emplace_back("CT1a", build_CT1(m));
            candidates.emplace_back("CT1b", build_CT2(m, 0));
            candidates.emplace_back("CT1c", build_CT3(m, {}));
        }
        BoundRow best;
        best.min_codegree = -1;
        for (const auto& [family, g] : candidates) {
            const int d = min_codegree(g);
            if (d > best.min_codegree) {
                best.family = family;
                best.edges = g.edge_count();
                best.min_codegree = d;
                best.f32_free = is_f32_free(g);
            }
        }
        best.n = n;
        best.formula = threshold_formula(n);
        rows.push_back(best);
    }
    return rows;
}

std::string bound_row_json(const BoundRow& row) {
    nlohmann::ordered_json doc;
    doc["n"] = row.n;
    doc["family"] = row.family;
    doc["e"] = row.edges;
    doc["delta2"] = row.min_codegree;
    doc["formula"] = row.formula;
    doc["f32_free"] = row.f32_free;
    doc["match"] = row.min_codegree == row.formula;
    return doc.dump();
}

}  // namespace coex
