#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coex/canonical.hpp"
#include "coex/constructions.hpp"
#include "coex/enumeration.hpp"
#include "coex/errors.hpp"
#include "coex/hypergraph.hpp"
#include "coex/search.hpp"

#include "json.hpp"

using namespace coex;

namespace {

Rational frac(long long p, long long q = 1) { return Rational(BigInt(p), BigInt(q)); }

const std::vector<ThreeGraph>& f32_only() {
    static const std::vector<ThreeGraph> f{named::f32()};
    return f;
}

}  // namespace

TEST_CASE("exhaustive coex values") {
    const std::vector<int> expected{0, 1, 2, 1, 2};
    for (int n = 2; n <= 6; ++n) {
        const CoexResult r = brute_force_coex(n, f32_only());
        CHECK(r.value == expected[static_cast<std::size_t>(n - 2)]);
        CHECK(r.witness.order() == n);
        CHECK(min_codegree(r.witness) == r.value);
        CHECK(is_f32_free(r.witness));
        CHECK(canonical_form(r.witness) == r.witness);
    }
    CHECK(brute_force_coex(5, f32_only()).witness == parse_graph("5:123124135245345"));
    CHECK(brute_force_coex(6, f32_only()).witness == parse_graph("6:123124135146156236245256345346"));
    for (int n = 2; n <= 6; ++n) CHECK(brute_force_coex(n, {}).value == n - 2);
    CHECK_THROWS_AS(brute_force_coex(7, f32_only()), CapabilityError);
    CHECK_THROWS_AS(brute_force_coex(1, f32_only()), ArgumentError);
}

TEST_CASE("exhaustive search agrees with the admissible enumeration") {
    for (int n = 3; n <= 6; ++n) {
        const AdmissibleBasis basis = enumerate_admissible(f32_only(), n);
        int best = -1;
        const ThreeGraph* first = nullptr;
        for (const ThreeGraph& g : basis.graphs()) {
            const int d = min_codegree(g);
            if (d > best) {
                best = d;
                first = &g;
            }
        }
        const CoexResult r = brute_force_coex(n, f32_only());
        CHECK(r.value == best);
        // the basis is listed in the same order the witness is minimised in
        for (const ThreeGraph& g : basis.graphs()) {
            if (min_codegree(g) == best) {
                CHECK(r.witness == g);
                break;
            }
        }
        CHECK(first != nullptr);
    }
    const std::vector<ThreeGraph> k4{named::k4()};
    const AdmissibleBasis k4_free = enumerate_admissible(k4, 6);
    int best = 0;
    for (const ThreeGraph& g : k4_free.graphs()) best = std::max(best, min_codegree(g));
    CHECK(brute_force_coex(6, k4).value == best);
}

TEST_CASE("exhaustive search is independent of the thread count") {
    const CoexResult one = brute_force_coex(6, f32_only(), 1);
    const CoexResult four = brute_force_coex(6, f32_only(), 4);
    CHECK(one.value == four.value);
    CHECK(one.witness == four.witness);
}

TEST_CASE("threshold formula") {
    CHECK(threshold_formula(12) == 4);
    CHECK(threshold_formula(13) == 3);
    CHECK(threshold_formula(14) == 4);
    CHECK(threshold_formula(3) == 1);
    CHECK_THROWS_AS(threshold_formula(2), ArgumentError);
}

TEST_CASE("mixed bound") {
    CHECK(mixed_bound(frac(1, 3), 6) == frac(20, 3));
    CHECK(mixed_bound(frac(0), 6) == frac(4, 9) * 20);
    CHECK(mixed_bound(frac(1, 6), 60) == frac(213875, 18));
    Rational previous = mixed_bound(frac(0), 30);
    for (int k = 1; k <= 12; ++k) {
        const Rational next = mixed_bound(frac(k, 36), 30);
        CHECK(next < previous);
        previous = next;
    }
    CHECK(mixed_bound(frac(1, 5), 2) == 0);
    CHECK_THROWS_AS(mixed_bound(frac(1, 2), 6), ArgumentError);
    CHECK_THROWS_AS(mixed_bound(frac(-1, 9), 6), ArgumentError);
}

TEST_CASE("interpolating construction") {
    const Interpolation top = interpolating_construction(frac(1, 3), 12);
    CHECK(top.a == 4);
    CHECK(top.b == 4);
    CHECK(top.c == 4);
    CHECK(top.graph == build_T(4, 4, 4));
    const Interpolation bottom = interpolating_construction(frac(0), 12);
    CHECK(bottom.a == 8);
    CHECK(bottom.b == 4);
    CHECK(bottom.c == 0);

    const Interpolation mid = interpolating_construction(frac(1, 6), 60);
    CHECK(mid.a == 30);
    CHECK(mid.b == 20);
    CHECK(mid.c == 10);
    CHECK(mid.edges == 11950);
    CHECK(mid.min_codegree == 9);

    for (int n = 12; n <= 36; n += 4) {
        for (long long k = 0; k <= 4; ++k) {
            const Rational c = frac(k, 12);
            const Interpolation t = interpolating_construction(c, n);
            CHECK(t.a + t.b + t.c == n);
            CHECK(is_f32_free(t.graph));
            CHECK(t.min_codegree == min_codegree(t.graph));
            // cross pairs carry |part| - 1, so delta2 = min part - 1 once C is nonempty
            if (t.c > 0) CHECK(t.min_codegree == std::min({t.a, t.b, t.c}) - 1);
            if (t.a >= t.c) CHECK(t.min_codegree >= round_half_up(c * n).convert_to<int>() - 1);
        }
    }
    // |A| < |C| can happen near c = 1/3, and then delta2 falls one below round(cn) - 1
    const Interpolation skew = interpolating_construction(frac(1, 3), 20);
    CHECK(skew.a == 6);
    CHECK(skew.c == 7);
    CHECK(skew.min_codegree == 5);
    CHECK_THROWS_AS(interpolating_construction(frac(1, 2), 12), ArgumentError);
    CHECK_THROWS_AS(interpolating_construction(frac(0), 2), ArgumentError);
}

TEST_CASE("lower-bound table meets the threshold formula") {
    const auto rows = lower_bound_table(9, 21);
    REQUIRE(rows.size() == 13);
    for (const BoundRow& row : rows) {
        INFO("n=" << row.n);
        CHECK(row.min_codegree == threshold_formula(row.n));
        CHECK(row.f32_free);
        if (row.n % 3 == 0) CHECK(row.family == "CT0");
        if (row.n % 3 == 2) CHECK(row.family == "CT2");
        if (row.n % 3 == 1) CHECK(row.family == "CT1a");
    }
    const auto doc = nlohmann::json::parse(bound_row_json(rows.front()));
    CHECK(doc["n"] == 9);
    CHECK(doc["delta2"] == 3);
    CHECK(doc["match"] == true);
    CHECK_THROWS_AS(lower_bound_table(4, 10), ArgumentError);
    CHECK_THROWS_AS(lower_bound_table(12, 10), ArgumentError);
}
