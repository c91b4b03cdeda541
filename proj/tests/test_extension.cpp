#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coex/errors.hpp"
#include "coex/extension.hpp"
#include "coex/hypergraph.hpp"

#include <random>

using namespace coex;

namespace {

Rational frac(long long p, long long q = 1) { return Rational(BigInt(p), BigInt(q)); }

std::vector<VertexPair> host_pairs(int n) {
    std::vector<VertexPair> out;
    for (Vertex x = 1; x <= n; ++x)
        for (Vertex y = x + 1; y <= n; ++y) out.push_back({x, y});
    return out;
}

struct Oracle {
    bool verified = true;
    std::vector<VertexPair> least;
    Rational weight;
};

// Every subset of pairs, containment by the generic subgraph test.
Oracle plain_enumeration(const PairWeighting& w, const Rational& c, const std::vector<ThreeGraph>& targets, bool strict) {
    const auto pairs = host_pairs(w.host().order());
    Oracle out;
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
        std::vector<VertexPair> link;
        Rational weight = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((mask >> i) & 1U) {
                link.push_back(pairs[i]);
                weight += w.weights()[i];
            }
        }
        if (strict ? !(weight > c) : !(weight >= c)) continue;
        const ThreeGraph g = extend(w.host(), link);
        bool hit = false;
        for (const ThreeGraph& t : targets) hit = hit || contains(g, t);
        if (hit) continue;
        if (out.verified || link < out.least) {
            out.least = link;
            out.weight = weight;
        }
        out.verified = false;
    }
    return out;
}

PairWeighting random_weighting(const ThreeGraph& host, std::mt19937_64& rng) {
    const std::size_t count = host_pairs(host.order()).size();
    std::uniform_int_distribution<int> part(0, 6);
    std::vector<long long> raw(count);
    long long total = 0;
    for (auto& r : raw) total += (r = part(rng));
    if (total == 0) total = raw[0] = 1;
    std::vector<Rational> weights;
    for (long long r : raw) weights.push_back(frac(r, total));
    return PairWeighting(host, weights);
}

ThreeGraph random_host(int n, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.4);
    std::vector<Triple> edges;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                if (coin(rng)) edges.push_back({a, b, c});
    return ThreeGraph(n, edges);
}

}  // namespace

TEST_CASE("weightings, link weights and extensions") {
    const ThreeGraph host = named::k3();
    CHECK_THROWS_AS(PairWeighting(host, {frac(1, 2), frac(1, 2)}), ArgumentError);
    CHECK_THROWS_AS(PairWeighting(host, {frac(1), frac(1), frac(-1)}), ArgumentError);
    CHECK_THROWS_AS(PairWeighting(host, {frac(1, 3), frac(1, 3), frac(1, 2)}), ArgumentError);
    const PairWeighting w(host, {frac(1, 2), frac(1, 3), frac(1, 6)});
    CHECK(w.weight({1, 3}) == frac(1, 3));
    CHECK_THROWS_AS(w.weight({1, 4}), ArgumentError);
    const std::vector<VertexPair> link{{1, 2}, {2, 3}};
    CHECK(link_weight(w, link) == frac(2, 3));
    const std::vector<VertexPair> foreign{{1, 5}};
    CHECK_THROWS_AS(link_weight(w, foreign), ArgumentError);
    const ThreeGraph ext = extend(host, link);
    CHECK(ext == ThreeGraph(4, {{1, 2, 3}, {1, 2, 4}, {2, 3, 4}}));
    CHECK(contains(ext, named::k4_minus()));

    const std::pair<VertexPair, Rational> only[] = {{{2, 3}, frac(1)}};
    const PairWeighting point = PairWeighting::from_pairs(host, only);
    CHECK(point.weights() == std::vector<Rational>{frac(0), frac(0), frac(1)});
}

TEST_CASE("scripted weightings lie on the simplex") {
    for (int k = 3; k <= 6; ++k) {
        for (const LemmaCase& c : {sprime_a_case(k), sprime_b_case(k)}) {
            Rational total = 0;
            for (const Rational& x : c.weighting.weights()) {
                CHECK(x >= 0);
                total += x;
            }
            CHECK(total == 1);
            CHECK(c.weighting.host() == named::star_prime(k));
        }
    }
    CHECK(sprime_a_case(3).threshold == frac(3, 8));
    CHECK(sprime_b_case(4).threshold == frac(1, 3));
    CHECK(k4doubled_case().threshold == frac(1, 3));
    CHECK(triangle_case().weighting.weights() == std::vector<Rational>{frac(1, 3), frac(1, 3), frac(1, 3)});
}

TEST_CASE("the checker agrees with plain enumeration on the scripted cases") {
    std::vector<LemmaCase> cases{sprime_a_case(3), sprime_a_case(4), sprime_b_case(3), sprime_b_case(4), triangle_case(),
                                 k4doubled_case()};
    for (const LemmaCase& c : cases) {
        INFO(c.lemma << " k=" << c.k);
        for (const Rational& threshold : {c.threshold, frac(0), c.threshold / 2}) {
            for (bool strict : {true, false}) {
                const auto got = check_extension_lemma(c.weighting, threshold, c.targets, strict);
                const Oracle want = plain_enumeration(c.weighting, threshold, c.targets, strict);
                CHECK(got.verified == want.verified);
                if (!want.verified) {
                    REQUIRE(got.counterexample.has_value());
                    CHECK(*got.counterexample == want.least);
                    CHECK(got.counterexample_weight == want.weight);
                }
            }
        }
    }
}

TEST_CASE("the checker agrees with plain enumeration on random weightings") {
    std::mt19937_64 rng(20240601);
    const std::vector<std::vector<ThreeGraph>> target_sets{{named::f32()}, {named::k4_minus()}, {named::k4()},
                                                           {named::f32(), named::k4()}};
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 3 + trial % 3;
        const ThreeGraph host = random_host(n, rng);
        const PairWeighting w = random_weighting(host, rng);
        const Rational threshold = frac(static_cast<long long>(rng() % 9), 12);
        const auto& targets = target_sets[static_cast<std::size_t>(trial) % target_sets.size()];
        const bool strict = trial % 2 == 0;
        const auto got = check_extension_lemma(w, threshold, targets, strict);
        const Oracle want = plain_enumeration(w, threshold, targets, strict);
        CHECK(got.verified == want.verified);
        if (!want.verified) {
            REQUIRE(got.counterexample.has_value());
            CHECK(*got.counterexample == want.least);
            CHECK(got.counterexample_weight == want.weight);
        }
    }
}

TEST_CASE("lemma suite verifies every case") {
    const LemmaSuiteReport report = lemma_suite(5);
    CHECK(report.all_verified());
    CHECK(report.outcomes.size() == 2 * 3 + 2);
    const auto lines = report.lines();
    REQUIRE(lines.size() == 4);
    for (const auto& line : lines) CHECK(line.find(": verified") != std::string::npos);
    CHECK(lines[0].rfind("sprime-a k=3..5", 0) == 0);
    CHECK_THROWS_AS(lemma_suite(2), ArgumentError);
    CHECK_THROWS_AS(lemma_suite(7), ArgumentError);
}

TEST_CASE("negative controls") {
    const LemmaCase tri = triangle_case();
    const auto loose = check_extension_lemma(tri.weighting, frac(0), tri.targets, false);
    REQUIRE(loose.counterexample.has_value());
    CHECK(loose.counterexample->empty());
    const auto strict = check_extension_lemma(tri.weighting, frac(0), tri.targets, true);
    REQUIRE(strict.counterexample.has_value());
    CHECK(pairs_to_string(*strict.counterexample) == "12");
    CHECK(strict.counterexample_weight == frac(1, 3));

    const LemmaCase s3 = sprime_a_case(3);
    const auto weak = check_extension_lemma(s3.weighting, frac(0), s3.targets, true);
    REQUIRE(weak.counterexample.has_value());
    CHECK(weak.counterexample_weight == frac(1, 4));
}

TEST_CASE("monotonicity in the threshold") {
    const LemmaCase c = sprime_b_case(4);
    bool seen_verified = false;
    for (long long num = 0; num <= 12; ++num) {
        const bool v = check_extension_lemma(c.weighting, frac(num, 12), c.targets).verified;
        if (seen_verified) CHECK(v);
        seen_verified = seen_verified || v;
    }
    CHECK(seen_verified);
    // targets that every graph contains make any threshold vacuous
    const std::vector<ThreeGraph> trivial{ThreeGraph(1)};
    CHECK(check_extension_lemma(c.weighting, frac(0), trivial, false).verified);
}

TEST_CASE("parallel runs report the same counterexample and totals") {
    const LemmaCase c = sprime_a_case(5);
    for (const Rational& threshold : {c.threshold, frac(1, 5)}) {
        const auto one = check_extension_lemma(c.weighting, threshold, c.targets, true, 1);
        const auto four = check_extension_lemma(c.weighting, threshold, c.targets, true, 4);
        CHECK(one.verified == four.verified);
        CHECK(one.counterexample == four.counterexample);
        if (one.verified) CHECK(one.stats.examined == four.stats.examined);
    }
}

TEST_CASE("host size limits and pair formatting") {
    std::vector<Rational> weights(36, frac(1, 36));
    const PairWeighting big(ThreeGraph(9), weights);
    const std::vector<ThreeGraph> targets{named::f32()};
    CHECK_THROWS_AS(check_extension_lemma(big, frac(1, 3), targets), CapabilityError);
    const std::vector<VertexPair> small{{1, 2}, {3, 4}};
    CHECK(pairs_to_string(small) == "12,34");
    const std::vector<VertexPair> wide{{1, 12}, {3, 4}};
    CHECK(pairs_to_string(wide) == "1-12,3-4");
}
