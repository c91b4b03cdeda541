#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coex/canonical.hpp"
#include "coex/constructions.hpp"
#include "coex/errors.hpp"
#include "coex/hypergraph.hpp"
#include "coex/three_graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace coex;

namespace {

// Independent oracle: least sorted edge list over every permutation.
std::vector<Triple> brute_canonical_edges(const ThreeGraph& g, int fixed = 0) {
    const int n = g.order();
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Triple> best;
    bool have = false;
    do {
        std::vector<Triple> e;
        for (const Triple& t : g.edges()) e.push_back(Triple::of(perm[t.a - 1], perm[t.b - 1], perm[t.c - 1]));
        std::sort(e.begin(), e.end());
        if (!have || e < best) {
            best = e;
            have = true;
        }
    } while (std::next_permutation(perm.begin() + fixed, perm.end()));
    return best;
}

ThreeGraph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Triple> edges;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                if (coin(rng)) edges.push_back({a, b, c});
    return ThreeGraph(n, edges);
}

ThreeGraph from_mask(int n, std::uint32_t mask) {
    std::vector<Triple> edges;
    int bit = 0;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c, ++bit)
                if ((mask >> bit) & 1U) edges.push_back({a, b, c});
    return ThreeGraph(n, edges);
}

std::vector<Vertex> shuffled(int n, std::mt19937_64& rng) {
    std::vector<Vertex> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("graph strings round-trip") {
    CHECK(ThreeGraph(3, {{1, 3, 2}}).edges() == std::vector<Triple>{{1, 2, 3}});
    CHECK(parse_graph("5:123124125345") == named::f32());
    CHECK(named::f32().to_string() == "5:123124125345");
    CHECK(parse_graph("3:").edge_count() == 0);
    const RootedGraph f = parse_rooted("5:123(2)");
    CHECK(f.roots == 2);
    CHECK(f.to_string() == "5:123(2)");

    const ThreeGraph big = build_T(4, 4, 4);
    const std::string s = big.to_string();
    CHECK(s.rfind("g{n=12; edges=[", 0) == 0);
    CHECK(parse_graph(s) == big);

    CHECK_THROWS_AS(parse_graph("5:12"), ParseError);
    CHECK_THROWS_AS(parse_graph("3:124"), ParseError);
    CHECK_THROWS_AS(parse_graph("x"), ParseError);
    CHECK_THROWS_AS(parse_rooted("3:123(4)"), ParseError);
    CHECK_THROWS_AS(ThreeGraph(3, {{1, 1, 2}}), ArgumentError);
}

TEST_CASE("canonical form matches the permutation oracle") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 7; ++n) {
        const int samples = n <= 5 ? 60 : 25;
        for (int i = 0; i < samples; ++i) {
            const ThreeGraph g = random_graph(n, 0.2 + 0.1 * (i % 6), rng);
            const ThreeGraph c = canonical_form(g);
            CHECK(c.edges() == brute_canonical_edges(g));
            CHECK(canonical_form(c) == c);
            CHECK(canonical_form(g.relabeled(shuffled(n, rng))) == c);
        }
    }
}

TEST_CASE("isomorphism decided by canonical forms agrees with explicit search") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const int n = 4 + i % 4;
        const ThreeGraph g = random_graph(n, 0.3, rng);
        const ThreeGraph h = random_graph(n, 0.3, rng);
        const bool oracle = g.edge_count() == h.edge_count() && brute_canonical_edges(g) == brute_canonical_edges(h);
        CHECK(are_isomorphic(g, h) == oracle);
    }
}

TEST_CASE("two classes of 3-vertex graphs") {
    CHECK(canonical_string(ThreeGraph(3)) == "3:");
    CHECK(canonical_string(ThreeGraph(3, {{3, 1, 2}})) == "3:123");
}

TEST_CASE("rooted canonical form fixes roots") {
    const RootedGraph f{parse_graph("5:123"), 2};
    CHECK(rooted_canonical_form(f) == f);
    const RootedGraph full{named::k4_minus(), 4};
    CHECK(rooted_canonical_form(full) == full);
    // one edge through both roots, free vertices named differently
    CHECK(rooted_canonical_string({parse_graph("4:123"), 2}) == rooted_canonical_string({parse_graph("4:124"), 2}));
    // an edge through one root is not rooted-isomorphic to one through both
    CHECK(rooted_canonical_string({parse_graph("4:134"), 2}) != rooted_canonical_string({parse_graph("4:123"), 2}));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const int n = 4 + i % 3;
        const int t = 1 + i % 3;
        const ThreeGraph g = random_graph(n, 0.4, rng);
        const RootedGraph r = rooted_canonical_form({g, t});
        CHECK(r.graph.edges() == brute_canonical_edges(g, t));
        std::vector<Vertex> roots(static_cast<std::size_t>(t));
        std::iota(roots.begin(), roots.end(), 1);
        CHECK(r.type_graph() == g.induced(roots));
    }
}

TEST_CASE("canonical labelling refuses large graphs") {
    CHECK_THROWS_AS(canonical_form(ThreeGraph(13)), CapabilityError);
}

TEST_CASE("containment") {
    CHECK(contains(named::f32(), named::f32()));
    CHECK_FALSE(contains(build_T(2, 2, 2), named::f32()));
    CHECK(contains(named::k4(), named::k4_minus()));
    CHECK_FALSE(contains(named::k4_minus(), named::k4()));
    CHECK(contains(named::fano(), ThreeGraph(7, {{1, 2, 3}})));

    // adding edges never destroys a copy
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const ThreeGraph g = random_graph(6, 0.35, rng);
        const ThreeGraph more = g.with_edges(random_graph(6, 0.2, rng).edges());
        if (contains(g, named::k4_minus())) CHECK(contains(more, named::k4_minus()));
        if (contains(g, named::f32())) CHECK(contains(more, named::f32()));
    }
}

TEST_CASE("joint neighbourhoods and codegrees") {
    CHECK(joint_neighbourhood(named::k3(), 1, 2) == std::vector<Vertex>{3});
    CHECK(joint_neighbourhood(named::f32(), 1, 2) == std::vector<Vertex>{3, 4, 5});
    CHECK(joint_neighbourhood(ThreeGraph(4), 1, 3).empty());
    CHECK_THROWS_AS(joint_neighbourhood(named::k4(), 2, 2), ArgumentError);

    CHECK(min_codegree(named::k4()) == 2);
    CHECK(min_codegree(build_T(4, 4, 4)) == 3);
    CHECK(min_codegree(build_CT(12)) == 4);
    CHECK_THROWS_AS(min_codegree(ThreeGraph(1)), ArgumentError);
    CHECK(min_codegree(ThreeGraph(2)) == 0);

    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        const ThreeGraph g = random_graph(3 + i % 7, 0.4, rng);
        long long total = 0;
        for (Vertex x = 1; x <= g.order(); ++x)
            for (Vertex y = x + 1; y <= g.order(); ++y) {
                total += g.codegree(x, y);
                CHECK(static_cast<int>(joint_neighbourhood(g, x, y).size()) == g.codegree(x, y));
            }
        CHECK(total == 3 * static_cast<long long>(g.edge_count()));
    }
}

TEST_CASE("balanced T codegrees lie between floor(n/3)-1 and ceil(n/3)") {
    for (int n = 3; n <= 24; ++n) {
        const int a = (n + 2) / 3, b = (n + 1) / 3, c = n / 3;
        const ThreeGraph t = build_T(a, b, c);
        for (Vertex x = 1; x <= n; ++x)
            for (Vertex y = x + 1; y <= n; ++y) {
                CHECK(t.codegree(x, y) >= n / 3 - 1);
                CHECK(t.codegree(x, y) <= (n + 2) / 3);
            }
    }
}

TEST_CASE("F32-freeness: neighbourhood test equals containment, exhaustively to n = 6") {
    const ThreeGraph f32 = named::f32();
    CHECK_FALSE(is_f32_free(f32));
    CHECK(is_f32_free(build_D(4, 2)));
    CHECK(is_f32_free(named::k4()));
    CHECK_FALSE(contains(named::k4(), f32));
    long long disagreements = 0;
    for (int n = 1; n <= 6; ++n) {
        const int triples = n * (n - 1) * (n - 2) / 6;
        for (std::uint32_t mask = 0; mask < (1U << triples); ++mask) {
            const ThreeGraph g = from_mask(n, mask);
            if (is_f32_free(g) != !contains(g, f32)) ++disagreements;
        }
    }
    CHECK(disagreements == 0);
}

TEST_CASE("F32-freeness on random graphs up to n = 9") {
    const ThreeGraph f32 = named::f32();
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> order(5, 9);
    std::uniform_real_distribution<double> density(0.02, 0.35);
    int disagreements = 0;
    for (int i = 0; i < 10000; ++i) {
        const ThreeGraph g = random_graph(order(rng), density(rng), rng);
        if (is_f32_free(g) != !contains(g, f32)) ++disagreements;
    }
    CHECK(disagreements == 0);
}

TEST_CASE("blow-ups") {
    CHECK(are_isomorphic(blow_up(named::k4(), 1), named::k4()));
    const ThreeGraph k4_2 = blow_up(named::k4(), 2);
    CHECK(k4_2.order() == 8);
    CHECK(k4_2.edge_count() == 32);
    const ThreeGraph e2 = blow_up(named::k3(), 2);
    CHECK(e2.order() == 6);
    CHECK(e2.edge_count() == 8);
    CHECK_THROWS_AS(blow_up(named::k4(), 0), ArgumentError);
}

TEST_CASE("named graphs") {
    CHECK(named::f32().edge_count() == 4);
    CHECK(named::k4_minus().edge_count() == 3);
    const ThreeGraph fano = named::fano();
    CHECK(fano.edge_count() == 7);
    for (Vertex x = 1; x <= 7; ++x)
        for (Vertex y = x + 1; y <= 7; ++y) CHECK(fano.codegree(x, y) == 1);
    CHECK(named::star(3).edge_count() == 3);
    CHECK(named::star_prime(3).order() == 5);
    CHECK(named::star_prime(3).edge_count() == 6);
    CHECK(named::k4_doubled().order() == 6);
    CHECK(named::lookup("f32") == named::f32());
    CHECK(named::lookup("K4-") == named::k4_minus());
    CHECK(named::lookup("Sprime4") == named::star_prime(4));
    CHECK(named::lookup("S5") == named::star(5));
    CHECK(named::lookup("4:123") == ThreeGraph(4, {{1, 2, 3}}));
    CHECK(parse_graph_list("F32, K4").size() == 2);
    CHECK(parse_graph_list("none").empty());
}
