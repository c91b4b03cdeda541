#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coex/canonical.hpp"
#include "coex/constructions.hpp"
#include "coex/enumeration.hpp"
#include "coex/errors.hpp"
#include "coex/flag_calculus.hpp"
#include "coex/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace coex;

namespace {

const CodegreeProblem& problem() {
    static const CodegreeProblem p = CodegreeProblem::build({named::f32()}, 6);
    return p;
}

const FlagTables& tables() {
    static const FlagTables t = build_tables(problem(), 1, true);
    return t;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Every ordered k-tuple of distinct vertices of host inducing the labelled type.
std::vector<std::vector<Vertex>> placements(const ThreeGraph& type, const ThreeGraph& host) {
    std::vector<std::vector<Vertex>> out;
    const int k = type.order();
    std::vector<Vertex> perm(static_cast<std::size_t>(host.order()));
    std::iota(perm.begin(), perm.end(), 1);
    std::set<std::vector<Vertex>> seen;
    do {
        std::vector<Vertex> sigma(perm.begin(), perm.begin() + k);
        if (!seen.insert(sigma).second) continue;
        if (host.induced(sigma) == type) out.push_back(sigma);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

TEST_CASE("count_p basics") {
    const RootedGraph edge{named::k3(), 2};
    const std::vector<Vertex> roots{1, 2};
    CHECK(count_p(edge, named::k3(), roots) == 1);
    const RootedGraph whole{named::f32(), 5};
    const std::vector<Vertex> all{1, 2, 3, 4, 5};
    CHECK(count_p(whole, named::f32(), all) == 1);
    // the codegree of (1,2) in F32
    CHECK(count_p(edge, named::f32(), roots) == 3);
    const RootedGraph pair_flag{ThreeGraph(3), 2};
    CHECK_THROWS_AS(count_p({parse_graph("4:123"), 3}, named::k4_minus(), std::vector<Vertex>{2, 3, 4}), PreconditionError);
    CHECK_THROWS_AS(count_p(edge, named::k3(), std::vector<Vertex>{1}), ArgumentError);
    CHECK(count_p(pair_flag, named::k3(), roots) == 0);
}

TEST_CASE("flag profiles partition the extension sets") {
    const CodegreeProblem& p = problem();
    std::mt19937_64 rng(17);
    for (std::size_t t = 0; t < p.types.size(); ++t) {
        const FlagBasis& basis = p.flag_bases[t];
        const int k = basis.type_order();
        const int l = basis.flag_order();
        for (int trial = 0; trial < 40; ++trial) {
            const ThreeGraph& host = p.admissible[rng() % p.admissible.size()];
            for (const auto& sigma : placements(basis.type().graph, host)) {
                const auto prof = flag_profile(basis, host, sigma);
                const long long total = std::accumulate(prof.begin(), prof.end(), 0LL);
                CHECK(total == binomial(6 - k, l - k));
                break;
            }
        }
    }
}

TEST_CASE("joint counts: small examples") {
    const RootedGraph empty_type{ThreeGraph(0), 0};
    const RootedGraph edge{named::k3(), 0};
    const RootedGraph non_edge{ThreeGraph(3), 0};
    const ThreeGraph two_edges(6, {{1, 2, 3}, {4, 5, 6}});
    CHECK(joint_count(empty_type, edge, edge, two_edges) == 2);
    std::vector<Triple> all;
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b)
            for (int c = b + 1; c <= 6; ++c) all.push_back({a, b, c});
    CHECK(joint_count(empty_type, non_edge, non_edge, ThreeGraph(6, all)) == 0);
    CHECK_THROWS_AS(joint_count(empty_type, edge, edge, ThreeGraph(5)), ArgumentError);
    CHECK(overlap_count(pair_type(), {parse_graph("4:123"), 2}, {parse_graph("4:123"), 2}, ThreeGraph(0)) == 0);
}

TEST_CASE("product identity holds exactly on every admissible host") {
    const CodegreeProblem& p = problem();
    CHECK(tables().identity_checked == p.admissible.size());
    long long worst = 0;
    for (std::size_t t = 0; t < p.types.size(); ++t) {
        for (const ThreeGraph& host : p.admissible.graphs()) {
            worst = std::max(worst, product_identity_defect(p.flag_bases[t], host));
        }
    }
    CHECK(worst == 0);
}

TEST_CASE("split-method joint table equals the triple loop") {
    const CodegreeProblem& p = problem();
    const FlagTables& tab = tables();
    for (std::size_t t : {std::size_t{1}, std::size_t{5}}) {
        const FlagBasis& b = p.flag_bases[t];
        for (std::size_t i = 0; i < p.admissible.size(); i += 3) {
            const CountMatrix& j = tab.hosts[i].joint[t];
            for (std::size_t u = 0; u < b.size(); ++u)
                for (std::size_t v = 0; v < b.size(); ++v)
                    CHECK(j(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) ==
                          joint_count(b.type(), b[u], b[v], p.admissible[i]));
        }
    }
}

TEST_CASE("joint table symmetry and isomorphism invariance") {
    const CodegreeProblem& p = problem();
    const FlagTables& tab = tables();
    std::mt19937_64 rng(23);
    for (std::size_t i = 0; i < p.admissible.size(); i += 7) {
        std::vector<Vertex> perm{1, 2, 3, 4, 5, 6};
        std::shuffle(perm.begin(), perm.end(), rng);
        const ThreeGraph relabelled = p.admissible[i].relabeled(perm);
        for (std::size_t t = 0; t < p.types.size(); ++t) {
            const CountMatrix& j = tab.hosts[i].joint[t];
            CHECK(j == j.transpose());
            const FlagBasis& b = p.flag_bases[t];
            const std::size_t u = rng() % b.size();
            const std::size_t v = rng() % b.size();
            CHECK(joint_count(b.type(), b[u], b[v], relabelled) == j(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)));
        }
    }
}

TEST_CASE("axiom counts: frozen oracle tables") {
    const CodegreeProblem& p = problem();
    const FlagBasis& axioms = p.axiom_basis;
    auto check_host = [&](const ThreeGraph& host, const std::vector<std::tuple<std::string, long long, long long>>& expected) {
        long long total_b = 0;
        for (const auto& [flag, a, b] : expected) {
            const auto counts = axiom_counts(parse_rooted(flag), host);
            CHECK_MESSAGE(counts.a == a, flag);
            CHECK_MESSAGE(counts.b == b, flag);
            total_b += b;
        }
        CHECK(total_b == 120);
        long long all_b = 0;
        for (const auto& f : axioms.flags()) all_b += axiom_counts(f, host).b;
        CHECK(all_b == 120);
    };
    // oracle: loop over all (sigma, z), permutation-minimal rooted keys
    check_host(build_T(2, 2, 2), {{"5:123124345(2)", 0, 12}, {"5:123134245(2)", 0, 24}, {"5:123145234(2)", 0, 24},
                                  {"5:123145245(2)", 12, 12}, {"5:123145345(2)", 0, 12}, {"5:123245345(2)", 0, 12},
                                  {"5:134135245(2)", 12, 12}, {"5:134235245(2)", 12, 12}});
    check_host(build_T(3, 2, 1),
               {{"5:123124134(2)", 0, 6},  {"5:123124234(2)", 0, 6},  {"5:123124345(2)", 0, 6},
                {"5:123134234(2)", 12, 12}, {"5:123134245(2)", 12, 12}, {"5:123145234(2)", 12, 12},
                {"5:123145245(2)", 0, 6},  {"5:123145345(2)", 0, 6},  {"5:123245345(2)", 0, 6},
                {"5:134135145(2)", 2, 2},  {"5:134135245(2)", 0, 6},  {"5:134135345(2)", 0, 6},
                {"5:134235245(2)", 0, 6},  {"5:234235245(2)", 2, 2},  {"5:234235345(2)", 0, 6},
                {"5:123124134235245345(2)", 0, 6}, {"5:123124135145234345(2)", 0, 6},
                {"5:123124135145235245(2)", 0, 6}, {"5:134135145234235245(2)", 2, 2}});
}

TEST_CASE("axiom counts: empty host and bounds") {
    const auto empty = axiom_counts(parse_rooted("5:(2)"), ThreeGraph(6));
    CHECK(empty.a == 0);
    CHECK(empty.b == 120);
    const auto one = axiom_counts(parse_rooted("5:123(2)"), ThreeGraph(6));
    CHECK(one.a == 0);
    CHECK(one.b == 0);
    CHECK_THROWS_AS(axiom_counts(parse_rooted("5:(2)"), ThreeGraph(5)), ArgumentError);

    const CodegreeProblem& p = problem();
    const FlagTables& tab = tables();
    for (std::size_t i = 0; i < p.admissible.size(); ++i) {
        for (std::size_t j = 0; j < p.axiom_basis.size(); ++j) {
            CHECK(tab.hosts[i].axiom_a[j] <= tab.hosts[i].axiom_b[j]);
            CHECK(tab.hosts[i].axiom_a[j] >= 0);
        }
    }
}

TEST_CASE("tables do not depend on the thread count") {
    const FlagTables four = build_tables(problem(), 4, false);
    const FlagTables& one = tables();
    REQUIRE(four.hosts.size() == one.hosts.size());
    for (std::size_t i = 0; i < one.hosts.size(); ++i) {
        CHECK(four.hosts[i].axiom_a == one.hosts[i].axiom_a);
        CHECK(four.hosts[i].axiom_b == one.hosts[i].axiom_b);
        for (std::size_t t = 0; t < one.hosts[i].joint.size(); ++t) CHECK(four.hosts[i].joint[t] == one.hosts[i].joint[t]);
    }
}
