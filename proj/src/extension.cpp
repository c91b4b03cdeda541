#include "coex/extension.hpp"

#include "coex/canonical.hpp"
#include "coex/errors.hpp"
#include "coex/hypergraph.hpp"
#include "coex/parallel.hpp"

#include <algorithm>
#include <limits>

namespace coex {

namespace {

std::size_t pair_index(int order, const VertexPair& raw) {
    const VertexPair p = make_pair_of(raw.first, raw.second);
    if (p.first < 1 || p.second > order || p.first == p.second) {
        throw ArgumentError("pair {" + std::to_string(raw.first) + "," + std::to_string(raw.second) +
                            "} is not a pair of the host");
    }
    // Pairs (x, y) with x < p.first come first: (x-1) * order - x * (x-1) / 2 of them.
    const int x = p.first;
    return static_cast<std::size_t>((x - 1) * order - x * (x - 1) / 2 + (p.second - x - 1));
}

}  // namespace

PairWeighting::PairWeighting(ThreeGraph host, std::vector<Rational> weights)
    : host_(std::move(host)), weights_(std::move(weights)) {
    const int n = host_.order();
    if (weights_.size() != static_cast<std::size_t>(n * (n - 1) / 2)) {
        throw ArgumentError("weighting needs one weight per host pair");
    }
    Rational total = 0;
    for (const Rational& w : weights_) {
        if (w < 0) throw ArgumentError("pair weights must be non-negative");
        total += w;
    }
    if (total != 1) throw ArgumentError("pair weights sum to " + to_string(total) + ", not 1");
}

PairWeighting PairWeighting::from_pairs(ThreeGraph host, std::span<const std::pair<VertexPair, Rational>> weights) {
    const int n = host.order();
    std::vector<Rational> dense(static_cast<std::size_t>(n * (n - 1) / 2), Rational(0));
    for (const auto& [pair, w] : weights) dense[pair_index(n, pair)] += w;
    return {std::move(host), std::move(dense)};
}

const Rational& PairWeighting::weight(const VertexPair& pair) const {
    return weights_[pair_index(host_.order(), pair)];
}

Rational link_weight(const PairWeighting& w, std::span<const VertexPair> link) {
    Rational total = 0;
    for (const VertexPair& p : link) total += w.weight(p);
    return total;
}

ThreeGraph extend(const ThreeGraph& host, std::span<const VertexPair> link) {
    const int z = host.order() + 1;
    std::vector<Triple> edges = host.edges();
    for (const VertexPair& raw : link) {
        const VertexPair p = make_pair_of(raw.first, raw.second);
        if (p.first < 1 || p.second >= z || p.first == p.second) {
            throw ArgumentError("link pair outside the host");
        }
        edges.push_back({p.first, p.second, z});
    }
    return ThreeGraph(z, edges);
}

namespace {

// Weights and threshold over a common denominator.
struct ScaledWeights {
    std::vector<long long> w;
    std::vector<long long> suffix;  // suffix[i] = w[i] + ... + w[last]
    long long threshold = 0;
};

ScaledWeights scale(const PairWeighting& weighting, const Rational& threshold) {
    BigInt lcm = boost::multiprecision::denominator(threshold);
    for (const Rational& r : weighting.weights()) {
        const BigInt d = boost::multiprecision::denominator(r);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    const BigInt limit = BigInt(std::numeric_limits<long long>::max() / 4);
    auto scaled = [&](const Rational& r) {
        const BigInt v = boost::multiprecision::numerator(r) * (lcm / boost::multiprecision::denominator(r));
        if (v > limit || v < -limit) throw CapabilityError("weights need more than 62 bits over a common denominator");
        return v.convert_to<long long>();
    };
    ScaledWeights out;
    for (const Rational& r : weighting.weights()) out.w.push_back(scaled(r));
    out.suffix.assign(out.w.size() + 1, 0);
    for (std::size_t i = out.w.size(); i-- > 0;) out.suffix[i] = out.suffix[i + 1] + out.w[i];
    out.threshold = scaled(threshold);
    return out;
}

class TargetTest {
public:
    explicit TargetTest(std::span<const ThreeGraph> targets) {
        const ThreeGraph f32 = named::f32();
        for (const ThreeGraph& t : targets) {
            if (are_isomorphic(t, f32)) {
                f32_ = true;
            } else {
                others_.push_back(t);
            }
        }
    }

    bool hit(const ThreeGraph& g) const {
        if (f32_ && !is_f32_free(g)) return true;
        return std::any_of(others_.begin(), others_.end(), [&](const ThreeGraph& t) { return contains(g, t); });
    }

private:
    bool f32_ = false;
    std::vector<ThreeGraph> others_;
};

struct SubtreeResult {
    std::optional<std::vector<std::size_t>> counterexample;
    ExtensionStats stats;
};

// Preorder walk of the set-enumeration tree below `chosen`: children append a
// pair with a larger index. Stops at the first counterexample.
class LinkSearch {
public:
    LinkSearch(const ThreeGraph& host, const ScaledWeights& weights, const TargetTest& targets, bool strict)
        : host_(host), pairs_(all_pairs(host.order())), weights_(weights), targets_(targets), strict_(strict) {}

    SubtreeResult run(std::vector<std::size_t> chosen, long long weight) {
        result_ = {};
        chosen_ = std::move(chosen);
        visit(weight);
        return std::move(result_);
    }

    bool heavy(long long weight) const {
        return strict_ ? weight > weights_.threshold : weight >= weights_.threshold;
    }

private:
    ThreeGraph extended() const {
        std::vector<VertexPair> link;
        link.reserve(chosen_.size());
        for (std::size_t i : chosen_) link.push_back(pairs_[i]);
        return extend(host_, link);
    }

    // Returns true once a counterexample is recorded.
    bool visit(long long weight) {
        ++result_.stats.examined;
        const bool above = heavy(weight);
        if (above) ++result_.stats.above_threshold;
        if (targets_.hit(extended())) {
            ++result_.stats.pruned;
            return false;
        }
        if (above) {
            result_.counterexample = chosen_;
            return true;
        }
        const std::size_t first = chosen_.empty() ? 0 : chosen_.back() + 1;
        for (std::size_t j = first; j < pairs_.size(); ++j) {
            if (!heavy(weight + weights_.suffix[j])) {
                ++result_.stats.pruned;
                break;
            }
            chosen_.push_back(j);
            const bool found = visit(weight + weights_.w[j]);
            chosen_.pop_back();
            if (found) return true;
        }
        return false;
    }

    const ThreeGraph& host_;
    std::vector<VertexPair> pairs_;
    const ScaledWeights& weights_;
    const TargetTest& targets_;
    bool strict_;
    std::vector<std::size_t> chosen_;
    SubtreeResult result_;
};

void add(ExtensionStats& into, const ExtensionStats& s) {
    into.examined += s.examined;
    into.above_threshold += s.above_threshold;
    into.pruned += s.pruned;
}

}  // namespace

ExtensionCheckResult check_extension_lemma(const PairWeighting& w, const Rational& threshold,
                                           std::span<const ThreeGraph> targets, bool strict, int jobs) {
    const ThreeGraph& host = w.host();
    if (host.order() > kMaxExtensionHost) {
        throw CapabilityError("extension checks support hosts of at most " + std::to_string(kMaxExtensionHost) +
                              " vertices");
    }
    const ScaledWeights scaled = scale(w, threshold);
    const TargetTest test(targets);
    const std::vector<VertexPair> pairs = all_pairs(host.order());

    ExtensionCheckResult out;
    auto finish = [&](const std::vector<std::size_t>& link) {
        out.verified = false;
        std::vector<VertexPair> l;
        for (std::size_t i : link) l.push_back(pairs[i]);
        out.counterexample_weight = link_weight(w, l);
        out.counterexample = std::move(l);
    };

    // The empty link, then one subtree per smallest pair.
    LinkSearch root(host, scaled, test, strict);
    ++out.stats.examined;
    if (root.heavy(0)) ++out.stats.above_threshold;
    if (test.hit(host.with_vertex())) {
        ++out.stats.pruned;
        out.verified = true;
        return out;
    }
    if (root.heavy(0)) {
        finish({});
        return out;
    }
    std::size_t live = 0;
    while (live < pairs.size() && root.heavy(scaled.suffix[live])) ++live;
    if (live < pairs.size()) ++out.stats.pruned;

    std::vector<SubtreeResult> parts(live);
    parallel_for(live, jobs, [&](std::size_t j) {
        LinkSearch search(host, scaled, test, strict);
        parts[j] = search.run({j}, scaled.w[j]);
    });
    out.verified = true;
    for (const SubtreeResult& part : parts) {
        add(out.stats, part.stats);
        if (out.verified && part.counterexample) finish(*part.counterexample);
    }
    return out;
}

PairWeighting sprime_weighting(int k, const Rational& p1, const Rational& p2, const Rational& p3) {
    ThreeGraph host = named::star_prime(k);
    std::vector<Rational> weights;
    for (const VertexPair& p : all_pairs(host.order())) {
        if (p.second <= 2) {
            weights.push_back(p1);
        } else if (p.first <= 2) {
            weights.push_back(p2);
        } else {
            weights.push_back(p3);
        }
    }
    return {std::move(host), std::move(weights)};
}

namespace {

Rational frac(long long p, long long q) { return Rational(BigInt(p), BigInt(q)); }

}  // namespace

LemmaCase sprime_a_case(int k) {
    if (k < 2) throw ArgumentError("S'_k weighting needs k >= 2");
    LemmaCase c;
    c.lemma = "sprime-a";
    c.k = k;
    c.weighting = sprime_weighting(k, frac(k - 1, 3 * k - 1), frac(1, 6 * k - 2), frac(2, (k - 1) * (3 * k - 1)));
    c.threshold = frac(k, 3 * k - 1);
    c.targets = {named::f32()};
    return c;
}

LemmaCase sprime_b_case(int k) {
    if (k < 2) throw ArgumentError("S'_k weighting needs k >= 2");
    LemmaCase c;
    c.lemma = "sprime-b";
    c.k = k;
    c.weighting = sprime_weighting(k, frac(k - 2, 3 * (k - 1)), frac(1, 6 * (k - 1)), frac(2, 3 * k * (k - 1)));
    c.threshold = frac(1, 3);
    c.targets = {named::f32(), named::star(k + 1), named::k4()};
    return c;
}

LemmaCase k4doubled_case() {
    LemmaCase c;
    c.lemma = "k4doubled";
    const Rational sixth = frac(1, 6);
    const std::vector<std::pair<VertexPair, Rational>> w = {
        {{1, 3}, sixth}, {{1, 5}, sixth}, {{2, 3}, sixth}, {{2, 5}, sixth}, {{3, 4}, sixth}, {{5, 6}, sixth}};
    c.weighting = PairWeighting::from_pairs(named::k4_doubled(), w);
    c.threshold = sixth * 2;
    c.targets = {named::f32()};
    return c;
}

LemmaCase triangle_case() {
    LemmaCase c;
    c.lemma = "triangle";
    const Rational third = frac(1, 3);
    c.weighting = PairWeighting(named::k3(), {third, third, third});
    c.threshold = third;
    c.targets = {named::k4_minus()};
    return c;
}

bool LemmaSuiteReport::all_verified() const {
    return std::all_of(outcomes.begin(), outcomes.end(), [](const LemmaOutcome& o) { return o.result.verified; });
}

std::vector<std::string> LemmaSuiteReport::lines() const {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < outcomes.size()) {
        const std::string& lemma = outcomes[i].spec.lemma;
        std::size_t j = i;
        ExtensionStats stats;
        const LemmaOutcome* failure = nullptr;
        while (j < outcomes.size() && outcomes[j].spec.lemma == lemma) {
            add(stats, outcomes[j].result.stats);
            if (!failure && !outcomes[j].result.verified) failure = &outcomes[j];
            ++j;
        }
        std::string line = lemma;
        if (outcomes[i].spec.k > 0) {
            line += " k=" + std::to_string(outcomes[i].spec.k) + ".." + std::to_string(outcomes[j - 1].spec.k);
        }
        if (failure) {
            line += ": FAILED";
            if (failure->spec.k > 0) line += " at k=" + std::to_string(failure->spec.k);
            line += ", counterexample L={" + pairs_to_string(*failure->result.counterexample) +
                    "} weight " + to_string(failure->result.counterexample_weight) + " > " +
                    to_string(failure->spec.threshold);
        } else {
            line += ": verified";
        }
        line += " (links examined " + std::to_string(stats.examined) + ", above threshold " +
                std::to_string(stats.above_threshold) + ", pruned " + std::to_string(stats.pruned) + ")";
        out.push_back(std::move(line));
        i = j;
    }
    return out;
}

LemmaSuiteReport lemma_suite(int k_max, int jobs) {
    if (k_max < 3 || k_max > 6) throw ArgumentError("lemma suite needs 3 <= kmax <= 6");
    std::vector<LemmaCase> cases;
    for (int k = 3; k <= k_max; ++k) cases.push_back(sprime_a_case(k));
    for (int k = 3; k <= k_max; ++k) cases.push_back(sprime_b_case(k));
    cases.push_back(k4doubled_case());
    cases.push_back(triangle_case());
    LemmaSuiteReport report;
    for (LemmaCase& c : cases) {
        ExtensionCheckResult r = check_extension_lemma(c.weighting, c.threshold, c.targets, true, jobs);
        report.outcomes.push_back({std::move(c), std::move(r)});
    }
    return report;
}

std::string pairs_to_string(std::span<const VertexPair> pairs) {
    const bool short_form =
        std::all_of(pairs.begin(), pairs.end(), [](const VertexPair& p) { return p.first <= 9 && p.second <= 9; });
    std::string out;
    for (const VertexPair& p : pairs) {
        if (!out.empty()) out += ',';
        out += std::to_string(p.first);
        if (!short_form) out += '-';
        out += std::to_string(p.second);
    }
    return out;
}

}  // namespace coex
