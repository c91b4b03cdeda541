#include "coex/constructions.hpp"

#include "coex/canonical.hpp"
#include "coex/errors.hpp"
#include "coex/hypergraph.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

namespace coex {

int Tripartition::part_of(Vertex v) const {
    if (v < 1 || v > order()) throw ArgumentError("vertex outside the tripartition");
    if (v <= a) return 1;
    if (v <= a + b) return 2;
    return 3;
}

std::vector<Vertex> Tripartition::part(int index) const {
    const int start = index == 1 ? 1 : index == 2 ? a + 1 : a + b + 1;
    const int size = index == 1 ? a : index == 2 ? b : c;
    std::vector<Vertex> out(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) out[static_cast<std::size_t>(i)] = start + i;
    return out;
}

bool Tripartition::is_tripartite(const Triple& t) const {
    const Triple s = Triple::of(t.a, t.b, t.c);
    if (s.a < 1 || s.c > order()) return false;
    return part_of(s.a) == 1 && part_of(s.b) == 2 && part_of(s.c) == 3;
}

namespace {

void add_d(std::vector<Triple>& edges, const std::vector<Vertex>& doubled, const std::vector<Vertex>& single) {
    for (std::size_t i = 0; i < doubled.size(); ++i) {
        for (std::size_t j = i + 1; j < doubled.size(); ++j) {
            for (Vertex s : single) edges.push_back(Triple::of(doubled[i], doubled[j], s));
        }
    }
}

}  // namespace

ThreeGraph build_D(int a, int b) {
    if (a < 0 || b < 0) throw ArgumentError("part sizes must be non-negative");
    const Tripartition parts{a, b, 0};
    std::vector<Triple> edges;
    add_d(edges, parts.part(1), parts.part(2));
    return ThreeGraph(a + b, edges);
}

ThreeGraph build_T(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw ArgumentError("part sizes must be non-negative");
    const Tripartition parts{a, b, c};
    const auto pa = parts.part(1);
    const auto pb = parts.part(2);
    const auto pc = parts.part(3);
    std::vector<Triple> edges;
    add_d(edges, pa, pb);
    add_d(edges, pb, pc);
    add_d(edges, pc, pa);
    return ThreeGraph(parts.order(), edges);
}

std::vector<VertexPair> overused_pairs(std::span<const Triple> triples) {
    std::map<VertexPair, int> uses;
    for (const Triple& raw : triples) {
        const Triple t = Triple::of(raw.a, raw.b, raw.c);
        ++uses[{t.a, t.b}];
        ++uses[{t.a, t.c}];
        ++uses[{t.b, t.c}];
    }
    std::vector<VertexPair> out;
    for (const auto& [pair, count] : uses) {
        if (count >= 2) out.push_back(pair);
    }
    return out;
}

bool is_tripartite_matching(std::span<const Triple> triples) { return overused_pairs(triples).empty(); }

namespace {

bool contains_pair(const Triple& t, const VertexPair& p) {
    auto has = [&](Vertex v) { return t.a == v || t.b == v || t.c == v; };
    return has(p.first) && has(p.second);
}

void require_tripartite(const Tripartition& parts, std::span<const Triple> f) {
    for (const Triple& t : f) {
        if (!parts.is_tripartite(t)) {
            const Triple s = Triple::of(t.a, t.b, t.c);
            throw ValidationError("triple {" + std::to_string(s.a) + "," + std::to_string(s.b) + "," +
                                  std::to_string(s.c) + "} is not tripartite");
        }
    }
}

std::string pair_text(const VertexPair& p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

}  // namespace

ThreeGraph add_tripartite(const Tripartition& parts, std::span<const Triple> f, TripartiteMode mode) {
    require_tripartite(parts, f);
    const auto overused = overused_pairs(f);
    if (mode == TripartiteMode::matching && !overused.empty()) {
        throw ValidationError("matching mode: pair " + pair_text(overused.front()) + " is overused");
    }
    const ThreeGraph t = build_T(parts.a, parts.b, parts.c);
    std::vector<Triple> edges;
    for (const Triple& e : t.edges()) {
        const bool through_overused =
            std::any_of(overused.begin(), overused.end(), [&](const VertexPair& p) { return contains_pair(e, p); });
        if (!through_overused) edges.push_back(e);
    }
    edges.insert(edges.end(), f.begin(), f.end());
    return ThreeGraph(parts.order(), edges);
}

std::vector<Triple> random_tripartite_matching(const Tripartition& parts, std::mt19937_64& rng) {
    std::vector<Triple> candidates;
    for (Vertex x : parts.part(1)) {
        for (Vertex y : parts.part(2)) {
            for (Vertex z : parts.part(3)) candidates.push_back({x, y, z});
        }
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::set<VertexPair> used;
    std::vector<Triple> out;
    for (const Triple& t : candidates) {
        const VertexPair p1{t.a, t.b}, p2{t.a, t.c}, p3{t.b, t.c};
        if (used.count(p1) || used.count(p2) || used.count(p3)) continue;
        used.insert({p1, p2, p3});
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

LatinColouring::LatinColouring(int m, std::vector<int> colours) : m_(m), colours_(std::move(colours)) {
    if (m < 1) throw ArgumentError("colouring size must be positive");
    if (colours_.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(m)) {
        throw ArgumentError("colouring must have m*m entries");
    }
}

LatinColouring LatinColouring::cyclic(int m) {
    if (m < 1) throw ArgumentError("colouring size must be positive");
    std::vector<int> colours;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) colours.push_back((i + j) % m);
    }
    return {m, colours};
}

LatinColouring LatinColouring::parse(std::string_view text) {
    std::vector<std::vector<int>> rows(1);
    int value = 0;
    bool have = false;
    for (char ch : text) {
        if (ch >= '0' && ch <= '9') {
            value = value * 10 + (ch - '0');
            have = true;
        } else if (ch == ',' || ch == ';') {
            if (!have) throw ParseError("empty entry in colouring");
            rows.back().push_back(value);
            value = 0;
            have = false;
            if (ch == ';') rows.emplace_back();
        } else if (ch != ' ') {
            throw ParseError(std::string("unexpected character '") + ch + "' in colouring");
        }
    }
    if (!have) throw ParseError("empty entry in colouring");
    rows.back().push_back(value);
    const int m = static_cast<int>(rows.size());
    std::vector<int> colours;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != m) throw ParseError("colouring must be square");
        colours.insert(colours.end(), row.begin(), row.end());
    }
    return {m, colours};
}

bool LatinColouring::is_proper() const {
    for (int i = 0; i < m_; ++i) {
        std::vector<bool> row(static_cast<std::size_t>(m_), false);
        std::vector<bool> col(static_cast<std::size_t>(m_), false);
        for (int j = 0; j < m_; ++j) {
            const int r = (*this)(i, j);
            const int c = (*this)(j, i);
            if (r < 0 || r >= m_ || c < 0 || c >= m_ || row[r] || col[c]) return false;
            row[r] = true;
            col[c] = true;
        }
    }
    return true;
}

ThreeGraph build_CT(int n, const std::optional<LatinColouring>& colouring) {
    if (n < 3 || n % 3 != 0) throw ArgumentError("CT(n) needs n = 3m with m >= 1");
    const int m = n / 3;
    const LatinColouring phi = colouring ? *colouring : LatinColouring::cyclic(m);
    if (phi.size() != m) throw ArgumentError("colouring size must be m = n/3");
    if (!phi.is_proper()) throw ValidationError("colouring is not proper (a colour repeats in a row or column)");
    const Tripartition parts{m, m, m};
    std::vector<Triple> f;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) f.push_back({1 + i, m + 1 + j, 2 * m + 1 + phi(i, j)});
    }
    return add_tripartite(parts, f, TripartiteMode::matching);
}

ThreeGraph build_CT_mod2(int n, const std::optional<LatinColouring>& colouring) {
    if (n < 5 || n % 3 != 2) throw ArgumentError("CT(3m+2) needs n = 3m+2 with m >= 1");
    const ThreeGraph full = build_CT(n + 1, colouring);
    std::vector<Vertex> keep(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) keep[static_cast<std::size_t>(i)] = i + 1;
    return full.induced(keep);
}

namespace {

struct Demand {
    VertexPair pair;
    int need = 0;
};

// Backtracking completion of a tripartite edge set: satisfies every demand
// (pair covered by at least `need` triples) trying the least legal third
// vertex first, never giving a pair outside `s` a second triple.
class Completion {
public:
    Completion(Tripartition parts, std::vector<VertexPair> s, std::vector<Triple> initial, std::vector<Demand> demands)
        : parts_(parts), s_(s.begin(), s.end()), f_(std::move(initial)), demands_(std::move(demands)) {
        for (const Triple& t : f_) record(t, +1);
    }

    std::vector<Triple> solve() {
        if (!dfs()) throw ValidationError("no tripartite completion satisfies the family's rules");
        std::sort(f_.begin(), f_.end());
        return f_;
    }

private:
    static constexpr long kBudget = 5'000'000;

    int uses(const VertexPair& p) const {
        const auto it = uses_.find(p);
        return it == uses_.end() ? 0 : it->second;
    }

    void record(const Triple& t, int delta) {
        uses_[{t.a, t.b}] += delta;
        uses_[{t.a, t.c}] += delta;
        uses_[{t.b, t.c}] += delta;
        if (delta > 0) {
            present_.insert(t);
        } else {
            present_.erase(t);
        }
    }

    bool legal(const Triple& t) const {
        if (present_.count(t)) return false;
        for (const VertexPair& p : {VertexPair{t.a, t.b}, VertexPair{t.a, t.c}, VertexPair{t.b, t.c}}) {
            if (!s_.count(p) && uses(p) > 0) return false;
        }
        return true;
    }

    bool dfs() {
        if (++nodes_ > kBudget) throw ValidationError("tripartite completion search exceeded its budget");
        const Demand* open = nullptr;
        for (const Demand& d : demands_) {
            if (uses(d.pair) < d.need) {
                open = &d;
                break;
            }
        }
        if (!open) return true;
        const int missing = 6 - parts_.part_of(open->pair.first) - parts_.part_of(open->pair.second);
        for (Vertex w : parts_.part(missing)) {
            const Triple t = Triple::of(open->pair.first, open->pair.second, w);
            if (!legal(t)) continue;
            f_.push_back(t);
            record(t, +1);
            if (dfs()) return true;
            record(t, -1);
            f_.pop_back();
        }
        return false;
    }

    Tripartition parts_;
    std::set<VertexPair> s_;
    std::vector<Triple> f_;
    std::vector<Demand> demands_;
    std::map<VertexPair, int> uses_;
    std::set<Triple> present_;
    long nodes_ = 0;
};

std::map<VertexPair, int> pair_uses(std::span<const Triple> f) {
    std::map<VertexPair, int> uses;
    for (const Triple& t : f) {
        ++uses[{t.a, t.b}];
        ++uses[{t.a, t.c}];
        ++uses[{t.b, t.c}];
    }
    return uses;
}

int uses_of(const std::map<VertexPair, int>& uses, const VertexPair& p) {
    const auto it = uses.find(p);
    return it == uses.end() ? 0 : it->second;
}

// T minus the T-edges through `s`, plus `added`.
ThreeGraph assemble(const Tripartition& parts, std::span<const VertexPair> s, std::span<const Triple> added) {
    const ThreeGraph t = build_T(parts.a, parts.b, parts.c);
    std::vector<Triple> edges;
    for (const Triple& e : t.edges()) {
        if (std::none_of(s.begin(), s.end(), [&](const VertexPair& p) { return contains_pair(e, p); })) edges.push_back(e);
    }
    edges.insert(edges.end(), added.begin(), added.end());
    return ThreeGraph(parts.order(), edges);
}

void require_no_other_overuse(std::span<const Triple> added, std::span<const VertexPair> s, const std::string& family) {
    for (const VertexPair& p : overused_pairs(added)) {
        if (std::find(s.begin(), s.end(), p) == s.end()) {
            throw ValidationError(family + ": overused pair " + pair_text(p) + " outside S");
        }
    }
}

void require_ac_covered(const Tripartition& parts, std::span<const Triple> added, const std::string& family) {
    const auto uses = pair_uses(added);
    for (Vertex a : parts.part(1)) {
        for (Vertex c : parts.part(3)) {
            if (uses_of(uses, {a, c}) == 0) {
                throw ValidationError(family + ": pair " + pair_text({a, c}) + " lies in no tripartite edge");
            }
        }
    }
}

}  // namespace

TripartiteBuild build_CT1_detailed(int m) {
    if (m < 2) throw ArgumentError("CT_1(3m+1) needs m >= 2");
    TripartiteBuild out;
    out.parts = {m, m + 2, m - 1};
    // b = (i + j) mod (m+2) is a partial Latin rectangle: no pair repeats.
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m - 1; ++j) out.added.push_back({1 + i, m + 1 + (i + j) % (m + 2), 2 * m + 3 + j});
    }
    std::sort(out.added.begin(), out.added.end());
    require_tripartite(out.parts, out.added);
    require_no_other_overuse(out.added, {}, "CT_1");
    require_ac_covered(out.parts, out.added, "CT_1");
    out.graph = assemble(out.parts, {}, out.added);
    return out;
}

TripartiteBuild build_CT2_detailed(int m, int k) {
    if (m < 2) throw ArgumentError("CT_2(3m+1) needs m >= 2");
    if (k < 0 || k > m + 1) throw ArgumentError("CT_2 needs 0 <= k <= m+1");
    TripartiteBuild out;
    out.parts = {m + 1, m + 1, m - 1};
    for (int i = 0; i < k; ++i) out.s.push_back({1 + i, m + 2 + i});
    std::vector<Triple> initial;
    for (const VertexPair& p : out.s) {
        for (Vertex c : out.parts.part(3)) initial.push_back({p.first, p.second, c});
    }
    // The a and b outside S pair up cyclically; this needs as many free b as
    // there are colours, so 3 <= k <= m has no completion at all.
    const int free = m + 1 - k;
    if (free > 0 && free < m - 1) {
        throw ValidationError("CT_2: k = " + std::to_string(k) + " leaves " + std::to_string(free) +
                              " free B vertices for " + std::to_string(m - 1) + " colours; no completion exists");
    }
    out.added = initial;
    for (int i = 0; i < free; ++i) {
        for (int j = 0; j < m - 1; ++j) {
            out.added.push_back({1 + k + i, m + 2 + k + (i + j) % free, 2 * m + 3 + j});
        }
    }
    std::sort(out.added.begin(), out.added.end());
    require_tripartite(out.parts, out.added);
    require_no_other_overuse(out.added, out.s, "CT_2");
    require_ac_covered(out.parts, out.added, "CT_2");
    const auto uses = pair_uses(out.added);
    for (const VertexPair& p : out.s) {
        if (uses_of(uses, p) != m - 1) throw ValidationError("CT_2: S pair " + pair_text(p) + " is not in every {a,b,c}");
    }
    out.graph = assemble(out.parts, out.s, out.added);
    return out;
}

namespace {

// Orientation of an S pair: (x, y) with x in V_i and y in V_{i+1}; returns i.
int oriented(const Tripartition& parts, VertexPair& p) {
    const int i = parts.part_of(p.first);
    const int j = parts.part_of(p.second);
    if (j == i % 3 + 1) return i;
    if (i == j % 3 + 1) {
        std::swap(p.first, p.second);
        return j;
    }
    throw ValidationError("CT_3: S pair " + pair_text(make_pair_of(p.first, p.second)) +
                          " is not in some V_i x V_{i+1}");
}

}  // namespace

std::vector<VertexPair> ct3_cycle(int m) {
    const Tripartition parts{m + 1, m, m};
    const Vertex x1 = 1, x2 = parts.a + 1, x3 = parts.a + parts.b + 1;
    return {make_pair_of(x1, x2), make_pair_of(x2, x3), make_pair_of(x1, x3)};
}

TripartiteBuild build_CT3_detailed(int m, std::span<const VertexPair> s) {
    if (m < 2) throw ArgumentError("CT_3(3m+1) needs m >= 2");
    TripartiteBuild out;
    out.parts = {m + 1, m, m};
    std::vector<VertexPair> oriented_s;
    std::vector<int> from(4, 0);
    for (VertexPair p : s) {
        if (p.first == p.second) throw ValidationError("CT_3: S pair with a repeated vertex");
        const int i = oriented(out.parts, p);
        if (from[i] != 0) throw ValidationError("CT_3: S has two pairs from V_" + std::to_string(i) + " x V_" +
                                                std::to_string(i % 3 + 1));
        from[i] = static_cast<int>(oriented_s.size()) + 1;
        oriented_s.push_back(p);
    }
    // For i in {1, 3}, pairs in V_{i-1} x V_i and V_i x V_{i+1} share their V_i vertex.
    for (int i : {1, 3}) {
        const int prev = i == 1 ? 3 : i - 1;
        if (from[prev] && from[i] && oriented_s[from[prev] - 1].second != oriented_s[from[i] - 1].first) {
            throw ValidationError("CT_3: S pairs meeting V_" + std::to_string(i) + " must share their V_" +
                                  std::to_string(i) + " vertex");
        }
    }
    for (const VertexPair& p : oriented_s) out.s.push_back(make_pair_of(p.first, p.second));

    std::vector<Demand> demands;
    for (const VertexPair& p : out.s) demands.push_back({p, m - 1});
    std::vector<VertexPair> exactly_once;
    for (const VertexPair& p : oriented_s) {
        const int i = out.parts.part_of(p.first);
        if (i == 1) continue;  // |V_1| = m + 1
        for (Vertex x : out.parts.part(i)) {
            if (x != p.first) exactly_once.push_back(make_pair_of(x, p.second));
        }
    }
    for (const VertexPair& p : exactly_once) demands.push_back({p, 1});

    out.added = Completion(out.parts, out.s, {}, demands).solve();
    require_tripartite(out.parts, out.added);
    require_no_other_overuse(out.added, out.s, "CT_3");
    const auto uses = pair_uses(out.added);
    for (const VertexPair& p : out.s) {
        if (uses_of(uses, p) < m - 1) {
            throw ValidationError("CT_3: S pair " + pair_text(p) + " lies in fewer than m-1 added edges");
        }
    }
    for (const VertexPair& p : exactly_once) {
        if (uses_of(uses, p) != 1) {
            throw ValidationError("CT_3: pair " + pair_text(p) + " must lie in exactly one tripartite edge");
        }
    }
    out.graph = assemble(out.parts, out.s, out.added);
    return out;
}

ThreeGraph build_CT1(int m) { return build_CT1_detailed(m).graph; }
ThreeGraph build_CT2(int m, int k) { return build_CT2_detailed(m, k).graph; }
ThreeGraph build_CT3(int m, std::span<const VertexPair> s) { return build_CT3_detailed(m, s).graph; }

std::vector<ThreeGraph> sharp_compatible_graphs(int order, bool phantom) {
    if (order < 1 || order > 7) throw CapabilityError("sharp-compatible enumeration supports orders 1..7");
    ThreeGraph host = build_T(order, order, order);
    if (phantom) host = host.with_edges(std::vector<Triple>{{1, order + 1, 2 * order + 1}});
    const int n = host.order();
    std::map<std::string, ThreeGraph> found;
    std::vector<Vertex> subset(static_cast<std::size_t>(order));
    auto rec = [&](auto&& self, int pos, Vertex start) -> void {
        if (pos == order) {
            ThreeGraph g = canonical_form(host.induced(subset));
            auto key = g.to_string();
            found.emplace(std::move(key), std::move(g));
            return;
        }
        for (Vertex v = start; v <= n - (order - pos - 1); ++v) {
            subset[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
    std::vector<ThreeGraph> out;
    for (auto& [key, g] : found) out.push_back(std::move(g));
    std::sort(out.begin(), out.end(), [](const ThreeGraph& a, const ThreeGraph& b) { return listing_order(a, b) < 0; });
    return out;
}

ThreeGraph build_construction(const ConstructionSpec& spec) {
    const std::string& f = spec.family;
    if (f == "D") {
        if (spec.sizes.size() != 2) throw ArgumentError("family D needs sizes a,b");
        return build_D(spec.sizes[0], spec.sizes[1]);
    }
    if (f == "T") {
        if (spec.sizes.size() != 3) throw ArgumentError("family T needs sizes a,b,c");
        return build_T(spec.sizes[0], spec.sizes[1], spec.sizes[2]);
    }
    if (f == "CT0") return build_CT(spec.n, spec.colouring);
    if (f == "CT2") return build_CT_mod2(spec.n, spec.colouring);
    if (f == "CT1a") return build_CT1(spec.m);
    if (f == "CT1b") return build_CT2(spec.m, spec.k);
    if (f == "CT1c") return build_CT3(spec.m, spec.s);
    throw ArgumentError("unknown family \"" + f + "\" (expected D, T, CT0, CT2, CT1a, CT1b, CT1c)");
}

GraphStats graph_stats(const ThreeGraph& g) {
    GraphStats s;
    s.order = g.order();
    s.edges = g.edge_count();
    if (g.order() >= 2) s.min_codegree = min_codegree(g);
    s.f32_free = is_f32_free(g);
    return s;
}

std::string stats_json(const GraphStats& stats, const ConstructionSpec* spec) {
    nlohmann::ordered_json doc;
    if (spec) doc["family"] = spec->family;
    doc["n"] = stats.order;
    doc["e"] = stats.edges;
    if (stats.min_codegree) {
        doc["delta2"] = *stats.min_codegree;
    } else {
        doc["delta2"] = nullptr;
    }
    doc["f32_free"] = stats.f32_free;
    if (spec) {
        if (!spec->sizes.empty()) doc["sizes"] = spec->sizes;
        if (spec->family == "CT0" || spec->family == "CT2") doc["colouring"] = spec->colouring ? "custom" : "cyclic";
        if (spec->m) doc["m"] = spec->m;
        if (spec->family == "CT1b") doc["k"] = spec->k;
        if (spec->family == "CT1c") {
            auto s = nlohmann::ordered_json::array();
            for (const auto& p : spec->s) s.push_back({p.first, p.second});
            doc["S"] = s;
        }
    }
    return doc.dump();
}

}  // namespace coex
