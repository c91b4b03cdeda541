#include "coex/hypergraph.hpp"

#include "coex/errors.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <string>

namespace coex {
namespace {

std::string lower_name(std::string_view s) {
    std::string out(s);
    for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return out;
}

std::uint64_t all_vertices(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

class Embedder {
public:
    Embedder(const ThreeGraph& g, const ThreeGraph& h) : g_(g), h_(h) {
        const int k = h.order();
        order_.resize(static_cast<std::size_t>(k));
        std::iota(order_.begin(), order_.end(), 1);
        std::vector<int> hdeg(static_cast<std::size_t>(k + 1));
        for (Vertex v = 1; v <= k; ++v) hdeg[v] = h.degree(v);
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return hdeg[a] > hdeg[b]; });
        std::vector<int> position(static_cast<std::size_t>(k + 1));
        for (int i = 0; i < k; ++i) position[order_[i]] = i;
        closing_.resize(static_cast<std::size_t>(k));
        for (const Triple& t : h.edges()) {
            std::array<int, 3> p{position[t.a], position[t.b], position[t.c]};
            std::sort(p.begin(), p.end());
            closing_[p[2]].push_back({p[0], p[1]});
        }
        min_degree_.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) min_degree_[i] = hdeg[order_[i]];
        gdeg_.resize(static_cast<std::size_t>(g.order() + 1));
        for (Vertex v = 1; v <= g.order(); ++v) gdeg_[v] = g.degree(v);
        image_.assign(static_cast<std::size_t>(k), 0);
    }

    bool search(int pos, std::uint64_t used) {
        if (pos == h_.order()) return true;
        std::uint64_t candidates = all_vertices(g_.order()) & ~used;
        for (const auto& [p, q] : closing_[pos]) candidates &= g_.link_mask(image_[p], image_[q]);
        while (candidates != 0) {
            const int bit = std::countr_zero(candidates);
            candidates &= candidates - 1;
            const Vertex v = bit + 1;
            if (gdeg_[v] < min_degree_[pos]) continue;
            image_[pos] = v;
            if (search(pos + 1, used | (std::uint64_t{1} << bit))) return true;
        }
        return false;
    }

    std::vector<Vertex> embedding() const {
        std::vector<Vertex> out(static_cast<std::size_t>(h_.order()));
        for (int i = 0; i < h_.order(); ++i) out[static_cast<std::size_t>(order_[i] - 1)] = image_[i];
        return out;
    }

private:
    const ThreeGraph& g_;
    const ThreeGraph& h_;
    std::vector<Vertex> order_;
    std::vector<std::vector<std::pair<int, int>>> closing_;
    std::vector<int> min_degree_;
    std::vector<int> gdeg_;
    std::vector<Vertex> image_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_embedding(const ThreeGraph& g, const ThreeGraph& h) {
    if (h.order() > g.order() || h.edge_count() > g.edge_count()) return std::nullopt;
    Embedder e(g, h);
    if (!e.search(0, 0)) return std::nullopt;
    return e.embedding();
}

bool contains(const ThreeGraph& g, const ThreeGraph& h) { return find_embedding(g, h).has_value(); }

bool is_free_of(const ThreeGraph& g, std::span<const ThreeGraph> forbidden) {
    return std::none_of(forbidden.begin(), forbidden.end(), [&](const ThreeGraph& f) { return contains(g, f); });
}

std::vector<Vertex> joint_neighbourhood(const ThreeGraph& g, Vertex x, Vertex y) {
    if (x == y) throw ArgumentError("joint neighbourhood needs two distinct vertices");
    if (x < 1 || y < 1 || x > g.order() || y > g.order()) throw ArgumentError("vertex out of range");
    std::vector<Vertex> out;
    for (std::uint64_t m = g.link_mask(x, y); m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

int min_codegree(const ThreeGraph& g) {
    if (g.order() < 2) throw ArgumentError("minimum codegree needs at least 2 vertices");
    int best = g.order();
    for (Vertex x = 1; x <= g.order(); ++x) {
        for (Vertex y = x + 1; y <= g.order(); ++y) best = std::min(best, g.codegree(x, y));
    }
    return best;
}

bool is_f32_free(const ThreeGraph& g) {
    const int n = g.order();
    for (Vertex x = 1; x <= n; ++x) {
        for (Vertex y = x + 1; y <= n; ++y) {
            const std::uint64_t gamma = g.link_mask(x, y);
            if (std::popcount(gamma) < 3) continue;
            for (std::uint64_t a = gamma; a != 0; a &= a - 1) {
                const Vertex va = std::countr_zero(a) + 1;
                for (std::uint64_t b = a & (a - 1); b != 0; b &= b - 1) {
                    const Vertex vb = std::countr_zero(b) + 1;
                    if ((g.link_mask(va, vb) & gamma) != 0) return false;
                }
            }
        }
    }
    return true;
}

ThreeGraph blow_up(const ThreeGraph& f, int t) {
    if (t < 1) throw ArgumentError("blow-up factor must be positive");
    std::vector<Triple> edges;
    edges.reserve(f.edge_count() * static_cast<std::size_t>(t * t * t));
    auto copy = [t](Vertex v, int i) { return (v - 1) * t + i + 1; };
    for (const Triple& e : f.edges()) {
        for (int i = 0; i < t; ++i) {
            for (int j = 0; j < t; ++j) {
                for (int k = 0; k < t; ++k) edges.push_back({copy(e.a, i), copy(e.b, j), copy(e.c, k)});
            }
        }
    }
    return ThreeGraph(f.order() * t, edges);
}

namespace named {

ThreeGraph f32() { return ThreeGraph(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {3, 4, 5}}); }
ThreeGraph k4() { return ThreeGraph(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}); }
ThreeGraph k4_minus() { return ThreeGraph(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}); }
ThreeGraph k3() { return ThreeGraph(3, {{1, 2, 3}}); }

ThreeGraph fano() {
    return ThreeGraph(7, {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {1, 5, 6}, {2, 6, 7}, {1, 3, 7}});
}

ThreeGraph star(int k) {
    if (k < 1) throw ArgumentError("star needs k >= 1");
    std::vector<Triple> edges;
    for (Vertex i = 2; i <= k + 1; ++i) {
        for (Vertex j = i + 1; j <= k + 1; ++j) edges.push_back({1, i, j});
    }
    return ThreeGraph(k + 1, edges);
}

ThreeGraph star_prime(int k) {
    if (k < 1) throw ArgumentError("S'_k needs k >= 1");
    std::vector<Triple> edges;
    for (Vertex centre = 1; centre <= 2; ++centre) {
        for (Vertex i = 3; i <= k + 2; ++i) {
            for (Vertex j = i + 1; j <= k + 2; ++j) edges.push_back({centre, i, j});
        }
    }
    return ThreeGraph(k + 2, edges);
}

ThreeGraph k4_doubled() {
    // a=1 b=2 c1=3 c2=4 d1=5 d2=6
    return ThreeGraph(6, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
                          {1, 4, 6}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6}});
}

namespace {

std::optional<int> suffix_number(std::string_view s, std::string_view prefix) {
    if (s.substr(0, prefix.size()) != prefix) return std::nullopt;
    s.remove_prefix(prefix.size());
    if (!s.empty() && s.front() == '_') s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
    int value = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
        value = value * 10 + (ch - '0');
    }
    return value;
}

}  // namespace

ThreeGraph lookup(std::string_view name) {
    const std::string key = lower_name(name);
    if (key == "f32") return f32();
    if (key == "k4") return k4();
    if (key == "k4minus" || key == "k4-") return k4_minus();
    if (key == "k3") return k3();
    if (key == "fano") return fano();
    if (key == "k4doubled" || key == "k4''") return k4_doubled();
    if (auto k = suffix_number(key, "sprime")) return star_prime(*k);
    if (auto k = suffix_number(key, "s")) return star(*k);
    return parse_graph(name);
}

}  // namespace named

std::vector<ThreeGraph> parse_graph_list(std::string_view text) {
    std::vector<ThreeGraph> out;
    std::string item;
    int depth = 0;
    auto flush = [&] {
        std::string_view s = item;
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        if (!s.empty() && lower_name(s) != "none") out.push_back(named::lookup(s));
        item.clear();
    };
    for (char ch : text) {
        if (ch == '{' || ch == '[') ++depth;
        if (ch == '}' || ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            flush();
        } else {
            item.push_back(ch);
        }
    }
    flush();
    return out;
}

}  // namespace coex
