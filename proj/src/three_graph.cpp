#include "coex/three_graph.hpp"

#include "coex/errors.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

namespace coex {
namespace {

void check_order(int order) {
    if (order < 0) throw ArgumentError("graph order must be non-negative");
    if (order > kMaxOrder) {
        throw CapabilityError("graph order " + std::to_string(order) + " exceeds the supported maximum of " +
                              std::to_string(kMaxOrder));
    }
}

std::vector<Triple> normalize(int order, std::span<const Triple> edges) {
    std::vector<Triple> out;
    out.reserve(edges.size());
    for (const Triple& raw : edges) {
        const Triple t = Triple::of(raw.a, raw.b, raw.c);
        if (t.a < 1 || t.c > order) {
            throw ArgumentError("edge vertex outside 1.." + std::to_string(order));
        }
        if (t.a == t.b || t.b == t.c) throw ArgumentError("edge with repeated vertex");
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, std::string_view context) {
    s = strip(s);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("expected integer in \"" + std::string(context) + "\"");
    }
    return value;
}

ThreeGraph parse_list_form(std::string_view text) {
    // g{n=<int>; edges=[i,j,k;...]}
    std::string_view s = strip(text);
    if (s.size() < 3 || s.substr(0, 2) != "g{" || s.back() != '}') {
        throw ParseError("malformed graph \"" + std::string(text) + "\"");
    }
    s = s.substr(2, s.size() - 3);
    const auto semi = s.find(';');
    if (semi == std::string_view::npos) throw ParseError("missing ';' in \"" + std::string(text) + "\"");
    std::string_view head = strip(s.substr(0, semi));
    std::string_view tail = strip(s.substr(semi + 1));
    if (head.substr(0, 2) != "n=") throw ParseError("missing n= in \"" + std::string(text) + "\"");
    const int order = parse_int(head.substr(2), text);
    if (tail.substr(0, 7) != "edges=[" || tail.back() != ']') {
        throw ParseError("missing edges=[...] in \"" + std::string(text) + "\"");
    }
    tail = tail.substr(7, tail.size() - 8);
    std::vector<Triple> edges;
    while (!strip(tail).empty()) {
        const auto end = tail.find(';');
        std::string_view item = tail.substr(0, end);
        std::array<int, 3> v{};
        for (int i = 0; i < 3; ++i) {
            const auto comma = item.find(',');
            if ((i < 2) == (comma == std::string_view::npos)) {
                throw ParseError("edge must have three vertices in \"" + std::string(text) + "\"");
            }
            v[i] = parse_int(item.substr(0, comma), text);
            item = comma == std::string_view::npos ? std::string_view() : item.substr(comma + 1);
        }
        edges.push_back({v[0], v[1], v[2]});
        if (end == std::string_view::npos) break;
        tail = tail.substr(end + 1);
    }
    try {
        return ThreeGraph(order, edges);
    } catch (const ArgumentError& e) {
        throw ParseError(std::string(e.what()) + " in \"" + std::string(text) + "\"");
    }
}

ThreeGraph parse_short_form(std::string_view text) {
    const std::string_view s = strip(text);
    if (s.size() < 2 || s[1] != ':' || !std::isdigit(static_cast<unsigned char>(s[0]))) {
        throw ParseError("malformed graph \"" + std::string(text) + "\"");
    }
    const int order = s[0] - '0';
    const std::string_view body = s.substr(2);
    if (body.size() % 3 != 0) throw ParseError("edge list length not a multiple of 3 in \"" + std::string(text) + "\"");
    std::vector<Triple> edges;
    Triple previous{};
    for (std::size_t i = 0; i < body.size(); i += 3) {
        std::array<int, 3> v{};
        for (int j = 0; j < 3; ++j) {
            const char ch = body[i + j];
            if (ch < '1' || ch > '9') throw ParseError("bad vertex character in \"" + std::string(text) + "\"");
            v[j] = ch - '0';
        }
        if (!(v[0] < v[1] && v[1] < v[2])) {
            throw ParseError("edge vertices must be ascending in \"" + std::string(text) + "\"");
        }
        const Triple t{v[0], v[1], v[2]};
        if (!edges.empty() && !(previous < t)) {
            throw ParseError("edges must be sorted and distinct in \"" + std::string(text) + "\"");
        }
        if (t.c > order) throw ParseError("vertex exceeds order in \"" + std::string(text) + "\"");
        edges.push_back(t);
        previous = t;
    }
    return ThreeGraph(order, edges);
}

}  // namespace

ThreeGraph::ThreeGraph(int order) : order_(order) {
    check_order(order);
    build_links();
}

ThreeGraph::ThreeGraph(int order, std::span<const Triple> edges) : order_(order) {
    check_order(order);
    edges_ = normalize(order, edges);
    build_links();
}

ThreeGraph::ThreeGraph(int order, std::initializer_list<Triple> edges)
    : ThreeGraph(order, std::span<const Triple>(edges.begin(), edges.size())) {}

ThreeGraph::ThreeGraph(int order, std::vector<Triple> edges)
    : ThreeGraph(order, std::span<const Triple>(edges)) {}

void ThreeGraph::build_links() {
    links_.assign(static_cast<std::size_t>(order_ * order_), 0);
    auto set = [this](Vertex x, Vertex y, Vertex z) {
        links_[static_cast<std::size_t>((x - 1) * order_ + (y - 1))] |= std::uint64_t{1} << (z - 1);
    };
    for (const Triple& t : edges_) {
        set(t.a, t.b, t.c);
        set(t.b, t.a, t.c);
        set(t.a, t.c, t.b);
        set(t.c, t.a, t.b);
        set(t.b, t.c, t.a);
        set(t.c, t.b, t.a);
    }
}

int ThreeGraph::codegree(Vertex x, Vertex y) const { return std::popcount(link_mask(x, y)); }

int ThreeGraph::degree(Vertex v) const {
    int total = 0;
    for (Vertex u = 1; u <= order_; ++u) {
        if (u != v) total += codegree(v, u);
    }
    return total / 2;
}

ThreeGraph ThreeGraph::induced(std::span<const Vertex> vertices) const {
    const int k = static_cast<int>(vertices.size());
    std::vector<Triple> out;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const std::uint64_t link = link_mask(vertices[i], vertices[j]);
            if (link == 0) continue;
            for (int l = j + 1; l < k; ++l) {
                if ((link >> (vertices[l] - 1)) & 1U) out.push_back({i + 1, j + 1, l + 1});
            }
        }
    }
    return ThreeGraph(k, out);
}

ThreeGraph ThreeGraph::relabeled(std::span<const Vertex> new_label) const {
    std::vector<Triple> out;
    out.reserve(edges_.size());
    for (const Triple& t : edges_) {
        out.push_back(Triple::of(new_label[t.a - 1], new_label[t.b - 1], new_label[t.c - 1]));
    }
    return ThreeGraph(order_, out);
}

ThreeGraph ThreeGraph::with_edges(std::span<const Triple> extra) const {
    std::vector<Triple> all = edges_;
    all.insert(all.end(), extra.begin(), extra.end());
    return ThreeGraph(order_, all);
}

ThreeGraph ThreeGraph::with_vertex() const { return ThreeGraph(order_ + 1, edges_); }

std::string ThreeGraph::to_string() const {
    std::string out;
    if (order_ <= 9) {
        out.reserve(2 + 3 * edges_.size());
        out.push_back(static_cast<char>('0' + order_));
        out.push_back(':');
        for (const Triple& t : edges_) {
            out.push_back(static_cast<char>('0' + t.a));
            out.push_back(static_cast<char>('0' + t.b));
            out.push_back(static_cast<char>('0' + t.c));
        }
        return out;
    }
    out = "g{n=" + std::to_string(order_) + "; edges=[";
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (i > 0) out += ';';
        out += std::to_string(edges_[i].a) + ',' + std::to_string(edges_[i].b) + ',' +
               std::to_string(edges_[i].c);
    }
    out += "]}";
    return out;
}

std::strong_ordering listing_order(const ThreeGraph& lhs, const ThreeGraph& rhs) {
    if (auto c = lhs.order() <=> rhs.order(); c != 0) return c;
    if (auto c = lhs.edge_count() <=> rhs.edge_count(); c != 0) return c;
    return std::lexicographical_compare_three_way(lhs.edges().begin(), lhs.edges().end(),
                                                  rhs.edges().begin(), rhs.edges().end());
}

ThreeGraph RootedGraph::type_graph() const {
    std::vector<Vertex> roots_list(static_cast<std::size_t>(roots));
    for (int i = 0; i < roots; ++i) roots_list[static_cast<std::size_t>(i)] = i + 1;
    return graph.induced(roots_list);
}

std::string RootedGraph::to_string() const {
    return graph.to_string() + "(" + std::to_string(roots) + ")";
}

std::strong_ordering listing_order(const RootedGraph& lhs, const RootedGraph& rhs) {
    if (auto c = lhs.roots <=> rhs.roots; c != 0) return c;
    return listing_order(lhs.graph, rhs.graph);
}

ThreeGraph parse_graph(std::string_view text) {
    const std::string_view s = strip(text);
    if (!s.empty() && s.front() == 'g') return parse_list_form(s);
    return parse_short_form(s);
}

RootedGraph parse_rooted(std::string_view text) {
    const std::string_view s = strip(text);
    const auto open = s.rfind('(');
    if (open == std::string_view::npos || s.back() != ')') {
        throw ParseError("rooted graph needs a \"(t)\" suffix: \"" + std::string(text) + "\"");
    }
    RootedGraph out{parse_graph(s.substr(0, open)), 0};
    out.roots = parse_int(s.substr(open + 1, s.size() - open - 2), text);
    if (out.roots < 0 || out.roots > out.graph.order()) {
        throw ParseError("root count out of range in \"" + std::string(text) + "\"");
    }
    return out;
}

std::vector<VertexPair> all_pairs(int order) {
    std::vector<VertexPair> out;
    out.reserve(static_cast<std::size_t>(order * (order - 1) / 2));
    for (Vertex x = 1; x <= order; ++x) {
        for (Vertex y = x + 1; y <= order; ++y) out.emplace_back(x, y);
    }
    return out;
}

}  // namespace coex
