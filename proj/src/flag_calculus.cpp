#include "coex/flag_calculus.hpp"

#include "coex/canonical.hpp"
#include "coex/errors.hpp"
#include "coex/parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace coex {
namespace {

std::vector<std::vector<Vertex>> subsets_of_size(const std::vector<Vertex>& pool, int size) {
    std::vector<std::vector<Vertex>> out;
    if (size < 0 || size > static_cast<int>(pool.size())) return out;
    std::vector<Vertex> current;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(current.size()) == size) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            current.push_back(pool[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Vertex> outside(const ThreeGraph& host, std::span<const Vertex> chosen) {
    std::vector<Vertex> rest;
    for (Vertex v = 1; v <= host.order(); ++v) {
        if (std::find(chosen.begin(), chosen.end(), v) == chosen.end()) rest.push_back(v);
    }
    return rest;
}

std::string rooted_key(const ThreeGraph& host, std::span<const Vertex> roots, std::span<const Vertex> extension) {
    std::vector<Vertex> vertices(roots.begin(), roots.end());
    vertices.insert(vertices.end(), extension.begin(), extension.end());
    return rooted_canonical_string({host.induced(vertices), static_cast<int>(roots.size())});
}

template <class Visit>
void for_each_tuple(int n, int k, Visit&& visit) {
    std::vector<Vertex> tuple(static_cast<std::size_t>(k));
    std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == k) {
            visit(std::span<const Vertex>(tuple));
            return;
        }
        for (Vertex v = 1; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            tuple[pos] = v;
            self(self, pos + 1);
            used[v] = false;
        }
    };
    rec(rec, 0);
}

// Calls visit(sigma) for each injective tuple of host vertices inducing `type`.
template <class Visit>
void for_each_rooting(const ThreeGraph& type, const ThreeGraph& host, Visit&& visit) {
    for_each_tuple(host.order(), type.order(), [&](std::span<const Vertex> sigma) {
        if (host.induced(sigma) == type) visit(sigma);
    });
}

bool disjoint(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return std::none_of(a.begin(), a.end(), [&](Vertex v) { return std::find(b.begin(), b.end(), v) != b.end(); });
}

void check_flag_on_type(const RootedGraph& type, const RootedGraph& f) {
    if (f.roots != type.order() || f.type_graph() != type.graph) {
        throw ArgumentError("flag " + f.to_string() + " is not on type " + type.to_string());
    }
}

std::size_t require_index(const FlagBasis& basis, const std::string& key) {
    const auto idx = basis.find_key(key);
    if (!idx) throw std::logic_error("flag " + key + " missing from the basis of type " + basis.type().to_string());
    return *idx;
}

}  // namespace

long long count_p(const RootedGraph& flag, const ThreeGraph& host, std::span<const Vertex> roots) {
    if (static_cast<int>(roots.size()) != flag.roots) throw ArgumentError("root count does not match the flag");
    if (host.induced(roots) != flag.type_graph()) {
        throw PreconditionError("roots do not induce the type of " + flag.to_string());
    }
    const std::string target = rooted_canonical_string(flag);
    long long count = 0;
    for (const auto& ext : subsets_of_size(outside(host, roots), flag.order() - flag.roots)) {
        if (rooted_key(host, roots, ext) == target) ++count;
    }
    return count;
}

std::vector<long long> flag_profile(const FlagBasis& basis, const ThreeGraph& host, std::span<const Vertex> roots) {
    if (static_cast<int>(roots.size()) != basis.type_order()) throw ArgumentError("root count does not match the type");
    if (host.induced(roots) != basis.type().graph) {
        throw PreconditionError("roots do not induce the type " + basis.type().to_string());
    }
    std::vector<long long> profile(basis.size(), 0);
    for (const auto& ext : subsets_of_size(outside(host, roots), basis.flag_order() - basis.type_order())) {
        const auto idx = basis.find_key(rooted_key(host, roots, ext));
        if (idx) ++profile[*idx];
    }
    return profile;
}

long long joint_count(const RootedGraph& type, const RootedGraph& f1, const RootedGraph& f2, const ThreeGraph& host) {
    check_flag_on_type(type, f1);
    check_flag_on_type(type, f2);
    const int k = type.order();
    if (host.order() != f1.order() + f2.order() - k) {
        throw ArgumentError("joint_count needs a host of order " + std::to_string(f1.order() + f2.order() - k));
    }
    const std::string key1 = rooted_canonical_string(f1);
    const std::string key2 = rooted_canonical_string(f2);
    long long count = 0;
    for_each_rooting(type.graph, host, [&](std::span<const Vertex> sigma) {
        const auto rest = outside(host, sigma);
        const auto firsts = subsets_of_size(rest, f1.order() - k);
        const auto seconds = subsets_of_size(rest, f2.order() - k);
        for (const auto& x1 : firsts) {
            for (const auto& x2 : seconds) {
                if (x1.size() + x2.size() != rest.size() || !disjoint(x1, x2)) continue;
                if (rooted_key(host, sigma, x1) == key1 && rooted_key(host, sigma, x2) == key2) ++count;
            }
        }
    });
    return count;
}

long long overlap_count(const RootedGraph& type, const RootedGraph& f1, const RootedGraph& f2, const ThreeGraph& host) {
    check_flag_on_type(type, f1);
    check_flag_on_type(type, f2);
    const int k = type.order();
    const std::string key1 = rooted_canonical_string(f1);
    const std::string key2 = rooted_canonical_string(f2);
    long long count = 0;
    if (host.order() < type.order()) return 0;
    for_each_rooting(type.graph, host, [&](std::span<const Vertex> sigma) {
        const auto rest = outside(host, sigma);
        const auto firsts = subsets_of_size(rest, f1.order() - k);
        const auto seconds = subsets_of_size(rest, f2.order() - k);
        for (const auto& x1 : firsts) {
            if (rooted_key(host, sigma, x1) != key1) continue;
            for (const auto& x2 : seconds) {
                if (!disjoint(x1, x2) && rooted_key(host, sigma, x2) == key2) ++count;
            }
        }
    });
    return count;
}

AxiomCounts axiom_counts(const RootedGraph& axiom_flag, const ThreeGraph& host) {
    if (axiom_flag.roots != 2) throw ArgumentError("axiom flags have two roots");
    if (host.order() != axiom_flag.order() + 1) {
        throw ArgumentError("axiom counts need a host of order " + std::to_string(axiom_flag.order() + 1));
    }
    const std::string target = rooted_canonical_string(axiom_flag);
    AxiomCounts out;
    const int n = host.order();
    for (Vertex z = 1; z <= n; ++z) {
        for (Vertex s1 = 1; s1 <= n; ++s1) {
            for (Vertex s2 = 1; s2 <= n; ++s2) {
                if (s1 == s2 || s1 == z || s2 == z) continue;
                std::vector<Vertex> order{s1, s2};
                for (Vertex v = 1; v <= n; ++v) {
                    if (v != s1 && v != s2 && v != z) order.push_back(v);
                }
                if (rooted_canonical_string({host.induced(order), 2}) != target) continue;
                ++out.b;
                if (host.has_edge(s1, s2, z)) ++out.a;
            }
        }
    }
    return out;
}

namespace {

CountMatrix joint_table(const FlagBasis& basis, const ThreeGraph& host) {
    const int k = basis.type_order();
    const auto g = static_cast<Eigen::Index>(basis.size());
    CountMatrix joint = CountMatrix::Zero(g, g);
    if (2 * basis.flag_order() - k != host.order()) throw ArgumentError("host order does not match the flag basis");
    for_each_rooting(basis.type().graph, host, [&](std::span<const Vertex> sigma) {
        const auto rest = outside(host, sigma);
        for (const auto& x1 : subsets_of_size(rest, basis.flag_order() - k)) {
            std::vector<Vertex> x2;
            for (Vertex v : rest) {
                if (std::find(x1.begin(), x1.end(), v) == x1.end()) x2.push_back(v);
            }
            ++joint(require_index(basis, rooted_key(host, sigma, x1)), require_index(basis, rooted_key(host, sigma, x2)));
        }
    });
    return joint;
}

void axiom_table(const FlagBasis& axiom_basis, const ThreeGraph& host, HostTables& out) {
    out.axiom_a.assign(axiom_basis.size(), 0);
    out.axiom_b.assign(axiom_basis.size(), 0);
    const int n = host.order();
    for (Vertex z = 1; z <= n; ++z) {
        std::vector<Vertex> order;
        for (Vertex s1 = 1; s1 <= n; ++s1) {
            for (Vertex s2 = 1; s2 <= n; ++s2) {
                if (s1 == s2 || s1 == z || s2 == z) continue;
                order = {s1, s2};
                for (Vertex v = 1; v <= n; ++v) {
                    if (v != s1 && v != s2 && v != z) order.push_back(v);
                }
                const std::size_t j = require_index(axiom_basis, rooted_canonical_string({host.induced(order), 2}));
                ++out.axiom_b[j];
                if (host.has_edge(s1, s2, z)) ++out.axiom_a[j];
            }
        }
    }
}

long long identity_defect(const FlagBasis& basis, const ThreeGraph& host, const CountMatrix& joint) {
    const int k = basis.type_order();
    const int ext = basis.flag_order() - k;
    const auto g = static_cast<Eigen::Index>(basis.size());
    CountMatrix products = CountMatrix::Zero(g, g);
    CountMatrix overlap = CountMatrix::Zero(g, g);
    for_each_rooting(basis.type().graph, host, [&](std::span<const Vertex> sigma) {
        const auto p = flag_profile(basis, host, sigma);
        for (Eigen::Index u = 0; u < g; ++u) {
            if (p[u] == 0) continue;
            for (Eigen::Index v = 0; v < g; ++v) products(u, v) += p[u] * p[v];
        }
        const auto rest = outside(host, sigma);
        const auto subsets = subsets_of_size(rest, ext);
        std::vector<std::size_t> index(subsets.size());
        for (std::size_t s = 0; s < subsets.size(); ++s) index[s] = require_index(basis, rooted_key(host, sigma, subsets[s]));
        for (std::size_t a = 0; a < subsets.size(); ++a) {
            for (std::size_t b = 0; b < subsets.size(); ++b) {
                if (!disjoint(subsets[a], subsets[b])) ++overlap(index[a], index[b]);
            }
        }
    });
    return (products - joint - overlap).cwiseAbs().maxCoeff();
}

}  // namespace

long long product_identity_defect(const FlagBasis& basis, const ThreeGraph& host) {
    return identity_defect(basis, host, joint_table(basis, host));
}

FlagTables build_tables(const CodegreeProblem& problem, int jobs, bool check_identity) {
    FlagTables tables;
    const auto& hosts = problem.admissible.graphs();
    tables.hosts.resize(hosts.size());
    parallel_for(hosts.size(), jobs, [&](std::size_t i) {
        HostTables& t = tables.hosts[i];
        t.joint.reserve(problem.flag_bases.size());
        for (const FlagBasis& basis : problem.flag_bases) {
            t.joint.push_back(joint_table(basis, hosts[i]));
            if (check_identity) {
                const long long defect = identity_defect(basis, hosts[i], t.joint.back());
                if (defect != 0) {
                    throw std::logic_error("product identity fails on host " + hosts[i].to_string() + " for type " +
                                           basis.type().to_string());
                }
            }
        }
        axiom_table(problem.axiom_basis, hosts[i], t);
    });
    if (check_identity) tables.identity_checked = hosts.size();
    return tables;
}

}  // namespace coex
