#include "coex/certificate.hpp"

#include "coex/canonical.hpp"
#include "coex/hypergraph.hpp"
#include "coex/linalg.hpp"
#include "coex/parallel.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace coex {

using nlohmann::json;

std::string_view diagnostic_name(Diagnostic d) {
    switch (d) {
        case Diagnostic::syntax: return "syntax";
        case Diagnostic::dimension_mismatch: return "dimension mismatch";
        case Diagnostic::negative_diagonal: return "negative diagonal";
        case Diagnostic::negative_coefficient: return "negative coefficient";
        case Diagnostic::unknown_graph: return "unknown graph";
        case Diagnostic::out_of_range: return "out of range";
    }
    return "unknown";
}

CertificateError::CertificateError(Diagnostic code, const std::string& detail)
    : ParseError(std::string(diagnostic_name(code)) + ": " + detail), code_(code) {}

RationalMatrix CertificateBlock::q() const { return factored_product(r, qdiag); }

const CertificateBlock* Certificate::block_for(std::size_t type_index) const {
    for (const auto& b : blocks) {
        if (b.type_index == type_index) return &b;
    }
    return nullptr;
}

namespace {

[[noreturn]] void fail(Diagnostic code, const std::string& detail) { throw CertificateError(code, detail); }

const json& require(const json& doc, const char* key) {
    if (!doc.contains(key)) fail(Diagnostic::syntax, std::string("missing key \"") + key + "\"");
    return doc.at(key);
}

const json& require_array(const json& value, const std::string& what) {
    if (!value.is_array()) fail(Diagnostic::syntax, what + " must be a list");
    return value;
}

std::string require_string(const json& value, const std::string& what) {
    if (!value.is_string()) fail(Diagnostic::syntax, what + " must be a string");
    return value.get<std::string>();
}

Rational read_rational(const json& value, const std::string& what) {
    try {
        if (value.is_number_integer()) return Rational(value.get<long long>());
        if (value.is_string()) return parse_rational(value.get<std::string>());
    } catch (const ParseError& e) {
        fail(Diagnostic::syntax, what + ": " + e.what());
    }
    fail(Diagnostic::syntax, what + " must be a rational string");
}

ThreeGraph read_graph(const json& value, const std::string& what) {
    const std::string text = require_string(value, what);
    try {
        return named::lookup(text);
    } catch (const ParseError& e) {
        fail(Diagnostic::syntax, what + ": " + e.what());
    } catch (const ArgumentError& e) {
        fail(Diagnostic::syntax, what + ": " + e.what());
    }
}

RootedGraph read_flag(const json& value, const std::string& what) {
    const std::string text = require_string(value, what);
    try {
        return parse_rooted(text);
    } catch (const ParseError& e) {
        fail(Diagnostic::syntax, what + ": " + e.what());
    }
}

ThreeGraph read_type(const json& value, const std::string& what) {
    const std::string text = require_string(value, what);
    try {
        if (!text.empty() && text.back() == ')') {
            RootedGraph t = parse_rooted(text);
            if (t.roots != t.order()) fail(Diagnostic::unknown_graph, what + " \"" + text + "\" is not fully labelled");
            return t.graph;
        }
        return parse_graph(text);
    } catch (const ParseError& e) {
        if (dynamic_cast<const CertificateError*>(&e)) throw;
        fail(Diagnostic::syntax, what + ": " + e.what());
    }
}

std::set<std::string> canonical_set(std::span<const ThreeGraph> graphs) {
    std::set<std::string> out;
    for (const auto& g : graphs) out.insert(canonical_string(g));
    return out;
}

// Reads an explicit permutation (certificate index -> artifact index).
std::vector<std::size_t> read_permutation(const json& value, std::size_t size, const std::string& what) {
    require_array(value, what);
    if (value.size() != size) {
        fail(Diagnostic::dimension_mismatch, what + " has " + std::to_string(value.size()) + " entries, expected " +
                                                 std::to_string(size));
    }
    std::vector<std::size_t> perm;
    std::vector<bool> seen(size, false);
    for (const auto& entry : value) {
        if (!entry.is_number_integer()) fail(Diagnostic::syntax, what + " entries must be integers");
        const long long idx = entry.get<long long>();
        if (idx < 0 || idx >= static_cast<long long>(size) || seen[static_cast<std::size_t>(idx)]) {
            fail(Diagnostic::dimension_mismatch, what + " is not a permutation of 0.." + std::to_string(size - 1));
        }
        seen[static_cast<std::size_t>(idx)] = true;
        perm.push_back(static_cast<std::size_t>(idx));
    }
    return perm;
}

std::vector<std::size_t> identity_permutation(std::size_t size) {
    std::vector<std::size_t> perm(size);
    for (std::size_t i = 0; i < size; ++i) perm[i] = i;
    return perm;
}

// Resolves a list of flag strings against `basis`, requiring a bijection.
std::vector<std::size_t> resolve_flags(const json& list, const FlagBasis& basis, const std::string& what) {
    require_array(list, what);
    if (list.size() != basis.size()) {
        fail(Diagnostic::dimension_mismatch, what + " lists " + std::to_string(list.size()) + " flags, the basis of " +
                                                 basis.type().to_string() + " has " + std::to_string(basis.size()));
    }
    std::vector<std::size_t> perm;
    std::vector<bool> seen(basis.size(), false);
    for (std::size_t i = 0; i < list.size(); ++i) {
        const RootedGraph f = read_flag(list[i], what + "[" + std::to_string(i) + "]");
        if (f.roots != basis.type_order() || f.order() != basis.flag_order() || f.type_graph() != basis.type().graph) {
            fail(Diagnostic::unknown_graph, f.to_string() + " is not a flag of order " +
                                                std::to_string(basis.flag_order()) + " on " + basis.type().to_string());
        }
        const auto idx = basis.find(f);
        if (!idx) fail(Diagnostic::unknown_graph, f.to_string() + " is not an admissible flag");
        if (seen[*idx]) fail(Diagnostic::dimension_mismatch, f.to_string() + " is listed twice in " + what);
        seen[*idx] = true;
        perm.push_back(*idx);
    }
    return perm;
}

const json* optional_map(const json& doc, const char* key) {
    if (!doc.contains("index_maps")) return nullptr;
    const json& maps = doc.at("index_maps");
    if (!maps.is_object()) fail(Diagnostic::syntax, "index_maps must be an object");
    if (!maps.contains(key)) return nullptr;
    return &maps.at(key);
}

}  // namespace

Certificate parse_certificate(std::string_view document, std::shared_ptr<const CodegreeProblem> problem, int jobs) {
    json doc;
    try {
        doc = json::parse(document.begin(), document.end());
    } catch (const json::parse_error& e) {
        fail(Diagnostic::syntax, e.what());
    }
    if (!doc.is_object()) fail(Diagnostic::syntax, "certificate must be a JSON object");

    const json& n_value = require(doc, "n");
    if (!n_value.is_number_integer()) fail(Diagnostic::syntax, "n must be an integer");
    const int order = n_value.get<int>();
    std::vector<ThreeGraph> forbidden;
    const json& forbidden_list = require_array(require(doc, "forbidden"), "forbidden");
    for (std::size_t i = 0; i < forbidden_list.size(); ++i) {
        forbidden.push_back(read_graph(forbidden_list[i], "forbidden[" + std::to_string(i) + "]"));
    }

    Certificate cert;
    cert.bound = read_rational(require(doc, "bound"), "bound");
    if (cert.bound < 0 || cert.bound > 1) fail(Diagnostic::out_of_range, "bound must lie in [0, 1]");

    if (problem) {
        if (problem->order != order || canonical_set(problem->forbidden) != canonical_set(forbidden)) {
            fail(Diagnostic::dimension_mismatch, "certificate n/forbidden do not match the supplied problem");
        }
    } else {
        if (order < 3 || order > kMaxFlagOrder) {
            fail(Diagnostic::out_of_range, "n must lie in 3.." + std::to_string(kMaxFlagOrder));
        }
        problem = std::make_shared<const CodegreeProblem>(CodegreeProblem::build(forbidden, order, jobs));
    }
    cert.problem = problem;
    const CodegreeProblem& p = *problem;

    // Types and their blocks.
    const json& types = require_array(require(doc, "types"), "types");
    const json& qdash = require_array(require(doc, "qdash_matrices"), "qdash_matrices");
    const json& rmats = require_array(require(doc, "r_matrices"), "r_matrices");
    if (qdash.size() != types.size() || rmats.size() != types.size()) {
        fail(Diagnostic::dimension_mismatch, "types, qdash_matrices and r_matrices must have equal length");
    }
    const json* flags = doc.contains("flags") ? &require_array(doc.at("flags"), "flags") : nullptr;
    if (flags && flags->size() != types.size()) fail(Diagnostic::dimension_mismatch, "flags must have one list per type");
    const json* flag_maps = optional_map(doc, "flags");
    if (flag_maps && (!flag_maps->is_array() || flag_maps->size() != types.size())) {
        fail(Diagnostic::dimension_mismatch, "index_maps.flags must have one list per type");
    }

    std::vector<bool> type_seen(p.types.size(), false);
    for (std::size_t i = 0; i < types.size(); ++i) {
        const std::string where = "types[" + std::to_string(i) + "]";
        const ThreeGraph type = read_type(types[i], where);
        const auto t = p.find_type(type);
        if (!t) fail(Diagnostic::unknown_graph, where + " \"" + type.to_string() + "\" is not a listed type");
        if (type_seen[*t]) fail(Diagnostic::dimension_mismatch, where + " repeats a type");
        type_seen[*t] = true;
        const FlagBasis& basis = p.flag_bases[*t];

        const json& qd = require_array(qdash[i], "qdash_matrices[" + std::to_string(i) + "]");
        const json& rm = require_array(rmats[i], "r_matrices[" + std::to_string(i) + "]");
        if (qd.empty() && rm.empty()) continue;

        std::vector<std::size_t> perm;
        if (flags) {
            perm = resolve_flags((*flags)[i], basis, "flags[" + std::to_string(i) + "]");
        } else if (flag_maps) {
            perm = read_permutation((*flag_maps)[i], basis.size(), "index_maps.flags[" + std::to_string(i) + "]");
        } else {
            perm = identity_permutation(basis.size());
        }

        CertificateBlock block;
        block.type_index = *t;
        const auto r = static_cast<Eigen::Index>(qd.size());
        block.qdiag.resize(r);
        for (Eigen::Index k = 0; k < r; ++k) {
            block.qdiag(k) = read_rational(qd[k], "qdash_matrices[" + std::to_string(i) + "]");
            if (block.qdiag(k) < 0) {
                fail(Diagnostic::negative_diagonal, "qdash_matrices[" + std::to_string(i) + "][" + std::to_string(k) +
                                                        "] = " + to_string(block.qdiag(k)));
            }
        }
        if (rm.size() != basis.size()) {
            fail(Diagnostic::dimension_mismatch, "r_matrices[" + std::to_string(i) + "] has " +
                                                     std::to_string(rm.size()) + " rows, expected " +
                                                     std::to_string(basis.size()));
        }
        block.r = RationalMatrix::Zero(static_cast<Eigen::Index>(basis.size()), r);
        for (std::size_t row = 0; row < rm.size(); ++row) {
            const json& values = require_array(rm[row], "r_matrices row");
            if (static_cast<Eigen::Index>(values.size()) != r) {
                fail(Diagnostic::dimension_mismatch, "r_matrices[" + std::to_string(i) + "] row " +
                                                         std::to_string(row) + " has " + std::to_string(values.size()) +
                                                         " entries, expected " + std::to_string(r));
            }
            for (Eigen::Index k = 0; k < r; ++k) {
                block.r(static_cast<Eigen::Index>(perm[row]), k) = read_rational(values[k], "r_matrices entry");
            }
        }
        cert.blocks.push_back(std::move(block));
    }
    std::sort(cert.blocks.begin(), cert.blocks.end(),
              [](const CertificateBlock& a, const CertificateBlock& b) { return a.type_index < b.type_index; });

    // Axiom flags and density coefficients.
    const json& coefficients = require_array(require(doc, "density_coefficients"), "density_coefficients");
    std::vector<std::size_t> axiom_perm;
    if (doc.contains("axiom_flags")) {
        const json& axioms = require_array(doc.at("axiom_flags"), "axiom_flags");
        if (axioms.size() != coefficients.size()) {
            fail(Diagnostic::dimension_mismatch, "axiom_flags and density_coefficients differ in length");
        }
        std::vector<bool> seen(p.axiom_basis.size(), false);
        for (std::size_t j = 0; j < axioms.size(); ++j) {
            const RootedGraph f = read_flag(axioms[j], "axiom_flags[" + std::to_string(j) + "]");
            const auto idx = f.type_graph() == pair_type().graph ? p.axiom_basis.find(f) : std::nullopt;
            if (!idx) fail(Diagnostic::unknown_graph, f.to_string() + " is not an axiom flag");
            if (seen[*idx]) fail(Diagnostic::dimension_mismatch, f.to_string() + " is listed twice in axiom_flags");
            seen[*idx] = true;
            axiom_perm.push_back(*idx);
        }
    } else if (const json* m = optional_map(doc, "axiom_flags")) {
        axiom_perm = read_permutation(*m, p.axiom_basis.size(), "index_maps.axiom_flags");
    } else {
        axiom_perm = identity_permutation(p.axiom_basis.size());
    }
    if (coefficients.size() != axiom_perm.size()) {
        fail(Diagnostic::dimension_mismatch, "density_coefficients has " + std::to_string(coefficients.size()) +
                                                 " entries, expected " + std::to_string(axiom_perm.size()));
    }
    cert.density = RationalVector::Zero(static_cast<Eigen::Index>(p.axiom_basis.size()));
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        const Rational c = read_rational(coefficients[j], "density_coefficients[" + std::to_string(j) + "]");
        if (c < 0) {
            fail(Diagnostic::negative_coefficient, "density_coefficients[" + std::to_string(j) + "] = " + to_string(c));
        }
        cert.density(static_cast<Eigen::Index>(axiom_perm[j])) = c;
    }

    // Optional admissible listing.
    if (doc.contains("admissible_graphs")) {
        const json& list = require_array(doc.at("admissible_graphs"), "admissible_graphs");
        if (list.size() != p.admissible.size()) {
            fail(Diagnostic::dimension_mismatch, "admissible_graphs lists " + std::to_string(list.size()) +
                                                     " graphs, expected " + std::to_string(p.admissible.size()));
        }
        std::vector<std::size_t> order_map;
        std::vector<bool> seen(p.admissible.size(), false);
        for (std::size_t i = 0; i < list.size(); ++i) {
            const ThreeGraph g = read_graph(list[i], "admissible_graphs[" + std::to_string(i) + "]");
            const auto idx = p.admissible.find(g);
            if (!idx) fail(Diagnostic::unknown_graph, g.to_string() + " is not admissible");
            if (seen[*idx]) fail(Diagnostic::dimension_mismatch, g.to_string() + " is listed twice");
            seen[*idx] = true;
            order_map.push_back(*idx);
        }
        cert.admissible_order = std::move(order_map);
    } else if (const json* m = optional_map(doc, "admissible_graphs")) {
        cert.admissible_order = read_permutation(*m, p.admissible.size(), "index_maps.admissible_graphs");
    }
    return cert;
}

std::string certificate_to_json(const Certificate& cert) {
    const CodegreeProblem& p = *cert.problem;
    json doc;
    doc["n"] = p.order;
    doc["forbidden"] = json::array();
    for (const auto& f : p.forbidden) doc["forbidden"].push_back(f.to_string());
    doc["bound"] = to_string(cert.bound);
    doc["types"] = json::array();
    doc["flags"] = json::array();
    doc["qdash_matrices"] = json::array();
    doc["r_matrices"] = json::array();
    for (std::size_t t = 0; t < p.types.size(); ++t) {
        doc["types"].push_back(p.types[t].to_string());
        json flags = json::array();
        for (const auto& f : p.flag_bases[t].flags()) flags.push_back(f.to_string());
        doc["flags"].push_back(flags);
        json qd = json::array();
        json rm = json::array();
        if (const CertificateBlock* b = cert.block_for(t)) {
            for (Eigen::Index k = 0; k < b->qdiag.size(); ++k) qd.push_back(to_string(b->qdiag(k)));
            for (Eigen::Index i = 0; i < b->r.rows(); ++i) {
                json row = json::array();
                for (Eigen::Index k = 0; k < b->r.cols(); ++k) row.push_back(to_string(b->r(i, k)));
                rm.push_back(row);
            }
        }
        doc["qdash_matrices"].push_back(qd);
        doc["r_matrices"].push_back(rm);
    }
    doc["axiom_flags"] = json::array();
    doc["density_coefficients"] = json::array();
    for (std::size_t j = 0; j < p.axiom_basis.size(); ++j) {
        doc["axiom_flags"].push_back(p.axiom_basis[j].to_string());
        doc["density_coefficients"].push_back(to_string(cert.density(static_cast<Eigen::Index>(j))));
    }
    return doc.dump(1);
}

RationalVector compute_alpha(const Certificate& cert, const FlagTables& tables) {
    const CodegreeProblem& p = *cert.problem;
    if (tables.hosts.size() != p.admissible.size()) throw ArgumentError("tables do not match the admissible basis");
    std::vector<RationalMatrix> q;
    for (const auto& b : cert.blocks) q.push_back(b.q());
    RationalVector alpha(static_cast<Eigen::Index>(tables.hosts.size()));
    for (std::size_t i = 0; i < tables.hosts.size(); ++i) {
        const HostTables& h = tables.hosts[i];
        if (h.axiom_a.size() != static_cast<std::size_t>(cert.density.size())) {
            throw ArgumentError("axiom table does not match the density coefficients");
        }
        Rational total = 0;
        for (Eigen::Index j = 0; j < cert.density.size(); ++j) {
            const Rational& c = cert.density(j);
            if (c == 0) continue;
            total += c * (Rational(h.axiom_a[j]) - cert.bound * Rational(h.axiom_b[j]));
        }
        for (std::size_t b = 0; b < cert.blocks.size(); ++b) {
            const CountMatrix& j = h.joint.at(cert.blocks[b].type_index);
            if (j.rows() != q[b].rows()) throw ArgumentError("joint table does not match a block");
            for (Eigen::Index u = 0; u < j.rows(); ++u) {
                for (Eigen::Index v = 0; v < j.cols(); ++v) {
                    if (j(u, v) != 0 && q[b](u, v) != 0) total += q[b](u, v) * Rational(j(u, v));
                }
            }
        }
        alpha(static_cast<Eigen::Index>(i)) = total;
    }
    return alpha;
}

namespace {

bool in_t(int pa, int pb, int pc) {
    // Two vertices in part i and the third in part i + 1 (cyclically).
    auto next = [](int part) { return part % 3 + 1; };
    if (pa == pb && pc == next(pa) && pa != pc) return true;
    if (pa == pc && pb == next(pa) && pa != pb) return true;
    if (pb == pc && pa == next(pb) && pb != pa) return true;
    return false;
}

ThreeGraph t_graph(std::span<const int> parts) {
    const int n = static_cast<int>(parts.size());
    std::vector<Triple> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                if (in_t(parts[a], parts[b], parts[c])) edges.push_back({a + 1, b + 1, c + 1});
            }
        }
    }
    return ThreeGraph(n, edges);
}

}  // namespace

std::vector<long long> limit_profile(const FlagBasis& basis, std::span<const int> root_parts) {
    const int k = basis.type_order();
    if (static_cast<int>(root_parts.size()) != k) throw ArgumentError("need one part per root");
    for (int part : root_parts) {
        if (part < 1 || part > 3) throw ArgumentError("parts are numbered 1..3");
    }
    if (t_graph(root_parts) != basis.type().graph) {
        throw PreconditionError("root placement does not induce the type " + basis.type().to_string());
    }
    const int extra = basis.flag_order() - k;
    std::vector<long long> profile(basis.size(), 0);
    std::vector<int> parts(root_parts.begin(), root_parts.end());
    parts.resize(static_cast<std::size_t>(basis.flag_order()), 1);
    long long total = 1;
    for (int i = 0; i < extra; ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
        long long rest = code;
        for (int i = 0; i < extra; ++i) {
            parts[static_cast<std::size_t>(k + i)] = static_cast<int>(rest % 3) + 1;
            rest /= 3;
        }
        const auto idx = basis.find({t_graph(parts), k});
        if (!idx) throw PreconditionError("a placement in T produces a flag outside the basis");
        ++profile[*idx];
    }
    return profile;
}

std::vector<std::vector<int>> consistent_root_parts(const FlagBasis& basis) {
    const int k = basis.type_order();
    std::vector<std::vector<int>> out;
    std::vector<int> parts(static_cast<std::size_t>(k), 1);
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
        long long rest = code;
        for (int i = k - 1; i >= 0; --i) {
            parts[static_cast<std::size_t>(i)] = static_cast<int>(rest % 3) + 1;
            rest /= 3;
        }
        if (t_graph(parts) == basis.type().graph) out.push_back(parts);
    }
    return out;
}

VerificationReport verify(const Certificate& cert, const FlagTables& tables) {
    const CodegreeProblem& p = *cert.problem;
    VerificationReport report;
    report.identity_ok = tables.identity_checked == p.admissible.size();
    if (!report.identity_ok) report.reasons.push_back("product identity was not checked on every admissible host");

    report.alpha = compute_alpha(cert, tables);
    report.max_alpha = 0;
    for (Eigen::Index i = 0; i < report.alpha.size(); ++i) {
        if (i == 0 || report.alpha(i) > report.max_alpha) report.max_alpha = report.alpha(i);
        if (report.alpha(i) == 0) report.sharp_indices.push_back(static_cast<std::size_t>(i));
        if (report.alpha(i) > 0) report.positive_indices.push_back(static_cast<std::size_t>(i));
    }
    if (!report.positive_indices.empty()) {
        std::string list;
        for (std::size_t i : report.positive_indices) list += (list.empty() ? "" : " ") + std::to_string(i + 1);
        report.reasons.push_back("alpha_i > 0 for admissible graphs " + list);
    }

    report.psd_ok = true;
    bool all_zero = true;
    for (const auto& block : cert.blocks) {
        const RationalMatrix q = block.q();
        const auto ldlt = ldlt_psd(q);
        report.block_ranks.emplace_back(block.type_index, ldlt.rank);
        if (!ldlt.positive_semidefinite) {
            report.psd_ok = false;
            report.reasons.push_back("block for type " + p.types[block.type_index].to_string() + " is not PSD");
        }
        if (ldlt.rank > 0) all_zero = false;
        for (const auto& parts : consistent_root_parts(p.flag_bases[block.type_index])) {
            const auto z = limit_profile(p.flag_bases[block.type_index], parts);
            RationalVector zv(static_cast<Eigen::Index>(z.size()));
            for (std::size_t u = 0; u < z.size(); ++u) zv(static_cast<Eigen::Index>(u)) = Rational(z[u]);
            ProfileCheck check{block.type_index, parts, quadratic_form(q, zv)};
            if (check.value != 0) report.profiles_zero = false;
            report.profiles.push_back(std::move(check));
        }
    }

    report.c_nonneg = true;
    for (Eigen::Index j = 0; j < cert.density.size(); ++j) {
        if (cert.density(j) < 0) report.c_nonneg = false;
        if (cert.density(j) != 0) all_zero = false;
    }
    if (!report.c_nonneg) report.reasons.push_back("negative density coefficient");

    const RootedGraph marker{ThreeGraph(p.order - 1, {{1, 2, 3}}), 2};
    if (const auto idx = p.axiom_basis.find(marker)) {
        report.axiom_flag_positive = cert.density(static_cast<Eigen::Index>(*idx)) > 0;
    }

    report.accepted = report.positive_indices.empty() && report.psd_ok && report.c_nonneg && report.identity_ok;
    report.vacuous = report.accepted && all_zero;
    return report;
}

VerificationReport verify(const Certificate& cert, int jobs) {
    return verify(cert, build_tables(*cert.problem, jobs, true));
}

namespace {

std::string parts_string(const std::vector<int>& parts) {
    std::string out;
    for (int p : parts) out += std::to_string(p);
    return out.empty() ? "-" : out;
}

std::string verdict_text(const VerificationReport& r) {
    if (!r.accepted) return "rejected";
    return r.vacuous ? "accepted (vacuous)" : "accepted";
}

}  // namespace

std::string format_report(const VerificationReport& r, const Certificate& cert) {
    const CodegreeProblem& p = *cert.problem;
    std::ostringstream out;
    out << "verdict: " << verdict_text(r) << '\n';
    out << "admissible graphs: " << p.admissible.size() << '\n';
    out << "max alpha: " << to_string(r.max_alpha) << '\n';
    out << "sharp graphs: " << r.sharp_indices.size() << '\n';
    out << "positive alpha: " << r.positive_indices.size() << '\n';
    out << "psd: " << (r.psd_ok ? "ok" : "FAILED") << '\n';
    for (const auto& [t, rank] : r.block_ranks) {
        out << "  block " << p.types[t].to_string() << ": size " << p.flag_bases[t].size() << ", rank " << rank << '\n';
    }
    out << "density coefficients nonnegative: " << (r.c_nonneg ? "yes" : "no") << '\n';
    const RootedGraph marker{ThreeGraph(p.order - 1, {{1, 2, 3}}), 2};
    out << "coefficient of " << marker.to_string() << " positive: " << (r.axiom_flag_positive ? "yes" : "no") << '\n';
    out << "product identity checked: " << (r.identity_ok ? "yes" : "no") << '\n';
    out << "T-profile quadratic forms all zero: " << (r.profiles_zero ? "yes" : "no") << '\n';
    for (const auto& check : r.profiles) {
        if (check.value != 0) {
            out << "  type " << p.types[check.type_index].to_string() << " parts " << parts_string(check.root_parts)
                << ": " << to_string(check.value) << '\n';
        }
    }
    for (const auto& reason : r.reasons) out << "reason: " << reason << '\n';
    return out.str();
}

std::string report_json(const VerificationReport& r, const Certificate& cert) {
    const CodegreeProblem& p = *cert.problem;
    json doc;
    doc["verdict"] = verdict_text(r);
    doc["accepted"] = r.accepted;
    doc["max_alpha"] = to_string(r.max_alpha);
    doc["psd_ok"] = r.psd_ok;
    doc["c_nonneg"] = r.c_nonneg;
    doc["axiom_flag_positive"] = r.axiom_flag_positive;
    doc["identity_ok"] = r.identity_ok;
    doc["profiles_zero"] = r.profiles_zero;
    json alpha = json::array();
    for (Eigen::Index i = 0; i < r.alpha.size(); ++i) {
        alpha.push_back({{"graph", p.admissible[static_cast<std::size_t>(i)].to_string()}, {"alpha", to_string(r.alpha(i))}});
    }
    doc["alpha"] = alpha;
    if (cert.admissible_order) {
        json in_order = json::array();
        for (std::size_t idx : *cert.admissible_order) in_order.push_back(to_string(r.alpha(static_cast<Eigen::Index>(idx))));
        doc["alpha_certificate_order"] = in_order;
    }
    json sharp = json::array();
    for (std::size_t i : r.sharp_indices) sharp.push_back(i);
    doc["sharp_indices"] = sharp;
    json ranks = json::array();
    for (const auto& [t, rank] : r.block_ranks) ranks.push_back({{"type", p.types[t].to_string()}, {"rank", rank}});
    doc["block_ranks"] = ranks;
    json profiles = json::array();
    for (const auto& check : r.profiles) {
        profiles.push_back({{"type", p.types[check.type_index].to_string()},
                            {"parts", check.root_parts},
                            {"value", to_string(check.value)}});
    }
    doc["profiles"] = profiles;
    doc["reasons"] = r.reasons;
    return doc.dump();
}

SharpComparison compare_sharp(const VerificationReport& report, std::span<const std::size_t> expected) {
    SharpComparison out;
    const std::set<std::size_t> sharp(report.sharp_indices.begin(), report.sharp_indices.end());
    const std::set<std::size_t> want(expected.begin(), expected.end());
    std::set_difference(want.begin(), want.end(), sharp.begin(), sharp.end(), std::back_inserter(out.missing));
    std::set_difference(sharp.begin(), sharp.end(), want.begin(), want.end(), std::back_inserter(out.extra));
    return out;
}

std::string export_sdp(const CodegreeProblem& problem, const FlagTables& tables, const Rational& bound,
                       std::span<const bool> active_types) {
    if (problem.order > kMaxFlagOrder) throw CapabilityError("SDP export supports N <= 6");
    if (bound < 0 || bound > 1) throw ArgumentError("bound must lie in [0, 1]");
    if (!active_types.empty() && active_types.size() != problem.types.size()) {
        throw ArgumentError("active type mask has the wrong length");
    }
    const BigInt p = numerator(bound);
    const BigInt q = denominator(bound);
    std::vector<std::size_t> active;
    for (std::size_t t = 0; t < problem.types.size(); ++t) {
        if (active_types.empty() || active_types[t]) active.push_back(t);
    }
    const std::size_t hosts = problem.admissible.size();
    const std::size_t axioms = problem.axiom_basis.size();
    const std::size_t c_block = active.size() + 1;
    const std::size_t slack_block = active.size() + 2;

    std::ostringstream out;
    out << "* codegree flag-algebra feasibility problem\n";
    out << "* N = " << problem.order << ", bound = " << to_string(bound) << ", forbidden =";
    for (const auto& f : problem.forbidden) out << ' ' << f.to_string();
    out << '\n';
    out << "* blocks: ";
    for (std::size_t t : active) out << problem.types[t].to_string() << ' ';
    out << "c slack\n";
    out << hosts + 1 << '\n';
    out << active.size() + 2 << '\n';
    for (std::size_t t : active) out << problem.flag_bases[t].size() << ' ';
    out << '-' << axioms << " -" << hosts << '\n';
    for (std::size_t i = 0; i < hosts; ++i) out << "0 ";
    out << "1\n";
    for (std::size_t i = 0; i < hosts; ++i) {
        const std::size_t row = i + 1;
        const HostTables& h = tables.hosts.at(i);
        for (std::size_t b = 0; b < active.size(); ++b) {
            const CountMatrix& j = h.joint.at(active[b]);
            for (Eigen::Index u = 0; u < j.rows(); ++u) {
                for (Eigen::Index v = u; v < j.cols(); ++v) {
                    const BigInt value = u == v ? BigInt(2) * q * j(u, u) : q * (j(u, v) + j(v, u));
                    if (value != 0) out << row << ' ' << b + 1 << ' ' << u + 1 << ' ' << v + 1 << ' ' << value << '\n';
                }
            }
        }
        for (std::size_t k = 0; k < axioms; ++k) {
            const BigInt value = BigInt(2) * (q * h.axiom_a[k] - p * h.axiom_b[k]);
            if (value != 0) out << row << ' ' << c_block << ' ' << k + 1 << ' ' << k + 1 << ' ' << value << '\n';
        }
        out << row << ' ' << slack_block << ' ' << row << ' ' << row << " 1\n";
    }
    for (std::size_t k = 0; k < axioms; ++k) out << hosts + 1 << ' ' << c_block << ' ' << k + 1 << ' ' << k + 1 << " 1\n";
    return out.str();
}

}  // namespace coex
