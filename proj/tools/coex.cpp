// coex: command-line front end for the codegree Turán toolkit.

#include "coex/canonical.hpp"
#include "coex/certificate.hpp"
#include "coex/constructions.hpp"
#include "coex/enumeration.hpp"
#include "coex/errors.hpp"
#include "coex/extension.hpp"
#include "coex/flag_calculus.hpp"
#include "coex/hypergraph.hpp"
#include "coex/linalg.hpp"
#include "coex/search.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>

using namespace coex;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kRejected = 1, kUsage = 2, kCapability = 3 };

struct Globals {
    int jobs = 1;
    std::uint64_t seed = 20240601;
    bool json = false;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError("expected a comma-separated integer list, got \"" + text + "\"");
        }
    }
    return out;
}

// "12,34" (single-digit vertices) or "1-12,3-4".
std::vector<VertexPair> parse_pairs(const std::string& text) {
    std::vector<VertexPair> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const auto dash = item.find('-');
        try {
            if (dash != std::string::npos) {
                out.push_back(make_pair_of(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))));
            } else if (item.size() == 2 && std::isdigit(item[0]) && std::isdigit(item[1])) {
                out.push_back(make_pair_of(item[0] - '0', item[1] - '0'));
            } else {
                throw std::invalid_argument(item);
            }
        } catch (const std::invalid_argument&) {
            throw ParseError("bad pair \"" + item + "\" (use xy or x-y)");
        }
    }
    return out;
}

std::vector<std::string> graph_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        const auto end = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(start, end - start + 1));
    }
    return out;
}

std::shared_ptr<const CodegreeProblem> load_problem(const std::string& forbid, int n, int jobs) {
    return std::make_shared<const CodegreeProblem>(CodegreeProblem::build(parse_graph_list(forbid), n, jobs));
}

// A 0-based index, "tau<k>" (1-based, in type listing order), or a type string.
std::size_t resolve_type(const CodegreeProblem& p, const std::string& text) {
    if (text.size() > 3 && text.compare(0, 3, "tau") == 0) {
        const int k = parse_ints(text.substr(3)).at(0);
        if (k < 1 || static_cast<std::size_t>(k) > p.types.size()) {
            throw ArgumentError("tau index out of range (1.." + std::to_string(p.types.size()) + ")");
        }
        return static_cast<std::size_t>(k - 1);
    }
    if (!text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(c); })) {
        const std::size_t idx = std::stoul(text);
        if (idx >= p.types.size()) throw ArgumentError("type index out of range (0.." + std::to_string(p.types.size() - 1) + ")");
        return idx;
    }
    const RootedGraph r = text.find('(') != std::string::npos ? parse_rooted(text) : RootedGraph{parse_graph(text), 0};
    const auto idx = p.find_type(r.graph);
    if (!idx) throw ArgumentError("\"" + text + "\" is not a type of this problem");
    return *idx;
}

// ---- enumerate -------------------------------------------------------------

struct EnumerateOptions {
    std::string forbid = "F32";
    int n = 6;
    bool count_only = false;
    std::string types;
    std::string flag_type;
    int flag_order = 0;
};

int run_enumerate(const EnumerateOptions& o, const Globals& g) {
    const auto forbidden = parse_graph_list(o.forbid);
    if (!o.flag_type.empty()) {
        const RootedGraph type = parse_rooted(o.flag_type);
        if (type.roots != type.graph.order()) throw ArgumentError("a type has every vertex as a root, e.g. \"2:(2)\"");
        const FlagBasis basis = enumerate_flags(type, o.flag_order, forbidden);
        if (o.count_only) {
            std::cout << basis.size() << '\n';
            return kOk;
        }
        std::map<std::size_t, std::size_t> profile;
        for (const auto& f : basis.flags()) {
            ++profile[f.graph.edge_count()];
            if (g.json) {
                std::cout << json{{"flag", f.to_string()}, {"edges", f.graph.edge_count()}}.dump() << '\n';
            } else {
                std::cout << f.to_string() << '\n';
            }
        }
        std::cout << (g.json ? "" : "# ") << "count " << basis.size() << "; edges:";
        for (const auto& [e, c] : profile) std::cout << ' ' << e << "x" << c;
        std::cout << '\n';
        return kOk;
    }
    if (!o.types.empty()) {
        const auto sizes = parse_ints(o.types);
        const auto types = enumerate_types(forbidden, sizes);
        std::map<int, std::size_t> counts;
        for (int s : sizes) counts[s] = 0;
        for (const auto& t : types) ++counts[t.roots];
        if (o.count_only) {
            bool first = true;
            for (int s : sizes) {
                std::cout << (first ? "" : " ") << counts[s];
                first = false;
            }
            std::cout << '\n';
            return kOk;
        }
        for (std::size_t i = 0; i < types.size(); ++i) {
            if (g.json) {
                std::cout << json{{"index", i}, {"type", types[i].to_string()}}.dump() << '\n';
            } else {
                std::cout << i << ' ' << types[i].to_string() << '\n';
            }
        }
        return kOk;
    }
    const AdmissibleBasis basis = enumerate_admissible(forbidden, o.n, g.jobs);
    if (o.count_only) {
        std::cout << basis.size() << '\n';
        return kOk;
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (g.json) {
            std::cout << json{{"index", i}, {"graph", basis[i].to_string()}, {"edges", basis[i].edge_count()}}.dump()
                      << '\n';
        } else {
            std::cout << basis[i].to_string() << '\n';
        }
    }
    return kOk;
}

// ---- certificates ----------------------------------------------------------

int run_verify(const std::string& file, const Globals& g) {
    const Certificate cert = parse_certificate(read_file(file), nullptr, g.jobs);
    const VerificationReport report = verify(cert, g.jobs);
    std::cout << (g.json ? report_json(report, cert) + "\n" : format_report(report, cert));
    return report.accepted ? kOk : kRejected;
}

std::vector<std::size_t> construction_sharp_indices(const CodegreeProblem& p) {
    std::vector<std::size_t> out;
    for (const auto& h : sharp_compatible_graphs(p.order, true)) {
        if (const auto idx = p.admissible.find(h)) out.push_back(*idx);
    }
    return out;
}

int run_sharp(const std::string& file, bool compare, const Globals& g) {
    const Certificate cert = parse_certificate(read_file(file), nullptr, g.jobs);
    const CodegreeProblem& p = *cert.problem;
    const VerificationReport report = verify(cert, g.jobs);
    json doc;
    doc["verdict"] = report.accepted ? "accepted" : "rejected";
    json sharp = json::array();
    for (std::size_t i : report.sharp_indices) sharp.push_back({{"index", i}, {"graph", p.admissible[i].to_string()}});
    doc["sharp"] = sharp;
    int code = report.accepted ? kOk : kRejected;
    SharpComparison cmp;
    std::vector<std::size_t> expected;
    if (compare) {
        expected = construction_sharp_indices(p);
        cmp = compare_sharp(report, expected);
        doc["construction_sharp"] = expected;
        doc["missing"] = cmp.missing;
        doc["extra"] = cmp.extra;
        doc["covers_construction"] = cmp.covers_expected();
        if (!cmp.covers_expected()) code = kRejected;
    }
    if (g.json) {
        std::cout << doc.dump() << '\n';
        return code;
    }
    std::cout << "verdict: " << doc["verdict"].get<std::string>() << '\n';
    std::cout << "sharp graphs: " << report.sharp_indices.size() << '\n';
    for (std::size_t i : report.sharp_indices) std::cout << "  " << i << ' ' << p.admissible[i].to_string() << '\n';
    if (compare) {
        std::cout << "construction-compatible graphs: " << expected.size() << '\n';
        std::cout << "missing from sharp set: " << cmp.missing.size() << '\n';
        for (std::size_t i : cmp.missing) std::cout << "  " << i << ' ' << p.admissible[i].to_string() << '\n';
        std::cout << "sharp but not construction-compatible: " << cmp.extra.size() << '\n';
        std::cout << "sharp set covers construction: " << (cmp.covers_expected() ? "yes" : "no") << '\n';
    }
    return code;
}

struct ZeroCertOptions {
    std::string forbid = "F32";
    int n = 6;
    std::string bound = "1/3";
};

int run_zero_cert(const ZeroCertOptions& o, const Globals& g) {
    auto problem = load_problem(o.forbid, o.n, g.jobs);
    Certificate cert;
    cert.problem = problem;
    cert.bound = parse_rational(o.bound);
    cert.density = RationalVector::Zero(static_cast<Eigen::Index>(problem->axiom_basis.size()));
    std::cout << certificate_to_json(cert) << '\n';
    return kOk;
}

struct ExportOptions {
    std::string forbid = "F32";
    int n = 6;
    std::string bound = "1/3";
    std::string types;
    std::string output;
};

int run_export(const ExportOptions& o, const Globals& g) {
    auto problem = load_problem(o.forbid, o.n, g.jobs);
    const FlagTables tables = build_tables(*problem, g.jobs, false);
    std::vector<bool> mask_storage;
    if (!o.types.empty()) {
        mask_storage.assign(problem->types.size(), false);
        for (int t : parse_ints(o.types)) {
            if (t < 0 || static_cast<std::size_t>(t) >= mask_storage.size()) throw ArgumentError("type index out of range");
            mask_storage[static_cast<std::size_t>(t)] = true;
        }
    }
    std::unique_ptr<bool[]> mask(new bool[mask_storage.size()]);
    for (std::size_t i = 0; i < mask_storage.size(); ++i) mask[i] = mask_storage[i];
    const std::string sdp =
        export_sdp(*problem, tables, parse_rational(o.bound), std::span<const bool>(mask.get(), mask_storage.size()));
    if (o.output.empty() || o.output == "-") {
        std::cout << sdp;
    } else {
        std::ofstream out(o.output);
        if (!out) throw ArgumentError("cannot write " + o.output);
        out << sdp;
        std::cerr << "wrote " << o.output << '\n';
    }
    return kOk;
}

struct EigenOptions {
    std::string forbid = "F32";
    int n = 6;
    std::string type;
    std::string parts;
    std::string cert;
};

int run_eigenprofile(const EigenOptions& o, const Globals& g) {
    std::shared_ptr<const CodegreeProblem> problem;
    std::optional<Certificate> cert;
    if (!o.cert.empty()) {
        cert = parse_certificate(read_file(o.cert), nullptr, g.jobs);
        problem = cert->problem;
    } else {
        problem = load_problem(o.forbid, o.n, g.jobs);
    }
    const std::size_t t = resolve_type(*problem, o.type);
    const FlagBasis& basis = problem->flag_bases[t];
    std::vector<std::vector<int>> placements;
    if (!o.parts.empty()) {
        std::vector<int> parts;
        for (char ch : o.parts) {
            if (ch == ',') continue;
            if (ch < '1' || ch > '3') throw ParseError("parts are digits 1..3");
            parts.push_back(ch - '0');
        }
        placements.push_back(parts);
    } else {
        placements = consistent_root_parts(basis);
    }
    if (placements.empty()) {
        std::cout << "no placement of the roots in T induces type " << problem->types[t].to_string() << '\n';
        return kOk;
    }
    const CertificateBlock* block = cert ? cert->block_for(t) : nullptr;
    const RationalMatrix q = block ? block->q() : RationalMatrix();
    bool all_zero = true;
    for (const auto& parts : placements) {
        const auto z = limit_profile(basis, parts);
        std::string parts_text;
        for (int p : parts) parts_text += std::to_string(p);
        std::size_t nonzero = 0;
        for (long long v : z) nonzero += v != 0;
        json doc;
        doc["type"] = problem->types[t].to_string();
        doc["parts"] = parts_text;
        doc["flags"] = basis.size();
        doc["nonzero"] = nonzero;
        doc["profile"] = z;
        if (block) {
            RationalVector zv(static_cast<Eigen::Index>(z.size()));
            for (std::size_t u = 0; u < z.size(); ++u) zv(static_cast<Eigen::Index>(u)) = Rational(z[u]);
            const Rational value = quadratic_form(q, zv);
            if (value != 0) all_zero = false;
            doc["zQz"] = to_string(value);
        }
        if (g.json) {
            std::cout << doc.dump() << '\n';
            continue;
        }
        std::cout << "type " << doc["type"].get<std::string>() << " parts " << parts_text << ": " << nonzero << " of "
                  << basis.size() << " entries nonzero\n";
        for (std::size_t u = 0; u < z.size(); ++u) {
            if (z[u] != 0) std::cout << "  " << basis[u].to_string() << " " << z[u] << '\n';
        }
        if (block) std::cout << "  zQz = " << doc["zQz"].get<std::string>() << '\n';
    }
    return all_zero ? kOk : kRejected;
}

// ---- constructions ---------------------------------------------------------

struct ConstructOptions {
    std::string family;
    std::string sizes;
    int n = 0;
    int m = 0;
    int k = 0;
    std::string s;
    bool cycle = false;
    std::string colouring;
    bool random_matching = false;
    bool print_graph = false;
};

int run_construct(const ConstructOptions& o, const Globals& g) {
    ConstructionSpec spec;
    spec.family = o.family;
    if (!o.sizes.empty()) spec.sizes = parse_ints(o.sizes);
    spec.n = o.n;
    spec.m = o.m;
    spec.k = o.k;
    if (o.cycle) {
        spec.s = ct3_cycle(o.m);
    } else if (!o.s.empty()) {
        spec.s = parse_pairs(o.s);
    }
    if (!o.colouring.empty()) spec.colouring = LatinColouring::parse(o.colouring);
    ThreeGraph graph;
    if (o.random_matching) {
        if (spec.family != "T" || spec.sizes.size() != 3) throw ArgumentError("--random-matching needs --family T --sizes a,b,c");
        const Tripartition parts{spec.sizes[0], spec.sizes[1], spec.sizes[2]};
        std::mt19937_64 rng(g.seed);
        const auto f = random_tripartite_matching(parts, rng);
        graph = add_tripartite(parts, f, TripartiteMode::matching);
    } else {
        graph = build_construction(spec);
    }
    const GraphStats stats = graph_stats(graph);
    if (g.json) {
        json doc = json::parse(stats_json(stats, &spec));
        if (o.print_graph) doc["graph"] = graph.to_string();
        std::cout << doc.dump() << '\n';
    } else {
        std::cout << "family " << spec.family << ": n = " << stats.order << ", e = " << stats.edges << ", delta2 = "
                  << (stats.min_codegree ? std::to_string(*stats.min_codegree) : "-")
                  << ", F32-free = " << (stats.f32_free ? "yes" : "no") << '\n';
        if (o.print_graph) std::cout << graph.to_string() << '\n';
    }
    return kOk;
}

int run_stats(const std::string& file, const Globals& g) {
    const auto lines = graph_lines(read_file(file));
    if (lines.empty()) throw ParseError("no graph in " + file);
    for (const auto& line : lines) {
        const ThreeGraph graph = named::lookup(line);
        const GraphStats stats = graph_stats(graph);
        if (g.json) {
            std::cout << stats_json(stats) << '\n';
        } else {
            std::cout << "n = " << stats.order << ", e = " << stats.edges << ", delta2 = "
                      << (stats.min_codegree ? std::to_string(*stats.min_codegree) : "-")
                      << ", F32-free = " << (stats.f32_free ? "yes" : "no") << '\n';
        }
    }
    return kOk;
}

// ---- extensions ------------------------------------------------------------

struct ExtendOptions {
    std::string host;
    std::vector<std::string> weights;
    std::string preset;
    std::string threshold;
    std::string targets;
    bool non_strict = false;
};

LemmaCase preset_case(const std::string& text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const int k = colon == std::string::npos ? 0 : parse_ints(text.substr(colon + 1)).at(0);
    if (name == "sprime-a") return sprime_a_case(k);
    if (name == "sprime-b") return sprime_b_case(k);
    if (name == "k4doubled") return k4doubled_case();
    if (name == "triangle") return triangle_case();
    throw ArgumentError("unknown preset \"" + text + "\" (sprime-a:<k>, sprime-b:<k>, k4doubled, triangle)");
}

int run_extend(const ExtendOptions& o, const Globals& g) {
    LemmaCase c;
    if (!o.preset.empty()) c = preset_case(o.preset);
    if (!o.host.empty() || !o.weights.empty()) {
        if (o.host.empty() || o.weights.empty()) throw ArgumentError("--host and --weight go together");
        std::vector<std::pair<VertexPair, Rational>> w;
        for (const auto& item : o.weights) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw ParseError("--weight expects pairs=rational, got \"" + item + "\"");
            const Rational value = parse_rational(item.substr(eq + 1));
            for (const auto& p : parse_pairs(item.substr(0, eq))) w.emplace_back(p, value);
        }
        c.weighting = PairWeighting::from_pairs(named::lookup(o.host), w);
    }
    if (c.weighting.host().order() == 0) throw ArgumentError("give --preset or --host with --weight");
    if (!o.threshold.empty()) c.threshold = parse_rational(o.threshold);
    if (!o.targets.empty()) c.targets = parse_graph_list(o.targets);
    if (o.preset.empty() && (o.threshold.empty() || o.targets.empty())) {
        throw ArgumentError("--threshold and --targets are required without --preset");
    }
    const bool strict = !o.non_strict;
    const ExtensionCheckResult r = check_extension_lemma(c.weighting, c.threshold, c.targets, strict, g.jobs);
    if (g.json) {
        json doc;
        doc["host"] = c.weighting.host().to_string();
        doc["threshold"] = to_string(c.threshold);
        doc["strict"] = strict;
        doc["verified"] = r.verified;
        if (r.counterexample) {
            doc["counterexample"] = pairs_to_string(*r.counterexample);
            doc["counterexample_weight"] = to_string(r.counterexample_weight);
        }
        doc["examined"] = r.stats.examined;
        doc["above_threshold"] = r.stats.above_threshold;
        doc["pruned"] = r.stats.pruned;
        std::cout << doc.dump() << '\n';
    } else {
        if (r.verified) {
            std::cout << "verified";
        } else {
            std::cout << "counterexample L={" << pairs_to_string(*r.counterexample) << "} weight "
                      << to_string(r.counterexample_weight) << (strict ? " > " : " >= ") << to_string(c.threshold);
        }
        std::cout << " (links examined " << r.stats.examined << ", above threshold " << r.stats.above_threshold
                  << ", pruned " << r.stats.pruned << ")\n";
    }
    return r.verified ? kOk : kRejected;
}

int run_lemma_suite(int kmax, const Globals& g) {
    const LemmaSuiteReport report = lemma_suite(kmax, g.jobs);
    const auto lines = report.lines();
    for (const auto& line : lines) {
        if (g.json) {
            std::cout << json{{"line", line}}.dump() << '\n';
        } else {
            std::cout << line << '\n';
        }
    }
    return report.all_verified() ? kOk : kRejected;
}

// ---- search ----------------------------------------------------------------

int run_bruteforce(int n, const std::string& forbid, const Globals& g) {
    const auto forbidden = parse_graph_list(forbid);
    const CoexResult r = brute_force_coex(n, forbidden, g.jobs);
    if (g.json) {
        std::cout << json{{"n", n}, {"forbidden", forbid}, {"coex", r.value}, {"witness", r.witness.to_string()}}.dump()
                  << '\n';
    } else {
        std::cout << "coex(" << n << ") = " << r.value << '\n';
        std::cout << "witness " << r.witness.to_string() << '\n';
        if (n >= 3) std::cout << "formula value " << threshold_formula(n) << " (asymptotic; small n may differ)\n";
    }
    return kOk;
}

int run_mixed_bound(const std::string& c_text, int n, const Globals& g) {
    const Rational c = parse_rational(c_text);
    const Rational bound = mixed_bound(c, n);
    const Interpolation t = interpolating_construction(c, n);
    const Rational gap = Rational(static_cast<long long>(t.edges)) - bound;
    if (g.json) {
        std::cout << json{{"c", to_string(c)},          {"n", n},       {"bound", to_string(bound)},
                          {"bound_approx", bound.convert_to<double>()},
                          {"sizes", {t.a, t.b, t.c}},   {"e", t.edges}, {"delta2", t.min_codegree},
                          {"e_minus_bound", to_string(gap)}}
                         .dump()
                  << '\n';
    } else {
        std::cout << "mixed bound " << to_string(bound) << " (~" << bound.convert_to<double>() << ")\n";
        std::cout << "T(" << t.a << "," << t.b << "," << t.c << "): e = " << t.edges << ", delta2 = " << t.min_codegree
                  << ", e - bound = " << to_string(gap) << '\n';
    }
    return kOk;
}

int run_bound_table(int lo, int hi, const Globals& g) {
    bool all = true;
    for (const BoundRow& row : lower_bound_table(lo, hi)) {
        all = all && row.min_codegree == row.formula && row.f32_free;
        if (g.json) {
            std::cout << bound_row_json(row) << '\n';
        } else {
            std::cout << "n=" << row.n << " " << row.family << " e=" << row.edges << " delta2=" << row.min_codegree
                      << " formula=" << row.formula << (row.min_codegree == row.formula ? "" : " MISMATCH") << '\n';
        }
    }
    return all ? kOk : kRejected;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Codegree Turán toolkit for 3-graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "seed for randomized modes");
    app.add_flag("--json", g.json, "machine-readable output");

    EnumerateOptions en;
    auto* enumerate = app.add_subcommand("enumerate", "admissible graphs, types or flags");
    enumerate->add_option("--forbid", en.forbid, "forbidden family (names or graph strings)");
    enumerate->add_option("--n", en.n, "order of the admissible graphs");
    enumerate->add_flag("--count-only", en.count_only, "print only the count");
    enumerate->add_option("--types", en.types, "list types of these orders, e.g. 0,2,4");
    enumerate->add_option("--flag-type", en.flag_type, "list flags on this type, e.g. \"2:(2)\"");
    enumerate->add_option("--flag-order", en.flag_order, "flag order for --flag-type");

    std::string cert_file;
    auto* verify_cmd = app.add_subcommand("verify-cert", "verify a certificate");
    verify_cmd->add_option("file", cert_file, "certificate JSON ('-' for stdin)")->required();

    std::string sharp_file;
    bool compare = false;
    auto* sharp = app.add_subcommand("sharp", "sharp graphs of a certificate");
    sharp->add_option("file", sharp_file, "certificate JSON")->required();
    sharp->add_flag("--compare-construction", compare, "compare with the construction-compatible graphs");

    ZeroCertOptions zc;
    auto* zero = app.add_subcommand("zero-cert", "print the all-zero certificate of a problem");
    zero->add_option("--forbid", zc.forbid);
    zero->add_option("--n", zc.n);
    zero->add_option("--bound", zc.bound);

    ConstructOptions co;
    auto* construct = app.add_subcommand("construct", "build a construction and report its statistics");
    construct->add_option("--family", co.family, "D, T, CT0, CT2, CT1a, CT1b, CT1c")->required();
    construct->add_option("--sizes", co.sizes, "part sizes for D and T");
    construct->add_option("--n", co.n, "order for CT0 and CT2");
    construct->add_option("--m", co.m, "parameter m for CT1a/b/c");
    construct->add_option("--k", co.k, "|S| for CT1b");
    construct->add_option("--s", co.s, "S pairs for CT1c, e.g. 1-5,5-9");
    construct->add_flag("--cycle", co.cycle, "CT1c with the 3-cycle S");
    construct->add_option("--colouring", co.colouring, "Latin colouring rows, e.g. \"0,1;1,0\"");
    construct->add_flag("--random-matching", co.random_matching, "T plus a random tripartite matching (uses --seed)");
    construct->add_flag("--graph", co.print_graph, "also print the graph string");

    std::string stats_file;
    auto* stats = app.add_subcommand("stats", "n, e, delta2 and F32-freeness of graphs in a file");
    stats->add_option("file", stats_file, "one graph string or name per line ('-' for stdin)")->required();

    ExtendOptions ex;
    auto* extend_cmd = app.add_subcommand("extend-check", "check a weighted extension statement");
    extend_cmd->add_option("--host", ex.host, "host graph (name or string)");
    extend_cmd->add_option("--weight", ex.weights, "pairs=rational, e.g. 12,34=1/4 (repeatable)");
    extend_cmd->add_option("--preset", ex.preset, "sprime-a:<k>, sprime-b:<k>, k4doubled, triangle");
    extend_cmd->add_option("--threshold", ex.threshold, "threshold c");
    extend_cmd->add_option("--targets", ex.targets, "target graphs");
    extend_cmd->add_flag("--non-strict", ex.non_strict, "count links with w(L) >= c");

    int kmax = 3;
    auto* suite = app.add_subcommand("lemma-suite", "run the scripted extension checks");
    suite->add_option("--kmax", kmax, "largest star size (3..6)");

    int bf_n = 5;
    std::string bf_forbid = "F32";
    auto* brute = app.add_subcommand("bruteforce-coex", "exact coex for n <= 6");
    brute->add_option("--n", bf_n)->required();
    brute->add_option("--forbid", bf_forbid);

    std::string mb_c;
    int mb_n = 0;
    auto* mixed = app.add_subcommand("mixed-bound", "mixed Turán/codegree lower bound");
    mixed->add_option("--c", mb_c)->required();
    mixed->add_option("--n", mb_n)->required();

    ExportOptions eo;
    auto* exp = app.add_subcommand("export-sdp", "write the feasibility SDP in SDPA sparse format");
    exp->add_option("--forbid", eo.forbid);
    exp->add_option("--n", eo.n);
    exp->add_option("--bound", eo.bound);
    exp->add_option("--types", eo.types, "active type indices (default all)");
    exp->add_option("-o,--output", eo.output, "output file (default stdout)");

    EigenOptions eg;
    auto* eigen = app.add_subcommand("eigenprofile", "limit profiles of a type in T");
    eigen->add_option("--type", eg.type, "0-based index, tau<k>, or type string")->required();
    eigen->add_option("--parts", eg.parts, "root parts, e.g. 2111 (default: every placement)");
    eigen->add_option("--forbid", eg.forbid);
    eigen->add_option("--n", eg.n);
    eigen->add_option("--cert", eg.cert, "evaluate z Q z^T against this certificate");

    int table_lo = 9, table_hi = 21;
    auto* table = app.add_subcommand("bound-table", "best construction delta2 against the formula");
    table->add_option("--from", table_lo);
    table->add_option("--to", table_hi);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*enumerate) return run_enumerate(en, g);
        if (*verify_cmd) return run_verify(cert_file, g);
        if (*sharp) return run_sharp(sharp_file, compare, g);
        if (*zero) return run_zero_cert(zc, g);
        if (*construct) return run_construct(co, g);
        if (*stats) return run_stats(stats_file, g);
        if (*extend_cmd) return run_extend(ex, g);
        if (*suite) return run_lemma_suite(kmax, g);
        if (*brute) return run_bruteforce(bf_n, bf_forbid, g);
        if (*mixed) return run_mixed_bound(mb_c, mb_n, g);
        if (*exp) return run_export(eo, g);
        if (*eigen) return run_eigenprofile(eg, g);
        if (*table) return run_bound_table(table_lo, table_hi, g);
    } catch (const CertificateError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRejected;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRejected;
    } catch (const CapabilityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCapability;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
