#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coex/certificate.hpp"
#include "coex/enumeration.hpp"
#include "coex/errors.hpp"
#include "coex/flag_calculus.hpp"
#include "coex/hypergraph.hpp"
#include "coex/linalg.hpp"

#include "json.hpp"

#include <numeric>
#include <sstream>

using namespace coex;
using nlohmann::json;

namespace {

Rational frac(long long p, long long q = 1) { return Rational(BigInt(p), BigInt(q)); }

std::shared_ptr<const CodegreeProblem> problem() {
    static const auto p = std::make_shared<const CodegreeProblem>(CodegreeProblem::build({named::f32()}, 6));
    return p;
}

const FlagTables& tables() {
    static const FlagTables t = build_tables(*problem(), 1, true);
    return t;
}

Certificate zero_certificate(const Rational& bound) {
    Certificate cert;
    cert.problem = problem();
    cert.bound = bound;
    cert.density = RationalVector::Zero(static_cast<Eigen::Index>(problem()->axiom_basis.size()));
    return cert;
}

json zero_document() { return json::parse(certificate_to_json(zero_certificate(frac(1, 3)))); }

Diagnostic diagnose(const json& doc) {
    try {
        parse_certificate(doc.dump(), problem());
    } catch (const CertificateError& e) {
        return e.code();
    }
    FAIL("certificate was accepted by the parser");
    return Diagnostic::syntax;
}

std::size_t marker_index() {
    return problem()->axiom_basis.find({parse_graph("5:123"), 2}).value();
}

}  // namespace

TEST_CASE("exact LDL^T and rank") {
    RationalMatrix a(2, 2);
    a << frac(1), frac(2), frac(2), frac(1);
    CHECK_FALSE(ldlt_psd(a).positive_semidefinite);
    a << frac(1), frac(1), frac(1), frac(1);
    CHECK(ldlt_psd(a).positive_semidefinite);
    CHECK(ldlt_psd(a).rank == 1);
    a << frac(0), frac(1), frac(1), frac(0);
    CHECK_FALSE(ldlt_psd(a).positive_semidefinite);
    a << frac(1), frac(0), frac(1), frac(1);
    CHECK_FALSE(ldlt_psd(a).positive_semidefinite);
    a << frac(0), frac(0), frac(0), frac(0);
    CHECK(ldlt_psd(a).positive_semidefinite);
    CHECK(ldlt_psd(a).rank == 0);

    // R diag(d) R^T with d > 0 is PSD of rank rank(R)
    RationalMatrix r(4, 3);
    r << frac(1), frac(2), frac(3), frac(0), frac(1, 2), frac(1), frac(1), frac(3), frac(5), frac(-2), frac(0), frac(7);
    RationalVector d(3);
    d << frac(1), frac(2, 3), frac(5);
    const RationalMatrix q = factored_product(r, d);
    CHECK(exact_rank(r) == 3);
    CHECK(ldlt_psd(q).positive_semidefinite);
    CHECK(ldlt_psd(q).rank == 3);
    RationalMatrix dependent = r;
    dependent.col(2) = r.col(0) + r.col(1);
    CHECK(exact_rank(dependent) == 2);
    CHECK(ldlt_psd(factored_product(dependent, d)).rank == 2);
    d(1) = frac(-1);
    CHECK_FALSE(ldlt_psd(factored_product(r, d)).positive_semidefinite);
}

TEST_CASE("zero certificate is accepted vacuously") {
    const Certificate cert = parse_certificate(certificate_to_json(zero_certificate(frac(1, 3))), problem());
    const VerificationReport rep = verify(cert, tables());
    CHECK(rep.accepted);
    CHECK(rep.vacuous);
    CHECK(rep.identity_ok);
    CHECK(rep.max_alpha == 0);
    CHECK(rep.sharp_indices.size() == 426);
    CHECK_FALSE(rep.axiom_flag_positive);
    CHECK(format_report(rep, cert).find("accepted (vacuous)") != std::string::npos);
}

TEST_CASE("single axiom flag certificates reproduce the axiom counts") {
    const auto& p = *problem();
    const Rational beta = frac(1, 3);
    for (std::size_t j = 0; j < p.axiom_basis.size(); j += 5) {
        Certificate cert = zero_certificate(beta);
        cert.density(static_cast<Eigen::Index>(j)) = 1;
        const RationalVector alpha = compute_alpha(cert, tables());
        for (std::size_t i = 0; i < p.admissible.size(); ++i) {
            const AxiomCounts c = axiom_counts(p.axiom_basis[j], p.admissible[i]);
            CHECK(alpha(static_cast<Eigen::Index>(i)) == frac(c.a) - beta * frac(c.b));
        }
    }
}

TEST_CASE("verdicts") {
    const auto& p = *problem();
    // A <= B everywhere, so any density certificate holds at bound 1.
    Certificate loose = zero_certificate(frac(1));
    for (Eigen::Index j = 0; j < loose.density.size(); ++j) loose.density(j) = frac(1, 154);
    const VerificationReport ok = verify(loose, tables());
    CHECK(ok.accepted);
    CHECK_FALSE(ok.vacuous);
    CHECK(ok.axiom_flag_positive);

    // the marker alone at 1/3 is violated on K4 plus two isolated vertices
    Certificate tight = zero_certificate(frac(1, 3));
    tight.density(static_cast<Eigen::Index>(marker_index())) = 1;
    const VerificationReport bad = verify(tight, tables());
    CHECK_FALSE(bad.accepted);
    const auto k4 = p.admissible.find(parse_graph("6:123124134234")).value();
    CHECK(bad.alpha(static_cast<Eigen::Index>(k4)) == frac(24) - frac(24, 3));
    CHECK(std::find(bad.positive_indices.begin(), bad.positive_indices.end(), k4) != bad.positive_indices.end());

    // an indefinite block is caught even when built programmatically
    Certificate indefinite = zero_certificate(frac(1, 3));
    CertificateBlock block;
    block.type_index = 1;
    block.r = RationalMatrix::Zero(12, 1);
    block.r(0, 0) = 1;
    block.qdiag = RationalVector::Constant(1, frac(-1));
    indefinite.blocks.push_back(block);
    const VerificationReport neg = verify(indefinite, tables());
    CHECK_FALSE(neg.psd_ok);
    CHECK_FALSE(neg.accepted);

    Certificate negative_c = zero_certificate(frac(1, 3));
    negative_c.density(0) = frac(-1);
    CHECK_FALSE(verify(negative_c, tables()).c_nonneg);
}

TEST_CASE("diagnostic codes") {
    CHECK(diagnose(json::parse("[1]")) == Diagnostic::syntax);
    {
        json d = zero_document();
        d.erase("bound");
        CHECK(diagnose(d) == Diagnostic::syntax);
    }
    {
        json d = zero_document();
        d["bound"] = "1/x";
        CHECK(diagnose(d) == Diagnostic::syntax);
    }
    {
        json d = zero_document();
        d["bound"] = "3/2";
        CHECK(diagnose(d) == Diagnostic::out_of_range);
    }
    {
        json d = zero_document();
        d["density_coefficients"].erase(0);
        CHECK(diagnose(d) == Diagnostic::dimension_mismatch);
    }
    {
        json d = zero_document();
        d["density_coefficients"][3] = "-1/2";
        CHECK(diagnose(d) == Diagnostic::negative_coefficient);
    }
    {
        json d = zero_document();
        d["axiom_flags"][0] = "5:123124125345(2)";
        CHECK(diagnose(d) == Diagnostic::unknown_graph);
    }
    {
        json d = zero_document();
        d["types"][6] = "4:(4)";
        CHECK(diagnose(d) == Diagnostic::dimension_mismatch);
    }
    {
        json d = zero_document();
        d["types"][1] = "3:123(3)";
        CHECK(diagnose(d) == Diagnostic::unknown_graph);
    }
    {
        json d = zero_document();
        d["qdash_matrices"][1] = {"1", "-1"};
        d["r_matrices"][1] = json::array();
        for (int i = 0; i < 12; ++i) d["r_matrices"][1].push_back({"1", "0"});
        CHECK(diagnose(d) == Diagnostic::negative_diagonal);
    }
    {
        json d = zero_document();
        d["qdash_matrices"][1] = {"1"};
        d["r_matrices"][1] = json::array();
        for (int i = 0; i < 11; ++i) d["r_matrices"][1].push_back({"1"});
        CHECK(diagnose(d) == Diagnostic::dimension_mismatch);
    }
    {
        json d = zero_document();
        d["n"] = 5;
        CHECK(diagnose(d) == Diagnostic::dimension_mismatch);
    }
    {
        json d = zero_document();
        d["n"] = 9;
        try {
            parse_certificate(d.dump());
            FAIL("accepted n = 9");
        } catch (const CertificateError& e) {
            CHECK(e.code() == Diagnostic::out_of_range);
        }
    }
    CHECK(diagnostic_name(Diagnostic::negative_diagonal) == "negative diagonal");
}

TEST_CASE("certificate JSON round trip with reordered flags") {
    Certificate cert = zero_certificate(frac(2, 7));
    cert.density(5) = frac(3, 11);
    cert.density(40) = frac(1, 2);
    CertificateBlock block;
    block.type_index = 1;
    block.r = RationalMatrix::Zero(12, 2);
    for (Eigen::Index u = 0; u < 12; ++u) {
        block.r(u, 0) = frac(u + 1);
        block.r(u, 1) = frac(u % 3, 5);
    }
    block.qdiag.resize(2);
    block.qdiag << frac(1, 9), frac(4);
    cert.blocks.push_back(block);

    json doc = json::parse(certificate_to_json(cert));
    // listing flags and their rows in reverse must not change the meaning
    std::reverse(doc["flags"][1].begin(), doc["flags"][1].end());
    std::reverse(doc["r_matrices"][1].begin(), doc["r_matrices"][1].end());
    std::reverse(doc["axiom_flags"].begin(), doc["axiom_flags"].end());
    std::reverse(doc["density_coefficients"].begin(), doc["density_coefficients"].end());
    const Certificate back = parse_certificate(doc.dump(), problem());
    CHECK(back.bound == cert.bound);
    CHECK(back.density == cert.density);
    REQUIRE(back.blocks.size() == 1);
    CHECK(back.blocks[0].q() == block.q());
    CHECK(certificate_to_json(back) == certificate_to_json(cert));
    CHECK(compute_alpha(back, tables()) == compute_alpha(cert, tables()));
}

TEST_CASE("limit profiles in the tripartite construction") {
    const auto& p = *problem();
    const FlagBasis& k4_minus = p.flag_bases[5];
    for (const std::vector<int> parts : {std::vector<int>{2, 1, 1, 1}, {1, 3, 3, 3}, {3, 2, 2, 2}}) {
        const auto z = limit_profile(k4_minus, parts);
        std::vector<std::string> nonzero;
        for (std::size_t u = 0; u < z.size(); ++u) {
            if (z[u] != 0) {
                CHECK(z[u] == 1);
                nonzero.push_back(k4_minus[u].to_string());
            }
        }
        CHECK(z.size() == 24);
        CHECK(nonzero.size() == 3);
    }
    const auto z = limit_profile(k4_minus, std::vector<int>{2, 1, 1, 1});
    for (const char* s : {"5:123124134(4)", "5:123124125134135145(4)", "5:123124134235245345(4)"}) {
        const auto idx = k4_minus.find(parse_rooted(s));
        REQUIRE(idx.has_value());
        CHECK(z[*idx] == 1);
    }

    const auto same = limit_profile(p.flag_bases[1], std::vector<int>{1, 1});
    CHECK(std::accumulate(same.begin(), same.end(), 0LL) == 9);
    CHECK_THROWS_AS(limit_profile(k4_minus, std::vector<int>{1, 1, 1, 1}), PreconditionError);
    CHECK(consistent_root_parts(p.flag_bases[6]).empty());
    for (std::size_t t = 0; t < p.types.size(); ++t) {
        const FlagBasis& b = p.flag_bases[t];
        long long expected = 1;
        for (int i = b.type_order(); i < b.flag_order(); ++i) expected *= 3;
        for (const auto& parts : consistent_root_parts(b)) {
            const auto prof = limit_profile(b, parts);
            CHECK(std::accumulate(prof.begin(), prof.end(), 0LL) == expected);
        }
    }
}

TEST_CASE("sharp-set comparison") {
    VerificationReport rep;
    rep.sharp_indices = {1, 4, 9};
    const std::vector<std::size_t> want{1, 2, 4};
    const SharpComparison cmp = compare_sharp(rep, want);
    CHECK(cmp.missing == std::vector<std::size_t>{2});
    CHECK(cmp.extra == std::vector<std::size_t>{9});
    CHECK_FALSE(cmp.covers_expected());
    const std::vector<std::size_t> subset{4, 9};
    CHECK(compare_sharp(rep, subset).covers_expected());
    CHECK_FALSE(compare_sharp(rep, subset).equal());
}

TEST_CASE("SDPA export encodes the alpha constraints") {
    const auto& p = *problem();
    const Rational bound = frac(2, 5);
    const std::string sdp = export_sdp(p, tables(), bound);

    std::istringstream in(sdp);
    std::string line;
    std::vector<std::string> body;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '*') body.push_back(line);
    }
    REQUIRE(body.size() > 4);
    CHECK(body[0] == "427");
    CHECK(body[1] == "9");
    CHECK(body[2] == "2 12 64 56 41 24 23 -154 -426");

    // Evaluate each constraint at a sample point and compare with alpha.
    Certificate cert = zero_certificate(bound);
    cert.density(static_cast<Eigen::Index>(marker_index())) = frac(1, 2);
    cert.density(7) = frac(1, 2);
    CertificateBlock block;
    block.type_index = 2;
    block.r = RationalMatrix::Zero(64, 1);
    for (Eigen::Index u = 0; u < 64; ++u) block.r(u, 0) = frac(u % 5 - 2, 3);
    block.qdiag = RationalVector::Constant(1, frac(1));
    cert.blocks.push_back(block);
    const RationalMatrix q = block.q();
    const RationalVector alpha = compute_alpha(cert, tables());

    std::vector<Rational> value(428, Rational(0));
    for (std::size_t k = 4; k < body.size(); ++k) {
        std::istringstream row(body[k]);
        int m = 0, b = 0, i = 0, j = 0;
        std::string v;
        row >> m >> b >> i >> j >> v;
        const Rational f = Rational(BigInt(v), BigInt(1));
        Rational x = 0;
        if (b == 3) x = q(i - 1, j - 1);
        if (b == 8 && i == j) x = cert.density(i - 1);
        value[static_cast<std::size_t>(m)] += i == j ? f * x : 2 * f * x;
    }
    for (std::size_t i = 0; i < p.admissible.size(); ++i) {
        CHECK(value[i + 1] == 2 * 5 * alpha(static_cast<Eigen::Index>(i)));
    }
    CHECK(value[427] == 1);
}
