#pragma once

#include "coex/enumeration.hpp"
#include "coex/errors.hpp"
#include "coex/flag_calculus.hpp"
#include "coex/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coex {

enum class Diagnostic {
    syntax,
    dimension_mismatch,
    negative_diagonal,
    negative_coefficient,
    unknown_graph,
    out_of_range,
};

/// "syntax", "dimension mismatch", "negative diagonal", ...
std::string_view diagnostic_name(Diagnostic d);

class CertificateError : public ParseError {
public:
    CertificateError(Diagnostic code, const std::string& detail);
    Diagnostic code() const { return code_; }

private:
    Diagnostic code_;
};

/// Q = R diag(qdiag) R^T for one type; R rows follow the artifact's flag order.
struct CertificateBlock {
    std::size_t type_index = 0;
    RationalMatrix r;
    RationalVector qdiag;

    RationalMatrix q() const;
};

struct Certificate {
    std::shared_ptr<const CodegreeProblem> problem;
    Rational bound;
    /// Active types only, by increasing type index.
    std::vector<CertificateBlock> blocks;
    /// Indexed by the artifact's axiom basis.
    RationalVector density;
    /// admissible_order[i] = artifact index of the certificate's i-th
    /// admissible graph, when the document lists them.
    std::optional<std::vector<std::size_t>> admissible_order;

    const CertificateBlock* block_for(std::size_t type_index) const;
};

/// Parses the JSON certificate schema and resolves every graph against the
/// artifact's bases. Throws CertificateError with a distinct code per defect.
/// When `problem` is given it must match the document's n and forbidden list.
Certificate parse_certificate(std::string_view document, std::shared_ptr<const CodegreeProblem> problem = nullptr,
                              int jobs = 1);

/// Serializes back to the schema (artifact ordering, no index maps).
std::string certificate_to_json(const Certificate& cert);

/// alpha_i = Sum_j c_j (A_ij - beta B_ij) + Sum_t Sum_uv Q^t_uv J^{t,uv}_i.
RationalVector compute_alpha(const Certificate& cert, const FlagTables& tables);

struct ProfileCheck {
    std::size_t type_index = 0;
    std::vector<int> root_parts;
    Rational value;  // z Q z^T
};

struct VerificationReport {
    RationalVector alpha;
    Rational max_alpha;
    bool psd_ok = false;
    bool c_nonneg = false;
    bool axiom_flag_positive = false;
    bool accepted = false;
    bool vacuous = false;
    bool identity_ok = false;
    std::vector<std::size_t> sharp_indices;
    std::vector<std::size_t> positive_indices;
    /// (type index, rank of Q) per active block.
    std::vector<std::pair<std::size_t, int>> block_ranks;
    /// z Q z^T for every active type and every placement of its roots in T.
    std::vector<ProfileCheck> profiles;
    bool profiles_zero = true;
    std::vector<std::string> reasons;
};

/// Verdict: accepted iff every alpha_i <= 0, every block is PSD and c >= 0.
VerificationReport verify(const Certificate& cert, const FlagTables& tables);
VerificationReport verify(const Certificate& cert, int jobs = 1);

std::string format_report(const VerificationReport& report, const Certificate& cert);
std::string report_json(const VerificationReport& report, const Certificate& cert);

inline const std::vector<std::size_t>& sharp_set(const VerificationReport& report) { return report.sharp_indices; }

struct SharpComparison {
    std::vector<std::size_t> missing;  // expected but not sharp
    std::vector<std::size_t> extra;    // sharp but not expected
    bool covers_expected() const { return missing.empty(); }
    bool equal() const { return missing.empty() && extra.empty(); }
};

SharpComparison compare_sharp(const VerificationReport& report, std::span<const std::size_t> expected);

/// Places the roots in parts root_parts (values 1..3) of a large T_{V1,V2,V3}
/// and counts, per basis flag, the assignments of the remaining vertices to
/// parts that produce it. Throws PreconditionError if the placement does not
/// induce the basis type.
std::vector<long long> limit_profile(const FlagBasis& basis, std::span<const int> root_parts);

/// Every root placement in {1,2,3}^k inducing the basis type.
std::vector<std::vector<int>> consistent_root_parts(const FlagBasis& basis);

/// Feasibility SDP in SDPA sparse format: one dense block per active type, a
/// diagonal block for c and a diagonal slack block; one equality per
/// admissible graph (alpha_i + s_i = 0, scaled to integers) and Sum c = 1.
std::string export_sdp(const CodegreeProblem& problem, const FlagTables& tables, const Rational& bound,
                       std::span<const bool> active_types = {});

}  // namespace coex
