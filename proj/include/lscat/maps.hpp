#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lscat/algebra.hpp"
#include "lscat/catalogue.hpp"
#include "lscat/f2.hpp"
#include "lscat/invariants.hpp"

namespace lscat {

// Direction convention: a map record describes f: M -> N. The induced
// homomorphism goes the other way, f*: H*(N) -> H*(M), so `source` is the
// ring of N (the range of f) and `target` the ring of M (the domain).

struct RingHomSpec {
    Ring source;  // H*(N)
    Ring target;  // H*(M)
    /// Image of each source generator (presentation) or basis label (table),
    /// as a coefficient vector over as_table(target).
    std::vector<std::pair<std::string, BitVec>> images;
    int asserted_degree = 1;
};

struct HomDiagnostic {
    enum class Kind {
        unknown_generator,
        missing_image,
        degree_mismatch,
        relation_not_killed,
        unit_not_preserved,
        not_multiplicative,
        bad_degree_assertion,
    };
    Kind kind;
    std::string message;
};

std::string_view to_string(HomDiagnostic::Kind kind);

struct ValidatedHom {
    RingHomSpec spec;
    MultiplicationTable source;
    MultiplicationTable target;
    /// Image of every source basis element.
    std::vector<BitVec> basis_images;
    /// Entry d: rows = dim H^d(target), cols = dim H^d(source), column j is
    /// the image of the j-th degree-d source basis element.
    std::vector<BitMatrix> degree_matrices;
};

struct HomValidation {
    std::optional<ValidatedHom> hom;
    std::vector<HomDiagnostic> diagnostics;

    bool ok() const { return hom.has_value(); }
};

/// Checks degrees, relations, unit and multiplicativity. For table sources,
/// images of labels left unspecified are inferred when the label is a
/// single-term product of labels whose images are known.
HomValidation validate_hom(const RingHomSpec& spec);

/// The identity hom on a ring.
RingHomSpec identity_hom(const Ring& ring);

/// f*(x) for x a coefficient vector over the source table.
BitVec apply(const ValidatedHom& h, const BitVec& x);

/// The hom that applies `first` and then `second` (source of `first`,
/// target of `second`); degrees multiply.
RingHomSpec compose(const ValidatedHom& first, const ValidatedHom& second);

struct InjectivityResult {
    std::vector<bool> per_degree;
    bool overall = true;
};

InjectivityResult check_injectivity(const ValidatedHom& h);

struct TopClassResult {
    /// nullopt when the check does not apply (no unique top classes or
    /// differing dimensions); see `diagnostic`.
    std::optional<bool> holds;
    std::string diagnostic;
};

TopClassResult check_top_class(const ValidatedHom& h);

enum class CriterionId {
    low_dim,
    prop_cl_monotone,
    cor_cat_transfer,
    thm_main,
    morse_transfer,
    lemma_injectivity,
    thm_torus,
};

enum class Status { certified, violated, inconclusive, not_applicable };

std::string_view to_string(CriterionId id);
std::string_view to_string(Status s);

struct CriterionVerdict {
    CriterionId criterion;
    Status status = Status::inconclusive;
    std::string reason;
    std::vector<std::string> citations;

    bool operator==(const CriterionVerdict&) const = default;
};

/// Certified when cl(M) >= cl(N); violated otherwise (no degree +-1 map).
CriterionVerdict check_cl_monotone(const Ring& m_ring, const Ring& n_ring);

/// When cl(N) = cat(N), concludes cat M >= cat N and raises M's cat lower
/// bound accordingly.
CriterionVerdict cor_cat_transfer(BoundLedger& m_ledger, const BoundLedger& n_ledger, bool n_has_ring = true);

/// Stably parallelizable M, N with N (q-1)-connected and dim N <= 2 q cat N - 4.
CriterionVerdict thm_main_check(const SpaceRecord& m, const SpaceRecord& n);

struct TorusStabilization {
    unsigned k = 0;
    long long lhs = 0;  // 2k - 4
    long long rhs = 0;  // k + n
};

/// Least k with 2k - 4 >= k + n, namely k = n + 4.
TorusStabilization torus_stabilization_k(unsigned n);

/// Stably parallelizable M, N: cat(M x T^k) >= cat(N x T^k) for k = n + 4.
CriterionVerdict thm_torus_check(const SpaceRecord& m, const SpaceRecord& n);

struct LowDimExtras {
    std::optional<unsigned> genus_m;
    std::optional<unsigned> genus_n;
};

CriterionVerdict low_dim_check(unsigned n, const LowDimExtras& extras = {});

/// Throws std::invalid_argument when the dimensions differ.
CriterionVerdict morse_transfer_check(const MorseData& m, const MorseData& n);

/// Injectivity of f* in every degree plus the top-class condition.
CriterionVerdict hom_check(const ValidatedHom& h);

struct DegreeOneReport {
    std::vector<CriterionVerdict> verdicts;
    Status overall = Status::inconclusive;
    std::vector<std::string> notes;
    BoundLedger m_ledger;
    BoundLedger n_ledger;
};

/// Runs every applicable criterion for a hypothetical degree +-1 map M -> N
/// in the order low_dim, cl_monotone, cor_cat_transfer, thm_main,
/// morse_transfer, then the hom checks when a hom is given. Overall status is
/// violated if any necessary condition fails, else certified if some
/// criterion concludes cat M >= cat N, else inconclusive.
/// Throws std::invalid_argument when dim M != dim N.
DegreeOneReport full_report(const SpaceRecord& m, const SpaceRecord& n, const std::optional<RingHomSpec>& hom = {});

}  // namespace lscat
