#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "lscat/f2.hpp"

namespace lscat {

/// Raised when ring data violates a structural invariant.
class AlgebraError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct GeneratorSpec {
    std::string name;
    unsigned degree = 1;

    bool operator==(const GeneratorSpec&) const = default;
};

/// Exponent vector, one entry per generator of the owning presentation.
struct Monomial {
    std::vector<unsigned> exponents;

    auto operator<=>(const Monomial&) const = default;
};

/// A class in a truncated presentation: a set of monomials, each with
/// coefficient 1. Addition is symmetric difference.
class Element {
  public:
    Element() = default;
    explicit Element(Monomial m);
    /// Normalizes by cancelling repeated monomials in pairs.
    static Element from_terms(std::vector<Monomial> terms);

    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Element& operator+=(const Element& other);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    bool operator==(const Element&) const = default;

  private:
    std::vector<Monomial> terms_;  // sorted, no duplicates
};

/// Z/2[b_1, ..., b_k] / (b_1^{p_1}, ..., b_k^{p_k}) with a declared formal
/// dimension. p_i = 1 makes b_i zero.
class TruncatedPresentation {
  public:
    /// The point: no generators, top degree 0.
    TruncatedPresentation() = default;
    TruncatedPresentation(std::vector<GeneratorSpec> generators, std::vector<unsigned> truncations,
                          unsigned top_degree);

    const std::vector<GeneratorSpec>& generators() const { return generators_; }
    const std::vector<unsigned>& truncations() const { return truncations_; }
    std::size_t num_generators() const { return generators_.size(); }
    unsigned top_degree() const { return top_degree_; }
    std::optional<std::size_t> generator_index(std::string_view name) const;

    /// Number of normal-form monomials (saturates at SIZE_MAX).
    std::size_t basis_size() const;
    /// Degree of the largest normal-form monomial.
    unsigned max_degree() const;
    /// Non-fatal inconsistencies, e.g. monomials above the formal dimension.
    std::vector<std::string> warnings() const;

    unsigned degree(const Monomial& m) const;
    std::optional<unsigned> homogeneous_degree(const Element& e) const;

    Element unit() const;
    Element generator(std::size_t i) const;
    /// Single monomial if every exponent is below its truncation, else zero.
    Element normal_form(std::span<const unsigned> raw_exponents) const;
    Element multiply(const Element& a, const Element& b) const;
    Element power(const Element& a, unsigned exponent) const;

    /// Normal-form monomials of degree d in lexicographic order.
    std::vector<Monomial> basis_in_degree(unsigned d) const;
    /// All normal-form monomials, lexicographic order.
    std::vector<Monomial> basis() const;
    /// Position of a normal-form monomial in basis().
    std::size_t index_of(const Monomial& m) const;

    std::string format(const Monomial& m) const;
    std::string format(const Element& e) const;

    bool operator==(const TruncatedPresentation&) const = default;

  private:
    void check_monomial(const Monomial& m) const;

    std::vector<GeneratorSpec> generators_;
    std::vector<unsigned> truncations_;
    unsigned top_degree_ = 0;
};

template <class R>
struct Tensored {
    R ring;
    /// (original, renamed) for every generator or label of the right factor
    /// that collided with a name in the left factor.
    std::vector<std::pair<std::string, std::string>> renamed;
};

struct BasisElement {
    std::string label;
    unsigned degree = 0;

    bool operator==(const BasisElement&) const = default;
};

/// b_left * b_right = sum of b_t over `terms` (indices into the basis).
struct ProductRule {
    std::size_t left = 0;
    std::size_t right = 0;
    std::vector<std::size_t> terms;
};

/// A finite graded-commutative algebra over Z/2 given by a basis and
/// structure constants. Elements are coefficient vectors over the basis.
class MultiplicationTable {
  public:
    enum class Check { full, trusted };

    /// The point: unit only, top degree 0.
    MultiplicationTable();
    /// Validates unit, degree, commutativity and (with Check::full)
    /// associativity constraints; throws AlgebraError.
    MultiplicationTable(std::vector<BasisElement> basis, unsigned top_degree, std::vector<ProductRule> products,
                        Check check = Check::full);

    std::size_t size() const { return basis_.size(); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const std::string& label(std::size_t i) const { return basis_[i].label; }
    unsigned degree(std::size_t i) const { return basis_[i].degree; }
    std::optional<std::size_t> index_of(std::string_view label) const;
    std::size_t unit_index() const { return unit_; }
    unsigned top_degree() const { return top_degree_; }

    /// Indices of basis elements of degree d in declaration order.
    std::vector<std::size_t> basis_in_degree(unsigned d) const;
    /// The unique basis element of degree top_degree(), if there is exactly one.
    std::optional<std::size_t> top_class() const;

    BitVec zero() const { return BitVec(size()); }
    BitVec unit() const { return BitVec::unit(size(), unit_); }
    BitVec basis_vector(std::size_t i) const { return BitVec::unit(size(), i); }

    BitVec product(std::size_t i, std::size_t j) const;
    /// Terms of b_i * b_j; empty when the product is zero.
    std::span<const std::uint32_t> product_terms(std::size_t i, std::size_t j) const { return lookup(i, j); }
    BitVec multiply(const BitVec& a, const BitVec& b) const;
    BitVec power(const BitVec& a, unsigned exponent) const;
    std::optional<unsigned> homogeneous_degree(const BitVec& v) const;

    /// Calls f(j, terms) for every j with b_i * b_j != 0.
    template <class F>
    void for_each_partner(std::size_t i, F&& f) const {
        for (std::size_t e = row_start_[i]; e < row_start_[i + 1]; ++e) {
            const std::span<const std::uint32_t> terms(terms_.data() + term_start_[e],
                                                       term_start_[e + 1] - term_start_[e]);
            f(static_cast<std::size_t>(partner_[e]), terms);
        }
    }

    /// Nonzero products with left <= right, ordered by (left, right).
    std::vector<ProductRule> product_rules() const;
    /// Number of ordered pairs with nonzero product.
    std::size_t nonzero_products() const { return partner_.size(); }

    std::string format(const BitVec& v) const;

    friend MultiplicationTable expand_to_table(const TruncatedPresentation& p);
    friend Tensored<MultiplicationTable> tensor_product(const MultiplicationTable& a, const MultiplicationTable& b);

  private:
    struct Raw {};
    MultiplicationTable(Raw, std::vector<BasisElement> basis, unsigned top_degree);
    void index_basis();
    std::span<const std::uint32_t> lookup(std::size_t i, std::size_t j) const;
    void verify_associativity() const;

    std::vector<BasisElement> basis_;
    unsigned top_degree_ = 0;
    std::size_t unit_ = 0;
    std::unordered_map<std::string, std::size_t> label_index_;
    std::vector<std::vector<std::size_t>> by_degree_;
    // Symmetric sparse product storage: row i lists partners j (sorted) with
    // the index range of the product's terms.
    std::vector<std::size_t> row_start_;
    std::vector<std::uint32_t> partner_;
    std::vector<std::size_t> term_start_;
    std::vector<std::uint32_t> terms_;
};

using Ring = std::variant<TruncatedPresentation, MultiplicationTable>;

unsigned top_degree(const Ring& ring);

/// Coefficient vector of a presentation element over the basis of expand_to_table(p).
BitVec embed(const TruncatedPresentation& p, const Element& e);

/// Table whose basis is the normal-form monomials of p in lexicographic order.
/// Its top degree is max(p.top_degree(), p.max_degree()).
MultiplicationTable expand_to_table(const TruncatedPresentation& p);
MultiplicationTable as_table(const Ring& ring);

/// Largest presentation that expand_to_table accepts.
inline constexpr std::size_t kMaxExpandedBasis = std::size_t{1} << 20;

/// Entry d is the number of basis elements in degree d.
std::vector<std::size_t> poincare_polynomial(const TruncatedPresentation& p);
std::vector<std::size_t> poincare_polynomial(const MultiplicationTable& t);
std::vector<std::size_t> poincare_polynomial(const Ring& ring);

Tensored<TruncatedPresentation> tensor_product(const TruncatedPresentation& a, const TruncatedPresentation& b);
Tensored<MultiplicationTable> tensor_product(const MultiplicationTable& a, const MultiplicationTable& b);
/// Two presentations stay a presentation; any table operand forces tables.
Tensored<Ring> tensor_product(const Ring& a, const Ring& b);

/// Rank of the pairing H^d x H^{n-d} -> H^n for each d, or nullopt when the
/// table has no unique top class.
std::optional<std::vector<std::size_t>> duality_pairing_ranks(const MultiplicationTable& t);
bool check_poincare_duality(const MultiplicationTable& t);

}  // namespace lscat
