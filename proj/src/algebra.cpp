#include "lscat/algebra.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace lscat {

// ---------------------------------------------------------------------------
// Element

Element::Element(Monomial m) { terms_.push_back(std::move(m)); }

Element Element::from_terms(std::vector<Monomial> terms) {
    std::sort(terms.begin(), terms.end());
    Element e;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 == 1) e.terms_.push_back(std::move(terms[i]));
        i = j;
    }
    return e;
}

Element& Element::operator+=(const Element& other) {
    std::vector<Monomial> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(out));
    terms_ = std::move(out);
    return *this;
}

// ---------------------------------------------------------------------------
// TruncatedPresentation

TruncatedPresentation::TruncatedPresentation(std::vector<GeneratorSpec> generators, std::vector<unsigned> truncations,
                                             unsigned top_degree)
    : generators_(std::move(generators)), truncations_(std::move(truncations)), top_degree_(top_degree) {
    if (generators_.size() != truncations_.size())
        throw AlgebraError("every generator needs exactly one truncation exponent");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto& g = generators_[i];
        if (g.name.empty()) throw AlgebraError("generator name must not be empty");
        if (!seen.insert(g.name).second) throw AlgebraError("duplicate generator '" + g.name + "'");
        if (g.degree < 1) throw AlgebraError("generator '" + g.name + "' must have degree >= 1");
        if (truncations_[i] < 1) throw AlgebraError("truncation exponent of '" + g.name + "' must be >= 1");
    }
}

std::optional<std::size_t> TruncatedPresentation::generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name) return i;
    return std::nullopt;
}

std::size_t TruncatedPresentation::basis_size() const {
    std::size_t n = 1;
    for (auto p : truncations_) {
        if (n > std::numeric_limits<std::size_t>::max() / p) return std::numeric_limits<std::size_t>::max();
        n *= p;
    }
    return n;
}

unsigned TruncatedPresentation::max_degree() const {
    unsigned d = 0;
    for (std::size_t i = 0; i < generators_.size(); ++i) d += (truncations_[i] - 1) * generators_[i].degree;
    return d;
}

std::vector<std::string> TruncatedPresentation::warnings() const {
    std::vector<std::string> out;
    if (max_degree() > top_degree_) {
        Monomial top;
        for (auto p : truncations_) top.exponents.push_back(p - 1);
        out.push_back("monomial " + format(top) + " has degree " + std::to_string(max_degree()) +
                      " above the formal dimension " + std::to_string(top_degree_));
    }
    return out;
}

void TruncatedPresentation::check_monomial(const Monomial& m) const {
    if (m.exponents.size() != generators_.size())
        throw AlgebraError("monomial has " + std::to_string(m.exponents.size()) + " exponents, presentation has " +
                           std::to_string(generators_.size()) + " generators");
}

unsigned TruncatedPresentation::degree(const Monomial& m) const {
    check_monomial(m);
    unsigned d = 0;
    for (std::size_t i = 0; i < generators_.size(); ++i) d += m.exponents[i] * generators_[i].degree;
    return d;
}

std::optional<unsigned> TruncatedPresentation::homogeneous_degree(const Element& e) const {
    if (e.is_zero()) return std::nullopt;
    const unsigned d = degree(e.terms().front());
    for (const auto& t : e.terms())
        if (degree(t) != d) return std::nullopt;
    return d;
}

Element TruncatedPresentation::unit() const { return Element(Monomial{std::vector<unsigned>(generators_.size(), 0)}); }

Element TruncatedPresentation::generator(std::size_t i) const {
    std::vector<unsigned> e(generators_.size(), 0);
    e.at(i) = 1;
    return normal_form(e);
}

Element TruncatedPresentation::normal_form(std::span<const unsigned> raw_exponents) const {
    if (raw_exponents.size() != generators_.size())
        throw AlgebraError("exponent vector length " + std::to_string(raw_exponents.size()) + " does not match " +
                           std::to_string(generators_.size()) + " generators");
    for (std::size_t i = 0; i < raw_exponents.size(); ++i)
        if (raw_exponents[i] >= truncations_[i]) return Element{};
    return Element(Monomial{{raw_exponents.begin(), raw_exponents.end()}});
}

Element TruncatedPresentation::multiply(const Element& a, const Element& b) const {
    std::vector<Monomial> out;
    std::vector<unsigned> sum(generators_.size());
    for (const auto& x : a.terms()) {
        check_monomial(x);
        for (const auto& y : b.terms()) {
            check_monomial(y);
            bool alive = true;
            for (std::size_t i = 0; i < sum.size() && alive; ++i) {
                sum[i] = x.exponents[i] + y.exponents[i];
                alive = sum[i] < truncations_[i];
            }
            if (alive) out.push_back(Monomial{sum});
        }
    }
    return Element::from_terms(std::move(out));
}

Element TruncatedPresentation::power(const Element& a, unsigned exponent) const {
    Element result = unit();
    for (unsigned k = 0; k < exponent && !result.is_zero(); ++k) result = multiply(result, a);
    return result;
}

std::vector<Monomial> TruncatedPresentation::basis_in_degree(unsigned d) const {
    std::vector<Monomial> out;
    std::vector<unsigned> e(generators_.size(), 0);
    // Depth-first over generators in declaration order with ascending
    // exponents yields lexicographic order.
    auto rec = [&](auto&& self, std::size_t g, unsigned remaining) -> void {
        if (g == generators_.size()) {
            if (remaining == 0) out.push_back(Monomial{e});
            return;
        }
        const unsigned deg = generators_[g].degree;
        for (unsigned k = 0; k < truncations_[g] && k * deg <= remaining; ++k) {
            e[g] = k;
            self(self, g + 1, remaining - k * deg);
        }
        e[g] = 0;
    };
    rec(rec, 0, d);
    return out;
}

std::vector<Monomial> TruncatedPresentation::basis() const {
    const std::size_t n = basis_size();
    if (n > kMaxExpandedBasis) throw AlgebraError("presentation too large to enumerate");
    std::vector<Monomial> out;
    out.reserve(n);
    std::vector<unsigned> e(generators_.size(), 0);
    for (std::size_t idx = 0; idx < n; ++idx) {
        out.push_back(Monomial{e});
        for (std::size_t g = generators_.size(); g-- > 0;) {
            if (++e[g] < truncations_[g]) break;
            e[g] = 0;
        }
    }
    return out;
}

std::size_t TruncatedPresentation::index_of(const Monomial& m) const {
    check_monomial(m);
    std::size_t idx = 0;
    for (std::size_t g = 0; g < generators_.size(); ++g) {
        if (m.exponents[g] >= truncations_[g]) throw AlgebraError("monomial is not in normal form");
        idx = idx * truncations_[g] + m.exponents[g];
    }
    return idx;
}

std::string TruncatedPresentation::format(const Monomial& m) const {
    check_monomial(m);
    std::string s;
    for (std::size_t g = 0; g < generators_.size(); ++g) {
        if (m.exponents[g] == 0) continue;
        if (!s.empty()) s += '*';
        s += generators_[g].name;
        if (m.exponents[g] > 1) s += '^' + std::to_string(m.exponents[g]);
    }
    return s.empty() ? "1" : s;
}

std::string TruncatedPresentation::format(const Element& e) const {
    if (e.is_zero()) return "0";
    std::string s;
    for (const auto& t : e.terms()) {
        if (!s.empty()) s += " + ";
        s += format(t);
    }
    return s;
}

// ---------------------------------------------------------------------------
// MultiplicationTable

MultiplicationTable::MultiplicationTable() : MultiplicationTable({{"1", 0}}, 0, {}) {}

MultiplicationTable::MultiplicationTable(Raw, std::vector<BasisElement> basis, unsigned top_degree)
    : basis_(std::move(basis)), top_degree_(top_degree) {
    index_basis();
}

void MultiplicationTable::index_basis() {
    if (basis_.empty()) throw AlgebraError("a multiplication table needs at least the unit");
    label_index_.clear();
    by_degree_.assign(top_degree_ + 1, {});
    std::optional<std::size_t> unit;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const auto& b = basis_[i];
        if (b.label.empty()) throw AlgebraError("basis label must not be empty");
        if (!label_index_.emplace(b.label, i).second) throw AlgebraError("duplicate basis label '" + b.label + "'");
        if (b.degree > top_degree_)
            throw AlgebraError("basis element '" + b.label + "' has degree " + std::to_string(b.degree) +
                               " above the top degree " + std::to_string(top_degree_));
        by_degree_[b.degree].push_back(i);
        if (b.degree == 0) {
            if (unit) throw AlgebraError("more than one basis element in degree 0");
            unit = i;
        }
    }
    if (!unit) throw AlgebraError("no unit: exactly one basis element must have degree 0");
    unit_ = *unit;
}

MultiplicationTable::MultiplicationTable(std::vector<BasisElement> basis, unsigned top_degree,
                                         std::vector<ProductRule> products, Check check)
    : basis_(std::move(basis)), top_degree_(top_degree) {
    index_basis();
    const std::size_t n = basis_.size();

    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> table;
    for (auto& rule : products) {
        if (rule.left >= n || rule.right >= n) throw AlgebraError("product refers to an unknown basis index");
        std::sort(rule.terms.begin(), rule.terms.end());
        std::vector<std::size_t> terms;
        for (std::size_t i = 0; i < rule.terms.size();) {
            std::size_t j = i;
            while (j < rule.terms.size() && rule.terms[j] == rule.terms[i]) ++j;
            if (rule.terms[i] >= n) throw AlgebraError("product refers to an unknown basis index");
            if ((j - i) % 2 == 1) terms.push_back(rule.terms[i]);
            i = j;
        }
        const auto& l = basis_[rule.left];
        const auto& r = basis_[rule.right];
        const std::string what = l.label + "*" + r.label;
        const unsigned want = l.degree + r.degree;
        for (auto t : terms)
            if (basis_[t].degree != want)
                throw AlgebraError("product " + what + " must have degree " + std::to_string(want) + " but term '" +
                                   basis_[t].label + "' has degree " + std::to_string(basis_[t].degree));
        if (rule.left == unit_ || rule.right == unit_) {
            const std::size_t other = rule.left == unit_ ? rule.right : rule.left;
            if (terms != std::vector<std::size_t>{other})
                throw AlgebraError("product " + what + " violates the unit law");
            continue;
        }
        const auto key = std::minmax(rule.left, rule.right);
        auto [it, inserted] = table.emplace(key, terms);
        if (!inserted && it->second != terms)
            throw AlgebraError("conflicting values for " + what + " (products must be commutative)");
    }
    for (std::size_t i = 0; i < n; ++i) table[std::minmax(unit_, i)] = {i};

    std::vector<std::vector<std::pair<std::size_t, const std::vector<std::size_t>*>>> rows(n);
    for (const auto& [key, terms] : table) {
        if (terms.empty()) continue;
        rows[key.first].emplace_back(key.second, &terms);
        if (key.first != key.second) rows[key.second].emplace_back(key.first, &terms);
    }
    row_start_.assign(1, 0);
    term_start_.assign(1, 0);
    for (auto& row : rows) {
        std::sort(row.begin(), row.end());
        for (const auto& [j, terms] : row) {
            partner_.push_back(static_cast<std::uint32_t>(j));
            for (auto t : *terms) terms_.push_back(static_cast<std::uint32_t>(t));
            term_start_.push_back(terms_.size());
        }
        row_start_.push_back(partner_.size());
    }
    if (check == Check::full) verify_associativity();
}

std::optional<std::size_t> MultiplicationTable::index_of(std::string_view label) const {
    auto it = label_index_.find(std::string(label));
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> MultiplicationTable::basis_in_degree(unsigned d) const {
    if (d >= by_degree_.size()) return {};
    return by_degree_[d];
}

std::optional<std::size_t> MultiplicationTable::top_class() const {
    const auto& top = by_degree_[top_degree_];
    if (top.size() != 1) return std::nullopt;
    return top.front();
}

std::span<const std::uint32_t> MultiplicationTable::lookup(std::size_t i, std::size_t j) const {
    const auto first = partner_.begin() + static_cast<std::ptrdiff_t>(row_start_[i]);
    const auto last = partner_.begin() + static_cast<std::ptrdiff_t>(row_start_[i + 1]);
    const auto it = std::lower_bound(first, last, static_cast<std::uint32_t>(j));
    if (it == last || *it != j) return {};
    const auto e = static_cast<std::size_t>(it - partner_.begin());
    return {terms_.data() + term_start_[e], term_start_[e + 1] - term_start_[e]};
}

BitVec MultiplicationTable::product(std::size_t i, std::size_t j) const {
    BitVec out(size());
    for (auto t : lookup(i, j)) out.flip(t);
    return out;
}

BitVec MultiplicationTable::multiply(const BitVec& a, const BitVec& b) const {
    if (a.size() != size() || b.size() != size()) throw AlgebraError("element does not belong to this table");
    BitVec out(size());
    for (auto i : a.ones()) {
        for_each_partner(i, [&](std::size_t j, std::span<const std::uint32_t> terms) {
            if (b.get(j))
                for (auto t : terms) out.flip(t);
        });
    }
    return out;
}

BitVec MultiplicationTable::power(const BitVec& a, unsigned exponent) const {
    BitVec result = unit();
    for (unsigned k = 0; k < exponent && !result.is_zero(); ++k) result = multiply(result, a);
    return result;
}

std::optional<unsigned> MultiplicationTable::homogeneous_degree(const BitVec& v) const {
    if (v.size() != size()) throw AlgebraError("element does not belong to this table");
    const auto ones = v.ones();
    if (ones.empty()) return std::nullopt;
    const unsigned d = degree(ones.front());
    for (auto i : ones)
        if (degree(i) != d) return std::nullopt;
    return d;
}

std::vector<ProductRule> MultiplicationTable::product_rules() const {
    std::vector<ProductRule> out;
    for (std::size_t i = 0; i < size(); ++i) {
        for_each_partner(i, [&](std::size_t j, std::span<const std::uint32_t> terms) {
            if (j < i) return;
            out.push_back(ProductRule{i, j, {terms.begin(), terms.end()}});
        });
    }
    return out;
}

void MultiplicationTable::verify_associativity() const {
    const std::size_t n = size();
    unsigned min_positive = top_degree_ + 1;
    for (const auto& b : basis_)
        if (b.degree > 0) min_positive = std::min(min_positive, b.degree);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == unit_) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == unit_) continue;
            if (degree(i) + degree(j) + min_positive > top_degree_) continue;
            const BitVec ij = product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                if (k == unit_) continue;
                if (degree(i) + degree(j) + degree(k) > top_degree_) continue;
                const BitVec left = multiply(ij, basis_vector(k));
                const BitVec right = multiply(basis_vector(i), product(j, k));
                if (left != right)
                    throw AlgebraError("table is not associative: (" + label(i) + "*" + label(j) + ")*" + label(k) +
                                       " != " + label(i) + "*(" + label(j) + "*" + label(k) + ")");
            }
        }
    }
}

std::string MultiplicationTable::format(const BitVec& v) const {
    std::string s;
    for (auto i : v.ones()) {
        if (!s.empty()) s += " + ";
        s += label(i);
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// Ring-level operations

unsigned top_degree(const Ring& ring) {
    return std::visit([](const auto& r) { return r.top_degree(); }, ring);
}

BitVec embed(const TruncatedPresentation& p, const Element& e) {
    BitVec v(p.basis_size());
    for (const auto& t : e.terms()) v.flip(p.index_of(t));
    return v;
}

MultiplicationTable expand_to_table(const TruncatedPresentation& p) {
    const std::size_t n = p.basis_size();
    if (n > kMaxExpandedBasis)
        throw AlgebraError("presentation has " + std::to_string(n) + " monomials, too many to tabulate");
    const auto monomials = p.basis();
    const std::size_t k = p.num_generators();
    const auto& trunc = p.truncations();

    std::vector<BasisElement> basis;
    basis.reserve(n);
    for (const auto& m : monomials) basis.push_back({p.format(m), p.degree(m)});
    MultiplicationTable t(MultiplicationTable::Raw{}, std::move(basis), std::max(p.top_degree(), p.max_degree()));

    // In mixed radix, b_i * b_j = b_{i+j} whenever no exponent overflows, and
    // the admissible partners j of i form a sub-box enumerated in index order.
    std::vector<std::size_t> stride(k, 1);
    for (std::size_t g = k; g-- > 1;) stride[g - 1] = stride[g] * trunc[g];
    t.row_start_.assign(1, 0);
    t.term_start_.assign(1, 0);
    std::vector<unsigned> f(k);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& e = monomials[i].exponents;
        std::fill(f.begin(), f.end(), 0u);
        std::size_t j = 0;
        while (true) {
            t.partner_.push_back(static_cast<std::uint32_t>(j));
            t.terms_.push_back(static_cast<std::uint32_t>(i + j));
            t.term_start_.push_back(t.terms_.size());
            std::size_t g = k;
            while (g-- > 0) {
                if (f[g] + 1 + e[g] < trunc[g]) {
                    ++f[g];
                    j += stride[g];
                    break;
                }
                j -= f[g] * stride[g];
                f[g] = 0;
            }
            if (g == static_cast<std::size_t>(-1)) break;
        }
        t.row_start_.push_back(t.partner_.size());
    }
    return t;
}

MultiplicationTable as_table(const Ring& ring) {
    if (const auto* p = std::get_if<TruncatedPresentation>(&ring)) return expand_to_table(*p);
    return std::get<MultiplicationTable>(ring);
}

std::vector<std::size_t> poincare_polynomial(const TruncatedPresentation& p) {
    std::vector<std::size_t> poly{1};
    for (std::size_t g = 0; g < p.num_generators(); ++g) {
        const unsigned deg = p.generators()[g].degree;
        std::vector<std::size_t> next(poly.size() + (p.truncations()[g] - 1) * deg, 0);
        for (std::size_t d = 0; d < poly.size(); ++d)
            for (unsigned k = 0; k < p.truncations()[g]; ++k) next[d + k * deg] += poly[d];
        poly = std::move(next);
    }
    poly.resize(std::max<std::size_t>(poly.size(), p.top_degree() + 1), 0);
    return poly;
}

std::vector<std::size_t> poincare_polynomial(const MultiplicationTable& t) {
    std::vector<std::size_t> poly(t.top_degree() + 1, 0);
    for (const auto& b : t.basis()) ++poly[b.degree];
    return poly;
}

std::vector<std::size_t> poincare_polynomial(const Ring& ring) {
    return std::visit([](const auto& r) { return poincare_polynomial(r); }, ring);
}

namespace {

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
    for (unsigned k = 2;; ++k) {
        std::string candidate = base + "_" + std::to_string(k);
        if (!taken.count(candidate)) return candidate;
    }
}

}  // namespace

Tensored<TruncatedPresentation> tensor_product(const TruncatedPresentation& a, const TruncatedPresentation& b) {
    Tensored<TruncatedPresentation> out;
    std::vector<GeneratorSpec> gens = a.generators();
    std::vector<unsigned> trunc = a.truncations();
    std::set<std::string> taken;
    for (const auto& g : gens) taken.insert(g.name);
    for (const auto& g : b.generators()) taken.insert(g.name);
    std::set<std::string> used;
    for (const auto& g : a.generators()) used.insert(g.name);
    for (std::size_t i = 0; i < b.num_generators(); ++i) {
        GeneratorSpec g = b.generators()[i];
        if (used.count(g.name)) {
            const std::string renamed = fresh_name(g.name, taken);
            out.renamed.emplace_back(g.name, renamed);
            g.name = renamed;
            taken.insert(renamed);
        }
        used.insert(g.name);
        gens.push_back(g);
        trunc.push_back(b.truncations()[i]);
    }
    out.ring = TruncatedPresentation(std::move(gens), std::move(trunc), a.top_degree() + b.top_degree());
    return out;
}

Tensored<MultiplicationTable> tensor_product(const MultiplicationTable& a, const MultiplicationTable& b) {
    Tensored<MultiplicationTable> out;
    std::set<std::string> taken;
    for (const auto& x : a.basis()) taken.insert(x.label);
    for (const auto& x : b.basis()) taken.insert(x.label);

    std::vector<std::string> right_labels;
    for (std::size_t j = 0; j < b.size(); ++j) {
        std::string l = b.label(j);
        if (j != b.unit_index() && a.index_of(l)) {
            const std::string renamed = fresh_name(l, taken);
            out.renamed.emplace_back(l, renamed);
            taken.insert(renamed);
            l = renamed;
        }
        right_labels.push_back(std::move(l));
    }

    const std::size_t nb = b.size();
    std::vector<BasisElement> basis;
    basis.reserve(a.size() * nb);
    std::set<std::string> labels;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            std::string l;
            if (i == a.unit_index())
                l = j == b.unit_index() ? a.label(i) : right_labels[j];
            else
                l = j == b.unit_index() ? a.label(i) : a.label(i) + "." + right_labels[j];
            if (labels.count(l)) l = fresh_name(l, labels);
            labels.insert(l);
            basis.push_back({std::move(l), a.degree(i) + b.degree(j)});
        }
    }

    MultiplicationTable t(MultiplicationTable::Raw{}, std::move(basis), a.top_degree() + b.top_degree());
    t.row_start_.assign(1, 0);
    t.term_start_.assign(1, 0);
    for (std::size_t i1 = 0; i1 < a.size(); ++i1) {
        for (std::size_t j1 = 0; j1 < nb; ++j1) {
            a.for_each_partner(i1, [&](std::size_t i2, std::span<const std::uint32_t> aterms) {
                b.for_each_partner(j1, [&](std::size_t j2, std::span<const std::uint32_t> bterms) {
                    t.partner_.push_back(static_cast<std::uint32_t>(i2 * nb + j2));
                    for (auto s : aterms)
                        for (auto u : bterms) t.terms_.push_back(static_cast<std::uint32_t>(s * nb + u));
                    t.term_start_.push_back(t.terms_.size());
                });
            });
            t.row_start_.push_back(t.partner_.size());
        }
    }
    out.ring = std::move(t);
    return out;
}

Tensored<Ring> tensor_product(const Ring& a, const Ring& b) {
    const auto* pa = std::get_if<TruncatedPresentation>(&a);
    const auto* pb = std::get_if<TruncatedPresentation>(&b);
    if (pa && pb) {
        auto r = tensor_product(*pa, *pb);
        return {Ring{std::move(r.ring)}, std::move(r.renamed)};
    }
    auto r = tensor_product(as_table(a), as_table(b));
    return {Ring{std::move(r.ring)}, std::move(r.renamed)};
}

std::optional<std::vector<std::size_t>> duality_pairing_ranks(const MultiplicationTable& t) {
    const auto top = t.top_class();
    if (!top) return std::nullopt;
    const unsigned n = t.top_degree();
    std::vector<std::size_t> ranks;
    for (unsigned d = 0; d <= n; ++d) {
        const auto left = t.basis_in_degree(d);
        const auto right = t.basis_in_degree(n - d);
        BitMatrix pairing(left.size(), right.size());
        for (std::size_t r = 0; r < left.size(); ++r)
            for (std::size_t c = 0; c < right.size(); ++c)
                if (t.product(left[r], right[c]).get(*top)) pairing.set(r, c);
        ranks.push_back(rank(pairing));
    }
    return ranks;
}

bool check_poincare_duality(const MultiplicationTable& t) {
    const auto ranks = duality_pairing_ranks(t);
    if (!ranks) return false;
    const unsigned n = t.top_degree();
    for (unsigned d = 0; d <= n; ++d) {
        const std::size_t r = (*ranks)[d];
        if (r != t.basis_in_degree(d).size() || r != t.basis_in_degree(n - d).size()) return false;
    }
    return true;
}

}  // namespace lscat
