#include "lscat/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace lscat {

unsigned cup_length_formula(const TruncatedPresentation& p) {
    unsigned cl = 0;
    for (auto t : p.truncations()) cl += t - 1;
    return cl;
}

TruncatedPresentation so_n_presentation(unsigned n) {
    if (n < 2) throw std::invalid_argument("SO(n) needs n >= 2");
    std::vector<GeneratorSpec> gens;
    std::vector<unsigned> trunc;
    for (unsigned i = 1; i < n; i += 2) {
        unsigned p = 1;
        while (i * p < n) p *= 2;
        if (p == 1) continue;
        gens.push_back({"b" + std::to_string(i), i});
        trunc.push_back(p);
    }
    return TruncatedPresentation(std::move(gens), std::move(trunc), n * (n - 1) / 2);
}

unsigned cup_length_search(const MultiplicationTable& t) {
    const std::size_t n = t.size();
    EchelonBasis ideal(n);
    for (std::size_t i = 0; i < n; ++i)
        if (t.degree(i) > 0) ideal.insert(t.basis_vector(i));
    if (ideal.empty()) return 0;

    // I^2 from all products of positive-degree basis elements.
    EchelonBasis square(n);
    std::vector<bool> unit_in_square(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (t.degree(i) == 0) continue;
        t.for_each_partner(i, [&](std::size_t j, std::span<const std::uint32_t> terms) {
            if (j < i || t.degree(j) == 0) return;
            if (terms.size() == 1) {
                if (unit_in_square[terms[0]]) return;
                unit_in_square[terms[0]] = true;
            }
            BitVec v(n);
            for (auto term : terms) v.flip(term);
            square.insert(std::move(v));
        });
    }

    // Basis elements independent modulo I^2 generate the algebra, and since
    // I^m is an ideal, I^(m+1) = span{x * g : x in I^m, g a generator}.
    std::vector<std::size_t> generators;
    {
        EchelonBasis probe = square;
        for (std::size_t i = 0; i < n; ++i)
            if (t.degree(i) > 0 && probe.insert(t.basis_vector(i))) generators.push_back(i);
    }

    // Products of homogeneous vectors are homogeneous, so each echelon basis
    // splits by degree and never mixes graded pieces.
    unsigned m = 1;
    EchelonBasis current = std::move(square);
    while (!current.empty()) {
        ++m;
        EchelonBasis next(n);
        std::vector<bool> seen(n, false);
        for (const auto& x : current.vectors()) {
            const auto ones = x.ones();
            for (auto g : generators) {
                if (ones.size() == 1) {
                    const auto terms = t.product_terms(ones[0], g);
                    if (terms.empty()) continue;
                    if (terms.size() == 1) {
                        if (seen[terms[0]]) continue;
                        seen[terms[0]] = true;
                    }
                }
                BitVec v(n);
                for (auto k : ones)
                    for (auto term : t.product_terms(k, g)) v.flip(term);
                if (!v.is_zero()) next.insert(std::move(v));
            }
        }
        current = std::move(next);
    }
    return m;
}

unsigned cup_length(const Ring& ring) {
    if (const auto* p = std::get_if<TruncatedPresentation>(&ring)) return cup_length_formula(*p);
    return cup_length_search(std::get<MultiplicationTable>(ring));
}

std::size_t betti_sum(std::span<const std::size_t> ranks) {
    return std::accumulate(ranks.begin(), ranks.end(), std::size_t{0});
}

void MorseData::validate() const {
    if (ranks.size() != dimension + 1)
        throw std::invalid_argument("Morse data: expected " + std::to_string(dimension + 1) + " ranks, got " +
                                    std::to_string(ranks.size()));
    if (torsion.size() != dimension + 1)
        throw std::invalid_argument("Morse data: expected " + std::to_string(dimension + 1) + " torsion ranks, got " +
                                    std::to_string(torsion.size()));
    if (ranks.front() < 1) throw std::invalid_argument("Morse data: r_0 must be >= 1 for a connected space");
}

MorseBound morse_lower_bound(const MorseData& d) {
    d.validate();
    MorseBound b;
    for (std::size_t k = 0; k <= d.dimension; ++k) {
        b.bound += d.ranks[k] + d.torsion[k];
        if (k > 0) b.bound += d.torsion[k - 1];
    }
    b.exact = d.simply_connected && d.dimension >= 6;
    return b;
}

namespace {

std::string show(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "inf"; }

void check_interval(std::vector<std::string>& out, const char* name, const Interval& i) {
    if (i.upper && i.lower > *i.upper)
        out.push_back(std::string(name) + ": lower " + std::to_string(i.lower) + " > upper " + show(i.upper));
}

void require(std::vector<std::string>& out, bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
}

}  // namespace

std::vector<std::string> BoundLedger::violations() const {
    std::vector<std::string> out;
    check_interval(out, "cat", cat);
    check_interval(out, "toomer_e", toomer_e);
    check_interval(out, "ballcat", ballcat);
    check_interval(out, "crit", crit);
    check_interval(out, "crit_star", crit_star);
    require(out, toomer_e.lower >= cup_length, "e*.lower < cl");
    require(out, cat.lower >= toomer_e.lower, "cat.lower < e*.lower");
    require(out, cat.upper && *cat.upper <= dimension, "cat.upper missing or > dim");
    require(out, !toomer_e.upper || (cat.upper && *toomer_e.upper <= *cat.upper), "e*.upper > cat.upper");
    require(out, ballcat.lower >= cat.lower, "ballcat.lower < cat.lower");
    require(out, crit.lower >= ballcat.lower + 1, "crit.lower < ballcat.lower + 1");
    require(out, crit_star.lower >= betti_sum, "crit*.lower < SB");
    require(out, crit_star.lower >= crit.lower, "crit*.lower < crit.lower");
    return out;
}

void BoundLedger::raise_cat_lower(std::size_t value, const std::string& source) {
    if (value <= cat.lower) return;
    if (cat.upper && value > *cat.upper)
        throw LedgerError("cat lower bound " + std::to_string(value) + " exceeds upper bound " + show(cat.upper));
    cat.lower = value;
    cat.lower_source = source;
    if (ballcat.lower < cat.lower) {
        ballcat.lower = cat.lower;
        ballcat.lower_source = "cat <= ballcat";
    }
    if (crit.lower < ballcat.lower + 1) {
        crit.lower = ballcat.lower + 1;
        crit.lower_source = "ballcat <= crit - 1";
    }
    if (crit_star.lower < crit.lower) {
        crit_star.lower = crit.lower;
        crit_star.lower_source = "crit <= crit*";
    }
}

BoundLedger cat_bounds(const LedgerInput& in) {
    BoundLedger l;
    l.dimension = in.dimension;
    l.cup_length = in.cup_length.value_or(0);
    const std::string cl_source = in.cup_length ? "cup-length theorem: cl <= cat" : "no ring data";

    std::optional<MorseBound> morse;
    if (in.morse) {
        if (in.morse->dimension != in.dimension)
            throw LedgerError("Morse data dimension " + std::to_string(in.morse->dimension) +
                              " differs from space dimension " + std::to_string(in.dimension));
        morse = morse_lower_bound(*in.morse);
        l.betti_sum = betti_sum(in.morse->ranks);
    } else {
        l.betti_sum = in.betti_sum.value_or(0);
    }

    if (in.known_cat) {
        const std::size_t k = in.known_cat->value;
        if (k < l.cup_length || k > in.dimension)
            throw LedgerError("known cat " + std::to_string(k) + " lies outside [cl, dim] = [" +
                              std::to_string(l.cup_length) + ", " + std::to_string(in.dimension) + "]");
        l.cat = {k, k, "known: " + in.known_cat->citation, "known: " + in.known_cat->citation};
    } else {
        l.cat = {l.cup_length, in.dimension, cl_source, "cat <= dim"};
    }
    l.toomer_e = {l.cup_length, l.cat.upper, in.cup_length ? "cl <= e*" : "no ring data", "e* <= cat"};
    l.ballcat = {l.cat.lower, in.dimension, "cat <= ballcat", "dimension bound (catalogue convention)"};
    l.crit = {l.ballcat.lower + 1, std::nullopt, "ballcat <= crit - 1", ""};

    l.crit_star = {l.betti_sum, std::nullopt, "SB <= crit*", ""};
    if (morse && morse->bound > l.crit_star.lower) {
        l.crit_star.lower = morse->bound;
        l.crit_star.lower_source = "Morse inequalities";
    }
    if (l.crit_star.lower < l.crit.lower) {
        l.crit_star.lower = l.crit.lower;
        l.crit_star.lower_source = "crit <= crit*";
    }
    if (morse && morse->exact) {
        if (morse->bound < l.crit_star.lower)
            throw LedgerError("Morse count " + std::to_string(morse->bound) + " is below the crit* lower bound " +
                              std::to_string(l.crit_star.lower));
        l.crit_star.upper = morse->bound;
        l.crit_star.upper_source = "Smale: Morse inequalities are sharp";
    }
    return l;
}

BoundLedger cat_bounds(const Ring& ring, unsigned dimension, const std::optional<KnownValue>& known_cat) {
    LedgerInput in;
    in.dimension = dimension;
    in.cup_length = cup_length(ring);
    const auto poly = poincare_polynomial(ring);
    in.betti_sum = std::accumulate(poly.begin(), poly.end(), std::size_t{0});
    in.known_cat = known_cat;
    return cat_bounds(in);
}

}  // namespace lscat
