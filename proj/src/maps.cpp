#include "lscat/maps.hpp"

#include <map>
#include <stdexcept>

namespace lscat {

std::string_view to_string(HomDiagnostic::Kind kind) {
    switch (kind) {
        case HomDiagnostic::Kind::unknown_generator: return "unknown_generator";
        case HomDiagnostic::Kind::missing_image: return "missing_image";
        case HomDiagnostic::Kind::degree_mismatch: return "degree_mismatch";
        case HomDiagnostic::Kind::relation_not_killed: return "relation_not_killed";
        case HomDiagnostic::Kind::unit_not_preserved: return "unit_not_preserved";
        case HomDiagnostic::Kind::not_multiplicative: return "not_multiplicative";
        case HomDiagnostic::Kind::bad_degree_assertion: return "bad_degree_assertion";
    }
    return "?";
}

std::string_view to_string(CriterionId id) {
    switch (id) {
        case CriterionId::low_dim: return "low_dim";
        case CriterionId::prop_cl_monotone: return "prop_cl_monotone";
        case CriterionId::cor_cat_transfer: return "cor_cat_transfer";
        case CriterionId::thm_main: return "thm_main";
        case CriterionId::morse_transfer: return "morse_transfer";
        case CriterionId::lemma_injectivity: return "lemma_injectivity";
        case CriterionId::thm_torus: return "thm_torus";
    }
    return "?";
}

std::string_view to_string(Status s) {
    switch (s) {
        case Status::certified: return "certified";
        case Status::violated: return "violated";
        case Status::inconclusive: return "inconclusive";
        case Status::not_applicable: return "not_applicable";
    }
    return "?";
}

namespace {

using Kind = HomDiagnostic::Kind;

std::vector<std::size_t> strides(const TruncatedPresentation& p) {
    std::vector<std::size_t> s(p.num_generators(), 1);
    for (std::size_t g = s.size(); g-- > 1;) s[g - 1] = s[g] * p.truncations()[g];
    return s;
}

void check_image_degree(HomValidation& out, const MultiplicationTable& tgt, const std::string& name,
                        unsigned want, const BitVec& v) {
    if (v.is_zero()) return;
    const auto deg = tgt.homogeneous_degree(v);
    if (!deg)
        out.diagnostics.push_back({Kind::degree_mismatch, "image of " + name + " is not homogeneous"});
    else if (*deg != want)
        out.diagnostics.push_back({Kind::degree_mismatch, "image of " + name + " has degree " + std::to_string(*deg) +
                                                              ", expected " + std::to_string(want)});
}

}  // namespace

HomValidation validate_hom(const RingHomSpec& spec) {
    HomValidation out;
    auto diag = [&](Kind k, std::string msg) { out.diagnostics.push_back({k, std::move(msg)}); };
    if (spec.asserted_degree != 1 && spec.asserted_degree != -1)
        diag(Kind::bad_degree_assertion,
             "asserted degree must be +1 or -1, got " + std::to_string(spec.asserted_degree));

    MultiplicationTable src = as_table(spec.source);
    MultiplicationTable tgt = as_table(spec.target);

    std::map<std::string, BitVec> given;
    for (const auto& [name, v] : spec.images) {
        if (v.size() != tgt.size()) {
            diag(Kind::unknown_generator, "image of " + name + " is not an element of the target ring");
            continue;
        }
        if (!given.emplace(name, v).second) diag(Kind::unknown_generator, "generator " + name + " is sent twice");
    }

    std::vector<std::optional<BitVec>> images(src.size());
    if (const auto* p = std::get_if<TruncatedPresentation>(&spec.source)) {
        std::vector<BitVec> gen_images(p->num_generators(), tgt.zero());
        std::vector<bool> seen(p->num_generators(), false);
        for (const auto& [name, v] : given) {
            const auto g = p->generator_index(name);
            if (!g) {
                diag(Kind::unknown_generator, "'" + name + "' is not a generator of the source ring");
                continue;
            }
            gen_images[*g] = v;
            seen[*g] = true;
        }
        for (std::size_t g = 0; g < p->num_generators(); ++g) {
            const auto& gen = p->generators()[g];
            if (!seen[g]) {
                diag(Kind::missing_image, "no image given for generator " + gen.name);
                continue;
            }
            check_image_degree(out, tgt, gen.name, gen.degree, gen_images[g]);
            const BitVec rel = tgt.power(gen_images[g], p->truncations()[g]);
            if (!rel.is_zero())
                diag(Kind::relation_not_killed, "relation " + gen.name + "^" + std::to_string(p->truncations()[g]) +
                                                     " = 0 maps to " + tgt.format(rel) + " != 0");
        }
        if (!out.diagnostics.empty()) return out;

        // image(m) = image(m / b_g) * image(b_g) for the last generator g
        // dividing m; m / b_g precedes m in lexicographic order.
        const auto monomials = p->basis();
        const auto stride = strides(*p);
        images[0] = tgt.unit();
        for (std::size_t idx = 1; idx < monomials.size(); ++idx) {
            const auto& e = monomials[idx].exponents;
            std::size_t g = e.size();
            while (e[--g] == 0) {
            }
            images[idx] = tgt.multiply(*images[idx - stride[g]], gen_images[g]);
        }
    } else {
        const auto& table = std::get<MultiplicationTable>(spec.source);
        for (const auto& [name, v] : given) {
            const auto i = table.index_of(name);
            if (!i) {
                diag(Kind::unknown_generator, "'" + name + "' is not a basis label of the source ring");
                continue;
            }
            check_image_degree(out, tgt, name, table.degree(*i), v);
            images[*i] = v;
        }
        const std::size_t unit = table.unit_index();
        if (images[unit] && *images[unit] != tgt.unit())
            diag(Kind::unit_not_preserved, "the unit must map to the unit");
        images[unit] = tgt.unit();
        if (!out.diagnostics.empty()) return out;

        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t i = 0; i < table.size(); ++i) {
                if (!images[i]) continue;
                table.for_each_partner(i, [&](std::size_t j, std::span<const std::uint32_t> terms) {
                    if (terms.size() == 1 && images[j] && !images[terms[0]]) {
                        images[terms[0]] = tgt.multiply(*images[i], *images[j]);
                        changed = true;
                    }
                });
            }
        }
        for (std::size_t i = 0; i < table.size(); ++i)
            if (!images[i]) diag(Kind::missing_image, "no image given or implied for basis element " + table.label(i));
        if (!out.diagnostics.empty()) return out;

        std::size_t failures = 0;
        for (std::size_t i = 0; i < table.size() && failures < 5; ++i) {
            for (std::size_t j = i; j < table.size() && failures < 5; ++j) {
                BitVec expected = tgt.zero();
                for (auto t : table.product(i, j).ones()) expected ^= *images[t];
                if (tgt.multiply(*images[i], *images[j]) != expected) {
                    diag(Kind::not_multiplicative,
                         "f(" + table.label(i) + ")*f(" + table.label(j) + ") != f(" + table.label(i) + "*" +
                             table.label(j) + ")");
                    ++failures;
                }
            }
        }
        if (!out.diagnostics.empty()) return out;
    }

    ValidatedHom h{spec, std::move(src), std::move(tgt), {}, {}};
    for (auto& img : images) h.basis_images.push_back(std::move(*img));
    std::vector<std::size_t> row_of(h.target.size());
    for (unsigned d = 0; d <= h.target.top_degree(); ++d) {
        const auto rows = h.target.basis_in_degree(d);
        for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
    }
    for (unsigned d = 0; d <= h.source.top_degree(); ++d) {
        const auto cols = h.source.basis_in_degree(d);
        BitMatrix m(h.target.basis_in_degree(d).size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (auto t : h.basis_images[cols[c]].ones()) m.set(row_of[t], c);
        h.degree_matrices.push_back(std::move(m));
    }
    out.hom = std::move(h);
    return out;
}

RingHomSpec identity_hom(const Ring& ring) {
    RingHomSpec spec{ring, ring, {}, 1};
    if (const auto* p = std::get_if<TruncatedPresentation>(&ring)) {
        for (std::size_t g = 0; g < p->num_generators(); ++g)
            spec.images.emplace_back(p->generators()[g].name, embed(*p, p->generator(g)));
    } else {
        const auto& t = std::get<MultiplicationTable>(ring);
        for (std::size_t i = 0; i < t.size(); ++i)
            if (i != t.unit_index()) spec.images.emplace_back(t.label(i), t.basis_vector(i));
    }
    return spec;
}

BitVec apply(const ValidatedHom& h, const BitVec& x) {
    if (x.size() != h.source.size()) throw std::invalid_argument("element does not belong to the source ring");
    BitVec out = h.target.zero();
    for (auto i : x.ones()) out ^= h.basis_images[i];
    return out;
}

RingHomSpec compose(const ValidatedHom& first, const ValidatedHom& second) {
    if (first.target.basis() != second.source.basis())
        throw std::invalid_argument("compose: target of the first hom is not the source of the second");
    RingHomSpec spec{first.spec.source, second.spec.target, {}, first.spec.asserted_degree * second.spec.asserted_degree};
    for (const auto& [name, v] : first.spec.images) spec.images.emplace_back(name, apply(second, v));
    return spec;
}

InjectivityResult check_injectivity(const ValidatedHom& h) {
    InjectivityResult r;
    for (const auto& m : h.degree_matrices) {
        const bool inj = is_injective(m);
        r.per_degree.push_back(inj);
        r.overall = r.overall && inj;
    }
    return r;
}

TopClassResult check_top_class(const ValidatedHom& h) {
    if (h.source.top_degree() != h.target.top_degree())
        return {std::nullopt, "dimensions differ: dim N = " + std::to_string(h.source.top_degree()) +
                                  ", dim M = " + std::to_string(h.target.top_degree())};
    const auto top_n = h.source.top_class();
    const auto top_m = h.target.top_class();
    if (!top_n || !top_m) return {std::nullopt, "no unique top class"};
    const bool holds = h.basis_images[*top_n] == h.target.basis_vector(*top_m);
    return {holds, holds ? "" : "top class of N maps to " + h.target.format(h.basis_images[*top_n])};
}

CriterionVerdict hom_check(const ValidatedHom& h) {
    CriterionVerdict v{CriterionId::lemma_injectivity, Status::certified, "", {"f* is injective for maps of degree +-1"}};
    const auto inj = check_injectivity(h);
    const auto top = check_top_class(h);
    std::string failed;
    for (std::size_t d = 0; d < inj.per_degree.size(); ++d)
        if (!inj.per_degree[d]) failed += (failed.empty() ? "" : ", ") + std::to_string(d);
    if (!inj.overall) {
        v.status = Status::violated;
        v.reason = "f* has a kernel in degree(s) " + failed + "; no map of degree +-1 induces this homomorphism";
    } else if (top.holds == false) {
        v.status = Status::violated;
        v.reason = "f* does not carry the top class of N to the top class of M (" + top.diagnostic + ")";
        v.citations.push_back("f_*[M] = (deg f)[N]");
    } else {
        v.reason = "f* is injective in every degree";
        if (top.holds)
            v.reason += " and carries the top class of N to the top class of M";
        else
            v.reason += "; top-class check skipped: " + top.diagnostic;
    }
    return v;
}

CriterionVerdict check_cl_monotone(const Ring& m_ring, const Ring& n_ring) {
    const unsigned cl_m = cup_length(m_ring);
    const unsigned cl_n = cup_length(n_ring);
    CriterionVerdict v{CriterionId::prop_cl_monotone, Status::certified, "", {"cl(M) >= cl(N) for maps of degree +-1"}};
    const std::string values = "cl(M) = " + std::to_string(cl_m) + ", cl(N) = " + std::to_string(cl_n);
    if (cl_m >= cl_n) {
        v.reason = values;
    } else {
        v.status = Status::violated;
        v.reason = values + ": cup-length obstruction, no map M -> N of degree +-1 exists";
    }
    return v;
}

CriterionVerdict cor_cat_transfer(BoundLedger& m_ledger, const BoundLedger& n_ledger, bool n_has_ring) {
    CriterionVerdict v{CriterionId::cor_cat_transfer, Status::inconclusive, "", {"cl(N) = cat N implies cat M >= cat N"}};
    if (!n_has_ring) {
        v.reason = "cup-length of N unknown (no ring data)";
        return v;
    }
    if (!n_ledger.cat.collapsed() || n_ledger.cup_length != n_ledger.cat.lower) {
        v.reason = "cl(N) = " + std::to_string(n_ledger.cup_length) + " does not pin cat N in [" +
                   std::to_string(n_ledger.cat.lower) + ", " +
                   (n_ledger.cat.upper ? std::to_string(*n_ledger.cat.upper) : "inf") + "]";
        return v;
    }
    const std::size_t cat_n = n_ledger.cat.lower;
    try {
        m_ledger.raise_cat_lower(cat_n, "degree +-1 transfer: cl(N) = cat N = " + std::to_string(cat_n));
    } catch (const LedgerError&) {
        v.status = Status::violated;
        v.reason = "cat M <= " + std::to_string(*m_ledger.cat.upper) + " < cat N = " + std::to_string(cat_n) +
                   " although cl(N) = cat N";
        return v;
    }
    v.status = Status::certified;
    v.reason = "cl(N) = cat N = " + std::to_string(cat_n) + ", hence cat M >= " + std::to_string(cat_n);
    return v;
}

CriterionVerdict thm_main_check(const SpaceRecord& m, const SpaceRecord& n) {
    CriterionVerdict v{CriterionId::thm_main, Status::inconclusive, "",
                       {"N (q-1)-connected, dim N <= 2q cat N - 4, M and N stably parallelizable"}};
    if (!m.stably_parallelizable) {
        v.reason = "M is not declared stably parallelizable";
        return v;
    }
    if (!n.stably_parallelizable) {
        v.reason = "N is not declared stably parallelizable";
        return v;
    }
    std::size_t cat_n = 0;
    std::string cat_source;
    if (n.known_cat) {
        cat_n = n.known_cat->value;
        cat_source = "known cat N = " + std::to_string(cat_n);
    } else if (auto cl = cup_length_of(n); cl && *cl > 0) {
        cat_n = *cl;
        cat_source = "conditional: only the lower bound cat N >= " + std::to_string(cat_n) +
                     " is known; the inequality then holds a fortiori";
    } else {
        v.reason = "no cat data for N";
        return v;
    }
    const long long q = static_cast<long long>(n.connectivity) + 1;
    const long long bound = 2 * q * static_cast<long long>(cat_n) - 4;
    const std::string inequality = "dim N = " + std::to_string(n.dimension) + (n.dimension <= bound ? " <= " : " > ") +
                                   "2q cat N - 4 = " + std::to_string(bound) + " (q = " + std::to_string(q) + ")";
    if (static_cast<long long>(n.dimension) <= bound) {
        v.status = Status::certified;
        v.reason = inequality + "; " + cat_source;
    } else {
        v.reason = "condition fails: " + inequality;
    }
    return v;
}

TorusStabilization torus_stabilization_k(unsigned n) {
    TorusStabilization t;
    t.k = n + 4;
    t.lhs = 2 * static_cast<long long>(t.k) - 4;
    t.rhs = static_cast<long long>(t.k) + n;
    return t;
}

CriterionVerdict thm_torus_check(const SpaceRecord& m, const SpaceRecord& n) {
    CriterionVerdict v{CriterionId::thm_torus, Status::inconclusive, "",
                       {"torus stabilization: cat(M x T^k) >= cat(N x T^k)"}};
    if (!m.stably_parallelizable || !n.stably_parallelizable) {
        v.reason = "M and N must both be stably parallelizable";
        return v;
    }
    const auto t = torus_stabilization_k(n.dimension);
    v.status = Status::certified;
    v.reason = "k = " + std::to_string(t.k) + ": 2k - 4 = " + std::to_string(t.lhs) + " >= k + n = " +
               std::to_string(t.rhs) + ", so cat(M x T^k) >= cat(N x T^k)";
    return v;
}

CriterionVerdict low_dim_check(unsigned n, const LowDimExtras& extras) {
    CriterionVerdict v{CriterionId::low_dim, Status::certified, "", {"cat M >= cat N for n <= 4"}};
    switch (n) {
        case 0:
            v.reason = "dimension 0: both spaces are points";
            break;
        case 1:
            v.reason = "dimension 1: holds trivially";
            break;
        case 2:
            if (extras.genus_m && extras.genus_n) {
                if (*extras.genus_m >= *extras.genus_n)
                    v.reason = "genus monotone: g(M) = " + std::to_string(*extras.genus_m) +
                               " >= g(N) = " + std::to_string(*extras.genus_n);
                else
                    v.reason = "g(M) = " + std::to_string(*extras.genus_m) + " < g(N) = " +
                               std::to_string(*extras.genus_n) + ": no degree-1 map exists, conclusion is vacuous";
            } else {
                v.reason = "surfaces: a degree-1 map forces g(M) >= g(N), and cat is determined by the genus";
            }
            v.citations.push_back("g(M) >= g(N) for degree-1 maps of surfaces");
            break;
        case 3:
            v.reason = "dimension 3";
            v.citations.push_back("closed 3-manifolds: degree-1 maps do not lower cat");
            break;
        case 4:
            v.reason = "dimension 4: cases cat N = 4, 3, 2 via free fundamental groups";
            v.citations.push_back("closed 4-manifolds: cat 2 and 3 detected by free fundamental groups");
            break;
        default:
            v.status = Status::not_applicable;
            v.reason = "dimension " + std::to_string(n) + " > 4";
    }
    return v;
}

CriterionVerdict morse_transfer_check(const MorseData& m, const MorseData& n) {
    m.validate();
    n.validate();
    if (m.dimension != n.dimension) throw std::invalid_argument("Morse data dimensions differ");
    CriterionVerdict v{CriterionId::morse_transfer, Status::inconclusive, "",
                       {"r_k(M) >= r_k(N), t_k(M) >= t_k(N) for degree-1 maps", "Smale: sharp Morse inequalities"}};
    for (std::size_t k = 0; k <= m.dimension; ++k) {
        if (m.ranks[k] < n.ranks[k]) {
            v.status = Status::violated;
            v.reason = "r_" + std::to_string(k) + "(M) = " + std::to_string(m.ranks[k]) + " < r_" + std::to_string(k) +
                       "(N) = " + std::to_string(n.ranks[k]) + ": no degree-1 map exists";
            return v;
        }
        if (m.torsion[k] < n.torsion[k]) {
            v.status = Status::violated;
            v.reason = "t_" + std::to_string(k) + "(M) = " + std::to_string(m.torsion[k]) + " < t_" +
                       std::to_string(k) + "(N) = " + std::to_string(n.torsion[k]) + ": no degree-1 map exists";
            return v;
        }
    }
    const auto bm = morse_lower_bound(m);
    const auto bn = morse_lower_bound(n);
    if (bm.exact && bn.exact) {
        v.status = Status::certified;
        v.reason = "crit*(M) = " + std::to_string(bm.bound) + " >= crit*(N) = " + std::to_string(bn.bound);
    } else {
        v.reason = "ranks dominate termwise (Morse counts " + std::to_string(bm.bound) + " >= " +
                   std::to_string(bn.bound) + ") but exactness needs simply connected manifolds of dimension >= 6";
    }
    return v;
}

DegreeOneReport full_report(const SpaceRecord& m, const SpaceRecord& n, const std::optional<RingHomSpec>& hom) {
    if (m.dimension != n.dimension)
        throw std::invalid_argument("a degree comparison needs dim M = dim N, got " + std::to_string(m.dimension) +
                                    " and " + std::to_string(n.dimension));
    DegreeOneReport r;
    r.m_ledger = ledger_for(m);
    r.n_ledger = ledger_for(n);

    r.verdicts.push_back(low_dim_check(m.dimension, {m.genus, n.genus}));

    if (m.ring && n.ring) {
        r.verdicts.push_back(check_cl_monotone(*m.ring, *n.ring));
    } else {
        r.verdicts.push_back({CriterionId::prop_cl_monotone, Status::not_applicable,
                              "no ring data for " + (m.ring ? n.name : m.name), {}});
    }

    r.verdicts.push_back(cor_cat_transfer(r.m_ledger, r.n_ledger, n.ring.has_value()));
    r.verdicts.push_back(thm_main_check(m, n));

    if (m.morse && n.morse)
        r.verdicts.push_back(morse_transfer_check(*m.morse, *n.morse));
    else
        r.verdicts.push_back({CriterionId::morse_transfer, Status::not_applicable, "no Morse data", {}});

    if (hom) {
        const auto validated = validate_hom(*hom);
        if (!validated.ok()) {
            std::string why;
            for (const auto& d : validated.diagnostics) why += (why.empty() ? "" : "; ") + d.message;
            r.verdicts.push_back({CriterionId::lemma_injectivity, Status::not_applicable,
                                  "the given data is not a ring homomorphism: " + why, {}});
        } else if (validated.hom->source.top_degree() != n.dimension ||
                   validated.hom->target.top_degree() != m.dimension) {
            r.verdicts.push_back({CriterionId::lemma_injectivity, Status::not_applicable,
                                  "homomorphism does not go from H*(N) to H*(M)", {}});
        } else {
            r.verdicts.push_back(hom_check(*validated.hom));
        }
    }

    r.verdicts.push_back(thm_torus_check(m, n));

    bool violated = false;
    bool certified = false;
    for (const auto& v : r.verdicts) {
        violated = violated || v.status == Status::violated;
        const bool concludes_cat = v.criterion == CriterionId::low_dim || v.criterion == CriterionId::cor_cat_transfer ||
                                   v.criterion == CriterionId::thm_main;
        certified = certified || (concludes_cat && v.status == Status::certified);
    }
    r.overall = violated ? Status::violated : certified ? Status::certified : Status::inconclusive;

    r.notes.push_back("ballcat and crit monotonicity under degree-1 maps: open question, no criterion");
    r.notes.push_back(
        "the stably-parallelizable hypothesis on M may be relaxed to S-orientability (stably fiber homotopy trivial "
        "normal bundle); not evaluated");
    for (const auto& note : m.notes) r.notes.push_back("M: " + note);
    for (const auto& note : n.notes) r.notes.push_back("N: " + note);
    return r;
}

}  // namespace lscat
