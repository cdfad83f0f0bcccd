#include <random>

#include "catch_amalgamated.hpp"
#include "lscat/catalogue.hpp"
#include "lscat/io.hpp"
#include "lscat/maps.hpp"
#include "oracles.hpp"

using namespace lscat;

namespace {

/// f*: H*(n) -> H*(m) from generator/label images written as expressions.
RingHomSpec hom(const Ring& n, const Ring& m, std::vector<std::pair<std::string, std::string>> images) {
    RingHomSpec spec{n, m, {}, 1};
    const auto table = as_table(m);
    for (const auto& [name, expr] : images) spec.images.emplace_back(name, evaluate(parse_expr(expr), m, table));
    return spec;
}

bool has(const HomValidation& v, HomDiagnostic::Kind k) {
    for (const auto& d : v.diagnostics)
        if (d.kind == k) return true;
    return false;
}

const CriterionVerdict& verdict(const DegreeOneReport& r, CriterionId id) {
    for (const auto& v : r.verdicts)
        if (v.criterion == id) return v;
    FAIL("missing verdict " << to_string(id));
    return r.verdicts.front();
}

Ring cp2() {
    return MultiplicationTable({{"1", 0}, {"x", 2}, {"xx", 4}}, 4, {{1, 1, {2}}});
}

}  // namespace

TEST_CASE("identity homomorphism", "[maps]") {
    const auto so5 = *so_n_record(5).ring;
    const auto v = validate_hom(identity_hom(so5));
    REQUIRE(v.ok());
    const auto inj = check_injectivity(*v.hom);
    CHECK(inj.overall);
    CHECK(inj.per_degree.size() == 11);
    CHECK(check_top_class(*v.hom).holds == true);
    CHECK(hom_check(*v.hom).status == Status::certified);
}

TEST_CASE("collapse map from genus 2 onto the torus", "[maps]") {
    const auto t2 = *torus_record(2).ring;
    const auto s2 = *surface_record(2).ring;
    const auto v = validate_hom(hom(t2, s2, {{"t1", "a1"}, {"t2", "b1"}}));
    REQUIRE(v.ok());
    const auto inj = check_injectivity(*v.hom);
    CHECK(inj.per_degree == std::vector<bool>{true, true, true});
    CHECK(check_top_class(*v.hom).holds == true);
    CHECK(apply(*v.hom, v.hom->source.basis_vector(3)) == v.hom->target.basis_vector(*v.hom->target.index_of("w")));
}

TEST_CASE("homomorphism diagnostics", "[maps]") {
    const auto t2 = *torus_record(2).ring;
    const auto s1 = *surface_record(1).ring;

    auto v = validate_hom(hom(t2, s1, {{"t1", "a1"}}));
    CHECK(has(v, HomDiagnostic::Kind::missing_image));
    v = validate_hom(hom(t2, s1, {{"t1", "a1"}, {"t2", "w"}}));
    CHECK(has(v, HomDiagnostic::Kind::degree_mismatch));
    v = validate_hom(hom(t2, s1, {{"t1", "a1"}, {"t2", "b1"}, {"t9", "b1"}}));
    CHECK(has(v, HomDiagnostic::Kind::unknown_generator));

    const auto s2 = *sphere_record(2).ring;
    v = validate_hom(hom(s2, cp2(), {{"u2", "x"}}));
    CHECK(has(v, HomDiagnostic::Kind::relation_not_killed));

    const auto t2_table = Ring(as_table(t2));
    v = validate_hom(hom(s1, t2_table, {{"a1", "t1"}, {"b1", "t2"}, {"w", "0"}}));
    CHECK(has(v, HomDiagnostic::Kind::not_multiplicative));
    v = validate_hom(hom(s1, t2_table, {{"1", "0"}, {"a1", "t1"}, {"b1", "t2"}}));
    CHECK(has(v, HomDiagnostic::Kind::unit_not_preserved));

    // The top class image is inferred from a1 * b1 = w.
    v = validate_hom(hom(s1, t2_table, {{"a1", "t1"}, {"b1", "t2"}}));
    REQUIRE(v.ok());
    CHECK(check_top_class(*v.hom).holds == true);

    auto bad = hom(t2, s1, {{"t1", "a1"}, {"t2", "b1"}});
    bad.asserted_degree = 3;
    CHECK(has(validate_hom(bad), HomDiagnostic::Kind::bad_degree_assertion));
}

TEST_CASE("a non-injective hom is a violation", "[maps]") {
    const auto t2 = *torus_record(2).ring;
    const auto s1 = *surface_record(1).ring;
    const auto v = validate_hom(hom(t2, s1, {{"t1", "a1"}, {"t2", "a1"}}));
    REQUIRE(v.ok());
    const auto inj = check_injectivity(*v.hom);
    CHECK_FALSE(inj.overall);
    CHECK(inj.per_degree == std::vector<bool>{true, false, false});
    CHECK(check_top_class(*v.hom).holds == false);
    CHECK(hom_check(*v.hom).status == Status::violated);
}

TEST_CASE("composition multiplies degree matrices", "[maps][property]") {
    std::mt19937_64 rng(oracle::seed());
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned a = 1 + rng() % 4, b = 1 + rng() % 4, c = 1 + rng() % 4;
        const auto ta = *torus_record(a).ring, tb = *torus_record(b).ring, tc = *torus_record(c).ring;
        // Degree-1 classes square to zero in an exterior algebra, so any
        // assignment of degree-1 images defines a ring homomorphism.
        auto random_hom = [&](const Ring& src, unsigned src_k, const Ring& dst, unsigned dst_k) {
            std::vector<std::pair<std::string, std::string>> images;
            for (unsigned i = 1; i <= src_k; ++i) {
                std::string e;
                for (unsigned j = 1; j <= dst_k; ++j)
                    if (rng() % 2) e += (e.empty() ? "" : " + ") + ("t" + std::to_string(j));
                images.emplace_back("t" + std::to_string(i), e.empty() ? "0" : e);
            }
            return validate_hom(hom(src, dst, images));
        };
        const auto first = random_hom(ta, a, tb, b);   // H*(T^a) -> H*(T^b)
        const auto second = random_hom(tb, b, tc, c);  // H*(T^b) -> H*(T^c)
        REQUIRE(first.ok());
        REQUIRE(second.ok());
        const auto composite = validate_hom(compose(*first.hom, *second.hom));
        REQUIRE(composite.ok());
        for (std::size_t d = 0; d < composite.hom->degree_matrices.size(); ++d) {
            if (d >= first.hom->degree_matrices.size() || d >= second.hom->degree_matrices.size()) continue;
            CHECK(composite.hom->degree_matrices[d] == second.hom->degree_matrices[d] * first.hom->degree_matrices[d]);
        }
        for (std::size_t i = 0; i < first.hom->source.size(); ++i) {
            const auto x = first.hom->source.basis_vector(i);
            CHECK(apply(*composite.hom, x) == apply(*second.hom, apply(*first.hom, x)));
        }
    }
}

TEST_CASE("cup-length monotonicity", "[maps]") {
    CHECK(check_cl_monotone(*sphere_record(2).ring, *torus_record(2).ring).status == Status::violated);
    CHECK(check_cl_monotone(*surface_record(2).ring, *torus_record(2).ring).status == Status::certified);
}

TEST_CASE("G2 criterion and torus stabilization", "[maps]") {
    SpaceRecord m;
    m.name = "X14";
    m.dimension = 14;
    m.stably_parallelizable = true;
    const auto v = thm_main_check(m, g2_record());
    CHECK(v.status == Status::certified);
    CHECK(v.reason.find("14 <= 2q cat N - 4 = 20") != std::string::npos);
    m.stably_parallelizable = false;
    CHECK(thm_main_check(m, g2_record()).status == Status::inconclusive);

    const auto t = torus_stabilization_k(14);
    CHECK(t.k == 18);
    CHECK(t.lhs == 32);
    CHECK(t.rhs == 32);
    for (unsigned n = 1; n <= 40; ++n) {
        const auto s = torus_stabilization_k(n);
        CHECK(s.lhs >= s.rhs);
        CHECK(2 * (static_cast<long long>(s.k) - 1) - 4 < static_cast<long long>(s.k) - 1 + n);
    }
}

TEST_CASE("low-dimensional verdicts", "[maps]") {
    const auto v2 = low_dim_check(2, {2u, 1u});
    CHECK(v2.status == Status::certified);
    CHECK(v2.reason.find("genus monotone") != std::string::npos);
    const auto v3 = low_dim_check(3);
    CHECK(v3.status == Status::certified);
    CHECK(v3.citations.size() == 2);
    CHECK(low_dim_check(4).status == Status::certified);
    CHECK(low_dim_check(5).status == Status::not_applicable);
}

TEST_CASE("Morse transfer", "[maps]") {
    const auto s6 = *sphere_record(6).morse;
    const auto s3s3 = *product_record(sphere_record(3), sphere_record(3)).morse;
    CHECK(morse_transfer_check(s6, s3s3).status == Status::violated);
    CHECK(morse_transfer_check(s3s3, s6).status == Status::certified);
    CHECK(morse_transfer_check(s3s3, s3s3).status == Status::certified);
    CHECK_THROWS_AS(morse_transfer_check(s6, *sphere_record(3).morse), std::invalid_argument);
}

TEST_CASE("cat transfer raises the ledger", "[maps]") {
    auto m = ledger_for(surface_record(3));
    const auto n = ledger_for(torus_record(2));
    const auto v = cor_cat_transfer(m, n);
    CHECK(v.status == Status::certified);
    CHECK(m.cat.lower == 2);
    auto s2 = ledger_for(sphere_record(2));
    CHECK(cor_cat_transfer(s2, n).status == Status::violated);
}

TEST_CASE("full reports", "[maps]") {
    const auto s2t2 = full_report(sphere_record(2), torus_record(2));
    CHECK(s2t2.overall == Status::violated);
    CHECK(verdict(s2t2, CriterionId::prop_cl_monotone).status == Status::violated);

    const auto so5 = full_report(so_n_record(5), so_n_record(5));
    CHECK(so5.overall == Status::certified);

    const auto g2t2 = full_report(surface_record(2), torus_record(2),
                                  hom(*torus_record(2).ring, *surface_record(2).ring, {{"t1", "a1"}, {"t2", "b1"}}));
    CHECK(g2t2.overall == Status::certified);
    CHECK(verdict(g2t2, CriterionId::lemma_injectivity).status == Status::certified);
    CHECK(verdict(g2t2, CriterionId::low_dim).status == Status::certified);

    CHECK_THROWS_AS(full_report(sphere_record(2), sphere_record(3)), std::invalid_argument);

    const auto again = full_report(sphere_record(2), torus_record(2));
    CHECK(again.verdicts == s2t2.verdicts);
    CHECK(again.notes == s2t2.notes);
}
