#include <doctest.h>

#include "rumin/errors.hpp"
#include "rumin/estimates.hpp"
#include "support.hpp"

using namespace rumin;
using test::cartan_complex;
using test::cartan_ring;
using test::op;

TEST_CASE("kernel types") {
    CHECK(kernel_type_of_inverse(6, 10).mu == 6);
    CHECK(kernel_type_of_inverse(6, 10).valid());
    CHECK(kernel_type_of_inverse(12, 10).log_regime());
    CHECK(kernel_type_of_inverse(2, 10).mu == 2);
    CHECK(differentiate_type({6, 10}, 4).mu == 2);
    CHECK(differentiate_type({12, 10}, 7).mu == 5);
    CHECK(differentiate_type({3, 10}, 0).mu == 3);
}

TEST_CASE("Folland mapping and dual exponents") {
    CHECK(folland_map(mpq_class(10, 3), {2, 10}) == 10);
    CHECK(folland_map(mpq_class(10, 6), {5, 10}) == 10);
    CHECK_THROWS_AS(folland_map(mpq_class(5), {10, 10}), OutOfRange);
    CHECK_THROWS_AS(folland_map(mpq_class(6), {2, 10}), OutOfRange);
    CHECK(sobolev_dual_exponent(6, 3, 10) == mpq_class(10, 7));
    CHECK(sobolev_dual_exponent(2, 1, 10) == mpq_class(10, 9));
    CHECK(sobolev_dual_exponent(6, 4, 10) == mpq_class(5, 4));
    CHECK_THROWS_AS(sobolev_dual_exponent(6, 6, 10), OutOfRange);
    CHECK(exponent_label(3) == "Q/(Q-3)");
}

namespace {

const ExponentRecord& find(const std::vector<ExponentRecord>& t, const std::string& fam, int h,
                           const std::string& term) {
    for (const auto& r : t)
        if (r.family == fam && r.degree == h && r.term == term) return r;
    throw Error("record not found");
}

}  // namespace

TEST_CASE("H2 table") {
    auto t = theorem_table(cartan_complex(), Theorem::H2);
    CHECK(t.size() == 10);
    for (const auto& r : t) CHECK(r.status == "agree");
    // Displayed exponents per degree: Q/(Q-1), Q/(Q-3) x4, Q/(Q-1).
    CHECK(find(t, "A", 0, "f").derived_k == 1);
    for (int h = 1; h <= 4; ++h) CHECK(find(t, "A", h, "g").derived_k == 3);
    CHECK(find(t, "A", 5, "g").derived_k == 1);
    const auto& r = find(t, "A", 2, "f");
    CHECK(r.norm == "L1-grad");
    CHECK(r.laplacian_order == 6);
    CHECK(r.chain_order == 4);
    CHECK(r.kernel_type == 2);
    CHECK(r.folland_used);
    CHECK(r.folland_ok);
    CHECK(r.derived_value() == mpq_class(10, 7));
}

TEST_CASE("C2 table flags two rows") {
    auto t = theorem_table(cartan_complex(), Theorem::C2);
    int flagged = 0;
    for (const auto& r : t) {
        if (r.status == "documented_discrepancy") {
            ++flagged;
            CHECK((r.degree == 2 || r.degree == 3));
            CHECK(r.derived_k == 6);
            CHECK(r.paper_k == 6);
            REQUIRE(r.stated_k);
            CHECK(*r.stated_k < 6);
        } else {
            CHECK(r.status == "agree");
        }
    }
    CHECK(flagged == 2);
    CHECK(*find(t, "R", 2, "f").stated_k == 5);
    CHECK(*find(t, "R", 3, "g").stated_k == 4);
    CHECK(find(t, "R", 2, "f").kernel_type == 5);
    CHECK(find(t, "G", 0, "f").laplacian_order == 12);
}

TEST_CASE("H2cor and sum-space tables") {
    auto cor = theorem_table(cartan_complex(), Theorem::H2cor);
    for (const auto& r : cor) CHECK(r.status == "agree");
    CHECK(find(cor, "A", 2, "f").derived_k == 2);
    CHECK(find(cor, "A", 0, "f").derived_k == 1);
    auto sum = theorem_table(cartan_complex(), Theorem::H2sum);
    auto pairs = sum_pairs(sum);
    REQUIRE(pairs.size() == 4);
    for (const auto& p : pairs) CHECK(p.agree);
    CHECK(pairs[0].derived == std::make_pair(3, 1));
    CHECK(pairs[1].derived == std::make_pair(2, 3));
}

TEST_CASE("theorem names") {
    CHECK(parse_theorem("H2cor") == Theorem::H2cor);
    CHECK_THROWS_AS(parse_theorem("H3"), InvalidInput);
    RuminComplex h(PbwRing::create(free_nilpotent(2, 2)));
    CHECK_THROWS_AS(theorem_table(h, Theorem::H2), UnsupportedGroup);
}

TEST_CASE("generalized divergence") {
    const auto& r = cartan_ring();
    auto f4 = paper_tensor(r, 4);
    for (Convention conv : {Convention::CvS, Convention::pierre})
        CHECK(generalized_divergence(r, f4, conv) == std::vector<EnvElement>{op("-X2"), op("X1")});
    auto f3 = paper_tensor(r, 3);
    CHECK(generalized_divergence(r, f3, Convention::CvS) == cartan_complex().dc(3).row(0));
    HorizontalTensor zero;
    zero.order = 0;
    zero.slots = 2;
    zero.entries[{}] = {op("X1"), op("X3")};
    CHECK(generalized_divergence(r, zero, Convention::CvS) == std::vector<EnvElement>{op("X1"), op("X3")});
    CHECK(paper_tensor(r, 1).symmetric());
    CHECK_FALSE(paper_tensor(r, 3).symmetric());
    CHECK_THROWS_AS(paper_tensor(r, 5), OutOfRange);
}

TEST_CASE("row membership certificates") {
    const auto& c = cartan_complex();
    const auto& r = cartan_ring();
    auto cert3 = check_row_membership(generalized_divergence(r, paper_tensor(r, 3), Convention::CvS), c.dc(3), 12);
    REQUIRE(cert3);
    CHECK(cert3->constant());
    CHECK(cert3->coefficients == std::vector<EnvElement>{op("1"), EnvElement(r)});
    auto cert4 = check_row_membership({op("-X2"), op("X1")}, c.dc(4), 12);
    REQUIRE(cert4);
    CHECK(cert4->coefficients[0] == op("1"));
    auto zero = check_row_membership({EnvElement(r), EnvElement(r)}, c.dc(4), 12);
    REQUIRE(zero);
    CHECK(zero->coefficients[0].is_zero());
    // An operator multiple of a row is found with an operator certificate.
    std::vector<EnvElement> row;
    for (const auto& e : c.dc(4).row(0)) row.push_back(op("X1") * e);
    auto cx = check_row_membership(row, c.dc(4), 12);
    REQUIRE(cx);
    CHECK(cx->coefficients[0] == op("X1"));
    CHECK_FALSE(cx->constant());
    CHECK_FALSE(check_row_membership({op("X1"), EnvElement(r)}, c.dc(4), 12));
    CHECK_THROWS_AS(check_row_membership({op("1"), EnvElement(r)}, c.dc(4), 12), DegreeMismatch);
}

TEST_CASE("Cartan's formula") {
    const auto& c = cartan_complex();
    // h = 1 with Z = (X4, X1): X4 a1 + X1 X3 a1 - X1^2 (X1 a2 - X2 a1).
    auto row = cartan_pairing(c.pi_E(c.symbolic_all(1)), {3, 0});
    CHECK(row == std::vector<EnvElement>{op("X4 + X1*X3 + X1^2*X2"), op("-X1^3")});
    // Abelian algebra: no bracket terms.
    auto g = StratifiedLieAlgebra::from_structure_constants({}, {3});
    auto ring = PbwRing::create(g);
    OperatorForm w = OperatorForm::from_form(ring, Form::basis(cov_from_indices({0})), 0, 1);
    auto ab = cartan_pairing(w, {0, 1});
    CHECK(ab[0] == -EnvElement::generator(ring, 1));  // X1 <w, X2> - X2 <w, X1>
    OperatorForm s = OperatorForm(ring, 1, 1);
    s.add(cov_from_indices({0}), 0, EnvElement::constant(ring, 1));
    CHECK(evaluate_on(s, {0})[0] == EnvElement::constant(ring, 1));
    CHECK(evaluate_on(s, {1})[0].is_zero());
}

TEST_CASE("divergence solver") {
    const auto& c = cartan_complex();
    const auto& r = cartan_ring();
    auto row1 = c.dc(1).row(0);
    auto t = solve_divergence_tensor(r, row1, 3, Convention::CvS);
    REQUIRE(t);
    CHECK(generalized_divergence(r, *t, Convention::CvS) == row1);
    auto t4 = solve_divergence_tensor(r, {op("-X2"), op("X1")}, 1, Convention::CvS);
    REQUIRE(t4);
    CHECK(t4->entries.at({1})[0] == op("-1"));
    CHECK(t4->entries.at({0})[1] == op("1"));
    CHECK_FALSE(solve_divergence_tensor(r, {op("X3")}, 1, Convention::CvS));
}

TEST_CASE("tensor findings") {
    auto fs = tensor_findings(cartan_complex());
    std::map<std::string, Finding> by;
    for (const auto& f : fs) by[f.check] = f;
    CHECK(by.at("pierre-h3-tensor").status == "certified");
    CHECK(by.at("pierre-h4-tensor").status == "certified");
    CHECK(by.at("pierre-h1-operator").status == "certified");
    for (const char* k : {"pierre-h1-tensor", "pierre-h2-tensor", "pierre-h3-symmetric"}) {
        CHECK(by.at(k).status == "corrected");
        CHECK(by.at(k).round_trip);
        CHECK(by.at(k).corrected_tensor);
    }
    CHECK(by.at("d0-theta4-theta5").status == "mismatch");
    auto pierre = tensor_findings(cartan_complex(), Convention::pierre);
    CHECK(pierre.size() == fs.size());
}
