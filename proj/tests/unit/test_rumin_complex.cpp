#include <doctest.h>

#include <fstream>
#include <set>

#include "rumin/errors.hpp"
#include "support.hpp"

using namespace rumin;
using test::cartan_complex;
using test::cartan_ring;
using test::cov;
using test::op;
using test::theta;

namespace {

Scalar inv_r2() { return Scalar(1) / Scalar::sqrt(mpq_class(2)); }

OperatorMatrix golden(const std::string& section, int h) {
    static const nlohmann::json g = [] {
        std::ifstream in(test::data_path("golden/cartan_matrices.json"));
        return nlohmann::json::parse(in);
    }();
    return matrix_from_json(cartan_ring(), g.at(section).at(std::to_string(h)));
}

}  // namespace

TEST_CASE("Rumin bases of the Cartan group") {
    const auto& c = cartan_complex();
    CHECK(c.dims() == std::vector<int>{1, 2, 3, 3, 2, 1});
    CHECK(c.basis(1).elements == std::vector<Form>{theta({1}), theta({2})});
    CHECK(c.basis(1).weights == std::vector<int>{1, 1});
    CHECK(c.basis(2).elements ==
          std::vector<Form>{theta({1, 4}), theta({2, 4}, inv_r2()) + theta({1, 5}, inv_r2()), theta({2, 5})});
    CHECK(c.basis(2).weights == std::vector<int>{4, 4, 4});
    CHECK(c.basis(0).elements == std::vector<Form>{Form::basis(0)});
    CHECK(c.basis(5).elements == std::vector<Form>{Form::basis(volume(5))});
    for (int h = 0; h <= 5; ++h) {
        Matrix t = align_basis(c.basis(h), cartan_reference_basis(h));
        CHECK(t.transpose() * t == Matrix::identity(t.rows()));
    }
}

TEST_CASE("aligning against a different span fails") {
    const auto& c = cartan_complex();
    CHECK_THROWS_AS(align_basis(c.basis(2), {theta({1, 2}), theta({1, 4}), theta({2, 5})}), SpanMismatch);
    CHECK_THROWS_AS(align_basis(c.basis(1), {theta({1})}), SpanMismatch);
    // A signed permutation is a valid alignment.
    Matrix t = align_basis(c.basis(1), {theta({2}), theta({1}, -1)});
    CHECK(t(1, 0) == Scalar(1));
    CHECK(t(0, 1) == Scalar(-1));
}

TEST_CASE("d0 pseudoinverse") {
    const auto& c = cartan_complex();
    CHECK(c.d0_pinv(theta({1, 2})) == theta({3}, -1));
    CHECK(c.d0_pinv(theta({1, 4})).is_zero());
    CHECK(c.d0_pinv(d0(c.algebra(), theta({4}))) == theta({4}));
}

TEST_CASE("Pi_E and coordinates in E0") {
    const auto& c = cartan_complex();
    const auto& r = cartan_ring();
    OperatorForm a = c.symbolic_all(1);
    OperatorForm pa = c.pi_E(a);
    // The weight-2 correction is (X1 alpha_2 - X2 alpha_1) theta_3.
    CHECK(pa.coeff(cov({3}), 1) == op("X1"));
    CHECK(pa.coeff(cov({3}), 0) == op("-X2"));
    OperatorForm top = OperatorForm::from_form(r, Form::basis(volume(5)), 0, 1);
    CHECK(c.pi_E(top) == top);
    CHECK(c.pi_E0(theta({1, 4})) == std::vector<Scalar>{Scalar(1), Scalar(0), Scalar(0)});
    CHECK(c.pi_E0(theta({1, 2})) == std::vector<Scalar>{Scalar(0), Scalar(0), Scalar(0)});
    for (int j = 0; j < 3; ++j) {
        auto v = c.pi_E0(c.basis(3).elements[j]);
        for (int i = 0; i < 3; ++i) CHECK(v[i] == Scalar(i == j ? 1 : 0));
    }
}

TEST_CASE("Pi_E on E0^2 only corrects weights 5 and 6") {
    const auto& c = cartan_complex();
    OperatorForm pa = c.pi_E(c.symbolic_all(2));
    std::set<int> weights;
    for (const auto& [k, u] : pa.terms()) weights.insert(cov_weight(c.algebra(), k.cov));
    CHECK(weights == std::set<int>{4, 5, 6});
}

TEST_CASE("d_c entries") {
    const auto& c = cartan_complex();
    const OperatorMatrix& d0m = c.dc(0);
    CHECK(d0m.rows() == 2);
    CHECK(d0m.at(0, 0) == op("X1"));
    CHECK(d0m.at(1, 0) == op("X2"));
    CHECK(c.dc(2).at(0, 0) == op("-X1*X2 - X3"));
    CHECK(c.dc(2).at(0, 1) == inv_r2() * op("X1^2"));
    CHECK(c.dc(2).at(0, 2).is_zero());
    CHECK(c.dc(4).row(0) == std::vector<EnvElement>{op("-X2"), op("X1")});
    CHECK(c.dc(5).is_zero());
    CHECK(c.dc(-1).is_zero());
    CHECK_THROWS_AS(c.dc(6), OutOfRange);
}

TEST_CASE("delta_c entries") {
    const auto& c = cartan_complex();
    CHECK(c.deltac(1).row(0) == std::vector<EnvElement>{op("-X1"), op("-X2")});
    CHECK(c.deltac(5).at(0, 0) == op("X2"));
    CHECK(c.deltac(5).at(1, 0) == op("-X1"));
    CHECK(c.deltac(3).at(1, 1) == Scalar::rational(3, 2) * op("X3"));
    CHECK(c.deltac(0).is_zero());
}

TEST_CASE("every d_c and delta_c matches the golden listings") {
    const auto& c = cartan_complex();
    for (int h = 0; h <= 4; ++h) CHECK(c.dc(h) == golden("dc", h));
    for (int h = 1; h <= 5; ++h) CHECK(c.deltac(h) == golden("deltac", h));
    for (int h = 1; h <= 4; ++h) CHECK(OperatorMatrix::from_scalars(cartan_ring(), c.star(h)) == golden("star", h));
}

TEST_CASE("complex identities") {
    const auto& c = cartan_complex();
    // Row 1 of d_c^(1) against d_c^(0).
    EnvElement e = op("-X1^2*X2 - X1*X3 - X4") * op("X1") + op("X1^3") * op("X2");
    CHECK(e.is_zero());
    for (const auto& r : verify_complex(c)) {
        INFO(r.name << " " << r.degree << " " << r.detail);
        CHECK(r.passed);
    }
    for (int h = 1; h <= 5; ++h) {
        auto rep = deltac_consistency(c, h);
        CHECK(rep.sign == 1);
        CHECK(rep.differing.empty());
    }
}

TEST_CASE("abelian group: E0 is the full exterior algebra") {
    auto g = StratifiedLieAlgebra::from_structure_constants({}, {3});
    RuminComplex c(PbwRing::create(g));
    CHECK(c.dims() == std::vector<int>{1, 3, 3, 1});
    for (const auto& r : verify_complex(c)) CHECK(r.passed);
    OperatorForm a = c.symbolic_all(1);
    CHECK(c.pi_E(a) == a);
    CHECK(c.dc(0).at(2, 0) == EnvElement::generator(c.ring(), 2));
}

TEST_CASE("Heisenberg complex") {
    RuminComplex h(PbwRing::create(free_nilpotent(2, 2)));
    CHECK(h.dims() == std::vector<int>{1, 2, 2, 1});
    for (const auto& r : verify_complex(h)) CHECK(r.passed);
    CHECK(*h.dc(1).order() == 2);
}
