#include <doctest.h>

#include "support.hpp"

using namespace rumin;
using test::cartan_ring;
using test::cov;
using test::op;
using test::theta;

namespace {
const StratifiedLieAlgebra& g() { return cartan_ring()->algebra(); }
}

TEST_CASE("wedge products") {
    CHECK(wedge(theta({1}), theta({2}), 5) == theta({1, 2}));
    CHECK(wedge(theta({2}), theta({1}), 5) == theta({1, 2}, -1));
    CHECK(wedge(theta({4}), theta({2, 3}), 5) == theta({2, 3, 4}));
    CHECK(wedge(theta({1}), theta({1, 2}), 5).is_zero());
    CHECK(wedge_sign(cov({2}), cov({1})) == -1);
}

TEST_CASE("Hodge star") {
    Covector vol = volume(5);
    // With vol = theta_1 ^ theta_2345 the star of theta_1 is +theta_2345.
    CHECK(hodge_star(g(), theta({1})) == theta({2, 3, 4, 5}));
    CHECK(hodge_star(g(), Form::basis(vol)) == Form::basis(0));
    CHECK(hodge_star(g(), hodge_star(g(), theta({1, 4}))) == theta({1, 4}));
    for (Covector c : covectors(5, 2)) {
        Form a = Form::basis(c);
        CHECK(wedge(a, hodge_star(g(), a), 5) == Form::basis(vol));
    }
}

TEST_CASE("weights") {
    auto split = weight_split(g(), theta({1, 4}) + theta({3, 4}));
    REQUIRE(split.size() == 2);
    CHECK(split.at(4) == theta({1, 4}));
    CHECK(split.at(5) == theta({3, 4}));
    CHECK(weight_split(g(), theta({1})).at(1) == theta({1}));
    CHECK(weight_split(g(), Form::basis(volume(5))).count(10) == 1);
}

TEST_CASE("d0 and its transpose") {
    CHECK(d0(g(), theta({3})) == theta({1, 2}, -1));
    CHECK(d0(g(), theta({1})).is_zero());
    CHECK(d0(g(), theta({4, 5})) == theta({1, 3, 5}, -1) + theta({2, 3, 4}));
    CHECK(delta0(g(), theta({1, 2})) == theta({3}, -1));
    CHECK(delta0(g(), theta({1})).is_zero());
    for (Covector a : covectors(5, 2))
        for (Covector b : covectors(5, 3))
            CHECK(inner(d0(g(), Form::basis(a)), Form::basis(b)) == inner(Form::basis(a), delta0(g(), Form::basis(b))));
}

TEST_CASE("layered differentials") {
    const auto& r = cartan_ring();
    OperatorForm a = OperatorForm::from_form(r, theta({1}), 0, 1);
    OperatorForm d1 = d_layer(1, a);
    CHECK(d1.coeff(cov({1, 2}), 0) == op("-X2"));
    CHECK(d_layer(2, a).coeff(cov({1, 3}), 0) == op("-X3"));
    OperatorForm c = OperatorForm::from_form(r, theta({4, 5}), 0, 1);
    // Constant coefficients on theta_45: the layer-3 part vanishes by theta_4^theta_4 = theta_5^theta_5 = 0.
    CHECK(d_layer(3, c).is_zero());
}

TEST_CASE("full differential") {
    const auto& r = cartan_ring();
    OperatorForm a = OperatorForm::from_form(r, theta({3}), 0, 1);
    OperatorForm da = d_full(a);
    CHECK(da.coeff(cov({1, 2}), 0) == op("-1"));
    CHECK(da.coeff(cov({1, 3}), 0) == op("X1"));
    CHECK(da.coeff(cov({2, 3}), 0) == op("X2"));
    CHECK(da.coeff(cov({3, 4}), 0) == op("-X4"));
    CHECK(da.coeff(cov({3, 5}), 0) == op("-X5"));
    CHECK(d_full(d_full(OperatorForm::from_form(r, theta({1}), 0, 1))).is_zero());
    CHECK(d_full(OperatorForm::from_form(r, Form::basis(0), 0, 1)).coeff(cov({1}), 0) == op("X1"));
}
