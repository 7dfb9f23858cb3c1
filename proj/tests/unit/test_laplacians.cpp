#include <doctest.h>

#include "rumin/errors.hpp"
#include "rumin/laplacians.hpp"
#include "support.hpp"

using namespace rumin;
using test::cartan_complex;
using test::cartan_ring;
using test::op;

TEST_CASE("sub-Laplacian at degree 0") {
    const auto& c = cartan_complex();
    for (Family f : {Family::A, Family::R}) {
        OperatorMatrix m = laplacian(c, f, 0);
        REQUIRE(m.rows() == 1);
        CHECK(m.at(0, 0) == op("-X1^2 - X2^2"));
    }
}

TEST_CASE("recipes") {
    const auto& c = cartan_complex();
    OperatorMatrix a2 = laplacian(c, Family::A, 2);
    CHECK(a2 == c.dc(1) * c.deltac(2) + c.deltac(3) * a_delta(c, 3) * c.dc(2));
    CHECK(a2.rows() == 3);
    CHECK(*a2.order() == 6);
    OperatorMatrix g1 = laplacian(c, Family::G, 1);
    OperatorMatrix dd = c.dc(0) * c.deltac(1), ddl = c.deltac(2) * c.dc(1);
    CHECK(g1 == dd.power(6) + ddl.power(2));
    CHECK(*g1.order() == 12);
}

TEST_CASE("A_Delta") {
    const auto& c = cartan_complex();
    OperatorMatrix a = a_delta(c, 2);
    CHECK(a.at(1, 1) == op("-X1^2 - X2^2"));
    CHECK(a.at(0, 1).is_zero());
    CHECK_THROWS_AS(a_delta(c, 1), OutOfRange);
    CHECK_THROWS_AS(a_delta(c, 4), OutOfRange);
    OperatorMatrix s3 = OperatorMatrix::from_scalars(cartan_ring(), c.star(3));
    OperatorMatrix s2 = OperatorMatrix::from_scalars(cartan_ring(), c.star(2));
    CHECK(s3 * a_delta(c, 2) * s2 == a_delta(c, 3));
}

TEST_CASE("self-adjointness") {
    const auto& c = cartan_complex();
    CHECK(verify_self_adjoint(laplacian(c, Family::A, 2)).self_adjoint);
    CHECK(verify_self_adjoint(laplacian(c, Family::G, 3)).self_adjoint);
    auto rep = verify_self_adjoint(c.dc(1));
    CHECK_FALSE(rep.applicable);
    CHECK_FALSE(rep.self_adjoint);
    auto bad = verify_self_adjoint(c.dc(0) * c.deltac(1) + OperatorMatrix::diagonal(cartan_ring(), 2, op("X1")));
    CHECK(bad.applicable);
    CHECK_FALSE(bad.self_adjoint);
    CHECK_FALSE(bad.differing.empty());
}

TEST_CASE("order tables") {
    const auto& c = cartan_complex();
    CHECK(expected_orders(Family::A) == std::vector<int>{2, 6, 6, 6, 6, 2});
    CHECK(expected_orders(Family::R) == std::vector<int>{2, 6, 12, 12, 6, 2});
    CHECK(expected_orders(Family::G) == std::vector<int>(6, 12));
    for (Family f : {Family::A, Family::R, Family::G})
        for (int h = 0; h <= 5; ++h) {
            OperatorMatrix m = laplacian(c, f, h);
            auto rep = verify_homogeneous_order(m, expected_orders(f)[h]);
            INFO(family_name(f) << h);
            CHECK(rep.passed);
            CHECK(verify_self_adjoint(m).self_adjoint);
        }
    auto wrong = verify_homogeneous_order(laplacian(c, Family::A, 1), 12);
    CHECK_FALSE(wrong.passed);
    CHECK(*wrong.actual == 6);
}

TEST_CASE("Hodge duality") {
    const auto& c = cartan_complex();
    CHECK(hodge_conjugate(c, laplacian(c, Family::A, 2), 2) == laplacian(c, Family::A, 3));
    CHECK(hodge_conjugate(c, laplacian(c, Family::G, 0), 0) == laplacian(c, Family::G, 5));
    for (Family f : {Family::A, Family::R, Family::G})
        for (int h = 0; h <= 5; ++h) CHECK(star_duality_sign(c, f, h) == 1);
}

TEST_CASE("families and errors") {
    CHECK(parse_family("a") == Family::A);
    CHECK(family_name(parse_family("G")) == "G");
    CHECK_THROWS_AS(parse_family("B"), InvalidInput);
    CHECK_THROWS_AS(laplacian(cartan_complex(), Family::A, 6), OutOfRange);
    RuminComplex h(PbwRing::create(free_nilpotent(2, 2)));
    CHECK_THROWS_AS(laplacian(h, Family::A, 1), UnsupportedGroup);
}
