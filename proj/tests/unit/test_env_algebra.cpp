#include <doctest.h>

#include "rumin/errors.hpp"
#include "support.hpp"

using namespace rumin;
using test::cartan_ring;
using test::op;

TEST_CASE("PBW normal form of words") {
    const auto& r = cartan_ring();
    CHECK(normal_form(r, {1, 0}) == op("X1*X2 - X3"));
    CHECK(normal_form(r, {0, 0}) == op("X1^2"));
    CHECK(normal_form(r, {1, 0, 0}) == op("X1^2*X2 - 2*X1*X3 + X4"));
    CHECK(normal_form(r, {}) == EnvElement::constant(r, 1));
    CHECK(normal_form(r, {4, 3, 2, 1, 0}, Scalar(0)).is_zero());
}

TEST_CASE("products of normal-ordered elements") {
    CHECK(op("X1") * op("X3") == op("X1*X3"));
    CHECK(op("X3") * op("X1") == op("X1*X3 - X4"));
    CHECK(op("X1*X2") * op("X1") == op("X1^2*X2 - X1*X3"));
    // Associativity on a sample that needs several rewrites.
    EnvElement a = op("X2^2 + X3"), b = op("X1*X2"), c = op("X2*X1 - X5");
    CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("homogeneity") {
    CHECK(*homogeneity(op("X1*X3")).degree == 3);
    CHECK(*homogeneity(op("X4")).degree == 3);
    Homogeneity m = homogeneity(op("X1 + X3"));
    CHECK(m.is_mixed());
    CHECK(m.mixed == std::vector<int>{1, 2});
    CHECK_THROWS_AS(homogeneity(EnvElement(cartan_ring())), ZeroElement);
}

TEST_CASE("formal adjoint") {
    CHECK(formal_adjoint(op("X1")) == op("-X1"));
    CHECK(formal_adjoint(op("X1*X2")) == op("X1*X2 - X3"));
    CHECK(formal_adjoint(op("1")) == op("1"));
    EnvElement a = op("X1^2*X2 + X1*X3 + X4");
    CHECK(formal_adjoint(formal_adjoint(a)) == a);
}

TEST_CASE("coordinate realization of the Cartan fields") {
    Polynomial x1 = Polynomial::variable(5, 0), x3 = Polynomial::variable(5, 2), x4 = Polynomial::variable(5, 3);
    CoordinateRealization r = cartan_realization();
    CHECK(apply_field(r, 1, x3) == x1);
    CHECK(apply_field(r, 0, x1 * x1) == Scalar(2) * x1);
    EnvElement comm = normal_form(cartan_ring(), {1, 0}) - normal_form(cartan_ring(), {0, 1});
    CHECK(coordinate_apply(comm, x4) == Scalar(-1) * x1);
    // The commutator of the realized fields is the realized bracket.
    Polynomial p = parse_polynomial(5, "x1^2*x5 + x2*x3*x4");
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            Polynomial lhs = apply_word(r, {i, j}, p) - apply_word(r, {j, i}, p);
            EnvElement br(cartan_ring());
            for (const auto& [k, c] : cartan_group().bracket_basis(i, j))
                br += c * EnvElement::generator(cartan_ring(), k);
            CHECK(lhs == coordinate_apply(br, p));
        }
}

TEST_CASE("coordinate application needs a realization") {
    auto heis = free_nilpotent(2, 2);
    auto ring = PbwRing::create(heis);
    CHECK_THROWS_AS(coordinate_apply(EnvElement::generator(ring, 0), Polynomial::variable(3, 0)), NoRealization);
}

TEST_CASE("parser") {
    CHECK(op("(X1*X2 + X3)*X2") == op("X1*X2^2 + 2*X3*X2") - op("X3*X2"));
    CHECK(op("sqrt(2)*(X2*X1^2 - X4)") == Scalar::sqrt(mpq_class(2)) * (normal_form(cartan_ring(), {1, 0, 0}) - op("X4")));
    CHECK(parse_env(cartan_ring(), op("X2*X1^2 - 1/2*X5").str()) == op("X2*X1^2 - 1/2*X5"));
    CHECK_THROWS_AS(op("X7"), InvalidInput);
    CHECK_THROWS_AS(op("X1 +"), InvalidInput);
}
