#include <doctest.h>

#include "rumin/errors.hpp"
#include "rumin/json_io.hpp"
#include "rumin/lie_algebra.hpp"
#include "support.hpp"

using namespace rumin;

TEST_CASE("Cartan structure constants") {
    BracketTable t{{{0, 1}, {{2, Scalar(1)}}}, {{0, 2}, {{3, Scalar(1)}}}, {{1, 2}, {{4, Scalar(1)}}}};
    auto g = StratifiedLieAlgebra::from_structure_constants(t, {2, 1, 2});
    CHECK(g.step() == 3);
    CHECK(g == cartan_group());
}

TEST_CASE("built-in Cartan group") {
    auto g = cartan_group();
    CHECK(g.layer_dims() == std::vector<int>{2, 1, 2});
    CHECK(g.homogeneous_dimension() == 10);
    CHECK(g.weights() == std::vector<int>{1, 1, 2, 3, 3});
    CHECK(g.bracket_basis(1, 2) == SparseVec{{4, Scalar(1)}});
    CHECK(g.bracket_basis(0, 1) == SparseVec{{2, Scalar(1)}});
    CHECK(g.bracket_basis(2, 1) == SparseVec{{4, Scalar(-1)}});
    CHECK(g.bracket_basis(3, 4).empty());
    CHECK(g.bracket_basis(0, 0).empty());
    CHECK(g.structure_constant(0, 2, 3) == Scalar(1));
    CHECK(is_cartan(g));
}

TEST_CASE("abelian algebra") {
    auto g = StratifiedLieAlgebra::from_structure_constants({}, {3});
    CHECK(g.step() == 1);
    CHECK(g.homogeneous_dimension() == 3);
    CHECK_FALSE(is_cartan(g));
}

TEST_CASE("validation errors") {
    BracketTable grading{{{0, 1}, {{2, Scalar(1)}}}, {{0, 2}, {{3, Scalar(1)}}}};
    CHECK_THROWS_AS(StratifiedLieAlgebra::from_structure_constants(grading, {2, 2}), GradingViolation);
    // V_1 does not generate the second layer.
    BracketTable ns{};
    CHECK_THROWS_AS(StratifiedLieAlgebra::from_structure_constants(ns, {2, 1}), NotStratified);
    try {
        load_group_file(test::data_path("groups/bad_jacobi.json"));
        FAIL("expected JacobiViolation");
    } catch (const JacobiViolation& e) {
        CHECK(std::string(e.what()) == "JacobiViolation(1,2,3)");
    }
}

TEST_CASE("free nilpotent algebras via Hall bases") {
    auto f23 = free_nilpotent(2, 3);
    CHECK(f23 == cartan_group());
    CHECK(f23.homogeneous_dimension() == 10);
    auto f22 = free_nilpotent(2, 2);
    CHECK(f22.layer_dims() == std::vector<int>{2, 1});
    CHECK(f22.homogeneous_dimension() == 4);
    CHECK(free_nilpotent(2, 1).layer_dims() == std::vector<int>{2});
    CHECK(free_nilpotent(3, 2).layer_dims() == std::vector<int>{3, 3});
    CHECK(free_nilpotent(2, 4).layer_dims() == std::vector<int>{2, 1, 2, 3});
    auto words = hall_words(2, 3);
    CHECK(words == std::vector<std::string>{"X1", "X2", "[X1,X2]", "[X1,[X1,X2]]", "[X2,[X1,X2]]"});
    CHECK_THROWS_AS(free_nilpotent(3, 4, 10), ResourceLimit);
}

TEST_CASE("Witt formula") {
    CHECK(free_layer_dim(2, 1) == 2);
    CHECK(free_layer_dim(2, 3) == 2);
    CHECK(free_layer_dim(2, 4) == 3);
    CHECK(free_layer_dim(3, 2) == 3);
}
