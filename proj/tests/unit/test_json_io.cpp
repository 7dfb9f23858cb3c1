#include <doctest.h>

#include "rumin/errors.hpp"
#include "support.hpp"

using namespace rumin;
using test::cartan_complex;
using test::cartan_ring;
using test::data_path;
using test::theta;

TEST_CASE("group files") {
    CHECK(load_group_file(data_path("groups/cartan.json")) == cartan_group());
    auto heis = load_group_file(data_path("groups/heisenberg.json"));
    CHECK(heis.layer_dims() == std::vector<int>{2, 1});
    CHECK(heis.label(2) == "T");
    auto engel = load_group_file(data_path("groups/engel_sqrt2.json"));
    CHECK(engel.structure_constant(0, 1, 2) == Scalar::sqrt(mpq_class(2)));
    CHECK(load_group_file(data_path("groups/abelian3.json")).step() == 1);
    CHECK(group_from_json(group_to_json(engel)) == engel);
    CHECK_THROWS_AS(load_group_file(data_path("groups/missing.json")), ParseError);
}

TEST_CASE("group validation") {
    auto parse = [](const char* text) { return group_from_json(nlohmann::json::parse(text)); };
    const char* no_layers = R"j({"brackets":{}})j";
    const char* reversed = R"j({"layers":[2,1],"brackets":{"2,1":{"3":"1"}}})j";
    const char* undeclared = R"j({"layers":[2,1],"brackets":{"1,2":{"3":"sqrt(3)"}},"sqrt":[2]})j";
    const char* declared = R"j({"layers":[2,1],"brackets":{"1,2":{"3":"sqrt(3)"}},"sqrt":[3]})j";
    const char* out_of_range = R"j({"layers":[2,1],"brackets":{"1,2":{"4":"1"}}})j";
    CHECK_THROWS_AS(parse(no_layers), ParseError);
    CHECK_THROWS_AS(parse(reversed), InvalidInput);
    CHECK_THROWS_AS(parse(undeclared), TowerInsufficient);
    CHECK_NOTHROW(parse(declared));
    CHECK_THROWS_AS(parse(out_of_range), InvalidInput);
}

TEST_CASE("matrix round trip") {
    const auto& c = cartan_complex();
    for (int h = 0; h <= 4; ++h) {
        auto j = matrix_to_json(c.dc(h));
        CHECK(matrix_from_json(cartan_ring(), j) == c.dc(h));
        CHECK(matrix_from_json(cartan_ring(), matrix_rows_json(c.dc(h))) == c.dc(h));
        CHECK(j["rows"] == c.dc(h).rows());
    }
    CHECK(matrix_to_json(c.dc(2))["order"] == 2);
}

TEST_CASE("form round trip") {
    Scalar h = Scalar(1) / Scalar::sqrt(mpq_class(2));
    Form f = theta({2, 4}, h) + theta({1, 5}, h);
    CHECK(form_from_json(form_to_json(f), 2) == f);
    // Unsorted keys carry the permutation sign.
    auto unsorted = nlohmann::json::parse(R"j({"terms":{"2,1":"1"}})j");
    auto repeated = nlohmann::json::parse(R"j({"terms":{"1,1":"1"}})j");
    auto unit = nlohmann::json::parse(R"j({"terms":{"":"1"}})j");
    CHECK(form_from_json(unsorted, 2) == theta({1, 2}, -1));
    CHECK_THROWS_AS(form_from_json(repeated, 2), InvalidInput);
    CHECK(form_from_json(unit, 0) == Form::basis(0));
}

TEST_CASE("operator form round trip") {
    const auto& c = cartan_complex();
    for (int h = 0; h <= 4; ++h) {
        OperatorForm a = c.pi_E(c.symbolic_all(h));
        CHECK(operator_form_from_json(cartan_ring(), operator_form_to_json(a)) == a);
    }
}

TEST_CASE("report records") {
    auto t = theorem_table(cartan_complex(), Theorem::C2);
    auto j = exponent_record_to_json(t[4]);
    CHECK(j["status"] == "documented_discrepancy");
    CHECK(j["stated_exponent"] == "Q/(Q-5)");
    auto f = finding_to_json(tensor_findings(cartan_complex())[0]);
    for (const char* k : {"check", "status", "paper_row", "derived_row", "certificate", "corrected_tensor"})
        CHECK(f.contains(k));
}
