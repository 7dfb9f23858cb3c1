#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "rumin/verify.hpp"
#include "support.hpp"

using namespace rumin;
using test::cartan_complex;
using test::data_path;

TEST_CASE("full suite on the Cartan group") {
    VerifyOptions o;
    o.golden_path = data_path("golden/cartan_matrices.json");
    auto r = run_verify(cartan_group(), o);
    for (const auto& c : r.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.passed);
    }
    CHECK(r.passed());
    for (int k = 1; k <= 11; ++k) CHECK(r.criterion_passed(k));
    CHECK(r.findings.size() >= 6);
    CHECK(r.exponents.contains("C2"));
    auto j = r.to_json();
    CHECK(j["passed"] == true);
}

TEST_CASE("generic groups") {
    for (const char* g : {"groups/abelian3.json", "groups/heisenberg.json", "groups/engel_sqrt2.json"}) {
        auto r = run_verify(load_group_file(data_path(g)), {});
        INFO(g);
        CHECK(r.passed());
        CHECK(r.criterion(7).empty());
    }
}

TEST_CASE("golden tampering is located") {
    std::ifstream in(data_path("golden/cartan_matrices.json"));
    auto g = nlohmann::json::parse(in);
    g["deltac"]["3"][1][1] = "3/2*X3 + X1*X2";
    g["star"]["2"][0][0] = "1";
    std::string path = "tampered_golden_unit.json";
    std::ofstream(path) << g.dump();
    auto diff = compare_golden(cartan_complex(), path);
    CHECK(diff == std::vector<std::string>{"star/2/(1,1)", "deltac/3/(2,2)"});
    write_golden(cartan_complex(), path);
    CHECK(compare_golden(cartan_complex(), path).empty());
    std::remove(path.c_str());
}

TEST_CASE("oracle needs enough pairs") {
    VerifyOptions o;
    o.oracle_pairs = 20;
    auto r = run_verify(cartan_group(), o);
    CHECK_FALSE(r.criterion_passed(9));
    CHECK_FALSE(r.criterion_passed(2));  // no golden file
}
