#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "rumin/rumin_complex.hpp"

namespace rumin {

struct CheckRecord {
    std::string name;
    int criterion = 0;       // acceptance criterion number, 0 for auxiliary checks
    bool must_pass = true;   // informational records never fail a run
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyOptions {
    std::string golden_path;  // empty: skip golden comparison
    bool update_golden = false;
    std::uint64_t seed = 1;
    int oracle_pairs = 100;
    int max_word = 6;
    int max_poly_degree = 6;
};

struct VerifyReport {
    std::string group;
    std::vector<CheckRecord> checks;
    nlohmann::json findings = nlohmann::json::array();   // tensor adjudication
    nlohmann::json exponents = nlohmann::json::object(); // theorem tables
    double seconds = 0;

    bool passed() const;
    // Checks tagged with criterion k; empty when the criterion was not run.
    std::vector<const CheckRecord*> criterion(int k) const;
    bool criterion_passed(int k) const;
    nlohmann::json to_json() const;
};

// Runs every check that applies to g. The Cartan group gets the full suite;
// any other group gets the generic complex identities only.
VerifyReport run_verify(const StratifiedLieAlgebra& g, const VerifyOptions& opts);

// Compares computed matrices with a golden file. Returns the first differing
// entries by path such as "dc/1/(2,2)".
// Throws ParseError when the file is unreadable.
std::vector<std::string> compare_golden(const RuminComplex& c, const std::string& path);
// Rewrites the star, dc and deltac sections of the golden file from the
// engine output, keeping its bases.
void write_golden(const RuminComplex& c, const std::string& path);

}  // namespace rumin
