#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "rumin/estimates.hpp"
#include "rumin/exterior.hpp"
#include "rumin/lie_algebra.hpp"
#include "rumin/operator_matrix.hpp"

namespace rumin {

// Group definitions:
//   {"layers":[2,1,2],"brackets":{"1,2":{"3":"1"}},"sqrt":[2],"labels":[...]}
// Indices are 1-based. Scalars are strings in the scalar grammar (or JSON
// numbers). Any radicand used must be built from the primes of declared
// "sqrt" entries, else TowerInsufficient.
StratifiedLieAlgebra group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const StratifiedLieAlgebra& g);
// Throws ParseError on unreadable files or malformed JSON.
StratifiedLieAlgebra load_group_file(const std::string& path);

Scalar scalar_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const OperatorMatrix& m);
OperatorMatrix matrix_from_json(const RingPtr& ring, const nlohmann::json& j);
// Accepts either a matrix object or a bare array of rows of strings.
nlohmann::json matrix_rows_json(const OperatorMatrix& m);

// {"degree":h,"terms":{"1,4":"1/sqrt(2)"}}; the empty key is the 0-form 1.
nlohmann::json form_to_json(const Form& f);
Form form_from_json(const nlohmann::json& j, int degree);

// {"degree":h,"slots":s,"terms":[{"covector":[1,4],"slot":1,"operator":"X1"}]}
nlohmann::json operator_form_to_json(const OperatorForm& f);
OperatorForm operator_form_from_json(const RingPtr& ring, const nlohmann::json& j);

nlohmann::json exponent_record_to_json(const ExponentRecord& r);
nlohmann::json sum_pair_to_json(const SumPair& p);
nlohmann::json finding_to_json(const Finding& f);

}  // namespace rumin
