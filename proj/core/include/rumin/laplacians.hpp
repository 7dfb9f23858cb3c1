#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rumin/operator_matrix.hpp"
#include "rumin/rumin_complex.hpp"

namespace rumin {

enum class Family { G, R, A };

std::string family_name(Family f);
// Accepts "G", "R", "A" (case-insensitive). Throws InvalidInput.
Family parse_family(const std::string& s);

// The constant matrix -(X1^2 + X2^2) I_3 acting on E_0^h for h = 2, 3 of the
// Cartan group. Throws OutOfRange for other degrees.
OperatorMatrix a_delta(const RuminComplex& c, int h);

// Laplacian of the given family on E_0^h, fully expanded. Cartan only;
// throws UnsupportedGroup otherwise and OutOfRange for h outside 0..5.
OperatorMatrix laplacian(const RuminComplex& c, Family f, int h);

// Expected homogeneous orders per degree 0..5.
std::vector<int> expected_orders(Family f);

struct AdjointReport {
    bool applicable = false;  // false for non-square input
    bool self_adjoint = false;
    std::vector<std::pair<int, int>> differing;
};
AdjointReport verify_self_adjoint(const OperatorMatrix& m);

struct OrderReport {
    int expected = 0;
    std::optional<int> actual;
    bool passed = false;
    std::vector<std::pair<int, int>> offending;  // entries of another degree or mixed
};
OrderReport verify_homogeneous_order(const OperatorMatrix& m, int expected);

// star_h * m * star_{n-h}: carries an operator on E_0^h to one on E_0^{n-h}.
OperatorMatrix hodge_conjugate(const RuminComplex& c, const OperatorMatrix& m, int h);

// s with laplacian(f, n-h) = s * hodge_conjugate(laplacian(f, h), h); 0 if neither sign works.
int star_duality_sign(const RuminComplex& c, Family f, int h);

}  // namespace rumin
