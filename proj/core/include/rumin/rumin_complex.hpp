#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rumin/exterior.hpp"
#include "rumin/linalg.hpp"
#include "rumin/operator_matrix.hpp"

namespace rumin {

// Orthonormal basis of E_0^h = ker d0 ∩ ker delta0, ordered by weight.
struct RuminBasis {
    int degree = 0;
    std::vector<Form> elements;
    std::vector<int> weights;
    std::map<int, std::vector<int>> by_weight;
    int size() const { return static_cast<int>(elements.size()); }
};

struct CheckResult {
    std::string name;
    int degree = -1;
    bool passed = false;
    std::string detail;
};

class RuminComplex {
public:
    explicit RuminComplex(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const StratifiedLieAlgebra& algebra() const { return ring_->algebra(); }
    int n() const { return ring_->dim(); }

    const RuminBasis& basis(int h) const { return bases_.at(h); }
    // 0 outside 0..n.
    int dim(int h) const;
    std::vector<int> dims() const;
    int max_weight(int h) const;

    // d0 restricted to weight w: rows covectors(h+1, w), columns covectors(h, w).
    Matrix d0_block(int h, int w) const;
    Form d0_pinv(const Form& beta) const;
    OperatorForm d0_pinv(const OperatorForm& beta) const;

    OperatorForm pi_E(const OperatorForm& a) const;
    std::vector<Scalar> pi_E0(const Form& a) const;
    // [basis element][slot]
    std::vector<std::vector<EnvElement>> pi_E0(const OperatorForm& a) const;

    // alpha_1 xi_j (single slot).
    OperatorForm symbolic(int h, int j) const;
    // sum_j alpha_j xi_j with one slot per basis element.
    OperatorForm symbolic_all(int h) const;
    // sum_i u_i alpha_1 xi_i.
    OperatorForm embed(int h, const std::vector<EnvElement>& coords) const;

    // d_c : E_0^h -> E_0^{h+1}, for -1 <= h <= n (zero at the ends).
    const OperatorMatrix& dc(int h) const;
    // delta_c : E_0^h -> E_0^{h-1} through signed star conjugation of d_c.
    OperatorMatrix deltac(int h) const;
    // Formal-adjoint transpose of d_c^{(h-1)}.
    OperatorMatrix deltac_adjoint(int h) const;
    // Matrix of the Hodge star E_0^h -> E_0^{n-h}.
    Matrix star(int h) const;
    OperatorMatrix star_op(int h) const;
    bool star_closed(int h) const;

private:
    RingPtr ring_;
    std::vector<RuminBasis> bases_;
    std::map<std::pair<int, int>, Matrix> pinv_;  // (h, w) -> map from (h+1, w) to (h, w)
    mutable std::mutex mu_;
    mutable std::map<int, OperatorMatrix> dc_cache_;
};

// Reference orthonormal bases Xi_0^h of the Cartan group, h = 0..5.
std::vector<Form> cartan_reference_basis(int h);

// Orthogonal T with expected_j = sum_i T_ij computed_i. Throws SpanMismatch.
Matrix align_basis(const RuminBasis& computed, const std::vector<Form>& expected);
// M expressed in new bases: T_target^T M T_source.
OperatorMatrix change_basis(const OperatorMatrix& m, const Matrix& t_source, const Matrix& t_target);

// Checks (a) d_c^2 = 0, (b) chain map and projection identities, (c) block
// homogeneity / order table, (d) star closure of the bases.
std::vector<CheckResult> verify_complex(const RuminComplex& c);

struct StarAdjointReport {
    int degree = 0;
    int sign = 0;  // s with star formula = s * adjoint transpose; 0 if neither
    std::vector<std::pair<int, int>> differing;
};
StarAdjointReport deltac_consistency(const RuminComplex& c, int h);

}  // namespace rumin
