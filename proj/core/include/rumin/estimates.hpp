#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rumin/laplacians.hpp"
#include "rumin/rumin_complex.hpp"

namespace rumin {

// A homogeneous kernel of type mu on a group of homogeneous dimension Q.
struct KernelType {
    int mu = 0;
    int Q = 0;
    // locally integrable kernel (0 < mu < Q)
    bool valid() const { return mu > 0 && mu < Q; }
    // mu >= Q: the fundamental solution carries a logarithmic part
    bool log_regime() const { return mu >= Q; }
};

KernelType kernel_type_of_inverse(int order, int Q);
KernelType differentiate_type(const KernelType& t, int dI);
// 1/q = 1/p - mu/Q. Throws OutOfRange unless 0 < mu < Q and 1 < p < Q/mu.
mpq_class folland_map(const mpq_class& p, const KernelType& t);
// Q / (Q - (a - c)). Throws OutOfRange unless 0 < a - c < Q.
mpq_class sobolev_dual_exponent(int a, int c, int Q);

// "Q/(Q-k)".
std::string exponent_label(int k);

enum class Theorem { H2, C2, H2cor, H2sum };
std::string theorem_name(Theorem t);
Theorem parse_theorem(const std::string& s);

struct ChainLink {
    std::string op;  // grad, dc, deltac, A, star
    int degree = -1;
    int order = 0;   // homogeneity of the actual operator matrix
    std::optional<int> stated_order;  // a differing order asserted in the written argument
    std::string str() const;
};

// Exponent bookkeeping for one (degree, term) entry of a theorem.
//
// The chain lists the operators applied to the inverse Laplacian, left to
// right. With a gradient pairing (CvS route) the pairing kernel has type
// mu = a - c, where c includes the gradient, and the test function lands in
// L^{Q/(mu+1)}; the estimate exponent is its dual Q/(Q-(mu+1)). Without one
// (Hardy route) the kernel of type mu = a - c maps H^1 into L^{Q/(Q-mu)}.
struct ExponentRecord {
    Theorem theorem = Theorem::H2;
    std::string family;
    int degree = 0;
    std::string term;       // f or g
    std::string norm;       // L1, L1-grad, Hardy
    std::string rhs;        // quantity measured on the right-hand side
    int laplacian_order = 0;
    std::vector<ChainLink> chain;
    bool gradient_pairing = false;
    int chain_order = 0;
    int kernel_type = 0;
    int derived_k = 0;
    int paper_k = 0;
    std::optional<int> stated_k;  // exponent implied by the stated orders, when they differ
    bool folland_used = false;
    bool folland_ok = true;
    bool agree = false;
    std::string status;  // agree, mismatch, documented_discrepancy
    mpq_class derived_value() const;
};

struct SumPair {
    int degree = 0;
    std::pair<int, int> paper;   // (k1, k2) of L^{Q/(Q-k1)} + L^{Q/(Q-k2)}
    std::pair<int, int> derived; // (f exponent, g exponent)
    bool agree = false;
};

std::vector<ExponentRecord> theorem_table(const RuminComplex& c, Theorem t);
// Only meaningful for H2sum: groups the f and g records per degree.
std::vector<SumPair> sum_pairs(const std::vector<ExponentRecord>& records);
inline const char* sum_space_duality_note() { return "(L^{p,q})* = L^{p'} + L^{q'}"; }

// Horizontal k-tensor with entries acting on slot functions alpha_1..alpha_s.
struct HorizontalTensor {
    int order = 0;
    int slots = 0;
    // index tuple over V_1 (0-based) -> operator per slot
    std::map<std::vector<int>, std::vector<EnvElement>> entries;
    std::string name;
    bool symmetric() const;
    std::string str() const;
};

enum class Convention { CvS, pierre };
Convention parse_convention(const std::string& s);

// Tensors used in the vanishing-divergence argument on the Cartan group,
// for h = 1..4, stored as written. h = 2 is the only order-2 tensor.
HorizontalTensor paper_tensor(const RingPtr& ring, int h);
// Alternative displays: h = 1 in operator form, h = 3 in symmetric form.
HorizontalTensor paper_tensor_variant(const RingPtr& ring, int h);

// sum_I X_{i_k}...X_{i_1} F_I (CvS) or sum_I X_{i_1}...X_{i_k} F_I (pierre).
std::vector<EnvElement> generalized_divergence(const RingPtr& ring, const HorizontalTensor& f, Convention conv);

struct Certificate {
    std::vector<EnvElement> coefficients;  // row = sum_i coefficients[i] * dc.row(i)
    bool constant() const;
    std::string str() const;
};
// Left-module membership of `row` in the row span of dc, with coefficient
// degrees at most coeff_degree_bound. Throws DegreeMismatch when no dc row
// can contribute to a nonzero row.
std::optional<Certificate> check_row_membership(const std::vector<EnvElement>& row, const OperatorMatrix& dc,
                                                int coeff_degree_bound);

// Cartan's formula for <d a, Z_0 ^ ... ^ Z_h> with left-invariant basis
// fields Z (0-based indices), as a row over the slots of a.
std::vector<EnvElement> cartan_pairing(const OperatorForm& a, const std::vector<int>& z);
// <a, Z_0 ^ ... ^ Z_{h-1}> under the determinant pairing.
std::vector<EnvElement> evaluate_on(const OperatorForm& a, const std::vector<int>& z);

// Constant-coefficient tensor of order k with the given divergence, or none.
std::optional<HorizontalTensor> solve_divergence_tensor(const RingPtr& ring, const std::vector<EnvElement>& target,
                                                        int k, Convention conv);

struct Finding {
    std::string check;
    std::string status;  // certified, mismatch, corrected, info
    std::string paper_row;
    std::string derived_row;
    std::optional<std::string> certificate;
    std::optional<std::string> corrected_tensor;
    std::string detail;
    bool round_trip = true;  // divergence of the corrected tensor reproduces the target
};

std::string row_str(const std::vector<EnvElement>& row);

// Adjudicates every tensor above against the computed d_c rows.
std::vector<Finding> tensor_findings(const RuminComplex& c, Convention conv = Convention::CvS);

}  // namespace rumin
