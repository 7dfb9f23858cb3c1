#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rumin/env_algebra.hpp"
#include "rumin/lie_algebra.hpp"
#include "rumin/scalar.hpp"

namespace rumin {

// theta_{i_1} ^ ... ^ theta_{i_h} as a bitmask (bit i is theta_{i+1}).
using Covector = std::uint64_t;

int cov_degree(Covector c);
std::vector<int> cov_indices(Covector c);
Covector cov_from_indices(const std::vector<int>& idx);  // 0-based, any order, no repeats
int cov_weight(const StratifiedLieAlgebra& g, Covector c);
// Sign s with theta_a ^ theta_b = s * theta_{a|b}; 0 when they overlap.
int wedge_sign(Covector a, Covector b);
std::string cov_str(Covector c);

// Lexicographic order on the sorted index lists, so theta_14 < theta_15 < theta_24.
struct CovectorLess {
    bool operator()(Covector a, Covector b) const;
};

// All h-covectors, optionally of a fixed weight, in CovectorLess order.
std::vector<Covector> covectors(int n, int h);
std::vector<Covector> covectors(const StratifiedLieAlgebra& g, int h, int weight);

// Constant-coefficient (left-invariant) h-form.
class Form {
public:
    Form() = default;
    explicit Form(int degree) : degree_(degree) {}
    static Form basis(Covector c, const Scalar& coeff = Scalar(1));

    int degree() const { return degree_; }
    const std::map<Covector, Scalar, CovectorLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(Covector c) const;
    void add(Covector c, const Scalar& s);

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Scalar& c, const Form& a);
    friend bool operator==(const Form& a, const Form& b) { return a.degree_ == b.degree_ && a.terms_ == b.terms_; }

    std::string str() const;

private:
    int degree_ = 0;
    std::map<Covector, Scalar, CovectorLess> terms_;
};

struct SlotKey {
    Covector cov;
    int slot;  // 0-based
    bool operator<(const SlotKey& o) const {
        if (cov != o.cov) return CovectorLess{}(cov, o.cov);
        return slot < o.slot;
    }
    bool operator==(const SlotKey& o) const { return cov == o.cov && slot == o.slot; }
};

// sum_{J,j} (U_{J,j} alpha_j) theta_J with operator coefficients U.
class OperatorForm {
public:
    OperatorForm() = default;
    OperatorForm(RingPtr ring, int degree, int slots) : ring_(std::move(ring)), degree_(degree), slots_(slots) {}
    // alpha_slot times the constant form f.
    static OperatorForm from_form(const RingPtr& ring, const Form& f, int slot, int slots);

    const RingPtr& ring() const { return ring_; }
    int degree() const { return degree_; }
    int slots() const { return slots_; }
    const std::map<SlotKey, EnvElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    EnvElement coeff(Covector c, int slot) const;
    void add(Covector c, int slot, const EnvElement& u);

    OperatorForm& operator+=(const OperatorForm& o);
    OperatorForm& operator-=(const OperatorForm& o);
    friend OperatorForm operator+(OperatorForm a, const OperatorForm& b) { return a += b; }
    friend OperatorForm operator-(OperatorForm a, const OperatorForm& b) { return a -= b; }
    friend OperatorForm operator*(const Scalar& c, const OperatorForm& a);
    friend bool operator==(const OperatorForm& a, const OperatorForm& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    // Left composition of every coefficient with u.
    OperatorForm left_multiply(const EnvElement& u) const;
    // Right composition of every coefficient with u (substitutes alpha by u alpha).
    OperatorForm right_multiply(const EnvElement& u) const;

    std::string str() const;

private:
    RingPtr ring_;
    int degree_ = 0;
    int slots_ = 1;
    std::map<SlotKey, EnvElement> terms_;
};

Form wedge(const Form& a, const Form& b, int n);
// theta_c ^ a for a covector c.
OperatorForm wedge_left(Covector c, const OperatorForm& a);

Scalar inner(const Form& a, const Form& b);
// <a, f> as a row of operators over the slots.
std::vector<EnvElement> inner(const OperatorForm& a, const Form& f);

Form hodge_star(const StratifiedLieAlgebra& g, const Form& a);
Covector volume(int n);

std::map<int, Form> weight_split(const StratifiedLieAlgebra& g, const Form& a);
std::map<int, OperatorForm> weight_split(const OperatorForm& a);

// d theta_k = - sum_{i<j} c^k_{ij} theta_i ^ theta_j, extended as a derivation.
Form d0(const StratifiedLieAlgebra& g, const Form& a);
OperatorForm d0(const OperatorForm& a);
Form delta0(const StratifiedLieAlgebra& g, const Form& a);
// Adds sum_{m in V_l} (X_m U) theta_m ^ theta_J for every term.
OperatorForm d_layer(int l, const OperatorForm& a);
OperatorForm d_full(const OperatorForm& a);

}  // namespace rumin
