#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rumin/lie_algebra.hpp"
#include "rumin/scalar.hpp"

namespace rumin {

// Exponent vector (i_1, ..., i_n) standing for X_1^{i_1} ... X_n^{i_n}.
using Monomial = std::vector<std::uint8_t>;
using Terms = std::map<Monomial, Scalar>;

// The universal enveloping algebra of a stratified Lie algebra with its PBW
// basis. Holds memo tables for generator-times-monomial products, guarded by
// a mutex so a ring may be shared between threads.
class PbwRing {
public:
    static std::shared_ptr<const PbwRing> create(StratifiedLieAlgebra g);

    const StratifiedLieAlgebra& algebra() const { return g_; }
    int dim() const { return g_.dim(); }

    // X_i * X^m in normal form.
    const Terms& generator_times(int i, const Monomial& m) const;
    // X^a * X^b in normal form.
    Terms monomial_product(const Monomial& a, const Monomial& b) const;
    const Terms& monomial_adjoint(const Monomial& m) const;

    int degree(const Monomial& m) const;
    // Normal monomials of homogeneous degree d.
    std::vector<Monomial> monomials_of_degree(int d) const;

private:
    explicit PbwRing(StratifiedLieAlgebra g) : g_(std::move(g)) {}
    const Terms& generator_times_locked(int i, const Monomial& m) const;

    StratifiedLieAlgebra g_;
    mutable std::recursive_mutex mu_;
    mutable std::vector<std::map<Monomial, Terms>> gen_cache_;
    mutable std::map<std::pair<Monomial, Monomial>, Terms> prod_cache_;
    mutable std::map<Monomial, Terms> adj_cache_;
};

using RingPtr = std::shared_ptr<const PbwRing>;

// A left-invariant differential operator: a finite sum of PBW monomials.
class EnvElement {
public:
    EnvElement() = default;
    explicit EnvElement(RingPtr ring) : ring_(std::move(ring)) {}
    EnvElement(RingPtr ring, Terms terms);

    static EnvElement constant(RingPtr ring, const Scalar& c);
    static EnvElement generator(RingPtr ring, int i);
    static EnvElement monomial(RingPtr ring, Monomial m, const Scalar& c = Scalar(1));

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;

    EnvElement operator-() const;
    EnvElement& operator+=(const EnvElement& o);
    EnvElement& operator-=(const EnvElement& o);
    EnvElement& operator*=(const Scalar& c);
    friend EnvElement operator+(EnvElement a, const EnvElement& b) { return a += b; }
    friend EnvElement operator-(EnvElement a, const EnvElement& b) { return a -= b; }
    friend EnvElement operator*(const EnvElement& a, const EnvElement& b);
    friend EnvElement operator*(const Scalar& c, EnvElement a) { return a *= c; }
    friend EnvElement operator*(EnvElement a, const Scalar& c) { return a *= c; }
    friend bool operator==(const EnvElement& a, const EnvElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const EnvElement& a, const EnvElement& b) { return !(a == b); }

    std::string str() const;
    std::string latex() const;

private:
    RingPtr ring_;
    Terms terms_;
    void add(const Monomial& m, const Scalar& c);
    friend EnvElement multiply(const EnvElement& a, const EnvElement& b);
};

EnvElement normal_form(const RingPtr& ring, const std::vector<int>& word, const Scalar& coefficient = Scalar(1));
EnvElement multiply(const EnvElement& a, const EnvElement& b);

struct Homogeneity {
    std::optional<int> degree;  // set when all terms share one degree
    std::vector<int> mixed;     // degrees present otherwise, ascending
    bool is_mixed() const { return !degree.has_value(); }
};
// Throws ZeroElement on the zero element.
Homogeneity homogeneity(const EnvElement& a);

// The anti-automorphism X_i -> -X_i, normalised.
EnvElement formal_adjoint(const EnvElement& a);

EnvElement parse_env(const RingPtr& ring, std::string_view text);

// Commutative polynomials in the coordinates x_1..x_n, used by the
// coordinate realisation oracle.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}
    static Polynomial constant(int nvars, const Scalar& c);
    static Polynomial variable(int nvars, int i);

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Polynomial derivative(int i) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Scalar& c, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    void add(const Monomial& m, const Scalar& c);
    std::string str() const;

private:
    int nvars_ = 0;
    Terms terms_;
};

Polynomial parse_polynomial(int nvars, std::string_view text);

// Vector fields X_i = sum_m fields[i][m] d/dx_m.
struct CoordinateRealization {
    std::vector<std::vector<Polynomial>> fields;
};

// The exponential-coordinate fields of the Cartan group.
CoordinateRealization cartan_realization();

// Applies a single vector field to p.
Polynomial apply_field(const CoordinateRealization& r, int i, const Polynomial& p);
// Applies a word X_{w_1} ... X_{w_k} to p, rightmost letter first.
Polynomial apply_word(const CoordinateRealization& r, const std::vector<int>& word, const Polynomial& p);
// Applies an operator through its normal form. Uses the built-in Cartan
// realisation when `fields` is null; throws NoRealization otherwise.
Polynomial coordinate_apply(const EnvElement& a, const Polynomial& p, const CoordinateRealization* fields = nullptr);

}  // namespace rumin
