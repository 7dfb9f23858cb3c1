#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rumin {

// An element of a multiquadratic extension of Q, stored canonically as
// sum_m c_m * sqrt(m) over distinct square-free radicands m >= 1 with
// nonzero rational c_m. Every field element has exactly one such form, so
// equality is structural.
class Scalar {
public:
    using Term = std::pair<std::uint64_t, mpq_class>;

    Scalar() = default;
    Scalar(long v);  // NOLINT(google-explicit-constructor)
    Scalar(int v) : Scalar(static_cast<long>(v)) {}  // NOLINT
    Scalar(const mpq_class& q);                      // NOLINT

    static Scalar rational(long num, long den);
    // sqrt of a non-negative rational; throws TowerInsufficient when the
    // radicand would push the tower past the configured prime cap.
    static Scalar sqrt(const mpq_class& q);
    static Scalar sqrt(const Scalar& x);
    static Scalar parse(std::string_view text);

    // Maximum number of distinct primes allowed under square roots.
    static void set_prime_cap(int cap);
    static int prime_cap();

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    bool is_one() const;
    // Only valid when is_rational().
    mpq_class to_rational() const;
    // Sign of a rational scalar, or of the leading term otherwise (used for
    // printing only).
    int leading_sign() const;

    Scalar inverse() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    const std::vector<Term>& terms() const { return terms_; }
    // Distinct primes dividing some radicand.
    std::vector<std::uint64_t> primes() const;

    std::string str() const;
    std::string latex() const;
    std::size_t hash() const;

private:
    std::vector<Term> terms_;  // sorted by radicand
    void add_term(std::uint64_t m, const mpq_class& c);
};

std::vector<std::uint64_t> prime_factors(std::uint64_t m);

}  // namespace rumin
