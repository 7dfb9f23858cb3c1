#include "rumin/scalar.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>

#include "rumin/detail/expr_parser.hpp"
#include "rumin/errors.hpp"

namespace rumin {

namespace {

std::atomic<int> g_prime_cap{6};

std::string rational_str(const mpq_class& q) { return q.get_str(); }

// Square-free decomposition n = s^2 * r for a positive integer n.
void square_free_split(const mpz_class& n, mpz_class& s, mpz_class& r) {
    s = 1;
    r = 1;
    mpz_class m = n;
    for (unsigned long p = 2; p < 100000 && p * p <= m; ++p) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
        int e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        for (int k = 0; k < e / 2; ++k) s *= p;
        if (e % 2 == 1) r *= p;
    }
    if (m > 1) {
        if (mpz_perfect_square_p(m.get_mpz_t()) != 0) {
            mpz_class root;
            mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
            s *= root;
        } else if (m < mpz_class("10000000000")) {
            r *= m;
        } else {
            throw TowerInsufficient("TowerInsufficient: cannot factor radicand " + n.get_str());
        }
    }
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

Scalar::Scalar(long v) {
    if (v != 0) terms_.emplace_back(1, mpq_class(v));
}

Scalar::Scalar(const mpq_class& q) {
    if (q != 0) terms_.emplace_back(1, q);
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

void Scalar::set_prime_cap(int cap) { g_prime_cap = cap; }
int Scalar::prime_cap() { return g_prime_cap; }

Scalar Scalar::sqrt(const mpq_class& q) {
    if (q < 0) throw InvalidInput("InvalidInput: sqrt of negative " + q.get_str());
    if (q == 0) return Scalar();
    // sqrt(a/b) = sqrt(a*b)/b
    mpz_class ab = q.get_num() * q.get_den();
    mpz_class s, r;
    square_free_split(ab, s, r);
    if (!r.fits_ulong_p()) throw TowerInsufficient("TowerInsufficient: radicand too large");
    std::uint64_t rad = r.get_ui();
    if (static_cast<int>(prime_factors(rad).size()) > g_prime_cap)
        throw TowerInsufficient("TowerInsufficient: sqrt(" + std::to_string(rad) + ") exceeds prime cap");
    mpq_class c(s, q.get_den());
    c.canonicalize();
    Scalar out;
    out.terms_.emplace_back(rad, c);
    return out;
}

Scalar Scalar::sqrt(const Scalar& x) {
    if (!x.is_rational()) throw TowerInsufficient("TowerInsufficient: sqrt of irrational " + x.str());
    return sqrt(x.to_rational());
}

bool Scalar::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1); }

bool Scalar::is_one() const { return terms_.size() == 1 && terms_[0].first == 1 && terms_[0].second == 1; }

mpq_class Scalar::to_rational() const {
    if (terms_.empty()) return 0;
    if (!is_rational()) throw InvalidInput("scalar is not rational: " + str());
    return terms_[0].second;
}

int Scalar::leading_sign() const {
    if (terms_.empty()) return 0;
    return sgn(terms_[0].second);
}

void Scalar::add_term(std::uint64_t m, const mpq_class& c) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, std::uint64_t k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else if (c != 0) {
        terms_.insert(it, Term(m, c));
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& t : o.terms_) add_term(t.first, t.second);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    for (const auto& t : o.terms_) add_term(t.first, -t.second);
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            // sqrt(ma)*sqrt(mb) = g*sqrt((ma/g)*(mb/g)), g = gcd, since both are square-free
            std::uint64_t g = std::gcd(ma, mb);
            std::uint64_t m = (ma / g) * (mb / g);
            r.add_term(m, ca * cb * mpq_class(static_cast<unsigned long>(g)));
        }
    }
    return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }
Scalar& Scalar::operator/=(const Scalar& o) { return *this = *this / o; }

std::vector<std::uint64_t> Scalar::primes() const {
    std::vector<std::uint64_t> out;
    for (const auto& t : terms_) {
        for (auto p : prime_factors(t.first)) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return Scalar(mpq_class(1) / terms_[0].second);
    // Write x = a + b*sqrt(p) with p the largest prime present; a, b avoid p.
    // Then 1/x = (a - b*sqrt(p)) / (a^2 - p*b^2) and the denominator has one
    // prime fewer.
    std::uint64_t p = primes().back();
    Scalar a, b;
    for (const auto& [m, c] : terms_) {
        if (m % p == 0)
            b.add_term(m / p, c);
        else
            a.add_term(m, c);
    }
    Scalar sp;
    sp.terms_.emplace_back(p, mpq_class(1));
    Scalar conj = a - b * sp;
    Scalar norm = a * a - Scalar(mpq_class(static_cast<unsigned long>(p))) * b * b;
    return conj * norm.inverse();
}

namespace {

std::string term_str(std::uint64_t m, const mpq_class& c, bool latex) {
    mpq_class a = abs(c);
    std::string out;
    if (m == 1) {
        if (!latex || a.get_den() == 1) return rational_str(a);
        return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    }
    std::string root = latex ? "\\sqrt{" + std::to_string(m) + "}" : "sqrt(" + std::to_string(m) + ")";
    if (a == 1) return root;
    if (latex) {
        if (a.get_den() == 1) return a.get_num().get_str() + root;
        return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}" + root;
    }
    return rational_str(a) + "*" + root;
}

std::string render(const std::vector<Scalar::Term>& terms, bool latex) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        bool neg = c < 0;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += term_str(m, c, latex);
        first = false;
    }
    return out;
}

struct ScalarHooks {
    Scalar zero() { return Scalar(); }
    Scalar one() { return Scalar(1); }
    Scalar neg(const Scalar& a) { return -a; }
    Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
    Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
    Scalar div(const Scalar& a, const Scalar& b) { return a / b; }
    bool is_scalar(const Scalar&) { return true; }
    Scalar sqrt(const Scalar& a) { return Scalar::sqrt(a); }
    Scalar number(const mpq_class& q) { return Scalar(q); }
    bool has_identifier(const std::string&) { return false; }
    Scalar identifier(const std::string&) { return Scalar(); }
};

}  // namespace

std::string Scalar::str() const { return render(terms_, false); }
std::string Scalar::latex() const { return render(terms_, true); }

std::size_t Scalar::hash() const {
    std::size_t h = 0;
    for (const auto& [m, c] : terms_) {
        h = h * 1000003u ^ std::hash<std::uint64_t>{}(m);
        h = h * 1000003u ^ std::hash<std::string>{}(c.get_str());
    }
    return h;
}

Scalar Scalar::parse(std::string_view text) {
    ScalarHooks hooks;
    return detail::ExprParser<Scalar, ScalarHooks>(text, hooks).parse();
}

}  // namespace rumin
