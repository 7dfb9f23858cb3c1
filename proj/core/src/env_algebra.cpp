#include "rumin/env_algebra.hpp"

#include <algorithm>

#include "rumin/detail/expr_parser.hpp"
#include "rumin/errors.hpp"

namespace rumin {

namespace {

void add_to(Terms& t, const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t.find(m);
    if (it == t.end()) {
        t.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

std::vector<int> word_of(const Monomial& m) {
    std::vector<int> w;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int k = 0; k < m[i]; ++k) w.push_back(static_cast<int>(i));
    return w;
}

}  // namespace

std::shared_ptr<const PbwRing> PbwRing::create(StratifiedLieAlgebra g) {
    std::shared_ptr<PbwRing> r(new PbwRing(std::move(g)));
    r->gen_cache_.resize(r->g_.dim());
    return r;
}

int PbwRing::degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * g_.weight(static_cast<int>(i));
    return d;
}

std::vector<Monomial> PbwRing::monomials_of_degree(int d) const {
    std::vector<Monomial> out;
    int n = dim();
    Monomial cur(n, 0);
    // Enumerate exponent vectors in ascending lexicographic order of (i_1..i_n).
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == n) {
            if (left == 0) out.push_back(cur);
            return;
        }
        int w = g_.weight(i);
        for (int e = 0; e * w <= left; ++e) {
            cur[i] = static_cast<std::uint8_t>(e);
            self(self, i + 1, left - e * w);
        }
        cur[i] = 0;
    };
    if (d >= 0) rec(rec, 0, d);
    return out;
}

const Terms& PbwRing::generator_times(int i, const Monomial& m) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return generator_times_locked(i, m);
}

const Terms& PbwRing::generator_times_locked(int i, const Monomial& m) const {
    auto& cache = gen_cache_[i];
    auto hit = cache.find(m);
    if (hit != cache.end()) return hit->second;

    Terms out;
    int k = 0;
    while (k < static_cast<int>(m.size()) && m[k] == 0) ++k;
    if (k == static_cast<int>(m.size()) || i <= k) {
        Monomial r = m;
        r[i]++;
        out.emplace(std::move(r), Scalar(1));
    } else {
        // X_i X_k R = X_k (X_i R) + [X_i, X_k] R, with every letter of X_i R at least k.
        Monomial rest = m;
        rest[k]--;
        for (const auto& [mono, c] : generator_times_locked(i, rest)) {
            Monomial r = mono;
            r[k]++;
            add_to(out, r, c);
        }
        for (const auto& [p, c] : g_.bracket_basis(i, k))
            for (const auto& [mono, c2] : generator_times_locked(p, rest)) add_to(out, mono, c * c2);
    }
    return cache.emplace(m, std::move(out)).first->second;
}

Terms PbwRing::monomial_product(const Monomial& a, const Monomial& b) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_pair(a, b);
    auto hit = prod_cache_.find(key);
    if (hit != prod_cache_.end()) return hit->second;
    Terms cur;
    cur.emplace(b, Scalar(1));
    std::vector<int> w = word_of(a);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        Terms next;
        for (const auto& [mono, c] : cur)
            for (const auto& [m2, c2] : generator_times_locked(*it, mono)) add_to(next, m2, c * c2);
        cur = std::move(next);
    }
    prod_cache_.emplace(key, cur);
    return cur;
}

const Terms& PbwRing::monomial_adjoint(const Monomial& m) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto hit = adj_cache_.find(m);
    if (hit != adj_cache_.end()) return hit->second;
    std::vector<int> w = word_of(m);
    std::reverse(w.begin(), w.end());
    Terms cur;
    cur.emplace(Monomial(dim(), 0), Scalar(w.size() % 2 == 0 ? 1 : -1));
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        Terms next;
        for (const auto& [mono, c] : cur)
            for (const auto& [m2, c2] : generator_times_locked(*it, mono)) add_to(next, m2, c * c2);
        cur = std::move(next);
    }
    return adj_cache_.emplace(m, std::move(cur)).first->second;
}

EnvElement::EnvElement(RingPtr ring, Terms terms) : ring_(std::move(ring)) {
    for (auto& [m, c] : terms)
        if (!c.is_zero()) terms_.emplace(m, c);
}

EnvElement EnvElement::constant(RingPtr ring, const Scalar& c) {
    Monomial one(ring->dim(), 0);
    EnvElement e(std::move(ring));
    e.add(one, c);
    return e;
}

EnvElement EnvElement::generator(RingPtr ring, int i) {
    if (i < 0 || i >= ring->dim()) throw DimensionMismatch("DimensionMismatch: generator index");
    Monomial m(ring->dim(), 0);
    m[i] = 1;
    return monomial(std::move(ring), std::move(m));
}

EnvElement EnvElement::monomial(RingPtr ring, Monomial m, const Scalar& c) {
    if (static_cast<int>(m.size()) != ring->dim()) throw DimensionMismatch("DimensionMismatch: monomial length");
    EnvElement e(std::move(ring));
    e.add(m, c);
    return e;
}

void EnvElement::add(const Monomial& m, const Scalar& c) { add_to(terms_, m, c); }

bool EnvElement::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](std::uint8_t e) { return e == 0; });
}

Scalar EnvElement::constant_term() const {
    for (const auto& [m, c] : terms_)
        if (std::all_of(m.begin(), m.end(), [](std::uint8_t e) { return e == 0; })) return c;
    return Scalar();
}

EnvElement EnvElement::operator-() const {
    EnvElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

namespace {

const RingPtr& pick_ring(const RingPtr& a, const RingPtr& b) {
    if (a && b && a != b && !(a->algebra() == b->algebra())) throw AlgebraMismatch();
    return a ? a : b;
}

}  // namespace

EnvElement& EnvElement::operator+=(const EnvElement& o) {
    ring_ = pick_ring(ring_, o.ring_);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

EnvElement& EnvElement::operator-=(const EnvElement& o) {
    ring_ = pick_ring(ring_, o.ring_);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

EnvElement& EnvElement::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

EnvElement multiply(const EnvElement& a, const EnvElement& b) {
    RingPtr ring = pick_ring(a.ring_, b.ring_);
    EnvElement out(ring);
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Scalar f = ca * cb;
            for (const auto& [m, c] : ring->monomial_product(ma, mb)) out.add(m, f * c);
        }
    return out;
}

EnvElement operator*(const EnvElement& a, const EnvElement& b) { return multiply(a, b); }

EnvElement normal_form(const RingPtr& ring, const std::vector<int>& word, const Scalar& coefficient) {
    Terms cur;
    cur.emplace(Monomial(ring->dim(), 0), coefficient);
    if (coefficient.is_zero()) return EnvElement(ring);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 0 || *it >= ring->dim()) throw DimensionMismatch("DimensionMismatch: word letter");
        Terms next;
        for (const auto& [mono, c] : cur)
            for (const auto& [m2, c2] : ring->generator_times(*it, mono)) add_to(next, m2, c * c2);
        cur = std::move(next);
    }
    return EnvElement(ring, std::move(cur));
}

Homogeneity homogeneity(const EnvElement& a) {
    if (a.is_zero()) throw ZeroElement();
    std::vector<int> ds;
    for (const auto& [m, c] : a.terms()) ds.push_back(a.ring()->degree(m));
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    Homogeneity h;
    if (ds.size() == 1)
        h.degree = ds[0];
    else
        h.mixed = ds;
    return h;
}

EnvElement formal_adjoint(const EnvElement& a) {
    EnvElement out(a.ring());
    for (const auto& [m, c] : a.terms())
        for (const auto& [m2, c2] : a.ring()->monomial_adjoint(m)) out += EnvElement::monomial(a.ring(), m2, c * c2);
    return out;
}

namespace {

// Printing order: higher degree first, then larger exponent vectors first.
std::vector<std::pair<Monomial, Scalar>> print_order(const EnvElement& a) {
    std::vector<std::pair<Monomial, Scalar>> v(a.terms().begin(), a.terms().end());
    const auto& ring = a.ring();
    std::stable_sort(v.begin(), v.end(), [&](const auto& x, const auto& y) {
        int dx = ring->degree(x.first), dy = ring->degree(y.first);
        if (dx != dy) return dx > dy;
        return x.first > y.first;
    });
    return v;
}

std::string monomial_str(const StratifiedLieAlgebra& g, const Monomial& m, bool latex) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += latex ? " " : "*";
        if (latex) {
            out += "X_{" + std::to_string(i + 1) + "}";
            if (m[i] > 1) out += "^{" + std::to_string(m[i]) + "}";
        } else {
            out += g.label(static_cast<int>(i));
            if (m[i] > 1) out += "^" + std::to_string(m[i]);
        }
    }
    return out;
}

std::string render(const EnvElement& a, bool latex) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : print_order(a)) {
        std::string mono = monomial_str(a.ring()->algebra(), m, latex);
        bool single = c.terms().size() == 1;
        bool neg = single && c.leading_sign() < 0;
        Scalar mag = neg ? -c : c;
        std::string coeff;
        if (mono.empty()) {
            coeff = latex ? mag.latex() : mag.str();
            if (!single) coeff = "(" + coeff + ")";
        } else if (!mag.is_one()) {
            coeff = latex ? mag.latex() : mag.str();
            if (!single) coeff = "(" + coeff + ")";
            coeff += latex ? " " : "*";
        }
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += coeff + mono;
        first = false;
    }
    return out;
}

int parse_index(const std::string& id, char prefix, int n) {
    if (id.size() < 2 || id[0] != prefix) return -1;
    for (std::size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return -1;
    int k = std::stoi(id.substr(1));
    return (k >= 1 && k <= n) ? k - 1 : -1;
}

struct EnvHooks {
    RingPtr ring;
    EnvElement zero() { return EnvElement(ring); }
    EnvElement one() { return EnvElement::constant(ring, 1); }
    EnvElement neg(const EnvElement& a) { return -a; }
    EnvElement add(const EnvElement& a, const EnvElement& b) { return a + b; }
    EnvElement mul(const EnvElement& a, const EnvElement& b) { return a * b; }
    EnvElement div(const EnvElement& a, const EnvElement& b) { return a * b.constant_term().inverse(); }
    bool is_scalar(const EnvElement& a) { return a.is_constant(); }
    EnvElement sqrt(const EnvElement& a) { return EnvElement::constant(ring, Scalar::sqrt(a.constant_term())); }
    EnvElement number(const mpq_class& q) { return EnvElement::constant(ring, Scalar(q)); }
    int index(const std::string& id) {
        const auto& labels = ring->algebra().labels();
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == id) return static_cast<int>(i);
        return parse_index(id, 'X', ring->dim());
    }
    bool has_identifier(const std::string& id) { return index(id) >= 0; }
    EnvElement identifier(const std::string& id) { return EnvElement::generator(ring, index(id)); }
};

struct PolyHooks {
    int n;
    Polynomial zero() { return Polynomial(n); }
    Polynomial one() { return Polynomial::constant(n, 1); }
    Polynomial neg(const Polynomial& a) { return Scalar(-1) * a; }
    Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
    Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }
    Scalar const_of(const Polynomial& a) {
        auto it = a.terms().find(Monomial(n, 0));
        return it == a.terms().end() ? Scalar() : it->second;
    }
    Polynomial div(const Polynomial& a, const Polynomial& b) { return const_of(b).inverse() * a; }
    bool is_scalar(const Polynomial& a) {
        return a.terms().empty() || (a.terms().size() == 1 && a.terms().begin()->first == Monomial(n, 0));
    }
    Polynomial sqrt(const Polynomial& a) { return Polynomial::constant(n, Scalar::sqrt(const_of(a))); }
    Polynomial number(const mpq_class& q) { return Polynomial::constant(n, Scalar(q)); }
    bool has_identifier(const std::string& id) { return parse_index(id, 'x', n) >= 0; }
    Polynomial identifier(const std::string& id) { return Polynomial::variable(n, parse_index(id, 'x', n)); }
};

}  // namespace

std::string EnvElement::str() const { return render(*this, false); }
std::string EnvElement::latex() const { return render(*this, true); }

EnvElement parse_env(const RingPtr& ring, std::string_view text) {
    EnvHooks hooks{ring};
    return detail::ExprParser<EnvElement, EnvHooks>(text, hooks).parse();
}

Polynomial Polynomial::constant(int nvars, const Scalar& c) {
    Polynomial p(nvars);
    p.add(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.add(m, 1);
    return p;
}

void Polynomial::add(const Monomial& m, const Scalar& c) { add_to(terms_, m, c); }

Polynomial Polynomial::derivative(int i) const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        Monomial d = m;
        d[i]--;
        out.add(d, c * Scalar(static_cast<long>(m[i])));
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(std::max(a.nvars_, b.nvars_));
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint8_t>(m[i] + mb[i]);
            out.add(m, ca * cb);
        }
    return out;
}

Polynomial operator*(const Scalar& c, const Polynomial& a) {
    Polynomial out(a.nvars_);
    if (c.is_zero()) return out;
    for (const auto& [m, x] : a.terms_) out.add(m, c * x);
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        bool single = c.terms().size() == 1;
        bool neg = single && c.leading_sign() < 0;
        Scalar mag = neg ? -c : c;
        std::string coeff = single ? mag.str() : "(" + mag.str() + ")";
        if (!mono.empty()) coeff = mag.is_one() ? "" : coeff + "*";
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        out += coeff + mono;
        first = false;
    }
    return out;
}

Polynomial parse_polynomial(int nvars, std::string_view text) {
    PolyHooks hooks{nvars};
    return detail::ExprParser<Polynomial, PolyHooks>(text, hooks).parse();
}

CoordinateRealization cartan_realization() {
    const int n = 5;
    auto x = [&](int i) { return Polynomial::variable(n, i); };
    auto one = Polynomial::constant(n, 1);
    CoordinateRealization r;
    r.fields.assign(n, std::vector<Polynomial>(n, Polynomial(n)));
    r.fields[0][0] = one;
    r.fields[1][1] = one;
    r.fields[1][2] = x(0);
    r.fields[1][3] = Scalar::rational(1, 2) * (x(0) * x(0));
    r.fields[1][4] = x(0) * x(1);
    r.fields[2][2] = one;
    r.fields[2][3] = x(0);
    r.fields[2][4] = x(1);
    r.fields[3][3] = one;
    r.fields[4][4] = one;
    return r;
}

Polynomial apply_field(const CoordinateRealization& r, int i, const Polynomial& p) {
    Polynomial out(p.nvars());
    for (std::size_t m = 0; m < r.fields[i].size(); ++m) {
        if (r.fields[i][m].is_zero()) continue;
        Polynomial d = p.derivative(static_cast<int>(m));
        if (!d.is_zero()) out += r.fields[i][m] * d;
    }
    return out;
}

Polynomial apply_word(const CoordinateRealization& r, const std::vector<int>& word, const Polynomial& p) {
    Polynomial cur = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply_field(r, *it, cur);
    return cur;
}

Polynomial coordinate_apply(const EnvElement& a, const Polynomial& p, const CoordinateRealization* fields) {
    CoordinateRealization builtin;
    if (!fields) {
        if (!a.ring() || !is_cartan(a.ring()->algebra())) throw NoRealization();
        builtin = cartan_realization();
        fields = &builtin;
    }
    if (static_cast<int>(fields->fields.size()) != a.ring()->dim()) throw DimensionMismatch("DimensionMismatch: realization");
    Polynomial out(p.nvars());
    for (const auto& [m, c] : a.terms()) out += c * apply_word(*fields, word_of(m), p);
    return out;
}

}  // namespace rumin
