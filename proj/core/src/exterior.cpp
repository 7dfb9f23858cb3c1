#include "rumin/exterior.hpp"

#include <bit>

#include "rumin/errors.hpp"

namespace rumin {

int cov_degree(Covector c) { return std::popcount(c); }

std::vector<int> cov_indices(Covector c) {
    std::vector<int> out;
    while (c) {
        out.push_back(std::countr_zero(c));
        c &= c - 1;
    }
    return out;
}

Covector cov_from_indices(const std::vector<int>& idx) {
    Covector c = 0;
    for (int i : idx) {
        Covector bit = Covector(1) << i;
        if (c & bit) throw InvalidInput("repeated covector index");
        c |= bit;
    }
    return c;
}

int cov_weight(const StratifiedLieAlgebra& g, Covector c) {
    int w = 0;
    for (int i : cov_indices(c)) w += g.weight(i);
    return w;
}

int wedge_sign(Covector a, Covector b) {
    if (a & b) return 0;
    int inv = 0;
    for (int j : cov_indices(b)) {
        Covector above = (j + 1 >= 64) ? 0 : ~((Covector(1) << (j + 1)) - 1);
        inv += std::popcount(a & above);
    }
    return (inv % 2 == 0) ? 1 : -1;
}

std::string cov_str(Covector c) {
    if (c == 0) return "1";
    std::string out;
    for (int i : cov_indices(c)) {
        if (!out.empty()) out += "∧";
        out += "θ" + std::to_string(i + 1);
    }
    return out;
}

bool CovectorLess::operator()(Covector a, Covector b) const {
    while (a && b) {
        int la = std::countr_zero(a), lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

std::vector<Covector> covectors(int n, int h) {
    std::vector<Covector> out;
    if (h < 0 || h > n) return out;
    auto rec = [&](auto&& self, int start, int left, Covector cur) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - left; ++i) self(self, i + 1, left - 1, cur | (Covector(1) << i));
    };
    rec(rec, 0, h, 0);
    return out;
}

std::vector<Covector> covectors(const StratifiedLieAlgebra& g, int h, int weight) {
    std::vector<Covector> out;
    for (Covector c : covectors(g.dim(), h))
        if (cov_weight(g, c) == weight) out.push_back(c);
    return out;
}

Form Form::basis(Covector c, const Scalar& coeff) {
    Form f(cov_degree(c));
    f.add(c, coeff);
    return f;
}

Scalar Form::coeff(Covector c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? Scalar() : it->second;
}

void Form::add(Covector c, const Scalar& s) {
    if (s.is_zero()) return;
    if (cov_degree(c) != degree_) throw DimensionMismatch("DimensionMismatch: form degree");
    auto it = terms_.find(c);
    if (it == terms_.end()) {
        terms_.emplace(c, s);
        return;
    }
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
}

Form& Form::operator+=(const Form& o) {
    if (terms_.empty()) degree_ = o.degree_;
    for (const auto& [c, s] : o.terms_) add(c, s);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    if (terms_.empty()) degree_ = o.degree_;
    for (const auto& [c, s] : o.terms_) add(c, -s);
    return *this;
}

Form operator*(const Scalar& c, const Form& a) {
    Form out(a.degree_);
    if (c.is_zero()) return out;
    for (const auto& [k, s] : a.terms_) out.add(k, c * s);
    return out;
}

std::string Form::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, s] : terms_) {
        bool single = s.terms().size() == 1;
        bool neg = single && s.leading_sign() < 0;
        Scalar mag = neg ? -s : s;
        std::string coeff = mag.is_one() ? "" : (single ? mag.str() : "(" + mag.str() + ")") + " ";
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        out += coeff + cov_str(c);
        first = false;
    }
    return out;
}

OperatorForm OperatorForm::from_form(const RingPtr& ring, const Form& f, int slot, int slots) {
    OperatorForm out(ring, f.degree(), slots);
    for (const auto& [c, s] : f.terms()) out.add(c, slot, EnvElement::constant(ring, s));
    return out;
}

EnvElement OperatorForm::coeff(Covector c, int slot) const {
    auto it = terms_.find({c, slot});
    return it == terms_.end() ? EnvElement(ring_) : it->second;
}

void OperatorForm::add(Covector c, int slot, const EnvElement& u) {
    if (u.is_zero()) return;
    if (cov_degree(c) != degree_) throw DimensionMismatch("DimensionMismatch: operator form degree");
    if (slot < 0 || slot >= slots_) throw DimensionMismatch("DimensionMismatch: slot index");
    if (!ring_) ring_ = u.ring();
    SlotKey key{c, slot};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, u);
        return;
    }
    it->second += u;
    if (it->second.is_zero()) terms_.erase(it);
}

OperatorForm& OperatorForm::operator+=(const OperatorForm& o) {
    if (terms_.empty()) {
        degree_ = o.degree_;
        slots_ = std::max(slots_, o.slots_);
    }
    if (!ring_) ring_ = o.ring_;
    for (const auto& [k, u] : o.terms_) add(k.cov, k.slot, u);
    return *this;
}

OperatorForm& OperatorForm::operator-=(const OperatorForm& o) {
    if (terms_.empty()) {
        degree_ = o.degree_;
        slots_ = std::max(slots_, o.slots_);
    }
    if (!ring_) ring_ = o.ring_;
    for (const auto& [k, u] : o.terms_) add(k.cov, k.slot, -u);
    return *this;
}

OperatorForm operator*(const Scalar& c, const OperatorForm& a) {
    OperatorForm out(a.ring_, a.degree_, a.slots_);
    if (c.is_zero()) return out;
    for (const auto& [k, u] : a.terms_) out.add(k.cov, k.slot, c * u);
    return out;
}

OperatorForm OperatorForm::left_multiply(const EnvElement& u) const {
    OperatorForm out(ring_, degree_, slots_);
    for (const auto& [k, v] : terms_) out.add(k.cov, k.slot, u * v);
    return out;
}

OperatorForm OperatorForm::right_multiply(const EnvElement& u) const {
    OperatorForm out(ring_, degree_, slots_);
    for (const auto& [k, v] : terms_) out.add(k.cov, k.slot, v * u);
    return out;
}

std::string OperatorForm::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, u] : terms_) {
        if (!first) out += " + ";
        out += "(" + u.str() + ")*a" + std::to_string(k.slot + 1) + " " + cov_str(k.cov);
        first = false;
    }
    return out;
}

Form wedge(const Form& a, const Form& b, int n) {
    if (a.degree() + b.degree() > n)
        throw DegreeOverflow("DegreeOverflow: " + std::to_string(a.degree()) + "+" + std::to_string(b.degree()) +
                             " > " + std::to_string(n));
    Form out(a.degree() + b.degree());
    for (const auto& [ca, sa] : a.terms())
        for (const auto& [cb, sb] : b.terms()) {
            int s = wedge_sign(ca, cb);
            if (s != 0) out.add(ca | cb, Scalar(s) * sa * sb);
        }
    return out;
}

OperatorForm wedge_left(Covector c, const OperatorForm& a) {
    OperatorForm out(a.ring(), a.degree() + cov_degree(c), a.slots());
    for (const auto& [k, u] : a.terms()) {
        int s = wedge_sign(c, k.cov);
        if (s != 0) out.add(c | k.cov, k.slot, Scalar(s) * u);
    }
    return out;
}

Scalar inner(const Form& a, const Form& b) {
    Scalar s;
    if (a.degree() != b.degree()) return s;
    for (const auto& [c, x] : a.terms()) {
        Scalar y = b.coeff(c);
        if (!y.is_zero()) s += x * y;
    }
    return s;
}

std::vector<EnvElement> inner(const OperatorForm& a, const Form& f) {
    std::vector<EnvElement> row(a.slots(), EnvElement(a.ring()));
    if (a.degree() != f.degree()) return row;
    for (const auto& [k, u] : a.terms()) {
        Scalar y = f.coeff(k.cov);
        if (!y.is_zero()) row[k.slot] += y * u;
    }
    return row;
}

Covector volume(int n) { return n >= 64 ? ~Covector(0) : (Covector(1) << n) - 1; }

Form hodge_star(const StratifiedLieAlgebra& g, const Form& a) {
    int n = g.dim();
    Form out(n - a.degree());
    Covector vol = volume(n);
    for (const auto& [c, s] : a.terms()) {
        Covector comp = vol & ~c;
        out.add(comp, Scalar(wedge_sign(c, comp)) * s);
    }
    return out;
}

std::map<int, Form> weight_split(const StratifiedLieAlgebra& g, const Form& a) {
    std::map<int, Form> out;
    for (const auto& [c, s] : a.terms()) {
        auto [it, _] = out.try_emplace(cov_weight(g, c), Form(a.degree()));
        it->second.add(c, s);
    }
    return out;
}

std::map<int, OperatorForm> weight_split(const OperatorForm& a) {
    std::map<int, OperatorForm> out;
    for (const auto& [k, u] : a.terms()) {
        auto [it, _] =
            out.try_emplace(cov_weight(a.ring()->algebra(), k.cov), OperatorForm(a.ring(), a.degree(), a.slots()));
        it->second.add(k.cov, k.slot, u);
    }
    return out;
}

namespace {

// d0 of a single covector as (covector, sign-weighted coefficient) pairs.
std::vector<std::pair<Covector, Scalar>> d0_covector(const StratifiedLieAlgebra& g, Covector c) {
    std::vector<std::pair<Covector, Scalar>> out;
    std::vector<int> idx = cov_indices(c);
    for (std::size_t r = 0; r < idx.size(); ++r) {
        int k = idx[r];
        Covector prefix = 0, suffix = 0;
        for (std::size_t t = 0; t < idx.size(); ++t) {
            if (t < r) prefix |= Covector(1) << idx[t];
            if (t > r) suffix |= Covector(1) << idx[t];
        }
        Scalar rsign(r % 2 == 0 ? 1 : -1);
        for (const auto& [ij, v] : g.table()) {
            auto it = v.find(k);
            if (it == v.end()) continue;
            Covector pair = (Covector(1) << ij.first) | (Covector(1) << ij.second);
            int s1 = wedge_sign(prefix, pair);
            if (s1 == 0) continue;
            int s2 = wedge_sign(prefix | pair, suffix);
            if (s2 == 0) continue;
            // d theta_k contributes -c^k_{ij} theta_i ^ theta_j
            out.emplace_back(prefix | pair | suffix, -(rsign * Scalar(s1 * s2) * it->second));
        }
    }
    return out;
}

}  // namespace

Form d0(const StratifiedLieAlgebra& g, const Form& a) {
    Form out(a.degree() + 1);
    for (const auto& [c, s] : a.terms())
        for (const auto& [c2, s2] : d0_covector(g, c)) out.add(c2, s * s2);
    return out;
}

OperatorForm d0(const OperatorForm& a) {
    OperatorForm out(a.ring(), a.degree() + 1, a.slots());
    const auto& g = a.ring()->algebra();
    for (const auto& [k, u] : a.terms())
        for (const auto& [c2, s2] : d0_covector(g, k.cov)) out.add(c2, k.slot, s2 * u);
    return out;
}

Form delta0(const StratifiedLieAlgebra& g, const Form& a) {
    Form out(a.degree() - 1);
    if (a.degree() == 0) return out;
    for (const auto& [c, s] : a.terms()) {
        int w = cov_weight(g, c);
        for (Covector j : covectors(g, a.degree() - 1, w))
            for (const auto& [c2, s2] : d0_covector(g, j))
                if (c2 == c) out.add(j, s * s2);
    }
    return out;
}

OperatorForm d_layer(int l, const OperatorForm& a) {
    const auto& g = a.ring()->algebra();
    if (l < 1 || l > g.step()) throw OutOfRange("OutOfRange: layer " + std::to_string(l));
    OperatorForm out(a.ring(), a.degree() + 1, a.slots());
    for (int m : g.layer(l)) {
        EnvElement xm = EnvElement::generator(a.ring(), m);
        Covector bit = Covector(1) << m;
        for (const auto& [k, u] : a.terms()) {
            int s = wedge_sign(bit, k.cov);
            if (s == 0) continue;
            out.add(bit | k.cov, k.slot, Scalar(s) * (xm * u));
        }
    }
    return out;
}

OperatorForm d_full(const OperatorForm& a) {
    OperatorForm out = d0(a);
    for (int l = 1; l <= a.ring()->algebra().step(); ++l) out += d_layer(l, a);
    return out;
}

}  // namespace rumin
