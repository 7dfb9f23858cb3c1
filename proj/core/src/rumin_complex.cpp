#include "rumin/rumin_complex.hpp"

#include <set>

#include "rumin/errors.hpp"

namespace rumin {

namespace {

std::set<int> weights_in_degree(const StratifiedLieAlgebra& g, int h) {
    std::set<int> ws;
    for (Covector c : covectors(g.dim(), h)) ws.insert(cov_weight(g, c));
    return ws;
}

int index_of(const std::vector<Covector>& v, Covector c) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] == c) return static_cast<int>(i);
    return -1;
}

}  // namespace

RuminComplex::RuminComplex(RingPtr ring) : ring_(std::move(ring)) {
    const auto& g = algebra();
    int n = g.dim();
    if (n > 20) throw ResourceLimit("ResourceLimit: exterior algebra of dimension " + std::to_string(n));
    bases_.resize(n + 1);
    for (int h = 0; h <= n; ++h) {
        RuminBasis& b = bases_[h];
        b.degree = h;
        for (int w : weights_in_degree(g, h)) {
            std::vector<Covector> cols = covectors(g, h, w);
            Matrix a = d0_block(h, w);
            Matrix stacked(a.rows(), static_cast<int>(cols.size()));
            for (int i = 0; i < a.rows(); ++i)
                for (int j = 0; j < a.cols(); ++j) stacked(i, j) = a(i, j);
            if (h >= 1) {
                // delta0 on this block is the transpose of d0 from degree h-1.
                Matrix bt = d0_block(h - 1, w).transpose();
                Matrix both(stacked.rows() + bt.rows(), stacked.cols());
                for (int i = 0; i < stacked.rows(); ++i)
                    for (int j = 0; j < stacked.cols(); ++j) both(i, j) = stacked(i, j);
                for (int i = 0; i < bt.rows(); ++i)
                    for (int j = 0; j < bt.cols(); ++j) both(stacked.rows() + i, j) = bt(i, j);
                stacked = both;
            }
            Matrix null = stacked.nullspace();
            std::vector<std::vector<Scalar>> vs;
            for (int k = 0; k < null.cols(); ++k) vs.push_back(null.column(k));
            for (const auto& v : gram_schmidt(vs)) {
                Form f(h);
                for (std::size_t i = 0; i < cols.size(); ++i) f.add(cols[i], v[i]);
                b.by_weight[w].push_back(b.size());
                b.elements.push_back(f);
                b.weights.push_back(w);
            }
        }
    }
    for (int h = 0; h < n; ++h)
        for (int w : weights_in_degree(g, h)) pinv_[{h, w}] = d0_block(h, w).pseudoinverse();
}

int RuminComplex::dim(int h) const {
    if (h < 0 || h > n()) return 0;
    return bases_[h].size();
}

std::vector<int> RuminComplex::dims() const {
    std::vector<int> d;
    for (int h = 0; h <= n(); ++h) d.push_back(dim(h));
    return d;
}

int RuminComplex::max_weight(int h) const {
    auto ws = weights_in_degree(algebra(), h);
    return ws.empty() ? 0 : *ws.rbegin();
}

Matrix RuminComplex::d0_block(int h, int w) const {
    const auto& g = algebra();
    std::vector<Covector> cols = covectors(g, h, w);
    std::vector<Covector> rows = covectors(g, h + 1, w);
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        Form img = d0(g, Form::basis(cols[j]));
        for (const auto& [c, s] : img.terms()) {
            int i = index_of(rows, c);
            if (i < 0) throw Error("internal: d0 changed the weight");
            m(i, static_cast<int>(j)) = s;
        }
    }
    return m;
}

Form RuminComplex::d0_pinv(const Form& beta) const {
    const auto& g = algebra();
    int h = beta.degree() - 1;
    Form out(std::max(h, 0));
    if (h < 0) return out;
    for (const auto& [w, part] : weight_split(g, beta)) {
        auto found = pinv_.find({h, w});
        if (found == pinv_.end()) continue;
        const Matrix& p = found->second;
        std::vector<Covector> src = covectors(g, h + 1, w);
        std::vector<Covector> dst = covectors(g, h, w);
        std::vector<Scalar> v(src.size());
        for (std::size_t i = 0; i < src.size(); ++i) v[i] = part.coeff(src[i]);
        std::vector<Scalar> r = p.apply(v);
        for (std::size_t i = 0; i < dst.size(); ++i) out.add(dst[i], r[i]);
    }
    return out;
}

OperatorForm RuminComplex::d0_pinv(const OperatorForm& beta) const {
    const auto& g = algebra();
    int h = beta.degree() - 1;
    OperatorForm out(ring_, std::max(h, 0), beta.slots());
    if (h < 0) return out;
    for (const auto& [w, part] : weight_split(beta)) {
        auto found = pinv_.find({h, w});
        if (found == pinv_.end()) continue;
        const Matrix& p = found->second;
        std::vector<Covector> src = covectors(g, h + 1, w);
        std::vector<Covector> dst = covectors(g, h, w);
        for (const auto& [k, u] : part.terms()) {
            int j = index_of(src, k.cov);
            for (std::size_t i = 0; i < dst.size(); ++i) {
                const Scalar& f = p(static_cast<int>(i), j);
                if (!f.is_zero()) out.add(dst[i], k.slot, f * u);
            }
        }
    }
    return out;
}

OperatorForm RuminComplex::pi_E(const OperatorForm& a) const {
    const auto& g = algebra();
    int h = a.degree();
    int top = max_weight(h);
    OperatorForm result(ring_, h, a.slots());
    for (const auto& [p, comp] : weight_split(a)) {
        // (Pi_E a)_{p+k+1} = -d0^{-1}( sum_{l=1}^{k+1} d_l (Pi_E a)_{p+k+1-l} )
        std::map<int, OperatorForm> layers;
        layers.emplace(p, comp);
        for (int w = p + 1; w <= top; ++w) {
            OperatorForm sum(ring_, h + 1, a.slots());
            for (int l = 1; l <= std::min(w - p, g.step()); ++l) {
                auto it = layers.find(w - l);
                if (it != layers.end()) sum += d_layer(l, it->second);
            }
            if (sum.is_zero()) continue;
            OperatorForm next = d0_pinv(sum);
            if (!next.is_zero()) layers.emplace(w, Scalar(-1) * next);
        }
        for (const auto& [w, f] : layers) result += f;
    }
    return result;
}

std::vector<Scalar> RuminComplex::pi_E0(const Form& a) const {
    const RuminBasis& b = basis(a.degree());
    std::vector<Scalar> out;
    for (const auto& xi : b.elements) out.push_back(inner(a, xi));
    return out;
}

std::vector<std::vector<EnvElement>> RuminComplex::pi_E0(const OperatorForm& a) const {
    std::vector<std::vector<EnvElement>> out;
    if (a.degree() < 0 || a.degree() > n()) return out;
    for (const auto& xi : basis(a.degree()).elements) out.push_back(inner(a, xi));
    return out;
}

OperatorForm RuminComplex::symbolic(int h, int j) const {
    return OperatorForm::from_form(ring_, basis(h).elements.at(j), 0, 1);
}

OperatorForm RuminComplex::symbolic_all(int h) const {
    int d = dim(h);
    OperatorForm out(ring_, h, std::max(d, 1));
    for (int j = 0; j < d; ++j) out += OperatorForm::from_form(ring_, basis(h).elements[j], j, std::max(d, 1));
    return out;
}

OperatorForm RuminComplex::embed(int h, const std::vector<EnvElement>& coords) const {
    OperatorForm out(ring_, h, 1);
    const RuminBasis& b = basis(h);
    if (static_cast<int>(coords.size()) != b.size()) throw DimensionMismatch("DimensionMismatch: embed");
    for (int i = 0; i < b.size(); ++i) {
        if (coords[i].is_zero()) continue;
        for (const auto& [c, s] : b.elements[i].terms()) out.add(c, 0, s * coords[i]);
    }
    return out;
}

const OperatorMatrix& RuminComplex::dc(int h) const {
    if (h < -1 || h > n()) throw OutOfRange("OutOfRange: degree " + std::to_string(h));
    std::lock_guard<std::mutex> lock(mu_);
    auto hit = dc_cache_.find(h);
    if (hit != dc_cache_.end()) return hit->second;
    OperatorMatrix m(ring_, dim(h + 1), dim(h));
    if (h >= 0 && h < n()) {
        const RuminBasis& target = basis(h + 1);
        for (int j = 0; j < dim(h); ++j) {
            OperatorForm img = d_full(pi_E(symbolic(h, j)));
            for (int i = 0; i < target.size(); ++i) m.at(i, j) = inner(img, target.elements[i])[0];
        }
    }
    m.name = "dc";
    m.source_degree = h;
    m.claimed_order = m.order();
    return dc_cache_.emplace(h, std::move(m)).first->second;
}

Matrix RuminComplex::star(int h) const {
    const auto& g = algebra();
    const RuminBasis& src = basis(h);
    const RuminBasis& dst = basis(n() - h);
    Matrix m(dst.size(), src.size());
    for (int j = 0; j < src.size(); ++j) {
        Form s = hodge_star(g, src.elements[j]);
        for (int i = 0; i < dst.size(); ++i) m(i, j) = inner(s, dst.elements[i]);
    }
    return m;
}

OperatorMatrix RuminComplex::star_op(int h) const { return OperatorMatrix::from_scalars(ring_, star(h)); }

bool RuminComplex::star_closed(int h) const {
    const auto& g = algebra();
    Matrix m = star(h);
    const RuminBasis& src = basis(h);
    const RuminBasis& dst = basis(n() - h);
    for (int j = 0; j < src.size(); ++j) {
        Form s = hodge_star(g, src.elements[j]);
        Form rebuilt(n() - h);
        for (int i = 0; i < dst.size(); ++i) rebuilt += m(i, j) * dst.elements[i];
        if (!(rebuilt == s)) return false;
    }
    return true;
}

OperatorMatrix RuminComplex::deltac(int h) const {
    int nn = n();
    OperatorMatrix out(ring_, dim(h - 1), dim(h));
    if (h >= 1 && h <= nn) {
        int e = nn * (h + 1) + 1;
        Scalar sign(e % 2 == 0 ? 1 : -1);
        out = sign * (star_op(nn - h + 1) * dc(nn - h) * star_op(h));
    }
    out.name = "deltac";
    out.source_degree = h;
    out.claimed_order = out.order();
    return out;
}

OperatorMatrix RuminComplex::deltac_adjoint(int h) const {
    OperatorMatrix out = dc(h - 1).adjoint_transpose();
    out.name = "deltac";
    out.source_degree = h;
    out.claimed_order = out.order();
    return out;
}

std::vector<Form> cartan_reference_basis(int h) {
    auto f = [](std::vector<int> idx) { return Form::basis(cov_from_indices(idx)); };
    Scalar r = Scalar(1) / Scalar::sqrt(mpq_class(2));
    switch (h) {
        case 0: return {f({})};
        case 1: return {f({0}), f({1})};
        case 2: return {f({0, 3}), r * (f({1, 3}) + f({0, 4})), f({1, 4})};
        case 3: return {f({0, 2, 3}), r * (f({0, 2, 4}) + f({1, 2, 3})), f({1, 2, 4})};
        case 4: return {f({0, 2, 3, 4}), f({1, 2, 3, 4})};
        case 5: return {f({0, 1, 2, 3, 4})};
        default: throw OutOfRange("OutOfRange: degree " + std::to_string(h));
    }
}

Matrix align_basis(const RuminBasis& computed, const std::vector<Form>& expected) {
    int k = computed.size();
    if (static_cast<int>(expected.size()) != k)
        throw SpanMismatch("SpanMismatch: " + std::to_string(expected.size()) + " expected forms vs " +
                           std::to_string(k) + " basis elements");
    Matrix t(k, k);
    for (int j = 0; j < k; ++j) {
        Form rebuilt(computed.degree);
        for (int i = 0; i < k; ++i) {
            t(i, j) = inner(computed.elements[i], expected[j]);
            rebuilt += t(i, j) * computed.elements[i];
        }
        if (!(rebuilt == expected[j])) throw SpanMismatch("SpanMismatch: expected form " + std::to_string(j + 1) +
                                                          " (" + expected[j].str() + ") is not in the span");
    }
    if (!(t.transpose() * t == Matrix::identity(k))) throw SpanMismatch("SpanMismatch: change of basis not orthogonal");
    return t;
}

OperatorMatrix change_basis(const OperatorMatrix& m, const Matrix& t_source, const Matrix& t_target) {
    const RingPtr& r = m.ring();
    OperatorMatrix out =
        OperatorMatrix::from_scalars(r, t_target.transpose()) * m * OperatorMatrix::from_scalars(r, t_source);
    out.name = m.name;
    out.source_degree = m.source_degree;
    out.claimed_order = m.claimed_order;
    return out;
}

std::vector<CheckResult> verify_complex(const RuminComplex& c) {
    std::vector<CheckResult> out;
    int n = c.n();
    for (int h = 0; h < n; ++h) {
        OperatorMatrix sq = c.dc(h + 1) * c.dc(h);
        out.push_back({"dc_squared_zero", h, sq.is_zero(), sq.is_zero() ? "" : sq.str()});
    }
    for (int h = 0; h < n; ++h) {
        bool chain = true, proj = true, closed = true;
        std::string detail;
        const OperatorMatrix& d = c.dc(h);
        for (int j = 0; j < c.dim(h); ++j) {
            OperatorForm pe = c.pi_E(c.symbolic(h, j));
            OperatorForm lhs = d_full(pe);
            std::vector<EnvElement> col;
            for (int i = 0; i < d.rows(); ++i) col.push_back(d.at(i, j));
            OperatorForm rhs = c.pi_E(c.embed(h + 1, col));
            if (!(lhs == rhs)) {
                chain = false;
                detail += "chain map fails on xi_" + std::to_string(j + 1) + "; ";
            }
            std::vector<EnvElement> coords;
            for (const auto& r : c.pi_E0(pe)) coords.push_back(r[0]);
            if (!(c.pi_E(c.embed(h, coords)) == pe)) {
                proj = false;
                detail += "projection identity fails on xi_" + std::to_string(j + 1) + "; ";
            }
            std::vector<EnvElement> dcoords;
            for (const auto& r : c.pi_E0(lhs)) dcoords.push_back(r[0]);
            if (!(c.pi_E(c.embed(h + 1, dcoords)) == lhs)) {
                closed = false;
                detail += "Pi_E Pi_E0 d Pi_E fails on xi_" + std::to_string(j + 1) + "; ";
            }
        }
        out.push_back({"chain_map", h, chain, chain ? "" : detail});
        out.push_back({"projection_identity", h, proj && closed, proj && closed ? "" : detail});
    }
    for (int h = 0; h < n; ++h) {
        const OperatorMatrix& d = c.dc(h);
        bool ok = true;
        std::string detail;
        for (int i = 0; i < d.rows(); ++i)
            for (int j = 0; j < d.cols(); ++j) {
                if (d.at(i, j).is_zero()) continue;
                int want = c.basis(h + 1).weights[i] - c.basis(h).weights[j];
                Homogeneity hg = homogeneity(d.at(i, j));
                if (hg.is_mixed() || *hg.degree != want || want < 1) {
                    ok = false;
                    detail += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") ";
                }
            }
        out.push_back({"block_homogeneity", h, ok, detail});
    }
    if (is_cartan(c.algebra())) {
        const std::vector<int> expected{1, 3, 2, 3, 1};
        std::string got;
        bool ok = true;
        for (int h = 0; h < n; ++h) {
            auto o = c.dc(h).order();
            got += (h ? "," : "") + (o ? std::to_string(*o) : std::string("?"));
            if (!o || *o != expected[h]) ok = false;
        }
        out.push_back({"dc_order_table", -1, ok, got});
    }
    for (int h = 0; h <= n; ++h) out.push_back({"star_closed", h, c.star_closed(h), ""});
    return out;
}

StarAdjointReport deltac_consistency(const RuminComplex& c, int h) {
    StarAdjointReport r;
    r.degree = h;
    OperatorMatrix a = c.deltac(h);
    OperatorMatrix b = c.deltac_adjoint(h);
    if (a == b) {
        r.sign = 1;
    } else if (a == Scalar(-1) * b) {
        r.sign = -1;
    } else {
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                if (a.at(i, j) != b.at(i, j)) r.differing.emplace_back(i, j);
    }
    return r;
}

}  // namespace rumin
