#include "rumin/lie_algebra.hpp"

#include <cstdint>

#include "rumin/errors.hpp"
#include "rumin/linalg.hpp"

namespace rumin {

namespace {

void axpy(SparseVec& acc, const Scalar& f, const SparseVec& v) {
    if (f.is_zero()) return;
    for (const auto& [k, c] : v) {
        Scalar& slot = acc[k];
        slot += f * c;
        if (slot.is_zero()) acc.erase(k);
    }
}

}  // namespace

StratifiedLieAlgebra StratifiedLieAlgebra::from_structure_constants(const BracketTable& table,
                                                                    std::vector<int> layer_dims,
                                                                    std::vector<std::string> labels) {
    StratifiedLieAlgebra g;
    if (layer_dims.empty()) throw InvalidInput("layer_dims must be non-empty");
    int n = 0;
    for (int m : layer_dims) {
        if (m <= 0) throw InvalidInput("layer dimensions must be positive");
        n += m;
    }
    g.n_ = n;
    g.layer_dims_ = layer_dims;
    for (std::size_t l = 0; l < layer_dims.size(); ++l)
        for (int k = 0; k < layer_dims[l]; ++k) g.weights_.push_back(static_cast<int>(l) + 1);
    if (labels.empty()) {
        for (int i = 0; i < n; ++i) labels.push_back("X" + std::to_string(i + 1));
    }
    if (static_cast<int>(labels.size()) != n) throw DimensionMismatch("DimensionMismatch: label count");
    g.labels_ = std::move(labels);

    int step = static_cast<int>(layer_dims.size());
    for (const auto& [ij, v] : table) {
        auto [i, j] = ij;
        if (i < 0 || j < 0 || i >= n || j >= n) throw InvalidInput("bracket index out of range");
        if (i >= j) throw InvalidInput("only i<j bracket entries may be given");
        SparseVec clean;
        for (const auto& [k, c] : v) {
            if (k < 0 || k >= n) throw InvalidInput("bracket output index out of range");
            if (!c.is_zero()) clean[k] = c;
        }
        if (clean.empty()) continue;
        int w = g.weights_[i] + g.weights_[j];
        for (const auto& [k, c] : clean) {
            if (w > step || g.weights_[k] != w) throw GradingViolation(i + 1, j + 1);
        }
        g.table_[ij] = clean;
    }

    // Jacobi on all basis triples.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                SparseVec acc;
                auto cyc = [&](int a, int b, int c) {
                    for (const auto& [m, f] : g.bracket_basis(a, b)) axpy(acc, f, g.bracket_basis(m, c));
                };
                cyc(i, j, k);
                cyc(j, k, i);
                cyc(k, i, j);
                if (!acc.empty()) throw JacobiViolation(i + 1, j + 1, k + 1);
            }

    // [V_1, V_l] must span V_{l+1}.
    std::vector<int> v1 = g.layer(1);
    for (int l = 1; l < step; ++l) {
        std::vector<int> vl = g.layer(l);
        std::vector<int> next = g.layer(l + 1);
        Matrix span(static_cast<int>(v1.size() * vl.size()), static_cast<int>(next.size()));
        int row = 0;
        for (int a : v1)
            for (int b : vl) {
                SparseVec br = g.bracket_basis(a, b);
                for (std::size_t c = 0; c < next.size(); ++c) {
                    auto it = br.find(next[c]);
                    if (it != br.end()) span(row, static_cast<int>(c)) = it->second;
                }
                ++row;
            }
        if (span.rank() != static_cast<int>(next.size())) throw NotStratified(l + 1);
    }
    return g;
}

int StratifiedLieAlgebra::homogeneous_dimension() const {
    int q = 0;
    for (int w : weights_) q += w;
    return q;
}

std::vector<int> StratifiedLieAlgebra::layer(int l) const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (weights_[i] == l) out.push_back(i);
    return out;
}

SparseVec StratifiedLieAlgebra::bracket_basis(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw DimensionMismatch("DimensionMismatch: basis index");
    if (i == j) return {};
    bool flip = i > j;
    auto it = table_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == table_.end()) return {};
    if (!flip) return it->second;
    SparseVec out;
    for (const auto& [k, c] : it->second) out[k] = -c;
    return out;
}

Scalar StratifiedLieAlgebra::structure_constant(int i, int j, int k) const {
    SparseVec b = bracket_basis(i, j);
    auto it = b.find(k);
    return it == b.end() ? Scalar() : it->second;
}

std::vector<Scalar> StratifiedLieAlgebra::bracket(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
    if (static_cast<int>(a.size()) != n_ || static_cast<int>(b.size()) != n_)
        throw DimensionMismatch("DimensionMismatch: vector length");
    std::vector<Scalar> out(n_);
    for (const auto& [ij, v] : table_) {
        auto [i, j] = ij;
        Scalar f = a[i] * b[j] - a[j] * b[i];
        if (f.is_zero()) continue;
        for (const auto& [k, c] : v) out[k] += f * c;
    }
    return out;
}

StratifiedLieAlgebra cartan_group() {
    BracketTable t;
    t[{0, 1}] = {{2, Scalar(1)}};
    t[{0, 2}] = {{3, Scalar(1)}};
    t[{1, 2}] = {{4, Scalar(1)}};
    return StratifiedLieAlgebra::from_structure_constants(t, {2, 1, 2});
}

bool is_cartan(const StratifiedLieAlgebra& g) { return g == cartan_group(); }

long free_layer_dim(int generators, int degree) {
    auto mobius = [](int e) {
        int r = 1;
        for (int p = 2; p * p <= e; ++p) {
            if (e % p == 0) {
                e /= p;
                if (e % p == 0) return 0;
                r = -r;
            }
        }
        if (e > 1) r = -r;
        return r;
    };
    long long sum = 0;
    for (int e = 1; e <= degree; ++e) {
        if (degree % e != 0) continue;
        long long pw = 1;
        for (int k = 0; k < degree / e; ++k) pw *= generators;
        sum += mobius(e) * pw;
    }
    return static_cast<long>(sum / degree);
}

namespace {

struct HallElement {
    int degree;
    int left;   // -1 for generators
    int right;
};

using Word = std::vector<std::uint8_t>;
using AssocPoly = std::map<Word, mpq_class>;

AssocPoly commutator(const AssocPoly& a, const AssocPoly& b) {
    AssocPoly out;
    auto add = [&](const AssocPoly& x, const AssocPoly& y, int sign) {
        for (const auto& [wx, cx] : x)
            for (const auto& [wy, cy] : y) {
                Word w = wx;
                w.insert(w.end(), wy.begin(), wy.end());
                mpq_class& s = out[w];
                s += sign * cx * cy;
                if (s == 0) out.erase(w);
            }
    };
    add(a, b, 1);
    add(b, a, -1);
    return out;
}

std::vector<HallElement> hall_basis(int m, int step, int max_dim) {
    if (m < 2 || step < 1) throw InvalidInput("free_nilpotent requires m >= 2 and step >= 1");
    long total = 0;
    for (int d = 1; d <= step; ++d) {
        total += free_layer_dim(m, d);
        if (total > max_dim)
            throw ResourceLimit("ResourceLimit: free_nilpotent(" + std::to_string(m) + "," + std::to_string(step) +
                                ") exceeds " + std::to_string(max_dim) + " basis elements");
    }
    std::vector<HallElement> hall;
    for (int i = 0; i < m; ++i) hall.push_back({1, -1, -1});
    for (int d = 2; d <= step; ++d) {
        int existing = static_cast<int>(hall.size());
        for (int u = 0; u < existing; ++u)
            for (int v = u + 1; v < existing; ++v) {
                if (hall[u].degree + hall[v].degree != d) continue;
                if (hall[v].left >= 0 && hall[v].left > u) continue;
                hall.push_back({d, u, v});
            }
    }
    return hall;
}

}  // namespace

std::vector<std::string> hall_words(int generators, int step, int max_dim) {
    auto hall = hall_basis(generators, step, max_dim);
    std::vector<std::string> out;
    for (const auto& h : hall) {
        if (h.left < 0)
            out.push_back("X" + std::to_string(out.size() + 1));
        else
            out.push_back("[" + out[h.left] + "," + out[h.right] + "]");
    }
    return out;
}

StratifiedLieAlgebra free_nilpotent(int generators, int step, int max_dim) {
    auto hall = hall_basis(generators, step, max_dim);
    int n = static_cast<int>(hall.size());
    std::vector<AssocPoly> poly(n);
    for (int i = 0; i < n; ++i) {
        if (hall[i].left < 0)
            poly[i][Word{static_cast<std::uint8_t>(i)}] = 1;
        else
            poly[i] = commutator(poly[hall[i].left], poly[hall[i].right]);
    }
    std::vector<int> layer_dims(step, 0);
    for (const auto& h : hall) layer_dims[h.degree - 1]++;

    BracketTable table;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int d = hall[i].degree + hall[j].degree;
            if (d > step) continue;
            AssocPoly c = commutator(poly[i], poly[j]);
            if (c.empty()) continue;
            std::vector<int> cols;
            for (int k = 0; k < n; ++k)
                if (hall[k].degree == d) cols.push_back(k);
            std::map<Word, int> word_index;
            for (int k : cols)
                for (const auto& [w, q] : poly[k]) word_index.emplace(w, 0);
            for (const auto& [w, q] : c) word_index.emplace(w, 0);
            int r = 0;
            for (auto& [w, idx] : word_index) idx = r++;
            Matrix a(r, static_cast<int>(cols.size()));
            std::vector<Scalar> rhs(r);
            for (std::size_t k = 0; k < cols.size(); ++k)
                for (const auto& [w, q] : poly[cols[k]]) a(word_index[w], static_cast<int>(k)) = Scalar(q);
            for (const auto& [w, q] : c) rhs[word_index[w]] = Scalar(q);
            auto x = a.solve(rhs);
            if (!x) throw Error("internal: Hall decomposition failed");
            SparseVec v;
            for (std::size_t k = 0; k < cols.size(); ++k)
                if (!(*x)[k].is_zero()) v[cols[k]] = (*x)[k];
            table[{i, j}] = v;
        }
    return StratifiedLieAlgebra::from_structure_constants(table, layer_dims);
}

}  // namespace rumin
