#include "rumin/laplacians.hpp"

#include <cctype>

#include "rumin/errors.hpp"

namespace rumin {

namespace {

void require_cartan(const RuminComplex& c) {
    if (!is_cartan(c.algebra()))
        throw UnsupportedGroup("UnsupportedGroup: Laplacian families are defined for the Cartan group only");
}

OperatorMatrix d_delta(const RuminComplex& c, int h) { return c.dc(h - 1) * c.deltac(h); }
OperatorMatrix delta_d(const RuminComplex& c, int h) { return c.deltac(h + 1) * c.dc(h); }

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::G: return "G";
        case Family::R: return "R";
        case Family::A: return "A";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s.size() == 1) {
        char ch = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        if (ch == 'G') return Family::G;
        if (ch == 'R') return Family::R;
        if (ch == 'A') return Family::A;
    }
    throw InvalidInput("InvalidInput: unknown Laplacian family '" + s + "'");
}

OperatorMatrix a_delta(const RuminComplex& c, int h) {
    require_cartan(c);
    if (h != 2 && h != 3) throw OutOfRange("OutOfRange: A_Delta acts on degrees 2 and 3 only");
    const RingPtr& r = c.ring();
    EnvElement sub = normal_form(r, {0, 0}) + normal_form(r, {1, 1});
    OperatorMatrix m = OperatorMatrix::diagonal(r, c.dim(h), -sub);
    m.name = "A_Delta";
    m.source_degree = h;
    m.claimed_order = 2;
    return m;
}

OperatorMatrix laplacian(const RuminComplex& c, Family f, int h) {
    require_cartan(c);
    if (h < 0 || h > c.n()) throw OutOfRange("OutOfRange: degree " + std::to_string(h));
    OperatorMatrix dd = d_delta(c, h);
    OperatorMatrix ddl = delta_d(c, h);
    OperatorMatrix out;
    switch (f) {
        case Family::G: {
            static const int pw[6][2] = {{0, 6}, {6, 2}, {2, 3}, {3, 2}, {2, 6}, {6, 0}};
            if (h == 0) {
                out = ddl.power(6);
            } else if (h == 5) {
                out = dd.power(6);
            } else {
                out = dd.power(pw[h][0]) + ddl.power(pw[h][1]);
            }
            break;
        }
        case Family::A:
            if (h == 2) {
                out = dd + c.deltac(3) * a_delta(c, 3) * c.dc(2);
                break;
            }
            if (h == 3) {
                out = c.dc(2) * a_delta(c, 2) * c.deltac(3) + ddl;
                break;
            }
            [[fallthrough]];
        case Family::R:
            if (h <= 1) {
                out = dd.power(3) + ddl;
            } else if (h == 2) {
                out = dd.power(2) + ddl.power(3);
            } else if (h == 3) {
                out = dd.power(3) + ddl.power(2);
            } else {
                out = dd + ddl.power(3);
            }
            break;
    }
    out.name = "Delta_" + family_name(f);
    out.source_degree = h;
    out.claimed_order = out.order();
    return out;
}

std::vector<int> expected_orders(Family f) {
    switch (f) {
        case Family::G: return {12, 12, 12, 12, 12, 12};
        case Family::R: return {2, 6, 12, 12, 6, 2};
        case Family::A: return {2, 6, 6, 6, 6, 2};
    }
    return {};
}

AdjointReport verify_self_adjoint(const OperatorMatrix& m) {
    AdjointReport r;
    if (m.rows() != m.cols()) return r;
    r.applicable = true;
    OperatorMatrix t = m.adjoint_transpose();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (t.at(i, j) != m.at(i, j)) r.differing.emplace_back(i, j);
    r.self_adjoint = r.differing.empty();
    return r;
}

OrderReport verify_homogeneous_order(const OperatorMatrix& m, int expected) {
    OrderReport r;
    r.expected = expected;
    r.actual = m.order();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero()) continue;
            Homogeneity hg = homogeneity(m.at(i, j));
            if (hg.is_mixed() || *hg.degree != expected) r.offending.emplace_back(i, j);
        }
    r.passed = r.offending.empty() && r.actual.has_value();
    return r;
}

OperatorMatrix hodge_conjugate(const RuminComplex& c, const OperatorMatrix& m, int h) {
    OperatorMatrix out = c.star_op(h) * m * c.star_op(c.n() - h);
    out.name = m.name;
    out.source_degree = c.n() - h;
    out.claimed_order = m.claimed_order;
    return out;
}

int star_duality_sign(const RuminComplex& c, Family f, int h) {
    OperatorMatrix a = laplacian(c, f, c.n() - h);
    OperatorMatrix b = hodge_conjugate(c, laplacian(c, f, h), h);
    if (a == b) return 1;
    if (a == Scalar(-1) * b) return -1;
    return 0;
}

}  // namespace rumin
