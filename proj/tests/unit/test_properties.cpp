#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace rumin;
using test::cartan_ring;

namespace {

struct Gen {
    std::mt19937_64 rng{20261014};
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    Scalar scalar() {
        Scalar s = Scalar::rational(uniform(-6, 6), uniform(1, 4));
        if (uniform(0, 2) == 0) s += Scalar(uniform(-2, 2)) * Scalar::sqrt(mpq_class(2));
        return s;
    }
    EnvElement element(const RingPtr& r, int terms = 3, int len = 4) {
        EnvElement e(r);
        for (int t = 0; t < terms; ++t) {
            std::vector<int> w(uniform(0, len));
            for (int& x : w) x = uniform(0, r->dim() - 1);
            e += normal_form(r, w, scalar());
        }
        return e;
    }
    std::vector<Scalar> vec(int n) {
        std::vector<Scalar> v(n);
        for (auto& x : v) x = scalar();
        return v;
    }
    Form form(int n, int h) {
        Form f(h);
        for (Covector c : covectors(n, h))
            if (uniform(0, 1)) f.add(c, scalar());
        return f;
    }
};

const int kTrials = 25;

}  // namespace

TEST_CASE("Jacobi identity on random elements") {
    Gen g;
    for (const auto& alg : {cartan_group(), free_nilpotent(3, 3), free_nilpotent(2, 4)}) {
        int n = alg.dim();
        for (int t = 0; t < kTrials; ++t) {
            auto a = g.vec(n), b = g.vec(n), c = g.vec(n);
            auto j1 = alg.bracket(a, alg.bracket(b, c));
            auto j2 = alg.bracket(b, alg.bracket(c, a));
            auto j3 = alg.bracket(c, alg.bracket(a, b));
            for (int k = 0; k < n; ++k) CHECK((j1[k] + j2[k] + j3[k]).is_zero());
        }
    }
}

TEST_CASE("enveloping algebra: associativity and commutators") {
    Gen g;
    const auto& r = cartan_ring();
    for (int t = 0; t < kTrials; ++t) {
        EnvElement a = g.element(r), b = g.element(r), c = g.element(r);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        auto comm = [](const EnvElement& x, const EnvElement& y) { return x * y - y * x; };
        CHECK((comm(a, comm(b, c)) + comm(b, comm(c, a)) + comm(c, comm(a, b))).is_zero());
    }
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            EnvElement br(r);
            for (const auto& [k, s] : r->algebra().bracket_basis(i, j)) br += s * EnvElement::generator(r, k);
            CHECK(normal_form(r, {i, j}) - normal_form(r, {j, i}) == br);
        }
}

TEST_CASE("formal adjoint is an involutive anti-automorphism") {
    Gen g;
    const auto& r = cartan_ring();
    for (int t = 0; t < kTrials; ++t) {
        EnvElement a = g.element(r), b = g.element(r);
        CHECK(formal_adjoint(formal_adjoint(a)) == a);
        CHECK(formal_adjoint(a * b) == formal_adjoint(b) * formal_adjoint(a));
    }
}

TEST_CASE("d^2 = 0 on random operator forms") {
    Gen g;
    for (const auto& alg : {cartan_group(), free_nilpotent(3, 2)}) {
        auto r = PbwRing::create(alg);
        int n = alg.dim();
        for (int t = 0; t < 8; ++t) {
            int h = g.uniform(0, n - 2);
            OperatorForm a(r, h, 2);
            for (Covector c : covectors(n, h))
                if (g.uniform(0, 2) == 0) a.add(c, g.uniform(0, 1), g.element(r, 2, 2));
            CHECK(d_full(d_full(a)).is_zero());
        }
    }
}

TEST_CASE("Hodge star is an isometry with the involution sign") {
    Gen g;
    const auto& alg = cartan_group();
    for (int t = 0; t < kTrials; ++t) {
        int h = g.uniform(0, 5);
        Form a = g.form(5, h), b = g.form(5, h);
        CHECK(inner(hodge_star(alg, a), hodge_star(alg, b)) == inner(a, b));
        Scalar sign = (h * (5 - h)) % 2 ? Scalar(-1) : Scalar(1);
        CHECK(hodge_star(alg, hodge_star(alg, a)) == sign * a);
    }
}

TEST_CASE("JSON round trips") {
    Gen g;
    const auto& r = cartan_ring();
    for (int t = 0; t < kTrials; ++t) {
        OperatorMatrix m(r, g.uniform(1, 3), g.uniform(1, 3));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = g.element(r);
        CHECK(matrix_from_json(r, nlohmann::json::parse(matrix_to_json(m).dump())) == m);
        int h = g.uniform(0, 5);
        Form f = g.form(5, h);
        CHECK(form_from_json(nlohmann::json::parse(form_to_json(f).dump()), h) == f);
        OperatorForm a(r, h, 2);
        for (Covector c : covectors(5, h))
            if (g.uniform(0, 2) == 0) a.add(c, g.uniform(0, 1), g.element(r, 2, 2));
        CHECK(operator_form_from_json(r, nlohmann::json::parse(operator_form_to_json(a).dump())) == a);
        Scalar s = g.scalar();
        CHECK(scalar_from_json(nlohmann::json(s.str())) == s);
    }
}

TEST_CASE("normal form agrees with the coordinate realization") {
    Gen g;
    const auto& r = cartan_ring();
    CoordinateRealization real = cartan_realization();
    for (int t = 0; t < 300; ++t) {
        std::vector<int> w(g.uniform(1, 6));
        for (int& x : w) x = g.uniform(0, 4);
        Polynomial p(5);
        for (int k = 0; k < 3; ++k) {
            Monomial m(5, 0);
            for (int e = g.uniform(0, 6); e > 0; --e) ++m[g.uniform(0, 4)];
            p.add(m, Scalar(g.uniform(1, 5)));
        }
        CHECK(coordinate_apply(normal_form(r, w), p, &real) == apply_word(real, w, p));
    }
}
