#include <doctest.h>

#include "rumin/errors.hpp"
#include "rumin/linalg.hpp"

using namespace rumin;

namespace {

Matrix from(std::vector<std::vector<Scalar>> rows) {
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("rref, rank and nullspace") {
    Matrix a = from({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    std::vector<int> piv;
    Matrix r = a.rref(&piv);
    CHECK(piv == std::vector<int>{0, 1});
    CHECK(a.rank() == 2);
    Matrix k = a.nullspace();
    REQUIRE(k.cols() == 1);
    CHECK((a * k).is_zero());
    CHECK(k(2, 0) == Scalar(1));  // standard basis: free variable set to 1
}

TEST_CASE("solve over Q(sqrt 2)") {
    Scalar r2 = Scalar::sqrt(mpq_class(2));
    Matrix a = from({{r2, 1}, {1, r2}});
    auto x = a.solve({Scalar(1), Scalar(0)});
    REQUIRE(x);
    CHECK(a.apply(*x) == std::vector<Scalar>{Scalar(1), Scalar(0)});
    Matrix s = from({{1, 1}, {1, 1}});
    CHECK_FALSE(s.solve({Scalar(1), Scalar(0)}));
    CHECK(s.solve({Scalar(2), Scalar(2)}));
}

TEST_CASE("inverse and pseudoinverse") {
    Matrix a = from({{2, 1}, {1, 1}});
    CHECK(a * a.inverse() == Matrix::identity(2));
    Matrix s = from({{1, 2}, {2, 4}, {0, 0}});
    Matrix p = s.pseudoinverse();
    CHECK(s * p * s == s);
    CHECK(p * s * p == p);
    CHECK((s * p).transpose() == s * p);
    CHECK((p * s).transpose() == p * s);
    CHECK_THROWS(from({{1, 1}, {1, 1}}).inverse());
}

TEST_CASE("Gram-Schmidt gives an orthonormal family") {
    auto q = gram_schmidt({{Scalar(1), Scalar(1), Scalar(0)}, {Scalar(1), Scalar(0), Scalar(1)}});
    REQUIRE(q.size() == 2);
    CHECK(dot(q[0], q[0]) == Scalar(1));
    CHECK(dot(q[1], q[1]) == Scalar(1));
    CHECK(dot(q[0], q[1]).is_zero());
}
