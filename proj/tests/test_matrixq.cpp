#include <doctest.h>

#include "cva/matrixq.hpp"
#include "test_util.hpp"

using namespace cva;
using namespace cva::testutil;

TEST_CASE("matrix arithmetic") {
    RationalMatrix a = rm({{1, 2}, {3, 4}});
    RationalMatrix b = rm({{0, 1}, {1, 0}});
    CHECK(a * b == rm({{2, 1}, {4, 3}}));
    CHECK(b * a == rm({{3, 4}, {1, 2}}));
    CHECK(a + b - b == a);
    CHECK(a.transpose().transpose() == a);
    CHECK(a.pow(2) == a * a);
    CHECK(commutator(a, b) == a * b - b * a);
}

TEST_CASE("permutation matrix convention: 1 of row i in column pi(i)") {
    RationalMatrix p = RationalMatrix::permutation({2, 3, 1});
    CHECK(p.at(0, 1) == Rational(1));
    CHECK(p.at(1, 2) == Rational(1));
    CHECK(p.at(2, 0) == Rational(1));
    RationalMatrix pinv = RationalMatrix::permutation({3, 1, 2});
    CHECK(p * pinv == RationalMatrix::identity(3));
}

TEST_CASE("inverse") {
    RationalMatrix u = rm({{1, 5}, {0, 1}});
    CHECK(u * u.inverse() == RationalMatrix::identity(2));
    RationalMatrix a = rm({{2, 1}, {7, 4}});
    CHECK(a.inverse() * a == RationalMatrix::identity(2));
    CHECK_THROWS_AS(rm({{1, 2}, {2, 4}}).inverse(), std::invalid_argument);
}

TEST_CASE("rank via fraction-free elimination") {
    CHECK(rm({{1, 2}, {2, 4}}).rank() == 1);
    CHECK(rm({{1, 2}, {3, 4}}).rank() == 2);
    CHECK(RationalMatrix(3, 3).rank() == 0);
    CHECK(rm({{1, 1, 1}, {1, 2, 4}, {1, 3, 9}}).rank() == 3); // Vandermonde

    RationalMatrix q(2, 3);
    q.at(0, 0) = Rational(1, 2);
    q.at(0, 1) = Rational(1, 3);
    q.at(0, 2) = Rational(1, 6);
    q.at(1, 0) = Rational(3, 2);
    q.at(1, 1) = Rational(1);
    q.at(1, 2) = Rational(1, 2);
    CHECK(q.rank() == 1);
}

TEST_CASE("shape predicates") {
    CHECK(rm({{1, 7}, {0, 1}}).is_upper_unipotent());
    CHECK(!rm({{1, 0}, {7, 1}}).is_upper_unipotent());
    CHECK(rm({{2, 0}, {0, 3}}).is_diagonal());
    CHECK(RationalMatrix(2, 2).is_zero());
    CHECK(rm({{1, 2}, {0, 3}}).is_upper_triangular());
    CHECK(!rm({{1, 0}, {2, 3}}).is_upper_triangular());
    CHECK(rm({{5, 0}, {0, 9}}).diagonal_entries() == qvec({5, 9}));
}
