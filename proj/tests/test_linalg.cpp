#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "uqsl/matrix.hpp"

using namespace uqsl;

namespace {

Matrix random_matrix(std::mt19937& rng, int r, int c, int order, double density = 0.6) {
    std::uniform_int_distribution<int> d(-3, 3);
    std::uniform_real_distribution<double> u(0, 1);
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (u(rng) < density) m(i, j) = CycNum(order, static_cast<long>(d(rng))) + CycNum::zeta(order, d(rng));
    return m;
}

}  // namespace

TEST_CASE("rank-nullity and null vectors") {
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
        const int r = 1 + t % 5, c = 1 + (t * 7) % 6;
        // low-rank products produce nontrivial kernels
        Matrix m = random_matrix(rng, r, 2, 6) * random_matrix(rng, 2, c, 6);
        const Matrix n = nullspace(m);
        CHECK(rank(m) + n.cols() == c);
        CHECK((m * n).is_zero());
        CHECK(rank(n) == n.cols());
    }
}

TEST_CASE("solve and inverse") {
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        Matrix a = random_matrix(rng, 4, 4, 8, 0.9);
        auto inv = inverse(a);
        if (rank(a) == 4) {
            REQUIRE(inv);
            CHECK(a * *inv == Matrix::identity(4));
            CHECK(*inv * a == Matrix::identity(4));
        } else {
            CHECK(!inv);
        }
        Matrix b = random_matrix(rng, 4, 2, 8);
        Matrix rhs = a * b;
        auto x = solve(a, rhs);
        REQUIRE(x);
        CHECK(a * *x == rhs);
    }
    Matrix z(2, 2);
    Matrix one(2, 1);
    one(0, 0) = CycNum(1, 1L);
    CHECK(!solve(z, one));
}

TEST_CASE("left inverse") {
    std::mt19937 rng(11);
    Matrix b = random_matrix(rng, 5, 3, 6, 0.9);
    if (rank(b) == 3) CHECK(left_inverse(b) * b == Matrix::identity(3));
}

TEST_CASE("sparse echelon matches dense elimination") {
    std::mt19937 rng(13);
    for (int t = 0; t < 20; ++t) {
        Matrix m = random_matrix(rng, 6, 3, 4) * random_matrix(rng, 3, 8, 4, 0.4);
        SparseEchelon se(8);
        for (int i = 0; i < m.rows(); ++i) se.add_dense(m.row(i));
        CHECK(se.rank() == rank(m));
        const Matrix n = se.nullspace();
        CHECK(n.cols() == 8 - rank(m));
        CHECK((m * n).is_zero());
        for (int i = 0; i < m.rows(); ++i) {
            SparseRow row;
            for (int j = 0; j < 8; ++j)
                if (!m(i, j).is_zero()) row.emplace_back(j, m(i, j));
            CHECK(se.contains(row));
        }
    }
}

TEST_CASE("kronecker and block helpers") {
    Matrix a = Matrix::identity(2);
    Matrix b(1, 2);
    b(0, 1) = CycNum(1, 3L);
    Matrix k = kronecker(a, b);
    CHECK(k.rows() == 2);
    CHECK(k.cols() == 4);
    CHECK(k(1, 3) == CycNum(1, 3L));
    Matrix d = block_diag({a, b});
    CHECK(d.rows() == 3);
    CHECK(d.cols() == 4);
    CHECK(d(2, 3) == CycNum(1, 3L));
}
