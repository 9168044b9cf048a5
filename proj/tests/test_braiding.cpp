#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uqsl/braiding.hpp"
#include "uqsl/category.hpp"

using namespace uqsl;

TEST_CASE("quasitriangular and ribbon axioms at p = 2") {
    const BraidReport rep = verify_braiding(2);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.ok, c.name);
    CHECK(rep.all_ok());
}

TEST_CASE("R-matrix shape") {
    const TensorElem r = r_matrix(2);
    CHECK(r.arity() == 2);
    CHECK_FALSE(r.is_zero());
    CHECK_THROWS_AS(r_matrix(3), std::domain_error);
    const TensorElem inv = r_matrix_inverse(2);
    const auto& alg = PBWAlgebra::extended(2);
    CHECK(r * inv == TensorElem::pure({alg.one(), alg.one()}));
}

TEST_CASE("ribbon element value on the trivial module") {
    // E = F = 0, K = 1 gives ((1-i)/(2 sqrt 2)) * 2 zeta_8 = 1
    CHECK(ribbon_scalar(irreducible(2, 1, 1)).is_one());
    // one scalar per irreducible: 1 on X+_1, X-_1 and -+zeta_8 on the Steinberg modules
    CHECK(ribbon_scalar(irreducible(2, -1, 1)).is_one());
    CHECK(ribbon_scalar(irreducible(2, 1, 2)) == CycNum::zeta(8, 1));
    CHECK(ribbon_scalar(irreducible(2, -1, 2)) == -CycNum::zeta(8, 1));
}

TEST_CASE("k-action lifts") {
    const QMod x = irreducible(2, 1, 2);
    const Matrix kp = k_action(x, 1), km = k_action(x, -1);
    CHECK(kp * kp == km * km);
    CHECK(kp != km);
    CHECK(kp.pow(8) == Matrix::identity(2));
}

TEST_CASE("braiding intertwines and is trivial against the unit") {
    const QMod one = irreducible(2, 1, 1);
    for (int a : {1, -1})
        for (int s = 1; s <= 2; ++s) {
            const QMod x = irreducible(2, a, s);
            const Matrix c = braid_action(one, x);
            CHECK(c == Matrix::identity(x.dim()));
            for (int b : {1, -1})
                for (int t = 1; t <= 2; ++t) {
                    const QMod y = irreducible(2, b, t);
                    for (int br : {1, -1}) {
                        const Matrix cxy = braid_action(x, y, br, 1);
                        CHECK(braiding_is_intertwiner(cxy, x, y));
                    }
                }
        }
}

TEST_CASE("monodromy on X+_2 (x) X+_2 commutes with the action") {
    const QMod x = irreducible(2, 1, 2);
    for (int br : {1, -1}) {
        const Matrix c = braid_action(x, x, br, br);
        const Matrix mono = c * c;
        CHECK(braiding_is_intertwiner(mono, x, x));
        CHECK(rank(c) == 4);
    }
}

TEST_CASE("braiding is natural with respect to module maps") {
    const QMod w = build_W2(2, 1, 1), x = irreducible(2, -1, 1);
    const Matrix c_wx = braid_action(w, x), c_xx = braid_action(x, x);
    // f : W -> X+_1 top projection, compare c (f x id) = (id x f) c on W (x) X-_1
    for (const auto& f : hom_space(w, irreducible(2, 1, 1))) {
        const QMod t = irreducible(2, 1, 1);
        const Matrix lhs = braid_action(t, x) * kronecker(f, Matrix::identity(x.dim()));
        const Matrix rhs = kronecker(Matrix::identity(x.dim()), f) * c_wx;
        CHECK(lhs == rhs);
    }
    CHECK(braiding_is_intertwiner(c_xx, x, x));
}
