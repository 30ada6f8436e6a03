#include "doctest.h"

#include <random>
#include <sstream>
#include <stdexcept>

#include "cliffweil/liealg.hpp"

using namespace cliffweil;

TEST_CASE("builtin tables validate") {
    CHECK(validateAlg(LieAlg::abelian(1)).empty());
    CHECK(validateAlg(LieAlg::abelian(4)).empty());
    CHECK(validateAlg(LieAlg::su2()).empty());
    CHECK(validateAlg(LieAlg::so3()).empty());
    CHECK(validateAlg(LieAlg::son(3)).empty());
    CHECK(validateAlg(LieAlg::son(4)).empty());
    CHECK(validateAlg(LieAlg::son(5)).empty());
    CHECK(LieAlg::son(4).dim() == 6);
}

TEST_CASE("rank-one cyclic table") {
    LieAlg g = LieAlg::su2();
    CHECK(g.structConst(0, 1, 2) == 1);
    CHECK(g.structConst(1, 2, 0) == 1);
    CHECK(g.structConst(2, 0, 1) == 1);
    CHECK(g.structConst(1, 0, 2) == -1);
    CHECK(g.structConst(0, 1, 0) == 0);
    // chosen bases make the three-dimensional rotation table literally identical
    CHECK(LieAlg::so3() == g);
    // and the rotation table in generator order maps over by an explicit permutation
    std::vector<std::vector<Rat>> p = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    CHECK(LieAlg::son(3).changedBasis(p) == LieAlg::so3());
}

TEST_CASE("byName accepts the documented names") {
    CHECK(LieAlg::byName("su2") == LieAlg::su2());
    CHECK(LieAlg::byName("abelian(2)").dim() == 2);
    CHECK(LieAlg::byName("son(4)").dim() == 6);
    CHECK_THROWS_WITH_AS(LieAlg::byName("e8"), "unknown algebra name", std::invalid_argument);
}

TEST_CASE("corrupted tables are reported") {
    LieAlg g = LieAlg::su2();
    g.setStructConstRaw(0, 1, 2, Rat(-1));  // one slot only: antisymmetry breaks
    CHECK_FALSE(validateAlg(g).empty());

    LieAlg h = LieAlg::su2();
    h.setStructConst(0, 1, 2, Rat(-1));  // both slots: Jacobi still holds, invariance breaks
    auto report = validateAlg(h);
    CHECK_FALSE(report.empty());

    // scaled first bracket: Jacobi holds but the declared product is not invariant
    LieAlg s = LieAlg::su2();
    s.setStructConst(0, 1, 2, Rat(2));
    CHECK_FALSE(validateAlg(s).empty());
}

TEST_CASE("ad matrices") {
    LieAlg g = LieAlg::su2();
    GMat ad3 = g.adMatrix({Rat(0), Rat(0), Rat(1)});
    CHECK(ad3.at(0, 1) == GRat(-1L));
    CHECK(ad3.at(1, 0) == GRat(1L));
    CHECK(ad3.at(2, 2) == GRat());
    CHECK(ad3.at(0, 0) == GRat());
    CHECK(LieAlg::abelian(3).adMatrix({Rat(1), Rat(2), Rat(3)}).isZero());
    SeriesMatrix sym = g.adSymbolic(4);
    // entry (k=0, j=1) is -x3: coefficient of X_1 in [x, X_2]
    CHECK(sym.at(0, 1).coefficient({0, 0, 1}) == Scalar::fromInt(-1));
    CHECK(sym.at(1, 0).coefficient({0, 0, 1}) == Scalar::fromInt(1));
    CHECK(sym.at(2, 1).coefficient({1, 0, 0}) == Scalar::fromInt(1));
    // bracket linearity against the matrix
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rat> x = {Rat(coeff(rng)), Rat(coeff(rng)), Rat(coeff(rng))};
        std::vector<Rat> y = {Rat(coeff(rng)), Rat(coeff(rng)), Rat(coeff(rng))};
        std::vector<Rat> br = g.bracket(x, y);
        GMat adx = g.adMatrix(x);
        for (int k = 0; k < 3; ++k) {
            GRat acc;
            for (int j = 0; j < 3; ++j) acc = acc + adx.at(k, j) * GRat(y[j]);
            CHECK(acc == GRat(br[k]));
        }
    }
}

TEST_CASE("adjoint representation is a homomorphism") {
    for (const LieAlg& g : {LieAlg::su2(), LieAlg::son(4)}) {
        Rep ad = adjointRep(g);
        CHECK(validateRep(ad).empty());
    }
    // perturbing one matrix breaks the property
    Rep bad = adjointRep(LieAlg::su2());
    bad.mats[0].at(0, 0) = GRat(1L);
    CHECK_FALSE(validateRep(bad).empty());
}

TEST_CASE("exact irreducibles and their quadratic invariant") {
    // dimension, homomorphism property, and the scalar value of sum R_i^2
    std::vector<Rat> expected = {Rat(0),      Rat(-3, 4), Rat(-2),
                                 Rat(-15, 4), Rat(-6),    Rat(-35, 4)};
    for (int twoJ = 0; twoJ <= 5; ++twoJ) {
        Rep r = su2Irrep(twoJ);
        CHECK(r.matDim == twoJ + 1);
        CHECK(validateRep(r).empty());
        CHECK(su2CasimirEigen(twoJ) == expected[static_cast<size_t>(twoJ)]);
    }
    // frozen 2x2 case: R_3 = diag(-i/2, i/2)
    Rep r1 = su2Irrep(1);
    CHECK(r1.mats[2].at(0, 0) == GRat(Rat(0), Rat(-1, 2)));
    CHECK(r1.mats[2].at(1, 1) == GRat(Rat(0), Rat(1, 2)));
    CHECK(r1.mats[0].at(0, 1) == GRat(Rat(0), Rat(-1, 2)));
    CHECK(r1.mats[0].at(1, 0) == GRat(Rat(0), Rat(-1, 2)));
}

TEST_CASE("orthonormalization with exact square roots") {
    LieAlg g = LieAlg::su2();
    std::vector<std::vector<Rat>> gram = {{Rat(4), Rat(0), Rat(0)},
                                          {Rat(0), Rat(4), Rat(0)},
                                          {Rat(0), Rat(0), Rat(4)}};
    LieAlg h = g.orthonormalized(gram);
    CHECK(h.structConst(0, 1, 2) == Rat(1, 2));
    CHECK(validateAlg(h).empty());

    std::vector<std::vector<Rat>> bad = {{Rat(2), Rat(0), Rat(0)},
                                         {Rat(0), Rat(1), Rat(0)},
                                         {Rat(0), Rat(0), Rat(1)}};
    CHECK_THROWS_WITH_AS(g.orthonormalized(bad), "inner product not rationally orthonormalizable",
                         std::invalid_argument);

    std::vector<std::vector<Rat>> skew = {{Rat(1), Rat(1, 2)}, {Rat(1, 2), Rat(5, 4)}};
    LieAlg a2 = LieAlg::abelian(2).orthonormalized(skew);
    CHECK(validateAlg(a2).empty());
}

TEST_CASE("orthogonal basis rotation fixes the cyclic table") {
    LieAlg g = LieAlg::su2();
    std::vector<std::vector<Rat>> rot = {{Rat(3, 5), Rat(-4, 5), Rat(0)},
                                         {Rat(4, 5), Rat(3, 5), Rat(0)},
                                         {Rat(0), Rat(0), Rat(1)}};
    CHECK(g.changedBasis(rot) == g);
}

TEST_CASE("text format round trip") {
    LieAlg g = LieAlg::su2();
    std::string text = writeLieAlg(g);
    std::istringstream in(text);
    CHECK(parseLieAlg(in) == g);

    std::istringstream custom("# scaled pair\ndim 2\nc 1 2 1 3/2\n");
    LieAlg h = parseLieAlg(custom);
    CHECK(h.dim() == 2);
    CHECK(h.structConst(0, 1, 0) == Rat(3, 2));
    CHECK(h.structConst(1, 0, 0) == Rat(-3, 2));

    std::istringstream conflict("dim 2\nc 1 2 1 1\nc 2 1 1 1\n");
    CHECK_THROWS_AS(parseLieAlg(conflict), std::invalid_argument);
    std::istringstream garbage("dim 2\nq 1 2\n");
    CHECK_THROWS_AS(parseLieAlg(garbage), std::invalid_argument);
    std::istringstream nodim("c 1 2 1 1\n");
    CHECK_THROWS_AS(parseLieAlg(nodim), std::invalid_argument);
}
