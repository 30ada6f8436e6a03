#include "doctest.h"

#include <random>
#include <stdexcept>

#include "cliffweil/scalar.hpp"

using namespace cliffweil;

namespace {

GRat randomGRat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    Rat re(num(rng), den(rng)), im(num(rng), den(rng));
    re.canonicalize();
    im.canonicalize();
    return GRat(re, im);
}

Scalar randomScalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> expo(-2, 2);
    std::uniform_int_distribution<int> nterms(0, 3);
    Scalar s;
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) s += Scalar::monomial(randomGRat(rng), expo(rng));
    return s;
}

}  // namespace

TEST_CASE("rational square root detection") {
    Rat out;
    CHECK(ratSqrt(Rat(4), out));
    CHECK(out == Rat(2));
    CHECK(ratSqrt(Rat(9, 16), out));
    CHECK(out == Rat(3, 4));
    CHECK(ratSqrt(Rat(0), out));
    CHECK(out == 0);
    CHECK_FALSE(ratSqrt(Rat(2), out));
    CHECK_FALSE(ratSqrt(Rat(1, 3), out));
    CHECK_FALSE(ratSqrt(Rat(-1), out));
}

TEST_CASE("gaussian rational field ops") {
    GRat i = GRat::i();
    CHECK(i * i == GRat(-1L));
    GRat z(Rat(1, 2), Rat(3));
    CHECK(z * z.conj() == GRat(z.normSq()));
    CHECK((z / z) == GRat(1L));
    CHECK_THROWS_AS(z / GRat(), std::domain_error);
    CHECK(GRat(Rat(1), Rat(1)) * GRat(Rat(1), Rat(-1)) == GRat(2L));
}

TEST_CASE("gaussian rational printing") {
    CHECK(GRat(Rat(1, 2), Rat(3)).str() == "1/2+3i");
    CHECK(GRat(Rat(0), Rat(-1)).str() == "-i");
    CHECK(GRat(Rat(0), Rat(3, 2)).str() == "3/2i");
    CHECK(GRat(Rat(-2), Rat(0)).str() == "-2");
    CHECK(GRat().str() == "0");
}

TEST_CASE("formal circle-constant monomial arithmetic") {
    // pi^1 * (2i)pi^-1 = 2i
    Scalar a = Scalar::pi();
    Scalar b = Scalar::monomial(GRat(Rat(0), Rat(2)), -1);
    Scalar p = a * b;
    CHECK(p == Scalar::monomial(GRat(Rat(0), Rat(2)), 0));
    // x + (-x) = 0 structurally
    Scalar x = Scalar::monomial(GRat(Rat(5, 3)), 2);
    CHECK((x + (-x)).isZero());
    // (1/3)pi^2 / (1/3)pi^2 = 1
    Scalar c = Scalar::monomial(GRat(Rat(1, 3)), 2);
    CHECK(c.divByMonomial(c) == Scalar::fromInt(1));
}

TEST_CASE("division restricted to single-term divisors") {
    Scalar multi = Scalar::fromInt(1) + Scalar::pi();
    CHECK_THROWS_WITH_AS(Scalar::fromInt(1).divByMonomial(multi), "non-monomial divisor",
                         std::invalid_argument);
    CHECK_THROWS_AS(Scalar::fromInt(1).divByMonomial(Scalar()), std::invalid_argument);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Scalar s = randomScalar(rng);
        GRat g = randomGRat(rng);
        if (g.isZero()) g = GRat(1L);
        Scalar m = Scalar::monomial(g, trial % 5 - 2);
        CHECK((s * m).divByMonomial(m) == s);
        CHECK(m * m.inverseMonomial() == Scalar::fromInt(1));
    }
}

TEST_CASE("scalar ring axioms on random values") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        Scalar a = randomScalar(rng), b = randomScalar(rng), c = randomScalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).isZero());
    }
}

TEST_CASE("scalar canonical printing") {
    CHECK(Scalar().str() == "0");
    CHECK(Scalar::fromInt(3).str() == "(3)");
    CHECK(Scalar::i().str() == "(i)");
    CHECK(Scalar::pi().str() == "(1)·pi");
    CHECK(Scalar::monomial(GRat(Rat(-1, 2), Rat(1)), -2).str() == "(-1/2+i)·pi^-2");
    Scalar s = Scalar::pi(2) + Scalar::fromInt(1);
    CHECK(s.str() == "(1) + (1)·pi^2");
}
