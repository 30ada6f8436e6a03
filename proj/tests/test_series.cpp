#include "doctest.h"

#include <random>
#include <stdexcept>

#include "cliffweil/series.hpp"

using namespace cliffweil;

namespace {

Series randomSeries(std::mt19937& rng, int dim, int order, bool unitConstant) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> pick(0, 2);
    Series s(dim, order);
    // a handful of sparse monomials
    for (int t = 0; t < 6; ++t) {
        std::vector<int> e(dim, 0);
        int deg = pick(rng) + pick(rng);
        for (int d = 0; d < deg; ++d) e[static_cast<size_t>(rng() % dim)] += 1;
        int c = num(rng);
        if (c != 0) s.setCoefficient(e, s.coefficient(e) + Scalar::fromInt(c));
    }
    if (unitConstant) s.setCoefficient(std::vector<int>(dim, 0), Scalar::fromInt(1));
    return s;
}

}  // namespace

TEST_CASE("series ring laws at fixed truncation") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        Series a = randomSeries(rng, 2, 5, false);
        Series b = randomSeries(rng, 2, 5, false);
        Series c = randomSeries(rng, 2, 5, false);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("truncation discards high total degree") {
    Series x = Series::variable(1, 3, 0);
    Series p = x * x * x;
    CHECK(p.coefficient({3}) == Scalar::fromInt(1));
    CHECK((p * x).isZero());
    Series q = x.truncated(2) * x.truncated(2) * x.truncated(2);
    CHECK(q.isZero());
}

TEST_CASE("frozen taylor profiles") {
    // sinh(z/2)/(z/2): 1 + z^2/24 + z^4/1920 + z^6/322560 + z^8/92897280
    auto sh = taylorSinhHalfOverHalf(8);
    CHECK(sh[0] == Rat(1));
    CHECK(sh[1] == 0);
    CHECK(sh[2] == Rat(1, 24));
    CHECK(sh[4] == Rat(1, 1920));
    CHECK(sh[6] == Rat(1, 322560));
    CHECK(sh[8] == Rat(1, 92897280));
    // sin(z/2)/z: constant 1/2, and sin(z)/z pattern at a=1
    auto sn = taylorSinOverId(Rat(1, 2), 8);
    CHECK(sn[0] == Rat(1, 2));
    CHECK(sn[2] == Rat(-1, 48));
    auto sn1 = taylorSinOverId(Rat(1), 6);
    CHECK(sn1[0] == 1);
    CHECK(sn1[2] == Rat(-1, 6));
    CHECK(sn1[4] == Rat(1, 120));
    auto ex = taylorExp(4, -1);
    CHECK(ex[0] == 1);
    CHECK(ex[1] == -1);
    CHECK(ex[2] == Rat(1, 2));
    CHECK(ex[3] == Rat(-1, 6));
}

TEST_CASE("matrix series profile application") {
    // zero matrix: constant term only
    SeriesMatrix z(2, 1, 6);
    SeriesMatrix r = z.applyUnivariate(taylorSinhHalfOverHalf(6));
    CHECK(r.at(0, 0) == Series::one(1, 6));
    CHECK(r.at(0, 1).isZero());
    // 1x1 matrix (x1), exp(-z)
    SeriesMatrix m(1, 1, 4);
    m.at(0, 0) = Series::variable(1, 4, 0);
    SeriesMatrix e = m.applyUnivariate(taylorExp(4, -1));
    CHECK(e.at(0, 0).coefficient({0}) == Scalar::fromInt(1));
    CHECK(e.at(0, 0).coefficient({1}) == Scalar::fromInt(-1));
    CHECK(e.at(0, 0).coefficient({2}) == Scalar::fromRat(Rat(1, 2)));
}

TEST_CASE("rotation-generator determinant and the even square-root profile") {
    // A = x * (rotation generator); det of sinh(A/2)/(A/2) = (sin(x/2)/(x/2))^2
    int order = 8;
    SeriesMatrix a(2, 1, order);
    Series x = Series::variable(1, order, 0);
    a.at(0, 1) = -x;
    a.at(1, 0) = x;
    SeriesMatrix f = a.applyUnivariate(taylorSinhHalfOverHalf(order));
    Series d = f.det();
    CHECK(d.coefficient({0}) == Scalar::fromInt(1));
    CHECK(d.coefficient({2}) == Scalar::fromRat(Rat(-1, 12)));
    CHECK(d.coefficient({4}) == Scalar::fromRat(Rat(1, 360)));
    Series r = seriesSqrt(d);
    // sin(x/2)/(x/2) = 1 - x^2/24 + x^4/1920 - x^6/322560 + x^8/92897280
    CHECK(r.coefficient({0}) == Scalar::fromInt(1));
    CHECK(r.coefficient({2}) == Scalar::fromRat(Rat(-1, 24)));
    CHECK(r.coefficient({4}) == Scalar::fromRat(Rat(1, 1920)));
    CHECK(r.coefficient({6}) == Scalar::fromRat(Rat(-1, 322560)));
    CHECK(r.coefficient({8}) == Scalar::fromRat(Rat(1, 92897280)));
    // exp of the rotation generator has determinant one
    SeriesMatrix rot = a.applyUnivariate(taylorExp(order, -1));
    CHECK(rot.det() == Series::one(1, order));
}

TEST_CASE("square root and inverse round-trips") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        Series s = randomSeries(rng, 2, 4, true);
        Series r = seriesSqrt(s);
        CHECK(r * r == s);
        Series inv = seriesInvert(s);
        CHECK(inv * s == Series::one(2, 4));
    }
    Series bad = Series::constant(1, 3, Scalar::fromInt(2));
    CHECK_THROWS_WITH_AS(seriesSqrt(bad), "sqrt requires unit constant term", std::invalid_argument);
    CHECK_THROWS_WITH_AS(seriesInvert(Series::variable(1, 3, 0)), "zero constant term",
                         std::invalid_argument);
}

TEST_CASE("derivative operator") {
    Series x = Series::variable(2, 5, 0);
    Series y = Series::variable(2, 5, 1);
    Series p = x * x * y + Scalar::fromInt(3) * y;
    Series px = p.derivative(0);
    CHECK(px.coefficient({1, 1}) == Scalar::fromInt(2));
    Series py = p.derivative(1);
    CHECK(py.coefficient({2, 0}) == Scalar::fromInt(1));
    CHECK(py.coefficient({0, 0}) == Scalar::fromInt(3));
}

TEST_CASE("series printing is canonical") {
    Series x = Series::variable(2, 4, 0);
    Series y = Series::variable(2, 4, 1);
    Series p = x * x + Scalar::fromInt(2) * y;
    CHECK(p.str() == "{(2)}·x2 + {(1)}·x1^2");
    CHECK(Series(2, 4).str() == "0");
}
