#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "cliffweil/indexlab.hpp"
#include "doctest.h"

using namespace cliffweil;

namespace {

Series xpow(int k, int order = 8) {
    Series s = Series::one(1, order);
    Series x = Series::variable(1, order, 0);
    for (int i = 0; i < k; ++i) s = s * x;
    return s;
}

// Jet of the weight-m circle character pulled back to the line, built from
// nothing but the explicit derivative value i*m/2 at the origin.
Series charJet(int m, int order) {
    Series s(1, order);
    Rat half(m, 2);
    half.canonicalize();
    GRat d(Rat(0), half);  // first derivative at 0
    GRat pw(1L);
    Rat fact(1);
    for (int k = 0; k <= order; ++k) {
        if (k > 0) {
            pw = pw * d;
            fact = fact * Rat(k);
        }
        GRat c = pw / GRat(fact);
        s.setCoefficient({k}, Scalar::fromGRat(c));
    }
    return s;
}

Scalar twoI() { return Scalar::fromGRat(GRat(Rat(0), Rat(2))); }

}  // namespace

TEST_CASE("weight dictionary reproduces powers against explicit character derivatives") {
    LieAlg t = LieAlg::abelian(1);
    // Explicit low derivatives of the weight-m character at the identity.
    for (int m = -5; m <= 5; ++m) {
        Series jet = charJet(m, 6);
        Rat halfM(m, 2);
        halfM.canonicalize();
        CHECK(jet.coefficient({1}) == Scalar::fromGRat(GRat(Rat(0), halfM)));
        Rat q(-m * m, 4);
        q.canonicalize();
        Rat half(1, 2);
        CHECK(jet.coefficient({2}) == Scalar::fromGRat(GRat(q * half, Rat(0))));
        for (int k = 0; k <= 3; ++k) {
            Dist0 u(t);
            GRat factor(1L);
            for (int i = 0; i < k; ++i) factor = factor * GRat(Rat(0), Rat(-2));
            u.addTerm({k}, Scalar::fromGRat(factor));
            long target = 1;
            for (int i = 0; i < k; ++i) target *= m;
            CHECK(pair0(u, jet) == Scalar::fromInt(target));
        }
    }
}

TEST_CASE("model assembly pins curvature, volume data, and the twist action") {
    for (int w = -2; w <= 2; ++w) {
        HomogModel model = buildModel(w, 12);
        CHECK(model.w == w);
        CHECK(model.curvature == model.sd.mixedLambda().scaled(Scalar::fromInt(2)));
        CHECK(model.fc.n == 2);
        CHECK(model.fc.volume == Scalar::fromInt(4) * Scalar::pi());
        CHECK(model.fc.orientation == -1);
        // twist remainder: nu - quadratic lift is (i w / 2) identity
        GMat gammaMat = model.spin.represent(model.sd.gamma[0]);
        Rat hw(w, 2);
        hw.canonicalize();
        GMat expect = gammaMat + GMat::identity(2).scaled(GRat(Rat(0), hw));
        CHECK(model.nu.mats[0] == expect);
        CHECK(model.jMInv * jIsotropySeries(model.sd.alpha, model.order).s ==
              Series::one(1, model.order));
    }
}

TEST_CASE("euler characteristic pairing is exactly two and tracks orientation") {
    HomogModel model = buildModel(0, 8);
    CHECK(gaussBonnet(model) == Scalar::fromInt(2));
    HomogModel flipped = model;
    flipped.fc.orientation = 1;
    CHECK(gaussBonnet(flipped) == Scalar::fromInt(-2));
}

TEST_CASE("half-block operator squares to the hand-computed diagonal") {
    HomogModel model = buildModel(0, 4);
    Block b = blockDirac(model, 1);
    REQUIRE(b.op.rows() == 4);
    GMat sq = b.op * b.op;
    GMat expect(4, 4);
    expect.at(0, 0) = GRat(1L);
    expect.at(3, 3) = GRat(1L);
    CHECK(sq == expect);
    // trivial block: zero operator on the bare module
    Block b0 = blockDirac(model, 0);
    CHECK(b0.op.rows() == 2);
    CHECK(b0.op.isZero());
}

TEST_CASE("block kernels sit at the derived weights with multiplicity one") {
    for (int w : {-2, 0, 1}) {
        HomogModel model = buildModel(w, 4);
        for (int tj = 0; tj <= 8; ++tj) {
            Block b = blockDirac(model, tj);
            CHECK(checkBlock(model, b).empty());
            REQUIRE(b.kerPlus.size() == 1);
            REQUIRE(b.kerMinus.size() == 1);
            CHECK(b.kerPlus.count(w - 1 - tj) == 1);
            CHECK(b.kerPlus.at(w - 1 - tj) == 1);
            CHECK(b.kerMinus.count(w + 1 + tj) == 1);
            CHECK(b.kerMinus.at(w + 1 + tj) == 1);
        }
    }
}

TEST_CASE("index coefficients inside the window are linear in the weight") {
    for (int w : {-2, 0, 2}) {
        HomogModel model = buildModel(w, 20);
        CharSum cs = distributionalIndex(model, 20);
        CHECK(cs.window == 10);
        CHECK(cs.dropped > 0);
        REQUIRE(cs.coeff.size() == 21);
        for (int m = -10; m <= 10; ++m) {
            REQUIRE(cs.coeff.count(m) == 1);
            CHECK(cs.coeff.at(m) == w - m);
        }
        CHECK(cs.fitOk);
        CHECK(cs.fitResidual == 0.0);
        REQUIRE(cs.q.size() == 2);
        CHECK(cs.q[0] == Rat(w));
        CHECK(cs.q[1] == Rat(-1));
    }
}

TEST_CASE("windowed coefficients are stable under a larger block range") {
    HomogModel model = buildModel(1, 12);
    CharSum small = distributionalIndex(model, 12);
    CharSum large = distributionalIndex(model, 18);
    for (auto& [m, c] : small.coeff) {
        REQUIRE(large.coeff.count(m) == 1);
        CHECK(large.coeff.at(m) == c);
    }
    CHECK(small.q == large.q);
}

TEST_CASE("both pairings agree with the hand table for every twist") {
    for (int w = -2; w <= 2; ++w) {
        HomogModel model = buildModel(w, 20);
        CharSum cs = distributionalIndex(model, 20);
        // hand-derived values: w, 2i, 0, 0 for phi = 1, x, x^2, x^3
        std::vector<Scalar> table = {Scalar::fromInt(w), twoI(), Scalar(), Scalar()};
        for (int d = 0; d <= 3; ++d) {
            Series phi = xpow(d);
            Scalar lhs = lhsExact(cs, phi);
            Scalar rhs = rhsExact(model, phi);
            CHECK(lhs == table[static_cast<size_t>(d)]);
            CHECK(rhs == table[static_cast<size_t>(d)]);
        }
        std::vector<Series> phis = {xpow(0), xpow(1), xpow(2), xpow(3)};
        auto cases = theoremCheck(model, phis);
        REQUIRE(cases.size() == 4);
        for (auto& c : cases) CHECK(c.equal);
    }
}

TEST_CASE("pairing requires an identified point-supported distribution") {
    CharSum bad;
    bad.fitOk = false;
    CHECK_THROWS_WITH_AS(lhsExact(bad, xpow(1)),
                         "cannot identify point-supported distribution",
                         std::invalid_argument);
}

TEST_CASE("flipping the grading negates the index and breaks the equality") {
    HomogModel model = buildModel(1, 12, 8, ModelOptions{true});
    Block b = blockDirac(model, 3);
    CHECK(checkBlock(model, b).empty());
    CHECK(b.kerPlus.count(1 + 1 + 3) == 1);
    CHECK(b.kerMinus.count(1 - 1 - 3) == 1);
    CharSum cs = distributionalIndex(model, 12);
    REQUIRE(cs.fitOk);
    REQUIRE(cs.q.size() == 2);
    CHECK(cs.q[0] == Rat(-1));
    CHECK(cs.q[1] == Rat(1));
    auto cases = theoremCheck(model, {xpow(0), xpow(1)});
    REQUIRE(cases.size() == 2);
    CHECK_FALSE(cases[0].equal);
    CHECK(cases[0].lhs == Scalar::fromInt(-1));
    CHECK(cases[0].rhs == Scalar::fromInt(1));
    CHECK_FALSE(cases[1].equal);
}

TEST_CASE("heat values match the closed exponential form") {
    HomogModel model = buildModel(0, 8);
    for (int m = -4; m <= 4; ++m) {
        for (double t : {0.4, 0.1, 0.05}) {
            std::complex<double> v = heatTrace(model, t, m, 40);
            double expect = -m * std::exp(-t * (m * m - 1) / 4.0);
            CHECK(std::abs(v.real() - expect) < 1e-9);
            CHECK(std::abs(v.imag()) < 1e-9);
        }
    }
    // twisted variant shifts the decay rate to the relative weight
    HomogModel twisted = buildModel(2, 8);
    for (int m : {-1, 0, 3}) {
        double s = m - 2;
        double expect = (2 - m) * std::exp(-0.1 * (s * s - 1) / 4.0);
        std::complex<double> v = heatTrace(twisted, 0.1, m, 40);
        CHECK(std::abs(v.real() - expect) < 1e-9);
    }
}

TEST_CASE("spectral sum is already exact past the kernel block") {
    HomogModel model = buildModel(0, 8);
    std::complex<double> small = heatTrace(model, 0.2, 3, 2);
    std::complex<double> large = heatTrace(model, 0.2, 3, 40);
    CHECK(std::abs(small - large) < 1e-11);
}

TEST_CASE("small-time extrapolation recovers the index coefficient") {
    HomogModel model = buildModel(0, 8);
    CharSum cs = distributionalIndex(model, 20);
    std::vector<double> grid = {0.4, 0.2, 0.1, 0.05};
    for (int m = -4; m <= 4; ++m) {
        HeatCheck hc = heatCheck(model, cs, m, 40, grid, 1e-3);
        CHECK(hc.target == static_cast<double>(-m));
        REQUIRE(hc.raw.size() == 4);
        CHECK(hc.pass);
        CHECK_FALSE(hc.flagged);
        if (m != 0) {
            CHECK(std::abs(hc.expModel - hc.target) < 1e-6 * std::abs(hc.target));
            double rate = (m * m - 1) / 4.0;
            CHECK(std::abs(hc.rate - rate) < 1e-6);
            CHECK(std::abs(hc.neville - hc.target) < 0.05);
        }
    }
}

TEST_CASE("coarse spectral truncation flags without failing") {
    HomogModel model = buildModel(0, 8);
    CharSum cs = distributionalIndex(model, 20);
    HeatCheck hc = heatCheck(model, cs, 4, 4, {0.4, 0.2, 0.1, 0.05}, 1e-3);
    CHECK(hc.pass);
    CHECK(hc.flagged);
    CHECK(hc.tailEstimate > 1e-3);
}
