#include "doctest.h"

#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "cliffweil/gaussmoment.hpp"

using namespace cliffweil;

namespace {

// Independent reference: double factorial by an explicit loop.
Rat doubleFactorial(int m) {
    Rat r(1);
    for (int j = m; j >= 1; j -= 2) r *= j;
    return r;
}

// Independent reference expansion: enumerate ordered index tuples for each
// power of the linear form instead of convolving polynomial maps.
std::vector<Multivector> naiveExpansion(const Series& phi, const SpinData& sd, int K) {
    int d = sd.algebra.dim(), n = sd.n;
    std::map<std::vector<int>, Multivector> integrand;
    std::vector<std::vector<int>> tuples = {{}};
    Rat fact(1);
    for (int k = 0; 2 * k <= n; ++k) {
        if (k > 0) {
            fact *= k;
            std::vector<std::vector<int>> next;
            for (const auto& t : tuples)
                for (int i = 0; i < d; ++i) {
                    auto t2 = t;
                    t2.push_back(i);
                    next.push_back(t2);
                }
            tuples = next;
        }
        Rat sign = (k % 2) ? Rat(-1) : Rat(1);
        for (const auto& t : tuples) {
            Multivector w = Multivector::unit(n);
            std::vector<int> e(d, 0);
            for (int i : t) {
                w = wedge(w, sd.lambda[i]);
                ++e[i];
            }
            if (w.isZero()) continue;
            for (const auto& [pe, pc] : phi.coeffs()) {
                std::vector<int> full(d);
                for (int v = 0; v < d; ++v) full[v] = pe[v] + e[v];
                auto it = integrand.find(full);
                Multivector term = (Scalar::fromRat(sign / fact) * pc) * w;
                if (it == integrand.end())
                    integrand.emplace(full, term);
                else
                    it->second += term;
            }
        }
    }
    std::vector<Multivector> psi(K + 1, Multivector(n));
    for (const auto& [e, mv] : integrand) {
        Rat value(1);
        int total = 0;
        bool odd = false;
        for (int b : e) {
            if (b % 2) odd = true;
            total += b;
            value *= doubleFactorial(b - 1);
        }
        if (odd || total / 2 > K) continue;
        for (int h = 0; h < total / 2; ++h) value *= 2;
        psi[total / 2] += Scalar::fromRat(value) * mv;
    }
    return psi;
}

Series randomPoly(std::mt19937& rng, int dim, int order, int maxDeg) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> nterms(1, 5);
    std::uniform_int_distribution<int> expo(0, maxDeg);
    Series s(dim, order);
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        std::vector<int> e(dim, 0);
        int budget = maxDeg;
        for (int v = 0; v < dim; ++v) {
            int p = expo(rng) % (budget + 1);
            e[v] = p;
            budget -= p;
        }
        s.setCoefficient(e, s.coefficient(e) + Scalar::fromInt(coeff(rng)));
    }
    return s;
}

}  // namespace

TEST_CASE("closed-form moments") {
    Moment m0 = gaussianMoment({0, 0, 0});
    CHECK(m0.value == Scalar::fromInt(1));
    CHECK(m0.tPower == 0);
    Moment m2 = gaussianMoment({2});
    CHECK(m2.value == Scalar::fromInt(2));
    CHECK(m2.tPower == 1);
    CHECK(gaussianMoment({1}).value.isZero());
    CHECK(gaussianMoment({2, 1}).value.isZero());
    // x^4 -> (2t)^2 * 3!! = 12 t^2; x^2 y^2 -> 4 t^2
    Moment m4 = gaussianMoment({4});
    CHECK(m4.value == Scalar::fromInt(12));
    CHECK(m4.tPower == 2);
    Moment m22 = gaussianMoment({2, 2});
    CHECK(m22.value == Scalar::fromInt(4));
    CHECK(m22.tPower == 2);
}

TEST_CASE("hand-computed expansions on the rotation fixture") {
    SpinData sd = rotationSpinFixture();
    // constant integrand: only the empty moment survives
    AsympExpansion e1 = expand(Series::one(1, 6), sd, 3);
    CHECK(e1.psi[0] == Multivector::unit(2));
    CHECK(e1.psi[1].isZero());
    CHECK(e1.psi[2].isZero());
    // linear integrand pairs with the linear term of the exponential:
    // x*(1 - x*(1/2)e12) averages to -(2t)(1/2) e12 = -t e12
    AsympExpansion ex = expand(Series::variable(1, 6, 0), sd, 3);
    CHECK(ex.psi[0].isZero());
    Multivector minusTop(2);
    minusTop.setCoefficient(0b11u, Scalar::fromInt(-1));
    CHECK(ex.psi[1] == minusTop);
    CHECK(ex.psi[2].isZero());
    // quadratic integrand: x^2 averages to 2t at degree zero
    Series x = Series::variable(1, 6, 0);
    AsympExpansion e2 = expand(x * x, sd, 3);
    CHECK(e2.psi[1] == Scalar::fromInt(2) * Multivector::unit(2));
    CHECK(e2.psi[2].isZero());
}

TEST_CASE("expansion preconditions") {
    SpinData sd = rotationSpinFixture();
    CHECK_THROWS_AS(expand(Series::one(2, 6), sd, 1), std::invalid_argument);
    CHECK_THROWS_AS(expand(Series::one(1, 2), sd, 2), std::invalid_argument);
}

TEST_CASE("expansion agrees with the tuple-enumeration reference") {
    SpinData sd = adjointSpinFixture();
    std::mt19937 rng(501);
    for (int trial = 0; trial < 30; ++trial) {
        Series phi = randomPoly(rng, 3, 8, 4);
        AsympExpansion got = expand(phi, sd, 4);
        std::vector<Multivector> want = naiveExpansion(phi, sd, 4);
        for (int k = 0; k <= 4; ++k) CHECK(got.psi[k] == want[k]);
    }
}

TEST_CASE("expansion is linear") {
    SpinData sd = adjointSpinFixture();
    std::mt19937 rng(502);
    for (int trial = 0; trial < 10; ++trial) {
        Series a = randomPoly(rng, 3, 8, 3);
        Series b = randomPoly(rng, 3, 8, 3);
        AsympExpansion ea = expand(a, sd, 4);
        AsympExpansion eb = expand(b, sd, 4);
        AsympExpansion esum = expand(a + b, sd, 4);
        Scalar three = Scalar::fromInt(3);
        AsympExpansion escaled = expand(three * a, sd, 4);
        for (int k = 0; k <= 4; ++k) {
            CHECK(esum.psi[k] == ea.psi[k] + eb.psi[k]);
            CHECK(escaled.psi[k] == three * ea.psi[k]);
        }
    }
}

TEST_CASE("containment and top-degree identity across random polynomials") {
    SpinData rot = rotationSpinFixture();
    CHECK(checkMomentExpansion(Series::one(1, 8), rot).empty());
    CHECK(checkMomentExpansion(Series::variable(1, 8, 0), rot).empty());
    SpinData adj = adjointSpinFixture();
    std::mt19937 rng(503);
    for (int trial = 0; trial < 20; ++trial) {
        Series phi = randomPoly(rng, 3, 8, 4);
        CHECK(checkMomentExpansion(phi, adj).empty());
    }
}

TEST_CASE("doubled symbol breaks the top-degree identity") {
    SpinData sd = rotationSpinFixture();
    sd.lambda[0] = Scalar::fromInt(2) * sd.lambda[0];
    sd.gamma[0] = chevalleyInv(sd.lambda[0]);
    std::vector<std::string> bad = checkMomentExpansion(Series::variable(1, 8, 0), sd);
    CHECK(bad.size() > 0);
}
