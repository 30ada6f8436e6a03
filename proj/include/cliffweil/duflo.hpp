#pragma once

#include <map>
#include <string>
#include <vector>

#include "cliffweil/liealg.hpp"
#include "cliffweil/series.hpp"
#include "cliffweil/weil.hpp"

namespace cliffweil {

// Point-supported distribution sum_beta a_beta d^beta delta_0 on the algebra,
// paired in the operator convention <d^beta delta_0, phi> = (d^beta phi)(0).
struct Dist0 {
    LieAlg algebra;
    std::map<std::vector<int>, Scalar> terms;

    explicit Dist0(const LieAlg& g) : algebra(g) {}

    void addTerm(const std::vector<int>& beta, const Scalar& c);
    int maxOrder() const;  // largest |beta| present, 0 when empty

    static Dist0 delta(const LieAlg& g);
    // sum_i d_i^2 delta_0
    static Dist0 casimirSymbol(const LieAlg& g);
};

// Exact pairing sum_beta a_beta beta! phi_beta.  Throws
// std::invalid_argument("variable count mismatch") on a dimension mismatch
// and std::invalid_argument("order too low for pairing") when the series
// order cannot resolve the highest derivative.
Scalar pair0(const Dist0& u, const Series& phi);

// Transpose of multiplication of the test function: the distribution u' with
// <u', phi> = <u, s*phi>, computed by the Leibniz rule.
Dist0 multiplyTestBySeries(const Dist0& u, const Series& s);

// Push-forward to the group near the identity; functions are represented by
// their pullback jets, so only the underlying distribution is stored.
struct DistG {
    Dist0 u;
};

// <duflo(u), f> = <u, j*phi> with j the algebra profile series computed to
// the order of u; the inverse multiplies by the reciprocal profile instead.
DistG duflo(const Dist0& u);
Dist0 dufloInv(const DistG& T);

Scalar pairG(const DistG& T, const Series& fPullback);

// Pullback jet of the trace of the (m+1)-dimensional irreducible action of
// the rank-three builtin: a closed-form radial series in three variables.
Series charPullbackSU2(int m, int order);

// Pairs the pushed-forward quadratic symbol against character pullbacks for
// highest weights 0..mMax and compares with matrix eigenvalues.
struct HarishChandraReport {
    std::vector<Rat> scaled;    // pairing value divided by the dimension
    std::vector<Rat> casimir;   // quadratic eigenvalue from exact matrices
    Rat shift;                  // scaled[0] - casimir[0]
    bool shiftConstant = false; // scaled[m] - casimir[m] independent of m
    bool quadraticFit = false;  // third differences of scaled[] vanish
};

HarishChandraReport harishChandraCheck(int mMax, int order);

}  // namespace cliffweil
