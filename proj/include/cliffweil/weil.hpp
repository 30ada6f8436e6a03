#pragma once

#include <random>
#include <string>
#include <vector>

#include "cliffweil/clifford.hpp"
#include "cliffweil/liealg.hpp"
#include "cliffweil/multivector.hpp"
#include "cliffweil/series.hpp"

namespace cliffweil {

// Element of (algebra) tensor (even positive-degree part of the exterior
// algebra on n generators): components[i] pairs with basis vector X_i.
struct MixedElt {
    LieAlg algebra;
    int n = 0;
    std::vector<Multivector> components;

    MixedElt(const LieAlg& g, int ambient);  // zero element

    MixedElt scaled(const Scalar& c) const;
    // Empty when every component has only even degrees >= 2.
    std::vector<std::string> validate() const;
};

bool operator==(const MixedElt& a, const MixedElt& b);

// An algebra acting on R^n by antisymmetric matrices together with the
// induced quadratic Clifford elements and their exterior symbols.
struct SpinData {
    LieAlg algebra;
    int n = 0;
    Rep alpha;
    std::vector<CliffElt> gamma;
    std::vector<Multivector> lambda;

    SpinData(const LieAlg& g, int ambient, Rep a, std::vector<CliffElt> gm,
             std::vector<Multivector> lm);

    // sum_i X_i tensor lambda[i].
    MixedElt mixedLambda() const;
};

// gamma(X) = -(1/2) sum_{j<k} <e_j, alpha(X)e_k> e_j e_k and lambda its
// symbol.  Throws std::invalid_argument("alpha must land in so(n)") unless
// every matrix of alpha is real antisymmetric.
SpinData buildSpinData(const Rep& alpha);
// Same construction reading only strictly upper entries and skipping the
// guard; lets tests drive deliberately inconsistent data through the checks.
SpinData buildSpinDataUnchecked(const Rep& alpha);

// Consistency report: gamma matches its defining formula, the commutation
// rule [gamma_i, c(e_j)] = c(alpha_i e_j) holds, gamma is a homomorphism,
// and lambda is the symbol of gamma.  Empty means consistent.
std::vector<std::string> checkSpinData(const SpinData& sd);

// Series on the algebra tagged with the outcome of the infinitesimal
// invariance test: sum_{j,k} c_{ij}^k x_j ds/dx_k = 0 for every i.
struct InvariantSeries {
    Series s;
    bool invariant = false;
};

bool isInfinitesimallyInvariant(const LieAlg& g, const Series& s);
InvariantSeries makeInvariant(const LieAlg& g, const Series& s);

// Substitute x_i -> eta.components[i] and expand with the wedge product
// (well defined: even-degree components commute).  Throws
// std::invalid_argument("variable count mismatch") when phi.dim differs
// from the number of components.
Multivector evalAtMixed(const Series& phi, const MixedElt& eta);

// det^{1/2} of the sinh(z/2)/(z/2) profile of the symbolic adjoint matrix.
InvariantSeries jAlgebraSeries(const LieAlg& g, int order);
// The same profile applied to the symbolic matrix of alpha.
InvariantSeries jIsotropySeries(const Rep& alpha, int order);
// trace of exp(-tau(x)) for a symbolic matrix of the given action.
InvariantSeries chernSeries(const Rep& tau, int order);

// Integration over a closed oriented homogeneous model reduces to reading
// the top-degree coefficient and scaling by total volume and orientation.
struct FundClass {
    int n = 0;
    Scalar volume;
    int orientation = 1;
};

// Evaluates phi at curvature scaled by 1/(2 pi i), reads the coefficient of
// e_1^...^e_n, and applies the volume functional.
// Throws std::invalid_argument("ambient dimension mismatch") when the model
// and curvature disagree.
Scalar cwPair(const InvariantSeries& phi, const MixedElt& curvature, const FundClass& fc);

// Report for an algebra action nu on a module carrying a Clifford action:
// first [nu_i, C_j] = C(alpha_i e_j) for all i, j, then the remainder
// tau_i = nu_i - gamma_i (gamma built through the module's Clifford action)
// must commute with every C_j.
struct GSpinReport {
    std::vector<std::string> violations;
    std::vector<GMat> tau;
};

GSpinReport checkGSpin(const Rep& nu, const std::vector<GMat>& cliffordAction, const Rep& alpha);

// (a) sum_i lambda_i ^ lambda_i = 0; (b) the algebra profile series
// evaluated at -2 * mixedLambda is the unit; (c) rebuilding the data after
// an exact random orthogonal change of basis and mapping back reproduces
// mixedLambda.  Empty means all hold.
std::vector<std::string> checkIdentities(const SpinData& sd, int order, std::mt19937& rng);

// Rank-one algebra acting on R^2 by the unit-rate rotation generator.
SpinData rotationSpinFixture();
// The three-dimensional builtin acting on R^3 through its adjoint matrices.
SpinData adjointSpinFixture();

}  // namespace cliffweil
