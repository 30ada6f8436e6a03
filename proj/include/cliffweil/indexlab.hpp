#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "cliffweil/clifford.hpp"
#include "cliffweil/duflo.hpp"
#include "cliffweil/liealg.hpp"
#include "cliffweil/weil.hpp"

namespace cliffweil {

struct ModelOptions {
    // Swap the even/odd roles of the module; kernels trade places and the
    // supertrace changes sign.  Used to confirm the pairing test has teeth.
    bool flipGrading = false;
};

// The rank-three group fibered over the two-sphere by its one-parameter
// subgroup, with the module S tensor C_w.  Everything downstream (block
// operators, index coefficients, both pairings, heat values) is derived
// from this one bundle of validated data.
struct HomogModel {
    LieAlg k;        // the rank-three group algebra
    LieAlg torus;    // its one-dimensional subalgebra, unit generator
    int w = 0;       // twist weight
    int cutoff = 0;  // default block range 2j = 0..cutoff
    int order = 8;   // series order for the curvature-side pairing
    SpinData sd;     // torus action on the horizontal plane + lifts
    SpinorRep spin;  // matrix model of the horizontal Clifford algebra
    GMat grading;    // module grading, possibly sign-flipped by options
    Rep nu;          // torus action on the module (quadratic lift + twist)
    MixedElt curvature;
    FundClass fc;
    Series jMInv;    // reciprocal isotropy profile, cached at `order`
    Series chern;    // twist character series, cached at `order`
    ModelOptions opts;
};

// Assembles and cross-checks the model: the module action must commute
// correctly with the Clifford action and leave a scalar twist remainder,
// the curvature built from structure constants must equal twice the
// canonical element, and the volume/orientation data must reproduce the
// Euler characteristic 2 exactly.  Throws std::invalid_argument carrying
// the violation report when any check fails.
HomogModel buildModel(int w, int cutoff, int order = 8, ModelOptions opts = ModelOptions{});

// Exact pairing of the Euler-type density (reciprocal profile times the
// difference of the two half-module characters) with the fundamental data.
Scalar gaussBonnet(const HomogModel& model);

// Restriction of the lifted operator to the isotypic block 2j: the sum of
// dual-action generators tensor Clifford generators on V* tensor E.
// Kernel weights are recorded per grading side, without the block
// multiplicity 2j+1.
struct Block {
    int twoJ = 0;
    GMat op;
    std::map<int, int> kerPlus;   // weight -> kernel dimension, even side
    std::map<int, int> kerMinus;  // odd side
};

Block blockDirac(const HomogModel& model, int twoJ);

// Structural checks on a block: the operator is odd for the grading,
// commutes with the weight operator, and the graded kernel count matches
// the difference of nullities of the squared operator.  Empty means pass.
std::vector<std::string> checkBlock(const HomogModel& model, const Block& block);

// Weight coefficients of the index character, kept only inside the window
// |m| <= cutoff/2 where they are final; boundary entries are dropped and
// counted, never reported as data.  q holds the exact polynomial fitted
// through the windowed coefficients (monomial coefficients, low degree
// first, trailing zeros trimmed).
struct CharSum {
    std::map<int, long> coeff;
    int cutoff = 0;
    int window = 0;
    int dropped = 0;
    bool fitOk = false;
    std::vector<Rat> q;
    double fitResidual = 0.0;
};

CharSum distributionalIndex(const HomogModel& model, int cutoff);

// Left side of the pairing identity: converts the fitted polynomial to a
// point-supported distribution on the line via the weight dictionary
// m^k <-> (-2i)^k d^k delta, pulls it back through the inverse symmetrized
// transport, and pairs with phi.  Requires a successful fit; otherwise
// throws std::invalid_argument("cannot identify point-supported distribution").
Scalar lhsExact(const CharSum& cs, const Series& phi);

// Right side: pairs the reciprocal profile times the twist character times
// phi against the curvature and fundamental data.
Scalar rhsExact(const HomogModel& model, const Series& phi);

struct TheoremCase {
    std::string label;
    Scalar lhs;
    Scalar rhs;
    bool equal = false;
};

// Evaluates both sides for each test polynomial against one index
// computation at the model's cutoff.
std::vector<TheoremCase> theoremCheck(const HomogModel& model,
                                      const std::vector<Series>& phis);

// Numeric heat pairing at time t against the character of weight fWeight:
// quadrature over the circle of the truncated spectral kernel times the
// module supertrace character.  Spectral sum over blocks 2j <= cutoff2j.
std::complex<double> heatTrace(const HomogModel& model, double t, int fWeight,
                               int cutoff2j);

// Small-time check of one heat pairing against the exact index
// coefficient.  raw holds the values on the t grid; neville the plain
// polynomial extrapolation to t = 0; expModel the extrapolation under a
// single-exponential model (equal to the raw value when the data is flat);
// rate the observed decay exponent.  pass compares expModel with the
// target (relative when the target is nonzero); flagged reports a spectral
// truncation estimate above tolerance without failing the check.
struct HeatCheck {
    int fWeight = 0;
    double target = 0.0;
    std::vector<double> tGrid;
    std::vector<double> raw;
    double neville = 0.0;
    double expModel = 0.0;
    double rate = 0.0;
    double tailEstimate = 0.0;
    bool pass = false;
    bool flagged = false;
};

HeatCheck heatCheck(const HomogModel& model, const CharSum& cs, int fWeight,
                    int cutoff2j, const std::vector<double>& tGrid, double tol);

}  // namespace cliffweil
