#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cliffweil/linalg.hpp"
#include "cliffweil/series.hpp"

namespace cliffweil {

// Lie algebra presented by structure constants on a basis declared orthonormal
// for the invariant inner product: [X_i, X_j] = sum_k c_{ij}^k X_k.
class LieAlg {
public:
    explicit LieAlg(int dim);

    int dim() const { return d_; }
    const Rat& structConst(int i, int j, int k) const;
    // Sets c_{ij}^k and c_{ji}^k = -c_{ij}^k.
    void setStructConst(int i, int j, int k, const Rat& v);
    // Writes a single slot without touching the transpose; lets validator
    // tests build deliberately inconsistent tables.
    void setStructConstRaw(int i, int j, int k, const Rat& v);

    std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

    // Matrix of ad(x) on the basis: (ad x)_{kj} = sum_i x_i c_{ij}^k.
    GMat adMatrix(const std::vector<Rat>& x) const;
    // Same with x symbolic: entries linear in the coordinates.
    SeriesMatrix adSymbolic(int order) const;

    // Structure constants in the basis whose a-th vector is sum_b B[b][a] X_b.
    // B must be invertible.
    LieAlg changedBasis(const std::vector<std::vector<Rat>>& basis) const;

    // Orthonormalizes the given symmetric positive-definite Gram matrix by
    // exact Gram-Schmidt and returns the algebra presented on that basis.
    // Throws std::invalid_argument when a required square root is irrational
    // ("inner product not rationally orthonormalizable") or the form is not
    // positive definite.
    LieAlg orthonormalized(const std::vector<std::vector<Rat>>& gram) const;

    static LieAlg abelian(int d);
    static LieAlg su2();
    static LieAlg so3();
    static LieAlg son(int n);
    // Accepts "abelian(d)", "su2", "so3", "son(n)".
    // Throws std::invalid_argument("unknown algebra name").
    static LieAlg byName(const std::string& name);

private:
    int d_;
    std::vector<Rat> c_;  // c[((i*d)+j)*d+k]
};

bool operator==(const LieAlg& a, const LieAlg& b);

// Empty result = all of antisymmetry, Jacobi, and inner-product invariance hold.
std::vector<std::string> validateAlg(const LieAlg& g);

// Matrices R_i = R(X_i) acting on a complex vector space.
struct Rep {
    LieAlg alg;
    int matDim = 0;
    std::vector<GMat> mats;

    Rep(const LieAlg& g, std::vector<GMat> m);
};

// Empty result = homomorphism property [R_i,R_j] = sum_k c_{ij}^k R_k holds.
std::vector<std::string> validateRep(const Rep& r);

Rep adjointRep(const LieAlg& g);

// Exact irreducible representation of the rank-one builtin with highest
// weight twoJ (dimension twoJ+1), on the ladder basis.
Rep su2Irrep(int twoJ);
// Eigenvalue of sum_i R(X_i)^2 on su2Irrep(twoJ); verified to be scalar.
Rat su2CasimirEigen(int twoJ);

// Text format: comment lines (#), "dim d", and "c i j k value" entries
// (1-based indices, rational values); the transpose pair is filled in
// automatically and conflicting duplicates are rejected.
LieAlg parseLieAlg(std::istream& in);
std::string writeLieAlg(const LieAlg& g);

}  // namespace cliffweil
