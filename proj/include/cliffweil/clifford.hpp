#pragma once

#include <map>
#include <string>
#include <vector>

#include "cliffweil/linalg.hpp"
#include "cliffweil/multivector.hpp"
#include "cliffweil/scalar.hpp"

namespace cliffweil {

// Element of the Clifford algebra on n orthonormal generators with the sign
// convention e_i * e_i = -1.  Storage mirrors Multivector: sorted blades as
// bitmasks with Scalar coefficients.
class CliffElt {
public:
    explicit CliffElt(int n);

    static CliffElt unit(int n);
    static CliffElt blade(int n, unsigned mask);
    static CliffElt generator(int n, int i);  // e_i, 1-based

    int n() const { return n_; }
    bool isZero() const { return c_.empty(); }
    const std::map<unsigned, Scalar>& blades() const { return c_; }
    Scalar coefficient(unsigned mask) const;
    void addTerm(unsigned mask, const Scalar& v);

    CliffElt operator-() const;
    CliffElt& operator+=(const CliffElt& o);
    CliffElt& operator-=(const CliffElt& o);

    std::string str() const;

private:
    int n_;
    std::map<unsigned, Scalar> c_;
};

CliffElt operator+(const CliffElt& a, const CliffElt& b);
CliffElt operator-(const CliffElt& a, const CliffElt& b);
CliffElt operator*(const CliffElt& a, const CliffElt& b);  // Clifford product
CliffElt operator*(const Scalar& c, const CliffElt& a);
bool operator==(const CliffElt& a, const CliffElt& b);
bool operator!=(const CliffElt& a, const CliffElt& b);

// Product of two basis blades; returns the resulting mask and writes the
// accumulated sign (+1/-1) to sign.
unsigned bladeProduct(int n, unsigned a, unsigned b, int& sign);

// Degree-preserving symbol map onto the exterior algebra (identity on sorted
// blades) and its inverse quantization map.
Multivector chevalley(const CliffElt& c);
CliffElt chevalleyInv(const Multivector& m);

// Berezin supertrace: the coefficient of the full blade scaled by the pinned
// normalization (-2i)^{n/2}.  Defined for even n only.
// Throws std::invalid_argument("supertrace oracle requires even n").
Scalar berezinSupertrace(const CliffElt& c);

// Irreducible graded matrix model of the Clifford algebra, n in {2,4,6}.
// Matrices act on C^{2^{n/2}}; the grading operator is the matrix of
// i^{n/2} e_1...e_n.
struct SpinorRep {
    int n = 0;
    std::vector<GMat> gen;  // images of e_1..e_n
    GMat grading;

    // Throws std::invalid_argument("unsupported spinor dimension").
    static SpinorRep build(int n);

    GMat represent(const CliffElt& c) const;
    // tr(grading * m) as a Scalar.
    Scalar supertrace(const GMat& m) const;
};

}  // namespace cliffweil
