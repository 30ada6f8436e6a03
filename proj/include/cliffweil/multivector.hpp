#pragma once

#include <map>
#include <string>

#include "cliffweil/scalar.hpp"

namespace cliffweil {

// Element of the exterior algebra on n orthonormal generators, n <= 8.
// Blades are stored as bitmasks (bit i-1 set means e_i is present) with
// Scalar coefficients; zero coefficients are never stored.
class Multivector {
public:
    explicit Multivector(int n);

    static Multivector unit(int n);                       // the empty blade
    static Multivector blade(int n, unsigned mask);       // coefficient one
    static Multivector generator(int n, int i);           // e_i, 1-based

    int n() const { return n_; }
    bool isZero() const { return c_.empty(); }
    const std::map<unsigned, Scalar>& blades() const { return c_; }
    Scalar coefficient(unsigned mask) const;
    void setCoefficient(unsigned mask, const Scalar& v);
    void addTerm(unsigned mask, const Scalar& v);

    Multivector degreePart(int k) const;
    int maxDegree() const;
    bool evenDegreesOnly() const;
    bool hasConstantPart() const { return !coefficient(0u).isZero(); }

    Multivector operator-() const;
    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);

    std::string str() const;

private:
    int n_;
    std::map<unsigned, Scalar> c_;
};

Multivector operator+(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a, const Multivector& b);
Multivector operator*(const Scalar& c, const Multivector& a);
bool operator==(const Multivector& a, const Multivector& b);
bool operator!=(const Multivector& a, const Multivector& b);

// Exterior product.
Multivector wedge(const Multivector& a, const Multivector& b);

// Sign of e_A ^ e_B as a reordering of the concatenation into the sorted
// blade; returns 0 when the blades intersect.
int wedgeSign(unsigned a, unsigned b);

// Finite exponential sum of wedge powers: 1 + m + m^2/2! + ...  The argument
// must have no degree-0 component.
// Throws std::invalid_argument("degree-0 component present").
Multivector exteriorExp(const Multivector& m);

}  // namespace cliffweil
