#pragma once

#include <map>
#include <string>
#include <vector>

#include "cliffweil/scalar.hpp"

namespace cliffweil {

// Truncated multivariate power series over Scalar.  Terms of total degree
// greater than `order` are discarded by every operation, so the represented
// object is a jet of fixed order.  Coefficient storage is sparse.
class Series {
public:
    Series(int dim, int order);

    static Series constant(int dim, int order, const Scalar& c);
    static Series one(int dim, int order) { return constant(dim, order, Scalar::fromInt(1)); }
    static Series variable(int dim, int order, int index);

    int dim() const { return dim_; }
    int order() const { return order_; }
    bool isZero() const { return c_.empty(); }

    const std::map<std::vector<int>, Scalar>& coeffs() const { return c_; }
    Scalar coefficient(const std::vector<int>& e) const;
    void setCoefficient(const std::vector<int>& e, const Scalar& v);
    Scalar constantTerm() const;

    Series truncated(int newOrder) const;
    Series derivative(int var) const;

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);

    std::string str() const;

private:
    int dim_, order_;
    std::map<std::vector<int>, Scalar> c_;

    void add(const std::vector<int>& e, const Scalar& v);
    friend Series operator*(const Series& a, const Series& b);
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator*(const Scalar& c, const Series& a);
bool operator==(const Series& a, const Series& b);
bool operator!=(const Series& a, const Series& b);

int totalDegree(const std::vector<int>& e);

// Exact Taylor coefficients (index = power) of named analytic profiles.
// sinh(z/2)/(z/2): even series with unit constant term.
std::vector<Rat> taylorSinhHalfOverHalf(int order);
// exp(sign*z).
std::vector<Rat> taylorExp(int order, int sign);
// sin(a*z)/z: even series with constant term a.
std::vector<Rat> taylorSinOverId(const Rat& a, int order);

// Sum_k coeffs[k] * g^k truncated at g's order.
Series applyUnivariate(const std::vector<Rat>& coeffs, const Series& g);

// Square root of a series with constant term exactly one.
// Throws std::invalid_argument("sqrt requires unit constant term").
Series seriesSqrt(const Series& s);

// Multiplicative inverse; the constant term must be an invertible Scalar
// (a nonzero single term).  Throws std::invalid_argument("zero constant term")
// when the constant term vanishes.
Series seriesInvert(const Series& s);

// Square matrix of Series sharing one dim/order.
class SeriesMatrix {
public:
    SeriesMatrix(int n, int dim, int order);
    static SeriesMatrix identity(int n, int dim, int order);

    int n() const { return n_; }
    int dim() const { return dim_; }
    int order() const { return order_; }

    Series& at(int i, int j);
    const Series& at(int i, int j) const;

    SeriesMatrix operator+(const SeriesMatrix& o) const;
    SeriesMatrix operator*(const SeriesMatrix& o) const;
    SeriesMatrix scaled(const Scalar& c) const;

    // Sum_k coeffs[k] * A^k.  Powers beyond the truncation order of entries
    // with positive valuation contribute nothing.
    SeriesMatrix applyUnivariate(const std::vector<Rat>& coeffs) const;

    Series trace() const;
    // Cofactor expansion; supported for n <= 10.
    Series det() const;

private:
    int n_, dim_, order_;
    std::vector<Series> e_;
};

}  // namespace cliffweil
