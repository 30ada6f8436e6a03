#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace cliffweil {

using Rat = mpq_class;

std::string ratToString(const Rat& r);

// Exact square root of a nonnegative rational.  Returns false when the value
// is not a perfect square of a rational.
bool ratSqrt(const Rat& r, Rat& out);

// Gaussian rational a + b*i.
struct GRat {
    Rat re, im;

    GRat() : re(0), im(0) {}
    GRat(long v) : re(v), im(0) {}
    GRat(const Rat& r) : re(r), im(0) {}
    GRat(const Rat& r, const Rat& i) : re(r), im(i) {}
    static GRat i() { return GRat(Rat(0), Rat(1)); }

    bool isZero() const { return re == 0 && im == 0; }
    GRat conj() const { return GRat(re, -im); }
    Rat normSq() const { return re * re + im * im; }
    std::string str() const;
};

GRat operator+(const GRat& a, const GRat& b);
GRat operator-(const GRat& a, const GRat& b);
GRat operator-(const GRat& a);
GRat operator*(const GRat& a, const GRat& b);
// Throws std::domain_error on a zero divisor.
GRat operator/(const GRat& a, const GRat& b);
bool operator==(const GRat& a, const GRat& b);
bool operator!=(const GRat& a, const GRat& b);

// Ring element of the coefficient ring used throughout: a Laurent polynomial
// in a formal circle constant with Gaussian-rational coefficients.  The
// canonical form never stores zero coefficients, so equality is structural.
class Scalar {
public:
    Scalar() = default;

    static Scalar fromInt(long v);
    static Scalar fromRat(const Rat& r);
    static Scalar fromGRat(const GRat& g);
    static Scalar i();
    static Scalar pi(int k = 1);
    static Scalar monomial(const GRat& c, int k);

    bool isZero() const { return terms_.empty(); }
    bool isMonomial() const { return terms_.size() == 1; }
    const std::map<int, GRat>& terms() const { return terms_; }
    GRat coefficient(int k) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    // Division is supported only by a single-term divisor.
    // Throws std::invalid_argument("non-monomial divisor") otherwise.
    Scalar divByMonomial(const Scalar& d) const;
    // Inverse of a single-term value; same restriction as divByMonomial.
    Scalar inverseMonomial() const;

    std::string str() const;

private:
    std::map<int, GRat> terms_;
    void set(int k, const GRat& v);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
};

Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);
bool operator==(const Scalar& a, const Scalar& b);
bool operator!=(const Scalar& a, const Scalar& b);

}  // namespace cliffweil
