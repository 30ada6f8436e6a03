#include "cliffweil/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace cliffweil {

std::string ratToString(const Rat& r) {
    return r.get_str();
}

bool ratSqrt(const Rat& r, Rat& out) {
    if (r < 0) return false;
    if (r == 0) {
        out = 0;
        return true;
    }
    Rat c = r;
    c.canonicalize();
    mpz_class num = c.get_num(), den = c.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    out = Rat(sn) / Rat(sd);
    return true;
}

std::string GRat::str() const {
    if (isZero()) return "0";
    std::ostringstream os;
    auto imPart = [&](const Rat& v) -> std::string {
        Rat a = abs(v);
        if (a == 1) return "i";
        return ratToString(a) + "i";
    };
    if (im == 0) {
        os << ratToString(re);
    } else if (re == 0) {
        if (im < 0) os << "-";
        os << imPart(im);
    } else {
        os << ratToString(re) << (im < 0 ? "-" : "+") << imPart(im);
    }
    return os.str();
}

GRat operator+(const GRat& a, const GRat& b) { return GRat(a.re + b.re, a.im + b.im); }
GRat operator-(const GRat& a, const GRat& b) { return GRat(a.re - b.re, a.im - b.im); }
GRat operator-(const GRat& a) { return GRat(-a.re, -a.im); }

GRat operator*(const GRat& a, const GRat& b) {
    return GRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

GRat operator/(const GRat& a, const GRat& b) {
    if (b.isZero()) throw std::domain_error("division by zero");
    Rat n = b.normSq();
    GRat num = a * b.conj();
    return GRat(num.re / n, num.im / n);
}

bool operator==(const GRat& a, const GRat& b) { return a.re == b.re && a.im == b.im; }
bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }

void Scalar::set(int k, const GRat& v) {
    if (v.isZero())
        terms_.erase(k);
    else
        terms_[k] = v;
}

Scalar Scalar::fromInt(long v) { return monomial(GRat(v), 0); }
Scalar Scalar::fromRat(const Rat& r) { return monomial(GRat(r), 0); }
Scalar Scalar::fromGRat(const GRat& g) { return monomial(g, 0); }
Scalar Scalar::i() { return monomial(GRat::i(), 0); }
Scalar Scalar::pi(int k) { return monomial(GRat(1L), k); }

Scalar Scalar::monomial(const GRat& c, int k) {
    Scalar s;
    s.set(k, c);
    return s;
}

GRat Scalar::coefficient(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? GRat() : it->second;
}

Scalar Scalar::operator-() const {
    Scalar r;
    for (const auto& [k, v] : terms_) r.terms_[k] = -v;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& [k, v] : o.terms_) set(k, coefficient(k) + v);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    for (const auto& [k, v] : o.terms_) set(k, coefficient(k) - v);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar r = a;
    r += b;
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar r = a;
    r -= b;
    return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    for (const auto& [ka, va] : a.terms_)
        for (const auto& [kb, vb] : b.terms_)
            r.set(ka + kb, r.coefficient(ka + kb) + va * vb);
    return r;
}

Scalar Scalar::divByMonomial(const Scalar& d) const {
    if (!d.isMonomial()) throw std::invalid_argument("non-monomial divisor");
    auto [k, c] = *d.terms_.begin();
    Scalar r;
    for (const auto& [ka, va] : terms_) r.set(ka - k, va / c);
    return r;
}

Scalar Scalar::inverseMonomial() const {
    if (!isMonomial()) throw std::invalid_argument("non-monomial divisor");
    auto [k, c] = *terms_.begin();
    return monomial(GRat(1L) / c, -k);
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.str() << ")";
        if (k == 1)
            os << "·pi";
        else if (k != 0)
            os << "·pi^" << k;
    }
    return os.str();
}

bool operator==(const Scalar& a, const Scalar& b) { return a.terms() == b.terms(); }
bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

}  // namespace cliffweil
