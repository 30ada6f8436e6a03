#include "cliffweil/multivector.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace cliffweil {

Multivector::Multivector(int n) : n_(n) {
    if (n < 1 || n > 8) throw std::invalid_argument("generator count out of range");
}

Multivector Multivector::unit(int n) { return blade(n, 0u); }

Multivector Multivector::blade(int n, unsigned mask) {
    Multivector m(n);
    if (mask >= (1u << n)) throw std::invalid_argument("blade mask out of range");
    m.c_[mask] = Scalar::fromInt(1);
    return m;
}

Multivector Multivector::generator(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
    return blade(n, 1u << (i - 1));
}

Scalar Multivector::coefficient(unsigned mask) const {
    auto it = c_.find(mask);
    return it == c_.end() ? Scalar() : it->second;
}

void Multivector::setCoefficient(unsigned mask, const Scalar& v) {
    if (mask >= (1u << n_)) throw std::invalid_argument("blade mask out of range");
    if (v.isZero())
        c_.erase(mask);
    else
        c_[mask] = v;
}

void Multivector::addTerm(unsigned mask, const Scalar& v) {
    setCoefficient(mask, coefficient(mask) + v);
}

Multivector Multivector::degreePart(int k) const {
    Multivector m(n_);
    for (const auto& [mask, v] : c_)
        if (std::popcount(mask) == k) m.c_[mask] = v;
    return m;
}

int Multivector::maxDegree() const {
    int d = -1;
    for (const auto& [mask, v] : c_) d = std::max(d, std::popcount(mask));
    return d;
}

bool Multivector::evenDegreesOnly() const {
    for (const auto& [mask, v] : c_)
        if (std::popcount(mask) % 2 != 0) return false;
    return true;
}

Multivector Multivector::operator-() const {
    Multivector m(n_);
    for (const auto& [mask, v] : c_) m.c_[mask] = -v;
    return m;
}

Multivector& Multivector::operator+=(const Multivector& o) {
    if (o.n_ != n_) throw std::invalid_argument("generator count mismatch");
    for (const auto& [mask, v] : o.c_) addTerm(mask, v);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
    if (o.n_ != n_) throw std::invalid_argument("generator count mismatch");
    for (const auto& [mask, v] : o.c_) addTerm(mask, -v);
    return *this;
}

Multivector operator+(const Multivector& a, const Multivector& b) {
    Multivector r = a;
    r += b;
    return r;
}

Multivector operator-(const Multivector& a, const Multivector& b) {
    Multivector r = a;
    r -= b;
    return r;
}

Multivector operator*(const Scalar& c, const Multivector& a) {
    Multivector r(a.n());
    for (const auto& [mask, v] : a.blades()) r.setCoefficient(mask, c * v);
    return r;
}

bool operator==(const Multivector& a, const Multivector& b) {
    return a.n() == b.n() && a.blades() == b.blades();
}

bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

int wedgeSign(unsigned a, unsigned b) {
    if ((a & b) != 0) return 0;
    // Count inversions: pairs (x in a, y in b) with x > y.
    int inv = 0;
    for (unsigned y = b; y != 0; y &= y - 1) {
        int bit = std::countr_zero(y);
        inv += std::popcount(a >> (bit + 1));
    }
    return inv % 2 == 0 ? 1 : -1;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
    if (a.n() != b.n()) throw std::invalid_argument("generator count mismatch");
    Multivector r(a.n());
    for (const auto& [ma, va] : a.blades()) {
        for (const auto& [mb, vb] : b.blades()) {
            int s = wedgeSign(ma, mb);
            if (s == 0) continue;
            Scalar term = va * vb;
            if (s < 0) term = -term;
            r.addTerm(ma | mb, term);
        }
    }
    return r;
}

Multivector exteriorExp(const Multivector& m) {
    if (m.hasConstantPart()) throw std::invalid_argument("degree-0 component present");
    Multivector acc = Multivector::unit(m.n());
    Multivector p = Multivector::unit(m.n());
    Rat fact = 1;
    for (int k = 1; k <= m.n(); ++k) {
        p = wedge(p, m);
        if (p.isZero()) break;
        fact /= Rat(k);
        acc += Scalar::fromRat(fact) * p;
    }
    return acc;
}

std::string Multivector::str() const {
    if (c_.empty()) return "0";
    // Canonical order: by degree, then by mask.
    std::map<std::pair<int, unsigned>, Scalar> sorted;
    for (const auto& [mask, v] : c_) sorted[{std::popcount(mask), mask}] = v;
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, v] : sorted) {
        if (!first) os << " + ";
        first = false;
        os << "{" << v.str() << "}";
        unsigned mask = key.second;
        bool head = true;
        for (int i = 0; i < n_; ++i) {
            if (!(mask & (1u << i))) continue;
            os << (head ? "·e" : "^e") << (i + 1);
            head = false;
        }
    }
    return os.str();
}

}  // namespace cliffweil
