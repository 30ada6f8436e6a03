#include "cliffweil/clifford.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace cliffweil {

CliffElt::CliffElt(int n) : n_(n) {
    if (n < 1 || n > 8) throw std::invalid_argument("generator count out of range");
}

CliffElt CliffElt::unit(int n) { return blade(n, 0u); }

CliffElt CliffElt::blade(int n, unsigned mask) {
    CliffElt c(n);
    if (mask >= (1u << n)) throw std::invalid_argument("blade mask out of range");
    c.c_[mask] = Scalar::fromInt(1);
    return c;
}

CliffElt CliffElt::generator(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
    return blade(n, 1u << (i - 1));
}

Scalar CliffElt::coefficient(unsigned mask) const {
    auto it = c_.find(mask);
    return it == c_.end() ? Scalar() : it->second;
}

void CliffElt::addTerm(unsigned mask, const Scalar& v) {
    if (mask >= (1u << n_)) throw std::invalid_argument("blade mask out of range");
    Scalar nv = coefficient(mask) + v;
    if (nv.isZero())
        c_.erase(mask);
    else
        c_[mask] = nv;
}

CliffElt CliffElt::operator-() const {
    CliffElt r(n_);
    for (const auto& [mask, v] : c_) r.c_[mask] = -v;
    return r;
}

CliffElt& CliffElt::operator+=(const CliffElt& o) {
    if (o.n_ != n_) throw std::invalid_argument("generator count mismatch");
    for (const auto& [mask, v] : o.c_) addTerm(mask, v);
    return *this;
}

CliffElt& CliffElt::operator-=(const CliffElt& o) {
    if (o.n_ != n_) throw std::invalid_argument("generator count mismatch");
    for (const auto& [mask, v] : o.c_) addTerm(mask, -v);
    return *this;
}

CliffElt operator+(const CliffElt& a, const CliffElt& b) {
    CliffElt r = a;
    r += b;
    return r;
}

CliffElt operator-(const CliffElt& a, const CliffElt& b) {
    CliffElt r = a;
    r -= b;
    return r;
}

unsigned bladeProduct(int n, unsigned a, unsigned b, int& sign) {
    (void)n;
    unsigned m = a;
    int s = 1;
    for (unsigned rest = b; rest != 0; rest &= rest - 1) {
        int bit = std::countr_zero(rest);
        // Move the generator leftwards past everything in m above it.
        if (std::popcount(m >> (bit + 1)) % 2 != 0) s = -s;
        if (m & (1u << bit)) {
            s = -s;  // e_i e_i = -1
            m &= ~(1u << bit);
        } else {
            m |= 1u << bit;
        }
    }
    sign = s;
    return m;
}

CliffElt operator*(const CliffElt& a, const CliffElt& b) {
    if (a.n() != b.n()) throw std::invalid_argument("generator count mismatch");
    CliffElt r(a.n());
    for (const auto& [ma, va] : a.blades()) {
        for (const auto& [mb, vb] : b.blades()) {
            int sign = 1;
            unsigned m = bladeProduct(a.n(), ma, mb, sign);
            Scalar term = va * vb;
            if (sign < 0) term = -term;
            r.addTerm(m, term);
        }
    }
    return r;
}

CliffElt operator*(const Scalar& c, const CliffElt& a) {
    CliffElt r(a.n());
    for (const auto& [mask, v] : a.blades()) r.addTerm(mask, c * v);
    return r;
}

bool operator==(const CliffElt& a, const CliffElt& b) {
    return a.n() == b.n() && a.blades() == b.blades();
}

bool operator!=(const CliffElt& a, const CliffElt& b) { return !(a == b); }

Multivector chevalley(const CliffElt& c) {
    Multivector m(c.n());
    for (const auto& [mask, v] : c.blades()) m.setCoefficient(mask, v);
    return m;
}

CliffElt chevalleyInv(const Multivector& m) {
    CliffElt c(m.n());
    for (const auto& [mask, v] : m.blades()) c.addTerm(mask, v);
    return c;
}

Scalar berezinSupertrace(const CliffElt& c) {
    if (c.n() % 2 != 0) throw std::invalid_argument("supertrace oracle requires even n");
    Scalar norm = Scalar::fromInt(1);
    Scalar m2i = Scalar::monomial(GRat(Rat(0), Rat(-2)), 0);
    for (int k = 0; k < c.n() / 2; ++k) norm *= m2i;
    unsigned full = (1u << c.n()) - 1;
    return norm * c.coefficient(full);
}

std::string CliffElt::str() const {
    if (c_.empty()) return "0";
    std::map<std::pair<int, unsigned>, Scalar> sorted;
    for (const auto& [mask, v] : c_) sorted[{std::popcount(mask), mask}] = v;
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, v] : sorted) {
        if (!first) os << " + ";
        first = false;
        os << "{" << v.str() << "}";
        unsigned mask = key.second;
        for (int i = 0; i < n_; ++i)
            if (mask & (1u << i)) os << "·e" << (i + 1);
    }
    return os.str();
}

SpinorRep SpinorRep::build(int n) {
    if (n != 2 && n != 4 && n != 6) throw std::invalid_argument("unsupported spinor dimension");
    GMat isigma1(2, 2), isigma2(2, 2), sigma3(2, 2);
    isigma1.at(0, 1) = GRat::i();
    isigma1.at(1, 0) = GRat::i();
    isigma2.at(0, 1) = GRat(1L);
    isigma2.at(1, 0) = GRat(-1L);
    sigma3.at(0, 0) = GRat(1L);
    sigma3.at(1, 1) = GRat(-1L);

    std::vector<GMat> gens = {isigma1, isigma2};
    for (int half = 2; half <= n / 2; ++half) {
        std::vector<GMat> next;
        next.reserve(gens.size() + 2);
        for (const auto& g : gens) next.push_back(sigma3.kron(g));
        int sz = 1 << (half - 1);
        next.push_back(isigma1.kron(GMat::identity(sz)));
        next.push_back(isigma2.kron(GMat::identity(sz)));
        gens = std::move(next);
    }

    SpinorRep r;
    r.n = n;
    r.gen = gens;
    GMat prod = GMat::identity(1 << (n / 2));
    for (const auto& g : gens) prod = prod * g;
    GRat phase(1L);
    for (int k = 0; k < n / 2; ++k) phase = phase * GRat::i();
    r.grading = prod.scaled(phase);
    return r;
}

GMat SpinorRep::represent(const CliffElt& c) const {
    if (c.n() != n) throw std::invalid_argument("generator count mismatch");
    int sz = 1 << (n / 2);
    GMat acc(sz, sz);
    for (const auto& [mask, v] : c.blades()) {
        if (v.terms().size() != (v.coefficient(0).isZero() ? 0u : 1u))
            throw std::invalid_argument("coefficient has circle-constant terms");
        GMat p = GMat::identity(sz);
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) p = p * gen[i];
        acc = acc + p.scaled(v.coefficient(0));
    }
    return acc;
}

Scalar SpinorRep::supertrace(const GMat& m) const {
    return Scalar::fromGRat((grading * m).trace());
}

}  // namespace cliffweil
