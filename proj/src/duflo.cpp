#include "cliffweil/duflo.hpp"

#include <stdexcept>

namespace cliffweil {

namespace {

Rat toRat(const Scalar& s) {
    if (s.isZero()) return Rat(0);
    for (const auto& [k, c] : s.terms())
        if (k != 0 || c.im != 0) throw std::logic_error("value is not a plain rational");
    return s.coefficient(0).re;
}

}  // namespace

void Dist0::addTerm(const std::vector<int>& beta, const Scalar& c) {
    if (static_cast<int>(beta.size()) != algebra.dim())
        throw std::invalid_argument("variable count mismatch");
    auto it = terms.find(beta);
    if (it == terms.end()) {
        if (!c.isZero()) terms.emplace(beta, c);
        return;
    }
    it->second += c;
    if (it->second.isZero()) terms.erase(it);
}

int Dist0::maxOrder() const {
    int m = 0;
    for (const auto& [beta, c] : terms) m = std::max(m, totalDegree(beta));
    return m;
}

Dist0 Dist0::delta(const LieAlg& g) {
    Dist0 u(g);
    u.addTerm(std::vector<int>(g.dim(), 0), Scalar::fromInt(1));
    return u;
}

Dist0 Dist0::casimirSymbol(const LieAlg& g) {
    Dist0 u(g);
    for (int i = 0; i < g.dim(); ++i) {
        std::vector<int> beta(g.dim(), 0);
        beta[i] = 2;
        u.addTerm(beta, Scalar::fromInt(1));
    }
    return u;
}

Scalar pair0(const Dist0& u, const Series& phi) {
    if (phi.dim() != u.algebra.dim()) throw std::invalid_argument("variable count mismatch");
    if (u.maxOrder() > phi.order()) throw std::invalid_argument("order too low for pairing");
    Scalar acc;
    for (const auto& [beta, a] : u.terms) {
        Scalar c = phi.coefficient(beta);
        if (c.isZero()) continue;
        Rat fact(1);
        for (int b : beta)
            for (int j = 2; j <= b; ++j) fact *= j;
        acc += a * c * Scalar::fromRat(fact);
    }
    return acc;
}

Dist0 multiplyTestBySeries(const Dist0& u, const Series& s) {
    if (s.dim() != u.algebra.dim()) throw std::invalid_argument("variable count mismatch");
    int d = s.dim();
    Dist0 out(u.algebra);
    for (const auto& [beta, a] : u.terms)
        for (const auto& [gamma, sg] : s.coeffs()) {
            bool contained = true;
            for (int i = 0; i < d; ++i)
                if (gamma[i] > beta[i]) {
                    contained = false;
                    break;
                }
            if (!contained) continue;
            // falling factorial beta!/(beta-gamma)! from the Leibniz rule
            Rat fact(1);
            std::vector<int> rest(d);
            for (int i = 0; i < d; ++i) {
                rest[i] = beta[i] - gamma[i];
                for (int j = rest[i] + 1; j <= beta[i]; ++j) fact *= j;
            }
            out.addTerm(rest, a * sg * Scalar::fromRat(fact));
        }
    return out;
}

DistG duflo(const Dist0& u) {
    Series j = jAlgebraSeries(u.algebra, u.maxOrder()).s;
    return {multiplyTestBySeries(u, j)};
}

Dist0 dufloInv(const DistG& T) {
    Series j = jAlgebraSeries(T.u.algebra, T.u.maxOrder()).s;
    return multiplyTestBySeries(T.u, seriesInvert(j));
}

Scalar pairG(const DistG& T, const Series& fPullback) { return pair0(T.u, fPullback); }

Series charPullbackSU2(int m, int order) {
    if (m < 0) throw std::invalid_argument("highest weight must be nonnegative");
    int ord2 = order / 2;
    // ratio of the two radial profiles as a series in u = r^2
    auto radial = [&](const Rat& a) {
        std::vector<Rat> c = taylorSinOverId(a, 2 * ord2);
        Series s(1, ord2);
        for (int k = 0; k <= ord2; ++k)
            if (2 * k < static_cast<int>(c.size()) && c[2 * k] != 0)
                s.setCoefficient({k}, Scalar::fromRat(c[2 * k]));
        return s;
    };
    Rat a1(m + 1, 2);
    a1.canonicalize();
    Series ratio = radial(a1) * seriesInvert(radial(Rat(1, 2)));
    // substitute u -> x1^2 + x2^2 + x3^2
    Series q(3, order);
    for (int v = 0; v < 3; ++v) {
        std::vector<int> e(3, 0);
        e[v] = 2;
        q.setCoefficient(e, Scalar::fromInt(1));
    }
    Series out(3, order);
    Series pw = Series::one(3, order);
    for (int k = 0; k <= ord2; ++k) {
        Scalar ck = ratio.coefficient({k});
        if (!ck.isZero()) out += ck * pw;
        if (k < ord2) pw = pw * q;
    }
    return out;
}

HarishChandraReport harishChandraCheck(int mMax, int order) {
    LieAlg g = LieAlg::su2();
    DistG T = duflo(Dist0::casimirSymbol(g));
    HarishChandraReport rep;
    for (int m = 0; m <= mMax; ++m) {
        Scalar p = pairG(T, charPullbackSU2(m, order));
        Rat s = toRat(p) / (m + 1);
        rep.scaled.push_back(s);
        rep.casimir.push_back(su2CasimirEigen(m));
    }
    rep.shift = rep.scaled[0] - rep.casimir[0];
    rep.shiftConstant = true;
    for (size_t m = 0; m < rep.scaled.size(); ++m)
        if (rep.scaled[m] - rep.casimir[m] != rep.shift) rep.shiftConstant = false;
    rep.quadraticFit = true;
    for (int m = 0; m + 3 <= mMax; ++m) {
        Rat d3 = rep.scaled[m + 3] - 3 * rep.scaled[m + 2] + 3 * rep.scaled[m + 1] - rep.scaled[m];
        if (d3 != 0) rep.quadraticFit = false;
    }
    return rep;
}

}  // namespace cliffweil
