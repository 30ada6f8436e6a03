#include "cliffweil/gaussmoment.hpp"

#include <map>
#include <stdexcept>

namespace cliffweil {

Moment gaussianMoment(const std::vector<int>& beta) {
    int total = 0;
    Rat prod(1);
    for (int b : beta) {
        if (b % 2) return {Scalar(), 0};
        total += b;
        for (int j = b - 1; j >= 1; j -= 2) prod *= j;
    }
    int half = total / 2;
    for (int h = 0; h < half; ++h) prod *= 2;
    return {Scalar::fromRat(prod), half};
}

AsympExpansion expand(const Series& phi, const SpinData& sd, int K) {
    int d = sd.algebra.dim(), n = sd.n;
    if (phi.dim() != d) throw std::invalid_argument("variable count mismatch");
    if (K < 0 || 2 * K > phi.order())
        throw std::invalid_argument("expansion order exceeds half the series order");

    using PolyMap = std::map<std::vector<int>, Multivector>;
    auto accumulate = [](PolyMap& into, const std::vector<int>& e, const Multivector& mv) {
        auto it = into.find(e);
        if (it == into.end())
            into.emplace(e, mv);
        else
            it->second += mv;
    };

    // finite exponential of -sum_i x_i lambda_i over polynomials in x
    PolyMap expPart;
    expPart.emplace(std::vector<int>(d, 0), Multivector::unit(n));
    PolyMap power = expPart;
    Rat fact(1);
    for (int k = 1; 2 * k <= n; ++k) {
        PolyMap next;
        for (const auto& [e, mv] : power)
            for (int i = 0; i < d; ++i) {
                if (sd.lambda[i].isZero()) continue;
                Multivector w = wedge(mv, sd.lambda[i]);
                if (w.isZero()) continue;
                std::vector<int> e2 = e;
                ++e2[i];
                accumulate(next, e2, w);
            }
        if (next.empty()) break;
        power = std::move(next);
        fact *= k;
        Scalar c = Scalar::fromRat(((k % 2) ? Rat(-1) : Rat(1)) / fact);
        for (const auto& [e, mv] : power) accumulate(expPart, e, c * mv);
    }

    PolyMap full;
    for (const auto& [pe, pc] : phi.coeffs())
        for (const auto& [ee, emv] : expPart) {
            std::vector<int> e(d);
            for (int i = 0; i < d; ++i) e[i] = pe[i] + ee[i];
            accumulate(full, e, pc * emv);
        }

    AsympExpansion out;
    out.K = K;
    out.psi.assign(K + 1, Multivector(n));
    for (const auto& [e, mv] : full) {
        Moment m = gaussianMoment(e);
        if (m.value.isZero() || m.tPower > K) continue;
        out.psi[m.tPower] += m.value * mv;
    }
    return out;
}

std::vector<std::string> checkMomentExpansion(const Series& phi, const SpinData& sd) {
    std::vector<std::string> out;
    int n = sd.n;
    AsympExpansion ex = expand(phi, sd, phi.order() / 2);
    for (int k = 0; k <= ex.K; ++k)
        if (!ex.psi[k].evenDegreesOnly() || ex.psi[k].maxDegree() > 2 * k)
            out.push_back("containment fails at order " + std::to_string(k));
    // target rebuilt from alpha so a corrupted symbol table cannot hide
    MixedElt target = buildSpinDataUnchecked(sd.alpha).mixedLambda().scaled(Scalar::fromInt(-2));
    Multivector ref = evalAtMixed(phi, target);
    for (int k = 0; 2 * k <= n && k <= ex.K; ++k)
        if (!(ex.psi[k].degreePart(2 * k) == ref.degreePart(2 * k)))
            out.push_back("top-degree identity fails at order " + std::to_string(k));
    return out;
}

}  // namespace cliffweil
