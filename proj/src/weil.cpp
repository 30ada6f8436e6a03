#include "cliffweil/weil.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace cliffweil {

namespace {

// symbolic matrix sum_i x_i mats[i]
SeriesMatrix symbolicMatrix(const std::vector<GMat>& mats, int dim, int order) {
    int n = mats[0].rows();
    SeriesMatrix m(n, dim, order);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Series s(dim, order);
            for (int i = 0; i < dim; ++i) {
                const GRat& g = mats[i].at(r, c);
                if (g.isZero()) continue;
                std::vector<int> e(dim, 0);
                e[i] = 1;
                s.setCoefficient(e, s.coefficient(e) + Scalar::fromGRat(g));
            }
            m.at(r, c) = s;
        }
    return m;
}

// -(1/2) sum_{j<k} a_{jk} e_j e_k, reading only strictly upper entries
std::pair<CliffElt, Multivector> quadraticLift(const GMat& a, int n) {
    CliffElt g(n);
    Multivector l(n);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            GRat entry = a.at(j, k);
            if (entry.isZero()) continue;
            Scalar c = Scalar::fromGRat(entry) * Scalar::fromRat(Rat(-1, 2));
            unsigned mask = (1u << j) | (1u << k);
            g.addTerm(mask, c);
            l.addTerm(mask, c);
        }
    return {g, l};
}

SpinData assemble(const Rep& alpha) {
    int n = alpha.matDim;
    std::vector<CliffElt> gs;
    std::vector<Multivector> ls;
    for (const auto& m : alpha.mats) {
        auto [g, l] = quadraticLift(m, n);
        gs.push_back(g);
        ls.push_back(l);
    }
    return SpinData(alpha.alg, n, alpha, std::move(gs), std::move(ls));
}

std::vector<std::vector<Rat>> randomOrthogonal(int d, std::mt19937& rng) {
    std::vector<std::vector<Rat>> o(d, std::vector<Rat>(d, Rat(0)));
    for (int i = 0; i < d; ++i) o[i][i] = 1;
    if (d == 1) {
        if (rng() & 1u) o[0][0] = -1;
        return o;
    }
    static const std::pair<Rat, Rat> pyth[] = {
        {Rat(3, 5), Rat(4, 5)},    {Rat(5, 13), Rat(12, 13)}, {Rat(8, 17), Rat(15, 17)},
        {Rat(7, 25), Rat(24, 25)}, {Rat(20, 29), Rat(21, 29)}, {Rat(12, 37), Rat(35, 37)}};
    std::uniform_int_distribution<int> pick(0, 5), vertex(0, d - 1);
    std::uniform_int_distribution<int> nrounds(2, 4);
    int rounds = nrounds(rng);
    for (int t = 0; t < rounds; ++t) {
        int p = vertex(rng), q = vertex(rng);
        if (p == q) continue;
        const auto& [c, s] = pyth[pick(rng)];
        for (int r = 0; r < d; ++r) {
            Rat a = o[r][p], b = o[r][q];
            o[r][p] = a * c + b * s;
            o[r][q] = b * c - a * s;
        }
    }
    return o;
}

}  // namespace

MixedElt::MixedElt(const LieAlg& g, int ambient) : algebra(g), n(ambient) {
    components.assign(g.dim(), Multivector(ambient));
}

MixedElt MixedElt::scaled(const Scalar& c) const {
    MixedElt out = *this;
    for (auto& m : out.components) m = c * m;
    return out;
}

std::vector<std::string> MixedElt::validate() const {
    std::vector<std::string> out;
    for (size_t i = 0; i < components.size(); ++i) {
        const Multivector& m = components[i];
        if (m.hasConstantPart() || !m.evenDegreesOnly()) {
            std::ostringstream os;
            os << "component " << i + 1 << " has a constant or odd-degree part";
            out.push_back(os.str());
        }
    }
    return out;
}

bool operator==(const MixedElt& a, const MixedElt& b) {
    return a.algebra == b.algebra && a.n == b.n && a.components == b.components;
}

SpinData::SpinData(const LieAlg& g, int ambient, Rep a, std::vector<CliffElt> gm,
                   std::vector<Multivector> lm)
    : algebra(g), n(ambient), alpha(std::move(a)), gamma(std::move(gm)), lambda(std::move(lm)) {}

MixedElt SpinData::mixedLambda() const {
    MixedElt out(algebra, n);
    out.components = lambda;
    return out;
}

SpinData buildSpinData(const Rep& alpha) {
    int n = alpha.matDim;
    for (const auto& m : alpha.mats)
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                const GRat& e = m.at(r, c);
                if (e.im != 0 || !(e == -m.at(c, r)))
                    throw std::invalid_argument("alpha must land in so(n)");
            }
    return assemble(alpha);
}

SpinData buildSpinDataUnchecked(const Rep& alpha) { return assemble(alpha); }

std::vector<std::string> checkSpinData(const SpinData& sd) {
    std::vector<std::string> out;
    int d = sd.algebra.dim(), n = sd.n;
    for (int i = 0; i < d; ++i) {
        auto [g, l] = quadraticLift(sd.alpha.mats[i], n);
        if (!(g == sd.gamma[i]))
            out.push_back("quadratic lift mismatch at basis " + std::to_string(i + 1));
        if (!(chevalley(sd.gamma[i]) == sd.lambda[i]))
            out.push_back("symbol mismatch at basis " + std::to_string(i + 1));
        for (int j = 0; j < n; ++j) {
            CliffElt ej = CliffElt::generator(n, j + 1);
            CliffElt lhs = sd.gamma[i] * ej - ej * sd.gamma[i];
            CliffElt rhs(n);
            for (int k = 0; k < n; ++k) {
                GRat e = sd.alpha.mats[i].at(k, j);
                if (!e.isZero()) rhs += Scalar::fromGRat(e) * CliffElt::generator(n, k + 1);
            }
            if (!(lhs == rhs))
                out.push_back("commutation fails at basis " + std::to_string(i + 1) +
                              ", generator " + std::to_string(j + 1));
        }
    }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            CliffElt lhs = sd.gamma[i] * sd.gamma[j] - sd.gamma[j] * sd.gamma[i];
            CliffElt rhs(n);
            for (int k = 0; k < d; ++k) {
                const Rat& c = sd.algebra.structConst(i, j, k);
                if (c != 0) rhs += Scalar::fromRat(c) * sd.gamma[k];
            }
            if (!(lhs == rhs))
                out.push_back("homomorphism fails on pair (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ")");
        }
    return out;
}

bool isInfinitesimallyInvariant(const LieAlg& g, const Series& s) {
    int d = g.dim();
    if (s.dim() != d) throw std::invalid_argument("variable count mismatch");
    for (int i = 0; i < d; ++i) {
        Series acc(d, s.order());
        for (int k = 0; k < d; ++k) {
            Series dk = s.derivative(k);
            if (dk.isZero()) continue;
            for (int j = 0; j < d; ++j) {
                const Rat& c = g.structConst(i, j, k);
                if (c == 0) continue;
                acc += Scalar::fromRat(c) * (Series::variable(d, s.order(), j) * dk);
            }
        }
        if (!acc.isZero()) return false;
    }
    return true;
}

InvariantSeries makeInvariant(const LieAlg& g, const Series& s) {
    return {s, isInfinitesimallyInvariant(g, s)};
}

Multivector evalAtMixed(const Series& phi, const MixedElt& eta) {
    if (phi.dim() != static_cast<int>(eta.components.size()))
        throw std::invalid_argument("variable count mismatch");
    auto bad = eta.validate();
    if (!bad.empty()) throw std::invalid_argument(bad.front());
    Multivector out(eta.n);
    for (const auto& [e, c] : phi.coeffs()) {
        Multivector term = Multivector::unit(eta.n);
        bool dead = false;
        for (int v = 0; v < phi.dim() && !dead; ++v)
            for (int p = 0; p < e[v]; ++p) {
                term = wedge(term, eta.components[v]);
                if (term.isZero()) {
                    dead = true;
                    break;
                }
            }
        if (!dead) out += c * term;
    }
    return out;
}

InvariantSeries jAlgebraSeries(const LieAlg& g, int order) {
    SeriesMatrix prof = g.adSymbolic(order).applyUnivariate(taylorSinhHalfOverHalf(order));
    Series s = seriesSqrt(prof.det());
    return {s, isInfinitesimallyInvariant(g, s)};
}

InvariantSeries jIsotropySeries(const Rep& alpha, int order) {
    SeriesMatrix sym = symbolicMatrix(alpha.mats, alpha.alg.dim(), order);
    Series s = seriesSqrt(sym.applyUnivariate(taylorSinhHalfOverHalf(order)).det());
    return {s, isInfinitesimallyInvariant(alpha.alg, s)};
}

InvariantSeries chernSeries(const Rep& tau, int order) {
    SeriesMatrix sym = symbolicMatrix(tau.mats, tau.alg.dim(), order);
    Series s = sym.applyUnivariate(taylorExp(order, -1)).trace();
    return {s, isInfinitesimallyInvariant(tau.alg, s)};
}

Scalar cwPair(const InvariantSeries& phi, const MixedElt& curvature, const FundClass& fc) {
    if (fc.n != curvature.n) throw std::invalid_argument("ambient dimension mismatch");
    // 1/(2 pi i) = (-i/2) pi^-1
    Scalar inv2pii = Scalar::monomial(GRat(Rat(0), Rat(-1, 2)), -1);
    Multivector value = evalAtMixed(phi.s, curvature.scaled(inv2pii));
    unsigned top = (1u << curvature.n) - 1u;
    return fc.volume * value.coefficient(top) * Scalar::fromInt(fc.orientation);
}

GSpinReport checkGSpin(const Rep& nu, const std::vector<GMat>& cliffordAction, const Rep& alpha) {
    int d = alpha.alg.dim();
    int n = alpha.matDim;
    if (static_cast<int>(cliffordAction.size()) != n)
        throw std::invalid_argument("one module matrix per generator required");
    int e = nu.matDim;
    GSpinReport rep;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) {
            GMat lhs = commutator(nu.mats[i], cliffordAction[j]);
            GMat rhs(e, e);
            for (int k = 0; k < n; ++k) {
                GRat a = alpha.mats[i].at(k, j);
                if (!a.isZero()) rhs = rhs + cliffordAction[k].scaled(a);
            }
            if (!(lhs == rhs))
                rep.violations.push_back("commutation fails at basis " + std::to_string(i + 1) +
                                         ", generator " + std::to_string(j + 1));
        }
    for (int i = 0; i < d; ++i) {
        GMat gammaMod(e, e);
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                GRat a = alpha.mats[i].at(j, k);
                if (a.isZero()) continue;
                gammaMod = gammaMod + (cliffordAction[j] * cliffordAction[k])
                                          .scaled(a * GRat(Rat(-1, 2)));
            }
        GMat tau = nu.mats[i] - gammaMod;
        for (int j = 0; j < n; ++j)
            if (!commutator(tau, cliffordAction[j]).isZero())
                rep.violations.push_back("remainder at basis " + std::to_string(i + 1) +
                                         " fails to commute with generator " +
                                         std::to_string(j + 1));
        rep.tau.push_back(tau);
    }
    return rep;
}

std::vector<std::string> checkIdentities(const SpinData& sd, int order, std::mt19937& rng) {
    std::vector<std::string> out;
    int d = sd.algebra.dim(), n = sd.n;
    Multivector squares(n);
    for (const auto& l : sd.lambda) squares += wedge(l, l);
    if (!squares.isZero()) out.push_back("sum of wedge squares does not vanish");

    InvariantSeries jg = jAlgebraSeries(sd.algebra, order);
    Multivector val = evalAtMixed(jg.s, sd.mixedLambda().scaled(Scalar::fromInt(-2)));
    if (!(val == Multivector::unit(n)))
        out.push_back("profile series away from the unit at -2x the canonical element");

    std::vector<std::vector<Rat>> o = randomOrthogonal(d, rng);
    std::vector<GMat> mats;
    for (int a = 0; a < d; ++a) {
        GMat acc(n, n);
        for (int b = 0; b < d; ++b)
            if (o[b][a] != 0) acc = acc + sd.alpha.mats[b].scaled(GRat(o[b][a]));
        mats.push_back(acc);
    }
    SpinData sd2 = buildSpinDataUnchecked(Rep(sd.algebra.changedBasis(o), mats));
    MixedElt back(sd.algebra, n);
    for (int b = 0; b < d; ++b) {
        Multivector acc(n);
        for (int a = 0; a < d; ++a)
            if (o[b][a] != 0) acc += Scalar::fromRat(o[b][a]) * sd2.lambda[a];
        back.components[b] = acc;
    }
    if (!(back == sd.mixedLambda()))
        out.push_back("canonical element changed under an orthogonal basis change");
    return out;
}

SpinData rotationSpinFixture() {
    GMat a(2, 2);
    a.at(0, 1) = GRat(-1L);
    a.at(1, 0) = GRat(1L);
    return buildSpinData(Rep(LieAlg::abelian(1), {a}));
}

SpinData adjointSpinFixture() { return buildSpinData(adjointRep(LieAlg::su2())); }

}  // namespace cliffweil
