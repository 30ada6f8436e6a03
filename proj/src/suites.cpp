#include "cliffweil/suites.hpp"

#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cliffweil/clifford.hpp"
#include "cliffweil/duflo.hpp"
#include "cliffweil/gaussmoment.hpp"
#include "cliffweil/indexlab.hpp"
#include "cliffweil/liealg.hpp"
#include "cliffweil/weil.hpp"

namespace cliffweil {

namespace {

GRat randomGRat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    Rat re(num(rng), den(rng));
    re.canonicalize();
    Rat im(num(rng), den(rng));
    im.canonicalize();
    return GRat(re, im);
}

CliffElt randomClifford(int n, std::mt19937& rng) {
    CliffElt c(n);
    std::uniform_int_distribution<int> keep(0, 1);
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (keep(rng)) c.addTerm(mask, Scalar::fromGRat(randomGRat(rng)));
    return c;
}

void exponentTuples(int dim, int maxDeg, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == dim) {
        out.push_back(cur);
        return;
    }
    int used = 0;
    for (int e : cur) used += e;
    for (int e = 0; e + used <= maxDeg; ++e) {
        cur.push_back(e);
        exponentTuples(dim, maxDeg, cur, out);
        cur.pop_back();
    }
}

Series randomPoly(int dim, int maxDeg, int order, std::mt19937& rng) {
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    exponentTuples(dim, maxDeg, cur, tuples);
    std::uniform_int_distribution<int> keep(0, 1);
    Series s(dim, order);
    for (const auto& e : tuples)
        if (keep(rng)) s.setCoefficient(e, Scalar::fromGRat(randomGRat(rng)));
    return s;
}

CheckResult makeCheck(const std::string& id, bool ok, const std::string& detail) {
    CheckResult c;
    c.id = id;
    c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    c.detail = detail;
    return c;
}

std::string polyString(const std::vector<Rat>& q) {
    std::ostringstream os;
    os << "Q(m) = ";
    for (size_t k = 0; k < q.size(); ++k) {
        if (k) os << " + ";
        os << ratToString(q[k]);
        if (k == 1) os << "*m";
        if (k > 1) os << "*m^" << k;
    }
    return os.str();
}

}  // namespace

SuiteReport runAlgebraSuite(const Config& cfg) {
    SuiteReport r{"algebra", {}};
    std::mt19937 rng(static_cast<unsigned>(cfg.seed));

    {
        int total = 0, bad = 0;
        std::string firstBad;
        for (int n : {2, 4}) {
            SpinorRep sp = SpinorRep::build(n);
            CliffElt prev = CliffElt::unit(n);
            for (int i = 0; i < 100; ++i) {
                CliffElt a = randomClifford(n, rng);
                ++total;
                bool okStr =
                    berezinSupertrace(a) == sp.supertrace(sp.represent(a));
                bool okMul =
                    sp.represent(prev * a) == sp.represent(prev) * sp.represent(a);
                if (!okStr || !okMul) {
                    ++bad;
                    if (firstBad.empty())
                        firstBad = "element " + std::to_string(i) + " at n=" +
                                   std::to_string(n);
                }
                prev = a;
            }
        }
        CheckResult c = makeCheck(
            "clifford-matrix-agreement", bad == 0,
            std::to_string(total) +
                " random elements: products and supertraces vs the matrix model");
        if (bad) c.detail += "; first mismatch: " + firstBad;
        r.checks.push_back(c);
    }

    {
        int bad = 0;
        for (int i = 0; i < 100; ++i) {
            if (i % 2 == 0) {
                CliffElt a = randomClifford(4, rng);
                if (chevalleyInv(chevalley(a)) != a) ++bad;
            } else {
                Multivector m(4);
                std::uniform_int_distribution<int> keep(0, 1);
                for (unsigned mask = 0; mask < 16u; ++mask)
                    if (keep(rng)) m.addTerm(mask, Scalar::fromGRat(randomGRat(rng)));
                if (chevalley(chevalleyInv(m)) != m) ++bad;
            }
        }
        // generator pairs land on the degree-two blades
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) {
                Multivector img = chevalley(CliffElt::generator(4, i) *
                                            CliffElt::generator(4, j));
                if (img != wedge(Multivector::generator(4, i),
                                 Multivector::generator(4, j)))
                    ++bad;
            }
        r.checks.push_back(makeCheck(
            "symbol-round-trip", bad == 0,
            "100 random round trips plus the degree-two image of generator pairs"));
    }

    {
        std::vector<std::string> v;
        for (const auto& s : validateAlg(LieAlg::su2())) v.push_back(s);
        for (const auto& s : validateAlg(LieAlg::son(4))) v.push_back(s);
        for (const auto& s : validateRep(adjointRep(LieAlg::su2()))) v.push_back(s);
        CheckResult c = makeCheck("builtin-tables", v.empty(),
                                  "antisymmetry, Jacobi, invariance, adjoint "
                                  "homomorphism on the shipped algebras");
        for (const auto& s : v) c.values.push_back(s);
        r.checks.push_back(c);
    }

    if (!cfg.algebraFile.empty()) {
        CheckResult c;
        c.id = "algebra-file";
        c.detail = "structure constants from " + cfg.algebraFile;
        try {
            std::ifstream in(cfg.algebraFile);
            if (!in)
                throw std::invalid_argument("cannot open algebra file: " +
                                            cfg.algebraFile);
            LieAlg g = parseLieAlg(in);
            std::vector<std::string> v = validateAlg(g);
            c.status = v.empty() ? CheckStatus::Pass : CheckStatus::Fail;
            for (const auto& s : v) c.values.push_back(s);
        } catch (const std::exception& e) {
            c.status = CheckStatus::Fail;
            c.values.push_back(e.what());
        }
        r.checks.push_back(c);
    }
    return r;
}

SuiteReport runWeilSuite(const Config& cfg) {
    SuiteReport r{"weil", {}};
    std::mt19937 rng(static_cast<unsigned>(cfg.seed) + 1);
    struct Fixture {
        std::string name;
        SpinData sd;
    };
    std::vector<Fixture> fixtures = {{"rotation", rotationSpinFixture()},
                                     {"adjoint", adjointSpinFixture()}};
    for (auto& f : fixtures) {
        {
            std::vector<std::string> v = checkSpinData(f.sd);
            CheckResult c = makeCheck("spin-data-" + f.name, v.empty(),
                                      "lift, commutation, homomorphism, symbol");
            for (const auto& s : v) c.values.push_back(s);
            r.checks.push_back(c);
        }
        {
            // direct wedge-square sum
            Multivector sum(f.sd.n);
            for (const auto& l : f.sd.lambda) sum += wedge(l, l);
            r.checks.push_back(makeCheck("wedge-square-sum-" + f.name,
                                         sum.isZero(),
                                         "sum of squared symbols vanishes"));
        }
        {
            // profile series at -2x the canonical element is the unit
            Series j = jAlgebraSeries(f.sd.algebra, cfg.order).s;
            Multivector val = evalAtMixed(
                j, f.sd.mixedLambda().scaled(Scalar::fromInt(-2)));
            r.checks.push_back(makeCheck(
                "profile-at-canonical-" + f.name,
                val == Multivector::unit(f.sd.n),
                "profile series is the unit at -2x the canonical element"));
        }
        {
            std::vector<std::string> v = checkIdentities(f.sd, cfg.order, rng);
            CheckResult c =
                makeCheck("identities-" + f.name, v.empty(),
                          "wedge squares, profile value, basis independence");
            for (const auto& s : v) c.values.push_back(s);
            r.checks.push_back(c);
        }
    }
    return r;
}

SuiteReport runGaussSuite(const Config& cfg) {
    SuiteReport r{"gauss", {}};
    std::mt19937 rng(static_cast<unsigned>(cfg.seed) + 2);

    {
        Moment m2 = gaussianMoment({2});
        Moment m4 = gaussianMoment({4});
        Moment m22 = gaussianMoment({2, 2});
        Moment modd = gaussianMoment({1, 2});
        bool ok = m2.value == Scalar::fromInt(2) && m2.tPower == 1 &&
                  m4.value == Scalar::fromInt(12) && m4.tPower == 2 &&
                  m22.value == Scalar::fromInt(4) && m22.tPower == 2 &&
                  modd.value.isZero();
        CheckResult c = makeCheck("closed-form-moments", ok,
                                  "double-factorial values at low exponents");
        c.values = {m2.value.str(), m4.value.str(), m22.value.str()};
        r.checks.push_back(c);
    }

    {
        SpinData sd = adjointSpinFixture();
        int bad = 0;
        std::string firstBad;
        for (int i = 0; i < 20; ++i) {
            Series phi = randomPoly(3, 4, cfg.order, rng);
            std::vector<std::string> v = checkMomentExpansion(phi, sd);
            if (!v.empty()) {
                ++bad;
                if (firstBad.empty()) firstBad = v.front();
            }
        }
        CheckResult c = makeCheck(
            "moment-expansion-random", bad == 0,
            "20 random polynomials: containment and top-degree identity");
        if (bad) c.values.push_back(firstBad);
        r.checks.push_back(c);
    }
    return r;
}

SuiteReport runDufloSuite(const Config& cfg) {
    SuiteReport r{"duflo", {}};
    std::mt19937 rng(static_cast<unsigned>(cfg.seed) + 3);
    LieAlg g = LieAlg::su2();

    {
        int bad = 0;
        std::vector<std::vector<int>> tuples;
        std::vector<int> cur;
        exponentTuples(3, 3, cur, tuples);
        std::uniform_int_distribution<int> keep(0, 1);
        for (int i = 0; i < 20; ++i) {
            Dist0 u(g);
            for (const auto& e : tuples)
                if (keep(rng)) u.addTerm(e, Scalar::fromGRat(randomGRat(rng)));
            Series phi = randomPoly(3, 4, cfg.order, rng);
            Series j = jAlgebraSeries(g, cfg.order).s;
            bool front = pairG(duflo(u), phi) == pair0(u, j * phi);
            bool back = pair0(dufloInv(duflo(u)), phi) == pair0(u, phi);
            if (!front || !back) ++bad;
        }
        r.checks.push_back(makeCheck(
            "transport-round-trip", bad == 0,
            "20 random distributions: defining pairing and exact inverse"));
    }

    {
        HarishChandraReport hc = harishChandraCheck(5, 12);
        bool ok = hc.shiftConstant && hc.quadraticFit;
        CheckResult c = makeCheck(
            "eigenvalue-shift", ok,
            "character pairings follow the shifted quadratic pattern");
        c.values.push_back("shift = " + ratToString(hc.shift));
        for (const auto& s : hc.scaled) c.values.push_back(ratToString(s));
        c.residuals.push_back(0.0);
        r.checks.push_back(c);
    }
    return r;
}

SuiteReport runIndexSuite(const Config& cfg) {
    SuiteReport r{"index", {}};
    for (int w : cfg.twists) {
        std::string tag = "w" + std::to_string(w);
        HomogModel model = buildModel(w, cfg.cutoff, cfg.order);
        CharSum cs = distributionalIndex(model, cfg.cutoff);
        {
            bool ok = cs.fitOk && cs.fitResidual == 0.0 && cs.q.size() <= 2;
            CheckResult c = makeCheck(
                "fit-" + tag, ok,
                "integer coefficients follow an exact low-degree pattern");
            c.values.push_back(polyString(cs.q));
            c.residuals.push_back(cs.fitResidual);
            r.checks.push_back(c);
        }
        {
            CharSum big = distributionalIndex(model, cfg.stabilityCutoff);
            bool ok = true;
            for (const auto& [m, c] : cs.coeff) {
                auto it = big.coeff.find(m);
                if (it == big.coeff.end() || it->second != c) ok = false;
            }
            r.checks.push_back(makeCheck(
                "stability-" + tag, ok,
                "windowed coefficients unchanged at block range " +
                    std::to_string(cfg.stabilityCutoff)));
        }
        {
            int bad = 0;
            std::string firstBad;
            for (int tj = 0; tj <= std::min(8, cfg.cutoff); ++tj) {
                Block b = blockDirac(model, tj);
                std::vector<std::string> v = checkBlock(model, b);
                if (!v.empty()) {
                    ++bad;
                    if (firstBad.empty()) firstBad = v.front();
                }
            }
            CheckResult c = makeCheck(
                "blocks-" + tag, bad == 0,
                "grading parity, weight commutation, graded kernel count");
            if (bad) c.values.push_back(firstBad);
            r.checks.push_back(c);
        }
    }
    return r;
}

SuiteReport runTheoremSuite(const Config& cfg) {
    SuiteReport r{"theorem", {}};
    for (int w : cfg.twists) {
        HomogModel model = buildModel(w, cfg.cutoff, cfg.order);
        std::vector<Series> phis;
        for (const auto& coeffs : cfg.phis)
            phis.push_back(phiFromCoeffs(coeffs, cfg.order));
        std::vector<TheoremCase> cases = theoremCheck(model, phis);
        for (size_t i = 0; i < cases.size(); ++i) {
            CheckResult c = makeCheck(
                "w" + std::to_string(w) + "-phi" + std::to_string(i),
                cases[i].equal, "spectral pairing equals curvature pairing");
            c.values.push_back("lhs = " + cases[i].lhs.str());
            c.values.push_back("rhs = " + cases[i].rhs.str());
            r.checks.push_back(c);
        }
    }
    return r;
}

SuiteReport runHeatSuite(const Config& cfg) {
    SuiteReport r{"heat", {}};
    HomogModel model = buildModel(cfg.heatTwist, cfg.cutoff, cfg.order);
    CharSum cs = distributionalIndex(model, cfg.cutoff);
    for (int m = -cfg.heatWeightMax; m <= cfg.heatWeightMax; ++m) {
        HeatCheck hc = heatCheck(model, cs, m, cfg.spectralCutoff, cfg.tGrid,
                                 cfg.tolerance);
        CheckResult c;
        c.id = "m" + std::to_string(m);
        c.status = !hc.pass ? CheckStatus::Fail
                            : (hc.flagged ? CheckStatus::Flagged : CheckStatus::Pass);
        c.detail = "small-time extrapolation vs exact coefficient " +
                   std::to_string(static_cast<long>(hc.target));
        for (size_t i = 0; i < hc.tGrid.size(); ++i)
            c.residuals.push_back(hc.raw[i]);
        c.residuals.push_back(hc.expModel);
        c.residuals.push_back(hc.neville);
        c.residuals.push_back(hc.rate);
        c.residuals.push_back(hc.tailEstimate);
        r.checks.push_back(c);
    }
    return r;
}

SuiteReport runSensitivitySuite(const Config& cfg) {
    SuiteReport r{"sensitivity", {}};

    {
        ModelOptions opt;
        opt.flipGrading = true;
        HomogModel model = buildModel(1, 12, cfg.order, opt);
        std::vector<Series> phis = {phiFromCoeffs({1}, cfg.order),
                                    phiFromCoeffs({0, 1}, cfg.order)};
        std::vector<TheoremCase> cases = theoremCheck(model, phis);
        int caught = 0;
        std::string sample;
        for (const auto& tc : cases)
            if (!tc.equal) {
                ++caught;
                if (sample.empty())
                    sample = "lhs " + tc.lhs.str() + " vs rhs " + tc.rhs.str();
            }
        CheckResult c = makeCheck(
            "flipped-grading-detected", caught > 0,
            "sign-flipped grading must break the pairing identity");
        if (caught > 0) c.values.push_back(sample);
        r.checks.push_back(c);
    }

    {
        // rank-three table with one scaled bracket: Jacobi survives but the
        // declared inner product is no longer invariant
        LieAlg skew(3);
        skew.setStructConst(0, 1, 2, Rat(2));
        skew.setStructConst(1, 2, 0, Rat(1));
        skew.setStructConst(2, 0, 1, Rat(1));
        std::vector<std::string> v = validateAlg(skew);
        bool threw = false;
        std::string msg;
        try {
            buildSpinData(adjointRep(skew));
        } catch (const std::invalid_argument& e) {
            threw = true;
            msg = e.what();
        }
        CheckResult c = makeCheck(
            "skewed-structure-detected", !v.empty() && threw,
            "non-invariant table must fail validation and the lift guard");
        if (!v.empty()) c.values.push_back(v.front());
        if (threw) c.values.push_back(msg);
        r.checks.push_back(c);
    }

    {
        SpinData sd = adjointSpinFixture();
        sd.lambda[0] = Scalar::fromInt(2) * sd.lambda[0];
        sd.gamma[0] = chevalleyInv(sd.lambda[0]);
        std::vector<std::string> v1 = checkSpinData(sd);
        std::vector<std::string> v2 =
            checkMomentExpansion(Series::variable(3, cfg.order, 0), sd);
        CheckResult c = makeCheck(
            "corrupted-symbol-detected", !v1.empty() && !v2.empty(),
            "doubled symbol must fail the lift check and the expansion identity");
        if (!v1.empty()) c.values.push_back(v1.front());
        if (!v2.empty()) c.values.push_back(v2.front());
        r.checks.push_back(c);
    }
    return r;
}

std::vector<SuiteReport> runAll(const Config& cfg) {
    return {runAlgebraSuite(cfg), runWeilSuite(cfg),  runGaussSuite(cfg),
            runDufloSuite(cfg),   runIndexSuite(cfg), runTheoremSuite(cfg),
            runHeatSuite(cfg),    runSensitivitySuite(cfg)};
}

std::string indexTable(const Config& cfg, int w) {
    HomogModel model = buildModel(w, cfg.cutoff, cfg.order);
    CharSum cs = distributionalIndex(model, cfg.cutoff);
    std::ostringstream os;
    os << "index character coefficients, twist w = " << w << ", blocks 2j <= "
       << cfg.cutoff << "\n";
    os << "  weight m  coefficient\n";
    for (const auto& [m, c] : cs.coeff)
        os << std::setw(10) << m << std::setw(13) << c << "\n";
    os << "window |m| <= " << cs.window
       << ", boundary entries dropped: " << cs.dropped << "\n";
    os << "fit: "
       << (cs.fitOk ? polyString(cs.q)
                    : std::string("no exact low-degree pattern"))
       << ", residual " << cs.fitResidual << "\n";
    return os.str();
}

}  // namespace cliffweil
