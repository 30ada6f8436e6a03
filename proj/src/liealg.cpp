#include "cliffweil/liealg.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace cliffweil {

namespace {

// Exact inverse via Gauss-Jordan; throws on a singular input.
std::vector<std::vector<Rat>> ratInverse(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::invalid_argument("basis change is singular");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Rat p = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace

LieAlg::LieAlg(int dim) : d_(dim) {
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
    c_.assign(static_cast<size_t>(dim) * dim * dim, Rat(0));
}

const Rat& LieAlg::structConst(int i, int j, int k) const {
    return c_[(static_cast<size_t>(i) * d_ + j) * d_ + k];
}

void LieAlg::setStructConstRaw(int i, int j, int k, const Rat& v) {
    c_[(static_cast<size_t>(i) * d_ + j) * d_ + k] = v;
}

void LieAlg::setStructConst(int i, int j, int k, const Rat& v) {
    setStructConstRaw(i, j, k, v);
    setStructConstRaw(j, i, k, -v);
}

std::vector<Rat> LieAlg::bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    if (static_cast<int>(x.size()) != d_ || static_cast<int>(y.size()) != d_)
        throw std::invalid_argument("coefficient vector size mismatch");
    std::vector<Rat> out(d_, Rat(0));
    for (int i = 0; i < d_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < d_; ++j) {
            if (y[j] == 0) continue;
            for (int k = 0; k < d_; ++k) out[k] += x[i] * y[j] * structConst(i, j, k);
        }
    }
    return out;
}

GMat LieAlg::adMatrix(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != d_) throw std::invalid_argument("coefficient vector size mismatch");
    GMat m(d_, d_);
    for (int k = 0; k < d_; ++k)
        for (int j = 0; j < d_; ++j) {
            Rat acc(0);
            for (int i = 0; i < d_; ++i) acc += x[i] * structConst(i, j, k);
            m.at(k, j) = GRat(acc);
        }
    return m;
}

SeriesMatrix LieAlg::adSymbolic(int order) const {
    SeriesMatrix m(d_, d_, order);
    for (int k = 0; k < d_; ++k)
        for (int j = 0; j < d_; ++j) {
            Series s(d_, order);
            for (int i = 0; i < d_; ++i) {
                const Rat& c = structConst(i, j, k);
                if (c == 0) continue;
                std::vector<int> e(d_, 0);
                e[i] = 1;
                s.setCoefficient(e, s.coefficient(e) + Scalar::fromRat(c));
            }
            m.at(k, j) = s;
        }
    return m;
}

LieAlg LieAlg::changedBasis(const std::vector<std::vector<Rat>>& basis) const {
    if (static_cast<int>(basis.size()) != d_) throw std::invalid_argument("basis size mismatch");
    std::vector<std::vector<Rat>> inv = ratInverse(basis);
    LieAlg out(d_);
    for (int a = 0; a < d_; ++a) {
        std::vector<Rat> ya(d_), yb(d_);
        for (int r = 0; r < d_; ++r) ya[r] = basis[r][a];
        for (int b = 0; b < d_; ++b) {
            for (int r = 0; r < d_; ++r) yb[r] = basis[r][b];
            std::vector<Rat> br = bracket(ya, yb);
            // coefficients of [Y_a, Y_b] on the new basis
            for (int k = 0; k < d_; ++k) {
                Rat acc(0);
                for (int r = 0; r < d_; ++r) acc += inv[k][r] * br[r];
                out.setStructConstRaw(a, b, k, acc);
            }
        }
    }
    return out;
}

LieAlg LieAlg::orthonormalized(const std::vector<std::vector<Rat>>& gram) const {
    if (static_cast<int>(gram.size()) != d_) throw std::invalid_argument("gram size mismatch");
    auto inner = [&](const std::vector<Rat>& u, const std::vector<Rat>& v) {
        Rat acc(0);
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j) acc += u[i] * gram[i][j] * v[j];
        return acc;
    };
    std::vector<std::vector<Rat>> basis;  // orthonormal vectors in old coordinates
    for (int a = 0; a < d_; ++a) {
        std::vector<Rat> v(d_, Rat(0));
        v[a] = 1;
        for (const auto& u : basis) {
            Rat proj = inner(v, u);
            for (int i = 0; i < d_; ++i) v[i] -= proj * u[i];
        }
        Rat nsq = inner(v, v);
        if (nsq <= 0) throw std::invalid_argument("inner product not positive definite");
        Rat norm;
        if (!ratSqrt(nsq, norm))
            throw std::invalid_argument("inner product not rationally orthonormalizable");
        for (int i = 0; i < d_; ++i) v[i] /= norm;
        basis.push_back(v);
    }
    // columns of the change matrix are the new vectors
    std::vector<std::vector<Rat>> cols(d_, std::vector<Rat>(d_));
    for (int r = 0; r < d_; ++r)
        for (int a = 0; a < d_; ++a) cols[r][a] = basis[a][r];
    return changedBasis(cols);
}

LieAlg LieAlg::abelian(int d) { return LieAlg(d); }

LieAlg LieAlg::su2() {
    LieAlg g(3);
    g.setStructConst(0, 1, 2, Rat(1));
    g.setStructConst(1, 2, 0, Rat(1));
    g.setStructConst(2, 0, 1, Rat(1));
    return g;
}

LieAlg LieAlg::so3() { return su2(); }

LieAlg LieAlg::son(int n) {
    if (n < 2) throw std::invalid_argument("son requires n >= 2");
    // basis L_{ab} = E_ab - E_ba for a < b, ordered lexicographically;
    // orthonormal for tr(X^T Y)/2
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
    int d = static_cast<int>(pairs.size());
    LieAlg g(d);
    auto indexOf = [&](int a, int b, int& sign) {
        sign = 1;
        if (a > b) {
            std::swap(a, b);
            sign = -1;
        }
        for (int t = 0; t < d; ++t)
            if (pairs[t] == std::make_pair(a, b)) return t;
        return -1;
    };
    for (int p = 0; p < d; ++p) {
        auto [a, b] = pairs[p];
        for (int q = 0; q < d; ++q) {
            auto [c, e] = pairs[q];
            // [L_ab, L_ce] = d_bc L_ae - d_ac L_be - d_be L_ac + d_ae L_bc
            auto addTerm = [&](int delta, int u, int v, int s0) {
                if (!delta || u == v) return;
                int sign;
                int k = indexOf(u, v, sign);
                g.setStructConstRaw(p, q, k, g.structConst(p, q, k) + Rat(s0 * sign));
            };
            addTerm(b == c, a, e, 1);
            addTerm(a == c, b, e, -1);
            addTerm(b == e, a, c, -1);
            addTerm(a == e, b, c, 1);
        }
    }
    return g;
}

LieAlg LieAlg::byName(const std::string& name) {
    if (name == "su2") return su2();
    if (name == "so3") return so3();
    auto paren = [&](const std::string& head, int& arg) {
        if (name.size() > head.size() + 2 && name.compare(0, head.size() + 1, head + "(") == 0 &&
            name.back() == ')') {
            arg = std::stoi(name.substr(head.size() + 1, name.size() - head.size() - 2));
            return true;
        }
        return false;
    };
    int arg = 0;
    if (paren("abelian", arg)) return abelian(arg);
    if (paren("son", arg)) return son(arg);
    throw std::invalid_argument("unknown algebra name");
}

bool operator==(const LieAlg& a, const LieAlg& b) {
    if (a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (int k = 0; k < a.dim(); ++k)
                if (a.structConst(i, j, k) != b.structConst(i, j, k)) return false;
    return true;
}

std::vector<std::string> validateAlg(const LieAlg& g) {
    std::vector<std::string> out;
    int d = g.dim();
    auto slot = [](int i, int j, int k) {
        std::ostringstream os;
        os << "(" << i + 1 << "," << j + 1 << "," << k + 1 << ")";
        return os.str();
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                if (g.structConst(i, j, k) != -g.structConst(j, i, k))
                    out.push_back("antisymmetry violated at " + slot(i, j, k));
                if (g.structConst(i, j, k) != -g.structConst(i, k, j))
                    out.push_back("inner-product invariance violated at " + slot(i, j, k));
            }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                // [X_i,[X_j,X_k]] + [X_j,[X_k,X_i]] + [X_k,[X_i,X_j]] = 0
                for (int m = 0; m < d; ++m) {
                    Rat acc(0);
                    for (int l = 0; l < d; ++l) {
                        acc += g.structConst(j, k, l) * g.structConst(i, l, m);
                        acc += g.structConst(k, i, l) * g.structConst(j, l, m);
                        acc += g.structConst(i, j, l) * g.structConst(k, l, m);
                    }
                    if (acc != 0) {
                        out.push_back("Jacobi identity violated at " + slot(i, j, k));
                        break;
                    }
                }
            }
    return out;
}

Rep::Rep(const LieAlg& g, std::vector<GMat> m) : alg(g), mats(std::move(m)) {
    if (static_cast<int>(mats.size()) != g.dim())
        throw std::invalid_argument("one matrix per basis vector required");
    matDim = mats.empty() ? 0 : mats[0].rows();
    for (const auto& mat : mats)
        if (mat.rows() != matDim || mat.cols() != matDim)
            throw std::invalid_argument("representation matrices must be square of equal size");
}

std::vector<std::string> validateRep(const Rep& r) {
    std::vector<std::string> out;
    int d = r.alg.dim();
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            GMat lhs = commutator(r.mats[i], r.mats[j]);
            GMat rhs(r.matDim, r.matDim);
            for (int k = 0; k < d; ++k) {
                const Rat& c = r.alg.structConst(i, j, k);
                if (c != 0) rhs = rhs + r.mats[k].scaled(GRat(c));
            }
            if (!(lhs == rhs)) {
                std::ostringstream os;
                os << "homomorphism fails on pair (" << i + 1 << "," << j + 1 << ")";
                out.push_back(os.str());
            }
        }
    return out;
}

Rep adjointRep(const LieAlg& g) {
    std::vector<GMat> mats;
    for (int i = 0; i < g.dim(); ++i) {
        std::vector<Rat> x(g.dim(), Rat(0));
        x[i] = 1;
        mats.push_back(g.adMatrix(x));
    }
    return Rep(g, std::move(mats));
}

Rep su2Irrep(int twoJ) {
    if (twoJ < 0) throw std::invalid_argument("highest weight must be nonnegative");
    int dim = twoJ + 1;
    // ladder basis u_0..u_twoJ: raise(u_k) = (twoJ-k+1) u_{k-1}, lower(u_k) = (k+1) u_{k+1}
    GMat raise(dim, dim), lower(dim, dim), diag(dim, dim);
    for (int k = 1; k < dim; ++k) raise.at(k - 1, k) = GRat(Rat(twoJ - k + 1));
    for (int k = 0; k + 1 < dim; ++k) lower.at(k + 1, k) = GRat(Rat(k + 1));
    for (int k = 0; k < dim; ++k) {
        Rat half(twoJ - 2 * k, 2);
        half.canonicalize();
        diag.at(k, k) = GRat(half);
    }
    GRat mi = -GRat::i();
    GRat half(Rat(1, 2));
    std::vector<GMat> mats(3, GMat(dim, dim));
    mats[0] = (raise + lower).scaled(mi * half);          // -i(J+ + J-)/2
    mats[1] = (raise - lower).scaled(-GRat(Rat(1, 2)));   // -(J+ - J-)/2
    mats[2] = diag.scaled(mi);                            // -i J3
    return Rep(LieAlg::su2(), std::move(mats));
}

Rat su2CasimirEigen(int twoJ) {
    Rep r = su2Irrep(twoJ);
    GMat acc(r.matDim, r.matDim);
    for (const auto& m : r.mats) acc = acc + m * m;
    GRat c = acc.at(0, 0);
    if (!(acc == GMat::identity(r.matDim).scaled(c)))
        throw std::runtime_error("quadratic invariant is not scalar");
    if (c.im != 0) throw std::runtime_error("quadratic invariant is not real");
    return c.re;
}

LieAlg parseLieAlg(std::istream& in) {
    std::string line;
    int dim = -1;
    LieAlg g(1);
    std::vector<bool> seen;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        std::ostringstream err;
        err << "bad algebra line " << lineNo;
        if (head == "dim") {
            if (dim != -1 || !(ls >> dim) || dim < 1) throw std::invalid_argument(err.str());
            g = LieAlg(dim);
            seen.assign(static_cast<size_t>(dim) * dim * dim, false);
        } else if (head == "c") {
            int i, j, k;
            std::string value;
            if (dim == -1 || !(ls >> i >> j >> k >> value)) throw std::invalid_argument(err.str());
            if (i < 1 || j < 1 || k < 1 || i > dim || j > dim || k > dim)
                throw std::invalid_argument(err.str());
            Rat v;
            try {
                v = Rat(value);
                v.canonicalize();
            } catch (...) {
                throw std::invalid_argument(err.str());
            }
            size_t s1 = (static_cast<size_t>(i - 1) * dim + (j - 1)) * dim + (k - 1);
            size_t s2 = (static_cast<size_t>(j - 1) * dim + (i - 1)) * dim + (k - 1);
            if (seen[s1] || seen[s2])
                throw std::invalid_argument("conflicting structure constant entries");
            seen[s1] = seen[s2] = true;
            g.setStructConst(i - 1, j - 1, k - 1, v);
        } else {
            throw std::invalid_argument(err.str());
        }
    }
    if (dim == -1) throw std::invalid_argument("algebra file has no dim line");
    return g;
}

std::string writeLieAlg(const LieAlg& g) {
    std::ostringstream os;
    os << "dim " << g.dim() << "\n";
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j)
            for (int k = 0; k < g.dim(); ++k) {
                const Rat& c = g.structConst(i, j, k);
                if (c != 0) os << "c " << i + 1 << " " << j + 1 << " " << k + 1 << " "
                               << ratToString(c) << "\n";
            }
    return os.str();
}

}  // namespace cliffweil
