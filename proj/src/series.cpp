#include "cliffweil/series.hpp"

#include <sstream>
#include <stdexcept>

namespace cliffweil {

int totalDegree(const std::vector<int>& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
}

Series::Series(int dim, int order) : dim_(dim), order_(order) {
    if (dim < 1) throw std::invalid_argument("series dimension must be positive");
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
}

Series Series::constant(int dim, int order, const Scalar& c) {
    Series s(dim, order);
    s.setCoefficient(std::vector<int>(dim, 0), c);
    return s;
}

Series Series::variable(int dim, int order, int index) {
    if (index < 0 || index >= dim) throw std::invalid_argument("variable index out of range");
    Series s(dim, order);
    std::vector<int> e(dim, 0);
    e[index] = 1;
    s.setCoefficient(e, Scalar::fromInt(1));
    return s;
}

Scalar Series::coefficient(const std::vector<int>& e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Scalar() : it->second;
}

void Series::setCoefficient(const std::vector<int>& e, const Scalar& v) {
    if (static_cast<int>(e.size()) != dim_) throw std::invalid_argument("exponent arity mismatch");
    for (int x : e)
        if (x < 0) throw std::invalid_argument("negative exponent");
    if (totalDegree(e) > order_) return;
    if (v.isZero())
        c_.erase(e);
    else
        c_[e] = v;
}

Scalar Series::constantTerm() const { return coefficient(std::vector<int>(dim_, 0)); }

Series Series::truncated(int newOrder) const {
    Series s(dim_, newOrder);
    for (const auto& [e, v] : c_) s.setCoefficient(e, v);
    return s;
}

Series Series::derivative(int var) const {
    if (var < 0 || var >= dim_) throw std::invalid_argument("variable index out of range");
    Series s(dim_, order_);
    for (const auto& [e, v] : c_) {
        if (e[var] == 0) continue;
        std::vector<int> d = e;
        d[var] -= 1;
        s.add(d, Scalar::fromInt(e[var]) * v);
    }
    return s;
}

void Series::add(const std::vector<int>& e, const Scalar& v) {
    if (totalDegree(e) > order_) return;
    Scalar nv = coefficient(e) + v;
    if (nv.isZero())
        c_.erase(e);
    else
        c_[e] = nv;
}

Series Series::operator-() const {
    Series s(dim_, order_);
    for (const auto& [e, v] : c_) s.c_[e] = -v;
    return s;
}

Series& Series::operator+=(const Series& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("series dimension mismatch");
    for (const auto& [e, v] : o.c_) add(e, v);
    return *this;
}

Series& Series::operator-=(const Series& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("series dimension mismatch");
    for (const auto& [e, v] : o.c_) add(e, -v);
    return *this;
}

Series operator+(const Series& a, const Series& b) {
    Series r = a;
    r += b;
    return r;
}

Series operator-(const Series& a, const Series& b) {
    Series r = a;
    r -= b;
    return r;
}

Series operator*(const Series& a, const Series& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("series dimension mismatch");
    Series r(a.dim(), std::min(a.order(), b.order()));
    for (const auto& [ea, va] : a.c_) {
        for (const auto& [eb, vb] : b.c_) {
            std::vector<int> e(a.dim());
            for (int i = 0; i < a.dim(); ++i) e[i] = ea[i] + eb[i];
            if (totalDegree(e) > r.order()) continue;
            r.add(e, va * vb);
        }
    }
    return r;
}

Series operator*(const Scalar& c, const Series& a) {
    Series r(a.dim(), a.order());
    for (const auto& [e, v] : a.coeffs()) r.setCoefficient(e, c * v);
    return r;
}

bool operator==(const Series& a, const Series& b) {
    return a.dim() == b.dim() && a.coeffs() == b.coeffs();
}

bool operator!=(const Series& a, const Series& b) { return !(a == b); }

std::string Series::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : c_) {
        if (!first) os << " + ";
        first = false;
        os << "{" << v.str() << "}";
        for (int i = 0; i < dim_; ++i) {
            if (e[i] == 0) continue;
            os << "·x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::vector<Rat> taylorSinhHalfOverHalf(int order) {
    // sinh(u)/u = sum u^{2k}/(2k+1)! with u = z/2.
    std::vector<Rat> c(order + 1, 0);
    Rat term = 1;  // coefficient of z^{2k}
    c[0] = 1;
    for (int k = 1; 2 * k <= order; ++k) {
        term /= Rat(4) * Rat(2 * k) * Rat(2 * k + 1);
        c[2 * k] = term;
    }
    return c;
}

std::vector<Rat> taylorExp(int order, int sign) {
    std::vector<Rat> c(order + 1, 0);
    Rat term = 1;
    c[0] = 1;
    for (int k = 1; k <= order; ++k) {
        term *= Rat(sign) / Rat(k);
        c[k] = term;
    }
    return c;
}

std::vector<Rat> taylorSinOverId(const Rat& a, int order) {
    // sin(a z)/z = sum (-1)^k a^{2k+1} z^{2k}/(2k+1)!
    std::vector<Rat> c(order + 1, 0);
    Rat term = a;
    c[0] = a;
    for (int k = 1; 2 * k <= order; ++k) {
        term *= -a * a / (Rat(2 * k) * Rat(2 * k + 1));
        c[2 * k] = term;
    }
    return c;
}

Series applyUnivariate(const std::vector<Rat>& coeffs, const Series& g) {
    Series acc(g.dim(), g.order());
    Series p = Series::one(g.dim(), g.order());
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) p = p * g;
        if (coeffs[k] != 0) acc += Scalar::fromRat(coeffs[k]) * p;
        if (p.isZero()) break;
    }
    return acc;
}

Series seriesSqrt(const Series& s) {
    if (s.constantTerm() != Scalar::fromInt(1))
        throw std::invalid_argument("sqrt requires unit constant term");
    Series u = s - Series::one(s.dim(), s.order());
    // Binomial series for (1+u)^{1/2}; u has positive valuation.
    Series acc = Series::one(s.dim(), s.order());
    Series p = Series::one(s.dim(), s.order());
    Rat binom = 1;
    for (int k = 1; k <= s.order(); ++k) {
        binom *= (Rat(1, 2) - Rat(k - 1)) / Rat(k);
        p = p * u;
        if (p.isZero()) break;
        acc += Scalar::fromRat(binom) * p;
    }
    return acc;
}

Series seriesInvert(const Series& s) {
    Scalar c0 = s.constantTerm();
    if (c0.isZero()) throw std::invalid_argument("zero constant term");
    Scalar c0inv = c0.inverseMonomial();
    Series u = c0inv * s - Series::one(s.dim(), s.order());
    Series acc = Series::one(s.dim(), s.order());
    Series p = Series::one(s.dim(), s.order());
    for (int k = 1; k <= s.order(); ++k) {
        p = p * u;
        if (p.isZero()) break;
        acc += (k % 2 == 1) ? -p : p;
    }
    return c0inv * acc;
}

SeriesMatrix::SeriesMatrix(int n, int dim, int order) : n_(n), dim_(dim), order_(order) {
    if (n < 1) throw std::invalid_argument("matrix size must be positive");
    e_.assign(static_cast<size_t>(n) * n, Series(dim, order));
}

SeriesMatrix SeriesMatrix::identity(int n, int dim, int order) {
    SeriesMatrix m(n, dim, order);
    for (int i = 0; i < n; ++i) m.at(i, i) = Series::one(dim, order);
    return m;
}

Series& SeriesMatrix::at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
const Series& SeriesMatrix::at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

SeriesMatrix SeriesMatrix::operator+(const SeriesMatrix& o) const {
    if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
    SeriesMatrix r(n_, dim_, order_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
    return r;
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& o) const {
    if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
    SeriesMatrix r(n_, dim_, order_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Series acc(dim_, order_);
            for (int k = 0; k < n_; ++k) acc += at(i, k) * o.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

SeriesMatrix SeriesMatrix::scaled(const Scalar& c) const {
    SeriesMatrix r(n_, dim_, order_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = c * at(i, j);
    return r;
}

SeriesMatrix SeriesMatrix::applyUnivariate(const std::vector<Rat>& coeffs) const {
    SeriesMatrix acc(n_, dim_, order_);
    SeriesMatrix p = identity(n_, dim_, order_);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) p = p * (*this);
        if (coeffs[k] != 0) acc = acc + p.scaled(Scalar::fromRat(coeffs[k]));
        bool zero = true;
        for (int i = 0; i < n_ && zero; ++i)
            for (int j = 0; j < n_ && zero; ++j)
                if (!p.at(i, j).isZero()) zero = false;
        if (zero && k > 0) break;
    }
    return acc;
}

Series SeriesMatrix::trace() const {
    Series t(dim_, order_);
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

Series SeriesMatrix::det() const {
    if (n_ > 10) throw std::invalid_argument("determinant supported for size <= 10");
    if (n_ == 1) return at(0, 0);
    Series acc(dim_, order_);
    for (int j = 0; j < n_; ++j) {
        if (at(0, j).isZero()) continue;
        SeriesMatrix minor(n_ - 1, dim_, order_);
        for (int r = 1; r < n_; ++r) {
            int cc = 0;
            for (int c = 0; c < n_; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = at(r, c);
            }
        }
        Series term = at(0, j) * minor.det();
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace cliffweil
