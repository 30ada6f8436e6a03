#include "cliffweil/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace cliffweil {

GMat::GMat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
    a_.assign(static_cast<size_t>(rows) * cols, GRat());
}

GMat GMat::identity(int n) {
    GMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GRat(1L);
    return m;
}

GMat GMat::operator+(const GMat& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("matrix shape mismatch");
    GMat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

GMat GMat::operator-(const GMat& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("matrix shape mismatch");
    GMat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

GMat GMat::operator*(const GMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    GMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).isZero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).isZero()) continue;
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
            }
        }
    return r;
}

GMat GMat::operator-() const {
    GMat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
    return r;
}

GMat GMat::scaled(const GRat& c) const {
    GMat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = c * a_[k];
    return r;
}

GMat GMat::kron(const GMat& o) const {
    GMat r(rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).isZero()) continue;
            for (int p = 0; p < o.rows_; ++p)
                for (int q = 0; q < o.cols_; ++q)
                    r.at(i * o.rows_ + p, j * o.cols_ + q) = at(i, j) * o.at(p, q);
        }
    return r;
}

GRat GMat::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    GRat t;
    for (int i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
}

bool GMat::isZero() const {
    for (const auto& v : a_)
        if (!v.isZero()) return false;
    return true;
}

std::string GMat::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "[") << at(i, j).str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

bool operator==(const GMat& a, const GMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

bool operator!=(const GMat& a, const GMat& b) { return !(a == b); }

GMat commutator(const GMat& a, const GMat& b) { return a * b - b * a; }
GMat anticommutator(const GMat& a, const GMat& b) { return a * b + b * a; }

int rank(GMat m) {
    int r = 0;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, col).isZero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
        GRat inv = GRat(1L) / m.at(r, col);
        for (int j = col; j < m.cols(); ++j) m.at(r, j) = inv * m.at(r, j);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, col).isZero()) continue;
            GRat f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

int nullity(const GMat& m) { return m.cols() - rank(m); }

}  // namespace cliffweil
