#pragma once

#include <string>
#include <vector>

#include "cliffweil/scalar.hpp"

namespace cliffweil {

// Dense matrix over Gaussian rationals with exact arithmetic.
class GMat {
public:
    GMat() : rows_(0), cols_(0) {}
    GMat(int rows, int cols);
    static GMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GRat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const GRat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    GMat operator+(const GMat& o) const;
    GMat operator-(const GMat& o) const;
    GMat operator*(const GMat& o) const;
    GMat operator-() const;
    GMat scaled(const GRat& c) const;

    GMat kron(const GMat& o) const;
    GRat trace() const;
    bool isZero() const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<GRat> a_;
};

bool operator==(const GMat& a, const GMat& b);
bool operator!=(const GMat& a, const GMat& b);

GMat commutator(const GMat& a, const GMat& b);
GMat anticommutator(const GMat& a, const GMat& b);

// Exact rank via Gaussian elimination.
int rank(GMat m);
// Dimension of the kernel of m as a map from col-space.
int nullity(const GMat& m);

}  // namespace cliffweil
