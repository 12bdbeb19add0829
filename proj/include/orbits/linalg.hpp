#pragma once

#include <gmpxx.h>

#include <vector>

#include "orbits/errors.hpp"

namespace orbits {

/*
 * Dense exact-rational matrices and row spaces.  Everything in the matrix
 * oracle runs over mpq so that rank decisions are exact; no floating point
 * appears anywhere in this layer.
 */

using rat = mpq_class;
using QVec = std::vector<rat>;

class QMatrix {
public:
    QMatrix() : nrows_(0), ncols_(0) {}
    QMatrix(int rows, int cols) : nrows_(rows), ncols_(cols), data_(rows * cols) {}

    static QMatrix identity(int n);

    int rows() const { return nrows_; }
    int cols() const { return ncols_; }

    rat& operator()(int r, int c) { return data_[r * ncols_ + c]; }
    const rat& operator()(int r, int c) const { return data_[r * ncols_ + c]; }

    QMatrix transposed() const;
    bool is_zero() const;

    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const rat& c, const QMatrix& a);
    friend bool operator==(const QMatrix& a, const QMatrix& b);

private:
    int nrows_, ncols_;
    QVec data_;
};

// Matrix commutator ab - ba.
QMatrix commutator(const QMatrix& a, const QMatrix& b);

// Throws orbits::error when the matrix is singular or not square.
QMatrix inverse(const QMatrix& m);

QVec flatten(const QMatrix& m);

// Row space in reduced echelon form, built incrementally.  Two RowSpaces are
// equal as subspaces iff their stored bases coincide verbatim.
class RowSpace {
public:
    explicit RowSpace(int ambient) : ambient_(ambient) {}

    // Reduces v against the basis; if a nonzero remainder survives it is
    // normalized and inserted.  Returns true when the dimension grew.
    bool insert(QVec v);

    bool contains(QVec v) const;
    bool contains_all(const RowSpace& other) const;

    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return ambient_; }
    const std::vector<QVec>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    int ambient_;
    std::vector<QVec> rows_;  // pivot entries 1, fully reduced, pivots ascending
    std::vector<int> pivots_;
};

RowSpace span_of(const std::vector<QVec>& vectors, int ambient);
bool same_space(const RowSpace& a, const RowSpace& b);

// Zassenhaus intersection.
RowSpace intersect(const RowSpace& a, const RowSpace& b);

int rank_of(const std::vector<QVec>& vectors, int ambient);

// Basis of the right null space {x : m x = 0}.
std::vector<QVec> kernel_basis(const QMatrix& m);

} // namespace orbits
