#include "orbits/linalg.hpp"

#include <algorithm>

namespace orbits {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::transposed() const {
    QMatrix m(ncols_, nrows_);
    for (int r = 0; r < nrows_; ++r)
        for (int c = 0; c < ncols_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

bool QMatrix::is_zero() const {
    for (const rat& v : data_)
        if (v != 0) return false;
    return true;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    QMatrix m(a.nrows_, a.ncols_);
    for (size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
    return m;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    QMatrix m(a.nrows_, a.ncols_);
    for (size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
    return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    QMatrix m(a.nrows_, b.ncols_);
    for (int r = 0; r < a.nrows_; ++r)
        for (int k = 0; k < a.ncols_; ++k) {
            const rat& v = a(r, k);
            if (v == 0) continue;
            for (int c = 0; c < b.ncols_; ++c) {
                if (b(k, c) == 0) continue;
                m(r, c) += v * b(k, c);
            }
        }
    return m;
}

QMatrix operator*(const rat& c, const QMatrix& a) {
    QMatrix m(a.nrows_, a.ncols_);
    for (size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = c * a.data_[i];
    return m;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.nrows_ == b.nrows_ && a.ncols_ == b.ncols_ && a.data_ == b.data_;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw error("inverse: matrix not square");
    const int n = m.rows();
    QMatrix a = m;
    QMatrix inv = QMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) throw error("inverse: singular matrix");
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(a(pivot, c), a(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        const rat scale = 1 / a(col, col);
        for (int c = 0; c < n; ++c) {
            a(col, c) *= scale;
            inv(col, c) *= scale;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            const rat f = a(r, col);
            for (int c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

QVec flatten(const QMatrix& m) {
    QVec v;
    v.reserve(m.rows() * m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    return v;
}

bool RowSpace::insert(QVec v) {
    for (size_t k = 0; k < rows_.size(); ++k) {
        const rat& coeff = v[pivots_[k]];
        if (coeff == 0) continue;
        const rat f = coeff;
        for (int c = 0; c < ambient_; ++c) v[c] -= f * rows_[k][c];
    }
    int pivot = -1;
    for (int c = 0; c < ambient_; ++c)
        if (v[c] != 0) { pivot = c; break; }
    if (pivot < 0) return false;

    const rat scale = 1 / v[pivot];
    for (int c = 0; c < ambient_; ++c) v[c] *= scale;
    // keep existing rows reduced against the new one
    for (size_t k = 0; k < rows_.size(); ++k) {
        const rat f = rows_[k][pivot];
        if (f == 0) continue;
        for (int c = 0; c < ambient_; ++c) rows_[k][c] -= f * v[c];
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pivot);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

bool RowSpace::contains(QVec v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        const rat& coeff = v[pivots_[k]];
        if (coeff == 0) continue;
        const rat f = coeff;
        for (int c = 0; c < ambient_; ++c) v[c] -= f * rows_[k][c];
    }
    for (const rat& x : v)
        if (x != 0) return false;
    return true;
}

bool RowSpace::contains_all(const RowSpace& other) const {
    for (const QVec& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

RowSpace span_of(const std::vector<QVec>& vectors, int ambient) {
    RowSpace s(ambient);
    for (const QVec& v : vectors) s.insert(v);
    return s;
}

bool same_space(const RowSpace& a, const RowSpace& b) {
    return a.ambient() == b.ambient() && a.basis() == b.basis();
}

RowSpace intersect(const RowSpace& a, const RowSpace& b) {
    const int d = a.ambient();
    RowSpace wide(2 * d);
    for (const QVec& u : a.basis()) {
        QVec row(2 * d);
        for (int c = 0; c < d; ++c) row[c] = row[d + c] = u[c];
        wide.insert(std::move(row));
    }
    for (const QVec& w : b.basis()) {
        QVec row(2 * d);
        for (int c = 0; c < d; ++c) row[c] = w[c];
        wide.insert(std::move(row));
    }
    RowSpace out(d);
    for (size_t k = 0; k < wide.basis().size(); ++k) {
        if (wide.pivots()[k] < d) continue; // left half nonzero
        QVec right(wide.basis()[k].begin() + d, wide.basis()[k].end());
        out.insert(std::move(right));
    }
    return out;
}

int rank_of(const std::vector<QVec>& vectors, int ambient) {
    return span_of(vectors, ambient).dim();
}

std::vector<QVec> kernel_basis(const QMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    // RREF of m
    QMatrix a = m;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int k = r; k < rows; ++k)
            if (a(k, c) != 0) { pr = k; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int cc = 0; cc < cols; ++cc) std::swap(a(pr, cc), a(r, cc));
        const rat scale = 1 / a(r, c);
        for (int cc = 0; cc < cols; ++cc) a(r, cc) *= scale;
        for (int k = 0; k < rows; ++k) {
            if (k == r || a(k, c) == 0) continue;
            const rat f = a(k, c);
            for (int cc = 0; cc < cols; ++cc) a(k, cc) -= f * a(r, cc);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;

    std::vector<QVec> out;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec x(cols);
        x[free] = 1;
        for (size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = -a(k, free);
        out.push_back(std::move(x));
    }
    return out;
}

} // namespace orbits
