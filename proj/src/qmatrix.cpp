#include "cone/qmatrix.hpp"

#include <stdexcept>

namespace cone {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix size mismatch");
    QMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
    QMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
    QMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

QMatrix QMatrix::operator*(const Rat& c) const {
    QMatrix r = *this;
    for (auto& v : r.a_) v *= c;
    return r;
}

QMatrix QMatrix::transpose() const {
    QMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Rat QMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
    QMatrix m = *this;
    Rat d = 1;
    for (int c = 0; c < cols_; ++c) {
        int pivot = -1;
        for (int r = c; r < rows_; ++r)
            if (m.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != c) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Rat inv = Rat(1) / m.at(c, c);
        for (int r = c + 1; r < rows_; ++r) {
            if (m.at(r, c) == 0) continue;
            Rat f = m.at(r, c) * inv;
            for (int j = c; j < cols_; ++j) m.at(r, j) -= f * m.at(c, j);
        }
    }
    return d;
}

QMatrix QMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
    int n = rows_;
    QMatrix m = *this;
    QMatrix inv = identity(n);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (m.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("matrix is singular");
        if (pivot != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(c, j));
                std::swap(inv.at(pivot, j), inv.at(c, j));
            }
        Rat f = Rat(1) / m.at(c, c);
        for (int j = 0; j < n; ++j) {
            m.at(c, j) *= f;
            inv.at(c, j) *= f;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || m.at(r, c) == 0) continue;
            Rat g = m.at(r, c);
            for (int j = 0; j < n; ++j) {
                m.at(r, j) -= g * m.at(c, j);
                inv.at(r, j) -= g * inv.at(c, j);
            }
        }
    }
    return inv;
}

int QMatrix::rank() const {
    QMatrix m = *this;
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (m.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        Rat inv = Rat(1) / m.at(rank, c);
        for (int r = rank + 1; r < rows_; ++r) {
            if (m.at(r, c) == 0) continue;
            Rat f = m.at(r, c) * inv;
            for (int j = c; j < cols_; ++j) m.at(r, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace cone
