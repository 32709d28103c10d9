#ifndef CONE_QMATRIX_HPP
#define CONE_QMATRIX_HPP

#include <vector>

#include "cone/rational.hpp"

namespace cone {

// Dense matrix over exact rationals; just enough linear algebra for the
// ideal constructions and the membership tests.
class QMatrix {
public:
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[i * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }

    QMatrix operator*(const QMatrix&) const;
    QMatrix operator+(const QMatrix&) const;
    QMatrix operator-(const QMatrix&) const;
    QMatrix operator*(const Rat&) const;
    bool operator==(const QMatrix&) const = default;

    QMatrix transpose() const;
    Rat det() const;
    QMatrix inverse() const;  // throws on singular input
    int rank() const;

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

}  // namespace cone

#endif
