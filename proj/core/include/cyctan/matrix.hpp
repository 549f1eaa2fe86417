#pragma once

#include <cstddef>
#include <vector>

#include "cyctan/errors.hpp"
#include "cyctan/rational.hpp"

namespace cyctan {

/// Dense row-major matrix over any ring-like value type. Sizes stay tiny
/// (binomial coefficients of small p), nothing clever needed.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && cells_ == o.cells_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> cells_;
};

/// Product with the value type's own * and +; inner dimension must be >= 1.
/// Every cell is overwritten, so the fill value never survives.
template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows() || a.cols() == 0)
        throw StructuralError("matrix product dimension mismatch");
    Matrix<T> r(a.rows(), b.cols(), a(0, 0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            T acc = a(i, 0) * b(0, j);
            for (std::size_t k = 1; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
            r(i, j) = acc;
        }
    return r;
}

template <class T, class F>
auto map_cells(const Matrix<T>& m, F f) -> Matrix<decltype(f(m(0, 0)))> {
    using R = decltype(f(m(0, 0)));
    if (m.rows() == 0 || m.cols() == 0) throw StructuralError("map_cells on empty matrix");
    Matrix<R> out(m.rows(), m.cols(), f(m(0, 0)));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
    return out;
}

}  // namespace cyctan
