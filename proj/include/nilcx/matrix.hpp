#pragma once

#include <cstddef>
#include <vector>

#include "nilcx/scalar.hpp"

namespace nilcx {

using Vec = std::vector<Scalar>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& c, const Vec& a);
bool isZeroVec(const Vec& v);
Vec basisVec(std::size_t n, std::size_t i);
Vec conjVec(const Vec& v);

// Dense matrix of exact scalars, row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix fromRows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    std::vector<Vec> rowVectors() const;

    Matrix transpose() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Vec apply(const Vec& x) const;  // this * x (column vector)

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

// Unique reduced row echelon form; zero rows kept (same shape).
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of the right null space {x : m x = 0}, returned as RREF rows.
std::vector<Vec> kernel(const Matrix& m);

// Incremental RREF row basis: supports online span construction.
class RowSpan {
public:
    explicit RowSpan(std::size_t cols) : cols_(cols) {}
    // Adds v to the span; returns true if the rank grew.
    bool add(Vec v);
    bool containsVec(const Vec& v) const;
    std::size_t dim() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    // Rows in RREF order (sorted by pivot column, fully reduced).
    const std::vector<Vec>& rows() const { return rows_; }

private:
    std::size_t cols_;
    std::vector<Vec> rows_;        // sorted by pivot column
    std::vector<std::size_t> pivots_;
    // Reduces v against the stored rows; returns pivot column or cols_ if zero.
    std::size_t reduce(Vec& v) const;
};

}  // namespace nilcx
