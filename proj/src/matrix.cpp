#include "nilcx/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilcx {

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Vec out(a);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b[i].isZero()) out[i] += b[i];
    return out;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Vec out(a);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b[i].isZero()) out[i] -= b[i];
    return out;
}

Vec operator-(const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].isZero()) out[i] = -a[i];
    return out;
}

Vec operator*(const Scalar& c, const Vec& a) {
    Vec out(a.size());
    if (c.isZero()) return out;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].isZero()) out[i] = c * a[i];
    return out;
}

bool isZeroVec(const Vec& v) {
    for (const auto& x : v)
        if (!x.isZero()) return false;
    return true;
}

Vec basisVec(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = Scalar(1);
    return v;
}

Vec conjVec(const Vec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].conj();
    return out;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::fromRows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    Vec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

std::vector<Vec> Matrix::rowVectors() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.isZero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (!bkj.isZero()) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("vector length mismatch");
    Vec out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (x[c].isZero()) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar& v = at(r, c);
            if (!v.isZero()) out[r] += v * x[c];
        }
    }
    return out;
}

Matrix rref(const Matrix& m) {
    Matrix r = m;
    std::size_t piv = 0;
    for (std::size_t c = 0; c < r.cols() && piv < r.rows(); ++c) {
        std::size_t sel = r.rows();
        for (std::size_t i = piv; i < r.rows(); ++i)
            if (!r.at(i, c).isZero()) {
                sel = i;
                break;
            }
        if (sel == r.rows()) continue;
        if (sel != piv)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(sel, j));
        Scalar inv = r.at(piv, c).inverse();
        for (std::size_t j = c; j < r.cols(); ++j)
            if (!r.at(piv, j).isZero()) r.at(piv, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == piv || r.at(i, c).isZero()) continue;
            Scalar f = r.at(i, c);
            for (std::size_t j = c; j < r.cols(); ++j) {
                const Scalar& p = r.at(piv, j);
                if (!p.isZero()) r.at(i, j) -= f * p;
            }
        }
        ++piv;
    }
    return r;
}

std::size_t rank(const Matrix& m) {
    Matrix r = rref(m);
    std::size_t n = 0;
    for (std::size_t i = 0; i < r.rows(); ++i)
        if (!isZeroVec(r.row(i))) ++n;
    return n;
}

std::vector<Vec> kernel(const Matrix& m) {
    const std::size_t n = m.cols();
    Matrix r = rref(m);
    std::vector<std::size_t> pivots;
    std::vector<bool> isPivot(n, false);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t c = n;
        for (std::size_t j = 0; j < n; ++j)
            if (!r.at(i, j).isZero()) {
                c = j;
                break;
            }
        if (c == n) break;
        pivots.push_back(c);
        isPivot[c] = true;
    }
    RowSpan span(n);
    for (std::size_t f = 0; f < n; ++f) {
        if (isPivot[f]) continue;
        Vec v(n);
        v[f] = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, f);
        span.add(std::move(v));
    }
    return span.rows();
}

std::size_t RowSpan::reduce(Vec& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& c = v[pivots_[i]];
        if (c.isZero()) continue;
        Scalar f = c;
        const Vec& row = rows_[i];
        for (std::size_t j = pivots_[i]; j < cols_; ++j)
            if (!row[j].isZero()) v[j] -= f * row[j];
    }
    for (std::size_t j = 0; j < cols_; ++j)
        if (!v[j].isZero()) return j;
    return cols_;
}

bool RowSpan::add(Vec v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    std::size_t p = reduce(v);
    if (p == cols_) return false;
    Scalar inv = v[p].inverse();
    for (std::size_t j = p; j < cols_; ++j)
        if (!v[j].isZero()) v[j] *= inv;
    // Back-substitute into existing rows so the basis stays fully reduced.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Scalar f = rows_[i][p];
        if (f.isZero()) continue;
        for (std::size_t j = p; j < cols_; ++j)
            if (!v[j].isZero()) rows_[i][j] -= f * v[j];
    }
    auto it = std::upper_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    return true;
}

bool RowSpan::containsVec(const Vec& v) const {
    Vec w = v;
    return reduce(w) == cols_;
}

}  // namespace nilcx
