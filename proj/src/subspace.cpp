#include "nilcx/subspace.hpp"

#include <stdexcept>

namespace nilcx {

Subspace::Subspace(std::size_t ambientDim, const std::vector<Vec>& spanningRows)
    : ambient_(ambientDim) {
    RowSpan span(ambientDim);
    for (const auto& r : spanningRows) span.add(r);
    basis_ = span.rows();
}

Subspace Subspace::full(std::size_t ambientDim) {
    return Subspace(ambientDim, Matrix::identity(ambientDim).rowVectors());
}

bool Subspace::containsVec(const Vec& v) const {
    RowSpan span(ambient_);
    for (const auto& r : basis_) span.add(r);
    return span.containsVec(v);
}

Subspace subspaceSum(const Subspace& a, const Subspace& b) {
    if (a.ambientDim() != b.ambientDim())
        throw std::invalid_argument("subspace ambient dimension mismatch");
    std::vector<Vec> rows = a.basis();
    for (const auto& r : b.basis()) rows.push_back(r);
    return Subspace(a.ambientDim(), rows);
}

Subspace annihilator(const Subspace& a) {
    Matrix m = Matrix::fromRows(a.basis(), a.ambientDim());
    return Subspace(a.ambientDim(), kernel(m));
}

Subspace subspaceIntersect(const Subspace& a, const Subspace& b) {
    if (a.ambientDim() != b.ambientDim())
        throw std::invalid_argument("subspace ambient dimension mismatch");
    return annihilator(subspaceSum(annihilator(a), annihilator(b)));
}

bool contains(const Subspace& a, const Subspace& b) {
    if (a.ambientDim() != b.ambientDim())
        throw std::invalid_argument("subspace ambient dimension mismatch");
    RowSpan span(a.ambientDim());
    for (const auto& r : a.basis()) span.add(r);
    for (const auto& r : b.basis())
        if (!span.containsVec(r)) return false;
    return true;
}

}  // namespace nilcx
