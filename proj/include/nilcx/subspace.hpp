#pragma once

#include "nilcx/matrix.hpp"

namespace nilcx {

// Linear subspace stored as an RREF-canonical row basis (zero rows dropped).
// Two subspaces are equal as sets iff their stored bases are entry-wise equal.
class Subspace {
public:
    explicit Subspace(std::size_t ambientDim) : ambient_(ambientDim) {}
    Subspace(std::size_t ambientDim, const std::vector<Vec>& spanningRows);

    static Subspace full(std::size_t ambientDim);

    std::size_t ambientDim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool containsVec(const Vec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t ambient_;
    std::vector<Vec> basis_;
};

Subspace subspaceSum(const Subspace& a, const Subspace& b);
Subspace subspaceIntersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Subspace& b);  // b subset of a
// {f in dual | f(x) = 0 for all x in a}, in dual coordinates.
Subspace annihilator(const Subspace& a);

}  // namespace nilcx
