#pragma once

#include <map>
#include <vector>

#include "nilcx/lie.hpp"

namespace nilcx {

using IndexTuple = std::vector<std::size_t>;  // strictly increasing

// Alternating k-form on a fixed n-dimensional space, stored sparsely on
// strictly increasing index tuples. Degree-0 forms hold a single scalar at
// the empty tuple.
class ExteriorForm {
public:
    ExteriorForm(std::size_t ambientDim, std::size_t degree)
        : n_(ambientDim), k_(degree) {}
    static ExteriorForm covector(const Vec& coeffs);
    static ExteriorForm constant(std::size_t ambientDim, const Scalar& c);

    std::size_t ambientDim() const { return n_; }
    std::size_t degree() const { return k_; }
    const std::map<IndexTuple, Scalar>& coeffs() const { return c_; }
    bool isZero() const { return c_.empty(); }

    // Adds c * e^{t}, with t an arbitrary tuple of distinct indices (sorted
    // internally with the permutation sign).
    void addTerm(IndexTuple t, const Scalar& c);
    Scalar coeff(const IndexTuple& t) const;

    friend ExteriorForm operator+(const ExteriorForm& a, const ExteriorForm& b);
    friend ExteriorForm operator*(const Scalar& c, const ExteriorForm& a);
    friend ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);
    friend bool operator==(const ExteriorForm& a, const ExteriorForm& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.c_ == b.c_;
    }

    // Coordinates in the lexicographic basis of degree-k tuples.
    Vec toCoords() const;
    static ExteriorForm fromCoords(std::size_t ambientDim, std::size_t degree,
                                   const Vec& coords);

private:
    std::size_t n_, k_;
    std::map<IndexTuple, Scalar> c_;
};

// All strictly increasing k-tuples from {0..n-1} in lexicographic order.
std::vector<IndexTuple> lexTuples(std::size_t n, std::size_t k);
std::size_t binomial(std::size_t n, std::size_t k);

// Chevalley-Eilenberg differential: d e^a = sum_{i<j} c_ij^a e^i ^ e^j,
// extended by the graded Leibniz rule.
ExteriorForm d(const LieAlgebra& g, const ExteriorForm& w);
// Matrix of d_k : Lambda^k -> Lambda^{k+1} in lexicographic coordinates.
Matrix dMatrix(const LieAlgebra& g, std::size_t k);

std::size_t betti(const LieAlgebra& g, std::size_t k);
Subspace cocycleSpace(const LieAlgebra& g, std::size_t k);
Subspace coboundarySpace(const LieAlgebra& g, std::size_t k);

// span{ a ^ b : a in A, b in B } inside Lambda^2, lexicographic pair coords.
Subspace wedgeSpan(const Subspace& a, const Subspace& b);

// V_0 = 0, V_l = { f : d1 f in Lambda^2(V_{l-1}) }; ends at the full dual.
// Throws NotNilpotentError if the filtration stalls below g*.
std::vector<Subspace> vFiltration(const LieAlgebra& g);
// V_l equals the annihilator of g^{l+1}, for every level.
bool checkVAnnihilatorIdentity(const LieAlgebra& g);

}  // namespace nilcx
