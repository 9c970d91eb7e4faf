#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nilcx/subspace.hpp"

namespace nilcx {

enum class Field { rational, gaussian };

struct JacobiViolation {
    std::size_t i, j, k;  // basis indices of the failing triple
    Vec residual;         // [ei,[ej,ek]] + [ej,[ek,ei]] + [ek,[ei,ej]]
};

class JacobiError : public std::runtime_error {
public:
    explicit JacobiError(std::vector<JacobiViolation> v)
        : std::runtime_error("Jacobi identity fails on " + std::to_string(v.size()) +
                             " basis triple(s)"),
          violations(std::move(v)) {}
    std::vector<JacobiViolation> violations;
};

class NotNilpotentError : public std::runtime_error {
public:
    NotNilpotentError() : std::runtime_error("algebra is not nilpotent") {}
};

// Finite-dimensional Lie algebra given by structure constants on a named
// basis. Only pairs (i, j) with i < j are stored; absent pairs are zero.
class LieAlgebra {
public:
    using BracketTable = std::map<std::pair<std::size_t, std::size_t>, Vec>;

    // Validates the Jacobi identity; throws JacobiError on failure.
    static LieAlgebra make(std::vector<std::string> basisNames, Field field,
                           BracketTable brackets);
    // No validation; for negative tests and for d*d <-> Jacobi experiments.
    static LieAlgebra makeUnchecked(std::vector<std::string> basisNames, Field field,
                                    BracketTable brackets);

    std::size_t dim() const { return n_; }
    Field field() const { return field_; }
    const std::vector<std::string>& basisNames() const { return basisNames_; }
    const BracketTable& brackets() const { return br_; }
    std::size_t indexOf(const std::string& name) const;

    // [e_i, e_j] as a coefficient vector (any i, j).
    Vec structureVec(std::size_t i, std::size_t j) const;
    // [e_i, v]; only the nonzero entries of v contribute, so this is much
    // cheaper than the general bracket when one argument is a basis vector.
    Vec bracketBasis(std::size_t i, const Vec& v) const;
    Vec bracket(const Vec& x, const Vec& y) const;

    std::vector<JacobiViolation> jacobiViolations() const;

    // g^1 = g, g^{k+1} = [g, g^k]; returned until the first repeated or zero
    // term (so a nilpotent algebra ends with the zero subspace).
    std::vector<Subspace> lowerCentralSeries() const;
    bool isNilpotent() const;
    std::size_t nilIndex() const;  // throws NotNilpotentError
    std::vector<std::size_t> aSequence() const;
    bool isFiliform() const;
    Subspace derivedSubalgebra() const;  // [g, g] = g^2

private:
    LieAlgebra() = default;
    std::size_t n_ = 0;
    Field field_ = Field::rational;
    std::vector<std::string> basisNames_;
    BracketTable br_;
};

LieAlgebra directSum(const LieAlgebra& a, const LieAlgebra& b);
// g (+) R with a fresh central generator.
LieAlgebra directSumWithLine(const LieAlgebra& g, const std::string& name);
LieAlgebra complexify(const LieAlgebra& g);

// Optional positive grading per basis vector; valid when [g_a, g_b] lies in
// the degree-(a+b) component (or vanishes).
struct GradedTag {
    std::vector<std::size_t> degrees;
};

bool checkGrading(const LieAlgebra& g, const GradedTag& tag);
// Span of the basis vectors of degree >= m.
Subspace gradedTail(const LieAlgebra& g, const GradedTag& tag, std::size_t m);

}  // namespace nilcx
