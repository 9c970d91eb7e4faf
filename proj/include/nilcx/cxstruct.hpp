#pragma once

#include <optional>

#include "nilcx/exterior.hpp"

namespace nilcx {

// Almost complex structure: rational n x n matrix J with J^2 = -I, n even.
class AlmostComplexStructure {
public:
    explicit AlmostComplexStructure(Matrix m);
    const Matrix& matrix() const { return m_; }
    std::size_t dim() const { return m_.rows(); }
    Vec apply(const Vec& x) const { return m_.apply(x); }
    // Dual action on covectors: (J* f)(X) = f(J X); the transpose.
    Matrix dualMatrix() const { return m_.transpose(); }

private:
    Matrix m_;
};

struct ComplexSplitting {
    Subspace plusI;     // span{ X + i J X }
    Subspace minusI;    // span{ X - i J X }
    Subspace lambda10;  // span{ f + i J* f } = annihilator(minusI)
    Subspace lambda01;  // conjugate of lambda10
};

struct JInvariantSeries {
    std::vector<Subspace> spaces;  // g^l(J) = g^l + J g^l, l = 1..s
    std::size_t equalityCount;     // E = #{ l : g^l(J) = g^{l+1}(J) }
};

struct ClassificationReport {
    bool integrable = false;
    bool abelian = false;
    bool complexLie = false;
    bool nilpotentStructure = false;
    // Basis pair witnessing non-integrability, when applicable.
    std::optional<std::pair<std::size_t, std::size_t>> failingPair;
    // Filtration level witnessing failure of the nilpotent-structure
    // condition, when applicable.
    std::optional<std::size_t> failingLevel;
};

Vec nijenhuis(const LieAlgebra& g, const AlmostComplexStructure& j, const Vec& x,
              const Vec& y);

struct IntegrabilityResult {
    bool integrable;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};
IntegrabilityResult isIntegrable(const LieAlgebra& g, const AlmostComplexStructure& j);
bool isAbelianStructure(const LieAlgebra& g, const AlmostComplexStructure& j);
bool isComplexLieStructure(const LieAlgebra& g, const AlmostComplexStructure& j);

ComplexSplitting splitting(const LieAlgebra& g, const AlmostComplexStructure& j);

// Splits a ℚ(i)-valued k-form into its (p, q) components relative to J.
std::map<std::pair<std::size_t, std::size_t>, ExteriorForm> pqDecompose(
    const ExteriorForm& w, const ComplexSplitting& s);

JInvariantSeries jSeries(const LieAlgebra& g, const AlmostComplexStructure& j);

// V_l^{1,0} = (V_l g*)^C  intersect  lambda10; increasing, ends at lambda10.
std::vector<Subspace> v10Filtration(const LieAlgebra& g,
                                    const AlmostComplexStructure& j);

// d V_l^{1,0}  subset of  V_{l-1}^{1,0} ^ (V_{l-1} g*)^C, for every l.
bool checkDjLemma(const LieAlgebra& g, const AlmostComplexStructure& j);
// d V_l^{1,0}  subset of  V_{l-1}^{1,0} ^ (V_{l-1}^{1,0} + V_{l-1}^{0,1}),
// with an optional witness level on failure.
bool isNilpotentStructure(const LieAlgebra& g, const AlmostComplexStructure& j,
                          std::optional<std::size_t>* failingLevel = nullptr);

// Coframe omega^1..omega^{n/2} of lambda10 adapted to v10Filtration,
// deterministic via RREF pivot order. Requires integrable J.
std::vector<Vec> canonicalFlag(const LieAlgebra& g, const AlmostComplexStructure& j);

// d omega^{l+1} lies in the degree-2 part of the ideal (omega^1..omega^l).
bool checkFlagIdealCondition(const LieAlgebra& g, const std::vector<Vec>& coframe);
// Stronger form for abelian J: d omega^{l+1} in Lambda^{1,1}(omega^1..l, conj).
bool checkFlagAbelianIdealCondition(const LieAlgebra& g, const std::vector<Vec>& coframe);

// [g^l(J), g^l(J)] subset of g^{l+1}(J) for every l.
bool checkLCommut(const LieAlgebra& g, const AlmostComplexStructure& j);
// [g,g] + J[g,g] is a proper subspace of g.
bool checkNontrivial(const LieAlgebra& g, const AlmostComplexStructure& j);

ClassificationReport classify(const LieAlgebra& g, const AlmostComplexStructure& j);

// Expansion of d omega^k in the wedge basis { w^a^w^b (a<b), w^a^conj(w^b),
// conj(w^a)^conj(w^b) (a<b) } built from an explicit coframe.
struct CoframeExpansion {
    // keys are 1-based (a, b) coframe indices
    std::map<std::pair<std::size_t, std::size_t>, Scalar> holo;   // w^a ^ w^b
    std::map<std::pair<std::size_t, std::size_t>, Scalar> mixed;  // w^a ^ conj w^b
    std::map<std::pair<std::size_t, std::size_t>, Scalar> anti;   // conj ^ conj
};
CoframeExpansion expressDInCoframe(const LieAlgebra& g, const std::vector<Vec>& coframe,
                                   std::size_t k);

}  // namespace nilcx
