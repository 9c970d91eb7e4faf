#pragma once

#include "nilcx/catalog.hpp"

namespace nilcx {

struct BoundCheck {
    std::string name;
    bool hypothesisMet = false;
    long lhs = 0;
    long rhs = 0;
    bool holds = true;  // true when the hypothesis is unmet (skipped)
    bool sharp = false;
};

struct BoundsReport {
    std::string subject;
    std::vector<BoundCheck> checks;
    bool allHold() const {
        for (const auto& c : checks)
            if (c.hypothesisMet && !c.holds) return false;
        return true;
    }
};

// 2 (s - E) <= dim; hypothesis: integrable J.
BoundCheck checkEBound(const LieAlgebra& g, const AlmostComplexStructure& j);
// s <= dim / 2; hypothesis: J is a nilpotent complex structure.
BoundCheck checkNilpotentBound(const LieAlgebra& g, const AlmostComplexStructure& j);
// s <= dim/2 - 1 and b1 >= 4; hypothesis: complex-Lie structure.
std::vector<BoundCheck> checkComplexLieBounds(const LieAlgebra& g,
                                              const AlmostComplexStructure& j);
// b1 >= 3; hypothesis: nilpotent complex structure.
BoundCheck checkB1Bound(const LieAlgebra& g, const AlmostComplexStructure& j);
// dim - dim g^4 >= 5; hypothesis: integrable J and dim >= 6.
BoundCheck checkGe5(const LieAlgebra& g, const AlmostComplexStructure& j);

// For each maximal equality run g^k(J) = ... = g^{k+p}(J) with k >= 2 and
// strict inclusions on both sides: dim g^{k+p} - dim g^{k+p+1} >= 2.
struct SeriesRunCheck {
    std::size_t k = 0, p = 0;
    long drop = 0;
    bool holds = true;
};
std::vector<SeriesRunCheck> checkMainlemmaConsequence(const LieAlgebra& g,
                                                      const AlmostComplexStructure& j);

BoundsReport boundsFor(const CatalogEntry& entry);
std::vector<BoundsReport> boundsForCorpus(const std::vector<CatalogEntry>& corpus);

// floor(4n/3) <= s <= 2n - 2 on dim-2n catalog witnesses, for even
// dimensions up to maxDim.
std::vector<BoundCheck> checkMainEstimate(std::size_t maxDim);
// s(D(n)) = floor(2 dim D(n) / 3) for n = 2..maxN.
std::vector<BoundCheck> checkAbstractIdentity(std::size_t maxN);

}  // namespace nilcx
