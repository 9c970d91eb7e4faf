#pragma once

#include "nilcx/cxstruct.hpp"

namespace nilcx {

// Signed-matching candidate: a perfect matching on {0..n-1} together with one
// sign per pair, encoding J e_i = sigma e_j, J e_j = -sigma e_i.
struct JCandidate {
    std::vector<std::pair<std::size_t, std::size_t>> matching;  // i < j, sorted by i
    std::vector<int> signs;                                     // +1 / -1 per pair
    std::size_t index = 0;  // position in the deterministic enumeration
};

enum class StructureClass { integrable, abelian, complex_lie, nilpotent };

std::size_t candidateCount(std::size_t n);  // (n-1)!! * 2^(n/2)
std::vector<JCandidate> enumerateCandidates(std::size_t n);
Matrix candidateMatrix(const JCandidate& c, std::size_t n);

struct SearchResult {
    std::size_t total = 0;
    std::vector<JCandidate> hits;
};

// Exhaustive scan of the ansatz; every hit satisfies the class predicate.
SearchResult search(const LieAlgebra& g, StructureClass cls);

// Independent re-check channel for an externally produced J.
ClassificationReport verifyCertificate(const LieAlgebra& g,
                                       const AlmostComplexStructure& j);

}  // namespace nilcx
