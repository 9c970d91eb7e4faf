#pragma once

#include <optional>
#include <string>

#include "nilcx/cxstruct.hpp"

namespace nilcx {

struct CatalogEntry {
    std::string name;
    LieAlgebra algebra;
    std::optional<AlmostComplexStructure> j;
    std::optional<GradedTag> grading;
    // Expected invariants used by golden tests and CLI summaries.
    std::map<std::string, long> expected;
};

namespace catalog {

// Heisenberg algebra h_{2k+1}: [x_i, y_i] = z.
CatalogEntry heisenberg(std::size_t k);
// h_{2k+1} (+) R with Jx_i = y_i, Jy_i = -x_i, Jz = w, Jw = -z (abelian J).
CatalogEntry heisenbergPlusR(std::size_t k);
// Filiform model algebra: [e_1, e_i] = e_{i+1}, 2 <= i < n.
CatalogEntry m0(std::size_t n);
// Realification of the complex filiform algebra, with its complex-Lie J.
CatalogEntry m0r(std::size_t n);
// B(n): abelian complex structure, b_1 = 3, s = n.
CatalogEntry bFamily(std::size_t n);
// C(n+1) for n >= 3 (dim 2n, s = n+1). Ships a verified integrable J for
// n <= 5; for n >= 6 only the algebra (no J) is provided.
CatalogEntry cFamily(std::size_t nPlus1);
// Naturally graded D(n), n >= 2 (no J attached).
CatalogEntry dFamily(std::size_t n);
// D(n) with its complex structure; adds the (+) R central line when
// n = 2, 3 (mod 4). Requires n >= 4.
CatalogEntry dFamilyWithJ(std::size_t n);
// The 6-dimensional algebra g_{6,8} with its non-nilpotent integrable J.
CatalogEntry g68();
CatalogEntry abelianAlgebra(std::size_t n);

// Piecewise dimension formula for D(n).
std::size_t dFamilyDim(std::size_t n);

// Address forms: "g6_8", "D:9", "DJ:9", "B:5", "C:5", "m0:6", "m0r:4",
// "h:2", "h+R:2", "abelian:4".
CatalogEntry byName(const std::string& address);

// The (algebra, J) pairs and plain algebras exercised by corpus sweeps.
std::vector<CatalogEntry> defaultCorpus();

}  // namespace catalog

}  // namespace nilcx
