#include "nilcx/bounds.hpp"

#include "nilcx/exterior.hpp"

namespace nilcx {

namespace {

BoundCheck leq(std::string name, bool hyp, long lhs, long rhs) {
    BoundCheck c;
    c.name = std::move(name);
    c.hypothesisMet = hyp;
    c.lhs = lhs;
    c.rhs = rhs;
    c.holds = !hyp || lhs <= rhs;
    c.sharp = hyp && lhs == rhs;
    return c;
}

BoundCheck geq(std::string name, bool hyp, long lhs, long rhs) {
    BoundCheck c;
    c.name = std::move(name);
    c.hypothesisMet = hyp;
    c.lhs = lhs;
    c.rhs = rhs;
    c.holds = !hyp || lhs >= rhs;
    c.sharp = hyp && lhs == rhs;
    return c;
}

}  // namespace

BoundCheck checkEBound(const LieAlgebra& g, const AlmostComplexStructure& j) {
    bool hyp = isIntegrable(g, j).integrable;
    long lhs = 0;
    if (hyp) {
        auto js = jSeries(g, j);
        lhs = 2 * (static_cast<long>(g.nilIndex()) -
                   static_cast<long>(js.equalityCount));
    }
    return leq("e_bound", hyp, lhs, static_cast<long>(g.dim()));
}

BoundCheck checkNilpotentBound(const LieAlgebra& g, const AlmostComplexStructure& j) {
    bool hyp = isIntegrable(g, j).integrable && isNilpotentStructure(g, j);
    long lhs = hyp ? static_cast<long>(g.nilIndex()) : 0;
    return leq("nilpotent_structure_bound", hyp, lhs,
               static_cast<long>(g.dim()) / 2);
}

std::vector<BoundCheck> checkComplexLieBounds(const LieAlgebra& g,
                                              const AlmostComplexStructure& j) {
    bool hyp = isComplexLieStructure(g, j);
    long s = hyp ? static_cast<long>(g.nilIndex()) : 0;
    long b1 = hyp ? static_cast<long>(betti(g, 1)) : 0;
    return {leq("complex_lie_nilindex_bound", hyp, s,
                static_cast<long>(g.dim()) / 2 - 1),
            geq("complex_lie_b1_bound", hyp, b1, 4)};
}

BoundCheck checkB1Bound(const LieAlgebra& g, const AlmostComplexStructure& j) {
    bool hyp = isIntegrable(g, j).integrable && isNilpotentStructure(g, j);
    long b1 = hyp ? static_cast<long>(betti(g, 1)) : 0;
    return geq("b1_bound", hyp, b1, 3);
}

BoundCheck checkGe5(const LieAlgebra& g, const AlmostComplexStructure& j) {
    bool hyp = isIntegrable(g, j).integrable && g.dim() >= 6;
    long lhs = 0;
    if (hyp) {
        auto lcs = g.lowerCentralSeries();
        long dimG4 = lcs.size() > 3 ? static_cast<long>(lcs[3].dim()) : 0;
        lhs = static_cast<long>(g.dim()) - dimG4;
    }
    return geq("fourth_term_gap", hyp, lhs, 5);
}

std::vector<SeriesRunCheck> checkMainlemmaConsequence(
    const LieAlgebra& g, const AlmostComplexStructure& j) {
    std::vector<SeriesRunCheck> out;
    if (!isIntegrable(g, j).integrable) return out;
    auto js = jSeries(g, j);
    auto lcs = g.lowerCentralSeries();
    auto dimLcs = [&](std::size_t m) -> long {
        return m - 1 < lcs.size() ? static_cast<long>(lcs[m - 1].dim()) : 0;
    };
    const std::size_t count = js.spaces.size();  // terms g^1(J)..g^s(J)
    std::size_t l = 1;
    while (l < count) {
        if (js.spaces[l - 1] != js.spaces[l]) {
            ++l;
            continue;
        }
        std::size_t k = l;
        while (l < count && js.spaces[l - 1] == js.spaces[l]) ++l;
        std::size_t p = l - k;  // run: g^k(J) = ... = g^{k+p}(J)
        // Hypothesis: k >= 2 and strict inclusions before and after.
        bool before = k >= 2 && js.spaces[k - 2] != js.spaces[k - 1];
        const Subspace after =
            k + p < count ? js.spaces[k + p] : Subspace(g.dim());
        bool strictAfter = js.spaces[k + p - 1] != after;
        if (!(before && strictAfter)) continue;
        SeriesRunCheck rc;
        rc.k = k;
        rc.p = p;
        rc.drop = dimLcs(k + p) - dimLcs(k + p + 1);
        rc.holds = rc.drop >= 2;
        out.push_back(rc);
    }
    return out;
}

BoundsReport boundsFor(const CatalogEntry& entry) {
    BoundsReport rep;
    rep.subject = entry.name;
    if (!entry.j) return rep;
    const LieAlgebra& g = entry.algebra;
    const AlmostComplexStructure& j = *entry.j;
    rep.checks.push_back(checkEBound(g, j));
    rep.checks.push_back(checkNilpotentBound(g, j));
    for (auto& c : checkComplexLieBounds(g, j)) rep.checks.push_back(c);
    rep.checks.push_back(checkB1Bound(g, j));
    rep.checks.push_back(checkGe5(g, j));
    for (const auto& rc : checkMainlemmaConsequence(g, j)) {
        BoundCheck c = geq("central_series_drop[k=" + std::to_string(rc.k) +
                               ",p=" + std::to_string(rc.p) + "]",
                           true, rc.drop, 2);
        rep.checks.push_back(c);
    }
    // Upper half of the headline estimate: s <= dim - 2 for integrable J.
    if (isIntegrable(g, j).integrable)
        rep.checks.push_back(leq("nilindex_upper", true,
                                 static_cast<long>(g.nilIndex()),
                                 static_cast<long>(g.dim()) - 2));
    return rep;
}

std::vector<BoundsReport> boundsForCorpus(const std::vector<CatalogEntry>& corpus) {
    std::vector<BoundsReport> out;
    for (const auto& e : corpus) out.push_back(boundsFor(e));
    return out;
}

std::vector<BoundCheck> checkMainEstimate(std::size_t maxDim) {
    std::vector<BoundCheck> out;
    for (std::size_t dim = 6; dim <= maxDim; dim += 2) {
        std::size_t n2 = dim / 2;
        long lower = static_cast<long>(4 * n2 / 3);
        std::size_t witness = 0;  // D-family index of the dim-matching witness
        switch (dim % 6) {
            case 0: witness = 4 * (dim / 6); break;
            case 2: witness = 4 * ((dim - 2) / 6) + 1; break;
            case 4: witness = 4 * ((dim - 4) / 6) + 2; break;  // plus the R line
        }
        if (witness < 4) continue;
        CatalogEntry e = catalog::dFamily(witness);
        std::size_t wdim = e.algebra.dim() + (witness % 4 == 2 ? 1 : 0);
        if (wdim != dim)
            throw std::logic_error("main estimate witness dimension mismatch");
        long s = static_cast<long>(e.algebra.nilIndex());
        BoundCheck lowerCheck =
            geq("main_estimate_lower[dim=" + std::to_string(dim) + "]", true, s,
                lower);
        BoundCheck upperCheck =
            leq("main_estimate_upper[dim=" + std::to_string(dim) + "]", true, s,
                static_cast<long>(dim) - 2);
        out.push_back(lowerCheck);
        out.push_back(upperCheck);
    }
    return out;
}

std::vector<BoundCheck> checkAbstractIdentity(std::size_t maxN) {
    std::vector<BoundCheck> out;
    for (std::size_t n = 2; n <= maxN; ++n) {
        CatalogEntry e = catalog::dFamily(n);
        long s = static_cast<long>(e.algebra.nilIndex());
        long target = static_cast<long>(2 * e.algebra.dim() / 3);
        BoundCheck c;
        c.name = "abstract_identity[n=" + std::to_string(n) + "]";
        c.hypothesisMet = true;
        c.lhs = s;
        c.rhs = target;
        c.holds = s == target;
        c.sharp = c.holds;
        out.push_back(c);
    }
    return out;
}

}  // namespace nilcx
