#include "nilcx/cxstruct.hpp"

#include <stdexcept>

namespace nilcx {

AlmostComplexStructure::AlmostComplexStructure(Matrix m) : m_(std::move(m)) {
    const std::size_t n = m_.rows();
    if (m_.cols() != n) throw std::invalid_argument("J must be square");
    if (n % 2 != 0) throw std::invalid_argument("J requires even dimension");
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (!m_.at(r, c).isRational())
                throw std::invalid_argument("J entries must be rational");
    Matrix sq = m_ * m_;
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) {
            Scalar want = (r == c) ? Scalar(-1) : Scalar(0);
            if (sq.at(r, c) != want)
                throw std::invalid_argument("J^2 != -I (column " + std::to_string(c) +
                                            ")");
        }
}

Vec nijenhuis(const LieAlgebra& g, const AlmostComplexStructure& j, const Vec& x,
              const Vec& y) {
    Vec jx = j.apply(x), jy = j.apply(y);
    Vec out = g.bracket(jx, jy);
    out = out - g.bracket(x, y);
    out = out - j.apply(g.bracket(jx, y));
    out = out - j.apply(g.bracket(x, jy));
    return out;
}

IntegrabilityResult isIntegrable(const LieAlgebra& g, const AlmostComplexStructure& j) {
    const std::size_t n = g.dim();
    if (j.dim() != n) throw std::invalid_argument("J dimension mismatch");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (!isZeroVec(nijenhuis(g, j, basisVec(n, a), basisVec(n, b))))
                return {false, std::make_pair(a, b)};
    return {true, std::nullopt};
}

bool isAbelianStructure(const LieAlgebra& g, const AlmostComplexStructure& j) {
    const std::size_t n = g.dim();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Vec x = basisVec(n, a), y = basisVec(n, b);
            if (!isZeroVec(g.bracket(j.apply(x), j.apply(y)) - g.bracket(x, y)))
                return false;
        }
    return true;
}

bool isComplexLieStructure(const LieAlgebra& g, const AlmostComplexStructure& j) {
    const std::size_t n = g.dim();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            Vec x = basisVec(n, a), y = basisVec(n, b);
            if (!isZeroVec(g.bracket(j.apply(x), y) - j.apply(g.bracket(x, y))))
                return false;
        }
    return true;
}

ComplexSplitting splitting(const LieAlgebra& g, const AlmostComplexStructure& j) {
    const std::size_t n = g.dim();
    if (j.dim() != n) throw std::invalid_argument("J dimension mismatch");
    const Scalar i = Scalar::i();
    std::vector<Vec> plus, minus, lam10, lam01;
    Matrix jt = j.dualMatrix();
    for (std::size_t k = 0; k < n; ++k) {
        Vec e = basisVec(n, k);
        Vec je = j.apply(e);
        plus.push_back(e + i * je);
        minus.push_back(e - i * je);
        Vec jte = jt.apply(e);
        lam10.push_back(e + i * jte);
        lam01.push_back(e - i * jte);
    }
    return ComplexSplitting{Subspace(n, plus), Subspace(n, minus), Subspace(n, lam10),
                            Subspace(n, lam01)};
}

std::map<std::pair<std::size_t, std::size_t>, ExteriorForm> pqDecompose(
    const ExteriorForm& w, const ComplexSplitting& s) {
    const std::size_t n = w.ambientDim();
    const std::size_t k = w.degree();
    // Basis of Lambda^k from wedges of p rows of lambda10 and q of lambda01.
    std::vector<ExteriorForm> basisForms;
    std::vector<std::pair<std::size_t, std::size_t>> basisType;
    for (std::size_t p = 0; p <= k; ++p) {
        std::size_t q = k - p;
        auto holoSets = lexTuples(s.lambda10.dim(), p);
        auto antiSets = lexTuples(s.lambda01.dim(), q);
        for (const auto& hs : holoSets)
            for (const auto& as : antiSets) {
                ExteriorForm f = ExteriorForm::constant(n, Scalar(1));
                for (std::size_t ix : hs)
                    f = wedge(f, ExteriorForm::covector(s.lambda10.basis()[ix]));
                for (std::size_t ix : as)
                    f = wedge(f, ExteriorForm::covector(s.lambda01.basis()[ix]));
                basisForms.push_back(std::move(f));
                basisType.emplace_back(p, q);
            }
    }
    // Solve for the coordinates of w in this basis.
    auto tuples = lexTuples(n, k);
    Matrix aug(tuples.size(), basisForms.size() + 1);
    for (std::size_t c = 0; c < basisForms.size(); ++c) {
        Vec col = basisForms[c].toCoords();
        for (std::size_t r = 0; r < tuples.size(); ++r) aug.at(r, c) = col[r];
    }
    Vec rhs = w.toCoords();
    for (std::size_t r = 0; r < tuples.size(); ++r) aug.at(r, basisForms.size()) = rhs[r];
    Matrix red = rref(aug);
    Vec sol(basisForms.size());
    for (std::size_t r = 0; r < red.rows(); ++r) {
        std::size_t piv = basisForms.size() + 1;
        for (std::size_t c = 0; c <= basisForms.size(); ++c)
            if (!red.at(r, c).isZero()) {
                piv = c;
                break;
            }
        if (piv == basisForms.size())
            throw std::logic_error("pq decomposition: inconsistent system");
        if (piv < basisForms.size()) sol[piv] = red.at(r, basisForms.size());
    }
    std::map<std::pair<std::size_t, std::size_t>, ExteriorForm> out;
    for (std::size_t c = 0; c < basisForms.size(); ++c) {
        if (sol[c].isZero()) continue;
        auto [it, fresh] = out.try_emplace(basisType[c], n, k);
        it->second = it->second + sol[c] * basisForms[c];
        (void)fresh;
    }
    return out;
}

JInvariantSeries jSeries(const LieAlgebra& g, const AlmostComplexStructure& j) {
    auto lcs = g.lowerCentralSeries();
    std::size_t s = g.nilIndex();
    JInvariantSeries out;
    for (std::size_t l = 1; l <= s; ++l) {
        std::vector<Vec> rows = lcs[l - 1].basis();
        for (const auto& r : lcs[l - 1].basis()) rows.push_back(j.apply(r));
        out.spaces.emplace_back(g.dim(), rows);
    }
    out.equalityCount = 0;
    for (std::size_t l = 0; l + 1 < out.spaces.size(); ++l)
        if (out.spaces[l] == out.spaces[l + 1]) ++out.equalityCount;
    return out;
}

std::vector<Subspace> v10Filtration(const LieAlgebra& g,
                                    const AlmostComplexStructure& j) {
    auto vs = vFiltration(g);
    ComplexSplitting sp = splitting(g, j);
    auto js = jSeries(g, j);
    std::vector<Subspace> out;
    for (std::size_t l = 0; l < vs.size(); ++l) {
        Subspace v10 = subspaceIntersect(vs[l], sp.lambda10);
        // Independent route: V_l^{1,0} is the annihilator of
        // g^{l+1}(J) + span{X - iJX}.
        Subspace gl1 = l < js.spaces.size() ? js.spaces[l] : Subspace(g.dim());
        if (v10 != annihilator(subspaceSum(gl1, sp.minusI)))
            throw std::logic_error("v10 filtration cross-check failed");
        out.push_back(std::move(v10));
    }
    return out;
}

namespace {

Subspace conjSubspace(const Subspace& s) {
    std::vector<Vec> rows;
    for (const auto& r : s.basis()) rows.push_back(conjVec(r));
    return Subspace(s.ambientDim(), rows);
}

Vec dCovectorCoords(const LieAlgebra& g, const Vec& f) {
    return d(g, ExteriorForm::covector(f)).toCoords();
}

}  // namespace

bool checkDjLemma(const LieAlgebra& g, const AlmostComplexStructure& j) {
    auto v10 = v10Filtration(g, j);
    auto vs = vFiltration(g);
    for (std::size_t l = 1; l < v10.size(); ++l) {
        Subspace target = wedgeSpan(v10[l - 1], vs[l - 1]);
        for (const auto& f : v10[l].basis())
            if (!target.containsVec(dCovectorCoords(g, f))) return false;
    }
    return true;
}

bool isNilpotentStructure(const LieAlgebra& g, const AlmostComplexStructure& j,
                          std::optional<std::size_t>* failingLevel) {
    auto v10 = v10Filtration(g, j);
    for (std::size_t l = 1; l < v10.size(); ++l) {
        Subspace sum = subspaceSum(v10[l - 1], conjSubspace(v10[l - 1]));
        Subspace target = wedgeSpan(v10[l - 1], sum);
        for (const auto& f : v10[l].basis())
            if (!target.containsVec(dCovectorCoords(g, f))) {
                if (failingLevel) *failingLevel = l;
                return false;
            }
    }
    return true;
}

std::vector<Vec> canonicalFlag(const LieAlgebra& g, const AlmostComplexStructure& j) {
    if (!isIntegrable(g, j).integrable)
        throw std::invalid_argument("canonical flag requires an integrable J");
    auto v10 = v10Filtration(g, j);
    RowSpan seen(g.dim());
    std::vector<Vec> flag;
    for (const auto& level : v10)
        for (const auto& row : level.basis())
            if (seen.add(row)) flag.push_back(row);
    return flag;
}

namespace {

// span{ coframe[a] ^ theta : a < limit, theta any covector } in Lambda^2.
Subspace idealDegree2(std::size_t n, const std::vector<Vec>& coframe,
                      std::size_t limit) {
    std::vector<Vec> gens(coframe.begin(), coframe.begin() + limit);
    return wedgeSpan(Subspace(n, gens), Subspace::full(n));
}

}  // namespace

bool checkFlagIdealCondition(const LieAlgebra& g, const std::vector<Vec>& coframe) {
    const std::size_t n = g.dim();
    for (std::size_t l = 0; l < coframe.size(); ++l) {
        Subspace target = idealDegree2(n, coframe, l);
        if (!target.containsVec(dCovectorCoords(g, coframe[l]))) return false;
    }
    return true;
}

bool checkFlagAbelianIdealCondition(const LieAlgebra& g,
                                    const std::vector<Vec>& coframe) {
    const std::size_t n = g.dim();
    for (std::size_t l = 0; l < coframe.size(); ++l) {
        std::vector<Vec> holo(coframe.begin(), coframe.begin() + l);
        std::vector<Vec> anti;
        for (const auto& r : holo) anti.push_back(conjVec(r));
        Subspace target = wedgeSpan(Subspace(n, holo), Subspace(n, anti));
        if (!target.containsVec(dCovectorCoords(g, coframe[l]))) return false;
    }
    return true;
}

bool checkLCommut(const LieAlgebra& g, const AlmostComplexStructure& j) {
    auto js = jSeries(g, j);
    for (std::size_t l = 0; l < js.spaces.size(); ++l) {
        const Subspace& cur = js.spaces[l];
        const Subspace next =
            l + 1 < js.spaces.size() ? js.spaces[l + 1] : Subspace(g.dim());
        for (std::size_t a = 0; a < cur.dim(); ++a)
            for (std::size_t b = a + 1; b < cur.dim(); ++b)
                if (!next.containsVec(g.bracket(cur.basis()[a], cur.basis()[b])))
                    return false;
    }
    return true;
}

bool checkNontrivial(const LieAlgebra& g, const AlmostComplexStructure& j) {
    Subspace der = g.derivedSubalgebra();
    std::vector<Vec> rows = der.basis();
    for (const auto& r : der.basis()) rows.push_back(j.apply(r));
    return Subspace(g.dim(), rows).dim() < g.dim();
}

ClassificationReport classify(const LieAlgebra& g, const AlmostComplexStructure& j) {
    ClassificationReport rep;
    auto integ = isIntegrable(g, j);
    rep.integrable = integ.integrable;
    rep.failingPair = integ.witness;
    rep.abelian = isAbelianStructure(g, j);
    rep.complexLie = isComplexLieStructure(g, j);
    std::optional<std::size_t> level;
    rep.nilpotentStructure = isNilpotentStructure(g, j, &level);
    rep.failingLevel = level;
    return rep;
}

CoframeExpansion expressDInCoframe(const LieAlgebra& g, const std::vector<Vec>& coframe,
                                   std::size_t k) {
    const std::size_t n = g.dim();
    const std::size_t m = coframe.size();
    if (m * 2 != n) throw std::invalid_argument("coframe must have dim/2 elements");
    if (k < 1 || k > m) throw std::invalid_argument("coframe index out of range");
    std::vector<Vec> conj;
    for (const auto& r : coframe) conj.push_back(conjVec(r));

    auto pairCoords = [&](const Vec& u, const Vec& v) {
        return wedge(ExteriorForm::covector(u), ExteriorForm::covector(v)).toCoords();
    };
    std::vector<Vec> cols;
    std::vector<std::pair<char, std::pair<std::size_t, std::size_t>>> labels;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            cols.push_back(pairCoords(coframe[a], coframe[b]));
            labels.push_back({'h', {a + 1, b + 1}});
        }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            cols.push_back(pairCoords(coframe[a], conj[b]));
            labels.push_back({'m', {a + 1, b + 1}});
        }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            cols.push_back(pairCoords(conj[a], conj[b]));
            labels.push_back({'a', {a + 1, b + 1}});
        }

    Vec rhs = dCovectorCoords(g, coframe[k - 1]);
    Matrix aug(rhs.size(), cols.size() + 1);
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rhs.size(); ++r) aug.at(r, c) = cols[c][r];
    for (std::size_t r = 0; r < rhs.size(); ++r) aug.at(r, cols.size()) = rhs[r];
    Matrix red = rref(aug);
    Vec sol(cols.size());
    for (std::size_t r = 0; r < red.rows(); ++r) {
        std::size_t piv = cols.size() + 1;
        for (std::size_t c = 0; c <= cols.size(); ++c)
            if (!red.at(r, c).isZero()) {
                piv = c;
                break;
            }
        if (piv == cols.size())
            throw std::invalid_argument(
                "coframe together with its conjugate does not span the dual");
        if (piv < cols.size()) sol[piv] = red.at(r, cols.size());
    }
    CoframeExpansion out;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (sol[c].isZero()) continue;
        switch (labels[c].first) {
            case 'h': out.holo[labels[c].second] = sol[c]; break;
            case 'm': out.mixed[labels[c].second] = sol[c]; break;
            default: out.anti[labels[c].second] = sol[c]; break;
        }
    }
    return out;
}

}  // namespace nilcx
