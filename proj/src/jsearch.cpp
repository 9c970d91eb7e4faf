#include "nilcx/jsearch.hpp"

#include <stdexcept>

namespace nilcx {

std::size_t candidateCount(std::size_t n) {
    if (n % 2 != 0) throw std::invalid_argument("search requires even dimension");
    std::size_t matchings = 1;
    for (std::size_t k = n - 1; k > 1; k -= 2) matchings *= k;
    if (n == 0) matchings = 1;
    return matchings << (n / 2);
}

namespace {

void buildMatchings(std::vector<std::size_t>& unused,
                    std::vector<std::pair<std::size_t, std::size_t>>& cur,
                    std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& out) {
    if (unused.empty()) {
        out.push_back(cur);
        return;
    }
    std::size_t first = unused.front();
    for (std::size_t t = 1; t < unused.size(); ++t) {
        std::size_t partner = unused[t];
        std::vector<std::size_t> rest;
        for (std::size_t q = 1; q < unused.size(); ++q)
            if (q != t) rest.push_back(unused[q]);
        cur.emplace_back(first, partner);
        buildMatchings(rest, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<JCandidate> enumerateCandidates(std::size_t n) {
    if (n % 2 != 0) throw std::invalid_argument("search requires even dimension");
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(i);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> matchings;
    std::vector<std::pair<std::size_t, std::size_t>> cur;
    buildMatchings(all, cur, matchings);
    const std::size_t m = n / 2;
    std::vector<JCandidate> out;
    out.reserve(matchings.size() << m);
    std::size_t index = 0;
    for (const auto& match : matchings)
        for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
            JCandidate c;
            c.matching = match;
            c.signs.resize(m);
            for (std::size_t b = 0; b < m; ++b)
                c.signs[b] = (mask >> b) & 1 ? -1 : 1;
            c.index = index++;
            out.push_back(std::move(c));
        }
    return out;
}

Matrix candidateMatrix(const JCandidate& c, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t b = 0; b < c.matching.size(); ++b) {
        auto [i, j] = c.matching[b];
        // J e_i = sigma e_j, J e_j = -sigma e_i
        m.at(j, i) = Scalar(c.signs[b]);
        m.at(i, j) = Scalar(-c.signs[b]);
    }
    return m;
}

namespace {

// Fast predicate evaluation: J maps basis vectors to signed basis vectors, so
// each condition reduces to combinations of stored structure vectors.
struct SignedPerm {
    std::vector<std::size_t> to;
    std::vector<int> sign;

    explicit SignedPerm(const JCandidate& c, std::size_t n) : to(n), sign(n) {
        for (std::size_t b = 0; b < c.matching.size(); ++b) {
            auto [i, j] = c.matching[b];
            to[i] = j;
            sign[i] = c.signs[b];
            to[j] = i;
            sign[j] = -c.signs[b];
        }
    }

    Vec apply(const Vec& x) const {
        Vec out(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!x[i].isZero())
                out[to[i]] = sign[i] > 0 ? x[i] : -x[i];
        return out;
    }
};

bool fastIntegrable(const LieAlgebra& g, const SignedPerm& p) {
    const std::size_t n = g.dim();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Vec lhs = g.structureVec(p.to[a], p.to[b]);
            if (p.sign[a] * p.sign[b] < 0) lhs = -lhs;
            Vec r = lhs - g.structureVec(a, b);
            Vec t = g.structureVec(p.to[a], b);
            if (p.sign[a] < 0) t = -t;
            r = r - p.apply(t);
            t = g.structureVec(a, p.to[b]);
            if (p.sign[b] < 0) t = -t;
            r = r - p.apply(t);
            if (!isZeroVec(r)) return false;
        }
    return true;
}

bool fastAbelian(const LieAlgebra& g, const SignedPerm& p) {
    const std::size_t n = g.dim();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Vec lhs = g.structureVec(p.to[a], p.to[b]);
            if (p.sign[a] * p.sign[b] < 0) lhs = -lhs;
            if (!isZeroVec(lhs - g.structureVec(a, b))) return false;
        }
    return true;
}

bool fastComplexLie(const LieAlgebra& g, const SignedPerm& p) {
    const std::size_t n = g.dim();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            Vec lhs = g.structureVec(p.to[a], b);
            if (p.sign[a] < 0) lhs = -lhs;
            if (!isZeroVec(lhs - p.apply(g.structureVec(a, b)))) return false;
        }
    return true;
}

}  // namespace

SearchResult search(const LieAlgebra& g, StructureClass cls) {
    const std::size_t n = g.dim();
    if (n % 2 != 0) throw std::invalid_argument("search requires even dimension");
    SearchResult out;
    for (const auto& cand : enumerateCandidates(n)) {
        ++out.total;
        SignedPerm p(cand, n);
        bool hit = false;
        switch (cls) {
            case StructureClass::integrable: hit = fastIntegrable(g, p); break;
            case StructureClass::abelian: hit = fastAbelian(g, p); break;
            case StructureClass::complex_lie: hit = fastComplexLie(g, p); break;
            case StructureClass::nilpotent:
                hit = fastIntegrable(g, p) &&
                      isNilpotentStructure(
                          g, AlmostComplexStructure(candidateMatrix(cand, n)));
                break;
        }
        if (hit) out.hits.push_back(cand);
    }
    return out;
}

ClassificationReport verifyCertificate(const LieAlgebra& g,
                                       const AlmostComplexStructure& j) {
    return classify(g, j);
}

}  // namespace nilcx
