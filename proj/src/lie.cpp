#include "nilcx/lie.hpp"

#include <algorithm>

namespace nilcx {

LieAlgebra LieAlgebra::makeUnchecked(std::vector<std::string> basisNames, Field field,
                                     BracketTable brackets) {
    LieAlgebra g;
    g.n_ = basisNames.size();
    g.field_ = field;
    g.basisNames_ = std::move(basisNames);
    for (auto& [pair, v] : brackets) {
        auto [i, j] = pair;
        if (i >= g.n_ || j >= g.n_ || i >= j)
            throw std::invalid_argument("bracket pair indices must satisfy i < j < dim");
        if (v.size() != g.n_) throw std::invalid_argument("bracket value length mismatch");
        if (!isZeroVec(v)) g.br_.emplace(pair, std::move(v));
    }
    return g;
}

LieAlgebra LieAlgebra::make(std::vector<std::string> basisNames, Field field,
                            BracketTable brackets) {
    LieAlgebra g = makeUnchecked(std::move(basisNames), field, std::move(brackets));
    auto bad = g.jacobiViolations();
    if (!bad.empty()) throw JacobiError(std::move(bad));
    return g;
}

std::size_t LieAlgebra::indexOf(const std::string& name) const {
    for (std::size_t i = 0; i < basisNames_.size(); ++i)
        if (basisNames_[i] == name) return i;
    throw std::invalid_argument("unknown basis name: " + name);
}

Vec LieAlgebra::structureVec(std::size_t i, std::size_t j) const {
    if (i == j) return Vec(n_);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = br_.find({i, j});
    if (it == br_.end()) return Vec(n_);
    return flip ? -it->second : it->second;
}

Vec LieAlgebra::bracketBasis(std::size_t i, const Vec& v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length mismatch");
    Vec out(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        if (j == i || v[j].isZero()) continue;
        Vec c = structureVec(i, j);
        for (std::size_t k = 0; k < n_; ++k)
            if (!c[k].isZero()) out[k] += v[j] * c[k];
    }
    return out;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != n_ || y.size() != n_)
        throw std::invalid_argument("vector length mismatch");
    Vec out(n_);
    for (const auto& [pair, c] : br_) {
        auto [i, j] = pair;
        // contribution x_i y_j [e_i,e_j] + x_j y_i [e_j,e_i]
        Scalar f = x[i] * y[j] - x[j] * y[i];
        if (f.isZero()) continue;
        for (std::size_t k = 0; k < n_; ++k)
            if (!c[k].isZero()) out[k] += f * c[k];
    }
    return out;
}

std::vector<JacobiViolation> LieAlgebra::jacobiViolations() const {
    std::vector<JacobiViolation> bad;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            Vec cij = structureVec(i, j);
            for (std::size_t k = j + 1; k < n_; ++k) {
                Vec cjk = structureVec(j, k);
                Vec cki = structureVec(k, i);
                bool allZero = isZeroVec(cij) && isZeroVec(cjk) && isZeroVec(cki);
                if (allZero) continue;
                Vec r = bracketBasis(i, cjk) + bracketBasis(j, cki) +
                        bracketBasis(k, cij);
                if (!isZeroVec(r)) bad.push_back({i, j, k, std::move(r)});
            }
        }
    }
    return bad;
}

std::vector<Subspace> LieAlgebra::lowerCentralSeries() const {
    std::vector<Subspace> seq;
    seq.push_back(Subspace::full(n_));
    for (;;) {
        const Subspace& prev = seq.back();
        RowSpan span(n_);
        for (std::size_t i = 0; i < n_ && span.dim() < n_; ++i) {
            for (const auto& row : prev.basis()) {
                Vec b = bracketBasis(i, row);
                if (!isZeroVec(b)) span.add(std::move(b));
            }
        }
        Subspace next(n_, span.rows());
        bool stop = next.dim() == 0 || next.dim() == prev.dim();
        seq.push_back(std::move(next));
        if (stop) break;
    }
    return seq;
}

bool LieAlgebra::isNilpotent() const { return lowerCentralSeries().back().dim() == 0; }

std::size_t LieAlgebra::nilIndex() const {
    auto seq = lowerCentralSeries();
    if (seq.back().dim() != 0) throw NotNilpotentError();
    return seq.size() - 1;
}

std::vector<std::size_t> LieAlgebra::aSequence() const {
    auto seq = lowerCentralSeries();
    if (seq.back().dim() != 0) throw NotNilpotentError();
    std::vector<std::size_t> a;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        a.push_back(seq[i].dim() - seq[i + 1].dim());
    return a;
}

bool LieAlgebra::isFiliform() const {
    if (n_ < 3 || !isNilpotent()) return false;
    return nilIndex() == n_ - 1;
}

Subspace LieAlgebra::derivedSubalgebra() const {
    RowSpan span(n_);
    for (const auto& [pair, c] : br_) {
        (void)pair;
        span.add(c);
    }
    return Subspace(n_, span.rows());
}

LieAlgebra directSum(const LieAlgebra& a, const LieAlgebra& b) {
    if (a.field() != b.field())
        throw std::invalid_argument("direct sum requires a common field");
    std::vector<std::string> names = a.basisNames();
    for (const auto& nm : b.basisNames()) {
        std::string candidate = nm;
        while (std::find(names.begin(), names.end(), candidate) != names.end())
            candidate += "'";
        names.push_back(candidate);
    }
    std::size_t na = a.dim(), n = a.dim() + b.dim();
    LieAlgebra::BracketTable br;
    for (const auto& [pair, c] : a.brackets()) {
        Vec v(n);
        for (std::size_t k = 0; k < na; ++k) v[k] = c[k];
        br[{pair.first, pair.second}] = std::move(v);
    }
    for (const auto& [pair, c] : b.brackets()) {
        Vec v(n);
        for (std::size_t k = 0; k < b.dim(); ++k) v[na + k] = c[k];
        br[{na + pair.first, na + pair.second}] = std::move(v);
    }
    return LieAlgebra::make(std::move(names), a.field(), std::move(br));
}

LieAlgebra directSumWithLine(const LieAlgebra& g, const std::string& name) {
    LieAlgebra line =
        LieAlgebra::make({name}, g.field(), LieAlgebra::BracketTable{});
    return directSum(g, line);
}

LieAlgebra complexify(const LieAlgebra& g) {
    return LieAlgebra::make(g.basisNames(), Field::gaussian,
                            LieAlgebra::BracketTable(g.brackets()));
}

bool checkGrading(const LieAlgebra& g, const GradedTag& tag) {
    if (tag.degrees.size() != g.dim()) return false;
    for (const auto& [pair, c] : g.brackets()) {
        std::size_t d = tag.degrees[pair.first] + tag.degrees[pair.second];
        for (std::size_t k = 0; k < g.dim(); ++k)
            if (!c[k].isZero() && tag.degrees[k] != d) return false;
    }
    return true;
}

Subspace gradedTail(const LieAlgebra& g, const GradedTag& tag, std::size_t m) {
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < g.dim(); ++k)
        if (tag.degrees[k] >= m) rows.push_back(basisVec(g.dim(), k));
    return Subspace(g.dim(), rows);
}

}  // namespace nilcx
