#include "nilcx/exterior.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilcx {

std::vector<IndexTuple> lexTuples(std::size_t n, std::size_t k) {
    std::vector<IndexTuple> out;
    if (k > n) return out;
    IndexTuple t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = i;
    for (;;) {
        out.push_back(t);
        if (k == 0) break;
        std::size_t i = k;
        while (i > 0 && t[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++t[i - 1];
        for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

ExteriorForm ExteriorForm::covector(const Vec& coeffs) {
    ExteriorForm f(coeffs.size(), 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].isZero()) f.c_[{i}] = coeffs[i];
    return f;
}

ExteriorForm ExteriorForm::constant(std::size_t ambientDim, const Scalar& c) {
    ExteriorForm f(ambientDim, 0);
    if (!c.isZero()) f.c_[IndexTuple{}] = c;
    return f;
}

void ExteriorForm::addTerm(IndexTuple t, const Scalar& c) {
    if (t.size() != k_) throw std::invalid_argument("term degree mismatch");
    if (c.isZero()) return;
    // Sort, tracking the permutation sign; repeated indices kill the term.
    int sign = 1;
    for (std::size_t i = 1; i < t.size(); ++i)
        for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
            if (t[j - 1] == t[j]) return;
            std::swap(t[j - 1], t[j]);
            sign = -sign;
        }
    Scalar v = sign > 0 ? c : -c;
    auto it = c_.find(t);
    if (it == c_.end()) {
        c_.emplace(std::move(t), std::move(v));
    } else {
        it->second += v;
        if (it->second.isZero()) c_.erase(it);
    }
}

Scalar ExteriorForm::coeff(const IndexTuple& t) const {
    auto it = c_.find(t);
    return it == c_.end() ? Scalar() : it->second;
}

ExteriorForm operator+(const ExteriorForm& a, const ExteriorForm& b) {
    if (a.n_ != b.n_ || a.k_ != b.k_) throw std::invalid_argument("form shape mismatch");
    ExteriorForm out = a;
    for (const auto& [t, c] : b.c_) out.addTerm(t, c);
    return out;
}

ExteriorForm operator*(const Scalar& c, const ExteriorForm& a) {
    ExteriorForm out(a.n_, a.k_);
    if (c.isZero()) return out;
    for (const auto& [t, v] : a.c_) out.c_[t] = c * v;
    return out;
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("form ambient mismatch");
    ExteriorForm out(a.n_, a.k_ + b.k_);
    for (const auto& [s, cs] : a.c_)
        for (const auto& [t, ct] : b.c_) {
            IndexTuple u = s;
            u.insert(u.end(), t.begin(), t.end());
            out.addTerm(std::move(u), cs * ct);
        }
    return out;
}

Vec ExteriorForm::toCoords() const {
    auto tuples = lexTuples(n_, k_);
    Vec out(tuples.size());
    for (std::size_t i = 0; i < tuples.size(); ++i) out[i] = coeff(tuples[i]);
    return out;
}

ExteriorForm ExteriorForm::fromCoords(std::size_t ambientDim, std::size_t degree,
                                      const Vec& coords) {
    auto tuples = lexTuples(ambientDim, degree);
    if (coords.size() != tuples.size())
        throw std::invalid_argument("coordinate length mismatch");
    ExteriorForm f(ambientDim, degree);
    for (std::size_t i = 0; i < tuples.size(); ++i)
        if (!coords[i].isZero()) f.c_[tuples[i]] = coords[i];
    return f;
}

ExteriorForm d(const LieAlgebra& g, const ExteriorForm& w) {
    const std::size_t n = g.dim();
    if (w.ambientDim() != n) throw std::invalid_argument("form ambient mismatch");
    ExteriorForm out(n, w.degree() + 1);
    if (w.degree() == 0) return out;
    for (const auto& [t, c] : w.coeffs()) {
        for (std::size_t p = 0; p < t.size(); ++p) {
            Scalar sgn = (p % 2 == 0) ? c : -c;
            // d e^{t_p} = sum_{i<j} c_ij^{t_p} e^i ^ e^j
            for (const auto& [pair, cv] : g.brackets()) {
                const Scalar& coef = cv[t[p]];
                if (coef.isZero()) continue;
                IndexTuple u;
                u.reserve(t.size() + 1);
                u.push_back(pair.first);
                u.push_back(pair.second);
                for (std::size_t q = 0; q < t.size(); ++q)
                    if (q != p) u.push_back(t[q]);
                out.addTerm(std::move(u), sgn * coef);
            }
        }
    }
    return out;
}

Matrix dMatrix(const LieAlgebra& g, std::size_t k) {
    const std::size_t n = g.dim();
    auto dom = lexTuples(n, k);
    auto cod = lexTuples(n, k + 1);
    Matrix m(cod.size(), dom.size());
    for (std::size_t col = 0; col < dom.size(); ++col) {
        ExteriorForm f(n, k);
        f.addTerm(dom[col], Scalar(1));
        Vec image = d(g, f).toCoords();
        for (std::size_t r = 0; r < cod.size(); ++r) m.at(r, col) = image[r];
    }
    return m;
}

std::size_t betti(const LieAlgebra& g, std::size_t k) {
    const std::size_t n = g.dim();
    if (k > n) throw std::invalid_argument("degree exceeds dimension");
    if (k == 0) return 1;
    std::size_t rk = rank(dMatrix(g, k));
    std::size_t rkPrev = rank(dMatrix(g, k - 1));
    return binomial(n, k) - rk - rkPrev;
}

Subspace cocycleSpace(const LieAlgebra& g, std::size_t k) {
    return Subspace(binomial(g.dim(), k), kernel(dMatrix(g, k)));
}

Subspace coboundarySpace(const LieAlgebra& g, std::size_t k) {
    if (k == 0) return Subspace(1);
    Matrix m = dMatrix(g, k - 1);
    return Subspace(m.rows(), m.transpose().rowVectors());
}

Subspace wedgeSpan(const Subspace& a, const Subspace& b) {
    if (a.ambientDim() != b.ambientDim())
        throw std::invalid_argument("subspace ambient dimension mismatch");
    const std::size_t n = a.ambientDim();
    auto pairs = lexTuples(n, 2);
    RowSpan span(pairs.size());
    for (const auto& u : a.basis())
        for (const auto& v : b.basis()) {
            Vec row(pairs.size());
            for (std::size_t ix = 0; ix < pairs.size(); ++ix) {
                std::size_t i = pairs[ix][0], j = pairs[ix][1];
                row[ix] = u[i] * v[j] - u[j] * v[i];
            }
            if (!isZeroVec(row)) span.add(std::move(row));
        }
    return Subspace(pairs.size(), span.rows());
}

std::vector<Subspace> vFiltration(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    Matrix d1 = dMatrix(g, 1);
    std::vector<Subspace> vs;
    vs.emplace_back(n);  // V_0 = 0
    for (;;) {
        // f in V_l  iff  d1 f lies in Lambda^2(V_{l-1}), i.e. Q (d1 f) = 0
        // where the rows of Q span the annihilator of that wedge subspace.
        Subspace w = wedgeSpan(vs.back(), vs.back());
        Matrix q = Matrix::fromRows(annihilator(w).basis(), w.ambientDim());
        Subspace v(n, kernel(q * d1));
        if (v == vs.back()) throw NotNilpotentError();
        bool done = v.dim() == n;
        vs.push_back(std::move(v));
        if (done) return vs;
    }
}

bool checkVAnnihilatorIdentity(const LieAlgebra& g) {
    auto vs = vFiltration(g);
    auto lcs = g.lowerCentralSeries();
    for (std::size_t l = 0; l < vs.size(); ++l) {
        Subspace gl = l < lcs.size() ? lcs[l] : Subspace(g.dim());  // g^{l+1}
        if (vs[l] != annihilator(gl)) return false;
    }
    return true;
}

}  // namespace nilcx
