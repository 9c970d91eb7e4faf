// Acceptance harness: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include <sys/wait.h>

#include "nilcx/bounds.hpp"
#include "nilcx/dsl.hpp"
#include "nilcx/jsearch.hpp"

using namespace nilcx;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::vector<std::string> details;

void note(const std::string& msg) { details.push_back(msg); }

void report(int num, const std::string& name, bool ok, double seconds) {
    std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", num,
                name.c_str(), seconds);
    if (!ok) {
        ++failures;
        for (const auto& d : details) std::printf("       %s\n", d.c_str());
    }
    details.clear();
}

#define REQUIRE_C(cond)                                        \
    do {                                                       \
        if (!(cond)) {                                         \
            ok = false;                                        \
            note(std::string("failed: ") + #cond);             \
        }                                                      \
    } while (0)

std::string fixturePath(const std::string& name) {
    return std::string(NILCX_FIXTURES_DIR) + "/" + name;
}

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct RunResult {
    int exitCode;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(NILCX_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::size_t> dimsOf(const std::vector<Subspace>& vs) {
    std::vector<std::size_t> out;
    for (const auto& v : vs) out.push_back(v.dim());
    return out;
}

// --- criterion 1: the six-dimensional golden example, end to end ------------

bool criterion1() {
    bool ok = true;
    auto e = catalog::g68();
    ClassificationReport r = classify(e.algebra, *e.j);
    REQUIRE_C(r.integrable);
    REQUIRE_C(!r.abelian);
    REQUIRE_C(!r.nilpotentStructure);
    std::vector<std::size_t> lcs;
    for (const auto& s : e.algebra.lowerCentralSeries()) lcs.push_back(s.dim());
    REQUIRE_C(lcs == (std::vector<std::size_t>{6, 4, 3, 1, 0}));
    REQUIRE_C(e.algebra.nilIndex() == 4);
    REQUIRE_C(betti(e.algebra, 1) == 2);
    JInvariantSeries js = jSeries(e.algebra, *e.j);
    REQUIRE_C(js.equalityCount == 1);
    // g^4 = <e6> and J e6 = -e3, so the J-closure of the last term is <e3,e6>.
    REQUIRE_C(js.spaces.back() ==
              Subspace(6, {basisVec(6, 2), basisVec(6, 5)}));
    return ok;
}

// --- criterion 2: structure equations in adapted coframes -------------------

bool criterion2() {
    bool ok = true;
    ParsedAlgebra pa = parseAlgebra(readFile(fixturePath("g6_8.lie")));
    auto coframe = parseCoframe(readFile(fixturePath("g6_8.coframe")), pa.algebra);
    Scalar half(1, 2);
    Scalar ihalf = Scalar::i() * half;

    CoframeExpansion w1 = expressDInCoframe(pa.algebra, coframe, 1);
    REQUIRE_C(w1.holo.empty() && w1.mixed.empty() && w1.anti.empty());
    CoframeExpansion w2 = expressDInCoframe(pa.algebra, coframe, 2);
    REQUIRE_C(w2.holo == (decltype(w2.holo){{{1, 3}, -ihalf}}));
    REQUIRE_C(w2.mixed == (decltype(w2.mixed){{{1, 3}, ihalf}}));
    REQUIRE_C(w2.anti.empty());
    CoframeExpansion w3 = expressDInCoframe(pa.algebra, coframe, 3);
    REQUIRE_C(w3.holo.empty() && w3.anti.empty());
    REQUIRE_C(w3.mixed == (decltype(w3.mixed){
                              {{1, 1}, -half}, {{1, 2}, half}, {{2, 1}, -half}}));

    // B(n), n <= 10: d omega^2 = -1/2 omega^1 ^ conj(omega^1) and
    // d omega^l = -omega^{l-1} ^ conj(omega^1) for 3 <= l <= n.
    for (std::size_t n = 2; n <= 10; ++n) {
        auto b = catalog::bFamily(n);
        auto flag = canonicalFlag(b.algebra, *b.j);
        CoframeExpansion f1 = expressDInCoframe(b.algebra, flag, 1);
        bool good = f1.holo.empty() && f1.mixed.empty() && f1.anti.empty();
        CoframeExpansion f2 = expressDInCoframe(b.algebra, flag, 2);
        good = good && f2.holo.empty() && f2.anti.empty() &&
               f2.mixed == decltype(f2.mixed){{{1, 1}, Scalar(-1, 2)}};
        for (std::size_t l = 3; l <= n; ++l) {
            CoframeExpansion fl = expressDInCoframe(b.algebra, flag, l);
            good = good && fl.holo.empty() && fl.anti.empty() &&
                   fl.mixed == decltype(fl.mixed){{{l - 1, 1}, Scalar(-1)}};
        }
        if (!good) {
            ok = false;
            note("B(" + std::to_string(n) + ") coframe equations mismatch");
        }
    }
    return ok;
}

// --- criterion 3: the graded D-family and its complex structures ------------

bool criterion3() {
    bool ok = true;
    for (std::size_t n = 2; n <= 40; ++n) {
        auto e = catalog::dFamily(n);
        std::size_t dim = e.algebra.dim();
        bool good = dim == catalog::dFamilyDim(n) && e.algebra.nilIndex() == n &&
                    n == 2 * dim / 3;
        if (!good) {
            ok = false;
            note("D(" + std::to_string(n) + ") dimension or nil index mismatch");
        }
    }
    for (std::size_t n = 4; n <= 23; ++n) {
        if (n > 21 && (n % 4 == 0 || n % 4 == 1)) continue;
        auto e = catalog::dFamilyWithJ(n);
        if (!isIntegrable(e.algebra, *e.j).integrable) {
            ok = false;
            note("D-family J not integrable at n = " + std::to_string(n));
        }
    }
    return ok;
}

// --- criterion 4: inequality suite with claimed sharpness -------------------

bool criterion4() {
    bool ok = true;
    for (const auto& rep : boundsForCorpus(catalog::defaultCorpus())) {
        if (!rep.allHold()) {
            ok = false;
            note("bounds fail for " + rep.subject);
        }
    }
    for (const auto& c : checkMainEstimate(20)) REQUIRE_C(c.holds);
    for (const auto& c : checkAbstractIdentity(13)) REQUIRE_C(c.holds);

    auto g68 = catalog::g68();
    REQUIRE_C(checkEBound(g68.algebra, *g68.j).sharp);
    REQUIRE_C(checkGe5(g68.algebra, *g68.j).sharp);
    for (std::size_t n : {2, 3, 4, 5})
        REQUIRE_C(checkNilpotentBound(catalog::bFamily(n).algebra,
                                      *catalog::bFamily(n).j)
                      .sharp);
    for (std::size_t n : {3, 4, 5}) {
        auto e = catalog::m0r(n);
        for (const auto& c : checkComplexLieBounds(e.algebra, *e.j))
            REQUIRE_C(c.sharp);
    }
    auto d8 = catalog::dFamilyWithJ(8);
    BoundCheck cd = checkGe5(d8.algebra, *d8.j);
    REQUIRE_C(cd.sharp && cd.lhs == 5);
    return ok;
}

// --- criterion 5: the filiform obstruction ---------------------------------

bool criterion5() {
    bool ok = true;
    for (std::size_t n = 5; n <= 12; ++n) {
        auto g = catalog::m0(n).algebra;
        auto lcs = g.lowerCentralSeries();
        long gap = static_cast<long>(g.dim()) - static_cast<long>(lcs[3].dim());
        if (gap != 4) {
            ok = false;
            note("m0(" + std::to_string(n) + ") fourth-term gap != 4");
        }
    }
    SearchResult r6 = search(catalog::m0(6).algebra, StructureClass::integrable);
    REQUIRE_C(r6.total == 120);
    REQUIRE_C(r6.hits.empty());
    SearchResult r8 = search(catalog::m0(8).algebra, StructureClass::integrable);
    REQUIRE_C(r8.total == 1680);
    REQUIRE_C(r8.hits.empty());
    return ok;
}

// --- criterion 6: the search recovers the known structure -------------------

bool criterion6() {
    bool ok = true;
    auto e = catalog::g68();
    SearchResult r = search(e.algebra, StructureClass::integrable);
    bool found = false;
    for (const auto& h : r.hits) {
        if (candidateMatrix(h, 6) == e.j->matrix()) found = true;
        ClassificationReport rep =
            verifyCertificate(e.algebra, AlmostComplexStructure(candidateMatrix(h, 6)));
        if (!rep.integrable) {
            ok = false;
            note("hit " + std::to_string(h.index) + " failed re-verification");
        }
    }
    REQUIRE_C(found);
    return ok;
}

// --- criterion 7: property suites over the corpus and random tables ---------

bool criterion7() {
    bool ok = true;
    std::mt19937 rng(20240824);
    std::uniform_int_distribution<long> coef(-2, 2);

    auto ddIsZero = [](const LieAlgebra& g) {
        for (std::size_t a = 0; a < g.dim(); ++a)
            if (!d(g, d(g, ExteriorForm::covector(basisVec(g.dim(), a)))).isZero())
                return false;
        return true;
    };

    // d.d = 0 iff the Jacobi identity holds: 50 random perturbations of
    // catalog tables plus 50 random basis-changes (always valid).
    std::vector<CatalogEntry> corpus = catalog::defaultCorpus();
    std::vector<const CatalogEntry*> small;
    for (const auto& e : corpus)
        if (e.algebra.dim() <= 8) small.push_back(&e);
    for (int t = 0; t < 50; ++t) {
        const LieAlgebra& base = small[t % small.size()]->algebra;
        std::size_t n = base.dim();
        LieAlgebra::BracketTable br = base.brackets();
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
        if (i == j) j = (j + 1) % n;
        if (i > j) std::swap(i, j);
        Vec v = br.count({i, j}) ? br[{i, j}] : Vec(n);
        v[k] = v[k] + Scalar(coef(rng));
        if (isZeroVec(v))
            br.erase({i, j});
        else
            br[{i, j}] = v;
        LieAlgebra mutated = LieAlgebra::makeUnchecked(base.basisNames(),
                                                       base.field(), br);
        bool jac = mutated.jacobiViolations().empty();
        if (ddIsZero(mutated) != jac) {
            ok = false;
            note("d.d = 0 disagrees with Jacobi on a mutated table");
        }
    }
    for (int t = 0; t < 50; ++t) {
        const LieAlgebra& base = small[(t + 3) % small.size()]->algebra;
        std::size_t n = base.dim();
        // Random unitriangular change of basis e_i -> e_i + c e_j (j > i)
        // transports a valid table to another valid table.
        Matrix p = Matrix::identity(n);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int rounds = 0; rounds < 3; ++rounds) {
            std::size_t i = pick(rng), j = pick(rng);
            if (i >= j) continue;
            p.at(i, j) = Scalar(coef(rng));
        }
        // p is invertible (unit upper triangular); transport brackets.
        Matrix pinv(n, n);
        {
            // Invert by solving p x = e_k column by column (back substitution).
            for (std::size_t c = 0; c < n; ++c) {
                Vec x(n);
                for (std::size_t rr = n; rr-- > 0;) {
                    Scalar s = (rr == c) ? Scalar(1) : Scalar(0);
                    for (std::size_t cc = rr + 1; cc < n; ++cc)
                        s = s - p.at(rr, cc) * x[cc];
                    x[rr] = s;
                }
                for (std::size_t rr = 0; rr < n; ++rr) pinv.at(rr, c) = x[rr];
            }
        }
        LieAlgebra::BracketTable br;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                Vec res = base.bracket(pinv.apply(basisVec(n, a)),
                                       pinv.apply(basisVec(n, b)));
                Vec out = p.apply(res);
                if (!isZeroVec(out)) br[{a, b}] = out;
            }
        LieAlgebra moved = LieAlgebra::makeUnchecked(base.basisNames(),
                                                     base.field(), br);
        if (!moved.jacobiViolations().empty() || !ddIsZero(moved)) {
            ok = false;
            note("basis-changed table lost the Jacobi identity");
        }
    }

    for (const auto& e : corpus) {
        if (!checkVAnnihilatorIdentity(e.algebra)) {
            ok = false;
            note("V_l != annihilator(g^{l+1}) for " + e.name);
        }
        if (!e.j) continue;
        if (!isIntegrable(e.algebra, *e.j).integrable) continue;
        if (!checkDjLemma(e.algebra, *e.j) || !checkLCommut(e.algebra, *e.j) ||
            !checkNontrivial(e.algebra, *e.j)) {
            ok = false;
            note("structural lemma fails for " + e.name);
        }
        ClassificationReport r = classify(e.algebra, *e.j);
        if (r.abelian && !r.nilpotentStructure) {
            ok = false;
            note("abelian but not nilpotent: " + e.name);
        }
        if (r.nilpotentStructure &&
            jSeries(e.algebra, *e.j).equalityCount != 0) {
            ok = false;
            note("nilpotent structure with E > 0: " + e.name);
        }
        auto flag = canonicalFlag(e.algebra, *e.j);
        if (!checkFlagIdealCondition(e.algebra, flag)) {
            ok = false;
            note("flag ideal condition fails for " + e.name);
        }
    }
    return ok;
}

// --- criterion 8: CLI contract ---------------------------------------------

bool criterion8() {
    bool ok = true;
    for (const char* name : {"g6_8.lie", "m0_6.lie", "coeffs.lie"}) {
        ParsedAlgebra pa = parseAlgebra(readFile(fixturePath(name)));
        ParsedAlgebra again = parseAlgebra(emitAlgebra(pa));
        if (again.algebra.brackets() != pa.algebra.brackets() ||
            again.algebra.basisNames() != pa.algebra.basisNames()) {
            ok = false;
            note(std::string("round trip fails for ") + name);
        }
    }
    REQUIRE_C(run("check " + fixturePath("g6_8.lie")).exitCode == 0);
    REQUIRE_C(run("check " + fixturePath("not_jacobi.lie")).exitCode == 1);
    REQUIRE_C(run("check " + fixturePath("dup_pair.lie")).exitCode == 2);
    REQUIRE_C(run("check missing_input").exitCode == 2);
    RunResult a = run("classify g6_8 --json");
    RunResult b = run("classify g6_8 --json");
    REQUIRE_C(a.exitCode == 0);
    REQUIRE_C(!a.output.empty() && a.output == b.output);
    RunResult c1 = run("bounds --corpus catalog --all --json");
    RunResult c2 = run("bounds --corpus catalog --all --json");
    REQUIRE_C(c1.exitCode == 0);
    REQUIRE_C(c1.output == c2.output);
    return ok;
}

template <typename F>
void timed(int num, const std::string& name, F f, double budget) {
    auto t0 = Clock::now();
    bool ok = f();
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (budget > 0 && secs > budget) {
        ok = false;
        note("runtime budget exceeded: " + std::to_string(secs) + "s > " +
             std::to_string(budget) + "s");
    }
    report(num, name, ok, secs);
}

}  // namespace

int main() {
    timed(1, "golden six-dimensional example", criterion1, 1.0);
    timed(2, "coframe structure equations", criterion2, 0);
    timed(3, "graded family dimensions and structures", criterion3, 60.0);
    timed(4, "inequality suite with sharpness", criterion4, 0);
    timed(5, "filiform obstruction and exhaustive search", criterion5, 30.0);
    timed(6, "search recovers the known structure", criterion6, 0);
    timed(7, "algebraic property suites", criterion7, 0);
    timed(8, "CLI contract", criterion8, 0);
    if (failures == 0)
        std::printf("all 8 acceptance criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
