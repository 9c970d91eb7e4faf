#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcx/catalog.hpp"

using namespace nilcx;

namespace {

std::vector<std::size_t> lcsDims(const LieAlgebra& g) {
    std::vector<std::size_t> out;
    for (const auto& s : g.lowerCentralSeries()) out.push_back(s.dim());
    return out;
}

}  // namespace

TEST_CASE("every entry is a lie algebra with expected invariants") {
    for (const auto& e : catalog::defaultCorpus()) {
        CAPTURE(e.name);
        CHECK(e.algebra.jacobiViolations().empty());
        REQUIRE(e.expected.count("dim"));
        CHECK(static_cast<long>(e.algebra.dim()) == e.expected.at("dim"));
        REQUIRE(e.expected.count("s"));
        CHECK(static_cast<long>(e.algebra.nilIndex()) == e.expected.at("s"));
        if (e.expected.count("b1"))
            CHECK(static_cast<long>(betti(e.algebra, 1)) == e.expected.at("b1"));
        if (e.expected.count("b2"))
            CHECK(static_cast<long>(betti(e.algebra, 2)) == e.expected.at("b2"));
        if (e.grading) CHECK(checkGrading(e.algebra, *e.grading));
        if (e.j) {
            CHECK(e.j->dim() == e.algebra.dim());
            CHECK(isIntegrable(e.algebra, *e.j).integrable);
        }
    }
}

TEST_CASE("family-specific structure") {
    CHECK(catalog::heisenberg(2).algebra.dim() == 5);
    CHECK(catalog::heisenberg(2).algebra.nilIndex() == 2);
    CHECK(isAbelianStructure(catalog::heisenbergPlusR(2).algebra,
                             *catalog::heisenbergPlusR(2).j));
    CHECK(betti(catalog::heisenbergPlusR(2).algebra, 1) == 5);

    for (std::size_t n : {4, 6, 8}) {
        auto e = catalog::m0(n);
        CHECK(e.algebra.isFiliform());
        CHECK(e.algebra.nilIndex() == n - 1);
    }

    for (std::size_t n : {3, 4, 5}) {
        auto e = catalog::m0r(n);
        CAPTURE(n);
        CHECK(e.algebra.dim() == 2 * n);
        CHECK(e.algebra.nilIndex() == n - 1);
        CHECK(betti(e.algebra, 1) == 4);
        CHECK(isComplexLieStructure(e.algebra, *e.j));
    }

    for (std::size_t n : {2, 3, 4, 5}) {
        auto e = catalog::bFamily(n);
        CAPTURE(n);
        CHECK(e.algebra.nilIndex() == n);
        CHECK(betti(e.algebra, 1) == 3);
        CHECK(isAbelianStructure(e.algebra, *e.j));
        CHECK(isNilpotentStructure(e.algebra, *e.j));
    }

    for (std::size_t np1 : {4, 5, 6}) {
        auto e = catalog::cFamily(np1);
        CAPTURE(np1);
        CHECK(e.algebra.dim() == 2 * (np1 - 1));
        CHECK(e.algebra.nilIndex() == np1);
        CHECK(betti(e.algebra, 1) == 2);
        REQUIRE(e.j.has_value());
        CHECK(isIntegrable(e.algebra, *e.j).integrable);
        CHECK(jSeries(e.algebra, *e.j).equalityCount == 1);
    }
    CHECK(!catalog::cFamily(7).j.has_value());
    CHECK(catalog::cFamily(7).algebra.nilIndex() == 7);
}

TEST_CASE("d family dimension formula and nil index") {
    CHECK(catalog::dFamilyDim(4) == 6);
    CHECK(catalog::dFamilyDim(5) == 8);
    CHECK(catalog::dFamilyDim(6) == 9);
    CHECK(catalog::dFamilyDim(7) == 11);
    CHECK(catalog::dFamilyDim(8) == 12);
    for (std::size_t n = 2; n <= 13; ++n) {
        auto e = catalog::dFamily(n);
        CAPTURE(n);
        CHECK(e.algebra.dim() == catalog::dFamilyDim(n));
        CHECK(e.algebra.nilIndex() == n);
        CHECK(e.algebra.nilIndex() == 2 * e.algebra.dim() / 3);  // floor
        REQUIRE(e.grading.has_value());
        CHECK(checkGrading(e.algebra, *e.grading));
    }
}

TEST_CASE("d family complex structures") {
    for (std::size_t n = 4; n <= 9; ++n) {
        auto e = catalog::dFamilyWithJ(n);
        CAPTURE(n);
        CHECK(e.algebra.dim() % 2 == 0);
        CHECK(e.algebra.nilIndex() == n);
        REQUIRE(e.j.has_value());
        CHECK(isIntegrable(e.algebra, *e.j).integrable);
    }
    // The central line is added exactly when the natural dimension is odd.
    CHECK(catalog::dFamilyWithJ(4).algebra.dim() == catalog::dFamilyDim(4));
    CHECK(catalog::dFamilyWithJ(6).algebra.dim() == catalog::dFamilyDim(6) + 1);
    CHECK(catalog::dFamilyWithJ(7).algebra.dim() == catalog::dFamilyDim(7) + 1);
}

TEST_CASE("d4 matches g68 invariants") {
    LieAlgebra d4 = catalog::dFamily(4).algebra;
    LieAlgebra g68 = catalog::g68().algebra;
    CHECK(lcsDims(d4) == lcsDims(g68));
    CHECK(d4.aSequence() == g68.aSequence());
    for (std::size_t k = 0; k <= 6; ++k) CHECK(betti(d4, k) == betti(g68, k));
}

TEST_CASE("catalog addresses") {
    CHECK(catalog::byName("g6_8").name == "g6_8");
    CHECK(catalog::byName("D:9").algebra.nilIndex() == 9);
    CHECK(catalog::byName("DJ:6").j.has_value());
    CHECK(catalog::byName("B:5").algebra.dim() == 10);
    CHECK(catalog::byName("C:5").algebra.dim() == 8);
    CHECK(catalog::byName("m0:6").algebra.isFiliform());
    CHECK(catalog::byName("m0r:4").algebra.dim() == 8);
    CHECK(catalog::byName("h:2").algebra.dim() == 5);
    CHECK(catalog::byName("h+R:2").j.has_value());
    CHECK(catalog::byName("abelian:4").algebra.nilIndex() == 1);
    CHECK_THROWS_AS(catalog::byName("nosuch:3"), std::invalid_argument);
    CHECK_THROWS_AS(catalog::byName("D:x"), std::invalid_argument);
}

TEST_CASE("corpus covers the advertised addresses") {
    auto corpus = catalog::defaultCorpus();
    auto has = [&](const std::string& name) {
        for (const auto& e : corpus)
            if (e.name == name) return true;
        return false;
    };
    for (const char* name : {"g6_8", "h:1", "h+R:1", "m0:4", "m0:7", "m0r:3",
                             "B:2", "B:5", "C:4", "C:7", "DJ:4", "DJ:9", "D:12",
                             "abelian:4"})
        CHECK(has(name));
    // Names are unique.
    std::vector<std::string> names;
    for (const auto& e : corpus) names.push_back(e.name);
    std::sort(names.begin(), names.end());
    CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
}
