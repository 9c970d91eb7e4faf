#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcx/bounds.hpp"

using namespace nilcx;

TEST_CASE("e bound") {
    auto g68 = catalog::g68();
    BoundCheck c = checkEBound(g68.algebra, *g68.j);
    CHECK(c.hypothesisMet);
    CHECK(c.holds);
    CHECK(c.lhs == 6);  // 2 (s - E) = 2 (4 - 1)
    CHECK(c.rhs == 6);
    CHECK(c.sharp);

    auto b4 = catalog::bFamily(4);
    BoundCheck cb = checkEBound(b4.algebra, *b4.j);
    CHECK(cb.holds);
    CHECK(cb.lhs == 8);  // E = 0, s = 4
    CHECK(cb.sharp);
}

TEST_CASE("nilpotent structure bound") {
    for (std::size_t n : {2, 3, 4, 5}) {
        auto e = catalog::bFamily(n);
        BoundCheck c = checkNilpotentBound(e.algebra, *e.j);
        CHECK(c.hypothesisMet);
        CHECK(c.holds);
        CHECK(c.sharp);  // s = n = dim / 2
    }
    // g6_8: J is not nilpotent, so the check is skipped but not failed.
    auto g68 = catalog::g68();
    BoundCheck c = checkNilpotentBound(g68.algebra, *g68.j);
    CHECK(!c.hypothesisMet);
    CHECK(c.holds);
}

TEST_CASE("complex lie bounds") {
    for (std::size_t n : {3, 4, 5}) {
        auto e = catalog::m0r(n);
        auto cs = checkComplexLieBounds(e.algebra, *e.j);
        REQUIRE(cs.size() == 2);
        CHECK(cs[0].hypothesisMet);
        CHECK(cs[0].holds);
        CHECK(cs[0].sharp);  // s = n - 1 = dim/2 - 1
        CHECK(cs[1].holds);
        CHECK(cs[1].sharp);  // b1 = 4
    }
    auto b3 = catalog::bFamily(3);
    for (const auto& c : checkComplexLieBounds(b3.algebra, *b3.j))
        CHECK(!c.hypothesisMet);  // abelian, not complex-Lie
}

TEST_CASE("b1 bound") {
    auto b5 = catalog::bFamily(5);
    BoundCheck c = checkB1Bound(b5.algebra, *b5.j);
    CHECK(c.hypothesisMet);
    CHECK(c.lhs == 3);
    CHECK(c.sharp);
    auto m4 = catalog::m0r(4);
    BoundCheck cm = checkB1Bound(m4.algebra, *m4.j);
    CHECK(cm.hypothesisMet);
    CHECK(cm.lhs == 4);
    CHECK(cm.holds);
    CHECK(!cm.sharp);
}

TEST_CASE("fourth term gap") {
    auto g68 = catalog::g68();
    BoundCheck c = checkGe5(g68.algebra, *g68.j);
    CHECK(c.hypothesisMet);
    CHECK(c.lhs == 5);  // 6 - dim g^4 = 6 - 1
    CHECK(c.sharp);

    auto d8 = catalog::dFamilyWithJ(8);
    BoundCheck cd = checkGe5(d8.algebra, *d8.j);
    CHECK(cd.hypothesisMet);
    CHECK(cd.lhs == 5);  // 12 - 7
    CHECK(cd.sharp);

    // Dimension-4 inputs are out of scope of the hypothesis.
    auto hr = catalog::heisenbergPlusR(1);
    CHECK(!checkGe5(hr.algebra, *hr.j).hypothesisMet);
}

TEST_CASE("central series drop after equality runs") {
    auto g68 = catalog::g68();
    auto runs = checkMainlemmaConsequence(g68.algebra, *g68.j);
    REQUIRE(runs.size() == 1);
    CHECK(runs[0].k == 2);
    CHECK(runs[0].p == 1);
    CHECK(runs[0].drop == 2);
    CHECK(runs[0].holds);

    auto d8 = catalog::dFamilyWithJ(8);
    auto rd = checkMainlemmaConsequence(d8.algebra, *d8.j);
    REQUIRE(rd.size() == 2);
    CHECK(rd[0].k == 2);
    CHECK(rd[1].k == 6);
    CHECK(rd[0].drop == 2);
    CHECK(rd[1].drop == 2);
    CHECK(rd[0].holds);
    CHECK(rd[1].holds);

    // No equality runs for the strictly decreasing series of B(4).
    auto b4 = catalog::bFamily(4);
    CHECK(checkMainlemmaConsequence(b4.algebra, *b4.j).empty());
}

TEST_CASE("bounds report per entry") {
    BoundsReport rep = boundsFor(catalog::g68());
    CHECK(rep.subject == "g6_8");
    CHECK(rep.allHold());
    bool sawDrop = false, sawUpper = false;
    for (const auto& c : rep.checks) {
        if (c.name == "central_series_drop[k=2,p=1]") sawDrop = true;
        if (c.name == "nilindex_upper") {
            sawUpper = true;
            CHECK(c.lhs == 4);
            CHECK(c.rhs == 4);
        }
    }
    CHECK(sawDrop);
    CHECK(sawUpper);

    // Entries without J yield an empty (vacuously passing) report.
    BoundsReport rd = boundsFor(catalog::dFamily(10));
    CHECK(rd.checks.empty());
    CHECK(rd.allHold());
}

TEST_CASE("bounds hold across the corpus") {
    for (const auto& rep : boundsForCorpus(catalog::defaultCorpus())) {
        CAPTURE(rep.subject);
        CHECK(rep.allHold());
    }
}

TEST_CASE("headline estimate on witnesses") {
    auto checks = checkMainEstimate(20);
    CHECK(!checks.empty());
    for (const auto& c : checks) {
        CAPTURE(c.name);
        CHECK(c.hypothesisMet);
        CHECK(c.holds);
    }
    // The lower bound is attained by every witness.
    for (const auto& c : checks)
        if (c.name.rfind("main_estimate_lower", 0) == 0) CHECK(c.sharp);
}

TEST_CASE("nil index identity for the graded family") {
    auto checks = checkAbstractIdentity(13);
    CHECK(checks.size() == 12);
    for (const auto& c : checks) {
        CAPTURE(c.name);
        CHECK(c.holds);
        CHECK(c.lhs == c.rhs);
    }
}
