#include "nilcx/catalog.hpp"

#include <stdexcept>

namespace nilcx::catalog {

namespace {

// Convenience builder: brackets by basis name, in either argument order.
class Builder {
public:
    explicit Builder(std::vector<std::string> names) : names_(std::move(names)) {}

    std::size_t idx(const std::string& nm) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == nm) return i;
        throw std::invalid_argument("builder: unknown name " + nm);
    }

    void set(const std::string& a, const std::string& b,
             std::initializer_list<std::pair<long, std::string>> terms) {
        std::size_t i = idx(a), j = idx(b);
        bool flip = i > j;
        if (flip) std::swap(i, j);
        Vec v = br_.count({i, j}) ? br_[{i, j}] : Vec(names_.size());
        for (const auto& [c, nm] : terms) v[idx(nm)] += Scalar(flip ? -c : c);
        br_[{i, j}] = std::move(v);
    }

    LieAlgebra build(Field f = Field::rational) const {
        return LieAlgebra::make(names_, f, br_);
    }

    // J given by images of basis vectors: J(e_col) = sign * e_row.
    Matrix jMatrix(
        std::initializer_list<std::tuple<std::string, long, std::string>> images)
        const {
        Matrix m(names_.size(), names_.size());
        for (const auto& [from, sign, to] : images)
            m.at(idx(to), idx(from)) = Scalar(sign);
        return m;
    }
    Matrix jMatrix(
        const std::vector<std::tuple<std::string, long, std::string>>& images) const {
        Matrix m(names_.size(), names_.size());
        for (const auto& [from, sign, to] : images)
            m.at(idx(to), idx(from)) = Scalar(sign);
        return m;
    }

private:
    std::vector<std::string> names_;
    LieAlgebra::BracketTable br_;
};

std::string num(std::size_t v) { return std::to_string(v); }

}  // namespace

CatalogEntry heisenberg(std::size_t k) {
    if (k < 1) throw std::invalid_argument("heisenberg requires k >= 1");
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= k; ++i) names.push_back("x" + num(i));
    for (std::size_t i = 1; i <= k; ++i) names.push_back("y" + num(i));
    names.push_back("z");
    Builder b(names);
    for (std::size_t i = 1; i <= k; ++i) b.set("x" + num(i), "y" + num(i), {{1, "z"}});
    CatalogEntry e{"h:" + num(k), b.build(), std::nullopt, std::nullopt, {}};
    e.expected = {{"dim", static_cast<long>(2 * k + 1)}, {"s", 2}};
    return e;
}

CatalogEntry heisenbergPlusR(std::size_t k) {
    CatalogEntry h = heisenberg(k);
    LieAlgebra g = directSumWithLine(h.algebra, "w");
    Builder b(g.basisNames());
    std::vector<std::tuple<std::string, long, std::string>> images;
    for (std::size_t i = 1; i <= k; ++i) {
        images.push_back({"x" + num(i), 1, "y" + num(i)});
        images.push_back({"y" + num(i), -1, "x" + num(i)});
    }
    images.push_back({"z", 1, "w"});
    images.push_back({"w", -1, "z"});
    CatalogEntry e{"h+R:" + num(k), g, AlmostComplexStructure(b.jMatrix(images)),
                   std::nullopt, {}};
    e.expected = {{"dim", static_cast<long>(2 * k + 2)},
                  {"s", 2},
                  {"b1", static_cast<long>(2 * k + 1)}};
    return e;
}

CatalogEntry m0(std::size_t n) {
    if (n < 3) throw std::invalid_argument("m0 requires n >= 3");
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + num(i));
    Builder b(names);
    for (std::size_t i = 2; i < n; ++i)
        b.set("e1", "e" + num(i), {{1, "e" + num(i + 1)}});
    GradedTag tag;
    tag.degrees.push_back(1);
    for (std::size_t i = 2; i <= n; ++i) tag.degrees.push_back(i - 1);
    CatalogEntry e{"m0:" + num(n), b.build(), std::nullopt, tag, {}};
    e.expected = {{"dim", static_cast<long>(n)}, {"s", static_cast<long>(n - 1)}};
    return e;
}

CatalogEntry m0r(std::size_t n) {
    if (n < 2) throw std::invalid_argument("m0r requires n >= 2");
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back("x" + num(i));
        names.push_back("y" + num(i));
    }
    Builder b(names);
    for (std::size_t i = 2; i < n; ++i) {
        b.set("x1", "x" + num(i), {{1, "x" + num(i + 1)}});
        b.set("y" + num(i), "y1", {{1, "x" + num(i + 1)}});
        b.set("x1", "y" + num(i), {{1, "y" + num(i + 1)}});
        b.set("y1", "x" + num(i), {{1, "y" + num(i + 1)}});
    }
    std::vector<std::tuple<std::string, long, std::string>> images;
    for (std::size_t i = 1; i <= n; ++i) {
        images.push_back({"y" + num(i), 1, "x" + num(i)});
        images.push_back({"x" + num(i), -1, "y" + num(i)});
    }
    CatalogEntry e{"m0r:" + num(n), b.build(), AlmostComplexStructure(b.jMatrix(images)),
                   std::nullopt, {}};
    e.expected = {{"dim", static_cast<long>(2 * n)},
                  {"s", static_cast<long>(n - 1)},
                  {"b1", 4}};
    return e;
}

CatalogEntry bFamily(std::size_t n) {
    if (n < 2) throw std::invalid_argument("B family requires n >= 2");
    std::vector<std::string> names;
    for (std::size_t l = 1; l <= n; ++l) {
        names.push_back("x" + num(l));
        names.push_back("y" + num(l));
    }
    Builder b(names);
    b.set("x1", "y1", {{1, "y2"}});
    for (std::size_t l = 2; l < n; ++l) {
        b.set("x1", "x" + num(l), {{1, "x" + num(l + 1)}});
        b.set("y1", "y" + num(l), {{1, "x" + num(l + 1)}});
        b.set("x1", "y" + num(l), {{1, "y" + num(l + 1)}});
        b.set("x" + num(l), "y1", {{1, "y" + num(l + 1)}});
    }
    std::vector<std::tuple<std::string, long, std::string>> images;
    for (std::size_t l = 1; l <= n; ++l) {
        images.push_back({"x" + num(l), -1, "y" + num(l)});
        images.push_back({"y" + num(l), 1, "x" + num(l)});
    }
    GradedTag tag;
    for (std::size_t l = 1; l <= n; ++l) {
        tag.degrees.push_back(l);
        tag.degrees.push_back(l);
    }
    CatalogEntry e{"B:" + num(n), b.build(), AlmostComplexStructure(b.jMatrix(images)),
                   tag, {}};
    e.expected = {{"dim", static_cast<long>(2 * n)}, {"s", static_cast<long>(n)},
                  {"b1", 3}};
    return e;
}

CatalogEntry cFamily(std::size_t nPlus1) {
    if (nPlus1 < 4) throw std::invalid_argument("C family requires n >= 3");
    const std::size_t n = nPlus1 - 1;
    std::vector<std::string> names{"x1", "y1", "w2"};
    for (std::size_t l = 3; l <= n; ++l) {
        names.push_back("x" + num(l));
        names.push_back("y" + num(l));
    }
    names.push_back("w" + num(n + 1));
    Builder b(names);
    const std::string top = "w" + num(n + 1);
    b.set("x1", "y1", {{1, "w2"}});
    b.set("x1", "w2", {{1, "x3"}});
    b.set("y1", "w2", {{1, "y3"}});
    if (n == 3) {
        b.set("x1", "x3", {{1, top}});
        b.set("y1", "y3", {{1, top}});
    } else if (n == 4 || n == 5) {
        b.set("x1", "x3", {{3, "x4"}});
        b.set("y1", "y3", {{1, "x4"}});
        b.set("x1", "y3", {{1, "y4"}});
        b.set("y1", "x3", {{1, "y4"}});
        if (n == 4) {
            b.set("x1", "x4", {{1, top}});
            b.set("y1", "y4", {{1, top}});
        } else {
            b.set("x1", "x4", {{3, "x5"}});
            b.set("y1", "y4", {{1, "x5"}});
            b.set("x1", "y4", {{1, "y5"}});
            b.set("y1", "x4", {{1, "y5"}});
            b.set("w2", "x3", {{-2, "y5"}});
            b.set("w2", "y3", {{2, "x5"}});
            b.set("x3", "y3", {{2, top}});
            b.set("x1", "x5", {{1, top}});
            b.set("y1", "y5", {{1, top}});
        }
    } else {
        for (std::size_t l = 3; l < n; ++l) {
            b.set("x1", "x" + num(l), {{1, "x" + num(l + 1)}});
            b.set("y1", "y" + num(l), {{1, "x" + num(l + 1)}});
            b.set("y1", "x" + num(l), {{1, "y" + num(l + 1)}});
            b.set("x1", "y" + num(l), {{1, "y" + num(l + 1)}});
        }
        b.set("x1", "x" + num(n), {{1, top}});
        b.set("y1", "y" + num(n), {{1, top}});
    }
    CatalogEntry e{"C:" + num(nPlus1), b.build(), std::nullopt, std::nullopt, {}};
    if (n <= 5) {
        std::vector<std::tuple<std::string, long, std::string>> images{
            {"w2", 1, top}, {top, -1, "w2"}};
        for (std::size_t l : [&] {
                 std::vector<std::size_t> ls{1};
                 for (std::size_t t = 3; t <= n; ++t) ls.push_back(t);
                 return ls;
             }()) {
            images.push_back({"x" + num(l), -1, "y" + num(l)});
            images.push_back({"y" + num(l), 1, "x" + num(l)});
        }
        e.j = AlmostComplexStructure(b.jMatrix(images));
    }
    e.expected = {{"dim", static_cast<long>(2 * n)}, {"s", static_cast<long>(n + 1)},
                  {"b1", 2}};
    return e;
}

std::size_t dFamilyDim(std::size_t n) {
    std::size_t m = n / 4;
    switch (n % 4) {
        case 0: return 6 * m;
        case 1: return 6 * m + 2;
        case 2: return 6 * m + 3;
        default: return 6 * m + 5;
    }
}

CatalogEntry dFamily(std::size_t n) {
    if (n < 2) throw std::invalid_argument("D family requires n >= 2");
    std::vector<std::string> names;
    GradedTag tag;
    for (std::size_t l = 1; l <= n; ++l) {
        if (l % 2 == 1) {
            names.push_back("v" + num(l));
            names.push_back("u" + num(l));
            tag.degrees.push_back(l);
            tag.degrees.push_back(l);
        } else {
            names.push_back("w" + num(l));
            tag.degrees.push_back(l);
        }
    }
    Builder b(names);
    for (std::size_t i = 1; i <= n; i += 2)
        for (std::size_t j = 2; i + j <= n; j += 2)
            b.set("v" + num(i), "w" + num(j), {{1, "u" + num(i + j)}});
    for (std::size_t j = 2; j <= n; j += 2)
        for (std::size_t l = 1; j + l <= n; l += 2)
            b.set("w" + num(j), "u" + num(l), {{1, "v" + num(j + l)}});
    for (std::size_t l = 1; l <= n; l += 2)
        for (std::size_t i = 1; l + i <= n; i += 2)
            if (l != i) b.set("u" + num(l), "v" + num(i), {{1, "w" + num(l + i)}});
    for (std::size_t l = 1; 2 * l <= n; l += 2)
        b.set("u" + num(l), "v" + num(l), {{1, "w" + num(2 * l)}});
    CatalogEntry e{"D:" + num(n), b.build(), std::nullopt, tag, {}};
    e.expected = {{"dim", static_cast<long>(dFamilyDim(n))},
                  {"s", static_cast<long>(n)}};
    return e;
}

CatalogEntry dFamilyWithJ(std::size_t n) {
    if (n < 4) throw std::invalid_argument("D family J requires n >= 4");
    CatalogEntry base = dFamily(n);
    LieAlgebra g = base.algebra;
    bool plusR = (n % 4 == 2 || n % 4 == 3);
    std::optional<GradedTag> tag = base.grading;
    if (plusR) {
        g = directSumWithLine(g, "t");
        tag.reset();  // the extra central line is not part of the grading
    }
    Builder b(g.basisNames());
    std::vector<std::tuple<std::string, long, std::string>> images;
    for (std::size_t o = 1; o <= n; o += 2) {
        images.push_back({"v" + num(o), 1, "u" + num(o)});
        images.push_back({"u" + num(o), -1, "v" + num(o)});
    }
    std::size_t m = n / 4;
    for (std::size_t k = 0; k < m; ++k) {
        images.push_back({"w" + num(4 * k + 2), 1, "w" + num(4 * k + 4)});
        images.push_back({"w" + num(4 * k + 4), -1, "w" + num(4 * k + 2)});
    }
    if (plusR) {
        images.push_back({"w" + num(4 * m + 2), 1, "t"});
        images.push_back({"t", -1, "w" + num(4 * m + 2)});
    }
    CatalogEntry e{(plusR ? "D+R:" : "DJ:") + num(n), g,
                   AlmostComplexStructure(b.jMatrix(images)), tag, {}};
    e.expected = {{"dim", static_cast<long>(dFamilyDim(n) + (plusR ? 1 : 0))},
                  {"s", static_cast<long>(n)}};
    return e;
}

CatalogEntry g68() {
    Builder b({"e1", "e2", "e3", "e4", "e5", "e6"});
    b.set("e1", "e2", {{1, "e3"}});
    b.set("e1", "e3", {{1, "e4"}});
    b.set("e2", "e3", {{1, "e5"}});
    b.set("e1", "e4", {{1, "e6"}});
    b.set("e2", "e5", {{1, "e6"}});
    Matrix j = b.jMatrix({{"e1", -1, "e2"},
                          {"e2", 1, "e1"},
                          {"e4", -1, "e5"},
                          {"e5", 1, "e4"},
                          {"e3", 1, "e6"},
                          {"e6", -1, "e3"}});
    CatalogEntry e{"g6_8", b.build(), AlmostComplexStructure(j), std::nullopt, {}};
    e.expected = {{"dim", 6}, {"s", 4}, {"b1", 2}, {"b2", 4}};
    return e;
}

CatalogEntry abelianAlgebra(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + num(i));
    CatalogEntry e{"abelian:" + num(n),
                   LieAlgebra::make(names, Field::rational, {}),
                   std::nullopt,
                   std::nullopt,
                   {}};
    e.expected = {{"dim", static_cast<long>(n)}, {"s", 1}};
    return e;
}

CatalogEntry byName(const std::string& address) {
    if (address == "g6_8") return g68();
    auto colon = address.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("unknown catalog entry: " + address);
    std::string fam = address.substr(0, colon);
    std::size_t param = 0;
    try {
        param = static_cast<std::size_t>(std::stoul(address.substr(colon + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad catalog parameter in: " + address);
    }
    if (fam == "h") return heisenberg(param);
    if (fam == "h+R") return heisenbergPlusR(param);
    if (fam == "m0") return m0(param);
    if (fam == "m0r") return m0r(param);
    if (fam == "B") return bFamily(param);
    if (fam == "C") return cFamily(param);
    if (fam == "D") return dFamily(param);
    if (fam == "DJ" || fam == "D+R") return dFamilyWithJ(param);
    if (fam == "abelian") return abelianAlgebra(param);
    throw std::invalid_argument("unknown catalog family: " + fam);
}

std::vector<CatalogEntry> defaultCorpus() {
    std::vector<CatalogEntry> out;
    out.push_back(g68());
    out.push_back(heisenberg(1));
    out.push_back(heisenbergPlusR(1));
    out.push_back(heisenbergPlusR(2));
    for (std::size_t n = 4; n <= 7; ++n) out.push_back(m0(n));
    for (std::size_t n = 3; n <= 5; ++n) out.push_back(m0r(n));
    for (std::size_t n = 2; n <= 5; ++n) out.push_back(bFamily(n));
    for (std::size_t np1 = 4; np1 <= 7; ++np1) out.push_back(cFamily(np1));
    for (std::size_t n = 4; n <= 9; ++n) out.push_back(dFamilyWithJ(n));
    for (std::size_t n = 10; n <= 12; ++n) out.push_back(dFamily(n));
    out.push_back(abelianAlgebra(4));
    return out;
}

}  // namespace nilcx::catalog
