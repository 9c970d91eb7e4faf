#include "nilcx/dsl.hpp"

#include <cctype>
#include <sstream>

namespace nilcx {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == '#') break;
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) {
                out.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// Parses "p", "p/q", "i", "pi", "p/qi" (no sign). Returns false on non-match.
bool parseCoefficient(const std::string& tok, Scalar& out) {
    std::string t = tok;
    bool imag = false;
    if (!t.empty() && t.back() == 'i') {
        imag = true;
        t.pop_back();
    }
    if (t.empty()) {
        if (!imag) return false;
        out = Scalar::i();
        return true;
    }
    std::size_t slash = t.find('/');
    std::string numStr = slash == std::string::npos ? t : t.substr(0, slash);
    std::string denStr = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (numStr.empty() || denStr.empty()) return false;
    for (char c : numStr + denStr)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    mpq_class q(numStr + "/" + denStr);
    if (q.get_den() == 0) return false;
    q.canonicalize();
    out = imag ? Scalar(mpq_class(0), q) : Scalar(q);
    return true;
}

// Parses a linear combination of basis names starting at token `start`.
Vec parseCombination(const std::vector<std::string>& toks, std::size_t start,
                     const std::vector<std::string>& names, bool allowI,
                     std::size_t lineNo) {
    Vec v(names.size());
    auto nameIndex = [&](const std::string& nm) -> std::size_t {
        for (std::size_t k = 0; k < names.size(); ++k)
            if (names[k] == nm) return k;
        throw ParseError(lineNo, "unknown basis name '" + nm + "'");
    };
    int sign = 1;
    bool haveCoef = false;
    Scalar coef(1);
    bool sawTerm = false;
    for (std::size_t t = start; t < toks.size(); ++t) {
        std::string tok = toks[t];
        if (tok == "+") {
            if (haveCoef) throw ParseError(lineNo, "dangling coefficient");
            continue;
        }
        if (tok == "-") {
            sign = -sign;
            continue;
        }
        while (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) {
            if (tok[0] == '-') sign = -sign;
            tok.erase(tok.begin());
        }
        if (tok.empty()) throw ParseError(lineNo, "stray sign");
        Scalar c;
        if (parseCoefficient(tok, c)) {
            if (haveCoef) throw ParseError(lineNo, "two coefficients in one term");
            if (!c.isRational() && !allowI)
                throw ParseError(lineNo,
                                 "imaginary coefficient requires 'field gaussian'");
            haveCoef = true;
            coef = c;
            continue;
        }
        if (tok == "0" || std::isdigit(static_cast<unsigned char>(tok[0])))
            throw ParseError(lineNo, "bad coefficient '" + tok + "'");
        std::size_t k = nameIndex(tok);
        Scalar term = coef;
        if (sign < 0) term = -term;
        v[k] += term;
        sign = 1;
        haveCoef = false;
        coef = Scalar(1);
        sawTerm = true;
    }
    if (haveCoef) throw ParseError(lineNo, "dangling coefficient");
    if (!sawTerm) throw ParseError(lineNo, "empty linear combination");
    return v;
}

std::string formatCoefName(const Scalar& c, const std::string& name) {
    if (c == Scalar(1)) return name;
    if (c == Scalar(-1)) return "-" + name;
    if (c == Scalar::i()) return "i " + name;
    if (c == -Scalar::i()) return "-i " + name;
    std::string s;
    if (c.isRational()) {
        s = c.re().get_str();
    } else if (sgn(c.re()) == 0) {
        s = c.im().get_str() + "i";
    } else {
        // split into a rational and an imaginary term downstream; not reached
        s = c.toString();
    }
    return s + " " + name;
}

}  // namespace

std::string formatLinearCombination(const LieAlgebra& g, const Vec& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].isZero()) continue;
        // Emit the real and imaginary parts as separate parseable terms.
        std::vector<Scalar> parts;
        if (sgn(v[k].re()) != 0) parts.emplace_back(v[k].re());
        if (sgn(v[k].im()) != 0) parts.emplace_back(Scalar(mpq_class(0), v[k].im()));
        for (const auto& p : parts) {
            std::string term = formatCoefName(p, g.basisNames()[k]);
            if (out.empty()) {
                out = term;
            } else if (term[0] == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
    }
    return out.empty() ? "0" : out;
}

ParsedAlgebra parseAlgebra(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineNo = 0;
    std::string name;
    bool haveField = false;
    Field field = Field::rational;
    std::vector<std::string> names;
    LieAlgebra::BracketTable br;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seenAt;
    auto nameIndex = [&](const std::string& nm, std::size_t ln) -> std::size_t {
        for (std::size_t k = 0; k < names.size(); ++k)
            if (names[k] == nm) return k;
        throw ParseError(ln, "unknown basis name '" + nm + "'");
    };
    while (std::getline(in, line)) {
        ++lineNo;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "algebra") {
            if (toks.size() != 2) throw ParseError(lineNo, "expected: algebra NAME");
            name = toks[1];
        } else if (kw == "field") {
            if (toks.size() != 2 || (toks[1] != "rational" && toks[1] != "gaussian"))
                throw ParseError(lineNo, "expected: field rational|gaussian");
            field = toks[1] == "gaussian" ? Field::gaussian : Field::rational;
            haveField = true;
        } else if (kw == "basis") {
            if (toks.size() < 2) throw ParseError(lineNo, "empty basis list");
            if (!names.empty()) throw ParseError(lineNo, "duplicate basis line");
            for (std::size_t t = 1; t < toks.size(); ++t) {
                for (const auto& nm : names)
                    if (nm == toks[t])
                        throw ParseError(lineNo, "duplicate basis name '" + toks[t] + "'");
                names.push_back(toks[t]);
            }
        } else if (kw == "bracket") {
            if (names.empty()) throw ParseError(lineNo, "bracket before basis line");
            if (toks.size() < 5 || toks[3] != "=")
                throw ParseError(lineNo, "expected: bracket A B = combination");
            std::size_t i = nameIndex(toks[1], lineNo);
            std::size_t j = nameIndex(toks[2], lineNo);
            if (i == j) throw ParseError(lineNo, "bracket of a vector with itself");
            Vec v = parseCombination(toks, 4, names, field == Field::gaussian, lineNo);
            bool flip = i > j;
            if (flip) std::swap(i, j);
            auto key = std::make_pair(i, j);
            if (seenAt.count(key))
                throw ParseError(lineNo, "duplicate bracket for pair (" + names[i] +
                                             ", " + names[j] + "), first given on line " +
                                             std::to_string(seenAt[key]));
            seenAt[key] = lineNo;
            br[key] = flip ? -v : v;
        } else {
            throw ParseError(lineNo, "unknown directive '" + kw + "'");
        }
    }
    if (name.empty()) throw ParseError(lineNo, "missing 'algebra NAME' line");
    if (names.empty()) throw ParseError(lineNo, "missing basis line");
    (void)haveField;
    return ParsedAlgebra{name, LieAlgebra::make(names, field, std::move(br))};
}

std::string emitAlgebra(const ParsedAlgebra& pa) {
    const LieAlgebra& g = pa.algebra;
    std::string out = "algebra " + pa.name + "\n";
    out += std::string("field ") +
           (g.field() == Field::gaussian ? "gaussian" : "rational") + "\n";
    out += "basis";
    for (const auto& nm : g.basisNames()) out += " " + nm;
    out += "\n";
    for (const auto& [pair, v] : g.brackets()) {
        out += "bracket " + g.basisNames()[pair.first] + " " +
               g.basisNames()[pair.second] + " = " + formatLinearCombination(g, v) +
               "\n";
    }
    return out;
}

AlmostComplexStructure parseJ(const std::string& text, const LieAlgebra& g) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineNo = 0;
    const std::size_t n = g.dim();
    Matrix m(n, n);
    std::vector<bool> defined(n, false);
    while (std::getline(in, line)) {
        ++lineNo;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] != "J" || toks.size() < 4 || toks[2] != "=")
            throw ParseError(lineNo, "expected: J NAME = combination");
        std::size_t col = g.indexOf(toks[1]);
        if (defined[col])
            throw ParseError(lineNo, "duplicate image for " + toks[1]);
        defined[col] = true;
        Vec v = parseCombination(toks, 3, g.basisNames(), false, lineNo);
        for (std::size_t r = 0; r < n; ++r) m.at(r, col) = v[r];
    }
    for (std::size_t k = 0; k < n; ++k)
        if (!defined[k])
            throw ParseError(lineNo, "no image given for " + g.basisNames()[k]);
    return AlmostComplexStructure(std::move(m));  // validates J^2 = -I
}

std::string emitJ(const LieAlgebra& g, const AlmostComplexStructure& j) {
    std::string out;
    for (std::size_t c = 0; c < g.dim(); ++c) {
        Vec col(g.dim());
        for (std::size_t r = 0; r < g.dim(); ++r) col[r] = j.matrix().at(r, c);
        out += "J " + g.basisNames()[c] + " = " + formatLinearCombination(g, col) +
               "\n";
    }
    return out;
}

std::vector<Vec> parseCoframe(const std::string& text, const LieAlgebra& g) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineNo = 0;
    std::vector<Vec> out;
    while (std::getline(in, line)) {
        ++lineNo;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] != "omega" || toks.size() < 4 || toks[2] != "=")
            throw ParseError(lineNo, "expected: omega K = combination");
        if (toks[1] != std::to_string(out.size() + 1))
            throw ParseError(lineNo, "coframe indices must be 1..dim/2 in order");
        out.push_back(parseCombination(toks, 3, g.basisNames(), true, lineNo));
    }
    if (out.size() * 2 != g.dim())
        throw ParseError(lineNo, "coframe must have dim/2 entries");
    return out;
}

}  // namespace nilcx
