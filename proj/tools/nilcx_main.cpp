// nilcx: exact-arithmetic toolkit for nilpotent Lie algebras with candidate
// invariant complex structures.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilcx/bounds.hpp"
#include "nilcx/catalog.hpp"
#include "nilcx/dsl.hpp"
#include "nilcx/jsearch.hpp"

using nilcx::AlmostComplexStructure;
using nilcx::LieAlgebra;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";

// Exit codes: 0 = all asserted properties hold, 1 = a check failed,
// 2 = input error.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Inputs {
    nilcx::ParsedAlgebra pa;
    std::optional<AlmostComplexStructure> j;
};

Inputs loadInputs(const std::string& algebraArg, const std::string& jPath) {
    Inputs in{nilcx::ParsedAlgebra{"", LieAlgebra::make({}, nilcx::Field::rational, {})},
              std::nullopt};
    // Catalog addresses are accepted wherever a file is expected.
    std::ifstream probe(algebraArg);
    if (probe) {
        in.pa = nilcx::parseAlgebra(readFile(algebraArg));
    } else {
        try {
            nilcx::CatalogEntry e = nilcx::catalog::byName(algebraArg);
            in.pa = nilcx::ParsedAlgebra{e.name, e.algebra};
            in.j = e.j;
        } catch (const std::invalid_argument& e) {
            // Neither a readable file nor a catalog address: an input error,
            // not a failed check.
            throw std::runtime_error("no file or catalog entry '" + algebraArg +
                                     "': " + e.what());
        }
    }
    if (!jPath.empty()) in.j = nilcx::parseJ(readFile(jPath), in.pa.algebra);
    return in;
}

json checkResult(const std::string& name, bool holds, const std::string& detail = "") {
    json r;
    r["name"] = name;
    r["holds"] = holds;
    if (!detail.empty()) r["detail"] = detail;
    return r;
}

json boundCheckJson(const nilcx::BoundCheck& c) {
    json r;
    r["name"] = c.name;
    r["hypothesis_met"] = c.hypothesisMet;
    r["lhs"] = c.lhs;
    r["rhs"] = c.rhs;
    r["holds"] = c.holds;
    r["sharp"] = c.sharp;
    return r;
}

int finish(const json& report, bool jsonOut, const std::string& human, bool ok) {
    if (jsonOut)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << human;
    return ok ? kOk : kCheckFailed;
}

json makeReport(const std::string& command, const json& inputs, const json& results) {
    json rep;
    rep["command"] = command;
    rep["inputs"] = inputs;
    rep["results"] = results;
    rep["version"] = kVersion;
    return rep;
}

std::string describeScalar(const nilcx::Scalar& s) { return s.toString(); }

json expansionJson(const nilcx::CoframeExpansion& e) {
    json terms = json::array();
    auto push = [&](const char* type, const auto& map) {
        for (const auto& [ab, c] : map) {
            json t;
            t["type"] = type;
            t["a"] = ab.first;
            t["b"] = ab.second;
            t["coeff"] = describeScalar(c);
            terms.push_back(t);
        }
    };
    push("omega^a ^ omega^b", e.holo);
    push("omega^a ^ conj(omega^b)", e.mixed);
    push("conj(omega^a) ^ conj(omega^b)", e.anti);
    return terms;
}

std::string expansionText(const nilcx::CoframeExpansion& e) {
    std::string out;
    auto add = [&](const std::string& term) {
        if (!out.empty()) out += " + ";
        out += term;
    };
    auto sup = [](std::size_t k) { return std::to_string(k); };
    for (const auto& [ab, c] : e.holo)
        add(c.toString() + " w" + sup(ab.first) + "^w" + sup(ab.second));
    for (const auto& [ab, c] : e.mixed)
        add(c.toString() + " w" + sup(ab.first) + "^W" + sup(ab.second));
    for (const auto& [ab, c] : e.anti)
        add(c.toString() + " W" + sup(ab.first) + "^W" + sup(ab.second));
    return out.empty() ? "0" : out;
}

int cmdCheck(const Inputs& in, bool jsonOut, const std::string& algebraArg) {
    json results = json::array();
    bool ok = true;
    results.push_back(checkResult("jacobi", true));  // construction validated it
    std::string human = "algebra " + in.pa.name + ": dim " +
                        std::to_string(in.pa.algebra.dim()) + ", Jacobi ok\n";
    if (in.j) {
        results.push_back(checkResult("j_square", true));
        human += "J: J^2 = -I ok\n";
    }
    json inputs;
    inputs["algebra"] = algebraArg;
    return finish(makeReport("check", inputs, results), jsonOut, human, ok);
}

int cmdLcs(const Inputs& in, bool jsonOut, const std::string& algebraArg) {
    const LieAlgebra& g = in.pa.algebra;
    auto lcs = g.lowerCentralSeries();
    json results = json::array();
    json dims = json::array();
    for (const auto& s : lcs) dims.push_back(s.dim());
    bool nil = lcs.back().dim() == 0;
    json r;
    r["name"] = "lower_central_series";
    r["dims"] = dims;
    r["nilpotent"] = nil;
    if (nil) {
        r["s"] = g.nilIndex();
        json aseq = json::array();
        for (auto a : g.aSequence()) aseq.push_back(a);
        r["a_sequence"] = aseq;
        r["filiform"] = g.isFiliform();
    }
    results.push_back(r);
    std::string human = "LCS dims:";
    for (const auto& s : lcs) human += " " + std::to_string(s.dim());
    human += nil ? "\ns = " + std::to_string(g.nilIndex()) + "\n"
                 : "\nnot nilpotent\n";
    json inputs;
    inputs["algebra"] = algebraArg;
    return finish(makeReport("lcs", inputs, results), jsonOut, human, true);
}

int cmdCohomology(const Inputs& in, bool jsonOut, const std::string& algebraArg,
                  long maxK) {
    const LieAlgebra& g = in.pa.algebra;
    std::size_t top = maxK < 0 ? g.dim() : std::min<std::size_t>(maxK, g.dim());
    json results = json::array();
    std::string human = "betti:";
    json bettis = json::array();
    for (std::size_t k = 0; k <= top; ++k) {
        std::size_t b = nilcx::betti(g, k);
        bettis.push_back(b);
        human += " b" + std::to_string(k) + "=" + std::to_string(b);
    }
    human += "\n";
    json r;
    r["name"] = "betti_numbers";
    r["values"] = bettis;
    results.push_back(r);
    json inputs;
    inputs["algebra"] = algebraArg;
    inputs["max_degree"] = top;
    return finish(makeReport("cohomology", inputs, results), jsonOut, human, true);
}

int cmdClassify(const Inputs& in, bool jsonOut, const std::string& algebraArg) {
    if (!in.j) throw std::runtime_error("classify requires a J (use --j)");
    auto rep = nilcx::classify(in.pa.algebra, *in.j);
    json results = json::array();
    json r;
    r["name"] = "classification";
    r["integrable"] = rep.integrable;
    r["abelian"] = rep.abelian;
    r["complex_lie"] = rep.complexLie;
    r["nilpotent_structure"] = rep.nilpotentStructure;
    if (rep.failingPair) {
        r["failing_pair"] = {in.pa.algebra.basisNames()[rep.failingPair->first],
                             in.pa.algebra.basisNames()[rep.failingPair->second]};
    }
    if (rep.failingLevel) r["failing_level"] = *rep.failingLevel;
    results.push_back(r);
    auto js = nilcx::jSeries(in.pa.algebra, *in.j);
    json sr;
    sr["name"] = "j_invariant_series";
    json dims = json::array();
    for (const auto& s : js.spaces) dims.push_back(s.dim());
    sr["dims"] = dims;
    sr["equality_count"] = js.equalityCount;
    results.push_back(sr);
    std::string human = std::string("integrable: ") + (rep.integrable ? "yes" : "no") +
                        "\nabelian: " + (rep.abelian ? "yes" : "no") +
                        "\ncomplex_lie: " + (rep.complexLie ? "yes" : "no") +
                        "\nnilpotent_structure: " +
                        (rep.nilpotentStructure ? "yes" : "no") + "\nE = " +
                        std::to_string(js.equalityCount) + "\n";
    json inputs;
    inputs["algebra"] = algebraArg;
    return finish(makeReport("classify", inputs, results), jsonOut, human, true);
}

int cmdFlag(const Inputs& in, bool jsonOut, const std::string& algebraArg) {
    if (!in.j) throw std::runtime_error("flag requires a J (use --j)");
    auto flag = nilcx::canonicalFlag(in.pa.algebra, *in.j);
    bool ideal = nilcx::checkFlagIdealCondition(in.pa.algebra, flag);
    json results = json::array();
    json fr;
    fr["name"] = "canonical_flag";
    json rows = json::array();
    std::string human;
    for (std::size_t k = 0; k < flag.size(); ++k) {
        std::string lc = nilcx::formatLinearCombination(in.pa.algebra, flag[k]);
        rows.push_back(lc);
        human += "omega " + std::to_string(k + 1) + " = " + lc + "\n";
    }
    fr["coframe"] = rows;
    results.push_back(fr);
    results.push_back(checkResult("ideal_condition", ideal));
    human += std::string("ideal condition: ") + (ideal ? "ok" : "FAILED") + "\n";
    json inputs;
    inputs["algebra"] = algebraArg;
    return finish(makeReport("flag", inputs, results), jsonOut, human, ideal);
}

int cmdBounds(const Inputs* in, bool corpus, bool jsonOut,
              const std::string& algebraArg) {
    std::vector<nilcx::BoundsReport> reports;
    if (corpus) {
        reports = nilcx::boundsForCorpus(nilcx::catalog::defaultCorpus());
    } else {
        if (!in || !in->j)
            throw std::runtime_error("bounds requires a J (use --j) or --corpus");
        nilcx::CatalogEntry e{in->pa.name, in->pa.algebra, in->j, std::nullopt, {}};
        reports.push_back(nilcx::boundsFor(e));
    }
    bool ok = true;
    json results = json::array();
    std::string human;
    for (const auto& rep : reports) {
        ok = ok && rep.allHold();
        for (const auto& c : rep.checks) {
            json r = boundCheckJson(c);
            r["subject"] = rep.subject;
            results.push_back(r);
            human += rep.subject + " " + c.name + ": " +
                     (!c.hypothesisMet ? "skipped"
                                       : (c.holds ? (c.sharp ? "holds (sharp)" : "holds")
                                                  : "FAILED")) +
                     " (lhs=" + std::to_string(c.lhs) +
                     ", rhs=" + std::to_string(c.rhs) + ")\n";
        }
    }
    if (corpus) {
        for (const auto& c : nilcx::checkMainEstimate(20)) {
            results.push_back(boundCheckJson(c));
            ok = ok && c.holds;
            human += c.name + ": " + (c.holds ? "holds" : "FAILED") + "\n";
        }
        for (const auto& c : nilcx::checkAbstractIdentity(13)) {
            results.push_back(boundCheckJson(c));
            ok = ok && c.holds;
            human += c.name + ": " + (c.holds ? "holds" : "FAILED") + "\n";
        }
    }
    json inputs;
    inputs["subject"] = corpus ? "catalog" : algebraArg;
    return finish(makeReport("bounds", inputs, results), jsonOut, human, ok);
}

int cmdSearch(const Inputs& in, bool jsonOut, const std::string& algebraArg,
              const std::string& className) {
    nilcx::StructureClass cls;
    if (className == "integrable")
        cls = nilcx::StructureClass::integrable;
    else if (className == "abelian")
        cls = nilcx::StructureClass::abelian;
    else if (className == "complex_lie")
        cls = nilcx::StructureClass::complex_lie;
    else if (className == "nilpotent")
        cls = nilcx::StructureClass::nilpotent;
    else
        throw std::runtime_error("unknown class: " + className);
    auto res = nilcx::search(in.pa.algebra, cls);
    json results = json::array();
    json r;
    r["name"] = "search";
    r["class"] = className;
    r["candidates"] = res.total;
    r["hits"] = res.hits.size();
    json hitList = json::array();
    for (const auto& h : res.hits) {
        json hj;
        hj["index"] = h.index;
        json pairs = json::array();
        for (std::size_t b = 0; b < h.matching.size(); ++b) {
            json p;
            p["i"] = in.pa.algebra.basisNames()[h.matching[b].first];
            p["j"] = in.pa.algebra.basisNames()[h.matching[b].second];
            p["sign"] = h.signs[b];
            pairs.push_back(p);
        }
        hj["pairs"] = pairs;
        hitList.push_back(hj);
    }
    r["hit_list"] = hitList;
    results.push_back(r);
    std::string human = "searched " + std::to_string(res.total) +
                        " signed-matching candidates, " +
                        std::to_string(res.hits.size()) + " " + className +
                        " hit(s); an empty result means none in the ansatz, not a "
                        "proof of non-existence\n";
    json inputs;
    inputs["algebra"] = algebraArg;
    inputs["class"] = className;
    return finish(makeReport("search", inputs, results), jsonOut, human, true);
}

int cmdCatalog(const std::string& address, bool jsonOut, const std::string& emitPath,
               const std::string& emitJPath) {
    nilcx::CatalogEntry e = nilcx::catalog::byName(address);
    if (!emitPath.empty()) {
        std::ofstream out(emitPath);
        if (!out) throw std::runtime_error("cannot write " + emitPath);
        out << nilcx::emitAlgebra({e.name, e.algebra});
    }
    if (!emitJPath.empty()) {
        if (!e.j) throw std::runtime_error("entry has no J: " + address);
        std::ofstream out(emitJPath);
        if (!out) throw std::runtime_error("cannot write " + emitJPath);
        out << nilcx::emitJ(e.algebra, *e.j);
    }
    json results = json::array();
    json r;
    r["name"] = e.name;
    r["dim"] = e.algebra.dim();
    r["has_j"] = e.j.has_value();
    json exp;
    for (const auto& [k, v] : e.expected) exp[k] = v;
    r["expected"] = exp;
    results.push_back(r);
    std::string human = e.name + ": dim " + std::to_string(e.algebra.dim()) +
                        (e.j ? ", with J" : ", no J") + "\n";
    json inputs;
    inputs["entry"] = address;
    return finish(makeReport("catalog", inputs, results), jsonOut, human, true);
}

int cmdDexpr(const Inputs& in, bool jsonOut, const std::string& algebraArg,
             std::size_t k, const std::string& coframePath) {
    std::vector<nilcx::Vec> coframe;
    if (!coframePath.empty()) {
        coframe = nilcx::parseCoframe(readFile(coframePath), in.pa.algebra);
    } else {
        if (!in.j) throw std::runtime_error("dexpr requires a J or --coframe");
        coframe = nilcx::canonicalFlag(in.pa.algebra, *in.j);
    }
    auto e = nilcx::expressDInCoframe(in.pa.algebra, coframe, k);
    json results = json::array();
    json r;
    r["name"] = "d_omega_" + std::to_string(k);
    r["terms"] = expansionJson(e);
    results.push_back(r);
    std::string human =
        "d omega" + std::to_string(k) + " = " + expansionText(e) + "\n";
    json inputs;
    inputs["algebra"] = algebraArg;
    inputs["k"] = k;
    return finish(makeReport("dexpr", inputs, results), jsonOut, human, true);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for nilpotent Lie algebras with complex structures",
                 "nilcx"};
    app.require_subcommand(1);
    bool jsonOut = false;
    app.add_flag("--json", jsonOut, "machine-readable report");

    std::string algebraArg, jPath, coframePath, className = "integrable";
    std::string emitPath, emitJPath, catalogAddress;
    long maxK = -1;
    std::size_t dexprK = 1;
    bool corpusAll = false;
    std::string corpusName;

    auto* check = app.add_subcommand("check", "parse and validate inputs");
    check->add_option("algebra", algebraArg)->required();
    check->add_option("--j", jPath);

    auto* lcs = app.add_subcommand("lcs", "descending central series");
    lcs->add_option("algebra", algebraArg)->required();

    auto* coh = app.add_subcommand("cohomology", "Betti numbers");
    coh->add_option("algebra", algebraArg)->required();
    coh->add_option("--max", maxK);

    auto* cls = app.add_subcommand("classify", "classify a complex structure");
    cls->add_option("algebra", algebraArg)->required();
    cls->add_option("--j", jPath);

    auto* flagCmd = app.add_subcommand("flag", "canonical adapted coframe");
    flagCmd->add_option("algebra", algebraArg)->required();
    flagCmd->add_option("--j", jPath);

    auto* bounds = app.add_subcommand("bounds", "inequality checks");
    bounds->add_option("algebra", algebraArg);
    bounds->add_option("--j", jPath);
    bounds->add_option("--corpus", corpusName);
    bounds->add_flag("--all", corpusAll);

    auto* searchCmd = app.add_subcommand("search", "signed-matching J search");
    searchCmd->add_option("algebra", algebraArg)->required();
    searchCmd->add_option("--class", className);

    auto* cat = app.add_subcommand("catalog", "built-in families");
    cat->add_option("entry", catalogAddress)->required();
    cat->add_option("--emit", emitPath);
    cat->add_option("--emit-j", emitJPath);

    auto* dexpr = app.add_subcommand("dexpr", "expand d omega^k in a coframe");
    dexpr->add_option("algebra", algebraArg)->required();
    dexpr->add_option("--j", jPath);
    dexpr->add_option("--k", dexprK);
    dexpr->add_option("--coframe", coframePath);

    // Let `--json` (defined on the top-level app) be given after a subcommand.
    for (CLI::App* sub : {check, lcs, coh, cls, flagCmd, bounds, searchCmd, cat, dexpr})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (cat->parsed()) return cmdCatalog(catalogAddress, jsonOut, emitPath, emitJPath);
        if (bounds->parsed() && !corpusName.empty())
            return cmdBounds(nullptr, true, jsonOut, "catalog");
        if (check->parsed()) {
            // `check` reports table failures as failed checks, not input errors.
            try {
                Inputs in = loadInputs(algebraArg, jPath);
                return cmdCheck(in, jsonOut, algebraArg);
            } catch (const nilcx::JacobiError& e) {
                std::cout << "Jacobi identity fails on " << e.violations.size()
                          << " triple(s)";
                if (!e.violations.empty()) {
                    const auto& v = e.violations.front();
                    std::cout << ", first at indices (" << v.i << ", " << v.j << ", "
                              << v.k << ")";
                }
                std::cout << "\n";
                return kCheckFailed;
            } catch (const std::invalid_argument& e) {
                std::cout << "check failed: " << e.what() << "\n";
                return kCheckFailed;
            }
        }
        Inputs in = loadInputs(algebraArg, jPath);
        if (lcs->parsed()) return cmdLcs(in, jsonOut, algebraArg);
        if (coh->parsed()) return cmdCohomology(in, jsonOut, algebraArg, maxK);
        if (cls->parsed()) return cmdClassify(in, jsonOut, algebraArg);
        if (flagCmd->parsed()) return cmdFlag(in, jsonOut, algebraArg);
        if (bounds->parsed()) return cmdBounds(&in, false, jsonOut, algebraArg);
        if (searchCmd->parsed()) return cmdSearch(in, jsonOut, algebraArg, className);
        if (dexpr->parsed()) return cmdDexpr(in, jsonOut, algebraArg, dexprK, coframePath);
        std::cerr << "no command\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
