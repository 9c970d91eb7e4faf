#pragma once

#include <string>

#include "nilcx/cxstruct.hpp"

namespace nilcx {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::string msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg),
          line(line) {}
    std::size_t line;
};

struct ParsedAlgebra {
    std::string name;
    LieAlgebra algebra;
};

// Algebra file: `algebra NAME`, `field rational|gaussian`, `basis n1 n2 ...`,
// `bracket a b = [coef] n [+ [coef] n ...]`; `#` starts a comment.
// Throws ParseError on malformed input and JacobiError when the table is not
// a Lie algebra.
ParsedAlgebra parseAlgebra(const std::string& text);
std::string emitAlgebra(const ParsedAlgebra& pa);

// J file: one `J basisname = linear-combination` line per basis vector.
AlmostComplexStructure parseJ(const std::string& text, const LieAlgebra& g);
std::string emitJ(const LieAlgebra& g, const AlmostComplexStructure& j);

// Coframe file: `omega K = linear-combination` (K = 1..dim/2, in order);
// coefficients may use `i`.
std::vector<Vec> parseCoframe(const std::string& text, const LieAlgebra& g);

std::string formatLinearCombination(const LieAlgebra& g, const Vec& v);

}  // namespace nilcx
