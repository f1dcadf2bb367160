#pragma once

#include "lgd/center_decomp.hpp"
#include "lgd/pbw.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lgd {

/// Syntax or symbol error with the 0-based character offset where it was detected.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses an element of U(L).
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := atom ('^' nat)?
///   atom   := nat ['/' nat] | symbol | '(' expr ')'
///
/// Symbols are an uppercase letter plus optional digits. I is the unit; C (sl2) and
/// Z2, Z3 (sl3) are central and become coefficients. Juxtaposition multiplies and the
/// written order of generators is kept.
FreeElement parse_expr(std::string_view text, const AlgebraSpec& alg);

/// parse_expr followed by PBW normalization.
PBWElement parse_pbw(std::string_view text, const AlgebraSpec& alg);

/// Deterministic text: terms ordered by center degree, then PBW degree, descending.
/// parse_pbw(format_expr(e)) == e.
std::string format_expr(const PBWElement& e);
std::string format_expr(const CenterDecomposition& d);
/// Center polynomial in the same style, e.g. "C^2 - 9/4".
std::string format_center(const CenterPoly& p);

}  // namespace lgd
