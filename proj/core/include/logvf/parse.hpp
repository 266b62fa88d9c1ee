#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logvf/polynomial.hpp"

namespace logvf {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := rational | var | factor '^' nat | '(' expr ')'
// Throws SyntaxError or UnknownVariable.
Polynomial poly_parse(std::string_view text, std::span<const std::string> varnames);

// Splits "x,y,z" into identifiers, validating each.  Throws SyntaxError.
std::vector<std::string> parse_varlist(std::string_view text);

}  // namespace logvf
