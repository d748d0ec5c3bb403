#pragma once

#include <string>

#include "gaussmap/unipoly.hpp"

namespace gaussmap {

/// Parses a univariate polynomial over Q in the variable named `var`.
/// Grammar (whitespace insignificant):
///   expr  := term (('+'|'-') term)*
///   term  := coeff ('*'? var ('^' uint)?)? | var ('^' uint)?
///   coeff := int ('/' uint)?
/// Rejects trailing input. Throws ParseError with the byte offset of the
/// first offending character.
UniPoly parse_poly(const std::string& text, const std::string& var = "x");

}  // namespace gaussmap
