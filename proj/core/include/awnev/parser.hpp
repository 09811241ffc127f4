#pragma once

#include <string>

#include "awnev/xpoly.hpp"

namespace awnev {

// Parses the expression grammar into a canonical XPoly:
//
//   expr    := term { ('+' | '-') term }
//   term    := factor { '*' factor }
//   factor  := [ '+' | '-' ] power
//   power   := primary [ '^' exponent ]
//   primary := NUMBER | 'x' | '(' expr ')'
//   NUMBER  := digits [ '/' digits ]        (a rational literal, not division)
//
// The exponent must be a nonnegative integer literal; anything else raises
// ExponentError. Other malformed input raises SyntaxError with the byte
// offset of the offending character.
XPoly parse_xpoly(const std::string& text);

}  // namespace awnev
