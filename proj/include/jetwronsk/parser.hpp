#ifndef JETWRONSK_PARSER_HPP
#define JETWRONSK_PARSER_HPP

#include <string>
#include <vector>

#include "jetwronsk/errors.hpp"
#include "jetwronsk/polynomial.hpp"

namespace jetwronsk {

// Grammar: integers, rationals p/q, variable names (identifier with optional
// trailing primes), +, -, *, ^ with nonnegative integer exponent, and
// parentheses. Implicit multiplication is not allowed. Throws ParseError
// with the 0-based offset of the offending token.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

}  // namespace jetwronsk

#endif
