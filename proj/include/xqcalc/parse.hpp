#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "xqcalc/poly.hpp"

namespace xqcalc {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  /// Byte offset into the input where the problem was detected.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses a test-function expression in the variables allowed for `dim`
/// (x; x,y; x,y,z).
///
/// Grammar, whitespace insensitive:
///
///     expr    := term (('+' | '-') term)*
///     term    := unary ('*' unary)*
///     unary   := ('+' | '-') unary | power
///     power   := primary ('^' INTEGER)?
///     primary := NUMBER | 'pi' | VARIABLE | '(' expr ')'
///
/// Implicit multiplication is rejected, and so is any exponent that is not a
/// non-negative integer literal.
Poly parse_poly(std::string_view text, int dim);

/// Inverse of parse_poly on the term map: terms are printed in descending
/// (x, y, z) exponent order with 17 significant digits.
std::string to_string(const Poly& p);
std::string to_string(const UniPoly& p, char var = 't');

}  // namespace xqcalc
