#ifndef OKA_PARSER_HPP
#define OKA_PARSER_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "oka/rational_function.hpp"

namespace oka {

struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// Parses the expression grammar:
///   signed rational literals p/q, registered variable names, operators
///   + - * / ^ with ^ taking a non-negative integer exponent on an atom,
///   parentheses, no implicit multiplication.
/// Returns the canonical-form value; printing then reparsing is the
/// identity.
RationalFunction parse(std::string_view text);

/// parse() restricted to polynomial results; throws std::invalid_argument
/// when the expression has a nontrivial denominator.
Polynomial parse_polynomial(std::string_view text);

}  // namespace oka

#endif
