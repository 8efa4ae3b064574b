#pragma once

// Text grammar for expressions:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | primary
//   primary := rational | atom | '[' expr ',' expr ']' | '(' expr ')'
//   atom    := family '[' int (',' int)* ']'
//   family  := t | tp | D | Dp | E | F | e | x
// Rationals are p or p/q. Numeric factors of a product are folded into
// one coefficient, so rendering and reparsing is the identity on trees.

#include <stdexcept>
#include <string>
#include <string_view>

#include "sy/expr.hpp"

namespace sy {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

Expr parse_expression(std::string_view text);

/// Family by its textual name ("t", "tp", "D", ...); throws std::invalid_argument.
Family family_from_name(std::string_view name);

}  // namespace sy
