#pragma once

#include <string>

#include "parakov/ratfunc.hpp"

namespace parakov {

// Recursive-descent parser for rational expressions in z and the declared
// parameters. Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' ('-')? integer)*
//   atom   := integer | name | '(' expr ')' | 'sqrt' '(' expr ')'
// sqrt arguments must be z-free; parse errors carry 0-based positions and
// raise ErrorCode::parse_error.
RatFunc parse_expr(const std::string& text, const FieldPtr& fld);

}  // namespace parakov
