#ifndef NOETHER_PARSER_HPP
#define NOETHER_PARSER_HPP

#include <string>
#include <string_view>

#include "noether/expr.hpp"
#include "noether/field_system.hpp"

namespace noether {

// The expression DSL, s-expression style:
//
//   EXPR     := RATIONAL | SYMBOL | "(" OP EXPR+ ")"
//   OP       := "+" | "*" | "pow" | "d"
//   RATIONAL := integer or p/q
//   SYMBOL   := field name | "x"<mu> | "lambda" | "eps" | "A"<mu>
//
// Jet variables are written (d q 0) and (d q 0 1); extern applications are
// written (F x0). (pow e k) takes a non-negative integer literal k. The
// gauge potential A<mu> and the formal symbols lambda/eps exist so engine
// output can be re-read; ordinary inputs never need them.

/// Parses DSL text. Throws ParseError with a byte offset on malformed input,
/// undeclared names, or indices out of range for the system.
Expr parse_expr(std::string_view text, const FieldSystem& sys);

/// Prints a tree in DSL syntax. On canonical trees this inverts parse_expr.
std::string to_dsl(const Expr& e, const FieldSystem& sys);

/// Shorthand for to_dsl(canonicalize(e), sys).
std::string to_dsl_canonical(const Expr& e, const FieldSystem& sys);

}  // namespace noether

#endif
