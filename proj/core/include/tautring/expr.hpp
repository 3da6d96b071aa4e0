#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tautring/taut_poly.hpp"

namespace tautring {

/// Syntax error; `position` is the 0-based byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A generator index above the ring's bound N.
class IndexBoundError : public std::out_of_range {
 public:
  IndexBoundError(Generator g, int bound);
  [[nodiscard]] Generator generator() const { return generator_; }

 private:
  Generator generator_;
};

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' digits)?
//   atom   := digits ('/' digits)? | 'p' digits | 'q' digits | '(' expr ')'
// Whitespace is ignored. Generator indices must be >= 1 and, when `bound`
// is given, <= bound.
TautPoly parse_expr(std::string_view text, std::optional<int> bound = std::nullopt);

/// Canonical rendering, e.g. "-p4 + 2/3*p1^2*q3". Zero renders as "0".
std::string format_expr(const TautPoly& f);

/// "p1^2*q3"; the unit monomial renders as "1".
std::string format_monomial(const Monomial& m);

std::ostream& operator<<(std::ostream& os, const TautPoly& f);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

}  // namespace tautring
