#include "tautring/expr.hpp"

#include <cctype>

namespace tautring {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

IndexBoundError::IndexBoundError(Generator g, int bound)
    : std::out_of_range("generator " + g.name() + " exceeds the index bound " +
                        std::to_string(bound)),
      generator_(g) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::optional<int> bound) : text_(text), bound_(bound) {}

  TautPoly parse() {
    TautPoly f = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  TautPoly expr() {
    TautPoly f = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        f += term();
      } else if (accept('-')) {
        f -= term();
      } else {
        return f;
      }
    }
  }

  TautPoly term() {
    TautPoly f = unary();
    for (;;) {
      skip_space();
      if (!accept('*')) return f;
      f = f * unary();
    }
  }

  TautPoly unary() {
    skip_space();
    if (accept('-')) return -unary();
    return power();
  }

  TautPoly power() {
    TautPoly base = atom();
    skip_space();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    const std::string digits = read_digits();
    if (digits.empty()) fail("expected exponent", at);
    if (digits.size() > 6) fail("exponent too large", at);
    return pow(base, static_cast<unsigned>(std::stoul(digits)));
  }

  TautPoly atom() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      TautPoly inner = expr();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'p' || c == 'q') {
      ++pos_;
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected generator index after '" + std::string(1, c) + "'", pos_);
      if (digits.size() > 6) fail("generator index too large", at);
      const int index = std::stoi(digits);
      const Generator g{c == 'p' ? GenKind::P : GenKind::Q, index};
      if (index < 1) fail("generator " + g.name() + " needs an index >= 1", at);
      if (bound_ && index > *bound_) throw IndexBoundError(g, *bound_);
      return TautPoly(g);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      const std::string num = read_digits();
      std::size_t save = pos_;
      skip_space();
      if (accept('/')) {
        skip_space();
        const std::size_t den_at = pos_;
        const std::string den = read_digits();
        if (den.empty()) fail("expected denominator", den_at);
        if (Integer(den) == 0) fail("zero denominator", den_at);
        return TautPoly(Rational(Integer(num), Integer(den)));
      }
      pos_ = save;
      return TautPoly(Rational(Integer(num)));
    }
    fail("unexpected '" + std::string(1, c) + "'", at);
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) { throw ParseError(message, at); }

  std::string_view text_;
  std::optional<int> bound_;
  std::size_t pos_ = 0;
};

}  // namespace

TautPoly parse_expr(std::string_view text, std::optional<int> bound) {
  return Parser(text, bound).parse();
}

std::string format_monomial(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [g, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += g.name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << format_monomial(m); }

std::ostream& operator<<(std::ostream& os, const TautPoly& f) { return os << format_expr(f); }

std::string format_expr(const TautPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = negative ? -c : c;
    if (m.is_one()) {
      out += magnitude.to_string();
    } else if (magnitude == Rational(1)) {
      out += format_monomial(m);
    } else {
      out += magnitude.to_string() + "*" + format_monomial(m);
    }
  }
  return out;
}

}  // namespace tautring
