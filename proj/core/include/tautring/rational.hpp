#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tautring {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T n) : value_(Integer(static_cast<long>(n))) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)

  /// Throws std::domain_error on a zero denominator.
  Rational(const Integer& numerator, const Integer& denominator);

  /// Accepts "n" or "n/d" with optional leading sign on n.
  static Rational parse(std::string_view text);

  [[nodiscard]] Integer numerator() const { return value_.get_num(); }
  [[nodiscard]] Integer denominator() const { return value_.get_den(); }
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  /// "n" for integers, "n/d" otherwise.
  [[nodiscard]] std::string to_string() const;
  /// Always "n/d", including "n/1".
  [[nodiscard]] std::string to_fraction_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.value_ = -value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  [[nodiscard]] std::size_t hash() const;

 private:
  mpq_class value_;
};

/// base^exponent; a negative exponent inverts (domain_error for 0).
Rational pow(const Rational& base, long exponent);

Integer factorial(unsigned long n);

}  // namespace tautring

template <>
struct std::hash<tautring::Rational> {
  std::size_t operator()(const tautring::Rational& r) const noexcept { return r.hash(); }
};
