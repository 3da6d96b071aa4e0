#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "tautring/monomial.hpp"
#include "tautring/rational.hpp"

namespace tautring {

/// Genus, generator index bound N and the scalar standing in for q_0.
struct RingContext {
  int genus = 2;
  int bound = 2;
  Rational q0 = 2;

  /// N = g and q_0 = g.
  static RingContext for_genus(int g);

  /// Throws std::invalid_argument unless genus >= 2 and bound >= 1.
  void validate() const;

  /// p_1..p_N followed by q_1..q_N.
  [[nodiscard]] std::vector<Generator> generators() const;
};

/// Sparse polynomial in the p's and q's with exact rational coefficients.
///
/// Terms are kept in the canonical monomial order and never carry a zero
/// coefficient, so structural equality is polynomial equality.
class TautPoly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  TautPoly() = default;
  TautPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  TautPoly(const Monomial& m, const Rational& c = 1);
  TautPoly(Generator g);  // NOLINT(google-explicit-constructor)

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] Rational coefficient(const Monomial& m) const;

  /// Distinct bidegrees of the terms, ascending.
  [[nodiscard]] std::set<BiDegree> bidegrees() const;
  /// The common bidegree if all terms share one; nullopt for 0 or mixed.
  [[nodiscard]] std::optional<BiDegree> bidegree() const;
  [[nodiscard]] bool is_homogeneous() const { return bidegrees().size() <= 1; }
  /// -1 for the zero polynomial.
  [[nodiscard]] int max_codim() const;
  [[nodiscard]] int max_index() const;
  [[nodiscard]] bool uses_only(const std::vector<Generator>& vars) const;

  void add_term(const Monomial& m, const Rational& c);

  TautPoly& operator+=(const TautPoly& o);
  TautPoly& operator-=(const TautPoly& o);
  TautPoly& operator*=(const Rational& c);
  TautPoly operator-() const;

  friend TautPoly operator+(TautPoly a, const TautPoly& b) { return a += b; }
  friend TautPoly operator-(TautPoly a, const TautPoly& b) { return a -= b; }
  friend TautPoly operator*(const TautPoly& a, const TautPoly& b);
  friend TautPoly operator*(const Rational& c, TautPoly f) { return f *= c; }
  friend TautPoly operator*(TautPoly f, const Rational& c) { return f *= c; }
  friend bool operator==(const TautPoly&, const TautPoly&) = default;

 private:
  Terms terms_;
};

TautPoly pow(const TautPoly& f, unsigned exponent);

/// Sum of the terms of f with bidegree exactly d.
TautPoly graded_component(const TautPoly& f, BiDegree d);

/// Drops every term of codim > max_codim.
TautPoly truncate(const TautPoly& f, int max_codim);

/// Product with terms of codim > max_codim discarded as they are formed.
TautPoly truncated_product(const TautPoly& a, const TautPoly& b, int max_codim);

/// Replaces each generator in `rules` by its value, in one pass.
TautPoly substitute(const TautPoly& f, const std::map<Generator, TautPoly>& rules);

/// Applies `rules` repeatedly until no rule generator remains.
/// Throws std::runtime_error if that does not happen within max_rounds.
TautPoly substitute_until_stable(const TautPoly& f, const std::map<Generator, TautPoly>& rules,
                                 int max_rounds = 64);

bool mentions(const TautPoly& f, Generator g);

}  // namespace tautring
