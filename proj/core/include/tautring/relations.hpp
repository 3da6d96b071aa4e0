#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tautring/rational.hpp"
#include "tautring/taut_poly.hpp"

namespace tautring {

/// Ordered tuple of nonnegative parts.
struct Composition {
  std::vector<int> parts;

  [[nodiscard]] int sum() const;
  [[nodiscard]] std::size_t length() const { return parts.size(); }
  friend bool operator==(const Composition&, const Composition&) = default;
};

/// All ordered compositions of `total` into `length` nonnegative parts, in
/// lexicographic order of the part vectors.
std::vector<Composition> compositions(int total, int length);

/// The Castelnuovo formula has a pole at d = 2r - 2.
class CastelnuovoPole : public std::domain_error {
 public:
  CastelnuovoPole(int r, int d);
};

/// A(r, d, g) = sum_{i=0}^{r-1} (-1)^i / (d-2r+2)
///              * C(i+g+r-d-2, i) C(d-2r, r-1-i) C(d-r+1-i, r-i)
/// with generalized binomials.
Rational castelnuovo(int r, int d, int g);

/// gamma(d, a) = sum_{1 <= i_1..i_r <= d} (-1)^{|i|} C(d, |i|) prod i_u^(a_u+1).
Integer gamma_coeff(int d, const Composition& a);

/// sum over ordered alpha with |alpha| = M - 2r + 1 of
/// prod (alpha_u + 1)! p_{alpha_u + 1}. `d` is carried for the caller's
/// M >= d bookkeeping only. Throws std::invalid_argument if M - 2r + 1 < 0.
TautPoly rel_factorial(int d, int r, int M);

/// sum over ordered a with |a| = s of gamma(d, a) prod p_{a_u + 1}.
TautPoly rel_gamma(int d, int r, int s);

enum class ZagierVerdict { BothZero, Proportional, Independent };

std::string to_string(ZagierVerdict v);

struct ZagierReport {
  ZagierVerdict verdict = ZagierVerdict::Independent;
  /// rel_gamma = constant * rel_factorial, when proportional.
  std::optional<Rational> constant;
  int M = 0;
  TautPoly gamma_relation;
  TautPoly factorial_relation;
};

/// Compares rel_gamma(d, r, s) with rel_factorial(d, r, s + 2r - 1) term by term.
ZagierReport zagier_compare(int d, int r, int s);

/// Degree-0 part of the Fourier transform of alpha_u, as a multiple of [J]: C(d, u).
Rational fourier_degree0_alpha(int d, int u);

}  // namespace tautring
