#pragma once

// Independent reference evaluations used only by tests. Nothing here calls
// into the library's implementation of the quantity being checked.

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "tautring/taut_poly.hpp"

namespace tautring::oracle {

/// Tiny exact fraction on 64-bit integers.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac() = default;
  Frac(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  friend Frac operator+(Frac a, Frac b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Frac operator*(Frac a, Frac b) { return {a.num * b.num, a.den * b.den}; }
  friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }
};

/// Generalized binomial by the falling-factorial product, on fractions.
inline Frac binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return {0};
  Frac r{1};
  for (std::int64_t j = 0; j < k; ++j) r = r * Frac(n - j, j + 1);
  return r;
}

/// Straight re-evaluation of the Castelnuovo sum.
inline Frac castelnuovo(int r, int d, int g) {
  Frac sum{0};
  for (int i = 0; i <= r - 1; ++i) {
    Frac term = binomial(i + g + r - d - 2, i) * binomial(d - 2 * r, r - 1 - i) *
                binomial(d - r + 1 - i, r - i);
    if (i % 2 == 1) term = term * Frac(-1);
    sum = sum + term;
  }
  return sum * Frac(1, d - 2 * r + 2);
}

/// gamma(d, a) by the literal r-fold loop over [1, d]^r, in 128-bit integers.
inline __int128 gamma(int d, const std::vector<int>& a) {
  const int r = static_cast<int>(a.size());
  std::vector<int> idx(r, 1);
  __int128 total = 0;
  for (;;) {
    int s = 0;
    for (int v : idx) s += v;
    __int128 term = 1;
    {
      // C(d, s), zero above d
      __int128 c = 0;
      if (s <= d) {
        c = 1;
        for (int j = 0; j < s; ++j) c = c * (d - j) / (j + 1);
      }
      term = c;
    }
    for (int u = 0; u < r; ++u) {
      for (int e = 0; e < a[u] + 1; ++e) term *= idx[u];
    }
    total += (s % 2 == 0) ? term : -term;
    int u = 0;
    while (u < r && idx[u] == d) idx[u++] = 1;
    if (u == r) break;
    ++idx[u];
  }
  return total;
}

/// Number of monomials of codim c in p_1..p_N, q_1..q_N: coefficient of t^c
/// in prod_{i<=N} (1 - t^i)^-2, by dynamic programming over parts.
inline std::vector<long> monomial_counts(int bound, int up_to) {
  std::vector<long> counts(up_to + 1, 0);
  counts[0] = 1;
  for (int i = 1; i <= bound; ++i) {
    for (int copy = 0; copy < 2; ++copy) {
      for (int c = i; c <= up_to; ++c) counts[c] += counts[c - i];
    }
  }
  return counts;
}

/// d/dx of f, by the power rule on each term.
inline TautPoly partial(const TautPoly& f, Generator x) {
  TautPoly out;
  for (const auto& [m, c] : f.terms()) {
    const int e = m.exponent(x);
    if (e == 0) continue;
    out.add_term(*m.divided_by(x), c * Rational(e));
  }
  return out;
}

inline Integer choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (long j = 0; j < k; ++j) r = r * (n - j) / (j + 1);
  return r;
}

/// The operator D summed literally over all ordered index pairs up to
/// `max_index`, with its 1/2 and explicit partial derivatives.
inline TautPoly operator_D(const TautPoly& f, const Rational& q0, int max_index) {
  TautPoly out;
  for (int m = 1; m <= max_index; ++m) {
    for (int n = 1; n <= max_index; ++n) {
      const TautPoly dd = partial(partial(f, Generator::p(n)), Generator::p(m));
      out += dd * TautPoly(Generator::p(m + n - 1)) * Rational(choose(m + n, n), 2);
      const TautPoly dq = partial(partial(f, Generator::p(n)), Generator::q(m));
      out += dq * TautPoly(Generator::q(m + n - 1)) * Rational(choose(m + n - 1, n));
    }
  }
  for (int n = 1; n <= max_index; ++n) {
    const TautPoly d = partial(f, Generator::p(n));
    out -= n == 1 ? d * q0 : d * TautPoly(Generator::q(n - 1));
  }
  return out;
}

}  // namespace tautring::oracle
