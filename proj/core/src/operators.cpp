#include "tautring/operators.hpp"

#include <stdexcept>

#include "tautring/binomial.hpp"

namespace tautring {

namespace {

void apply_D_to_monomial(const RingContext& ctx, const Monomial& m, const Rational& c,
                         TautPoly& out) {
  const auto& pe = m.p_exponents();
  const auto& qe = m.q_exponents();
  for (std::size_t a = 0; a < pe.size(); ++a) {
    const int ea = pe[a];
    if (ea == 0) continue;
    const int i = static_cast<int>(a) + 1;
    const Generator pi = Generator::p(i);

    // 1/2 C(2i, i) p_{2i-1} d^2/dp_i^2
    if (ea >= 2) {
      const Rational coeff = c * Rational(binom(2 * i, i)) * Rational(ea * (ea - 1) / 2);
      out.add_term(m.divided_by(pi, 2)->times(Generator::p(2 * i - 1)), coeff);
    }
    // the (i, j) and (j, i) halves combine for i != j
    for (std::size_t b = a + 1; b < pe.size(); ++b) {
      const int eb = pe[b];
      if (eb == 0) continue;
      const int j = static_cast<int>(b) + 1;
      const Rational coeff = c * Rational(binom(i + j, j)) * Rational(ea * eb);
      out.add_term(
          m.divided_by(pi)->divided_by(Generator::p(j))->times(Generator::p(i + j - 1)), coeff);
    }
    // C(l+i-1, i) q_{l+i-1} d/dq_l d/dp_i
    for (std::size_t b = 0; b < qe.size(); ++b) {
      const int fl = qe[b];
      if (fl == 0) continue;
      const int l = static_cast<int>(b) + 1;
      const Rational coeff = c * Rational(binom(l + i - 1, i)) * Rational(fl * ea);
      out.add_term(
          m.divided_by(pi)->divided_by(Generator::q(l))->times(Generator::q(l + i - 1)), coeff);
    }
    // -q_{i-1} d/dp_i
    const Monomial rest = *m.divided_by(pi);
    if (i == 1) {
      out.add_term(rest, -c * Rational(ea) * ctx.q0);
    } else {
      out.add_term(rest.times(Generator::q(i - 1)), -c * Rational(ea));
    }
  }
}

TautPoly scale_by_bidegree(const TautPoly& f, long k, auto exponent_of) {
  TautPoly out;
  for (const auto& [m, c] : f.terms()) {
    const long e = exponent_of(m.bidegree());
    out.add_term(m, c * pow(Rational(k), e));
  }
  return out;
}

}  // namespace

TautPoly apply_D(const RingContext& ctx, const TautPoly& f) {
  TautPoly out;
  for (const auto& [m, c] : f.terms()) apply_D_to_monomial(ctx, m, c, out);
  return out;
}

TautPoly pullback(const RingContext&, long k, const TautPoly& f) {
  return scale_by_bidegree(f, k, [](BiDegree d) { return 2L * d.codim - d.weight; });
}

TautPoly pushforward(const RingContext& ctx, long k, const TautPoly& f) {
  const long g = ctx.genus;
  return scale_by_bidegree(f, k, [g](BiDegree d) { return 2 * g - 2L * d.codim + d.weight; });
}

TautPoly series_exp(const TautPoly& f, SeriesBound bound) {
  for (const auto& [m, c] : f.terms()) {
    if (m.bidegree().codim == 0) {
      throw std::invalid_argument("series_exp needs an argument without codim-0 terms");
    }
  }
  TautPoly sum(Rational(1));
  TautPoly power(Rational(1));
  for (int k = 1; k <= bound.max_codim; ++k) {
    power = truncated_product(power, f, bound.max_codim) * Rational(1, k);
    if (power.is_zero()) break;
    sum += power;
  }
  return truncate(sum, bound.max_codim);
}

}  // namespace tautring
