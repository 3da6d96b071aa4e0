#include "tautring/relations.hpp"

#include <numeric>

#include "tautring/binomial.hpp"

namespace tautring {

int Composition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

namespace {

void compositions_into(int remaining, int length, std::vector<int>& prefix,
                       std::vector<Composition>& out) {
  if (static_cast<int>(prefix.size()) == length - 1) {
    prefix.push_back(remaining);
    out.push_back(Composition{prefix});
    prefix.pop_back();
    return;
  }
  for (int x = 0; x <= remaining; ++x) {
    prefix.push_back(x);
    compositions_into(remaining - x, length, prefix, out);
    prefix.pop_back();
  }
}

TautPoly p_product(const Composition& a, const Rational& coefficient) {
  Monomial m;
  for (int part : a.parts) m = m.times(Generator::p(part + 1));
  return TautPoly(m, coefficient);
}

// Accumulates sum over i_u in [1, d] with |i| <= d (C(d, |i|) vanishes beyond).
void gamma_sum(int d, const Composition& a, std::size_t u, int used, const Integer& product,
               Integer& total) {
  if (u == a.parts.size()) {
    Integer term = product * binom(d, used);
    total += (used % 2 == 0) ? term : Integer(-term);
    return;
  }
  const int remaining_parts = static_cast<int>(a.parts.size() - u - 1);
  for (int i = 1; used + i + remaining_parts <= d; ++i) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i),
                  static_cast<unsigned long>(a.parts[u] + 1));
    gamma_sum(d, a, u + 1, used + i, product * power, total);
  }
}

}  // namespace

std::vector<Composition> compositions(int total, int length) {
  std::vector<Composition> out;
  if (total < 0 || length < 0) return out;
  if (length == 0) {
    if (total == 0) out.push_back(Composition{});
    return out;
  }
  std::vector<int> prefix;
  compositions_into(total, length, prefix, out);
  return out;
}

CastelnuovoPole::CastelnuovoPole(int r, int d)
    : std::domain_error("Castelnuovo number A(" + std::to_string(r) + ", " + std::to_string(d) +
                        ", g) has a pole: d - 2r + 2 = 0") {}

Rational castelnuovo(int r, int d, int g) {
  if (r < 1) throw std::invalid_argument("castelnuovo needs r >= 1");
  const int denominator = d - 2 * r + 2;
  if (denominator == 0) throw CastelnuovoPole(r, d);
  Integer sum = 0;
  for (int i = 0; i <= r - 1; ++i) {
    Integer term = binom(i + g + r - d - 2, i) * binom(d - 2 * r, r - 1 - i) *
                   binom(d - r + 1 - i, r - i);
    sum += (i % 2 == 0) ? term : Integer(-term);
  }
  return Rational(sum, Integer(denominator));
}

Integer gamma_coeff(int d, const Composition& a) {
  if (d < 1) throw std::invalid_argument("gamma_coeff needs d >= 1");
  Integer total = 0;
  gamma_sum(d, a, 0, 0, Integer(1), total);
  return total;
}

TautPoly rel_factorial(int /*d*/, int r, int M) {
  if (r < 1) throw std::invalid_argument("rel_factorial needs r >= 1");
  const int s = M - 2 * r + 1;
  if (s < 0) throw std::invalid_argument("rel_factorial needs M - 2r + 1 >= 0");
  TautPoly out;
  for (const auto& alpha : compositions(s, r)) {
    Integer weight = 1;
    for (int part : alpha.parts) weight *= factorial(static_cast<unsigned long>(part + 1));
    out += p_product(alpha, Rational(weight));
  }
  return out;
}

TautPoly rel_gamma(int d, int r, int s) {
  if (r < 1) throw std::invalid_argument("rel_gamma needs r >= 1");
  if (s < 0) throw std::invalid_argument("rel_gamma needs s >= 0");
  TautPoly out;
  for (const auto& a : compositions(s, r)) out += p_product(a, Rational(gamma_coeff(d, a)));
  return out;
}

std::string to_string(ZagierVerdict v) {
  switch (v) {
    case ZagierVerdict::BothZero: return "both_zero";
    case ZagierVerdict::Proportional: return "proportional";
    case ZagierVerdict::Independent: return "independent";
  }
  return "?";
}

ZagierReport zagier_compare(int d, int r, int s) {
  ZagierReport report;
  report.M = s + 2 * r - 1;
  report.gamma_relation = rel_gamma(d, r, s);
  report.factorial_relation = rel_factorial(d, r, report.M);
  const TautPoly& gam = report.gamma_relation;
  const TautPoly& fac = report.factorial_relation;

  if (gam.is_zero() && fac.is_zero()) {
    report.verdict = ZagierVerdict::BothZero;
    return report;
  }
  if (fac.is_zero()) return report;

  const auto& [lead, lead_coeff] = *fac.terms().begin();
  const Rational c = gam.coefficient(lead) / lead_coeff;
  if (gam == fac * c) {
    report.verdict = ZagierVerdict::Proportional;
    report.constant = c;
  }
  return report;
}

Rational fourier_degree0_alpha(int d, int u) {
  if (u < 0 || u > d) {
    throw std::invalid_argument("fourier_degree0_alpha needs 0 <= u <= d");
  }
  return Rational(binom(d, u));
}

}  // namespace tautring
