#include "tautring/taut_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tautring {

RingContext RingContext::for_genus(int g) {
  RingContext ctx{g, g, Rational(g)};
  ctx.validate();
  return ctx;
}

void RingContext::validate() const {
  if (genus < 2) throw std::invalid_argument("genus must be >= 2, got " + std::to_string(genus));
  if (bound < 1) throw std::invalid_argument("generator bound must be >= 1");
}

std::vector<Generator> RingContext::generators() const {
  std::vector<Generator> out;
  for (int i = 1; i <= bound; ++i) out.push_back(Generator::p(i));
  for (int i = 1; i <= bound; ++i) out.push_back(Generator::q(i));
  return out;
}

TautPoly::TautPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

TautPoly::TautPoly(const Monomial& m, const Rational& c) {
  if (!c.is_zero()) terms_.emplace(m, c);
}

TautPoly::TautPoly(Generator g) : TautPoly(Monomial::of(g)) {}

Rational TautPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational{} : it->second;
}

std::set<BiDegree> TautPoly::bidegrees() const {
  std::set<BiDegree> out;
  for (const auto& [m, c] : terms_) out.insert(m.bidegree());
  return out;
}

std::optional<BiDegree> TautPoly::bidegree() const {
  auto degs = bidegrees();
  if (degs.size() != 1) return std::nullopt;
  return *degs.begin();
}

int TautPoly::max_codim() const {
  // terms are graded by codim first
  return terms_.empty() ? -1 : terms_.rbegin()->first.bidegree().codim;
}

int TautPoly::max_index() const {
  int n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.max_index());
  return n;
}

bool TautPoly::uses_only(const std::vector<Generator>& vars) const {
  for (const auto& [m, c] : terms_) {
    for (const auto& [g, e] : m.factors()) {
      if (std::find(vars.begin(), vars.end(), g) == vars.end()) return false;
    }
  }
  return true;
}

void TautPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TautPoly& TautPoly::operator+=(const TautPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TautPoly& TautPoly::operator-=(const TautPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TautPoly& TautPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

TautPoly TautPoly::operator-() const {
  TautPoly r = *this;
  return r *= Rational(-1);
}

TautPoly operator*(const TautPoly& a, const TautPoly& b) {
  TautPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

TautPoly pow(const TautPoly& f, unsigned exponent) {
  TautPoly result(Rational(1));
  TautPoly base = f;
  while (exponent != 0) {
    if ((exponent & 1U) != 0) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

TautPoly graded_component(const TautPoly& f, BiDegree d) {
  TautPoly r;
  for (const auto& [m, c] : f.terms()) {
    if (m.bidegree() == d) r.add_term(m, c);
  }
  return r;
}

TautPoly truncate(const TautPoly& f, int max_codim) {
  TautPoly r;
  for (const auto& [m, c] : f.terms()) {
    if (m.bidegree().codim > max_codim) break;
    r.add_term(m, c);
  }
  return r;
}

TautPoly truncated_product(const TautPoly& a, const TautPoly& b, int max_codim) {
  TautPoly r;
  for (const auto& [ma, ca] : a.terms()) {
    const int ca_codim = ma.bidegree().codim;
    if (ca_codim > max_codim) break;
    for (const auto& [mb, cb] : b.terms()) {
      if (ca_codim + mb.bidegree().codim > max_codim) break;
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

TautPoly substitute(const TautPoly& f, const std::map<Generator, TautPoly>& rules) {
  std::map<std::pair<Generator, int>, TautPoly> powers;
  auto power_of = [&](Generator g, int e) -> const TautPoly& {
    auto key = std::make_pair(g, e);
    auto it = powers.find(key);
    if (it == powers.end()) {
      it = powers.emplace(key, pow(rules.at(g), static_cast<unsigned>(e))).first;
    }
    return it->second;
  };

  TautPoly result;
  for (const auto& [m, c] : f.terms()) {
    Monomial kept;
    TautPoly value(c);
    for (const auto& [g, e] : m.factors()) {
      if (rules.contains(g)) {
        value = value * power_of(g, e);
      } else {
        kept = kept.times(g, e);
      }
    }
    result += value * TautPoly(kept);
  }
  return result;
}

bool mentions(const TautPoly& f, Generator g) {
  return std::any_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& t) { return t.first.exponent(g) != 0; });
}

TautPoly substitute_until_stable(const TautPoly& f, const std::map<Generator, TautPoly>& rules,
                                 int max_rounds) {
  TautPoly current = f;
  for (int round = 0; round < max_rounds; ++round) {
    const bool pending = std::any_of(rules.begin(), rules.end(),
                                     [&](const auto& r) { return mentions(current, r.first); });
    if (!pending) return current;
    current = substitute(current, rules);
  }
  throw std::runtime_error("substitution did not stabilize after " + std::to_string(max_rounds) +
                           " rounds");
}

}  // namespace tautring
