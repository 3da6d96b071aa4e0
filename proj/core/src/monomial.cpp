#include "tautring/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace tautring {

std::string to_string(BiDegree d) {
  return "(" + std::to_string(d.codim) + "," + std::to_string(d.weight) + ")";
}

std::string Generator::name() const {
  return (kind == GenKind::P ? "p" : "q") + std::to_string(index);
}

std::optional<Generator> parse_generator(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'p' && text[0] != 'q')) return std::nullopt;
  const std::string_view digits = text.substr(1);
  int index = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || index < 1) return std::nullopt;
  return Generator{text[0] == 'p' ? GenKind::P : GenKind::Q, index};
}

Monomial Monomial::of(Generator g, int exponent) {
  if (g.index < 1) throw std::invalid_argument("generator index must be >= 1");
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  Monomial m;
  if (exponent == 0) return m;
  auto& f = m.family(g.kind);
  f.assign(static_cast<std::size_t>(g.index), 0);
  f.back() = exponent;
  return m;
}

int Monomial::exponent(Generator g) const {
  const auto& f = family(g.kind);
  const auto i = static_cast<std::size_t>(g.index - 1);
  return (g.index >= 1 && i < f.size()) ? f[i] : 0;
}

BiDegree Monomial::bidegree() const {
  BiDegree d;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    const int idx = static_cast<int>(i) + 1;
    d.codim += p_[i] * idx;
    d.weight += p_[i] * (idx - 1);
  }
  for (std::size_t i = 0; i < q_.size(); ++i) {
    const int idx = static_cast<int>(i) + 1;
    d.codim += q_[i] * idx;
    d.weight += q_[i] * idx;
  }
  return d;
}

int Monomial::total_degree() const {
  int n = 0;
  for (int e : p_) n += e;
  for (int e : q_) n += e;
  return n;
}

int Monomial::max_index() const {
  return static_cast<int>(std::max(p_.size(), q_.size()));
}

std::vector<std::pair<Generator, int>> Monomial::factors() const {
  std::vector<std::pair<Generator, int>> out;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (p_[i] != 0) out.emplace_back(Generator::p(static_cast<int>(i) + 1), p_[i]);
  }
  for (std::size_t i = 0; i < q_.size(); ++i) {
    if (q_[i] != 0) out.emplace_back(Generator::q(static_cast<int>(i) + 1), q_[i]);
  }
  return out;
}

std::optional<Monomial> Monomial::divided_by(Generator g, int times) const {
  if (exponent(g) < times) return std::nullopt;
  Monomial m = *this;
  m.family(g.kind)[static_cast<std::size_t>(g.index - 1)] -= times;
  m.trim();
  return m;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& d) const {
  if (d.p_.size() > p_.size() || d.q_.size() > q_.size()) return std::nullopt;
  Monomial m = *this;
  for (std::size_t i = 0; i < d.p_.size(); ++i) {
    if ((m.p_[i] -= d.p_[i]) < 0) return std::nullopt;
  }
  for (std::size_t i = 0; i < d.q_.size(); ++i) {
    if ((m.q_[i] -= d.q_[i]) < 0) return std::nullopt;
  }
  m.trim();
  return m;
}

Monomial Monomial::times(Generator g, int times) const {
  return *this * Monomial::of(g, times);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.p_.resize(std::max(a.p_.size(), b.p_.size()), 0);
  m.q_.resize(std::max(a.q_.size(), b.q_.size()), 0);
  for (std::size_t i = 0; i < a.p_.size(); ++i) m.p_[i] += a.p_[i];
  for (std::size_t i = 0; i < b.p_.size(); ++i) m.p_[i] += b.p_[i];
  for (std::size_t i = 0; i < a.q_.size(); ++i) m.q_[i] += a.q_[i];
  for (std::size_t i = 0; i < b.q_.size(); ++i) m.q_[i] += b.q_[i];
  return m;
}

void Monomial::trim() {
  while (!p_.empty() && p_.back() == 0) p_.pop_back();
  while (!q_.empty() && q_.back() == 0) q_.pop_back();
}

namespace {

std::strong_ordering compare_family(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = std::max(a.size(), b.size()); i-- > 0;) {
    const int ea = i < a.size() ? a[i] : 0;
    const int eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return eb <=> ea;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare(const Monomial& a, const Monomial& b) {
  const BiDegree da = a.bidegree();
  const BiDegree db = b.bidegree();
  if (auto c = da <=> db; c != 0) return c;
  if (auto c = compare_family(a.p_exponents(), b.p_exponents()); c != 0) return c;
  return compare_family(a.q_exponents(), b.q_exponents());
}

}  // namespace tautring
