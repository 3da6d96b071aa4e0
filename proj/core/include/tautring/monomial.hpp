#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tautring {

/// Chow codimension and Beauville weight of a homogeneous class.
struct BiDegree {
  int codim = 0;
  int weight = 0;

  friend BiDegree operator+(BiDegree a, BiDegree b) { return {a.codim + b.codim, a.weight + b.weight}; }
  friend BiDegree operator-(BiDegree a, BiDegree b) { return {a.codim - b.codim, a.weight - b.weight}; }
  friend auto operator<=>(const BiDegree&, const BiDegree&) = default;
};

std::string to_string(BiDegree d);

enum class GenKind : std::uint8_t { P, Q };

/// One of the ring generators p_i (bidegree (i, i-1)) or q_i (bidegree (i, i)).
struct Generator {
  GenKind kind = GenKind::P;
  int index = 1;

  static Generator p(int i) { return {GenKind::P, i}; }
  static Generator q(int i) { return {GenKind::Q, i}; }

  [[nodiscard]] BiDegree bidegree() const {
    return {index, kind == GenKind::P ? index - 1 : index};
  }
  [[nodiscard]] std::string name() const;

  /// p's before q's, then by index.
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Parses "p3" / "q12"; nullopt on anything else (index must be >= 1).
std::optional<Generator> parse_generator(std::string_view text);

/// Commutative monomial in p_1, p_2, ..., q_1, q_2, ...
///
/// Exponents are stored densely per family with trailing zeros trimmed, so
/// equal monomials have equal representations.
class Monomial {
 public:
  Monomial() = default;

  static Monomial of(Generator g, int exponent = 1);

  [[nodiscard]] int exponent(Generator g) const;
  [[nodiscard]] bool is_one() const { return p_.empty() && q_.empty(); }
  [[nodiscard]] BiDegree bidegree() const;
  [[nodiscard]] int total_degree() const;
  /// Largest generator index present (0 for the unit monomial).
  [[nodiscard]] int max_index() const;
  [[nodiscard]] bool has_q() const { return !q_.empty(); }

  /// Nonzero (generator, exponent) pairs, p's first, increasing index.
  [[nodiscard]] std::vector<std::pair<Generator, int>> factors() const;

  [[nodiscard]] const std::vector<int>& p_exponents() const { return p_; }
  [[nodiscard]] const std::vector<int>& q_exponents() const { return q_; }

  /// Returns this / g^times, or nullopt if the exponent is too small.
  [[nodiscard]] std::optional<Monomial> divided_by(Generator g, int times = 1) const;
  [[nodiscard]] std::optional<Monomial> divided_by(const Monomial& m) const;
  [[nodiscard]] bool divides(const Monomial& m) const { return m.divided_by(*this).has_value(); }

  [[nodiscard]] Monomial times(Generator g, int times = 1) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int>& family(GenKind k) { return k == GenKind::P ? p_ : q_; }
  [[nodiscard]] const std::vector<int>& family(GenKind k) const { return k == GenKind::P ? p_ : q_; }
  void trim();

  std::vector<int> p_;
  std::vector<int> q_;
};

/// Canonical total order: codim, then weight, then the p-part and the q-part,
/// each compared at its highest differing index (larger exponent first).
std::strong_ordering compare(const Monomial& a, const Monomial& b);

struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

}  // namespace tautring
