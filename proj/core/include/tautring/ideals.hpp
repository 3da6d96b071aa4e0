#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tautring/taut_poly.hpp"

namespace tautring {

struct IdealGenerator {
  std::string name;
  TautPoly element;

  friend bool operator==(const IdealGenerator&, const IdealGenerator&) = default;
};

/// Named generators of a homogeneous ideal. Elements are nonzero and names unique.
class IdealSpec {
 public:
  IdealSpec() = default;
  explicit IdealSpec(std::vector<IdealGenerator> generators);

  /// (q_1, ..., q_n), generators named "q1".."qn".
  static IdealSpec q_ideal(int n);

  [[nodiscard]] const std::vector<IdealGenerator>& generators() const { return generators_; }
  [[nodiscard]] const IdealGenerator* find(std::string_view name) const;
  [[nodiscard]] bool empty() const { return generators_.empty(); }
  [[nodiscard]] std::size_t size() const { return generators_.size(); }

  friend bool operator==(const IdealSpec&, const IdealSpec&) = default;

 private:
  std::vector<IdealGenerator> generators_;
};

/// target = sum over combination of generator(name) * cofactor.
struct Certificate {
  TautPoly target;
  std::vector<std::pair<std::string, TautPoly>> combination;

  /// Substitutes the generators; throws std::invalid_argument on an unknown name.
  [[nodiscard]] TautPoly evaluate(const IdealSpec& ideal) const;
  [[nodiscard]] bool verify(const IdealSpec& ideal) const { return evaluate(ideal) == target; }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Quotient of the polynomial ring in `variables` by `ideal`.
struct Presentation {
  RingContext context;
  IdealSpec ideal;
  std::vector<Generator> variables;

  /// Throws std::invalid_argument if a generator uses a variable outside the
  /// subset or is not bihomogeneous.
  void validate() const;
};

/// Monomials in `vars` of the given codim (and weight, if given), in
/// canonical order.
std::vector<Monomial> monomial_basis(int codim, std::optional<int> weight,
                                     const std::vector<Generator>& vars);

/// Same, with the context's p_1..p_N, q_1..q_N as variables.
std::vector<Monomial> monomial_basis(const RingContext& ctx, int codim,
                                     std::optional<int> weight = std::nullopt);

enum class MembershipStatus { Member, NotMember, NotFoundWithinTruncation };

std::string to_string(MembershipStatus s);

struct MembershipResult {
  MembershipStatus status = MembershipStatus::NotMember;
  std::optional<Certificate> certificate;
  std::vector<std::string> warnings;
};

/// Decides f in ideal by solving, per bidegree of f, the exact linear system
/// over {generator * monomial}. Cofactors are capped at codim
/// max_codim - codim(generator); components of f above max_codim are not
/// attempted and yield NotFoundWithinTruncation with a warning.
/// Generators must be bihomogeneous.
MembershipResult membership(const RingContext& ctx, const TautPoly& f, const IdealSpec& ideal,
                            int max_codim);

/// Sets every q_i (i >= 1) to zero.
TautPoly reduce_mod_Iq(const TautPoly& f);

struct HilbertFunction {
  /// (codim, dimension) for codim = 0..up_to.
  std::vector<std::pair<int, long>> by_codim;
  /// Dimension per bidegree; bidegrees without monomials are omitted.
  std::map<BiDegree, long> by_bidegree;
};

HilbertFunction hilbert_function(const Presentation& pres, int up_to_codim);

/// Monomials whose classes form a basis of the codim piece of the quotient,
/// in canonical order.
std::vector<Monomial> quotient_basis(const Presentation& pres, int codim);

/// Representative of f modulo the ideal, supported on quotient_basis monomials.
TautPoly normal_form(const Presentation& pres, const TautPoly& f);

}  // namespace tautring
