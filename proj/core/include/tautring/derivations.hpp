#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tautring/ideals.hpp"
#include "tautring/taut_poly.hpp"

namespace tautring {

/// Value of one generator as an element of an ideal of q's, with the
/// certificate expressing it over named generators q1, q2, ...
struct ClosureStep {
  Generator generator;
  TautPoly expression;
  Certificate certificate;
  /// The q's the certificate may use.
  IdealSpec ideal;

  [[nodiscard]] bool verified() const { return certificate.verify(ideal); }
};

struct ClosureResult {
  int seed_index = 2;
  /// p_m for m = seed_index..g; the certificate uses q_1..q_{m-1}.
  std::vector<ClosureStep> p_part;
  /// q_k for k = seed_index..g; the certificate uses q_1..q_{seed_index-1}.
  std::vector<ClosureStep> q_part;

  [[nodiscard]] const ClosureStep* find(Generator g) const;
  /// Substitution rules generator -> expression for every solved generator.
  [[nodiscard]] std::map<Generator, TautPoly> rules() const;
};

/// Starting from p_n = seed (seed in I_q, bidegree (n, n-1)), derives p_{m+1}
/// for m = n..g-1 by applying D to p_2 * (p_m - E_m):
///   p_{m+1} = (D(p_2 E_m) + q_1 E_m + q_{m-1} p_2) / C(m+2, 2),
/// substituting earlier expressions until only p_i with i < n remain.
ClosureResult closure_p(const RingContext& ctx, int n, const TautPoly& seed);

/// Extends a closure_p result with q_k = sum_j D(q_1 q_j A_j) + q_1 q_{k-1}
/// for k = n..g, where p_k = sum_j q_j A_j, reduced until every q_k is
/// expressed over q_1..q_{n-1}.
ClosureResult closure_q(const RingContext& ctx, int n, ClosureResult closure);

/// A statement used as input rather than derived.
struct Axiom {
  std::string statement;
  std::string justification;
};

class CastelnuovoVanishes : public std::domain_error {
 public:
  CastelnuovoVanishes(int r, int d, int g);
};

struct MainGenerators {
  Rational castelnuovo;
  /// p_i and q_i for i <= d - 2r + 1.
  std::vector<Generator> generators;
  /// (M, factorial relation) for M = d..d+3.
  std::vector<std::pair<int, TautPoly>> relations;
  Axiom axiom;
  /// Whether n = d - 2r + 2 satisfies 2 <= n <= g - 1, so that the closure
  /// induction turns the axiom into the generator statement.
  bool closure_applies = false;
};

/// Throws CastelnuovoPole for d = 2r - 2 and CastelnuovoVanishes when A(r, d, g) = 0.
MainGenerators generators_main(int g, int d, int r);

/// q_k = q_1^k / (k! (g-1)^(k-1)), obtained from the codim-k coefficient of
/// exp(2 q_1) = 2 (2g-2)^(k-1) q_k.
TautPoly prop2_q_formula(int g, int k);

struct EvenCheck {
  int codim = 0;
  /// Coefficient of q_codim in the codim piece; must vanish.
  Rational qk_coefficient;
  /// The whole codim piece after substituting the odd solutions; must vanish.
  TautPoly residual;

  [[nodiscard]] bool cancels() const { return qk_coefficient.is_zero() && residual.is_zero(); }
};

struct OddQSolution {
  /// Odd k >= 3 -> q_k as a polynomial in q_1 and even q's.
  std::map<int, TautPoly> odd;
  std::vector<EvenCheck> even;

  [[nodiscard]] bool all_even_cancel() const;
};

/// Solves 1 + sum (g-1)^(i-1) q_i = exp(2 q_1) (1 + sum (-1)^i (g-1)^(i-1) q_i)
/// codim by codim up to `up_to`.
OddQSolution odd_q_solver(int g, int up_to);

struct TranslationRelation {
  int codim = 0;
  /// Weight codim-1 piece of the translation identity, normalized: monic in
  /// p_codim when p_codim survives, otherwise scaled by (1 - g).
  TautPoly relation;
  /// p_codim = solved, when the relation is monic in p_codim.
  std::optional<TautPoly> solved;
};

/// (-1)_* sum p_i = 1/(g-1) (-2)^*((g-1) + sum q_i) * sum p_i, read off in
/// bidegree (a, a-1) for a = 2..up_to_codim.
std::vector<TranslationRelation> hyperelliptic_translation(int g, int up_to_codim);

/// Q[p_1, q_1] / (p_1^(g+1), q_1 p_1^g, ..., q_1^(a-1) p_1^(g-a+2), q_1^a).
/// Needs 1 <= a <= g + 1.
Presentation hyperelliptic_presentation(int g, int a);

struct NonvanishingEntry {
  int m = 0;
  int n = 0;
  /// n (m + n - g - 1)
  Rational factor;
  /// D(q_1^m p_1^n) == factor * q_1^m p_1^(n-1), checked exactly.
  bool identity_holds = false;
};

struct HyperellipticSuite {
  int genus = 2;
  int a = 1;
  Presentation presentation;
  std::vector<TranslationRelation> translation;
  /// m < a, m + n <= g.
  std::vector<NonvanishingEntry> nonvanishing;
  ClosureResult closure;
  /// p_m and q_m (m = 2..g) in p_1, q_1, reduced modulo the presentation.
  std::vector<std::pair<Generator, TautPoly>> reduced;
};

HyperellipticSuite hyperelliptic_suite(int g, int a);

}  // namespace tautring
