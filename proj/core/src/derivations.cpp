#include "tautring/derivations.hpp"

#include <algorithm>

#include "tautring/binomial.hpp"
#include "tautring/expr.hpp"
#include "tautring/operators.hpp"
#include "tautring/relations.hpp"

namespace tautring {

namespace {

TautPoly var(Generator g) { return TautPoly(g); }

/// Splits f over q_1..q_{max_index}, charging each term to its
/// smallest-index q factor.
Certificate split_over_q(const TautPoly& f, int max_index) {
  std::map<int, TautPoly> cofactors;
  for (const auto& [m, c] : f.terms()) {
    const auto& qe = m.q_exponents();
    auto first = std::find_if(qe.begin(), qe.end(), [](int e) { return e != 0; });
    const int index = static_cast<int>(first - qe.begin()) + 1;
    if (first == qe.end() || index > max_index) {
      throw std::logic_error("term " + format_monomial(m) + " is not in (q_1..q_" +
                             std::to_string(max_index) + ")");
    }
    const Generator q = Generator::q(index);
    cofactors[index] += TautPoly(*m.divided_by(q), c);
  }
  Certificate cert;
  cert.target = f;
  for (auto& [index, cofactor] : cofactors) {
    cert.combination.emplace_back(Generator::q(index).name(), std::move(cofactor));
  }
  return cert;
}

ClosureStep make_step(Generator g, const TautPoly& expression, int max_q_index) {
  ClosureStep step{g, expression, split_over_q(expression, max_q_index),
                   IdealSpec::q_ideal(max_q_index)};
  if (!step.verified()) throw std::logic_error("certificate for " + g.name() + " failed to verify");
  return step;
}

}  // namespace

const ClosureStep* ClosureResult::find(Generator g) const {
  const auto& part = g.kind == GenKind::P ? p_part : q_part;
  auto it = std::find_if(part.begin(), part.end(),
                         [&](const ClosureStep& s) { return s.generator == g; });
  return it == part.end() ? nullptr : &*it;
}

std::map<Generator, TautPoly> ClosureResult::rules() const {
  std::map<Generator, TautPoly> out;
  for (const auto& s : p_part) out.emplace(s.generator, s.expression);
  for (const auto& s : q_part) out.emplace(s.generator, s.expression);
  return out;
}

ClosureResult closure_p(const RingContext& ctx, int n, const TautPoly& seed) {
  ctx.validate();
  const int g = ctx.genus;
  if (n < 2) throw std::invalid_argument("closure_p needs n >= 2");
  if (n > g) throw std::invalid_argument("closure_p needs n <= g");
  if (!reduce_mod_Iq(seed).is_zero()) {
    throw std::invalid_argument("closure_p seed " + format_expr(seed) + " is not in I_q");
  }
  if (!seed.is_zero() && seed.bidegree() != BiDegree{n, n - 1}) {
    throw std::invalid_argument("closure_p seed must be homogeneous of bidegree " +
                                to_string(BiDegree{n, n - 1}));
  }

  ClosureResult result;
  result.seed_index = n;
  std::map<Generator, TautPoly> rules{{Generator::p(n), seed}};
  result.p_part.push_back(make_step(Generator::p(n), seed, n - 1));

  const TautPoly p2 = var(Generator::p(2));
  const TautPoly q1 = var(Generator::q(1));
  for (int m = n; m < g; ++m) {
    const TautPoly& current = rules.at(Generator::p(m));
    TautPoly raw = apply_D(ctx, p2 * current) + q1 * current + var(Generator::q(m - 1)) * p2;
    raw *= Rational(1) / Rational(binom(m + 2, 2));
    TautPoly next = substitute_until_stable(raw, rules);
    if (!next.is_zero() && next.bidegree() != BiDegree{m + 1, m}) {
      throw std::logic_error("closure_p produced an inhomogeneous p_" + std::to_string(m + 1));
    }
    rules.emplace(Generator::p(m + 1), next);
    result.p_part.push_back(make_step(Generator::p(m + 1), next, m));
  }
  return result;
}

ClosureResult closure_q(const RingContext& ctx, int n, ClosureResult closure) {
  ctx.validate();
  const int g = ctx.genus;
  if (closure.seed_index != n || closure.p_part.empty()) {
    throw std::invalid_argument("closure_q needs a closure_p result seeded at the same n");
  }
  closure.q_part.clear();
  auto rules = closure.rules();
  const TautPoly q1 = var(Generator::q(1));

  for (int k = n; k <= g; ++k) {
    const ClosureStep* pk = closure.find(Generator::p(k));
    if (pk == nullptr) throw std::invalid_argument("closure_q: p_" + std::to_string(k) + " missing");
    TautPoly raw = q1 * var(Generator::q(k - 1));
    for (const auto& [name, cofactor] : pk->certificate.combination) {
      const TautPoly qj = pk->ideal.find(name)->element;
      raw += apply_D(ctx, q1 * qj * cofactor);
    }
    TautPoly value = substitute_until_stable(raw, rules);
    rules.emplace(Generator::q(k), value);
    closure.q_part.push_back(make_step(Generator::q(k), value, n - 1));
  }
  return closure;
}

CastelnuovoVanishes::CastelnuovoVanishes(int r, int d, int g)
    : std::domain_error("A(" + std::to_string(r) + ", " + std::to_string(d) + ", " +
                        std::to_string(g) + ") = 0; the generator bound does not apply") {}

MainGenerators generators_main(int g, int d, int r) {
  if (g < 2) throw std::invalid_argument("generators_main needs g >= 2");
  MainGenerators out;
  out.castelnuovo = castelnuovo(r, d, g);
  if (out.castelnuovo.is_zero()) throw CastelnuovoVanishes(r, d, g);

  const int top = d - 2 * r + 1;
  for (int i = 1; i <= top; ++i) out.generators.push_back(Generator::p(i));
  for (int i = 1; i <= top; ++i) out.generators.push_back(Generator::q(i));
  for (int M = d; M <= d + 3; ++M) {
    if (M - 2 * r + 1 >= 0) out.relations.emplace_back(M, rel_factorial(d, r, M));
  }
  const int n = top + 1;
  out.axiom.statement = "p" + std::to_string(n) + " in I_q";
  out.axiom.justification =
      "imported: follows from the factorial relation at M = d and the universal relations "
      "modulo I_q; not derived by this program";
  out.closure_applies = n >= 2 && n <= g - 1;
  return out;
}

TautPoly prop2_q_formula(int g, int k) {
  if (g < 2) throw std::invalid_argument("prop2_q_formula needs g >= 2");
  if (k < 1) throw std::invalid_argument("prop2_q_formula needs k >= 1");
  const TautPoly series = series_exp(Rational(2) * var(Generator::q(1)), SeriesBound{k});
  const TautPoly coefficient = graded_component(series, BiDegree{k, k});
  const Rational scale = Rational(2) * pow(Rational(2 * g - 2), k - 1);
  return coefficient * (Rational(1) / scale);
}

bool OddQSolution::all_even_cancel() const {
  return std::all_of(even.begin(), even.end(), [](const EvenCheck& c) { return c.cancels(); });
}

OddQSolution odd_q_solver(int g, int up_to) {
  if (g < 2) throw std::invalid_argument("odd_q_solver needs g >= 2");
  const Rational gm1(g - 1);
  TautPoly lhs(Rational(1));
  TautPoly twisted(Rational(1));
  for (int i = 1; i <= up_to; ++i) {
    const Rational w = pow(gm1, i - 1);
    lhs += w * var(Generator::q(i));
    twisted += (i % 2 == 0 ? w : -w) * var(Generator::q(i));
  }
  const TautPoly rhs =
      truncated_product(series_exp(Rational(2) * var(Generator::q(1)), SeriesBound{up_to}),
                        twisted, up_to);
  const TautPoly identity = lhs - rhs;

  OddQSolution out;
  std::map<Generator, TautPoly> rules;
  for (int k = 2; k <= up_to; ++k) {
    const Generator qk = Generator::q(k);
    const TautPoly piece = substitute_until_stable(graded_component(identity, {k, k}), rules);
    const Rational c = piece.coefficient(Monomial::of(qk));
    if (k % 2 == 0) {
      out.even.push_back(EvenCheck{k, c, piece});
      continue;
    }
    // c q_k + rest = 0
    const TautPoly rest = piece - TautPoly(Monomial::of(qk), c);
    TautPoly solution = rest * (Rational(-1) / c);
    rules.emplace(qk, solution);
    out.odd.emplace(k, std::move(solution));
  }
  return out;
}

std::vector<TranslationRelation> hyperelliptic_translation(int g, int up_to_codim) {
  if (g < 2) throw std::invalid_argument("hyperelliptic_translation needs g >= 2");
  const int top = std::max(g, up_to_codim);
  RingContext ctx = RingContext::for_genus(g);
  ctx.bound = top;

  TautPoly p_sum;
  TautPoly q_sum(Rational(g - 1));
  for (int i = 1; i <= top; ++i) {
    p_sum += var(Generator::p(i));
    q_sum += var(Generator::q(i));
  }
  const TautPoly lhs = pushforward(ctx, -1, p_sum);
  const TautPoly rhs = truncated_product(pullback(ctx, -2, q_sum), p_sum, up_to_codim) *
                       (Rational(1) / Rational(g - 1));
  const TautPoly identity = lhs - rhs;

  std::vector<TranslationRelation> out;
  for (int a = 2; a <= up_to_codim; ++a) {
    TranslationRelation rel;
    rel.codim = a;
    rel.relation = graded_component(identity, {a, a - 1});
    const Monomial pa = Monomial::of(Generator::p(a));
    const Rational lead = rel.relation.coefficient(pa);
    if (!lead.is_zero()) {
      rel.relation *= Rational(1) / lead;
      rel.solved = var(Generator::p(a)) - rel.relation;
    } else {
      rel.relation *= Rational(1 - g);
    }
    out.push_back(std::move(rel));
  }
  return out;
}

Presentation hyperelliptic_presentation(int g, int a) {
  if (g < 2) throw std::invalid_argument("hyperelliptic_presentation needs g >= 2");
  if (a < 1 || a > g + 1) {
    throw std::invalid_argument(
        "hyperelliptic_presentation needs 1 <= a <= g + 1 (q1^(g+1) has codim g + 1 and vanishes)");
  }
  const Generator p1 = Generator::p(1);
  const Generator q1 = Generator::q(1);
  std::vector<IdealGenerator> gens;
  for (int m = 0; m < a; ++m) {
    const Monomial mono = Monomial::of(q1, m) * Monomial::of(p1, g + 1 - m);
    gens.push_back({format_monomial(mono), TautPoly(mono)});
  }
  const Monomial qa = Monomial::of(q1, a);
  gens.push_back({format_monomial(qa), TautPoly(qa)});

  Presentation pres{RingContext::for_genus(g), IdealSpec(std::move(gens)), {p1, q1}};
  pres.validate();
  return pres;
}

HyperellipticSuite hyperelliptic_suite(int g, int a) {
  HyperellipticSuite suite;
  suite.genus = g;
  suite.a = a;
  suite.presentation = hyperelliptic_presentation(g, a);
  suite.translation = hyperelliptic_translation(g, g);

  const RingContext ctx = RingContext::for_genus(g);
  const Generator p1 = Generator::p(1);
  const Generator q1 = Generator::q(1);
  for (int m = 0; m < a; ++m) {
    for (int n = 0; m + n <= g; ++n) {
      NonvanishingEntry e;
      e.m = m;
      e.n = n;
      e.factor = Rational(n * (m + n - g - 1));
      const TautPoly lhs = apply_D(ctx, TautPoly(Monomial::of(q1, m) * Monomial::of(p1, n)));
      const TautPoly rhs =
          n == 0 ? TautPoly{} : TautPoly(Monomial::of(q1, m) * Monomial::of(p1, n - 1), e.factor);
      e.identity_holds = lhs == rhs;
      suite.nonvanishing.push_back(e);
    }
  }

  const TautPoly seed = var(p1) * var(q1) * (Rational(1) / Rational(g - 1));
  suite.closure = closure_q(ctx, 2, closure_p(ctx, 2, seed));
  const auto rules = suite.closure.rules();
  for (int m = 2; m <= g; ++m) {
    for (const Generator gen : {Generator::p(m), Generator::q(m)}) {
      const TautPoly value = substitute_until_stable(var(gen), rules);
      suite.reduced.emplace_back(gen, normal_form(suite.presentation, value));
    }
  }
  return suite;
}

}  // namespace tautring
