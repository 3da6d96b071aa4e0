#include "tautring/ideals.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tautring/linear_algebra.hpp"

namespace tautring {

IdealSpec::IdealSpec(std::vector<IdealGenerator> generators) : generators_(std::move(generators)) {
  std::set<std::string> names;
  for (const auto& g : generators_) {
    if (g.element.is_zero()) throw std::invalid_argument("ideal generator '" + g.name + "' is zero");
    if (!names.insert(g.name).second) {
      throw std::invalid_argument("duplicate ideal generator name '" + g.name + "'");
    }
  }
}

IdealSpec IdealSpec::q_ideal(int n) {
  std::vector<IdealGenerator> gens;
  for (int i = 1; i <= n; ++i) gens.push_back({Generator::q(i).name(), TautPoly(Generator::q(i))});
  return IdealSpec(std::move(gens));
}

const IdealGenerator* IdealSpec::find(std::string_view name) const {
  auto it = std::find_if(generators_.begin(), generators_.end(),
                         [&](const IdealGenerator& g) { return g.name == name; });
  return it == generators_.end() ? nullptr : &*it;
}

TautPoly Certificate::evaluate(const IdealSpec& ideal) const {
  TautPoly sum;
  for (const auto& [name, cofactor] : combination) {
    const IdealGenerator* g = ideal.find(name);
    if (g == nullptr) throw std::invalid_argument("certificate names unknown generator '" + name + "'");
    sum += g->element * cofactor;
  }
  return sum;
}

void Presentation::validate() const {
  context.validate();
  for (const auto& g : ideal.generators()) {
    if (!g.element.uses_only(variables)) {
      throw std::invalid_argument("generator '" + g.name + "' uses a variable outside the presentation");
    }
    if (!g.element.is_homogeneous()) {
      throw std::invalid_argument("generator '" + g.name + "' is not bihomogeneous");
    }
  }
}

namespace {

void enumerate(const std::vector<Generator>& vars, std::size_t from, int codim_left,
               Monomial current, std::vector<Monomial>& out) {
  if (codim_left == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = from; i < vars.size(); ++i) {
    const int c = vars[i].bidegree().codim;
    if (c > codim_left) continue;
    enumerate(vars, i, codim_left - c, current.times(vars[i]), out);
  }
}

std::vector<Generator> sorted_unique(std::vector<Generator> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::vector<Monomial> monomials_of_bidegree(BiDegree d, const std::vector<Generator>& vars) {
  if (d.codim < 0) return {};
  return monomial_basis(d.codim, d.weight, vars);
}

/// Column index of each monomial in a fixed list.
class MonomialIndex {
 public:
  explicit MonomialIndex(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  }

  [[nodiscard]] std::size_t size() const { return monomials_.size(); }
  [[nodiscard]] const Monomial& at(std::size_t i) const { return monomials_[i]; }

  [[nodiscard]] linalg::Vector to_vector(const TautPoly& f) const {
    linalg::Vector v(monomials_.size());
    for (const auto& [m, c] : f.terms()) v.at(index_.at(m)) = c;
    return v;
  }

 private:
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t, MonomialOrder> index_;
};

std::vector<Generator> membership_variables(const RingContext& ctx, const TautPoly& f,
                                            const IdealSpec& ideal) {
  int bound = std::max(ctx.bound, f.max_index());
  for (const auto& g : ideal.generators()) bound = std::max(bound, g.element.max_index());
  RingContext wide = ctx;
  wide.bound = bound;
  return wide.generators();
}

/// Span of {generator * monomial} inside bidegree d, as polynomials.
std::vector<TautPoly> ideal_span(const IdealSpec& ideal, BiDegree d,
                                 const std::vector<Generator>& vars) {
  std::vector<TautPoly> out;
  for (const auto& g : ideal.generators()) {
    const auto gd = g.element.bidegree();
    if (!gd) continue;
    for (const auto& m : monomials_of_bidegree(d - *gd, vars)) out.push_back(g.element * TautPoly(m));
  }
  return out;
}

struct WeightPiece {
  MonomialIndex columns;
  linalg::Echelon echelon;
};

/// Ideal span inside bidegree d, row reduced over columns ordered from the
/// largest monomial down so that small monomials survive as the basis.
WeightPiece reduced_piece(const Presentation& pres, BiDegree d) {
  auto monomials = monomials_of_bidegree(d, pres.variables);
  std::reverse(monomials.begin(), monomials.end());
  WeightPiece piece{MonomialIndex(std::move(monomials)), {}};
  std::vector<linalg::Vector> rows;
  for (const auto& f : ideal_span(pres.ideal, d, pres.variables)) {
    rows.push_back(piece.columns.to_vector(f));
  }
  piece.echelon = linalg::row_reduce(std::move(rows), piece.columns.size());
  return piece;
}

std::set<int> weights_in_codim(int codim, const std::vector<Generator>& vars) {
  std::set<int> out;
  for (const auto& m : monomial_basis(codim, std::nullopt, vars)) out.insert(m.bidegree().weight);
  return out;
}

}  // namespace

std::vector<Monomial> monomial_basis(int codim, std::optional<int> weight,
                                     const std::vector<Generator>& vars) {
  std::vector<Monomial> out;
  if (codim < 0) return out;
  enumerate(sorted_unique(vars), 0, codim, Monomial{}, out);
  if (weight) {
    std::erase_if(out, [&](const Monomial& m) { return m.bidegree().weight != *weight; });
  }
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

std::vector<Monomial> monomial_basis(const RingContext& ctx, int codim, std::optional<int> weight) {
  return monomial_basis(codim, weight, ctx.generators());
}

std::string to_string(MembershipStatus s) {
  switch (s) {
    case MembershipStatus::Member: return "member";
    case MembershipStatus::NotMember: return "not_member";
    case MembershipStatus::NotFoundWithinTruncation: return "not_found_within_truncation";
  }
  return "?";
}

MembershipResult membership(const RingContext& ctx, const TautPoly& f, const IdealSpec& ideal,
                            int max_codim) {
  for (const auto& g : ideal.generators()) {
    if (!g.element.is_homogeneous()) {
      throw std::invalid_argument("membership needs bihomogeneous generators; '" + g.name +
                                  "' is not");
    }
  }
  const auto vars = membership_variables(ctx, f, ideal);

  MembershipResult result;
  std::map<std::string, TautPoly> cofactors;
  bool truncated = false;

  for (const BiDegree d : f.bidegrees()) {
    if (d.codim > max_codim) {
      truncated = true;
      result.warnings.push_back("component of bidegree " + to_string(d) +
                                " lies above the truncation codim " + std::to_string(max_codim) +
                                "; cofactors were not searched");
      continue;
    }
    // columns: generator * monomial products landing in bidegree d
    std::vector<std::pair<std::size_t, Monomial>> unknowns;
    std::vector<TautPoly> products;
    for (std::size_t gi = 0; gi < ideal.size(); ++gi) {
      const auto& g = ideal.generators()[gi];
      const BiDegree gd = *g.element.bidegree();
      for (const auto& m : monomials_of_bidegree(d - gd, vars)) {
        unknowns.emplace_back(gi, m);
        products.push_back(g.element * TautPoly(m));
      }
    }
    const TautPoly component = graded_component(f, d);
    std::set<Monomial, MonomialOrder> support;
    for (const auto& [m, c] : component.terms()) support.insert(m);
    for (const auto& p : products) {
      for (const auto& [m, c] : p.terms()) support.insert(m);
    }
    const MonomialIndex rows(std::vector<Monomial>(support.begin(), support.end()));
    std::vector<linalg::Vector> columns;
    columns.reserve(products.size());
    for (const auto& p : products) columns.push_back(rows.to_vector(p));

    const auto x = linalg::solve(columns, rows.to_vector(component));
    if (!x) {
      result.status = MembershipStatus::NotMember;
      return result;
    }
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
      if ((*x)[j].is_zero()) continue;
      const auto& [gi, m] = unknowns[j];
      cofactors[ideal.generators()[gi].name] += TautPoly(m, (*x)[j]);
    }
  }

  if (truncated) {
    result.status = MembershipStatus::NotFoundWithinTruncation;
    return result;
  }

  Certificate cert;
  cert.target = f;
  for (const auto& g : ideal.generators()) {
    auto it = cofactors.find(g.name);
    if (it != cofactors.end() && !it->second.is_zero()) cert.combination.emplace_back(g.name, it->second);
  }
  if (!cert.verify(ideal)) throw std::logic_error("membership certificate failed to verify");
  result.status = MembershipStatus::Member;
  result.certificate = std::move(cert);
  return result;
}

TautPoly reduce_mod_Iq(const TautPoly& f) {
  TautPoly out;
  for (const auto& [m, c] : f.terms()) {
    if (!m.has_q()) out.add_term(m, c);
  }
  return out;
}

HilbertFunction hilbert_function(const Presentation& pres, int up_to_codim) {
  pres.validate();
  HilbertFunction h;
  for (int codim = 0; codim <= up_to_codim; ++codim) {
    long total = 0;
    for (int w : weights_in_codim(codim, pres.variables)) {
      const BiDegree d{codim, w};
      const WeightPiece piece = reduced_piece(pres, d);
      const long dim = static_cast<long>(piece.columns.size() - piece.echelon.rank());
      h.by_bidegree[d] = dim;
      total += dim;
    }
    h.by_codim.emplace_back(codim, total);
  }
  return h;
}

std::vector<Monomial> quotient_basis(const Presentation& pres, int codim) {
  pres.validate();
  std::vector<Monomial> out;
  for (int w : weights_in_codim(codim, pres.variables)) {
    const WeightPiece piece = reduced_piece(pres, {codim, w});
    std::vector<bool> is_pivot(piece.columns.size(), false);
    for (auto p : piece.echelon.pivots) is_pivot[p] = true;
    for (std::size_t j = 0; j < piece.columns.size(); ++j) {
      if (!is_pivot[j]) out.push_back(piece.columns.at(j));
    }
  }
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

TautPoly normal_form(const Presentation& pres, const TautPoly& f) {
  pres.validate();
  if (!f.uses_only(pres.variables)) {
    throw std::invalid_argument("normal_form: polynomial uses a variable outside the presentation");
  }
  TautPoly out;
  for (const BiDegree d : f.bidegrees()) {
    const WeightPiece piece = reduced_piece(pres, d);
    const auto v = linalg::reduce(piece.echelon, piece.columns.to_vector(graded_component(f, d)));
    for (std::size_t j = 0; j < v.size(); ++j) out.add_term(piece.columns.at(j), v[j]);
  }
  return out;
}

}  // namespace tautring
