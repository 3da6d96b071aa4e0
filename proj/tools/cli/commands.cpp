#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json_codec.hpp"
#include "report.hpp"
#include "tautring/tautring.hpp"

namespace tautring::cli {

namespace {

struct Options {
  std::optional<int> genus;
  std::optional<int> max_codim;
  std::optional<int> bound;
  std::string q0;
  bool json = false;
  bool text = false;
  std::string out;

  std::string expr;
  long k = 0;
  int d = 0;
  int r = 0;
  int s = 0;
  int M = 0;
  std::string parts;
  std::vector<std::string> gens;
  bool iq = false;
  std::string ideal_file;
  std::string save_ideal;
  std::optional<int> a;
  std::string vars;
  std::optional<int> up_to;
  int codim = 0;
  std::optional<int> weight;
  bool bigraded = false;
  int n = 2;
  std::string seed;
  bool relations = false;
};

int need_genus(const Options& o) {
  if (!o.genus) throw UsageError("--genus is required for this command");
  if (*o.genus < 2) throw UsageError("--genus must be at least 2");
  return *o.genus;
}

RingContext context(const Options& o, Report& report) {
  RingContext ctx = RingContext::for_genus(need_genus(o));
  if (o.bound) {
    if (*o.bound < 1) throw UsageError("--bound must be at least 1");
    ctx.bound = *o.bound;
  }
  if (!o.q0.empty()) {
    try {
      ctx.q0 = Rational::parse(o.q0);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--q0: ") + e.what());
    }
  }
  report.context.genus = ctx.genus;
  report.context.bound = ctx.bound;
  return ctx;
}

int max_codim(const Options& o, const RingContext& ctx, Report& report) {
  const int m = o.max_codim.value_or(ctx.genus);
  if (m < 0) throw UsageError("--max-codim must be nonnegative");
  report.context.max_codim = m;
  return m;
}

TautPoly parse_flag(const std::string& flag, const std::string& text, std::optional<int> bound) {
  try {
    return parse_expr(text, bound);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  } catch (const IndexBoundError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::vector<int> parse_int_list(const std::string& flag, const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = 0;
    const auto* end = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(item.data(), end, v);
    if (ec != std::errc() || ptr != end || v < 0) {
      throw UsageError(flag + ": expected comma-separated nonnegative integers, got \"" + text + "\"");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

std::vector<Generator> parse_vars(const std::string& text) {
  std::vector<Generator> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto g = parse_generator(item);
    if (!g) throw UsageError("--vars: bad generator \"" + item + "\"");
    out.push_back(*g);
  }
  if (out.empty()) throw UsageError("--vars: empty list");
  return out;
}

Json read_json_file(const std::string& flag, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(flag + ": cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

/// The ideal named by --iq, --gen or --ideal-file; nullopt if none was given.
std::optional<IdealSpec> ideal_from_flags(const Options& o, std::optional<int> bound) {
  const int sources = (o.iq ? 1 : 0) + (o.gens.empty() ? 0 : 1) + (o.ideal_file.empty() ? 0 : 1);
  if (sources > 1) throw UsageError("give only one of --iq, --gen, --ideal-file");
  if (o.iq) return IdealSpec::q_ideal(bound.value_or(1));
  if (!o.ideal_file.empty()) {
    try {
      return ideal_from_json(read_json_file("--ideal-file", o.ideal_file));
    } catch (const SchemaError& e) {
      throw UsageError(std::string("--ideal-file: ") + e.what());
    }
  }
  if (o.gens.empty()) return std::nullopt;
  std::vector<IdealGenerator> gens;
  for (const auto& spec : o.gens) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--gen: expected name=expr, got \"" + spec + "\"");
    gens.push_back({spec.substr(0, eq), parse_flag("--gen " + spec.substr(0, eq), spec.substr(eq + 1), bound)});
  }
  try {
    return IdealSpec(std::move(gens));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--gen: ") + e.what());
  }
}

void save_ideal(const Options& o, const IdealSpec& ideal) {
  if (o.save_ideal.empty()) return;
  std::ofstream f(o.save_ideal);
  if (!f) throw UsageError("--save-ideal: cannot open " + o.save_ideal);
  f << ideal_to_json(ideal).dump(2) << '\n';
}

/// --a selects the hyperelliptic presentation; otherwise --vars with an
/// optional ideal.
std::optional<Presentation> presentation_from_flags(const Options& o, const RingContext& ctx) {
  if (o.a) {
    if (!o.vars.empty() || !o.gens.empty() || !o.ideal_file.empty() || o.iq) {
      throw UsageError("--a cannot be combined with --vars or an ideal");
    }
    return hyperelliptic_presentation(ctx.genus, *o.a);
  }
  if (o.vars.empty()) {
    if (!o.gens.empty() || !o.ideal_file.empty() || o.iq) throw UsageError("an ideal needs --vars");
    return std::nullopt;
  }
  Presentation pres{ctx, ideal_from_flags(o, ctx.bound).value_or(IdealSpec{}), parse_vars(o.vars)};
  try {
    pres.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  save_ideal(o, pres.ideal);
  return pres;
}

std::vector<TautPoly> as_polys(const std::vector<Monomial>& ms) {
  std::vector<TautPoly> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.emplace_back(m);
  return out;
}

std::string with_args(const std::string& name, std::initializer_list<int> args) {
  std::string out = name + "(";
  bool first = true;
  for (int a : args) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(a);
  }
  return out + ")";
}

// Handlers fill the report and return 0, or 1 when a self-check failed.

int cmd_apply_d(const Options& o, Report& rep) {
  const RingContext ctx = context(o, rep);
  rep.add("D(f)", apply_D(ctx, parse_flag("--expr", o.expr, ctx.bound)));
  return 0;
}

int cmd_pullback(const Options& o, Report& rep) {
  const RingContext ctx = context(o, rep);
  rep.add("pullback", pullback(ctx, o.k, parse_flag("--expr", o.expr, ctx.bound)));
  return 0;
}

int cmd_pushforward(const Options& o, Report& rep) {
  const RingContext ctx = context(o, rep);
  rep.add("pushforward", pushforward(ctx, o.k, parse_flag("--expr", o.expr, ctx.bound)));
  return 0;
}

int cmd_castelnuovo(const Options& o, Report& rep) {
  const int g = need_genus(o);
  rep.context.genus = g;
  rep.add(with_args("A", {o.r, o.d, g}), castelnuovo(o.r, o.d, g));
  return 0;
}

int cmd_gamma(const Options& o, Report& rep) {
  const Composition a{parse_int_list("--parts", o.parts)};
  std::string name = "gamma(" + std::to_string(o.d) + ",(";
  for (std::size_t i = 0; i < a.parts.size(); ++i) name += (i ? "," : "") + std::to_string(a.parts[i]);
  rep.add(name + "))", Rational(gamma_coeff(o.d, a)));
  return 0;
}

int cmd_rel_factorial(const Options& o, Report& rep) {
  rep.add("relation", rel_factorial(o.d, o.r, o.M));
  return 0;
}

int cmd_rel_gamma(const Options& o, Report& rep) {
  if (o.s < 0) throw UsageError("--s must be nonnegative");
  rep.add("relation", rel_gamma(o.d, o.r, o.s));
  return 0;
}

int cmd_zagier(const Options& o, Report& rep) {
  if (o.s < 0) throw UsageError("--s must be nonnegative");
  const ZagierReport z = zagier_compare(o.d, o.r, o.s);
  rep.add("verdict", to_string(z.verdict));
  if (z.constant) rep.add("constant", *z.constant);
  rep.add("M", Rational(z.M));
  rep.add("gamma_relation", z.gamma_relation);
  rep.add("factorial_relation", z.factorial_relation);
  return 0;
}

int cmd_reduce(const Options& o, Report& rep) {
  if (o.genus) context(o, rep);
  rep.add("reduced", reduce_mod_Iq(parse_flag("--expr", o.expr, rep.context.bound)));
  return 0;
}

int cmd_member(const Options& o, Report& rep) {
  const RingContext ctx = context(o, rep);
  const int cap = max_codim(o, ctx, rep);
  const auto ideal = ideal_from_flags(o, ctx.bound);
  if (!ideal) throw UsageError("member needs one of --iq, --gen, --ideal-file");
  save_ideal(o, *ideal);
  const MembershipResult res = membership(ctx, parse_flag("--expr", o.expr, ctx.bound), *ideal, cap);
  rep.add("status", to_string(res.status));
  if (res.certificate) rep.certificates.push_back({"membership", *res.certificate});
  rep.diagnostics = res.warnings;
  return 0;
}

int cmd_hilbert(const Options& o, Report& rep) {
  const RingContext ctx = context(o, rep);
  const int up_to = o.up_to.value_or(ctx.genus);
  if (up_to < 0) throw UsageError("--up-to must be nonnegative");
  const auto pres = presentation_from_flags(o, ctx);
  if (!pres) throw UsageError("hilbert needs --a or --vars");
  const HilbertFunction h = hilbert_function(*pres, up_to);
  long total = 0;
  for (const auto& [c, dim] : h.by_codim) {
    rep.add("codim " + std::to_string(c), Rational(dim));
    total += dim;
  }
  rep.add("total", Rational(total));
  if (o.bigraded) {
    for (const auto& [bd, dim] : h.by_bidegree) rep.add("bidegree " + to_string(bd), Rational(dim));
  }
  return 0;
}

int cmd_basis(const Options& o, Report& rep) {
  const RingContext ctx = context(o, rep);
  if (o.codim < 0) throw UsageError("--codim must be nonnegative");
  const auto pres = presentation_from_flags(o, ctx);
  std::vector<Monomial> basis;
  if (pres) {
    for (const auto& m : quotient_basis(*pres, o.codim)) {
      if (!o.weight || m.bidegree().weight == *o.weight) basis.push_back(m);
    }
  } else {
    basis = monomial_basis(ctx, o.codim, o.weight);
  }
  rep.add("basis", as_polys(basis));
  return 0;
}

int add_closure(const ClosureResult& res, Report& rep, const std::string& prefix = "") {
  int status = 0;
  auto emit = [&](const std::vector<ClosureStep>& steps) {
    for (const auto& step : steps) {
      rep.add(prefix + step.generator.name(), step.expression);
      rep.certificates.push_back({prefix + step.generator.name(), step.certificate});
      if (!step.verified()) {
        rep.diagnostics.push_back("certificate for " + step.generator.name() + " does not verify");
        status = 1;
      }
    }
  };
  emit(res.p_part);
  emit(res.q_part);
  return status;
}

int cmd_closure(const Options& o, Report& rep) {
  const RingContext ctx = context(o, rep);
  const TautPoly seed = parse_flag("--seed", o.seed, ctx.bound);
  return add_closure(closure_q(ctx, o.n, closure_p(ctx, o.n, seed)), rep);
}

int cmd_prop2(const Options& o, Report& rep) {
  const int g = need_genus(o);
  rep.context.genus = g;
  if (o.k < 1) throw UsageError("--k must be at least 1");
  rep.add("q" + std::to_string(o.k), prop2_q_formula(g, static_cast<int>(o.k)));
  return 0;
}

int cmd_odd_q(const Options& o, Report& rep) {
  const int g = need_genus(o);
  rep.context.genus = g;
  const int up_to = o.up_to.value_or(g);
  if (up_to < 1) throw UsageError("--up-to must be at least 1");
  const OddQSolution sol = odd_q_solver(g, up_to);
  for (const auto& [k, expr] : sol.odd) rep.add("q" + std::to_string(k), expr);
  for (const auto& check : sol.even) {
    rep.add("codim " + std::to_string(check.codim) + " cancels", check.cancels());
    if (!check.cancels()) {
      rep.diagnostics.push_back("codim " + std::to_string(check.codim) +
                                " residual: " + format_expr(check.residual));
    }
  }
  return sol.all_even_cancel() ? 0 : 1;
}

int cmd_hyperelliptic(const Options& o, Report& rep) {
  const int g = need_genus(o);
  rep.context.genus = g;
  if (!o.a) throw UsageError("--a is required for hyperelliptic");
  const HyperellipticSuite suite = hyperelliptic_suite(g, *o.a);
  std::vector<TautPoly> gens;
  for (const auto& ig : suite.presentation.ideal.generators()) gens.push_back(ig.element);
  rep.add("presentation", gens);
  for (const auto& [c, dim] : hilbert_function(suite.presentation, g).by_codim) {
    rep.add("dim codim " + std::to_string(c), Rational(dim));
  }
  bool holds = true;
  for (const auto& e : suite.nonvanishing) {
    if (!e.identity_holds) {
      holds = false;
      rep.diagnostics.push_back("D identity fails at m=" + std::to_string(e.m) + ", n=" + std::to_string(e.n));
    }
  }
  rep.add("D identities hold", holds);
  int status = holds ? 0 : 1;
  if (o.relations) {
    for (const auto& t : suite.translation) {
      if (t.solved) {
        rep.add("p" + std::to_string(t.codim), *t.solved);
      } else {
        rep.add("relation codim " + std::to_string(t.codim), t.relation);
      }
    }
    for (const auto& [gen, value] : suite.reduced) rep.add(gen.name() + " reduced", value);
    status = std::max(status, add_closure(suite.closure, rep, "closure "));
  }
  return status;
}

int cmd_generators(const Options& o, Report& rep) {
  const int g = need_genus(o);
  rep.context.genus = g;
  const MainGenerators mg = generators_main(g, o.d, o.r);
  rep.add(with_args("A", {o.r, o.d, g}), mg.castelnuovo);
  std::vector<TautPoly> gens;
  for (const auto& gen : mg.generators) gens.emplace_back(gen);
  rep.add("generators", gens);
  for (const auto& [M, rel] : mg.relations) rep.add("factorial M=" + std::to_string(M), rel);
  rep.add("axiom", mg.axiom.statement);
  rep.add("axiom source", mg.axiom.justification);
  rep.add("closure applies", mg.closure_applies);
  return 0;
}

using Handler = std::function<int(const Options&, Report&)>;

CLI::App* sub(CLI::App& app, std::map<CLI::App*, Handler>& handlers, const char* name, const char* help,
              Handler h) {
  CLI::App* s = app.add_subcommand(name, help);
  handlers[s] = std::move(h);
  return s;
}

void add_expr(CLI::App* s, Options& o) { s->add_option("--expr", o.expr, "polynomial in p1.., q1..")->required(); }

void add_ideal_flags(CLI::App* s, Options& o) {
  s->add_option("--gen", o.gens, "ideal generator name=expr (repeatable)")->allow_extra_args(false);
  s->add_flag("--iq", o.iq, "use the ideal (q1..qN)");
  s->add_option("--ideal-file", o.ideal_file, "JSON ideal as written by --save-ideal");
  s->add_option("--save-ideal", o.save_ideal, "write the ideal to this JSON file");
}

void add_presentation_flags(CLI::App* s, Options& o) {
  s->add_option("--a", o.a, "hyperelliptic presentation with q1^a = 0");
  s->add_option("--vars", o.vars, "comma-separated variables, e.g. p1,q1");
  s->add_option("--gen", o.gens, "ideal generator name=expr (repeatable)")->allow_extra_args(false);
  s->add_option("--ideal-file", o.ideal_file, "JSON ideal as written by --save-ideal");
  s->add_option("--save-ideal", o.save_ideal, "write the ideal to this JSON file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::map<CLI::App*, Handler> handlers;

  CLI::App app{"Exact arithmetic in the tautological ring of a Jacobian", "tautring"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("-g,--genus", o.genus, "genus g >= 2");
  app.add_option("--max-codim", o.max_codim, "truncation for membership (default g)");
  app.add_option("--bound", o.bound, "generator index bound N (default g)");
  app.add_option("--q0", o.q0, "value substituted for q0 (default g)");
  auto* json = app.add_flag("--json", o.json, "JSON report");
  auto* text = app.add_flag("--text", o.text, "text report (default)");
  json->excludes(text);
  app.add_option("--out", o.out, "write the report to a file");

  auto* s = sub(app, handlers, "apply-d", "apply the operator D", cmd_apply_d);
  add_expr(s, o);
  s = sub(app, handlers, "pullback", "multiplication-by-k pull-back", cmd_pullback);
  s->add_option("--k", o.k)->required();
  add_expr(s, o);
  s = sub(app, handlers, "pushforward", "multiplication-by-k push-forward", cmd_pushforward);
  s->add_option("--k", o.k)->required();
  add_expr(s, o);
  s = sub(app, handlers, "castelnuovo", "Castelnuovo number A(r,d,g)", cmd_castelnuovo);
  s->add_option("-r,--r", o.r)->required();
  s->add_option("-d,--d", o.d)->required();
  s = sub(app, handlers, "gamma", "gamma coefficient", cmd_gamma);
  s->add_option("--d", o.d)->required();
  s->add_option("--parts", o.parts, "composition, e.g. 0,1")->required();
  s = sub(app, handlers, "rel-factorial", "factorial relation", cmd_rel_factorial);
  s->add_option("--d", o.d)->required();
  s->add_option("--r", o.r)->required();
  s->add_option("--M", o.M)->required();
  s = sub(app, handlers, "rel-gamma", "gamma relation", cmd_rel_gamma);
  s->add_option("--d", o.d)->required();
  s->add_option("--r", o.r)->required();
  s->add_option("--s", o.s)->required();
  s = sub(app, handlers, "zagier", "compare gamma and factorial relations", cmd_zagier);
  s->add_option("--d", o.d)->required();
  s->add_option("--r", o.r)->required();
  s->add_option("--s", o.s)->required();
  s = sub(app, handlers, "reduce", "reduce modulo (q1, q2, ...)", cmd_reduce);
  add_expr(s, o);
  s = sub(app, handlers, "member", "ideal membership with certificate", cmd_member);
  add_expr(s, o);
  add_ideal_flags(s, o);
  s = sub(app, handlers, "hilbert", "Hilbert function of a quotient", cmd_hilbert);
  add_presentation_flags(s, o);
  s->add_option("--up-to", o.up_to, "largest codim (default g)");
  s->add_flag("--bigraded", o.bigraded, "also list dimensions per bidegree");
  s = sub(app, handlers, "basis", "monomial or quotient basis", cmd_basis);
  add_presentation_flags(s, o);
  s->add_option("--codim", o.codim)->required();
  s->add_option("--weight", o.weight);
  s = sub(app, handlers, "closure", "closure induction from p_n = seed", cmd_closure);
  s->add_option("--n", o.n, "seed index (default 2)");
  s->add_option("--seed", o.seed, "expression for p_n")->required();
  s = sub(app, handlers, "prop2", "closed form of q_k", cmd_prop2);
  s->add_option("--k", o.k)->required();
  s = sub(app, handlers, "odd-q", "solve odd q_k from the series identity", cmd_odd_q);
  s->add_option("--up-to", o.up_to, "largest codim (default g)");
  s = sub(app, handlers, "hyperelliptic", "hyperelliptic presentation and checks", cmd_hyperelliptic);
  s->add_option("--a", o.a, "smallest a with q1^a = 0")->required();
  s->add_flag("--relations", o.relations, "include translation relations and closure");
  s = sub(app, handlers, "generators", "generators and factorial relations for a g^r_d", cmd_generators);
  s->add_option("-d,--d", o.d)->required();
  s->add_option("-r,--r", o.r)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Report report;
  report.command = chosen->get_name();
  report.arguments = args;

  int status = 0;
  try {
    status = handlers.at(chosen)(o, report);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  std::ostringstream rendered;
  if (o.json) {
    rendered << report_to_json(report).dump(2) << '\n';
  } else {
    write_text(rendered, report);
  }
  if (o.out.empty()) {
    out << rendered.str();
  } else {
    std::ofstream f(o.out);
    if (!f) {
      err << "error: --out: cannot open " << o.out << '\n';
      return 2;
    }
    f << rendered.str();
  }
  return status;
}

}  // namespace tautring::cli
