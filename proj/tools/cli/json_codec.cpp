#include "json_codec.hpp"

#include <variant>

#include "tautring/expr.hpp"

namespace tautring::cli {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw SchemaError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw SchemaError("rational must be a \"n/d\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError("bad rational \"" + j.get<std::string>() + "\": " + e.what());
  }
}

std::optional<int> optional_int(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  if (!j.at(key).is_number_integer()) throw SchemaError(std::string("field \"") + key + "\" must be an integer");
  return j.at(key).get<int>();
}

Json optional_to_json(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json value_to_json(const Value& v) {
  Json out = Json::object();
  if (const auto* f = std::get_if<TautPoly>(&v)) {
    out["type"] = "poly";
    out["value"] = poly_to_json(*f);
  } else if (const auto* r = std::get_if<Rational>(&v)) {
    out["type"] = "rational";
    out["value"] = r->to_fraction_string();
  } else if (const auto* s = std::get_if<std::string>(&v)) {
    out["type"] = "string";
    out["value"] = *s;
  } else if (const auto* b = std::get_if<bool>(&v)) {
    out["type"] = "bool";
    out["value"] = *b;
  } else {
    out["type"] = "poly_list";
    Json list = Json::array();
    for (const auto& f : std::get<std::vector<TautPoly>>(v)) list.push_back(poly_to_json(f));
    out["value"] = list;
  }
  return out;
}

Value value_from_json(const Json& j) {
  const std::string type = string_field(j, "type");
  const Json& v = field(j, "value");
  if (type == "poly") return poly_from_json(v);
  if (type == "rational") return rational_from_json(v);
  if (type == "string") {
    if (!v.is_string()) throw SchemaError("string value expected");
    return v.get<std::string>();
  }
  if (type == "bool") {
    if (!v.is_boolean()) throw SchemaError("bool value expected");
    return v.get<bool>();
  }
  if (type == "poly_list") {
    if (!v.is_array()) throw SchemaError("poly_list value must be an array");
    std::vector<TautPoly> list;
    for (const auto& e : v) list.push_back(poly_from_json(e));
    return list;
  }
  throw SchemaError("unknown value type \"" + type + "\"");
}

}  // namespace

Json poly_to_json(const TautPoly& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json exps = Json::object();
    for (const auto& [g, e] : m.factors()) exps[g.name()] = e;
    terms.push_back(Json{{"coeff", c.to_fraction_string()}, {"exps", exps}});
  }
  return Json{{"terms", terms}};
}

TautPoly poly_from_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw SchemaError("\"terms\" must be an array");
  TautPoly f;
  for (const auto& t : terms) {
    const Rational c = rational_from_json(field(t, "coeff"));
    if (c.is_zero()) throw SchemaError("zero coefficient in term list");
    const Json& exps = field(t, "exps");
    if (!exps.is_object()) throw SchemaError("\"exps\" must be an object");
    Monomial m;
    for (const auto& [name, e] : exps.items()) {
      const auto g = parse_generator(name);
      if (!g) throw SchemaError("bad generator name \"" + name + "\"");
      if (!e.is_number_integer() || e.get<long>() < 1) throw SchemaError("exponent of " + name + " must be a positive integer");
      if (m.exponent(*g) != 0) throw SchemaError("generator " + name + " repeated");
      m = m.times(*g, e.get<int>());
    }
    if (f.coefficient(m) != Rational(0)) throw SchemaError("monomial " + format_monomial(m) + " repeated");
    f.add_term(m, c);
  }
  return f;
}

Json ideal_to_json(const IdealSpec& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(Json{{"name", g.name}, {"element", poly_to_json(g.element)}});
  return Json{{"generators", gens}};
}

IdealSpec ideal_from_json(const Json& j) {
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) throw SchemaError("\"generators\" must be an array");
  std::vector<IdealGenerator> out;
  for (const auto& g : gens) out.push_back({string_field(g, "name"), poly_from_json(field(g, "element"))});
  try {
    return IdealSpec(std::move(out));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

Json certificate_to_json(const LabeledCertificate& c) {
  Json combo = Json::array();
  for (const auto& [name, cofactor] : c.certificate.combination) {
    combo.push_back(Json{{"generator", name}, {"cofactor", poly_to_json(cofactor)}});
  }
  return Json{{"label", c.label}, {"target", poly_to_json(c.certificate.target)}, {"combination", combo}};
}

LabeledCertificate certificate_from_json(const Json& j) {
  LabeledCertificate out;
  out.label = string_field(j, "label");
  out.certificate.target = poly_from_json(field(j, "target"));
  const Json& combo = field(j, "combination");
  if (!combo.is_array()) throw SchemaError("\"combination\" must be an array");
  for (const auto& e : combo) {
    out.certificate.combination.emplace_back(string_field(e, "generator"), poly_from_json(field(e, "cofactor")));
  }
  return out;
}

Json report_to_json(const Report& report) {
  Json results = Json::array();
  for (const auto& item : report.results) {
    Json v = value_to_json(item.value);
    results.push_back(Json{{"name", item.name}, {"type", v["type"]}, {"value", v["value"]}});
  }
  Json certs = Json::array();
  for (const auto& c : report.certificates) certs.push_back(certificate_to_json(c));
  return Json{
      {"command", report.command},
      {"arguments", report.arguments},
      {"context",
       Json{{"genus", optional_to_json(report.context.genus)},
            {"bound", optional_to_json(report.context.bound)},
            {"max_codim", optional_to_json(report.context.max_codim)}}},
      {"results", results},
      {"certificates", certs},
      {"diagnostics", report.diagnostics},
  };
}

Report report_from_json(const Json& j) {
  Report r;
  r.command = string_field(j, "command");
  const Json& args = field(j, "arguments");
  if (!args.is_array()) throw SchemaError("\"arguments\" must be an array");
  for (const auto& a : args) {
    if (!a.is_string()) throw SchemaError("arguments must be strings");
    r.arguments.push_back(a.get<std::string>());
  }
  const Json& ctx = field(j, "context");
  r.context.genus = optional_int(ctx, "genus");
  r.context.bound = optional_int(ctx, "bound");
  r.context.max_codim = optional_int(ctx, "max_codim");
  const Json& results = field(j, "results");
  if (!results.is_array()) throw SchemaError("\"results\" must be an array");
  for (const auto& item : results) r.results.push_back({string_field(item, "name"), value_from_json(item)});
  const Json& certs = field(j, "certificates");
  if (!certs.is_array()) throw SchemaError("\"certificates\" must be an array");
  for (const auto& c : certs) r.certificates.push_back(certificate_from_json(c));
  const Json& diags = field(j, "diagnostics");
  if (!diags.is_array()) throw SchemaError("\"diagnostics\" must be an array");
  for (const auto& d : diags) {
    if (!d.is_string()) throw SchemaError("diagnostics must be strings");
    r.diagnostics.push_back(d.get<std::string>());
  }
  return r;
}

}  // namespace tautring::cli
