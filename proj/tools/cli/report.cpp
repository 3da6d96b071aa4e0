#include "report.hpp"

#include "tautring/expr.hpp"

namespace tautring::cli {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

std::string format_value(const Value& v) {
  return std::visit(
      overloaded{
          [](const TautPoly& f) { return format_expr(f); },
          [](const Rational& r) { return r.to_string(); },
          [](const std::string& s) { return s; },
          [](bool b) { return std::string(b ? "true" : "false"); },
          [](const std::vector<TautPoly>& list) {
            std::string out = "[";
            for (std::size_t i = 0; i < list.size(); ++i) {
              if (i > 0) out += ", ";
              out += format_expr(list[i]);
            }
            return out + "]";
          },
      },
      v);
}

std::string format_certificate(const Certificate& c) {
  std::string out = format_expr(c.target) + " =";
  if (c.combination.empty()) return out + " 0";
  bool first = true;
  for (const auto& [name, cofactor] : c.combination) {
    out += first ? " " : " + ";
    first = false;
    out += name + "*(" + format_expr(cofactor) + ")";
  }
  return out;
}

void write_text(std::ostream& os, const Report& report) {
  if (report.results.size() == 1 && report.certificates.empty() && report.diagnostics.empty()) {
    const Value& v = report.results.front().value;
    if (const auto* list = std::get_if<std::vector<TautPoly>>(&v)) {
      for (const auto& f : *list) os << format_expr(f) << '\n';
    } else {
      os << format_value(v) << '\n';
    }
    return;
  }
  for (const auto& item : report.results) os << item.name << " = " << format_value(item.value) << '\n';
  for (const auto& [label, cert] : report.certificates) {
    os << "certificate " << label << ": " << format_certificate(cert) << '\n';
  }
  for (const auto& d : report.diagnostics) os << "note: " << d << '\n';
}

}  // namespace tautring::cli
