#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "tautring/ideals.hpp"
#include "tautring/taut_poly.hpp"

namespace tautring::cli {

using Value = std::variant<TautPoly, Rational, std::string, bool, std::vector<TautPoly>>;

struct ReportItem {
  std::string name;
  Value value;

  friend bool operator==(const ReportItem&, const ReportItem&) = default;
};

struct LabeledCertificate {
  std::string label;
  Certificate certificate;

  friend bool operator==(const LabeledCertificate&, const LabeledCertificate&) = default;
};

struct ReportContext {
  std::optional<int> genus;
  std::optional<int> bound;
  std::optional<int> max_codim;

  friend bool operator==(const ReportContext&, const ReportContext&) = default;
};

struct Report {
  std::string command;
  std::vector<std::string> arguments;
  ReportContext context;
  std::vector<ReportItem> results;
  std::vector<LabeledCertificate> certificates;
  std::vector<std::string> diagnostics;

  void add(std::string name, Value value) { results.push_back({std::move(name), std::move(value)}); }

  friend bool operator==(const Report&, const Report&) = default;
};

std::string format_value(const Value& v);

/// "target = g1*(A1) + g2*(A2)"
std::string format_certificate(const Certificate& c);

/// A lone result prints bare; anything richer prints one "name = value" per line.
void write_text(std::ostream& os, const Report& report);

}  // namespace tautring::cli
