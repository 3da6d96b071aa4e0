#pragma once

#include <stdexcept>

#include "json.hpp"
#include "report.hpp"

namespace tautring::cli {

using Json = nlohmann::ordered_json;

/// Malformed or non-canonical JSON input.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"terms":[{"coeff":"n/d","exps":{"p1":2,"q3":1}}]}
Json poly_to_json(const TautPoly& f);
TautPoly poly_from_json(const Json& j);

// {"generators":[{"name":"g1","element":<poly>}]}
Json ideal_to_json(const IdealSpec& ideal);
IdealSpec ideal_from_json(const Json& j);

Json certificate_to_json(const LabeledCertificate& c);
LabeledCertificate certificate_from_json(const Json& j);

Json report_to_json(const Report& report);
Report report_from_json(const Json& j);

}  // namespace tautring::cli
