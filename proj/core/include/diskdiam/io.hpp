#pragma once

// Function-spec documents and JSON/CSV emission. Complex numbers travel as
// [re, im] arrays.
//
//   {"kind": "polynomial",     "params": {"coefficients": [[re, im], ...]}}
//   {"kind": "moebius",        "params": {"xi": z, "eta": z, "scale": z, "shift": z}}
//   {"kind": "extremal-lft",   "params": {"a": z, "b": z, "c": z}}
//   {"kind": "schur-extremal", "params": {"a": z, "b": z}}
//   {"kind": "composition",    "params": {"outer": <spec>, "moebius": {"xi": z, "eta": z}}}
//
// Closed-form kinds accept a `coefficients` override that replaces the
// series while keeping the closed form. `truncation` is a minimum order.

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "diskdiam/bounds.hpp"
#include "diskdiam/classifier.hpp"
#include "diskdiam/diameter.hpp"
#include "diskdiam/errors.hpp"
#include "diskdiam/explore.hpp"
#include "diskdiam/fnkit.hpp"
#include "diskdiam/hyperbolic.hpp"
#include "diskdiam/report.hpp"

namespace diskdiam {

using Json = nlohmann::ordered_json;

/// Malformed document; the message carries a line/column or a JSON path.
class SpecError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

Json parse_json_text(std::string_view text);
AnalyticFunction function_from_spec(const Json& spec);
AnalyticFunction parse_function_spec(std::string_view text);

Json to_json(Complex z);
Complex complex_from_json(const Json& j, const std::string& where = "value");

Json to_json(const BoundReport& r);
Json to_json(const DiameterEstimate& e);
Json to_json(const DiskDiameter& d);
Json to_json(const RatioCurve& c);
Json to_json(const PoukkaReport& p);
Json to_json(const Classification& c);
Json to_json(const SweepResult& s);
/// Summary {Lambda, tau, R_h, ...}; grid points go to CSV.
Json to_json(const DensityProfile& p);

std::string ratio_curve_csv(const RatioCurve& c);
std::string density_csv(const DensityProfile& p);
std::string sweep_csv(const SweepResult& s);

/// Shortest text that round-trips the double.
std::string format_double(double v);

}  // namespace diskdiam
