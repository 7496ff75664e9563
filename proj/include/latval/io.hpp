#pragma once

#include "latval/cone.hpp"
#include "latval/ehrfit.hpp"
#include "latval/experiments.hpp"
#include "latval/identities.hpp"
#include "latval/lattice.hpp"
#include "latval/polytope.hpp"
#include "latval/valuations.hpp"

#include <json.hpp>

#include <string>

namespace latval::io {

using Json = nlohmann::ordered_json;

/// Parse text as JSON; malformed input raises InvalidArgument naming the
/// byte offset.
Json parse_json(const std::string& text, const std::string& origin);
Json read_json_file(const std::string& path);

/// {"vertices": [[...], ...]} with an optional "dim" (ambient dimension).
Polytope polytope_from_json(const Json& j);
/// {"generators": [[...], ...], "ambient_dim": d}. Coordinates may be
/// integers or "p/q" strings. An empty generator list gives {0}.
Cone cone_from_json(const Json& j);

/// cube:d, simplex:d or reeve:h.
Polytope builtin_polytope(const std::string& spec);

Json to_json(const Rat& q);  // "p/q"
Json to_json(const Polytope& P);
Json to_json(const AngleEstimate& a);
Json to_json(const FittedPolynomial& p);
Json to_json(const HStar& h);
Json to_json(const ValuationValue& v);
Json to_json(const IdentityCheck& c);
Json to_json(const ExperimentReport& r);

/// Flat CSV renderings with the same numbers as the JSON forms.
std::string report_csv(const ExperimentReport& r);
std::string identities_csv(const std::vector<IdentityCheck>& checks);

/// Shortest round-trip decimal for a double.
std::string format_double(double x);

}  // namespace latval::io
