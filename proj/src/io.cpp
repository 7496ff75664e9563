#include "latval/io.hpp"

#include "latval/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace latval::io {

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(origin + ": malformed JSON at byte " + std::to_string(e.byte));
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

namespace {

Rat coordinate(const Json& x) {
  if (x.is_number_integer()) return Rat(static_cast<long>(x.get<std::int64_t>()));
  if (x.is_string()) return parse_rat(x.get<std::string>());
  throw InvalidArgument("coordinates must be integers or \"p/q\" strings");
}

std::vector<RatVec> point_list(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_array())
    throw InvalidArgument(std::string("expected an object with an array \"") + key + "\"");
  std::vector<RatVec> out;
  for (const auto& p : j[key]) {
    if (!p.is_array()) throw InvalidArgument(std::string("entries of \"") + key + "\" must be arrays");
    RatVec v;
    for (const auto& x : p) v.push_back(coordinate(x));
    out.push_back(std::move(v));
  }
  return out;
}

int check_dims(const std::vector<RatVec>& pts, int declared) {
  int d = declared;
  for (const auto& p : pts) {
    if (d < 0) d = static_cast<int>(p.size());
    if (static_cast<int>(p.size()) != d)
      throw InvalidArgument("point of length " + std::to_string(p.size()) + " in dimension " + std::to_string(d));
  }
  return d;
}

std::int64_t parse_index(const std::string& s, const std::string& spec) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InvalidArgument("bad builtin '" + spec + "'");
  return v;
}

}  // namespace

Polytope polytope_from_json(const Json& j) {
  auto pts = point_list(j, "vertices");
  if (pts.empty()) throw EmptyInput();
  const int declared = j.contains("dim") ? j["dim"].get<int>() : -1;
  check_dims(pts, declared);
  std::vector<IntVec> ints;
  for (const auto& p : pts) ints.push_back(to_int(p));
  return Polytope::convex_hull(ints);
}

Cone cone_from_json(const Json& j) {
  auto gens = point_list(j, "generators");
  int d = j.contains("ambient_dim") ? j["ambient_dim"].get<int>() : -1;
  d = check_dims(gens, d);
  if (d < 1) throw InvalidArgument("cone needs \"ambient_dim\" when it has no generators");
  if (d > kMaxAmbientDim) throw AmbientDimTooLarge(d);
  std::erase_if(gens, [](const RatVec& v) { return is_zero(v); });
  if (gens.empty()) return Cone::zero(d);
  return Cone::from_generators(gens, d);
}

Polytope builtin_polytope(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw InvalidArgument("builtin must look like cube:d, simplex:d or reeve:h");
  const std::string kind = spec.substr(0, colon);
  const std::int64_t n = parse_index(spec.substr(colon + 1), spec);
  if (kind == "reeve") return reeve_tetrahedron(n);
  if (n < 1) throw InvalidArgument("dimension must be positive in '" + spec + "'");
  if (n > kMaxAmbientDim) throw AmbientDimTooLarge(static_cast<int>(n));
  if (kind == "cube") return unit_cube(static_cast<int>(n));
  if (kind == "simplex") return standard_simplex(static_cast<int>(n));
  throw InvalidArgument("unknown builtin '" + kind + "'");
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, ptr);
}

Json to_json(const Rat& q) { return to_string(q); }

Json to_json(const Polytope& P) {
  Json j;
  j["dim"] = P.ambient_dim();
  j["vertices"] = P.vertices();
  return j;
}

Json to_json(const AngleEstimate& a) {
  Json j;
  j["value"] = a.value;
  j["stderr"] = a.se;
  j["exact"] = a.exact;
  j["samples"] = a.samples;
  return j;
}

Json to_json(const FittedPolynomial& p) {
  Json j;
  j["degree"] = p.degree;
  j["basis"] = "monomial";
  j["exact"] = p.exact;
  if (p.exact) {
    j["coeffs"] = Json::array();
    for (const auto& c : p.exact_coeffs) j["coeffs"].push_back(to_json(c));
  } else {
    j["coeffs"] = p.coeffs;
    j["stderr"] = p.se;
  }
  return j;
}

Json to_json(const HStar& h) {
  Json j;
  if (h.exact) {
    j = Json::array();
    for (const auto& c : h.exact_values) j.push_back(to_json(c));
    return j;
  }
  j["values"] = h.values;
  j["stderr"] = h.se;
  return j;
}

Json to_json(const ValuationValue& v) {
  Json j;
  j["family"] = to_string(v.family);
  if (v.k >= 0) j["k"] = v.k;
  j["dilate"] = v.dilate;
  j["exact"] = v.exact;
  if (v.rational) j["rational"] = to_json(*v.rational);
  j["value"] = v.value;
  j["stderr"] = v.se;
  return j;
}

Json to_json(const IdentityCheck& c) {
  Json j;
  j["name"] = c.name;
  if (c.k >= 0) j["k"] = c.k;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["residual"] = c.residual;
  j["stderr"] = c.se;
  j["skipped"] = c.skipped;
  j["expected_failure"] = c.expected_failure;
  j["pass"] = c.passed();
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const ExperimentReport& r) {
  Json j;
  j["name"] = r.name;
  j["inputs"] = r.inputs;
  j["claims"] = Json::array();
  for (const auto& c : r.claims) {
    Json cj;
    cj["description"] = c.description;
    cj["reference"] = c.reference;
    cj["expected"] = c.expected;
    cj["observed"] = c.observed;
    cj["tolerance"] = c.tolerance;
    cj["pass"] = c.pass;
    j["claims"].push_back(std::move(cj));
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  j["pass"] = r.passed();
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report_csv(const ExperimentReport& r) {
  std::string out = "description,reference,expected,observed,tolerance,pass\n";
  for (const auto& c : r.claims)
    out += csv_field(c.description) + "," + csv_field(c.reference) + "," + format_double(c.expected) + "," +
           format_double(c.observed) + "," + format_double(c.tolerance) + "," + (c.pass ? "true" : "false") + "\n";
  return out;
}

std::string identities_csv(const std::vector<IdentityCheck>& checks) {
  std::string out = "name,k,lhs,rhs,residual,stderr,skipped,expected_failure,pass\n";
  for (const auto& c : checks)
    out += csv_field(c.name) + "," + (c.k >= 0 ? std::to_string(c.k) : "") + "," + format_double(c.lhs) + "," +
           format_double(c.rhs) + "," + format_double(c.residual) + "," + format_double(c.se) + "," +
           (c.skipped ? "true" : "false") + "," + (c.expected_failure ? "true" : "false") + "," +
           (c.passed() ? "true" : "false") + "\n";
  return out;
}

}  // namespace latval::io
