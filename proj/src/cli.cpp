#include "latval/cli.hpp"

#include "latval/errors.hpp"
#include "latval/experiments.hpp"
#include "latval/identities.hpp"
#include "latval/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

namespace latval {

namespace {

using io::Json;

struct UsageError : Error {
  using Error::Error;
};

struct RunConfig {
  std::string polytope_path;
  std::string builtin;
  std::string cone_path;
  std::string family = "L";
  int k = -1;
  std::string dilate = "1";
  std::int64_t samples = 200000;
  std::optional<std::uint64_t> seed;
  int threads = 0;
  std::string format = "json";
  std::string out;
  std::string route = "auto";
  bool relint = false;
  // angles
  std::string what = "alpha,upsilon,gamma,alpha_mod";
  // verify
  std::string suite = "all";
  int cones = 5;
  // reeve / gauss-image / hstar
  std::int64_t h = 3;
  int trials = 1000;
  std::string values;
};

AngleRoute parse_route(const std::string& s) {
  if (s == "auto") return AngleRoute::Auto;
  if (s == "exact") return AngleRoute::Exact;
  if (s == "mc") return AngleRoute::MonteCarlo;
  throw UsageError("--route must be auto, exact or mc");
}

std::uint64_t require_seed(const RunConfig& cfg) {
  if (cfg.seed) return *cfg.seed;
  if (const char* env = std::getenv("LATVAL_SEED")) {
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("LATVAL_SEED must be a non-negative integer");
  }
  throw UsageError("this computation samples random directions; pass --seed or set LATVAL_SEED");
}

McOptions mc_options(const RunConfig& cfg, bool sampling) {
  McOptions o;
  o.samples = cfg.samples;
  o.threads = cfg.threads;
  if (sampling) o.seed = require_seed(cfg);
  if (o.samples < 1) throw UsageError("--samples must be positive");
  return o;
}

Polytope load_polytope(const RunConfig& cfg) {
  if (!cfg.builtin.empty() && !cfg.polytope_path.empty()) throw UsageError("give --polytope or --builtin, not both");
  if (!cfg.builtin.empty()) return io::builtin_polytope(cfg.builtin);
  if (cfg.polytope_path.empty()) throw UsageError("missing --polytope FILE or --builtin cube:d|simplex:d|reeve:h");
  return io::polytope_from_json(io::read_json_file(cfg.polytope_path));
}

Cone load_cone(const RunConfig& cfg) {
  if (cfg.cone_path.empty()) throw UsageError("missing --cone FILE");
  return io::cone_from_json(io::read_json_file(cfg.cone_path));
}

std::vector<std::int64_t> dilates(const std::string& s) {
  auto num = [&](const std::string& t) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(t, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != t.size() || v < 0) throw UsageError("--dilate takes n or a..b with 0 <= a <= b");
    return static_cast<std::int64_t>(v);
  };
  const auto dots = s.find("..");
  if (dots == std::string::npos) return {num(s)};
  const auto a = num(s.substr(0, dots)), b = num(s.substr(dots + 2));
  if (a > b) throw UsageError("--dilate range is empty");
  std::vector<std::int64_t> out;
  for (auto n = a; n <= b; ++n) out.push_back(n);
  return out;
}

Family family_of(const RunConfig& cfg) {
  Family f;
  try {
    f = parse_family(cfg.family);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  if (family_has_k(f) && cfg.k < 0) throw UsageError("family " + cfg.family + " needs --k");
  return f;
}

bool family_samples(Family f, AngleRoute route) { return f != Family::L && route != AngleRoute::Exact; }

struct Output {
  Json json;
  std::string csv;
  bool ok = true;
};

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string s;
  for (const auto& c : cells) s += (s.empty() ? "" : ",") + c;
  return s + "\n";
}

std::string num(double x) { return io::format_double(x); }

Output cmd_count(const RunConfig& cfg) {
  const Polytope P = load_polytope(cfg);
  Output o;
  o.json = Json::array();
  o.csv = "dilate,count,face_dim,relint_count\n";
  for (auto n : dilates(cfg.dilate)) {
    LatticePointSet pts = enumerate_points(P, n);
    Json by = Json::object();
    std::vector<std::int64_t> per_dim(P.dim() + 1, 0);
    if (n == 0) {
      per_dim.assign(1, 1);
    } else {
      for (std::size_t f = 0; f < P.faces().size(); ++f) per_dim[P.face(static_cast<int>(f)).dim] += pts.by_face[f];
    }
    for (std::size_t j = 0; j < per_dim.size(); ++j) {
      by[std::to_string(j)] = per_dim[j];
      o.csv += csv_row({std::to_string(n), std::to_string(pts.size()), std::to_string(j), std::to_string(per_dim[j])});
    }
    Json e;
    e["dilate"] = n;
    e["count"] = pts.size();
    e["by_face_dim"] = by;
    o.json.push_back(std::move(e));
  }
  if (o.json.size() == 1) o.json = o.json[0];
  return o;
}

Output cmd_valuation(const RunConfig& cfg) {
  const Polytope P = load_polytope(cfg);
  const Family f = family_of(cfg);
  ValuationOptions vo;
  vo.route = parse_route(cfg.route);
  vo.mc = mc_options(cfg, family_samples(f, vo.route));
  Output o;
  o.json = Json::array();
  o.csv = "family,k,dilate,relint,exact,rational,value,stderr\n";
  for (auto n : dilates(cfg.dilate)) {
    ValuationValue v;
    if (cfg.relint) {
      v = relint_valuation(f, n == 1 ? P : P.dilate(n), cfg.k, vo);
      v.dilate = n;
    } else {
      v = evaluate(f, P, cfg.k, n, vo);
    }
    Json j = io::to_json(v);
    j["relint"] = cfg.relint;
    o.json.push_back(std::move(j));
    o.csv += csv_row({to_string(f), v.k >= 0 ? std::to_string(v.k) : "", std::to_string(n), cfg.relint ? "true" : "false",
                      v.exact ? "true" : "false", v.rational ? to_string(*v.rational) : "", num(v.value), num(v.se)});
  }
  if (o.json.size() == 1) o.json = o.json[0];
  return o;
}

Output cmd_ehrhart(const RunConfig& cfg) {
  const Polytope P = load_polytope(cfg);
  const Family f = family_of(cfg);
  ValuationOptions vo;
  vo.route = parse_route(cfg.route);
  vo.mc = mc_options(cfg, family_samples(f, vo.route));
  FittedPolynomial p = valuation_polynomial(f, P, cfg.k, vo);
  HStar h = to_hstar(p);
  Output o;
  o.json["family"] = to_string(f);
  if (family_has_k(f)) o.json["k"] = cfg.k;
  Json pj = io::to_json(p);
  for (auto& [key, val] : pj.items()) o.json[key] = val;
  o.json["hstar"] = io::to_json(h);
  if (!p.exact) o.json["seed"] = vo.mc.seed;
  o.csv = "power,coeff,stderr,hstar,hstar_stderr\n";
  for (int i = 0; i <= p.degree; ++i) {
    o.csv += csv_row({std::to_string(i), p.exact ? to_string(p.exact_coeffs[i]) : num(p.coeffs[i]), num(p.se[i]),
                      h.exact ? to_string(h.exact_values[i]) : num(h.values[i]), num(h.se[i])});
  }
  return o;
}

Output cmd_hstar(const RunConfig& cfg) {
  Output o;
  std::vector<Rat> h;
  if (!cfg.values.empty()) {
    std::vector<Rat> vals;
    std::stringstream ss(cfg.values);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(parse_rat(item));
    if (vals.empty()) throw UsageError("--values needs L(0), L(1), ..., L(r)");
    h = hstar_from_values(vals);
  } else {
    const Polytope P = load_polytope(cfg);
    h = to_hstar(valuation_polynomial(Family::L, P, -1, {})).exact_values;
  }
  o.json["hstar"] = Json::array();
  o.csv = "index,hstar\n";
  for (std::size_t i = 0; i < h.size(); ++i) {
    o.json["hstar"].push_back(io::to_json(h[i]));
    o.csv += csv_row({std::to_string(i), to_string(h[i])});
  }
  o.json["coeffs"] = io::to_json(from_hstar(h))["coeffs"];
  return o;
}

Output cmd_angles(const RunConfig& cfg) {
  const Cone C = load_cone(cfg);
  const AngleRoute route = parse_route(cfg.route);
  const McOptions mc = mc_options(cfg, route != AngleRoute::Exact);
  std::vector<std::string> what;
  {
    std::stringstream ss(cfg.what);
    std::string item;
    while (std::getline(ss, item, ',')) what.push_back(item);
  }
  const int d = C.ambient_dim();
  Output o;
  o.csv = "quantity,k,value,stderr,exact,samples\n";
  auto emit = [&](const std::string& name, int k, const AngleEstimate& a) {
    o.csv += csv_row({name, k >= 0 ? std::to_string(k) : "", num(a.value), num(a.se), a.exact ? "true" : "false",
                      std::to_string(a.samples)});
    return io::to_json(a);
  };
  for (const auto& w : what) {
    if (w == "alpha") {
      o.json["alpha"] = emit(w, -1, solid_angle(C, child_options(mc, 1), route));
    } else if (w == "upsilon") {
      IntrinsicVolumeVector v = conic_intrinsic_volumes(C, child_options(mc, 2), route);
      o.json[w] = Json::array();
      for (int k = 0; k <= d; ++k) o.json[w].push_back(emit(w, k, v.v[k]));
    } else if (w == "gamma" || w == "alpha_mod") {
      o.json[w] = Json::array();
      for (int k = 0; k <= d; ++k) {
        if (cfg.k >= 0 && k != cfg.k) continue;
        const McOptions c = child_options(mc, w == "gamma" ? 3 : 4, k);
        AngleEstimate a = w == "gamma" ? grassmann_angle(C, k, c, route) : modified_grassmann_angle(C, k, c, route);
        Json j = emit(w, k, a);
        j["k"] = k;
        o.json[w].push_back(std::move(j));
      }
    } else {
      throw UsageError("--what accepts alpha, upsilon, gamma, alpha_mod");
    }
  }
  o.json["seed"] = mc.seed;
  return o;
}

Output report_output(const ExperimentReport& r) {
  Output o;
  o.json = io::to_json(r);
  o.csv = io::report_csv(r);
  o.ok = r.passed();
  return o;
}

Output cmd_reeve(const RunConfig& cfg) {
  ExperimentOptions eo;
  eo.mc = mc_options(cfg, true);
  return report_output(run_reeve(cfg.h, eo));
}

Output cmd_gauss(const RunConfig& cfg) {
  const Cone C = load_cone(cfg);
  if (cfg.k < 1) throw UsageError("gauss-image needs --k >= 1");
  ExperimentOptions eo;
  eo.mc = mc_options(cfg, true);
  eo.nsigma = 4;
  return report_output(run_gauss_image(C, cfg.k, cfg.trials, eo));
}

Output cmd_verify(const RunConfig& cfg) {
  const std::string& s = cfg.suite;
  if (s != "all" && s != "identities" && s != "valuations" && s != "experiments")
    throw UsageError("--suite must be identities, valuations, experiments or all");
  const McOptions mc = mc_options(cfg, true);
  std::vector<IdentityCheck> checks;
  std::vector<ExperimentReport> reports;

  if (s == "all" || s == "identities") {
    std::mt19937_64 rng(mc.seed);
    for (int i = 0; i < cfg.cones; ++i) {
      const int d = 2 + i % 3;
      Cone C = random_cone(d, rng);
      for (auto c : verify_cone_identities(C, child_options(mc, 100, i))) {
        c.note = "cone " + std::to_string(i) + " in R^" + std::to_string(d) + (c.note.empty() ? "" : "; " + c.note);
        checks.push_back(std::move(c));
      }
    }
    const Polytope polys[] = {standard_simplex(2), unit_cube(3), reeve_tetrahedron(2)};
    for (int i = 0; i < 3; ++i) {
      const Polytope& P = polys[i];
      const McOptions c = child_options(mc, 200, i);
      checks.push_back(verify_brianchon_gram(P, c));
      for (int k = 0; k <= P.ambient_dim(); ++k) {
        if (k >= 1 && k < P.ambient_dim()) checks.push_back(verify_grunbaum_polytope(P, k, child_options(c, 1, k)));
        checks.push_back(verify_modified_brianchon_gram(P, k, child_options(c, 2, k)));
      }
    }
  }
  if (s == "all" || s == "valuations") {
    const Polytope sq = unit_cube(2).dilate(2);
    const Polytope cube = unit_cube(3).dilate(2);
    struct Case {
      Family f;
      int k;
    };
    const Case cases[] = {{Family::L, -1}, {Family::A, -1}, {Family::Ak, 1}, {Family::Gk, 0}, {Family::Gk, 1}};
    int idx = 0;
    for (const auto& [f, k] : cases) {
      for (const Polytope* P : {&sq, &cube}) {
        ValuationOptions vo;
        vo.mc = child_options(mc, 300, idx++);
        IntVec a(P->ambient_dim(), 0);
        a[0] = 1;
        a[P->ambient_dim() - 1] += 1;
        AxiomCheck ax = check_valuation_axiom(f, k, *P, a, 2, vo);
        IdentityCheck c;
        c.name = "valuation_axiom_" + to_string(f);
        c.k = k;
        c.lhs = ax.residual;
        c.residual = ax.residual;
        c.se = ax.se;
        c.note = "split of 2[0,1]^" + std::to_string(P->ambient_dim());
        checks.push_back(std::move(c));
      }
    }
  }
  if (s == "all" || s == "experiments") {
    ExperimentOptions eo;
    eo.mc = child_options(mc, 400);
    reports.push_back(run_negativity_witness(2, 0, eo));
    reports.push_back(run_negativity_witness(3, 1, eo));
    eo.nsigma = 4;
    reports.push_back(run_gauss_image(Cone::from_generators(std::vector<IntVec>{{1, 0}, {0, 1}}, 2), 1, cfg.trials, eo));
  }

  Output o;
  o.json["seed"] = mc.seed;
  o.json["samples"] = mc.samples;
  o.json["checks"] = Json::array();
  for (const auto& c : checks) {
    o.json["checks"].push_back(io::to_json(c));
    o.ok = o.ok && c.passed();
  }
  o.csv = io::identities_csv(checks);
  o.json["reports"] = Json::array();
  for (const auto& r : reports) {
    o.json["reports"].push_back(io::to_json(r));
    o.csv += "\n" + io::report_csv(r);
    o.ok = o.ok && r.passed();
  }
  o.json["pass"] = o.ok;
  return o;
}

void common_options(CLI::App* sub, RunConfig& cfg, bool polytope, bool cone, bool sampling) {
  if (polytope) {
    sub->add_option("--polytope", cfg.polytope_path, "polytope JSON {\"dim\": d, \"vertices\": [[...], ...]}");
    sub->add_option("--builtin", cfg.builtin, "cube:d, simplex:d or reeve:h");
  }
  if (cone) sub->add_option("--cone", cfg.cone_path, "cone JSON {\"generators\": [[...], ...], \"ambient_dim\": d}");
  if (sampling) {
    sub->add_option("--samples", cfg.samples, "Monte Carlo samples per angle")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "master seed (falls back to LATVAL_SEED)");
    sub->add_option("--threads", cfg.threads, "worker threads, 0 = all cores")->capture_default_str();
  }
  sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("--out", cfg.out, "write output here instead of stdout");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"latval: lattice-point valuations, angles of cones and their Ehrhart-type polynomials"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* count = app.add_subcommand("count", "lattice points of nP, split by face dimension");
  common_options(count, cfg, true, false, false);
  count->add_option("--dilate", cfg.dilate, "n or a..b")->capture_default_str();

  auto* val = app.add_subcommand("valuation", "evaluate L, A, Ak, Gk or Vk on nP");
  common_options(val, cfg, true, false, true);
  val->add_option("--family", cfg.family, "L, A, Ak, Gk or Vk")->capture_default_str();
  val->add_option("--k", cfg.k, "index for Ak, Gk, Vk");
  val->add_option("--dilate", cfg.dilate, "n or a..b")->capture_default_str();
  val->add_option("--route", cfg.route, "auto, exact or mc")->capture_default_str();
  val->add_flag("--relint", cfg.relint, "evaluate on the relative interior of nP");

  auto* ehr = app.add_subcommand("ehrhart", "polynomial t -> phi(tP) in monomial and h* form");
  common_options(ehr, cfg, true, false, true);
  ehr->add_option("--family", cfg.family, "L, A, Ak, Gk or Vk")->capture_default_str();
  ehr->add_option("--k", cfg.k, "index for Ak, Gk, Vk");
  ehr->add_option("--route", cfg.route, "auto, exact or mc")->capture_default_str();

  auto* hs = app.add_subcommand("hstar", "h* vector of L_P, or of given values L(0..r)");
  common_options(hs, cfg, true, false, false);
  hs->add_option("--values", cfg.values, "comma separated L(0),...,L(r)");

  auto* ang = app.add_subcommand("angles", "solid angle, conic intrinsic volumes and Grassmann angles of a cone");
  common_options(ang, cfg, false, true, true);
  ang->add_option("--what", cfg.what, "comma list of alpha, upsilon, gamma, alpha_mod")->capture_default_str();
  ang->add_option("--k", cfg.k, "restrict gamma/alpha_mod to one k");
  ang->add_option("--route", cfg.route, "auto, exact or mc")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "check the cone, polytope and valuation identities");
  common_options(ver, cfg, false, false, true);
  ver->add_option("--suite", cfg.suite, "identities, valuations, experiments or all")->capture_default_str();
  ver->add_option("--cones", cfg.cones, "random cones for the identity suite")->capture_default_str();
  ver->add_option("--trials", cfg.trials, "Gaussian-image trials")->capture_default_str();

  auto* reeve = app.add_subcommand("reeve", "Reeve tetrahedron report");
  reeve->set_help_flag("--help", "print this help and exit");
  common_options(reeve, cfg, false, false, true);
  reeve->add_option("--h", cfg.h, "height of the apex (1,1,h)")->capture_default_str();

  auto* gauss = app.add_subcommand("gauss-image", "mean solid angle of Gaussian images AC against alpha_{k-1}(C)");
  common_options(gauss, cfg, false, true, true);
  gauss->add_option("--k", cfg.k, "rows of the Gaussian matrix")->required();
  gauss->add_option("--trials", cfg.trials, "number of matrices")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "latval: " << e.what() << "\n";
    if (e.get_exit_code() == 0) return 0;
    err << "run 'latval --help' for usage\n";
    return 2;
  }

  Output o;
  try {
    if (count->parsed()) o = cmd_count(cfg);
    else if (val->parsed()) o = cmd_valuation(cfg);
    else if (ehr->parsed()) o = cmd_ehrhart(cfg);
    else if (hs->parsed()) o = cmd_hstar(cfg);
    else if (ang->parsed()) o = cmd_angles(cfg);
    else if (ver->parsed()) o = cmd_verify(cfg);
    else if (reeve->parsed()) o = cmd_reeve(cfg);
    else o = cmd_gauss(cfg);
  } catch (const NoWitnessFound& e) {
    err << "latval: " << e.what() << "\n";
    return 1;
  } catch (const InconsistentValues& e) {
    err << "latval: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "latval: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "latval: bad input JSON: " << e.what() << "\n";
    return 2;
  }

  const std::string text = cfg.format == "csv" ? o.csv : o.json.dump(2) + "\n";
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      err << "latval: cannot write " << cfg.out << "\n";
      return 2;
    }
    f << text;
  }
  return o.ok ? 0 : 1;
}

}  // namespace latval
