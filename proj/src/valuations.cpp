#include "latval/valuations.hpp"

#include "latval/errors.hpp"
#include "latval/identities.hpp"

#include <cmath>

namespace latval {

std::string to_string(Family f) {
  switch (f) {
    case Family::L: return "L";
    case Family::A: return "A";
    case Family::Ak: return "Ak";
    case Family::Gk: return "Gk";
    case Family::Vk: return "Vk";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "L") return Family::L;
  if (s == "A") return Family::A;
  if (s == "Ak") return Family::Ak;
  if (s == "Gk") return Family::Gk;
  if (s == "Vk") return Family::Vk;
  throw InvalidArgument("unknown valuation family '" + s + "' (expected L, A, Ak, Gk or Vk)");
}

bool family_has_k(Family f) { return f == Family::Ak || f == Family::Gk || f == Family::Vk; }

namespace {

enum Tag : std::uint64_t { kA = 21, kG = 22, kAkUps = 23, kAkAlpha = 24, kV = 25, kRelint = 26, kSplit = 27 };

// φ(nP) = Σ_terms scale · Π est[factors] · |relint(nF) ∩ Z^d|.
struct Term {
  int face;
  double scale;
  std::vector<int> factors;
};

struct Expansion {
  std::vector<AngleEstimate> est;
  std::vector<Term> terms;

  bool exact() const {
    for (const auto& e : est)
      if (!e.exact) return false;
    return true;
  }

  // Coefficient vectors per face (a count or a polynomial) → combined
  // coefficients and their covariance by first-order propagation.
  void combine(const std::vector<std::vector<double>>& per_face, std::vector<double>& out,
               std::vector<std::vector<double>>& cov) const {
    std::size_t len = 0;
    for (const auto& t : terms) len = std::max(len, per_face[t.face].size());
    out.assign(len, 0.0);
    std::vector<std::vector<double>> grad(est.size(), std::vector<double>(len, 0.0));
    for (const auto& t : terms) {
      double prod = t.scale;
      for (int a : t.factors) prod *= est[a].value;
      const auto& c = per_face[t.face];
      for (std::size_t i = 0; i < c.size(); ++i) out[i] += prod * c[i];
      for (std::size_t fi = 0; fi < t.factors.size(); ++fi) {
        double others = t.scale;
        for (std::size_t fj = 0; fj < t.factors.size(); ++fj)
          if (fj != fi) others *= est[t.factors[fj]].value;
        for (std::size_t i = 0; i < c.size(); ++i) grad[t.factors[fi]][i] += others * c[i];
      }
    }
    cov.assign(len, std::vector<double>(len, 0.0));
    for (std::size_t a = 0; a < est.size(); ++a) {
      const double v = est[a].se * est[a].se;
      if (v == 0.0) continue;
      for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = 0; j < len; ++j) cov[i][j] += v * grad[a][i] * grad[a][j];
    }
  }
};

void check_k(const Polytope& P, int k) {
  if (k < 0 || k > P.ambient_dim()) throw InvalidArgument("index k must satisfy 0 <= k <= d");
}

Expansion expand(Family f, const Polytope& P, int k, const ValuationOptions& opt) {
  Expansion ex;
  const int nf = static_cast<int>(P.faces().size());
  switch (f) {
    case Family::L:
      for (int g = 0; g < nf; ++g) ex.terms.push_back({g, 1.0, {}});
      break;
    case Family::A:
      if (!P.full_dimensional()) break;
      for (int g = 0; g < nf; ++g) {
        ex.est.push_back(solid_angle(tangent_cone(P, g), child_options(opt.mc, kA, g), opt.route));
        ex.terms.push_back({g, 1.0, {static_cast<int>(ex.est.size()) - 1}});
      }
      break;
    case Family::Gk:
      check_k(P, k);
      for (int g = 0; g < nf; ++g) {
        ex.est.push_back(modified_grassmann_angle(tangent_cone(P, g), k, child_options(opt.mc, kG, g), opt.route));
        ex.terms.push_back({g, 1.0, {static_cast<int>(ex.est.size()) - 1}});
      }
      break;
    case Family::Ak:
      check_k(P, k);
      for (int F : P.faces_of_dim(k)) {
        auto ups = conic_intrinsic_volumes(tangent_cone(P, F), child_options(opt.mc, kAkUps, F), opt.route);
        ex.est.push_back(ups.v[k]);
        const int iu = static_cast<int>(ex.est.size()) - 1;
        const double det = lattice_determinant(P, F).value();
        for (int G : P.subfaces(F)) {
          ex.est.push_back(solid_angle(tangent_cone_in_face(P, F, G),
                                       child_options(opt.mc, kAkAlpha, static_cast<std::uint64_t>(F) * 4096 + G),
                                       opt.route));
          ex.terms.push_back({G, det, {iu, static_cast<int>(ex.est.size()) - 1}});
        }
      }
      break;
    case Family::Vk:
      throw InvalidArgument("V_k is not a lattice-point sum");
  }
  return ex;
}

ValuationValue from_expansion(Family f, int k, std::int64_t n, const Polytope& P, const Expansion& ex) {
  ValuationValue v;
  v.family = f;
  v.k = k;
  v.dilate = n;
  std::vector<std::vector<double>> per_face;
  for (auto c : relint_counts(P, n)) per_face.push_back({static_cast<double>(c)});
  std::vector<double> out;
  std::vector<std::vector<double>> cov;
  ex.combine(per_face, out, cov);
  v.value = out.empty() ? 0.0 : out[0];
  v.se = cov.empty() ? 0.0 : std::sqrt(cov[0][0]);
  v.exact = ex.exact();
  return v;
}

ValuationValue zero_dilate(Family f, const Polytope& P, int k) {
  ValuationValue v;
  v.family = f;
  v.k = k;
  v.dilate = 0;
  v.exact = true;
  double x = 0;
  switch (f) {
    case Family::L: x = 1; break;
    case Family::A: x = P.ambient_dim() == 0 ? 1 : 0; break;
    case Family::Ak: x = k == 0 ? 1 : 0; break;
    case Family::Gk: x = 0; break;
    case Family::Vk: x = 0; break;
  }
  v.value = x;
  v.rational = Rat(static_cast<long>(x));
  return v;
}

}  // namespace

ValuationValue eval_L(const Polytope& P, std::int64_t n) {
  if (n < 0) throw InvalidArgument("dilation factor must be non-negative");
  ValuationValue v;
  v.family = Family::L;
  v.dilate = n;
  v.exact = true;
  const std::int64_t count = count_points(P, n);
  if (n == 0) {
    v.value = 1;
    v.rational = Rat(1);
    return v;
  }
  LatticeDet det = lattice_determinant(P, P.whole_face());
  v.value = det.value() * static_cast<double>(count);
  if (det.is_integer()) {
    Int root;
    mpz_sqrt(root.get_mpz_t(), det.gram.get_mpz_t());
    v.rational = Rat(root) * Rat(static_cast<long>(count));
  }
  return v;
}

ValuationValue evaluate(Family f, const Polytope& P, int k, std::int64_t n, const ValuationOptions& opt) {
  if (n < 0) throw InvalidArgument("dilation factor must be non-negative");
  if (f == Family::Vk) return eval_Vk(P, k, opt);
  if (family_has_k(f)) check_k(P, k);
  if (n == 0) return zero_dilate(f, P, k);
  if (f == Family::L) {
    ValuationValue v;
    v.family = f;
    v.dilate = n;
    v.exact = true;
    const auto c = count_points(P, n);
    v.value = static_cast<double>(c);
    v.rational = Rat(static_cast<long>(c));
    return v;
  }
  return from_expansion(f, k, n, P, expand(f, P, k, opt));
}

ValuationValue eval_A(const Polytope& P, std::int64_t n, const ValuationOptions& opt) {
  return evaluate(Family::A, P, -1, n, opt);
}

ValuationValue eval_Ak(const Polytope& P, int k, std::int64_t n, const ValuationOptions& opt) {
  return evaluate(Family::Ak, P, k, n, opt);
}

ValuationValue eval_Gk(const Polytope& P, int k, std::int64_t n, const ValuationOptions& opt) {
  return evaluate(Family::Gk, P, k, n, opt);
}

ValuationValue eval_Vk(const Polytope& P, int k, const ValuationOptions& opt) {
  check_k(P, k);
  ValuationValue v;
  v.family = Family::Vk;
  v.k = k;
  v.exact = true;
  double var = 0;
  for (int F : P.faces_of_dim(k)) {
    auto ups = conic_intrinsic_volumes(tangent_cone(P, F), child_options(opt.mc, kV, F), opt.route);
    const double vol = face_volume(P, F);
    v.value += ups.v[k].value * vol;
    var += vol * vol * ups.v[k].se * ups.v[k].se;
    v.exact = v.exact && ups.exact;
  }
  v.se = std::sqrt(var);
  return v;
}

ValuationValue relint_valuation(Family f, const Polytope& P, int k, const ValuationOptions& opt) {
  ValuationValue out;
  out.family = f;
  out.k = k;
  out.exact = true;
  Rat exact_sum = 0;
  bool rational = true;
  double var = 0;
  for (int F = 0; F < static_cast<int>(P.faces().size()); ++F) {
    const int s = ((P.dim() - P.face(F).dim) % 2 == 0) ? 1 : -1;
    ValuationOptions o = opt;
    o.mc = child_options(opt.mc, kRelint, F);
    ValuationValue v = evaluate(f, P.face_polytope(F), k, 1, o);
    out.value += s * v.value;
    var += v.se * v.se;
    out.exact = out.exact && v.exact;
    if (v.rational)
      exact_sum += s * *v.rational;
    else
      rational = false;
  }
  out.se = std::sqrt(var);
  if (rational) out.rational = exact_sum;
  return out;
}

AxiomCheck check_valuation_axiom(Family f, int k, const Polytope& whole, const IntVec& a, std::int64_t b,
                                 const ValuationOptions& opt) {
  const int d = whole.ambient_dim();
  std::vector<Halfspace> hp(whole.facets()), hq(whole.facets());
  hp.push_back({a, b});
  IntVec na(a);
  for (auto& x : na) x = -x;
  hq.push_back({na, -b});
  std::vector<Hyperplane> eq(whole.equations());
  Polytope P = Polytope::from_inequalities(d, hp, whole.equations());
  Polytope Q = Polytope::from_inequalities(d, hq, whole.equations());
  std::vector<Hyperplane> eq2 = eq;
  eq2.push_back({a, b});
  Polytope PQ = Polytope::from_inequalities(d, whole.facets(), eq2);
  if (P == whole || Q == whole) throw InvalidArgument("hyperplane does not split the polytope");

  std::vector<ValuationValue> v;
  const Polytope* parts[4] = {&whole, &PQ, &P, &Q};
  for (int i = 0; i < 4; ++i) {
    ValuationOptions o = opt;
    o.mc = child_options(opt.mc, kSplit, i);
    v.push_back(evaluate(f, *parts[i], k, 1, o));
  }
  AxiomCheck c;
  c.exact = v[0].rational && v[1].rational && v[2].rational && v[3].rational;
  if (c.exact) {
    Rat r = *v[0].rational + *v[1].rational - *v[2].rational - *v[3].rational;
    c.residual = std::abs(to_double(r));
  } else {
    c.residual = std::abs(v[0].value + v[1].value - v[2].value - v[3].value);
  }
  double var = 0;
  for (const auto& x : v) var += x.se * x.se;
  c.se = std::sqrt(var);
  return c;
}

std::vector<FittedPolynomial> relint_ehrhart(const Polytope& P) {
  const int r = P.dim();
  const int nodes = r + 3;
  std::vector<std::vector<std::int64_t>> counts;
  for (int n = 1; n <= nodes; ++n) counts.push_back(relint_counts(P, n));
  std::vector<FittedPolynomial> out;
  for (int F = 0; F < static_cast<int>(P.faces().size()); ++F) {
    std::vector<std::pair<std::int64_t, Rat>> vals;
    for (int n = 1; n <= nodes; ++n) vals.emplace_back(n, Rat(static_cast<long>(counts[n - 1][F])));
    out.push_back(fit_exact(vals, P.face(F).dim));
  }
  return out;
}

FittedPolynomial valuation_polynomial(Family f, const Polytope& P, int k, const ValuationOptions& opt) {
  const int r = P.dim();
  if (f == Family::Vk) throw InvalidArgument("V_k has no dilation polynomial here");
  if (f == Family::L) {
    std::vector<std::pair<std::int64_t, Rat>> vals;
    for (int n = 0; n <= r + 2; ++n) vals.emplace_back(n, Rat(static_cast<long>(count_points(P, n))));
    return fit_exact(vals, r);
  }
  Expansion ex = expand(f, P, k, opt);
  std::vector<std::vector<double>> per_face;
  for (const auto& p : relint_ehrhart(P)) {
    std::vector<double> c = p.coeffs;
    c.resize(r + 1, 0.0);
    per_face.push_back(std::move(c));
  }
  std::vector<double> out;
  std::vector<std::vector<double>> cov;
  ex.combine(per_face, out, cov);
  out.resize(r + 1, 0.0);
  cov.resize(r + 1);
  for (auto& row : cov) row.resize(r + 1, 0.0);
  return FittedPolynomial::from_estimate(std::move(out), std::move(cov));
}

}  // namespace latval
