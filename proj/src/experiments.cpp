#include "latval/experiments.hpp"

#include "latval/errors.hpp"
#include "latval/identities.hpp"
#include "latval/monte_carlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

namespace latval {

namespace {

enum Tag : std::uint64_t { kReeveG1 = 41, kReeveA = 42, kWitness = 43, kScan = 44, kGauss = 45, kGaussRef = 46 };

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string str(std::int64_t x) { return std::to_string(x); }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

bool ExperimentReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

Claim& ExperimentReport::check(std::string description, std::string reference, double expected, double observed,
                               double tolerance) {
  Claim c{std::move(description), std::move(reference), expected, observed, tolerance,
          std::abs(observed - expected) <= tolerance};
  claims.push_back(std::move(c));
  return claims.back();
}

Claim& ExperimentReport::check_true(std::string description, std::string reference, bool condition, double observed) {
  if (observed != 0.0) description += " (value " + fmt(observed) + ")";
  claims.push_back({std::move(description), std::move(reference), 1.0, condition ? 1.0 : 0.0, 0.0, condition});
  return claims.back();
}

Claim& ExperimentReport::check_exact(std::string description, std::string reference, const Rat& expected,
                                     const Rat& observed) {
  claims.push_back({std::move(description), std::move(reference), to_double(expected), to_double(observed), 0.0,
                    expected == observed});
  return claims.back();
}

Polytope reeve_tetrahedron(std::int64_t h) {
  if (h < 1) throw InvalidArgument("Reeve height must be at least 1");
  return Polytope::convex_hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, h}});
}

Polytope unit_cube(int d) {
  std::vector<IntVec> pts;
  for (int mask = 0; mask < (1 << d); ++mask) {
    IntVec v(d);
    for (int i = 0; i < d; ++i) v[i] = (mask >> i) & 1;
    pts.push_back(std::move(v));
  }
  return Polytope::convex_hull(pts);
}

Polytope standard_simplex(int d) {
  std::vector<IntVec> pts{IntVec(d, 0)};
  for (int i = 0; i < d; ++i) {
    IntVec e(d, 0);
    e[i] = 1;
    pts.push_back(std::move(e));
  }
  return Polytope::convex_hull(pts);
}

double reeve_vertex_angle_sum(std::int64_t h) {
  Polytope P = reeve_tetrahedron(h);
  double S = 0;
  for (int v : P.faces_of_dim(0)) S += solid_angle(tangent_cone(P, v), {}, AngleRoute::Exact).value;
  return S;
}

ExperimentReport run_reeve(std::int64_t h, const ExperimentOptions& opt) {
  const auto t0 = Clock::now();
  ExperimentReport rep;
  rep.name = "reeve";
  rep.inputs = {{"h", str(h)}, {"samples", str(opt.mc.samples)}, {"seed", std::to_string(opt.mc.seed)}};
  const Polytope P = reeve_tetrahedron(h);
  const double floor = 1e-9;
  Rat h6(h, 6);
  h6.canonicalize();
  const double S = reeve_vertex_angle_sum(h);

  // Discrete volume.
  FittedPolynomial L = valuation_polynomial(Family::L, P, -1, {});
  const std::vector<Rat> Lx{Rat(1), Rat(2) - h6, Rat(1), h6};
  for (int i = 0; i <= 3; ++i)
    rep.check_exact("L coefficient of t^" + std::to_string(i) + " equals " + to_string(Lx[i]),
                    "Reeve Ehrhart polynomial", Lx[i], L.exact_coeffs[i]);
  HStar hs = to_hstar(L);
  const std::vector<Rat> hx{Rat(1), Rat(0), Rat(h - 1), Rat(0)};
  for (int i = 0; i <= 3; ++i)
    rep.check_exact("L h*_" + std::to_string(i) + " equals " + to_string(hx[i]), "h* from L(0..3)", hx[i],
                    hs.exact_values[i]);

  // Exact-path identities.
  ValuationOptions exact;
  exact.route = AngleRoute::Auto;
  FittedPolynomial G0 = valuation_polynomial(Family::Gk, P, 0, exact);
  FittedPolynomial G2 = valuation_polynomial(Family::Gk, P, 2, exact);
  FittedPolynomial G3 = valuation_polynomial(Family::Gk, P, 3, exact);
  FittedPolynomial Aex = valuation_polynomial(Family::A, P, -1, exact);
  for (int i = 0; i <= 3; ++i) {
    const double l = L.coeffs[i] - (i == 0 ? 1.0 : 0.0);
    rep.check("G_0 = L - 1, t^" + std::to_string(i), "G_0 = L - 1", l, G0.coeffs[i], floor);
    rep.check("G_2 = A, t^" + std::to_string(i), "G_{d-1} = A", Aex.coeffs[i], G2.coeffs[i], floor);
    rep.check("G_3 = 0, t^" + std::to_string(i), "G_d = 0", 0.0, G3.coeffs[i], floor);
  }
  rep.check_true("S < 1/2", "vertex solid angle sum of the Reeve tetrahedron", S < 0.5, S);

  // Sampled G_1 and A.
  ValuationOptions mc;
  mc.route = AngleRoute::MonteCarlo;
  mc.mc = child_options(opt.mc, kReeveG1);
  FittedPolynomial G1 = valuation_polynomial(Family::Gk, P, 1, mc);
  mc.mc = child_options(opt.mc, kReeveA);
  FittedPolynomial A = valuation_polynomial(Family::A, P, -1, mc);
  const double hd = static_cast<double>(h) / 6.0;
  const std::vector<double> g1x{0.0, S - hd, 1.0, hd};
  const std::vector<double> ax{0.0, S - hd, 0.0, hd};
  for (int i = 0; i <= 3; ++i) {
    rep.check("G_1 coefficient of t^" + std::to_string(i), "G_1 = (h/6)t^3 + t^2 + (S - h/6)t", g1x[i], G1.coeffs[i],
              opt.nsigma * G1.se[i] + floor);
    rep.check("A coefficient of t^" + std::to_string(i), "A = (h/6)t^3 + (S - h/6)t", ax[i], A.coeffs[i],
              opt.nsigma * A.se[i] + floor);
  }
  if (h >= 3) {
    rep.check_true("G_1 linear coefficient negative beyond the MC error", "S - h/6 < 0 for h >= 3",
                   G1.coeffs[1] + opt.nsigma * G1.se[1] < 0, G1.coeffs[1]);
    rep.check_true("A linear coefficient negative beyond the MC error", "S - h/6 < 0 for h >= 3",
                   A.coeffs[1] + opt.nsigma * A.se[1] < 0, A.coeffs[1]);
  }
  rep.runtime_s = seconds_since(t0);
  return rep;
}

ExperimentReport run_negativity_witness(int d, int k, const ExperimentOptions& opt) {
  const auto t0 = Clock::now();
  if (d < 2 || d > kMaxAmbientDim) throw InvalidArgument("witness search needs 2 <= d <= 6");
  if (k < 0 || k > d - 2) throw InvalidArgument("witness search needs 0 <= k <= d-2");
  ExperimentReport rep;
  rep.name = "negativity_witness";
  rep.inputs = {{"d", str(d)}, {"k", str(k)}, {"samples", str(opt.mc.samples)}, {"seed", std::to_string(opt.mc.seed)}};
  const int r = k + 2;  // simplex dimension, same parity as k

  std::vector<IntVec> box;
  {
    IntVec v(d, 0);
    while (true) {
      int i = 0;
      while (i < d && v[i] == 2) v[i++] = 0;
      if (i == d) break;
      ++v[i];
      box.push_back(v);
    }
    std::sort(box.begin(), box.end());
  }

  ValuationOptions exact;
  exact.mc = child_options(opt.mc, kWitness);
  std::optional<Polytope> witness;
  double exact_value = 0;
  std::vector<int> idx(r);
  long tried = 0;
  std::function<bool(int, int)> search = [&](int pos, int start) -> bool {
    if (pos == r) {
      std::vector<IntVec> pts{IntVec(d, 0)};
      for (int i : idx) pts.push_back(box[i]);
      Polytope S = Polytope::convex_hull(pts);
      if (S.dim() != r || static_cast<int>(S.vertices().size()) != r + 1) return false;
      if (interior_count(S, 1) != 0) return false;
      ++tried;
      ValuationValue v = relint_valuation(Family::Gk, S, k, exact);
      if (v.value < -opt.nsigma * v.se - 1e-9) {
        witness = S;
        exact_value = v.value;
        return true;
      }
      return false;
    }
    for (int i = start; i < static_cast<int>(box.size()); ++i) {
      idx[pos] = i;
      if (search(pos + 1, i + 1)) return true;
    }
    return false;
  };
  search(0, 0);
  if (!witness) throw NoWitnessFound("no simplex in {0,1,2}^" + std::to_string(d) + " has negative G_" +
                                     std::to_string(k) + " on its relative interior");

  std::string verts;
  for (const auto& v : witness->vertices()) {
    verts += "(";
    for (std::size_t i = 0; i < v.size(); ++i) verts += (i ? "," : "") + std::to_string(v[i]);
    verts += ")";
  }
  rep.inputs["witness"] = verts;
  rep.inputs["candidates_evaluated"] = std::to_string(tried);
  rep.check_true("no interior lattice points", "empty simplex", interior_count(*witness, 1) == 0);
  ValuationValue Lr = relint_valuation(Family::L, *witness, -1, {});
  rep.check("L(relint) equals the interior count", "inclusion-exclusion over faces", 0.0, Lr.value, 0.0);
  rep.check_true("G_k(relint) negative on the closed-form path", "G_k not combinatorially positive", exact_value < 0,
                 exact_value);
  ValuationOptions mc;
  mc.route = AngleRoute::MonteCarlo;
  mc.mc = child_options(opt.mc, kWitness, 1);
  ValuationValue vm = relint_valuation(Family::Gk, *witness, k, mc);
  if (vm.exact) {
    rep.check_true("G_k(relint) negative (every angle deterministic)", "G_k not combinatorially positive",
                   vm.value < -1e-9, vm.value);
  } else {
    rep.check_true("G_k(relint) below -" + fmt(opt.nsigma) + " se on the sampled path",
                   "G_k not combinatorially positive", vm.value < -opt.nsigma * vm.se, vm.value);
  }
  rep.claims.back().tolerance = opt.nsigma * vm.se;
  rep.runtime_s = seconds_since(t0);
  return rep;
}

ExperimentReport run_conjecture_scan(int max_dim, int trials, const ExperimentOptions& opt) {
  const auto t0 = Clock::now();
  if (max_dim < 1 || max_dim > kMaxAmbientDim) throw InvalidArgument("scan dimension out of range");
  ExperimentReport rep;
  rep.name = "conjecture_scan";
  rep.inputs = {{"max_dim", str(max_dim)},
                {"trials", str(trials)},
                {"samples", str(opt.mc.samples)},
                {"seed", std::to_string(opt.mc.seed)}};
  std::mt19937_64 rng(mc::derive_seed(opt.mc.seed, kScan));
  int candidates = 0;
  for (int t = 0; t < trials; ++t) {
    const int d = 1 + static_cast<int>(rng() % max_dim);
    std::uniform_int_distribution<int> coord(0, 2);
    std::optional<Polytope> S;
    while (!S) {
      std::vector<IntVec> pts;
      for (int i = 0; i <= d; ++i) {
        IntVec v(d);
        for (auto& x : v) x = coord(rng);
        pts.push_back(std::move(v));
      }
      Polytope Q = Polytope::convex_hull(pts);
      if (Q.dim() == d && static_cast<int>(Q.vertices().size()) == d + 1) S = Q;
    }
    std::string verts;
    for (const auto& v : S->vertices()) {
      verts += "(";
      for (std::size_t i = 0; i < v.size(); ++i) verts += (i ? "," : "") + std::to_string(v[i]);
      verts += ")";
    }
    for (int k = 0; k <= d; ++k) {
      ValuationOptions o;
      o.mc = child_options(opt.mc, kScan, static_cast<std::uint64_t>(t) * 16 + k);
      ValuationValue rel = relint_valuation(Family::Ak, *S, k, o);
      o.mc = child_options(opt.mc, kScan, (static_cast<std::uint64_t>(t) * 16 + k) | 1u << 30);
      ValuationValue whole = evaluate(Family::Ak, *S, k, 1, o);
      const std::string tag = "trial " + std::to_string(t) + " (dim " + std::to_string(d) + "), k=" + std::to_string(k);
      // Reciprocity plus parity: A_k(relint P) = (-1)^{dim P} A_{k,P}(-1) = (-1)^{dim P + k} A_k(P).
      const double sign = ((d + k) % 2 == 0) ? 1.0 : -1.0;
      rep.check(tag + ": A_k(relint) = (-1)^(dim+k) A_k", "reciprocity with parity", sign * whole.value, rel.value,
                opt.nsigma * (rel.se + whole.se) + 1e-9);
      if (rel.value < -opt.nsigma * rel.se - 1e-9) {
        ++candidates;
        rep.notes.push_back(tag + ": A_k(relint) = " + fmt(rel.value) + " (se " + fmt(rel.se) + ") for simplex " + verts);
      }
    }
  }
  rep.inputs["counterexample_candidates"] = std::to_string(candidates);
  rep.runtime_s = seconds_since(t0);
  return rep;
}

ExperimentReport run_gauss_image(const Cone& C, int k, int trials, const ExperimentOptions& opt) {
  const auto t0 = Clock::now();
  const int d = C.ambient_dim();
  if (k < 1 || k > d) throw InvalidArgument("Gaussian image needs 1 <= k <= d");
  if (trials < 2) throw InvalidArgument("need at least two trials");
  ExperimentReport rep;
  rep.name = "gauss_image";
  rep.inputs = {{"k", str(k)}, {"trials", str(trials)}, {"samples", str(opt.mc.samples)},
                {"seed", std::to_string(opt.mc.seed)}, {"ambient_dim", str(d)}};
  const linalg::Rows gens = C.generators();
  double sum = 0, sum2 = 0;
  for (int t = 0; t < trials; ++t) {
    mc::Rng rng(mc::derive_seed(opt.mc.seed, kGauss, static_cast<std::uint64_t>(t)));
    std::normal_distribution<double> g;
    std::vector<std::vector<double>> A(k, std::vector<double>(d));
    for (auto& row : A)
      for (auto& x : row) x = g(rng);
    linalg::Rows img;
    for (const auto& v : gens) {
      const auto vd = to_double(v);
      RatVec w(k);
      for (int i = 0; i < k; ++i) {
        double s = 0;
        for (int j = 0; j < d; ++j) s += A[i][j] * vd[j];
        w[i] = Rat(s);
      }
      img.push_back(std::move(w));
    }
    Cone AC = Cone::from_generators(img, k);
    double u = 0;
    if (AC.dim() == k) u = solid_angle(AC, child_options(opt.mc, kGauss, 1u << 20 | t)).value;
    sum += u;
    sum2 += u * u;
  }
  const double n = trials;
  const double mean = sum / n;
  const double var = std::max(0.0, (sum2 - n * mean * mean) / (n - 1));
  const double se = std::sqrt(var / n);
  AngleEstimate ref = modified_grassmann_angle(C, k - 1, child_options(opt.mc, kGaussRef));
  const double tol = opt.nsigma * std::sqrt(se * se + ref.se * ref.se) + 1e-9;
  rep.check("mean upsilon_k(AC) equals alpha_{k-1}(C)", "expected angle of the Gaussian image", ref.value, mean, tol);
  rep.inputs["mean_se"] = std::to_string(se);
  rep.inputs["reference_exact"] = ref.exact ? "true" : "false";
  rep.runtime_s = seconds_since(t0);
  return rep;
}

Cone random_cone(int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-2, 2);
  auto vec = [&] {
    RatVec v(d);
    do {
      for (auto& x : v) x = coord(rng);
    } while (is_zero(v));
    return v;
  };
  const int kind = static_cast<int>(rng() % 6);
  linalg::Rows gens;
  if (kind == 0) {  // linear subspace
    const int j = static_cast<int>(rng() % (d + 1));
    linalg::Rows basis;
    for (int i = 0; i < j; ++i) basis.push_back(vec());
    return Cone::subspace(basis, d);
  }
  if (kind == 1 && d >= 2) {  // lineality plus a pointed part
    auto l = vec();
    gens.push_back(l);
    gens.push_back(scale(l, Rat(-1)));
    const int m = 1 + static_cast<int>(rng() % d);
    for (int i = 0; i < m; ++i) gens.push_back(vec());
    return Cone::from_generators(gens, d);
  }
  // Pointed cone: keep only generators in an open half-space so it stays pointed.
  auto c = vec();
  const int m = 1 + static_cast<int>(rng() % (d + 2));
  while (static_cast<int>(gens.size()) < m) {
    auto v = vec();
    if (dot(v, c) > 0) gens.push_back(v);
  }
  return Cone::from_generators(gens, d);
}

Polytope random_polytope(int d, int npoints, int box, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(0, box);
  while (true) {
    std::vector<IntVec> pts;
    for (int i = 0; i < npoints; ++i) {
      IntVec v(d);
      for (auto& x : v) x = coord(rng);
      pts.push_back(std::move(v));
    }
    Polytope P = Polytope::convex_hull(pts);
    if (P.full_dimensional()) return P;
  }
}

}  // namespace latval
