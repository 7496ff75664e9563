#include "latval/identities.hpp"

#include "latval/errors.hpp"
#include "latval/monte_carlo.hpp"

#include <cmath>
#include <optional>

namespace latval {

namespace {

enum Tag : std::uint64_t { kUpsilon = 11, kAlpha = 12, kGamma = 13, kFaceUpsilon = 14, kTangent = 15 };

double sign(int e) { return (e % 2 == 0) ? 1.0 : -1.0; }

IdentityCheck make(std::string name, int k, double lhs, double rhs, double se) {
  IdentityCheck c;
  c.name = std::move(name);
  c.k = k;
  c.lhs = lhs;
  c.rhs = rhs;
  c.residual = std::abs(lhs - rhs);
  c.se = se;
  return c;
}

// Lazily sampled MC angles of one cone, all on the sampling route.
class ConeTable {
 public:
  ConeTable(const Cone& C, const McOptions& opt) : C_(C), opt_(opt) {}

  const IntrinsicVolumeVector& upsilon() {
    if (!ups_) ups_ = conic_intrinsic_volumes(C_, child_options(opt_, kUpsilon), AngleRoute::MonteCarlo);
    return *ups_;
  }
  const AngleEstimate& alpha(int k) { return get(alpha_, k, true); }
  const AngleEstimate& gamma(int k) { return get(gamma_, k, false); }

 private:
  const AngleEstimate& get(std::vector<std::optional<AngleEstimate>>& cache, int k, bool modified) {
    if (cache.empty()) cache.resize(C_.ambient_dim() + 1);
    if (!cache[k]) {
      McOptions o = child_options(opt_, modified ? kAlpha : kGamma, static_cast<std::uint64_t>(k));
      cache[k] = modified ? modified_grassmann_angle(C_, k, o, AngleRoute::MonteCarlo)
                          : grassmann_angle(C_, k, o, AngleRoute::MonteCarlo);
    }
    return *cache[k];
  }

  const Cone& C_;
  McOptions opt_;
  std::optional<IntrinsicVolumeVector> ups_;
  std::vector<std::optional<AngleEstimate>> alpha_, gamma_;
};

IdentityCheck connection(ConeTable& t, const Cone& C, int k) {
  const int d = C.ambient_dim();
  if (k < 0 || k > d - 1) throw InvalidArgument("connection formula needs 0 <= k <= d-1");
  if (C.is_linear_subspace() && (C.dim() == k + 1 || C.dim() == d - k + 1)) {
    IdentityCheck c = make("connection", k, 0, 0, 0);
    c.skipped = true;
    c.note = "excluded linear subspace of dimension " + std::to_string(C.dim());
    return c;
  }
  const auto& a = t.alpha(k);
  const auto& g0 = t.gamma(k);
  const auto& g1 = t.gamma(k + 1);
  return make("connection", k, a.value, 0.5 * (g0.value + g1.value),
              std::sqrt(a.se * a.se + 0.25 * (g0.se * g0.se + g1.se * g1.se)));
}

IdentityCheck crofton_new(ConeTable& t, const Cone& C, int k) {
  const int d = C.ambient_dim();
  if (k < 0 || k > d) throw InvalidArgument("angle index out of range");
  std::vector<double> c(d + 1, 0.0);
  for (int i = k + 1; i <= d; ++i) c[i] = 1.0;
  const auto& u = t.upsilon();
  const auto& a = t.alpha(k);
  const double s = u.combination_se(c);
  return make("crofton_new", k, a.value, u.combination(c), std::sqrt(a.se * a.se + s * s));
}

IdentityCheck crofton_classical(ConeTable& t, const Cone& C, int k) {
  const int d = C.ambient_dim();
  if (k < 0 || k > d) throw InvalidArgument("angle index out of range");
  std::vector<double> c(d + 1, 0.0);
  for (int i = k + 1; i <= d; i += 2) c[i] = 2.0;
  const auto& u = t.upsilon();
  const auto& g = t.gamma(k);
  const double s = u.combination_se(c);
  IdentityCheck out = make("crofton_classical", k, g.value, u.combination(c), std::sqrt(g.se * g.se + s * s));
  if (C.is_linear_subspace()) {
    out.note = "linear subspace";
    out.expected_failure = k < C.dim();
  }
  return out;
}

IdentityCheck gauss_bonnet(ConeTable& t, const Cone& C) {
  const int d = C.ambient_dim();
  std::vector<double> c(d + 1);
  for (int k = 0; k <= d; ++k) c[k] = sign(k);
  const auto& u = t.upsilon();
  const double rhs = C.is_linear_subspace() ? sign(C.dim()) : 0.0;
  return make("gauss_bonnet", -1, u.combination(c), rhs, u.combination_se(c));
}

IdentityCheck grunbaum_faces(ConeTable& t, const Cone& C, int k, const McOptions& opt) {
  const int d = C.ambient_dim();
  if (k < 0 || k > d) throw InvalidArgument("angle index out of range");
  const auto& u = t.upsilon();
  const double lhs = sign(k) * u.v[k].value;
  double var = u.v[k].se * u.v[k].se;
  double rhs = 0;
  for (std::size_t f = 0; f < C.faces().size(); ++f) {
    const int df = C.faces()[f].dim;
    if (df < k) continue;  // υ_k of a cone of smaller dimension vanishes
    auto uf = conic_intrinsic_volumes(C.face_cone(static_cast<int>(f)),
                                      child_options(opt, kFaceUpsilon, static_cast<std::uint64_t>(f)));
    rhs += sign(df) * uf.v[k].value;
    var += uf.v[k].se * uf.v[k].se;
  }
  return make("grunbaum_faces", k, lhs, rhs, std::sqrt(var));
}

void require_full(const Polytope& P) {
  if (!P.full_dimensional()) throw InvalidArgument("identity needs a full-dimensional polytope");
}

}  // namespace

McOptions child_options(const McOptions& opt, std::uint64_t tag, std::uint64_t index) {
  McOptions o = opt;
  o.seed = mc::derive_seed(opt.seed, tag, index);
  return o;
}

IdentityCheck verify_connection(const Cone& C, int k, const McOptions& opt) {
  ConeTable t(C, opt);
  return connection(t, C, k);
}

IdentityCheck verify_crofton_new(const Cone& C, int k, const McOptions& opt) {
  ConeTable t(C, opt);
  return crofton_new(t, C, k);
}

IdentityCheck verify_crofton_classical(const Cone& C, int k, const McOptions& opt) {
  ConeTable t(C, opt);
  return crofton_classical(t, C, k);
}

IdentityCheck verify_gauss_bonnet(const Cone& C, const McOptions& opt) {
  ConeTable t(C, opt);
  return gauss_bonnet(t, C);
}

IdentityCheck verify_grunbaum_faces(const Cone& C, int k, const McOptions& opt) {
  ConeTable t(C, opt);
  return grunbaum_faces(t, C, k, opt);
}

std::vector<IdentityCheck> verify_cone_identities(const Cone& C, const McOptions& opt) {
  ConeTable t(C, opt);
  const int d = C.ambient_dim();
  std::vector<IdentityCheck> out;
  out.push_back(gauss_bonnet(t, C));
  for (int k = 0; k <= d; ++k) out.push_back(crofton_classical(t, C, k));
  for (int k = 0; k <= d; ++k) out.push_back(crofton_new(t, C, k));
  for (int k = 0; k < d; ++k) out.push_back(connection(t, C, k));
  for (int k = 0; k <= d; ++k) out.push_back(grunbaum_faces(t, C, k, opt));
  return out;
}

IdentityCheck verify_grunbaum_polytope(const Polytope& P, int k, const McOptions& opt, AngleRoute route) {
  require_full(P);
  const int d = P.ambient_dim();
  if (k < 1 || k > d - 1) throw InvalidArgument("polytope Grünbaum formula needs 1 <= k <= d-1");
  double lhs = 0, var = 0;
  for (int f = 0; f < static_cast<int>(P.faces().size()); ++f) {
    const int j = P.face(f).dim;
    if (j > d - 1) continue;
    Cone T = tangent_cone(P, f);
    for (int n = 0; n <= k - 1; ++n) {
      auto a = modified_grassmann_angle(T, d - k + n, child_options(opt, kTangent, static_cast<std::uint64_t>(f * 16 + n)),
                                        route);
      lhs += 2.0 * sign(j) * sign(n) * a.value;
      var += 4.0 * a.se * a.se;
    }
  }
  return make("grunbaum_polytope", k, lhs, sign(d - k) - sign(d), std::sqrt(var));
}

IdentityCheck verify_brianchon_gram(const Polytope& P, const McOptions& opt, AngleRoute route) {
  require_full(P);
  double lhs = 0, var = 0;
  for (int f = 0; f < static_cast<int>(P.faces().size()); ++f) {
    auto a = solid_angle(tangent_cone(P, f), child_options(opt, kTangent, static_cast<std::uint64_t>(f)), route);
    lhs += sign(P.face(f).dim) * a.value;
    var += a.se * a.se;
  }
  return make("brianchon_gram", -1, lhs, 0.0, std::sqrt(var));
}

IdentityCheck verify_modified_brianchon_gram(const Polytope& P, int k, const McOptions& opt, AngleRoute route) {
  require_full(P);
  if (k < 0 || k > P.ambient_dim()) throw InvalidArgument("angle index out of range");
  double lhs = 0, var = 0;
  for (int f = 0; f < static_cast<int>(P.faces().size()); ++f) {
    auto a = modified_grassmann_angle(tangent_cone(P, f), k,
                                      child_options(opt, kTangent, static_cast<std::uint64_t>(f * 16 + k)), route);
    lhs += sign(P.face(f).dim) * a.value;
    var += a.se * a.se;
  }
  return make("modified_brianchon_gram", k, lhs, 0.0, std::sqrt(var));
}

}  // namespace latval
