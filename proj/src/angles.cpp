#include "latval/angles.hpp"

#include "latval/errors.hpp"
#include "latval/lp.hpp"
#include "latval/monte_carlo.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace latval {

double bernoulli_se(double p, std::int64_t n) {
  if (n <= 0) return 0.0;
  const double N = static_cast<double>(n);
  return std::sqrt(std::max(p * (1.0 - p), 1.0 / N) / N);
}

double IntrinsicVolumeVector::sum() const {
  double s = 0;
  for (const auto& e : v) s += e.value;
  return s;
}

double IntrinsicVolumeVector::combination(const std::vector<double>& c) const {
  double s = 0;
  for (std::size_t i = 0; i < c.size() && i < v.size(); ++i) s += c[i] * v[i].value;
  return s;
}

double IntrinsicVolumeVector::combination_se(const std::vector<double>& c) const {
  if (exact || samples <= 0) return 0.0;
  double m1 = 0, m2 = 0;
  bool any = false;
  for (std::size_t i = 0; i < c.size() && i < v.size(); ++i) {
    m1 += c[i] * v[i].value;
    m2 += c[i] * c[i] * v[i].value;
    any = any || c[i] != 0.0;
  }
  if (!any) return 0.0;
  const double N = static_cast<double>(samples);
  return std::sqrt(std::max(m2 - m1 * m1, 1.0 / N) / N);
}

namespace {

std::vector<double> unit(const RatVec& v) {
  std::vector<double> x = to_double(v);
  double n = 0;
  for (double t : x) n += t * t;
  n = std::sqrt(n);
  for (double& t : x) t /= n;
  return x;
}

double dotd(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Orthonormal basis (columns) of span(rows).
Eigen::MatrixXd orthonormal(const linalg::Rows& rows, int d) {
  if (rows.empty()) return Eigen::MatrixXd(d, 0);
  Eigen::MatrixXd M(d, rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    auto u = unit(rows[j]);
    for (int i = 0; i < d; ++i) M(i, j) = u[i];
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(M);
  Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(d, rows.size());
  return Q;
}

double triangle_solid_angle(const RatVec& a, const RatVec& b, const RatVec& c) {
  const double det = std::sqrt(std::max(0.0, to_double(linalg::gram_determinant({a, b, c}))));
  const double na = std::sqrt(to_double(norm2(a))), nb = std::sqrt(to_double(norm2(b))),
               nc = std::sqrt(to_double(norm2(c)));
  const double den = na * nb * nc + to_double(dot(a, b)) * nc + to_double(dot(a, c)) * nb + to_double(dot(b, c)) * na;
  return 2.0 * std::atan2(det, den);
}

AngleEstimate from_counts(const mc::Counts& c, std::uint64_t seed) {
  AngleEstimate e;
  e.samples = c.samples;
  e.seed = seed;
  e.value = static_cast<double>(c.hits[1]) / static_cast<double>(c.samples);
  e.se = bernoulli_se(e.value, c.samples);
  return e;
}

void check_samples(const McOptions& opt) {
  if (opt.samples <= 0) throw InvalidArgument("sample count must be positive");
}

}  // namespace

std::optional<double> exact_solid_angle(const Cone& C) {
  if (C.is_zero()) return 1.0;
  const int pd = C.pointed_dim();
  if (pd == 0) return 1.0;
  if (pd == 1) return 0.5;
  const auto& rays = C.rays();
  if (pd == 2) {
    if (rays.size() != 2) throw Error("pointed planar cone without two extreme rays");
    const Rat uw = dot(rays[0], rays[1]);
    const Rat cross = norm2(rays[0]) * norm2(rays[1]) - uw * uw;
    return std::atan2(std::sqrt(to_double(cross)), to_double(uw)) / (2.0 * std::numbers::pi);
  }
  if (pd == 3) {
    const RatVec& r0 = rays[0];
    double total = 0;
    for (const auto& y : C.facet_normals()) {
      if (dot(y, r0) == 0) continue;
      std::vector<int> on;
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (dot(y, rays[i]) == 0) on.push_back(static_cast<int>(i));
      if (on.size() != 2) throw Error("facet of a pointed 3-cone without two extreme rays");
      total += triangle_solid_angle(r0, rays[on[0]], rays[on[1]]);
    }
    return total / (4.0 * std::numbers::pi);
  }
  return std::nullopt;
}

AngleEstimate solid_angle(const Cone& C, const McOptions& opt, AngleRoute route) {
  if (C.is_linear_subspace()) return AngleEstimate::exact_value(1.0);
  if (route != AngleRoute::MonteCarlo) {
    if (auto v = exact_solid_angle(C)) return AngleEstimate::exact_value(*v);
    if (route == AngleRoute::Exact) throw InvalidArgument("no closed form for this solid angle");
  }
  check_samples(opt);
  const int d = C.ambient_dim();
  const int n = C.dim();
  const Eigen::MatrixXd B = orthonormal(C.span_basis(), d);
  std::vector<Eigen::VectorXd> normals;
  for (const auto& y : C.facet_normals()) {
    auto u = unit(y);
    normals.push_back(B.transpose() * Eigen::Map<const Eigen::VectorXd>(u.data(), d));
  }
  struct Trial {
    int n;
    const std::vector<Eigen::VectorXd>* normals;
    Eigen::VectorXd z;
    int operator()(mc::Rng& rng) {
      std::normal_distribution<double> g;
      z.resize(n);
      for (int i = 0; i < n; ++i) z(i) = g(rng);
      const double nz = z.norm();
      bool boundary = false;
      for (const auto& y : *normals) {
        const double s = y.dot(z) / nz;
        if (s > 1e-9) return 0;
        if (s > -1e-9) boundary = true;
      }
      return boundary ? -1 : 1;
    }
  };
  Trial t{n, &normals, {}};
  return from_counts(mc::run(opt.samples, opt.seed, opt.threads, 2, t), opt.seed);
}

std::optional<std::vector<double>> exact_intrinsic_volumes(const Cone& C) {
  const int d = C.ambient_dim();
  std::vector<double> v(d + 1, 0.0);
  if (C.is_linear_subspace()) {
    v[C.dim()] = 1.0;
    return v;
  }
  for (std::size_t f = 0; f < C.faces().size(); ++f) {
    auto a = exact_solid_angle(C.face_cone(static_cast<int>(f)));
    if (!a) return std::nullopt;
    auto b = exact_solid_angle(C.normal_cone_of_face(static_cast<int>(f)));
    if (!b) return std::nullopt;
    v[C.faces()[f].dim] += *a * *b;
  }
  return v;
}

MoreauClassifier::MoreauClassifier(const Cone& C, double tol) : d_(C.ambient_dim()), tol_(tol) {
  std::vector<std::vector<double>> facets, rays;
  for (const auto& y : C.facet_normals()) facets.push_back(unit(y));
  for (const auto& r : C.rays()) rays.push_back(unit(r));
  for (std::size_t f = 0; f < C.faces().size(); ++f) {
    const ConeFace& F = C.faces()[f];
    linalg::Rows basis = C.face_span(static_cast<int>(f));
    std::vector<double> P(d_ * d_, 0.0);
    for (int j = 0; j < d_; ++j) {
      RatVec e(d_, Rat(0));
      e[j] = 1;
      RatVec col = linalg::project(basis, e);
      for (int i = 0; i < d_; ++i) P[i * d_ + j] = to_double(col[i]);
    }
    proj_.push_back(std::move(P));
    std::vector<std::vector<double>> of, orr;
    for (std::size_t j = 0; j < facets.size(); ++j)
      if (!std::binary_search(F.facets.begin(), F.facets.end(), static_cast<int>(j))) of.push_back(facets[j]);
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (!std::binary_search(F.rays.begin(), F.rays.end(), static_cast<int>(i))) orr.push_back(rays[i]);
    out_facets_.push_back(std::move(of));
    out_rays_.push_back(std::move(orr));
    dims_.push_back(F.dim);
  }
}

int MoreauClassifier::classify(const std::vector<double>& x) const {
  std::vector<double> p(d_), q(d_);
  int accepted = -1, naccepted = 0;
  for (std::size_t f = 0; f < proj_.size(); ++f) {
    const auto& P = proj_[f];
    for (int i = 0; i < d_; ++i) {
      double s = 0;
      for (int j = 0; j < d_; ++j) s += P[i * d_ + j] * x[j];
      p[i] = s;
      q[i] = x[i] - s;
    }
    double margin = std::numeric_limits<double>::infinity();
    for (const auto& y : out_facets_[f]) margin = std::min(margin, -dotd(y, p));
    for (const auto& r : out_rays_[f]) margin = std::min(margin, -dotd(r, q));
    if (margin > tol_) {
      accepted = static_cast<int>(f);
      ++naccepted;
    } else if (margin >= -tol_) {
      return -1;
    }
  }
  return naccepted == 1 ? accepted : -1;
}

IntrinsicVolumeVector conic_intrinsic_volumes(const Cone& C, const McOptions& opt, AngleRoute route) {
  const int d = C.ambient_dim();
  IntrinsicVolumeVector out;
  auto exact = [&](const std::vector<double>& v) {
    out.exact = true;
    for (double x : v) out.v.push_back(AngleEstimate::exact_value(x));
    return out;
  };
  if (C.is_linear_subspace()) {
    std::vector<double> v(d + 1, 0.0);
    v[C.dim()] = 1.0;
    return exact(v);
  }
  if (route != AngleRoute::MonteCarlo) {
    if (auto v = exact_intrinsic_volumes(C)) return exact(*v);
    if (route == AngleRoute::Exact) throw InvalidArgument("no closed form for these intrinsic volumes");
  }
  check_samples(opt);
  MoreauClassifier cls(C);
  struct Trial {
    const MoreauClassifier* cls;
    int d;
    std::vector<double> x;
    int operator()(mc::Rng& rng) {
      std::normal_distribution<double> g;
      x.resize(d);
      double n = 0;
      for (auto& t : x) {
        t = g(rng);
        n += t * t;
      }
      n = std::sqrt(n);
      for (auto& t : x) t /= n;
      const int f = cls->classify(x);
      return f < 0 ? -1 : cls->face_dim(f);
    }
  };
  Trial t{&cls, d, {}};
  mc::Counts c = mc::run(opt.samples, opt.seed, opt.threads, d + 1, t);
  out.samples = c.samples;
  for (int k = 0; k <= d; ++k) {
    AngleEstimate e;
    e.samples = c.samples;
    e.seed = opt.seed;
    e.value = static_cast<double>(c.hits[k]) / static_cast<double>(c.samples);
    e.se = bernoulli_se(e.value, c.samples);
    out.v.push_back(e);
  }
  return out;
}

namespace {

// Sampler for γ_k (modified = false) and α_k (modified = true) through the
// feasibility LP 0 ∈ conv(Q r_i), Q the projection onto (W + L)^⊥.
struct GrassmannTrial {
  int d = 0, w = 0, l = 0, m = 0;
  bool modified = false;
  Eigen::MatrixXd Lb;  // d×l orthonormal lineality basis
  Eigen::MatrixXd R;   // d×m unit rays

  int operator()(mc::Rng& rng) const {
    std::normal_distribution<double> g;
    Eigen::MatrixXd M(d, w + l);
    for (int j = 0; j < w; ++j)
      for (int i = 0; i < d; ++i) M(i, j) = g(rng);
    if (l > 0) M.rightCols(l) = Lb;
    Eigen::VectorXd U;
    if (modified) {
      U.resize(d);
      for (int i = 0; i < d; ++i) U(i) = g(rng);
      U.normalize();
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(M);
    Eigen::MatrixXd Q = qr.householderQ();
    const int p = d - w - l;
    const int rows = p + 1 + (modified ? 1 : 0);
    const int cols = m + (modified ? 1 : 0);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(rows, cols);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(rows);
    if (p > 0) A.topLeftCorner(p, m) = Q.rightCols(p).transpose() * R;
    A.row(p).head(m).setOnes();
    b(p) = 1.0;
    if (modified) {
      Eigen::MatrixXd coef = qr.matrixQR()
                                 .topLeftCorner(w + l, w + l)
                                 .triangularView<Eigen::Upper>()
                                 .solve(Q.leftCols(w + l).transpose() * R);
      Eigen::MatrixXd xw = M.leftCols(w) * coef.topRows(w);
      A.row(p + 1).head(m) = U.transpose() * xw;
      A(p + 1, m) = -1.0;
    }
    const double v = lp::infeasibility(A, b);
    if (v <= 1e-11) return 1;
    if (v >= 1e-8) return 0;
    return -1;
  }
};

AngleEstimate grassmann_common(const Cone& C, int k, const McOptions& opt, AngleRoute route, bool modified) {
  const int d = C.ambient_dim();
  if (k < 0 || k > d) throw InvalidArgument("angle index out of range");
  const int w = d - k;
  const int l = C.lineality_dim();
  if (C.is_zero() || k == d) return AngleEstimate::exact_value(0.0);
  if (l + w > d) return AngleEstimate::exact_value(1.0);
  if (C.is_linear_subspace()) return AngleEstimate::exact_value(0.0);
  if (!modified && l + w == d) return AngleEstimate::exact_value(1.0);
  if (route != AngleRoute::MonteCarlo) {
    if (auto v = exact_intrinsic_volumes(C)) {
      double s = 0;
      for (int i = k + 1; i <= d; ++i)
        if (modified || (i - k) % 2 == 1) s += (*v)[i];
      return AngleEstimate::exact_value(modified ? s : std::min(1.0, 2.0 * s));
    }
    if (route == AngleRoute::Exact) throw InvalidArgument("no closed form for this Grassmann angle");
  }
  check_samples(opt);
  GrassmannTrial t;
  t.d = d;
  t.w = w;
  t.l = l;
  t.m = static_cast<int>(C.rays().size());
  t.modified = modified;
  t.Lb = orthonormal(C.lineality(), d);
  t.R.resize(d, t.m);
  for (int j = 0; j < t.m; ++j) {
    auto u = unit(C.rays()[j]);
    for (int i = 0; i < d; ++i) t.R(i, j) = u[i];
  }
  return from_counts(mc::run(opt.samples, opt.seed, opt.threads, 2, t), opt.seed);
}

}  // namespace

AngleEstimate grassmann_angle(const Cone& C, int k, const McOptions& opt, AngleRoute route) {
  return grassmann_common(C, k, opt, route, false);
}

AngleEstimate modified_grassmann_angle(const Cone& C, int k, const McOptions& opt, AngleRoute route) {
  return grassmann_common(C, k, opt, route, true);
}

}  // namespace latval
