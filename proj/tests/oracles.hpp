#pragma once

// Test-side reference computations. None of these call into the library's
// geometry, so agreement is meaningful.

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Pt = std::vector<std::int64_t>;

inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

inline double binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Pick: |P ∩ Z^2| and the interior count for a convex lattice polygon given
/// by its vertices in cyclic order.
struct PickCounts {
  std::int64_t total = 0;
  std::int64_t interior = 0;
};
inline PickCounts pick(const std::vector<Pt>& cyc, std::int64_t n = 1) {
  std::int64_t twice_area = 0, boundary = 0;
  const std::size_t m = cyc.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Pt& a = cyc[i];
    const Pt& b = cyc[(i + 1) % m];
    twice_area += n * a[0] * n * b[1] - n * b[0] * n * a[1];
    boundary += gcd(n * (b[0] - a[0]), n * (b[1] - a[1]));
  }
  twice_area = twice_area < 0 ? -twice_area : twice_area;
  const std::int64_t interior = (twice_area - boundary + 2) / 2;
  return {interior + boundary, interior};
}

/// Lattice points of n·conv(simplex) by barycentric coordinates, solved in
/// doubles with a generous margin (coordinates are small integers).
struct SimplexCounts {
  std::int64_t total = 0;
  std::int64_t interior = 0;
};
inline SimplexCounts simplex_count(const std::vector<Pt>& verts, std::int64_t n) {
  const int d = static_cast<int>(verts[0].size());
  Eigen::MatrixXd M(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) M(i, j) = static_cast<double>(n * (verts[j + 1][i] - verts[0][i]));
  const Eigen::MatrixXd Minv = M.inverse();
  std::vector<std::int64_t> lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    lo[i] = hi[i] = n * verts[0][i];
    for (const auto& v : verts) {
      lo[i] = std::min(lo[i], n * v[i]);
      hi[i] = std::max(hi[i], n * v[i]);
    }
  }
  SimplexCounts c;
  std::vector<std::int64_t> x(lo);
  while (true) {
    Eigen::VectorXd r(d);
    for (int i = 0; i < d; ++i) r(i) = static_cast<double>(x[i] - n * verts[0][i]);
    Eigen::VectorXd lam = Minv * r;
    double l0 = 1.0 - lam.sum();
    bool in = l0 > -1e-9, strict = l0 > 1e-9;
    for (int i = 0; i < d; ++i) {
      in = in && lam(i) > -1e-9;
      strict = strict && lam(i) > 1e-9;
    }
    c.total += in;
    c.interior += strict;
    int i = 0;
    while (i < d && x[i] == hi[i]) x[i] = lo[i], ++i;
    if (i == d) break;
    ++x[i];
  }
  return c;
}

/// Solid angle of a full-dimensional simplicial cone pos(g_1..g_d) by direct
/// sampling: x ∈ C iff the coordinates of x in the generator basis are >= 0.
inline double mc_simplicial_angle(const std::vector<std::vector<double>>& gens, int samples, std::uint64_t seed,
                                  double* se = nullptr) {
  const int d = static_cast<int>(gens.size());
  Eigen::MatrixXd G(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) G(i, j) = gens[j][i];
  const Eigen::MatrixXd Ginv = G.inverse();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  int hits = 0;
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXd x(d);
    for (int i = 0; i < d; ++i) x(i) = nd(rng);
    Eigen::VectorXd c = Ginv * x;
    hits += (c.array() >= 0).all();
  }
  const double p = static_cast<double>(hits) / samples;
  if (se) *se = std::sqrt(std::max(p * (1 - p), 1.0 / samples) / samples);
  return p;
}

/// Angle of the planar cone between u and v, as a fraction of the circle.
inline double planar_angle(const std::vector<double>& u, const std::vector<double>& v) {
  const double c = (u[0] * v[0] + u[1] * v[1]) / (std::hypot(u[0], u[1]) * std::hypot(v[0], v[1]));
  return std::acos(std::clamp(c, -1.0, 1.0)) / (2 * M_PI);
}

/// Solid angle of a simplicial cone in R^3 via the spherical excess (L'Huilier
/// on the three dihedral angles).
inline double spherical_triangle_fraction(const std::vector<std::vector<double>>& g) {
  auto cross = [](const std::vector<double>& a, const std::vector<double>& b) {
    return std::vector<double>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };
  auto dot = [](const std::vector<double>& a, const std::vector<double>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  };
  auto dihedral = [&](int i) {
    const auto& a = g[i];
    const auto& b = g[(i + 1) % 3];
    const auto& c = g[(i + 2) % 3];
    auto n1 = cross(a, b), n2 = cross(a, c);
    return std::acos(std::clamp(dot(n1, n2) / std::sqrt(dot(n1, n1) * dot(n2, n2)), -1.0, 1.0));
  };
  const double excess = dihedral(0) + dihedral(1) + dihedral(2) - M_PI;
  return excess / (4 * M_PI);
}

}  // namespace oracle
