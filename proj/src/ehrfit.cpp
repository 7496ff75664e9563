#include "latval/ehrfit.hpp"

#include "latval/errors.hpp"
#include "latval/linalg.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <set>

namespace latval {

double FittedPolynomial::operator()(double t) const {
  double s = 0;
  for (int i = degree; i >= 0; --i) s = s * t + coeffs[i];
  return s;
}

Rat FittedPolynomial::eval_exact(const Rat& t) const {
  if (!exact) throw InvalidArgument("polynomial has no exact coefficients");
  Rat s = 0;
  for (int i = degree; i >= 0; --i) s = s * t + exact_coeffs[i];
  return s;
}

double FittedPolynomial::se_at(double t) const {
  if (cov.empty()) return 0.0;
  std::vector<double> pw(degree + 1, 1.0);
  for (int i = 1; i <= degree; ++i) pw[i] = pw[i - 1] * t;
  double v = 0;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; j <= degree; ++j) v += pw[i] * pw[j] * cov[i][j];
  return std::sqrt(std::max(v, 0.0));
}

FittedPolynomial FittedPolynomial::from_exact(std::vector<Rat> c) {
  FittedPolynomial p;
  p.degree = static_cast<int>(c.size()) - 1;
  p.exact = true;
  for (const auto& x : c) p.coeffs.push_back(to_double(x));
  p.se.assign(c.size(), 0.0);
  p.cov.assign(c.size(), std::vector<double>(c.size(), 0.0));
  p.exact_coeffs = std::move(c);
  return p;
}

FittedPolynomial FittedPolynomial::from_estimate(std::vector<double> c, std::vector<std::vector<double>> cov) {
  FittedPolynomial p;
  p.degree = static_cast<int>(c.size()) - 1;
  p.coeffs = std::move(c);
  p.cov = std::move(cov);
  for (int i = 0; i <= p.degree; ++i) p.se.push_back(std::sqrt(std::max(p.cov[i][i], 0.0)));
  return p;
}

FittedPolynomial fit_exact(const std::vector<std::pair<std::int64_t, Rat>>& values, int degree) {
  if (degree < 0) throw InvalidArgument("degree must be non-negative");
  std::set<std::int64_t> nodes;
  for (const auto& [n, v] : values) nodes.insert(n);
  if (nodes.size() != values.size()) throw InvalidArgument("fit nodes must be distinct");
  if (static_cast<int>(values.size()) < degree + 1) throw InvalidArgument("too few nodes for the requested degree");
  const int r = degree + 1;
  linalg::Rows V(r, RatVec(r + 1));
  for (int i = 0; i < r; ++i) {
    Rat pw = 1;
    for (int j = 0; j < r; ++j) {
      V[i][j] = pw;
      pw *= Rat(static_cast<long>(values[i].first));
    }
    V[i][r] = values[i].second;
  }
  auto e = linalg::rref(V, r + 1);
  if (static_cast<int>(e.pivots.size()) != r || e.pivots.back() != r - 1) throw Error("singular Vandermonde system");
  std::vector<Rat> c(r);
  for (int i = 0; i < r; ++i) c[i] = e.rows[i][r];
  FittedPolynomial p = FittedPolynomial::from_exact(std::move(c));
  for (std::size_t i = r; i < values.size(); ++i)
    if (p.eval_exact(Rat(static_cast<long>(values[i].first))) != values[i].second)
      throw InconsistentValues("value at n = " + std::to_string(values[i].first) + " is off the degree-" +
                               std::to_string(degree) + " interpolant");
  return p;
}

FittedPolynomial fit_statistical(const std::vector<NodeValue>& values, int degree) {
  if (degree < 0) throw InvalidArgument("degree must be non-negative");
  const int m = static_cast<int>(values.size());
  const int r = degree + 1;
  if (m < r) throw InvalidArgument("too few nodes for the requested degree");
  Eigen::MatrixXd X(m, r);
  Eigen::VectorXd y(m), w(m);
  for (int i = 0; i < m; ++i) {
    if (!(values[i].se > 0)) throw InvalidArgument("statistical fit needs positive standard errors");
    double pw = 1;
    for (int j = 0; j < r; ++j) {
      X(i, j) = pw;
      pw *= static_cast<double>(values[i].n);
    }
    y(i) = values[i].value;
    w(i) = 1.0 / (values[i].se * values[i].se);
  }
  Eigen::MatrixXd N = X.transpose() * w.asDiagonal() * X;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(N);
  const auto& s = svd.singularValues();
  if (s(s.size() - 1) <= 1e-13 * s(0)) throw IllConditioned("normal equations are numerically singular");
  Eigen::MatrixXd Ninv = N.inverse();
  Eigen::VectorXd c = Ninv * (X.transpose() * w.asDiagonal() * y);
  std::vector<double> cv(c.data(), c.data() + r);
  std::vector<std::vector<double>> cov(r, std::vector<double>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) cov[i][j] = Ninv(i, j);
  return FittedPolynomial::from_estimate(std::move(cv), std::move(cov));
}

namespace {

// Column j: monomial coefficients of C(t + r - j, r).
linalg::Rows binomial_basis(int r) {
  linalg::Rows cols;
  for (int j = 0; j <= r; ++j) {
    std::vector<Rat> poly{Rat(1)};
    for (int i = 1; i <= r; ++i) {
      // multiply by (t + r - j - i + 1) / i
      const Rat a = Rat(r - j - i + 1);
      std::vector<Rat> next(poly.size() + 1, Rat(0));
      for (std::size_t e = 0; e < poly.size(); ++e) {
        next[e + 1] += poly[e] / i;
        next[e] += poly[e] * a / i;
      }
      poly = std::move(next);
    }
    cols.push_back(std::move(poly));
  }
  return cols;
}

}  // namespace

HStar to_hstar(const FittedPolynomial& p) {
  const int r = p.degree;
  linalg::Rows B = binomial_basis(r);
  // Solve Σ_j h_j B_j = c exactly.
  linalg::Rows aug(r + 1, RatVec(r + 1));
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= r; ++j) aug[i][j] = B[j][i];
  linalg::Rows inv_rows = aug;
  for (int i = 0; i <= r; ++i) {
    inv_rows[i].resize(2 * (r + 1), Rat(0));
    inv_rows[i][r + 1 + i] = 1;
  }
  auto e = linalg::rref(inv_rows, 2 * (r + 1));
  Eigen::MatrixXd Minv(r + 1, r + 1);
  linalg::Rows Mq(r + 1, RatVec(r + 1));
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= r; ++j) {
      Mq[i][j] = e.rows[i][r + 1 + j];
      Minv(i, j) = to_double(Mq[i][j]);
    }
  HStar h;
  h.exact = p.exact;
  if (p.exact) {
    for (int i = 0; i <= r; ++i) {
      Rat s = 0;
      for (int j = 0; j <= r; ++j) s += Mq[i][j] * p.exact_coeffs[j];
      h.exact_values.push_back(s);
      h.values.push_back(to_double(s));
      h.se.push_back(0.0);
    }
    return h;
  }
  Eigen::VectorXd c(r + 1);
  Eigen::MatrixXd S(r + 1, r + 1);
  for (int i = 0; i <= r; ++i) {
    c(i) = p.coeffs[i];
    for (int j = 0; j <= r; ++j) S(i, j) = p.cov.empty() ? 0.0 : p.cov[i][j];
  }
  Eigen::VectorXd hv = Minv * c;
  Eigen::MatrixXd hs = Minv * S * Minv.transpose();
  for (int i = 0; i <= r; ++i) {
    h.values.push_back(hv(i));
    h.se.push_back(std::sqrt(std::max(hs(i, i), 0.0)));
  }
  return h;
}

FittedPolynomial from_hstar(const std::vector<Rat>& h) {
  const int r = static_cast<int>(h.size()) - 1;
  linalg::Rows B = binomial_basis(r);
  std::vector<Rat> c(r + 1, Rat(0));
  for (int j = 0; j <= r; ++j)
    for (int i = 0; i <= r; ++i) c[i] += h[j] * B[j][i];
  return FittedPolynomial::from_exact(std::move(c));
}

std::vector<Rat> hstar_from_values(const std::vector<Rat>& f) {
  const int r = static_cast<int>(f.size()) - 1;
  std::vector<Rat> h(r + 1, Rat(0));
  for (int j = 0; j <= r; ++j) {
    Int binom = 1;  // C(r+1, i)
    for (int i = 0; i <= j; ++i) {
      if (i > 0) binom = binom * (r + 2 - i) / i;
      const Rat term = Rat(binom) * f[j - i];
      h[j] += (i % 2 == 0) ? term : Rat(-term);
    }
  }
  return h;
}

}  // namespace latval
