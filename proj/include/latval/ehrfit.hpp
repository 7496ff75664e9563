#pragma once

#include "latval/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace latval {

/// p(t) = Σ c_i t^i. Exact fits carry rational coefficients; estimated ones
/// carry doubles with a covariance matrix.
struct FittedPolynomial {
  int degree = 0;
  bool exact = false;
  std::vector<Rat> exact_coeffs;  // only when exact
  std::vector<double> coeffs;
  std::vector<double> se;
  std::vector<std::vector<double>> cov;

  double operator()(double t) const;
  Rat eval_exact(const Rat& t) const;
  /// Standard error of p(t) from the coefficient covariance.
  double se_at(double t) const;

  static FittedPolynomial from_exact(std::vector<Rat> c);
  static FittedPolynomial from_estimate(std::vector<double> c, std::vector<std::vector<double>> cov);
};

struct NodeValue {
  std::int64_t n = 0;
  double value = 0.0;
  double se = 0.0;
};

/// Exact interpolation on the first degree+1 nodes; any further nodes must be
/// reproduced exactly, else InconsistentValues.
FittedPolynomial fit_exact(const std::vector<std::pair<std::int64_t, Rat>>& values, int degree);
/// Weighted least squares with weights 1/se². IllConditioned when the normal
/// equations are numerically singular.
FittedPolynomial fit_statistical(const std::vector<NodeValue>& values, int degree);

/// Coefficients in the basis C(t + r - j, r), j = 0..r.
struct HStar {
  bool exact = false;
  std::vector<Rat> exact_values;
  std::vector<double> values;
  std::vector<double> se;
};

HStar to_hstar(const FittedPolynomial& p);
FittedPolynomial from_hstar(const std::vector<Rat>& h);
/// h*_j = Σ_i (-1)^i C(r+1, i) f(j - i) with f(m) = 0 for m < 0; f(0..r) given.
std::vector<Rat> hstar_from_values(const std::vector<Rat>& values_at_0_to_r);

struct ReportRow {
  std::string what;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

}  // namespace latval
