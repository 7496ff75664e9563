#pragma once

#include "latval/cone.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace latval {

/// A probability-valued angle. Exact values are closed-form doubles with se 0.
struct AngleEstimate {
  double value = 0.0;
  bool exact = false;
  double se = 0.0;  // standard error
  std::int64_t samples = 0;
  std::uint64_t seed = 0;

  static AngleEstimate exact_value(double v) { return {v, true, 0.0, 0, 0}; }
};

/// Bernoulli standard error sqrt(max(p(1-p), 1/N) / N).
double bernoulli_se(double p, std::int64_t n);

/// υ_0 .. υ_d. MC estimates share one multinomial sample, so linear
/// combinations need the covariance, which combination_se() supplies.
struct IntrinsicVolumeVector {
  std::vector<AngleEstimate> v;
  bool exact = false;
  std::int64_t samples = 0;

  double sum() const;
  double combination(const std::vector<double>& c) const;
  double combination_se(const std::vector<double>& c) const;
};

struct McOptions {
  std::int64_t samples = 200000;
  std::uint64_t seed = 0;
  int threads = 0;  // 0: all logical cores
};

enum class AngleRoute {
  Auto,        // closed form when the pointed part has dim <= 3, else Monte Carlo
  Exact,       // closed form or throw
  MonteCarlo,  // sample even when a closed form exists
};

/// α(C), measured inside lin C. α({0}) = 1.
AngleEstimate solid_angle(const Cone& C, const McOptions& opt = {}, AngleRoute route = AngleRoute::Auto);
std::optional<double> exact_solid_angle(const Cone& C);

IntrinsicVolumeVector conic_intrinsic_volumes(const Cone& C, const McOptions& opt = {},
                                              AngleRoute route = AngleRoute::Auto);
/// Σ_{F ∈ F_k} α(F) α(N_F(C)), when every angle involved has a closed form.
std::optional<std::vector<double>> exact_intrinsic_volumes(const Cone& C);

/// γ_k(C) = P[C ∩ W_{d-k} ≠ {0}].
AngleEstimate grassmann_angle(const Cone& C, int k, const McOptions& opt = {}, AngleRoute route = AngleRoute::Auto);
/// α_k(C) = P[C ∩ W^+_{d-k} ≠ {0}].
AngleEstimate modified_grassmann_angle(const Cone& C, int k, const McOptions& opt = {},
                                       AngleRoute route = AngleRoute::Auto);

/// Double-precision Moreau face classifier used by the υ sampler; exposed for
/// tests. Returns the face index of Π_C(x), or -1 inside the tolerance band.
class MoreauClassifier {
 public:
  explicit MoreauClassifier(const Cone& C, double tol = 1e-9);
  int classify(const std::vector<double>& x) const;
  int face_dim(int f) const { return dims_[f]; }

 private:
  int d_;
  double tol_;
  std::vector<std::vector<double>> proj_;              // row-major d×d per face
  std::vector<std::vector<std::vector<double>>> out_facets_;  // unit normals of facets not containing F
  std::vector<std::vector<std::vector<double>>> out_rays_;    // unit rays not in F
  std::vector<int> dims_;
};

}  // namespace latval
