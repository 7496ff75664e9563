#pragma once

#include "latval/cone.hpp"
#include "latval/valuations.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace latval {

struct Claim {
  std::string description;
  std::string reference;  // which named result the expected value comes from
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ExperimentReport {
  std::string name;
  std::map<std::string, std::string> inputs;
  std::vector<Claim> claims;
  std::vector<std::string> notes;  // findings that are not pass/fail claims
  double runtime_s = 0.0;

  bool passed() const;
  /// |observed - expected| <= tolerance.
  Claim& check(std::string description, std::string reference, double expected, double observed, double tolerance);
  /// `condition` recorded as a 0/1 claim; a nonzero `observed` is quoted in the description.
  Claim& check_true(std::string description, std::string reference, bool condition, double observed = 0.0);
  /// Bit-exact rational equality.
  Claim& check_exact(std::string description, std::string reference, const Rat& expected, const Rat& observed);
};

/// conv{0, e_1, e_2, (1, 1, h)}.
Polytope reeve_tetrahedron(std::int64_t h);
Polytope unit_cube(int d);
Polytope standard_simplex(int d);

/// Sum of the vertex solid angles of Δ_h, from the closed-form 3D engine.
double reeve_vertex_angle_sum(std::int64_t h);

struct ExperimentOptions {
  McOptions mc;
  double nsigma = 3.0;
};

ExperimentReport run_reeve(std::int64_t h, const ExperimentOptions& opt);
ExperimentReport run_negativity_witness(int d, int k, const ExperimentOptions& opt);
ExperimentReport run_conjecture_scan(int max_dim, int trials, const ExperimentOptions& opt);
ExperimentReport run_gauss_image(const Cone& C, int k, int trials, const ExperimentOptions& opt);

/// Random test fixtures.
Cone random_cone(int d, std::mt19937_64& rng);
Polytope random_polytope(int d, int npoints, int box, std::mt19937_64& rng);

}  // namespace latval
