#pragma once

#include <Eigen/Dense>

// Small dense simplex for the feasibility tests behind the Grassmann angles.
namespace latval::lp {

/// min Σ a_i over {A x + a = b, x >= 0, a >= 0}: zero iff {A x = b, x >= 0}
/// is feasible. Phase one of the simplex method with Bland's rule.
double infeasibility(const Eigen::MatrixXd& A, const Eigen::VectorXd& b);

}  // namespace latval::lp
