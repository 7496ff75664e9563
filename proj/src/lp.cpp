#include "latval/lp.hpp"

#include <cmath>
#include <vector>

namespace latval::lp {

double infeasibility(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  if (m == 0) return 0.0;
  const double eps = 1e-13;

  // Tableau columns: x (n), artificials (m), rhs.
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
  for (int i = 0; i < m; ++i) {
    const double s = b(i) < 0 ? -1.0 : 1.0;
    T.row(i).head(n) = s * A.row(i);
    T(i, n + i) = 1.0;
    T(i, n + m) = s * b(i);
  }
  // Reduced costs of the phase-one objective (minimize Σ artificials).
  for (int i = 0; i < m; ++i) T.row(m) -= T.row(i);
  for (int i = 0; i < m; ++i) T(m, n + i) = 0.0;

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  for (int iter = 0; iter < 1000; ++iter) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (T(m, j) < -eps) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    double best = 0.0;
    for (int i = 0; i < m; ++i) {
      if (T(i, enter) <= eps) continue;
      const double r = T(i, n + m) / T(i, enter);
      if (leave < 0 || r < best - 1e-15 || (std::abs(r - best) <= 1e-15 && basis[i] < basis[leave])) {
        leave = i;
        best = r;
      }
    }
    if (leave < 0) break;  // cannot happen: the phase-one objective is bounded below
    T.row(leave) /= T(leave, enter);
    for (int i = 0; i <= m; ++i)
      if (i != leave && T(i, enter) != 0.0) T.row(i) -= T(i, enter) * T.row(leave);
    basis[leave] = enter;
  }
  return -T(m, n + m);
}

}  // namespace latval::lp
