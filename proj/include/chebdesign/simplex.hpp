#pragma once

#include <Eigen/Dense>

#include <vector>

namespace chebdesign {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Eigen::VectorXd x;        // primal solution (basic: at most m nonzeros)
  double objective = 0.0;
  std::vector<int> basis;
  double infeasibility = 0.0;  // phase-1 residual when infeasible
  int worst_row = -1;          // constraint with the largest residual
};

// Dense two-phase tableau simplex for max/min c'x s.t. Ax = b, x >= 0.
// Dantzig pricing with a switch to Bland's rule if it stalls.
LpResult simplex_solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                       const Eigen::VectorXd& c, bool maximize);

}  // namespace chebdesign
