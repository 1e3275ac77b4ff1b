#include "chebdesign/simplex.hpp"

#include <cmath>
#include <stdexcept>

namespace chebdesign {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-10;

// Tableau rows 0..m-1 hold the constraints, row m the reduced costs of the
// current objective (to be minimized). Column n is the rhs.
struct Tableau {
  Eigen::MatrixXd t;
  std::vector<int> basis;
  int m, n;

  void pivot(int row, int col) {
    t.row(row) /= t(row, col);
    for (int r = 0; r <= m; ++r) {
      if (r == row) continue;
      double f = t(r, col);
      if (f != 0.0) t.row(r) -= f * t.row(row);
    }
    basis[static_cast<std::size_t>(row)] = col;
  }

  // Returns false when no entering column exists (optimal).
  bool iterate(bool bland, int max_col) {
    int col = -1;
    if (bland) {
      for (int j = 0; j < max_col; ++j)
        if (t(m, j) < -kCostTol) { col = j; break; }
    } else {
      double best = -kCostTol;
      for (int j = 0; j < max_col; ++j)
        if (t(m, j) < best) { best = t(m, j); col = j; }
    }
    if (col < 0) return false;

    int row = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < m; ++r) {
      if (t(r, col) <= kPivotTol) continue;
      double ratio = t(r, n) / t(r, col);
      if (row < 0 || ratio < best_ratio - 1e-15 ||
          (bland && std::abs(ratio - best_ratio) <= 1e-15 &&
           basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(row)])) {
        row = r;
        best_ratio = ratio;
      }
    }
    if (row < 0) throw std::runtime_error("simplex: unbounded direction");
    pivot(row, col);
    return true;
  }
};

}  // namespace

LpResult simplex_solve(const Eigen::MatrixXd& A_in, const Eigen::VectorXd& b_in,
                       const Eigen::VectorXd& c_in, bool maximize) {
  const int m = static_cast<int>(A_in.rows());
  const int n = static_cast<int>(A_in.cols());
  Eigen::MatrixXd A = A_in;
  Eigen::VectorXd b = b_in;
  Eigen::VectorXd c = maximize ? Eigen::VectorXd(-c_in) : c_in;

  for (int r = 0; r < m; ++r)
    if (b(r) < 0) { A.row(r) *= -1.0; b(r) *= -1.0; }

  // Phase 1: artificial columns n..n+m-1, minimize their sum.
  Tableau tb;
  tb.m = m;
  tb.n = n + m;
  tb.t = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
  tb.t.block(0, 0, m, n) = A;
  tb.t.block(0, n, m, m) = Eigen::MatrixXd::Identity(m, m);
  tb.t.col(n + m).head(m) = b;
  tb.basis.resize(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) tb.basis[static_cast<std::size_t>(r)] = n + r;
  // Reduced costs of the phase-1 objective.
  for (int j = 0; j < n; ++j) tb.t(m, j) = -A.col(j).sum();
  tb.t(m, n + m) = -b.sum();

  const double scale = std::max(1.0, b.lpNorm<Eigen::Infinity>());
  long iter = 0;
  const long bland_after = 5000, iter_cap = 200000;
  while (tb.iterate(iter > bland_after, n)) {
    if (++iter > iter_cap) throw std::runtime_error("simplex: iteration cap (phase 1)");
  }

  LpResult res;
  double phase1 = -tb.t(m, tb.n);
  if (phase1 > 1e-8 * scale) {
    res.status = LpStatus::Infeasible;
    res.infeasibility = phase1;
    int worst = 0;
    for (int r = 1; r < m; ++r)
      if (tb.basis[static_cast<std::size_t>(r)] >= n &&
          tb.t(r, tb.n) > tb.t(worst, tb.n))
        worst = r;
    res.worst_row = worst;
    return res;
  }

  // Drive any residual artificial variables out of the basis.
  for (int r = 0; r < m; ++r) {
    if (tb.basis[static_cast<std::size_t>(r)] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j)
      if (std::abs(tb.t(r, j)) > 1e-9) { col = j; break; }
    if (col >= 0) tb.pivot(r, col);
    // A fully zero row is redundant; the artificial stays basic at zero.
  }

  // Phase 2: rebuild the cost row for c.
  for (int j = 0; j < n + m; ++j) tb.t(m, j) = j < n ? c(j) : 0.0;
  tb.t(m, tb.n) = 0.0;
  for (int r = 0; r < m; ++r) {
    int bcol = tb.basis[static_cast<std::size_t>(r)];
    double cb = bcol < n ? c(bcol) : 0.0;
    if (cb != 0.0) tb.t.row(m) -= cb * tb.t.row(r);
  }

  iter = 0;
  try {
    while (tb.iterate(iter > bland_after, n)) {
      if (++iter > iter_cap) throw std::runtime_error("simplex: iteration cap (phase 2)");
    }
  } catch (const std::runtime_error&) {
    res.status = LpStatus::Unbounded;
    return res;
  }

  res.status = LpStatus::Optimal;
  res.x = Eigen::VectorXd::Zero(n);
  for (int r = 0; r < m; ++r) {
    int bcol = tb.basis[static_cast<std::size_t>(r)];
    if (bcol < n) res.x(bcol) = tb.t(r, tb.n);
  }
  res.basis = tb.basis;
  res.objective = c_in.dot(res.x);
  return res;
}

}  // namespace chebdesign
