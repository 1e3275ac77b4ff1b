#pragma once

#include <Eigen/Dense>

#include "chebdesign/design.hpp"
#include "chebdesign/models.hpp"

namespace chebdesign {

struct InfoMatrix {
  Eigen::MatrixXd entries;
  Eigen::VectorXd theta;
};

// Entry (i, j) is the design moment of the Psi function named by the
// model's layout.
Eigen::MatrixXd c_matrix(const Design& design, const ModelSpec& model);

// P * C * P^T.
InfoMatrix info_matrix(const Design& design, const ModelSpec& model);

enum class LoewnerOrder { Geq, Leq, Equal, Indefinite };
const char* to_string(LoewnerOrder o);

// Classify M2 - M1 by its eigenvalues: all >= -tol -> Geq (M2 dominates),
// all <= tol -> Leq, both -> Equal, otherwise Indefinite. The tolerance is
// relative to the larger matrix norm.
LoewnerOrder loewner_compare(const Eigen::MatrixXd& m1, const Eigen::MatrixXd& m2,
                             double tol_psd = 1e-9);

enum class Criterion { D, A };

// D: det(M)^{1/p}. A: (trace(M^{-1})/p)^{-1}, 0 for singular M.
double criterion_value(const Eigen::MatrixXd& m, Criterion which);

double min_eigenvalue(const Eigen::MatrixXd& m);

}  // namespace chebdesign
