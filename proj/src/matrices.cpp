#include "chebdesign/matrices.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace chebdesign {

Eigen::MatrixXd c_matrix(const Design& design, const ModelSpec& model) {
  const int p = model.p;
  if (model.layout.rows() != p || model.layout.cols() != p)
    throw std::invalid_argument("c_matrix: incomplete layout");
  Eigen::MatrixXd c(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = i; j < p; ++j) {
      int idx = model.layout(i, j);
      if (idx != model.layout(j, i))
        throw std::invalid_argument("c_matrix: layout not symmetric");
      double v = moment(design, model.psi, idx);
      c(i, j) = v;
      c(j, i) = v;
    }
  return c;
}

InfoMatrix info_matrix(const Design& design, const ModelSpec& model) {
  InfoMatrix m;
  m.entries = model.P * c_matrix(design, model) * model.P.transpose();
  m.theta = model.theta;
  return m;
}

const char* to_string(LoewnerOrder o) {
  switch (o) {
    case LoewnerOrder::Geq: return "GEQ";
    case LoewnerOrder::Leq: return "LEQ";
    case LoewnerOrder::Equal: return "EQUAL";
    case LoewnerOrder::Indefinite: return "INDEFINITE";
  }
  return "?";
}

LoewnerOrder loewner_compare(const Eigen::MatrixXd& m1, const Eigen::MatrixXd& m2,
                             double tol_psd) {
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols())
    throw std::invalid_argument("loewner_compare: dimension mismatch");
  double scale = std::max({m1.norm(), m2.norm(), 1e-30});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m2 - m1, Eigen::EigenvaluesOnly);
  double lo = es.eigenvalues().minCoeff();
  double hi = es.eigenvalues().maxCoeff();
  double tol = tol_psd * scale;
  bool geq = lo >= -tol;
  bool leq = hi <= tol;
  if (geq && leq) return LoewnerOrder::Equal;
  if (geq) return LoewnerOrder::Geq;
  if (leq) return LoewnerOrder::Leq;
  return LoewnerOrder::Indefinite;
}

double criterion_value(const Eigen::MatrixXd& m, Criterion which) {
  const double p = static_cast<double>(m.rows());
  switch (which) {
    case Criterion::D: {
      double d = m.determinant();
      if (d <= 0.0) return 0.0;
      return std::pow(d, 1.0 / p);
    }
    case Criterion::A: {
      Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
      if (!lu.isInvertible()) return 0.0;
      double tr = lu.inverse().trace();
      if (tr <= 0.0) return 0.0;
      return p / tr;
    }
  }
  throw std::logic_error("criterion_value: unknown criterion");
}

double min_eigenvalue(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace chebdesign
