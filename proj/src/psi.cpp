#include "chebdesign/psi.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace chebdesign {

double PsiSystem::value(int i, double x) const {
  if (i == 0) return 1.0;
  return series(i, x, 0).value();
}

Taylor PsiSystem::series(int i, double x, std::size_t order) const {
  if (i < 0 || i > k)
    throw std::out_of_range("PsiSystem: function index out of range");
  if (i == 0) return Taylor::constant(1.0, order);
  return funcs[static_cast<std::size_t>(i - 1)](Taylor::variable(x, order));
}

PsiSystem PsiSystem::flipped_last() const {
  PsiSystem out = *this;
  PsiFunction last = out.funcs.back();
  out.funcs.back() = [last](const Taylor& x) { return -last(x); };
  if (!out.labels.empty()) out.labels.back() = "-(" + out.labels.back() + ")";
  return out;
}

PsiFunction finite_difference_function(std::function<double(double)> f) {
  return [f](const Taylor& x) {
    const std::size_t n = x.order();
    const double x0 = x.value();
    std::vector<double> c(n + 1, 0.0);
    c[0] = f(x0);
    double fact = 1.0;
    for (std::size_t m = 1; m <= n; ++m) {
      fact *= static_cast<double>(m);
      // Central difference for the m-th derivative on an m+1 point stencil,
      // step chosen to balance truncation and roundoff.
      const double eps = 2.2e-16;
      const double h =
          std::pow(eps, 1.0 / static_cast<double>(m + 2)) * std::max(1.0, std::abs(x0));
      double s = 0.0;
      double binom = 1.0;
      for (std::size_t i = 0; i <= m; ++i) {
        double node = x0 + (static_cast<double>(m) / 2.0 - static_cast<double>(i)) * h;
        s += ((i % 2 == 0) ? 1.0 : -1.0) * binom * f(node);
        binom *= static_cast<double>(m - i) / static_cast<double>(i + 1);
      }
      c[m] = s / (std::pow(h, static_cast<double>(m)) * fact);
    }
    return Taylor(std::move(c));
  };
}

PsiSystem monomial_system(int k) {
  if (k < 1) throw std::invalid_argument("monomial_system: k < 1");
  PsiSystem sys;
  sys.k = k;
  sys.analytic = true;
  for (int j = 1; j <= k; ++j) {
    sys.funcs.push_back([j](const Taylor& x) { return pow(x, j); });
    std::ostringstream os;
    os << "x^" << j;
    sys.labels.push_back(os.str());
  }
  return sys;
}

double moment(const Design& design, const PsiSystem& psi, int i) {
  if (i < 0 || i > psi.k)
    throw std::out_of_range("moment: index out of range");
  if (i == 0) return 1.0;
  double s = 0.0;
  for (std::size_t j = 0; j < design.size(); ++j) {
    double v = psi.value(i, design.support()[j]);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "moment: Psi_" << i << " non-finite at x = " << design.support()[j];
      throw std::runtime_error(os.str());
    }
    s += design.weights()[j] * v;
  }
  return s;
}

std::vector<double> moment_vector(const Design& design, const PsiSystem& psi,
                                  int order) {
  if (order < 0 || order > psi.k)
    throw std::out_of_range("moment_vector: order out of range");
  std::vector<double> d(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) d[static_cast<std::size_t>(i)] = moment(design, psi, i);
  return d;
}

}  // namespace chebdesign
