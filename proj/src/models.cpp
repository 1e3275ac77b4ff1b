#include "chebdesign/models.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace chebdesign {

double RationalInfo::q(double x) const {
  double v = 1.0, xp = 1.0;
  for (double c : denominator) {
    xp *= x;
    v += c * xp;
  }
  return v;
}

Taylor RationalInfo::q(const Taylor& x) const {
  Taylor v = Taylor::constant(1.0, x.order());
  Taylor xp = Taylor::constant(1.0, x.order());
  for (double c : denominator) {
    xp = xp * x;
    v = v + c * xp;
  }
  return v;
}

ModelSpec polynomial_model(int degree, const IntervalDomain& domain) {
  if (degree < 1)
    throw std::invalid_argument("polynomial_model: degree must be >= 1");
  ModelSpec m;
  m.p = degree + 1;
  m.domain = domain;
  std::ostringstream os;
  os << "polynomial(degree=" << degree << ")";
  m.name = os.str();
  m.psi = monomial_system(2 * m.p - 2);
  m.psi.diag_index = m.p;
  m.layout.resize(m.p, m.p);
  for (int i = 0; i < m.p; ++i)
    for (int j = 0; j < m.p; ++j) m.layout(i, j) = i + j;
  m.P = Eigen::MatrixXd::Identity(m.p, m.p);
  return m;
}

namespace {

PsiFunction efficiency_function(const Efficiency& eff) {
  switch (eff.kind) {
    case Efficiency::Kind::ExpX2:
      return [](const Taylor& x) { return exp(x * x); };
    case Efficiency::Kind::Jacobi: {
      double a = eff.alpha + 1.0, b = eff.beta + 1.0;
      return [a, b](const Taylor& x) {
        Taylor t1 = 1.0 - x, t2 = 1.0 + x;
        if (t1.value() <= 0.0 || t2.value() <= 0.0) {
          // lambda -> 0 at the endpoints; derivatives may be unbounded there.
          if (x.order() == 0) return Taylor::constant(0.0, 0);
          throw std::domain_error("Jacobi efficiency: derivatives singular at the boundary");
        }
        return pow(t1, a) * pow(t2, b);
      };
    }
    case Efficiency::Kind::InversePower: {
      double n = eff.n;
      return [n](const Taylor& x) { return pow(1.0 + x, -n); };
    }
  }
  throw std::logic_error("efficiency_function: unknown kind");
}

PsiFunction companion_g(const Efficiency& eff) {
  switch (eff.kind) {
    case Efficiency::Kind::ExpX2:
      return [](const Taylor& x) { return exp(x * x); };
    case Efficiency::Kind::Jacobi: {
      double a = eff.alpha, b = eff.beta;
      return [a, b](const Taylor& x) { return pow(1.0 - x, a) * pow(1.0 + x, b); };
    }
    case Efficiency::Kind::InversePower: {
      double e = eff.n + 2.0;
      return [e](const Taylor& x) { return pow(1.0 + x, -e); };
    }
  }
  throw std::logic_error("companion_g: unknown kind");
}

}  // namespace

ModelSpec weighted_polynomial_model(int p, const Efficiency& eff,
                                    const IntervalDomain& domain) {
  if (p < 2) throw std::invalid_argument("weighted_polynomial_model: p < 2");
  switch (eff.kind) {
    case Efficiency::Kind::ExpX2:
      break;
    case Efficiency::Kind::Jacobi:
      if (eff.alpha <= -1.0 || eff.beta <= -1.0)
        throw std::invalid_argument("Jacobi efficiency needs alpha, beta > -1");
      if (domain.A < -1.0 || domain.B > 1.0)
        throw std::invalid_argument("Jacobi efficiency needs [A,B] inside [-1,1]");
      break;
    case Efficiency::Kind::InversePower:
      if (domain.A <= -1.0)
        throw std::invalid_argument("inverse-power efficiency needs A > -1");
      if (!(eff.n > 2.0 * p - 2.0))
        throw std::invalid_argument("inverse-power efficiency needs n > 2p-2");
      break;
  }

  ModelSpec m;
  m.p = p;
  m.domain = domain;
  m.name = "weighted_polynomial";
  PsiFunction lam = efficiency_function(eff);
  const int k = 2 * p - 1;
  m.psi.k = k;
  m.psi.diag_index = p;
  for (int j = 1; j <= k; ++j) {
    m.psi.funcs.push_back([lam, j](const Taylor& x) { return lam(x) * pow(x, j - 1); });
    std::ostringstream os;
    os << "lambda(x)*x^" << j - 1;
    m.psi.labels.push_back(os.str());
  }
  m.layout.resize(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) m.layout(i, j) = i + j + 1;
  m.P = Eigen::MatrixXd::Identity(p, p);
  m.weighted = WeightedInfo{eff, lam, companion_g(eff)};
  return m;
}

ModelSpec rational_model(int l, int s, const std::vector<double>& theta,
                         const IntervalDomain& domain) {
  if (l < 1 || s < 1)
    throw std::invalid_argument("rational_model: need l >= 1 and s >= 1");
  if (static_cast<int>(theta.size()) != l + s)
    throw std::invalid_argument("rational_model: theta must have l + s entries");

  RationalInfo info;
  info.l = l;
  info.s = s;
  info.numerator.assign(theta.begin(), theta.begin() + l);
  info.denominator.assign(theta.begin() + l, theta.end());

  std::vector<double> qc(static_cast<std::size_t>(s) + 1);
  qc[0] = 1.0;
  for (int i = 0; i < s; ++i) qc[static_cast<std::size_t>(i) + 1] = info.denominator[static_cast<std::size_t>(i)];
  bool all_real = false;
  std::vector<double> roots = real_roots(qc, all_real);
  for (double r : roots)
    if (r >= domain.A - 1e-12 * domain.width() && r <= domain.B + 1e-12 * domain.width()) {
      std::ostringstream os;
      os << "rational_model: Q has a root at " << r << " inside the design interval";
      throw std::invalid_argument(os.str());
    }

  ModelSpec m;
  m.p = l + s;
  m.domain = domain;
  m.name = "rational";
  m.theta = Eigen::Map<const Eigen::VectorXd>(theta.data(), static_cast<Eigen::Index>(theta.size()));
  const int k = 2 * m.p - 1;
  m.psi.k = k;
  m.psi.diag_index = m.p;
  for (int j = 1; j <= k; ++j) {
    RationalInfo cap = info;
    m.psi.funcs.push_back([cap, j](const Taylor& x) {
      return pow(x, j - 1) / pow(cap.q(x), 4);
    });
    std::ostringstream os;
    os << "x^" << j - 1 << "/Q^4";
    m.psi.labels.push_back(os.str());
  }
  m.layout.resize(m.p, m.p);
  for (int i = 0; i < m.p; ++i)
    for (int j = 0; j < m.p; ++j) m.layout(i, j) = i + j + 1;
  // The congruence factor of M = B C B is model-supplied; dominance
  // comparisons are invariant to it, so the default is the identity.
  m.P = Eigen::MatrixXd::Identity(m.p, m.p);
  m.rational = info;
  return m;
}

PsiSystem rational_companion_system(const ModelSpec& model) {
  if (!model.rational)
    throw std::invalid_argument("rational_companion_system: not a rational model");
  RationalInfo info = *model.rational;
  const int k = model.psi.k;
  PsiSystem sys;
  sys.k = k;
  for (int j = 1; j < k; ++j) {
    sys.funcs.push_back([j](const Taylor& x) { return pow(x, j); });
    std::ostringstream os;
    os << "x^" << j;
    sys.labels.push_back(os.str());
  }
  sys.funcs.push_back([info](const Taylor& x) { return pow(info.q(x), 4); });
  sys.labels.push_back("Q^4");
  return sys;
}

const char* to_string(LemmaPrediction p) {
  switch (p) {
    case LemmaPrediction::ChebPlusExpected: return "CHEB_PLUS_EXPECTED";
    case LemmaPrediction::ChebMinusExpected: return "CHEB_MINUS_EXPECTED";
    case LemmaPrediction::NotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

LemmaPrediction check_root_condition(const ModelSpec& model) {
  if (!model.rational)
    throw std::invalid_argument("check_root_condition: not a rational model");
  const RationalInfo& info = *model.rational;
  if (!(info.s > info.l - 1)) return LemmaPrediction::NotApplicable;

  std::vector<double> qc(static_cast<std::size_t>(info.s) + 1);
  qc[0] = 1.0;
  for (int i = 0; i < info.s; ++i)
    qc[static_cast<std::size_t>(i) + 1] = info.denominator[static_cast<std::size_t>(i)];
  bool all_real = false;
  std::vector<double> roots = real_roots(qc, all_real);
  if (!all_real || roots.empty()) return LemmaPrediction::NotApplicable;

  const double band = 1e-9 * std::max(1.0, model.domain.width());
  bool below = true, above = true;
  for (double r : roots) {
    if (!(r < model.domain.A - band)) below = false;
    if (!(r > model.domain.B + band)) above = false;
  }
  if (below) return LemmaPrediction::ChebPlusExpected;
  if (above) return LemmaPrediction::ChebMinusExpected;
  return LemmaPrediction::NotApplicable;
}

LemmaPrediction expected_psi_orientation(const ModelSpec& model) {
  switch (check_root_condition(model)) {
    case LemmaPrediction::ChebPlusExpected:
      return LemmaPrediction::ChebMinusExpected;
    case LemmaPrediction::ChebMinusExpected:
      return LemmaPrediction::ChebPlusExpected;
    case LemmaPrediction::NotApplicable:
      return LemmaPrediction::NotApplicable;
  }
  return LemmaPrediction::NotApplicable;
}

GarzResult verify_constant_derivative_condition(const PsiFunction& lambda_fn,
                                                const PsiFunction& g_fn, int p,
                                                const IntervalDomain& domain,
                                                int grid_n, double tol) {
  if (p < 2) throw std::invalid_argument("constant-derivative check: p < 2");
  grid_n = std::max(grid_n, 5);
  const int kmax = 2 * p - 1;
  // Interior grid; the efficiency or g may be singular at the endpoints.
  const double inset = 1e-4 * domain.width();

  GarzResult out;
  for (int j = 1; j <= kmax; ++j) {
    const std::size_t order = static_cast<std::size_t>(j) + 2;
    std::vector<double> vals(static_cast<std::size_t>(grid_n));
    for (int i = 0; i < grid_n; ++i) {
      double x = domain.A + inset +
                 (domain.width() - 2 * inset) * i / static_cast<double>(grid_n - 1);
      Taylor xt = Taylor::variable(x, order);
      Taylor num = (lambda_fn(xt) * pow(xt, j - 1)).deriv();
      Taylor ratio = num / g_fn(xt).truncated(num.order());
      vals[static_cast<std::size_t>(i)] = ratio.derivative(static_cast<std::size_t>(j));
    }
    std::vector<double> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    double c = sorted[sorted.size() / 2];
    double dev = 0.0;
    for (double v : vals) dev = std::max(dev, std::abs(v - c) / (1.0 + std::abs(c)));
    out.max_deviation = std::max(out.max_deviation, dev);
    if (dev > tol) {
      std::ostringstream os;
      os << "constant-derivative condition violated at j = " << j
         << " (relative deviation " << dev << ")";
      throw std::runtime_error(os.str());
    }
    if (std::abs(c) <= tol) {
      std::ostringstream os;
      os << "constant-derivative condition degenerate at j = " << j << " (c_j ~ 0)";
      throw std::runtime_error(os.str());
    }
    out.constants.push_back(c);
  }
  return out;
}

GarzResult verify_constant_derivative_condition(const ModelSpec& model,
                                                int grid_n, double tol) {
  if (!model.weighted)
    throw std::invalid_argument("constant-derivative check: not a weighted model");
  return verify_constant_derivative_condition(model.weighted->lambda_fn,
                                              model.weighted->g_fn, model.p,
                                              model.domain, grid_n, tol);
}

PsiSystem transformed_weighted_system(const ModelSpec& model) {
  if (!model.weighted)
    throw std::invalid_argument("transformed_weighted_system: not a weighted model");
  PsiFunction g = model.weighted->g_fn;
  PsiFunction lam = model.weighted->lambda_fn;
  const double a = model.domain.A;

  // Antiderivative of g from A, via fixed Gauss-Legendre panels for the
  // value; higher jet coefficients come from the series of g itself.
  auto g_val = [g](double x) { return g(Taylor::constant(x, 0)).value(); };
  PsiFunction u1 = [g, g_val, a](const Taylor& x) {
    static const double gl_x[4] = {-0.8611363115940526, -0.3399810435848563,
                                   0.3399810435848563, 0.8611363115940526};
    static const double gl_w[4] = {0.3478548451374538, 0.6521451548625461,
                                   0.6521451548625461, 0.3478548451374538};
    double lo = a, hi = x.value(), total = 0.0;
    const int panels = 32;
    for (int p = 0; p < panels; ++p) {
      double pa = lo + (hi - lo) * p / panels;
      double pb = lo + (hi - lo) * (p + 1) / panels;
      double mid = 0.5 * (pa + pb), half = 0.5 * (pb - pa);
      for (int q = 0; q < 4; ++q) total += gl_w[q] * half * g_val(mid + half * gl_x[q]);
    }
    if (x.order() == 0) return Taylor::constant(total, 0);
    return g(x.truncated(x.order() - 1)).integral(total);
  };

  const int k = 2 * model.p - 1;
  PsiSystem sys;
  sys.k = k + 1;
  sys.funcs.push_back(u1);
  sys.labels.push_back("int_A^x g");
  for (int j = 1; j <= k; ++j) {
    sys.funcs.push_back([lam, j](const Taylor& x) { return lam(x) * pow(x, j - 1); });
    std::ostringstream os;
    os << "lambda(x)*x^" << j - 1;
    sys.labels.push_back(os.str());
  }
  return sys;
}

std::vector<double> real_roots(const std::vector<double>& ascending_coeffs,
                               bool& all_real) {
  std::vector<double> c = ascending_coeffs;
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
  all_real = true;
  if (c.size() <= 1) return {};
  const int deg = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("real_roots: eigen decomposition failed");
  std::vector<double> roots;
  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::abs(v));
  for (int i = 0; i < deg; ++i) {
    std::complex<double> z = es.eigenvalues()(i);
    if (std::abs(z.imag()) > 1e-8 * std::max(1.0, std::abs(z.real()))) {
      all_real = false;
      continue;
    }
    roots.push_back(z.real());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace chebdesign
