#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace chebdesign {

// Truncated Taylor expansion of a function around an (implicit) point x0.
// Coefficient i stores f^(i)(x0)/i!, so arithmetic on Taylor values
// propagates all derivatives up to the truncation order.
class Taylor {
public:
  Taylor() : c_(1, 0.0) {}

  explicit Taylor(std::vector<double> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.assign(1, 0.0);
  }

  static Taylor constant(double v, std::size_t order) {
    std::vector<double> c(order + 1, 0.0);
    c[0] = v;
    return Taylor(std::move(c));
  }

  // The identity function x, expanded at x0.
  static Taylor variable(double x0, std::size_t order) {
    std::vector<double> c(order + 1, 0.0);
    c[0] = x0;
    if (order >= 1) c[1] = 1.0;
    return Taylor(std::move(c));
  }

  std::size_t order() const { return c_.size() - 1; }
  double value() const { return c_[0]; }

  double coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0.0; }

  // m-th derivative at the expansion point: m! * c_m.
  double derivative(std::size_t m) const {
    if (m > order())
      throw std::out_of_range("Taylor::derivative: order exceeds truncation");
    double f = 1.0;
    for (std::size_t i = 2; i <= m; ++i) f *= static_cast<double>(i);
    return f * c_[m];
  }

  // Formal derivative; the truncation order drops by one.
  Taylor deriv() const {
    if (order() == 0) return constant(0.0, 0);
    std::vector<double> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      d[i - 1] = static_cast<double>(i) * c_[i];
    return Taylor(std::move(d));
  }

  // Formal antiderivative with given constant term; order grows by one.
  Taylor integral(double c0) const {
    std::vector<double> v(c_.size() + 1);
    v[0] = c0;
    for (std::size_t i = 0; i < c_.size(); ++i)
      v[i + 1] = c_[i] / static_cast<double>(i + 1);
    return Taylor(std::move(v));
  }

  Taylor truncated(std::size_t new_order) const {
    std::vector<double> v(c_.begin(),
                          c_.begin() + std::min(c_.size(), new_order + 1));
    v.resize(new_order + 1, 0.0);
    return Taylor(std::move(v));
  }

  Taylor operator-() const {
    std::vector<double> v(c_);
    for (double& x : v) x = -x;
    return Taylor(std::move(v));
  }

  friend Taylor operator+(const Taylor& a, const Taylor& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<double> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) v[i] = a.c_[i] + b.c_[i];
    return Taylor(std::move(v));
  }
  friend Taylor operator-(const Taylor& a, const Taylor& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<double> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) v[i] = a.c_[i] - b.c_[i];
    return Taylor(std::move(v));
  }
  friend Taylor operator*(const Taylor& a, const Taylor& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<double> v(n + 1, 0.0);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; i + j <= n; ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Taylor(std::move(v));
  }
  friend Taylor operator/(const Taylor& a, const Taylor& b) {
    if (b.c_[0] == 0.0)
      throw std::domain_error("Taylor division by series with zero value");
    std::size_t n = std::min(a.order(), b.order());
    std::vector<double> v(n + 1, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      double s = a.c_[i];
      for (std::size_t j = 1; j <= i; ++j) s -= b.c_[j] * v[i - j];
      v[i] = s / b.c_[0];
    }
    return Taylor(std::move(v));
  }

  friend Taylor operator+(const Taylor& a, double s) {
    std::vector<double> v(a.c_);
    v[0] += s;
    return Taylor(std::move(v));
  }
  friend Taylor operator+(double s, const Taylor& a) { return a + s; }
  friend Taylor operator-(const Taylor& a, double s) { return a + (-s); }
  friend Taylor operator-(double s, const Taylor& a) { return (-a) + s; }
  friend Taylor operator*(const Taylor& a, double s) {
    std::vector<double> v(a.c_);
    for (double& x : v) x *= s;
    return Taylor(std::move(v));
  }
  friend Taylor operator*(double s, const Taylor& a) { return a * s; }
  friend Taylor operator/(const Taylor& a, double s) { return a * (1.0 / s); }

private:
  std::vector<double> c_;
};

inline Taylor exp(const Taylor& a) {
  std::size_t n = a.order();
  std::vector<double> e(n + 1, 0.0);
  e[0] = std::exp(a.coeff(0));
  for (std::size_t i = 1; i <= n; ++i) {
    double s = 0.0;
    for (std::size_t j = 1; j <= i; ++j)
      s += static_cast<double>(j) * a.coeff(j) * e[i - j];
    e[i] = s / static_cast<double>(i);
  }
  return Taylor(std::move(e));
}

inline Taylor log(const Taylor& a) {
  if (a.value() <= 0.0)
    throw std::domain_error("Taylor log of non-positive value");
  std::size_t n = a.order();
  std::vector<double> l(n + 1, 0.0);
  l[0] = std::log(a.value());
  for (std::size_t i = 1; i <= n; ++i) {
    double s = static_cast<double>(i) * a.coeff(i);
    for (std::size_t j = 1; j < i; ++j)
      s -= static_cast<double>(j) * l[j] * a.coeff(i - j);
    l[i] = s / (static_cast<double>(i) * a.coeff(0));
  }
  return Taylor(std::move(l));
}

// Integer power by repeated multiplication; valid for any base value.
inline Taylor pow(const Taylor& a, int n) {
  if (n < 0) return Taylor::constant(1.0, a.order()) / pow(a, -n);
  Taylor r = Taylor::constant(1.0, a.order());
  Taylor base = a;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

// Real power via exp/log; requires a positive base value.
inline Taylor pow(const Taylor& a, double p) {
  return exp(p * log(a));
}

inline void sincos(const Taylor& a, Taylor& s_out, Taylor& c_out) {
  std::size_t n = a.order();
  std::vector<double> s(n + 1, 0.0), c(n + 1, 0.0);
  s[0] = std::sin(a.value());
  c[0] = std::cos(a.value());
  for (std::size_t i = 1; i <= n; ++i) {
    double ss = 0.0, cc = 0.0;
    for (std::size_t j = 1; j <= i; ++j) {
      double ja = static_cast<double>(j) * a.coeff(j);
      ss += ja * c[i - j];
      cc -= ja * s[i - j];
    }
    s[i] = ss / static_cast<double>(i);
    c[i] = cc / static_cast<double>(i);
  }
  s_out = Taylor(std::move(s));
  c_out = Taylor(std::move(c));
}

inline Taylor sin(const Taylor& a) {
  Taylor s, c;
  sincos(a, s, c);
  return s;
}

inline Taylor cos(const Taylor& a) {
  Taylor s, c;
  sincos(a, s, c);
  return c;
}

}  // namespace chebdesign
