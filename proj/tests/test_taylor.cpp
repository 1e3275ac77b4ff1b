#include <doctest.h>

#include <cmath>

#include "chebdesign/taylor.hpp"

using chebdesign::Taylor;

TEST_CASE("jet of the identity carries value and first derivative") {
  Taylor x = Taylor::variable(0.7, 4);
  CHECK(x.value() == doctest::Approx(0.7));
  CHECK(x.derivative(1) == doctest::Approx(1.0));
  CHECK(x.derivative(2) == doctest::Approx(0.0));
}

TEST_CASE("polynomial arithmetic reproduces hand-computed derivatives") {
  // f(x) = (x^2 + 1)(x - 3): f' = 3x^2 - 6x + 1, f'' = 6x - 6
  Taylor x = Taylor::variable(2.0, 3);
  Taylor f = (x * x + 1.0) * (x - 3.0);
  CHECK(f.value() == doctest::Approx(-5.0));
  CHECK(f.derivative(1) == doctest::Approx(3 * 4 - 12 + 1));
  CHECK(f.derivative(2) == doctest::Approx(6 * 2 - 6));
  CHECK(f.derivative(3) == doctest::Approx(6.0));
}

TEST_CASE("division round-trips") {
  Taylor x = Taylor::variable(0.3, 6);
  Taylor a = exp(x) + 2.0;
  Taylor b = x * x + 1.0;
  Taylor q = a / b;
  Taylor back = q * b;
  for (std::size_t i = 0; i <= 6; ++i)
    CHECK(back.coeff(i) == doctest::Approx(a.coeff(i)).epsilon(1e-12));
}

TEST_CASE("exp and log derivatives match closed forms") {
  Taylor x = Taylor::variable(0.5, 5);
  Taylor e = exp(x * x);
  // (e^{x^2})' = 2x e^{x^2}, '' = (2 + 4x^2) e^{x^2}
  double v = std::exp(0.25);
  CHECK(e.value() == doctest::Approx(v));
  CHECK(e.derivative(1) == doctest::Approx(1.0 * v));
  CHECK(e.derivative(2) == doctest::Approx(3.0 * v));

  Taylor l = log(1.0 + x);
  CHECK(l.value() == doctest::Approx(std::log(1.5)));
  CHECK(l.derivative(1) == doctest::Approx(1.0 / 1.5));
  CHECK(l.derivative(2) == doctest::Approx(-1.0 / 2.25));
}

TEST_CASE("integer and real powers agree on positive bases") {
  Taylor x = Taylor::variable(1.7, 5);
  Taylor a = pow(x, 3);
  Taylor b = pow(x, 3.0);
  for (std::size_t i = 0; i <= 5; ++i)
    CHECK(a.coeff(i) == doctest::Approx(b.coeff(i)).epsilon(1e-12));
  // negative integer power
  Taylor inv = pow(x, -2);
  CHECK(inv.value() == doctest::Approx(1.0 / (1.7 * 1.7)));
  CHECK(inv.derivative(1) == doctest::Approx(-2.0 / std::pow(1.7, 3)));
}

TEST_CASE("sin and cos satisfy the derivative identities") {
  Taylor x = Taylor::variable(0.9, 6);
  Taylor s = sin(x), c = cos(x);
  CHECK(s.derivative(1) == doctest::Approx(std::cos(0.9)));
  CHECK(c.derivative(1) == doctest::Approx(-std::sin(0.9)));
  Taylor unit = s * s + c * c;
  CHECK(unit.value() == doctest::Approx(1.0));
  for (std::size_t i = 1; i <= 6; ++i)
    CHECK(unit.coeff(i) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("formal derivative and antiderivative are inverse") {
  Taylor x = Taylor::variable(0.2, 5);
  Taylor f = exp(x) * (x + 2.0);
  Taylor g = f.deriv().integral(f.value());
  for (std::size_t i = 0; i <= 4; ++i)
    CHECK(g.coeff(i) == doctest::Approx(f.coeff(i)).epsilon(1e-12));
}

TEST_CASE("derivative against central finite differences") {
  auto f = [](double t) { return std::exp(t * t) / (1.0 + t); };
  double x0 = 0.7, h = 1e-5;
  double fd = (f(x0 + h) - f(x0 - h)) / (2 * h);
  Taylor x = Taylor::variable(x0, 2);
  Taylor t = exp(x * x) / (1.0 + x);
  CHECK(t.derivative(1) == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("division by a zero-valued series throws") {
  Taylor x = Taylor::variable(0.0, 3);
  CHECK_THROWS_AS(x / x, std::domain_error);
  CHECK_THROWS_AS(log(Taylor::constant(-1.0, 2)), std::domain_error);
}
