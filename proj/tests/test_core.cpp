#include <doctest.h>

#include <stdexcept>

#include "chebdesign/design.hpp"
#include "chebdesign/psi.hpp"

using namespace chebdesign;

static const IntervalDomain kUnit{0.0, 1.0};

TEST_CASE("designs are sorted and validated") {
  Design d({0.75, 0.0}, {0.5, 0.5}, kUnit);
  CHECK(d.support() == std::vector<double>{0.0, 0.75});
  CHECK(d.weights() == std::vector<double>{0.5, 0.5});

  CHECK_THROWS_AS(Design({-0.1}, {1.0}, kUnit), std::invalid_argument);
  CHECK_THROWS_AS(Design({0.5}, {0.9}, kUnit), std::invalid_argument);
  CHECK_THROWS_AS(Design({0.2, 0.8}, {0.7, -0.3}, kUnit), std::invalid_argument);
  CHECK_THROWS_AS(IntervalDomain(1.0, 1.0), std::invalid_argument);
}

TEST_CASE("near-duplicate support points merge and tiny weights drop") {
  Design d({0.5, 0.5 + 1e-15, 0.9}, {0.4, 0.4, 0.2}, kUnit);
  CHECK(d.size() == 2);
  CHECK(d.weights()[0] == doctest::Approx(0.8));

  Design e({0.1, 0.9}, {1.0 - 1e-13, 1e-13}, kUnit);
  CHECK(e.size() == 1);
  CHECK(e.weights()[0] == doctest::Approx(1.0));
}

TEST_CASE("index counts boundary points one half") {
  CHECK(Design::point_mass(0.0, kUnit).twice_index() == 1);
  CHECK(Design::point_mass(0.5, kUnit).twice_index() == 2);
  CHECK(Design::uniform({0.0, 1.0}, kUnit).twice_index() == 2);
  CHECK(Design::uniform({0.0, 0.5, 1.0}, kUnit).twice_index() == 4);
  CHECK(Design::uniform({0.2, 0.7}, kUnit).index() == doctest::Approx(2.0));
}

TEST_CASE("moments of the worked two-point example") {
  // xi = {0: 1/2, 3/4: 1/2}: mean 3/8, second moment 9/32
  Design xi({0.0, 0.75}, {0.5, 0.5}, kUnit);
  PsiSystem mono = monomial_system(2);
  CHECK(moment(xi, mono, 0) == doctest::Approx(1.0));
  CHECK(moment(xi, mono, 1) == doctest::Approx(3.0 / 8.0));
  CHECK(moment(xi, mono, 2) == doctest::Approx(9.0 / 32.0));

  std::vector<double> mv = moment_vector(xi, mono, 2);
  REQUIRE(mv.size() == 3);
  CHECK(mv[0] == 1.0);
  CHECK(mv[2] == doctest::Approx(9.0 / 32.0));
}

TEST_CASE("moment validates the function index") {
  Design xi = Design::point_mass(0.5, kUnit);
  PsiSystem mono = monomial_system(2);
  CHECK_THROWS_AS(moment(xi, mono, 3), std::out_of_range);
  CHECK_THROWS_AS(moment(xi, mono, -1), std::out_of_range);
}

TEST_CASE("mixtures combine weights linearly") {
  Design a = Design::point_mass(0.0, kUnit);
  Design b = Design::point_mass(1.0, kUnit);
  Design m = mix(a, b, 0.25);
  REQUIRE(m.size() == 2);
  CHECK(m.weights()[0] == doctest::Approx(0.25));
  CHECK(m.weights()[1] == doctest::Approx(0.75));

  PsiSystem mono = monomial_system(2);
  Design c({0.1, 0.6}, {0.5, 0.5}, kUnit);
  Design mm = mix(c, b, 0.4);
  CHECK(moment(mm, mono, 1) ==
        doctest::Approx(0.4 * moment(c, mono, 1) + 0.6 * moment(b, mono, 1)));
}

TEST_CASE("merge_close_support clusters within tolerance") {
  Design d({0.1, 0.100001, 0.9}, {0.3, 0.3, 0.4}, kUnit);
  Design m = merge_close_support(d, 1e-3);
  REQUIRE(m.size() == 2);
  CHECK(m.weights()[0] == doctest::Approx(0.6));
  CHECK(m.support()[0] == doctest::Approx(0.1000005));
}

TEST_CASE("finite-difference fallback approximates derivatives") {
  PsiFunction f = finite_difference_function([](double x) { return x * x * x; });
  Taylor t = f(Taylor::variable(0.5, 2));
  CHECK(t.value() == doctest::Approx(0.125));
  CHECK(t.derivative(1) == doctest::Approx(0.75).epsilon(1e-6));
  CHECK(t.derivative(2) == doctest::Approx(3.0).epsilon(1e-4));
}
