#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "chebdesign/design.hpp"
#include "chebdesign/psi.hpp"

namespace chebdesign {

// Efficiency function of a weighted polynomial model, together with the
// companion function g used by the constant-derivative condition.
struct Efficiency {
  enum class Kind { ExpX2, Jacobi, InversePower };
  Kind kind = Kind::ExpX2;
  double alpha = 0.0;  // Jacobi
  double beta = 0.0;   // Jacobi
  double n = 0.0;      // InversePower

  static Efficiency exp_x2() { return {Kind::ExpX2, 0, 0, 0}; }
  static Efficiency jacobi(double a, double b) { return {Kind::Jacobi, a, b, 0}; }
  static Efficiency inverse_power(double n) { return {Kind::InversePower, 0, 0, n}; }
};

struct RationalInfo {
  int l = 0;  // numerator degree + 1
  int s = 0;  // denominator degree
  std::vector<double> numerator;    // theta_1 .. theta_l
  std::vector<double> denominator;  // theta_{l+1} .. theta_{l+s}
  // Q(x) = 1 + denominator[0] x + ... + denominator[s-1] x^s.
  double q(double x) const;
  Taylor q(const Taylor& x) const;
};

struct WeightedInfo {
  Efficiency efficiency;
  PsiFunction lambda_fn;  // efficiency function
  PsiFunction g_fn;       // companion function of the constant-derivative test
};

// A regression model instance: the Psi system, the C-matrix layout mapping
// entry (i, j) to a Psi index (0 meaning the constant 1), and the fixed
// congruence factor P(theta) of M = P C P^T.
struct ModelSpec {
  std::string name;
  int p = 0;
  Eigen::VectorXd theta;
  PsiSystem psi;
  Eigen::MatrixXi layout;  // p x p, entries in 0..k
  Eigen::MatrixXd P;
  IntervalDomain domain{0.0, 1.0};

  std::optional<RationalInfo> rational;
  std::optional<WeightedInfo> weighted;
};

// Psi_j = x^j, j = 1..2p-2, layout (i,j) -> x^{i+j-2}, P = I.
ModelSpec polynomial_model(int degree, const IntervalDomain& domain);

// Psi_j = lambda(x) x^{j-1}, j = 1..2p-1. Parameter ranges: Jacobi needs
// [A,B] inside [-1,1] and alpha, beta > -1; InversePower needs A > -1 and
// n > 2p-2.
ModelSpec weighted_polynomial_model(int p, const Efficiency& eff,
                                    const IntervalDomain& domain);

// Rational model with numerator degree l-1 and denominator degree s;
// theta holds the l numerator coefficients followed by the s denominator
// coefficients. Psi_j = x^{j-1}/Q^4, k = 2p-1, p = l+s. Throws if Q has a
// root in [A, B].
ModelSpec rational_model(int l, int s, const std::vector<double>& theta,
                         const IntervalDomain& domain);

// The polynomial-basis companion system {x, x^2, ..., x^{2p-2}, Q^4} of a
// rational model (Psi_0 = 1 implicit), whose orientation the root-location
// test below predicts. It is the Psi system multiplied by Q^4 with the
// Q^4 row moved last, so its verdict is the Psi system's with the last
// function flipped (k is odd).
PsiSystem rational_companion_system(const ModelSpec& model);

enum class LemmaPrediction {
  ChebPlusExpected,   // all roots of Q real and < A, s > l-1
  ChebMinusExpected,  // all roots of Q real and > B, s > l-1
  NotApplicable
};
const char* to_string(LemmaPrediction p);

// Classify the companion system's orientation from the roots of Q.
LemmaPrediction check_root_condition(const ModelSpec& model);

// Expected verdict for the model's own Psi system implied by the root
// condition (the companion-to-Psi reordering flips the orientation).
LemmaPrediction expected_psi_orientation(const ModelSpec& model);

struct GarzResult {
  std::vector<double> constants;  // c_1 .. c_{2p-1}
  double max_deviation = 0.0;     // worst relative deviation from constancy
};

// Check that d^j/dx^j [ (lambda(x) x^{j-1})' / g(x) ] is a nonzero constant
// for j = 1..2p-1, on an interior grid. Throws std::runtime_error when the
// result is not constant within tol.
GarzResult verify_constant_derivative_condition(const PsiFunction& lambda_fn,
                                                const PsiFunction& g_fn, int p,
                                                const IntervalDomain& domain,
                                                int grid_n = 101,
                                                double tol = 1e-6);
GarzResult verify_constant_derivative_condition(const ModelSpec& model,
                                                int grid_n = 101,
                                                double tol = 1e-6);

// The system {integral of g, lambda, lambda x, ..., lambda x^{2p-2}} whose
// derivative chain is constant beyond the first level when the condition
// above holds.
PsiSystem transformed_weighted_system(const ModelSpec& model);

// Real roots of a polynomial with the given ascending coefficients
// (companion-matrix eigenvalues); complex roots are reported via the
// boolean flag.
std::vector<double> real_roots(const std::vector<double>& ascending_coeffs,
                               bool& all_real);

}  // namespace chebdesign
