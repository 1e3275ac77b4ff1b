#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chebdesign/design.hpp"
#include "chebdesign/taylor.hpp"

namespace chebdesign {

// A function evaluated through Taylor arithmetic: feeding in a jet of the
// identity at x yields the value and all derivatives up to the jet order.
using PsiFunction = std::function<Taylor(const Taylor&)>;

// The distinct non-constant functions appearing in the C-matrix, with
// Psi_0 == 1 implicit. funcs[i] evaluates Psi_{i+1}.
struct PsiSystem {
  int k = 0;
  // 1-based parameter index l with Psi_k = Psi_ll on the diagonal of the
  // C-matrix layout; 0 when the system is not attached to a model.
  int diag_index = 0;
  // True when the jet evaluators carry exact derivatives (as opposed to a
  // finite-difference fallback).
  bool analytic = true;
  std::vector<PsiFunction> funcs;
  std::vector<std::string> labels;

  // Value of Psi_i at x, i in 0..k (i == 0 is the constant 1).
  double value(int i, double x) const;

  // Jet of Psi_i at x with the requested truncation order.
  Taylor series(int i, double x, std::size_t order) const;

  // System with the last function negated (orientation flip).
  PsiSystem flipped_last() const;
};

// Wrap a plain evaluator so that requested derivatives are produced by
// central finite differences. Accuracy degrades quickly with the order;
// intended only as a fallback when no analytic form is available.
PsiFunction finite_difference_function(std::function<double(double)> f);

PsiSystem monomial_system(int k);

// Sum_j w_j Psi_i(x_j); exact finite sum. Throws if Psi_i is non-finite at
// a support point or i is out of range.
double moment(const Design& design, const PsiSystem& psi, int i);

// (d_0, ..., d_order).
std::vector<double> moment_vector(const Design& design, const PsiSystem& psi,
                                  int order);

}  // namespace chebdesign
