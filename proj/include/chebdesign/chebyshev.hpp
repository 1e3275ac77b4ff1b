#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chebdesign/design.hpp"
#include "chebdesign/psi.hpp"

namespace chebdesign {

enum class ChebVerdict { ChebPlus, ChebMinus, Indeterminate, Fail };
enum class ChebMethod { Determinant, Wronskian, Both };

const char* to_string(ChebVerdict v);
const char* to_string(ChebMethod m);

struct ChebWitness {
  // For a determinant failure: the offending ordered tuple. For a Wronskian
  // failure: a bracketing pair of grid points. For a vanishing chain
  // function: the point and the chain level.
  std::vector<double> points;
  double value = 0.0;
  int level = -1;
  std::string what;
};

struct ChebReport {
  ChebVerdict verdict = ChebVerdict::Indeterminate;
  ChebMethod method = ChebMethod::Determinant;
  std::optional<ChebWitness> witness;
  double min_abs_det = 0.0;  // smallest scaled |det| (or |F|) encountered
  long samples_checked = 0;
  std::string note;
};

struct SamplerConfig {
  int grid_points = 201;       // deterministic sweep grid
  int random_tuples = 2000;    // random increasing tuples per system size
  unsigned seed = 20110107;
  double tol_det = 1e-10;      // relative to the Hadamard row-norm scale
};

// Determinant of [u_i(x_j)] for strictly increasing points; count of points
// must equal the count of functions. Index 0 is the constant function when
// include_psi0 is set.
double cheb_determinant(const PsiSystem& psi, const std::vector<int>& indices,
                        const std::vector<double>& points);

// Sweep deterministic and seeded-random increasing tuples, classify the sign
// pattern of the k- and (k+1)-function determinants.
ChebReport check_chebyshev_determinant(const PsiSystem& psi,
                                       const IntervalDomain& domain,
                                       const SamplerConfig& config = {});

// The recursion w_0 = Psi_0, D_j f = (f / w_j)', w_{j+1} = D_j ... D_0
// Psi_{j+1}, evaluated pointwise through Taylor arithmetic.
class WronskianChain {
public:
  WronskianChain(const PsiSystem& psi, const IntervalDomain& domain);

  // w_0(x), ..., w_k(x). Throws std::domain_error naming the level if some
  // w_j vanishes at x before the chain is complete.
  std::vector<double> values(double x) const;

  // F(x) = w_1(x) * ... * w_k(x).
  double F(double x) const;

  int k() const { return psi_.k; }

private:
  PsiSystem psi_;
  IntervalDomain domain_;
};

// Grid sweep of F; all-positive -> ChebPlus, all-negative -> ChebMinus,
// sign change -> Fail with a bracketing pair. A definite verdict also
// requires w_1, ..., w_{k-1} > 0 on the grid (the subsystem condition);
// otherwise the result is Indeterminate.
ChebReport check_chebyshev_wronskian(const PsiSystem& psi,
                                     const IntervalDomain& domain,
                                     int grid_n = 201);

// Triangle-array recursion f_{l,1} = Psi_l', f_{l,t} = (f_{l,t-1} /
// f_{t-1,t-1})'; returns the diagonal f_{1,1}(x), ..., f_{k,k}(x).
std::vector<double> yang_triangle_diagonal(const PsiSystem& psi, double x);

// Wronskian determinant of {Psi_0, ..., Psi_k} at x from jet derivatives.
double wronskian_determinant(const PsiSystem& psi, double x);

// Product form w_0^{k+1} w_1^k ... w_k of the same determinant.
double wronskian_product_form(const std::vector<double>& w);

// Combine determinant and Wronskian reports; a definite verdict wins over
// Indeterminate, contradictory definite verdicts degrade to Fail.
ChebReport merge_reports(const ChebReport& det, const ChebReport& wron);

}  // namespace chebdesign
