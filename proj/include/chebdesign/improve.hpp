#pragma once

#include <optional>
#include <vector>

#include "chebdesign/chebyshev.hpp"
#include "chebdesign/design.hpp"
#include "chebdesign/matrices.hpp"
#include "chebdesign/models.hpp"

namespace chebdesign {

enum class Direction { Upper, Lower };
const char* to_string(Direction d);

enum class CaseTag {
  AlreadyAdmissible,
  OddB,          // k odd, orientation +: support contains B
  EvenAB,        // k even, orientation +: support contains A and B
  OddA,          // k odd, orientation -: support contains A
  EvenInterior,  // k even, orientation -: interior support
  Uncertified
};
const char* to_string(CaseTag t);

struct ImproveOptions {
  int grid_n = 2001;
  double tol_mom = 1e-8;
  double tol_psd = 1e-8;
  int newton_max_iter = 200;
};

struct ImprovementResult {
  Design improved;
  std::vector<double> original_moments;  // d_0 .. d_{k-1}
  double achieved_dk = 0.0;
  double original_dk = 0.0;
  Direction direction = Direction::Upper;
  CaseTag case_tag = CaseTag::Uncertified;
  double loewner_certificate = 0.0;  // min eigenvalue of C(improved) - C(original)
  bool support_bound_ok = false;
  bool refined = false;  // Newton refinement converged
};

// Discretized moment problem: optimize the Psi_k moment over grid measures
// matching the Psi_0..Psi_{k-1} moments.
struct GridLP {
  std::vector<double> grid;
  Eigen::MatrixXd constraints;  // k x N, row i = Psi_i on the grid
  Eigen::VectorXd objective;    // Psi_k on the grid
  Eigen::VectorXd rhs;          // d_0 .. d_{k-1}
};

GridLP build_grid_lp(const PsiSystem& psi, const IntervalDomain& domain,
                     const std::vector<double>& moments, int grid_n);

// Basic optimal weights of the grid LP (at most k+1 nonzeros). Throws on
// infeasible moments, naming the worst-violated constraint.
std::vector<double> solve_grid_lp(const GridLP& lp, Direction direction);

// The design achieving the extremal Psi_k moment among designs matching the
// given Psi_0..Psi_{k-1} moments, for a system assumed Chebyshev as ordered:
// grid LP for the global structure, then Newton refinement on the boundary
// support structure of the extremal measure.
Design principal_representation(const std::vector<double>& moments,
                                const PsiSystem& psi, const IntervalDomain& domain,
                                Direction direction, const ImproveOptions& opts = {});

// Theorem-driven improvement: computes the dominating design with at most
// floor((k+2)/2) support points matching the moments of the given design,
// certifies Loewner dominance of the C-matrices, and classifies the case.
// The Chebyshev verdict selects the support structure; with an
// indeterminate verdict the LP solution is returned uncertified.
ImprovementResult improve_design(const Design& design, const ModelSpec& model,
                                 std::optional<Direction> direction,
                                 const ChebReport& cheb,
                                 const ImproveOptions& opts = {});

enum class Admissibility { ProvenUnimprovable, Improvable, BoundaryCase };
const char* to_string(Admissibility a);

struct AdmissibilityReport {
  Admissibility classification = Admissibility::BoundaryCase;
  // For the boundary case: whether improvement left d_k unchanged.
  bool unimprovable_in_fact = false;
  double dk_gap = 0.0;
};

AdmissibilityReport is_admissible_candidate(const Design& design,
                                            const ModelSpec& model,
                                            const ChebReport& cheb,
                                            const ImproveOptions& opts = {});

}  // namespace chebdesign
