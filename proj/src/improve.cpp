#include "chebdesign/improve.hpp"

#include "chebdesign/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace chebdesign {

const char* to_string(Direction d) {
  return d == Direction::Upper ? "UPPER" : "LOWER";
}

const char* to_string(CaseTag t) {
  switch (t) {
    case CaseTag::AlreadyAdmissible: return "ALREADY_ADMISSIBLE";
    case CaseTag::OddB: return "ODD_B";
    case CaseTag::EvenAB: return "EVEN_AB";
    case CaseTag::OddA: return "ODD_A";
    case CaseTag::EvenInterior: return "EVEN_INTERIOR";
    case CaseTag::Uncertified: return "UNCERTIFIED";
  }
  return "?";
}

const char* to_string(Admissibility a) {
  switch (a) {
    case Admissibility::ProvenUnimprovable: return "PROVEN_UNIMPROVABLE";
    case Admissibility::Improvable: return "IMPROVABLE";
    case Admissibility::BoundaryCase: return "BOUNDARY_CASE";
  }
  return "?";
}

GridLP build_grid_lp(const PsiSystem& psi, const IntervalDomain& domain,
                     const std::vector<double>& moments, int grid_n) {
  const int k = static_cast<int>(moments.size());
  if (k < 1 || k > psi.k)
    throw std::invalid_argument("build_grid_lp: moment count must be 1..k");
  grid_n = std::max(grid_n, 10 * k);

  GridLP lp;
  lp.grid.resize(static_cast<std::size_t>(grid_n));
  for (int g = 0; g < grid_n; ++g)
    lp.grid[static_cast<std::size_t>(g)] =
        domain.A + domain.width() * g / static_cast<double>(grid_n - 1);
  lp.grid.front() = domain.A;
  lp.grid.back() = domain.B;

  lp.constraints.resize(k, grid_n);
  lp.objective.resize(grid_n);
  for (int g = 0; g < grid_n; ++g) {
    for (int i = 0; i < k; ++i)
      lp.constraints(i, g) = psi.value(i, lp.grid[static_cast<std::size_t>(g)]);
    lp.objective(g) = psi.value(psi.k, lp.grid[static_cast<std::size_t>(g)]);
  }
  lp.rhs = Eigen::Map<const Eigen::VectorXd>(moments.data(), k);
  return lp;
}

std::vector<double> solve_grid_lp(const GridLP& lp, Direction direction) {
  const int k = static_cast<int>(lp.constraints.rows());
  // Row equilibration keeps the pivot tolerances meaningful across models
  // whose Psi functions live on very different scales.
  Eigen::MatrixXd a = lp.constraints;
  Eigen::VectorXd b = lp.rhs;
  for (int i = 0; i < k; ++i) {
    double s = std::max(a.row(i).cwiseAbs().maxCoeff(), 1e-300);
    a.row(i) /= s;
    b(i) /= s;
  }
  Eigen::VectorXd c = lp.objective;
  double cs = std::max(c.cwiseAbs().maxCoeff(), 1e-300);
  c /= cs;

  LpResult res = simplex_solve(a, b, c, direction == Direction::Upper);
  if (res.status == LpStatus::Infeasible) {
    std::ostringstream os;
    os << "moment vector is infeasible: constraint " << res.worst_row
       << " (moment of Psi_" << res.worst_row << ") cannot be matched, residual "
       << res.infeasibility;
    throw std::runtime_error(os.str());
  }
  if (res.status == LpStatus::Unbounded)
    throw std::logic_error("grid LP unbounded; constraint construction is broken");
  return std::vector<double>(res.x.data(), res.x.data() + res.x.size());
}

namespace {

struct Structure {
  bool include_A = false;
  bool include_B = false;
  int n_points = 0;
};

Structure principal_structure(int k, bool upper) {
  Structure s;
  if (upper) {
    if (k % 2 == 1) {  // index k/2, one boundary point: B
      s.n_points = (k + 1) / 2;
      s.include_B = true;
    } else {
      s.n_points = k / 2 + 1;
      s.include_A = s.include_B = true;
    }
  } else {
    if (k % 2 == 1) {
      s.n_points = (k + 1) / 2;
      s.include_A = true;
    } else {
      s.n_points = k / 2;
    }
  }
  return s;
}

struct Atoms {
  std::vector<double> x, w;
};

Atoms atoms_from_lp(const GridLP& lp, const std::vector<double>& weights,
                    const IntervalDomain& domain) {
  Atoms a;
  for (std::size_t g = 0; g < weights.size(); ++g)
    if (weights[g] > 1e-11) {
      a.x.push_back(lp.grid[g]);
      a.w.push_back(weights[g]);
    }
  // Adjacent grid atoms are one true atom split by discretization.
  double h = domain.width() / static_cast<double>(lp.grid.size() - 1);
  Atoms m;
  std::size_t i = 0;
  while (i < a.x.size()) {
    std::size_t j = i + 1;
    double ws = a.w[i], xs = a.w[i] * a.x[i];
    while (j < a.x.size() && a.x[j] - a.x[j - 1] <= 1.6 * h) {
      ws += a.w[j];
      xs += a.w[j] * a.x[j];
      ++j;
    }
    m.x.push_back(xs / ws);
    m.w.push_back(ws);
    i = j;
  }
  double total = 0.0;
  for (double w : m.w) total += w;
  for (double& w : m.w) w /= total;
  return m;
}

// Merge the closest adjacent pair until the atom count reaches target.
void consolidate(Atoms& a, std::size_t target) {
  while (a.x.size() > target) {
    std::size_t best = 0;
    for (std::size_t i = 1; i + 1 < a.x.size(); ++i)
      if (a.x[i + 1] - a.x[i] < a.x[best + 1] - a.x[best]) best = i;
    double w = a.w[best] + a.w[best + 1];
    a.x[best] = (a.w[best] * a.x[best] + a.w[best + 1] * a.x[best + 1]) / w;
    a.w[best] = w;
    a.x.erase(a.x.begin() + static_cast<std::ptrdiff_t>(best) + 1);
    a.w.erase(a.w.begin() + static_cast<std::ptrdiff_t>(best) + 1);
  }
}

// Square moment-matching system: unknowns are the free support points and
// all weights; with the principal-representation structure fixed this has
// exactly as many unknowns as matched moments.
std::optional<Design> newton_refine(const PsiSystem& psi,
                                    const IntervalDomain& domain,
                                    const Eigen::VectorXd& target,
                                    const Structure& st, Atoms init,
                                    const ImproveOptions& opts) {
  const int k = static_cast<int>(target.size());
  const int n = st.n_points;
  const int n_fixed = (st.include_A ? 1 : 0) + (st.include_B ? 1 : 0);
  const int n_free = n - n_fixed;
  if (n_free + n != k) return std::nullopt;
  if (static_cast<int>(init.x.size()) != n) return std::nullopt;

  if (st.include_A) init.x.front() = domain.A;
  if (st.include_B) init.x.back() = domain.B;

  std::vector<double> pts = init.x, wts = init.w;
  const double rhs_scale = 1.0 + target.cwiseAbs().maxCoeff();
  const double tol = 1e-12 * rhs_scale;
  const int i_lo = st.include_A ? 1 : 0;
  const int i_hi = st.include_B ? n - 1 : n;  // free points are [i_lo, i_hi)

  auto residual = [&](const std::vector<double>& x, const std::vector<double>& w) {
    Eigen::VectorXd r(k);
    for (int i = 0; i < k; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j)
        s += w[static_cast<std::size_t>(j)] * psi.value(i, x[static_cast<std::size_t>(j)]);
      r(i) = s - target(i);
    }
    return r;
  };

  auto valid = [&](const std::vector<double>& x, const std::vector<double>& w) {
    for (int j = 0; j < n; ++j) {
      if (x[static_cast<std::size_t>(j)] < domain.A - 1e-15 ||
          x[static_cast<std::size_t>(j)] > domain.B + 1e-15)
        return false;
      if (j > 0 && !(x[static_cast<std::size_t>(j)] > x[static_cast<std::size_t>(j - 1)]))
        return false;
      if (w[static_cast<std::size_t>(j)] < -1e-10) return false;
    }
    return true;
  };

  Eigen::VectorXd r = residual(pts, wts);
  for (int iter = 0; iter < opts.newton_max_iter; ++iter) {
    if (r.lpNorm<Eigen::Infinity>() <= tol) break;

    Eigen::MatrixXd jac(k, k);
    for (int i = 0; i < k; ++i) {
      int col = 0;
      for (int j = i_lo; j < i_hi; ++j, ++col) {
        Taylor s = psi.series(i, pts[static_cast<std::size_t>(j)], 1);
        jac(i, col) = wts[static_cast<std::size_t>(j)] * s.derivative(1);
      }
      for (int j = 0; j < n; ++j)
        jac(i, n_free + j) = psi.value(i, pts[static_cast<std::size_t>(j)]);
    }
    Eigen::VectorXd step = jac.fullPivLu().solve(-r);
    if (!step.allFinite()) return std::nullopt;

    double damp = 1.0;
    bool accepted = false;
    for (int h = 0; h < 30; ++h, damp *= 0.5) {
      std::vector<double> nx = pts, nw = wts;
      int col = 0;
      for (int j = i_lo; j < i_hi; ++j, ++col)
        nx[static_cast<std::size_t>(j)] += damp * step(col);
      for (int j = 0; j < n; ++j)
        nw[static_cast<std::size_t>(j)] += damp * step(n_free + j);
      if (!valid(nx, nw)) continue;
      Eigen::VectorXd nr = residual(nx, nw);
      if (nr.norm() < r.norm() || nr.lpNorm<Eigen::Infinity>() <= tol) {
        pts = std::move(nx);
        wts = std::move(nw);
        r = std::move(nr);
        accepted = true;
        break;
      }
    }
    if (!accepted) return std::nullopt;
  }
  if (r.lpNorm<Eigen::Infinity>() > tol) return std::nullopt;

  for (double w : wts)
    if (w <= 0.0) return std::nullopt;
  try {
    return Design(pts, wts, domain);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

struct PrOutcome {
  Design design;
  bool refined = false;
};

// Shared LP + refinement pipeline. `maximize` picks the side of the moment
// interval for Psi_k; `st` fixes the boundary structure of the extremal
// measure (n_points == 0 means no structure is imposed).
PrOutcome pr_core(const std::vector<double>& moments, const PsiSystem& psi,
                  const IntervalDomain& domain, bool maximize, Structure st,
                  const ImproveOptions& opts) {
  GridLP lp = build_grid_lp(psi, domain, moments, opts.grid_n);
  std::vector<double> w =
      solve_grid_lp(lp, maximize ? Direction::Upper : Direction::Lower);
  Atoms atoms = atoms_from_lp(lp, w, domain);

  Design lp_design(atoms.x, atoms.w, domain);
  if (st.n_points == 0 || static_cast<int>(atoms.x.size()) < st.n_points)
    // Fewer atoms than the principal structure: the moment point lies on
    // the boundary of the moment space and the LP measure is already the
    // (unique) representation.
    return {lp_design, false};

  consolidate(atoms, static_cast<std::size_t>(st.n_points));
  std::optional<Design> refined = newton_refine(
      psi, domain, Eigen::Map<const Eigen::VectorXd>(moments.data(),
                                                     static_cast<Eigen::Index>(moments.size())),
      st, atoms, opts);
  if (refined) return {*refined, true};
  return {lp_design, false};
}

}  // namespace

Design principal_representation(const std::vector<double>& moments,
                                const PsiSystem& psi, const IntervalDomain& domain,
                                Direction direction, const ImproveOptions& opts) {
  if (static_cast<int>(moments.size()) != psi.k)
    throw std::invalid_argument(
        "principal_representation: need moments d_0..d_{k-1}");
  if (!moments.empty() && std::abs(moments[0] - 1.0) > 1e-9)
    throw std::invalid_argument("principal_representation: d_0 must be 1");
  bool upper = direction == Direction::Upper;
  Structure st = principal_structure(psi.k, upper);
  return pr_core(moments, psi, domain, upper, st, opts).design;
}

ImprovementResult improve_design(const Design& design, const ModelSpec& model,
                                 std::optional<Direction> direction,
                                 const ChebReport& cheb,
                                 const ImproveOptions& opts) {
  const PsiSystem& psi = model.psi;
  const int k = psi.k;
  if (psi.diag_index < 1)
    throw std::invalid_argument(
        "improve_design: Psi_k must sit on the C-matrix diagonal");

  std::optional<Direction> oriented;
  if (cheb.verdict == ChebVerdict::ChebPlus) oriented = Direction::Upper;
  if (cheb.verdict == ChebVerdict::ChebMinus) oriented = Direction::Lower;
  if (oriented && direction && *oriented != *direction) {
    std::ostringstream os;
    os << "improve_design: direction " << to_string(*direction)
       << " contradicts the " << to_string(cheb.verdict) << " verdict";
    throw std::invalid_argument(os.str());
  }
  std::optional<Direction> dir = oriented ? oriented : direction;

  ImprovementResult res{design, {}, 0, 0, dir.value_or(Direction::Upper),
                        CaseTag::Uncertified, 0, false, false};
  res.original_moments = moment_vector(design, psi, k - 1);
  res.original_dk = moment(design, psi, k);

  // A dominating design must raise the d_k moment regardless of the
  // orientation: the C-matrix difference is d_k's change times a diagonal
  // unit block. The orientation decides which principal representation
  // (upper or lower) attains the maximum, i.e. the boundary structure.
  Structure st{};  // no structure when the verdict is indeterminate
  if (oriented) st = principal_structure(k, *oriented == Direction::Upper);
  PrOutcome out = pr_core(res.original_moments, psi, model.domain,
                          /*maximize=*/true, st, opts);

  res.achieved_dk = moment(out.design, psi, k);
  res.refined = out.refined;

  const double same_tol = std::max(opts.tol_mom, 1e-9 * (1.0 + std::abs(res.original_dk)));
  if (std::abs(res.achieved_dk - res.original_dk) <= same_tol &&
      static_cast<int>(design.size()) <= (k + 2) / 2) {
    res.improved = design;  // fixed point of the improvement
    res.achieved_dk = res.original_dk;
    res.case_tag = CaseTag::AlreadyAdmissible;
    res.support_bound_ok = true;
    res.loewner_certificate = 0.0;
    return res;
  }

  res.improved = out.design;
  if (!oriented || !out.refined) {
    res.case_tag = CaseTag::Uncertified;
  } else if (*oriented == Direction::Upper) {
    res.case_tag = k % 2 == 1 ? CaseTag::OddB : CaseTag::EvenAB;
  } else {
    res.case_tag = k % 2 == 1 ? CaseTag::OddA : CaseTag::EvenInterior;
  }
  res.support_bound_ok = static_cast<int>(res.improved.size()) <= (k + 2) / 2;

  Eigen::MatrixXd c_old = c_matrix(design, model);
  Eigen::MatrixXd c_new = c_matrix(res.improved, model);
  res.loewner_certificate = min_eigenvalue(c_new - c_old);
  if (res.case_tag != CaseTag::Uncertified &&
      res.loewner_certificate < -opts.tol_psd * std::max(1.0, c_old.norm())) {
    std::ostringstream os;
    os << "improve_design: dominance certificate violated (min eigenvalue "
       << res.loewner_certificate
       << "); the diagonal condition or orientation is misconfigured";
    throw std::logic_error(os.str());
  }
  return res;
}

AdmissibilityReport is_admissible_candidate(const Design& design,
                                            const ModelSpec& model,
                                            const ChebReport& cheb,
                                            const ImproveOptions& opts) {
  if (cheb.verdict != ChebVerdict::ChebPlus &&
      cheb.verdict != ChebVerdict::ChebMinus)
    throw std::invalid_argument(
        "is_admissible_candidate: needs a definite Chebyshev verdict; rerun "
        "the verification or supply one");

  AdmissibilityReport rep;
  const int twice = design.twice_index();
  const int k = model.psi.k;
  if (twice < k) {
    rep.classification = Admissibility::ProvenUnimprovable;
    rep.unimprovable_in_fact = true;
    return rep;
  }
  if (twice > k) {
    rep.classification = Admissibility::Improvable;
    return rep;
  }
  rep.classification = Admissibility::BoundaryCase;
  ImprovementResult imp = improve_design(design, model, std::nullopt, cheb, opts);
  rep.dk_gap = imp.achieved_dk - imp.original_dk;
  rep.unimprovable_in_fact = std::abs(rep.dk_gap) <= opts.tol_mom;
  return rep;
}

}  // namespace chebdesign
