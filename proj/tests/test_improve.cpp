#include <doctest.h>

#include <cmath>
#include <random>

#include "chebdesign/improve.hpp"
#include "chebdesign/json_io.hpp"

using namespace chebdesign;

namespace {

const IntervalDomain kUnit{0.0, 1.0};

ChebReport verify(const ModelSpec& model) {
  ChebReport det = check_chebyshev_determinant(model.psi, model.domain);
  ChebReport wron = check_chebyshev_wronskian(model.psi, model.domain);
  return merge_reports(det, wron);
}

Design random_design(std::mt19937& rng, const IntervalDomain& dom, int lo,
                     int hi) {
  std::uniform_int_distribution<int> count(lo, hi);
  std::uniform_real_distribution<double> unif(dom.A, dom.B);
  std::uniform_real_distribution<double> wdist(0.1, 1.0);
  int n = count(rng);
  std::vector<double> pts, wts;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    pts.push_back(unif(rng));
    double w = wdist(rng);
    wts.push_back(w);
    sum += w;
  }
  for (double& w : wts) w /= sum;
  return Design(pts, wts, dom);
}

}  // namespace

TEST_CASE("worked two-point improvement is reproduced exactly") {
  ModelSpec lin = polynomial_model(1, kUnit);
  Design xi({0.0, 0.75}, {0.5, 0.5}, kUnit);
  ChebReport cheb = verify(lin);
  REQUIRE(cheb.verdict == ChebVerdict::ChebPlus);

  ImprovementResult res = improve_design(xi, lin, std::nullopt, cheb);
  REQUIRE(res.improved.size() == 2);
  CHECK(res.improved.support()[0] == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(res.improved.support()[1] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(res.improved.weights()[0] == doctest::Approx(0.625).epsilon(1e-8));
  CHECK(res.improved.weights()[1] == doctest::Approx(0.375).epsilon(1e-8));
  CHECK(res.achieved_dk == doctest::Approx(0.375).epsilon(1e-8));
  CHECK(res.case_tag == CaseTag::EvenAB);
  CHECK(res.direction == Direction::Upper);
  CHECK(res.support_bound_ok);
  CHECK(res.refined);
  CHECK(res.loewner_certificate >= -1e-10);
}

TEST_CASE("a fixed point of the improvement is reported as admissible") {
  ModelSpec lin = polynomial_model(1, kUnit);
  Design fixed({0.0, 1.0}, {0.625, 0.375}, kUnit);
  ChebReport cheb = verify(lin);
  ImprovementResult res = improve_design(fixed, lin, std::nullopt, cheb);
  CHECK(res.case_tag == CaseTag::AlreadyAdmissible);
  CHECK(res.achieved_dk == doctest::Approx(res.original_dk));
  CHECK(res.improved.support() == fixed.support());
}

TEST_CASE("low-index designs are proven unimprovable") {
  ModelSpec lin = polynomial_model(1, kUnit);
  ChebReport cheb = verify(lin);
  Design origin = Design::point_mass(0.0, kUnit);
  AdmissibilityReport rep = is_admissible_candidate(origin, lin, cheb);
  CHECK(rep.classification == Admissibility::ProvenUnimprovable);
  CHECK(rep.unimprovable_in_fact);

  // interior point mass: index 1 = k/2 -> boundary case; it is the minimal
  // d_2 representation of its mean, so improvement strictly raises d_2
  Design interior = Design::point_mass(0.4, kUnit);
  AdmissibilityReport rep2 = is_admissible_candidate(interior, lin, cheb);
  CHECK(rep2.classification == Admissibility::BoundaryCase);
  CHECK_FALSE(rep2.unimprovable_in_fact);
  CHECK(rep2.dk_gap == doctest::Approx(0.4 - 0.16).epsilon(1e-6));

  // the boundary pair {0: 0.6, 1: 0.4} is the upper representation of the
  // same moments and cannot be improved further
  Design pair({0.0, 1.0}, {0.6, 0.4}, kUnit);
  AdmissibilityReport rep3 = is_admissible_candidate(pair, lin, cheb);
  CHECK(rep3.classification == Admissibility::BoundaryCase);
  CHECK(rep3.unimprovable_in_fact);

  Design spread = Design::uniform({0.1, 0.5, 0.9}, kUnit);
  CHECK(is_admissible_candidate(spread, lin, cheb).classification ==
        Admissibility::Improvable);
}

TEST_CASE("moment matching, support bound, dominance on random designs") {
  ModelSpec quad = polynomial_model(2, IntervalDomain(-1.0, 1.0));
  ChebReport cheb = verify(quad);
  REQUIRE(cheb.verdict == ChebVerdict::ChebPlus);
  const int k = quad.psi.k;

  std::mt19937 rng(424242);
  for (int trial = 0; trial < 20; ++trial) {
    Design xi = random_design(rng, quad.domain, 4, 7);
    ImprovementResult res = improve_design(xi, quad, std::nullopt, cheb);

    for (int i = 0; i < k; ++i)
      CHECK(std::abs(moment(res.improved, quad.psi, i) -
                     res.original_moments[static_cast<std::size_t>(i)]) <= 1e-8);
    CHECK(static_cast<int>(res.improved.size()) <= (k + 2) / 2);
    CHECK(res.achieved_dk >= res.original_dk - 1e-10);
    Eigen::MatrixXd c_old = c_matrix(xi, quad);
    CHECK(res.loewner_certificate >= -1e-8 * std::max(1.0, c_old.norm()));

    // idempotence: improving the improvement changes d_k negligibly
    ImprovementResult again =
        improve_design(res.improved, quad, std::nullopt, cheb);
    CHECK(std::abs(again.achieved_dk - res.achieved_dk) <= 1e-9);
  }
}

TEST_CASE("refined optimum agrees with a finer grid LP") {
  ModelSpec quad = polynomial_model(2, IntervalDomain(-1.0, 1.0));
  ChebReport cheb = verify(quad);
  Design xi({-0.7, -0.1, 0.3, 0.8}, {0.3, 0.2, 0.3, 0.2}, quad.domain);
  ImprovementResult res = improve_design(xi, quad, std::nullopt, cheb);

  GridLP lp = build_grid_lp(quad.psi, quad.domain, res.original_moments, 10001);
  std::vector<double> w = solve_grid_lp(lp, Direction::Upper);
  double lp_dk = 0.0;
  for (std::size_t g = 0; g < w.size(); ++g)
    lp_dk += w[g] * lp.objective(static_cast<Eigen::Index>(g));
  CHECK(res.achieved_dk == doctest::Approx(lp_dk).epsilon(1e-7));
  CHECK(res.achieved_dk >= lp_dk - 1e-7);
}

TEST_CASE("principal representations bracket the k-th moment") {
  // monomials, k = 3 (odd), positively oriented: upper representation
  // includes B, lower includes A
  PsiSystem mono = monomial_system(3);
  Design xi({0.1, 0.4, 0.8}, {0.3, 0.4, 0.3}, kUnit);
  std::vector<double> mom = moment_vector(xi, mono, mono.k - 1);

  Design upper = principal_representation(mom, mono, kUnit, Direction::Upper);
  Design lower = principal_representation(mom, mono, kUnit, Direction::Lower);
  double dk_up = moment(upper, mono, mono.k);
  double dk_lo = moment(lower, mono, mono.k);
  double dk_xi = moment(xi, mono, mono.k);
  CHECK(dk_lo <= dk_xi + 1e-9);
  CHECK(dk_xi <= dk_up + 1e-9);
  // structure: two points each, upper anchored at B, lower at A
  CHECK(upper.support().back() == doctest::Approx(1.0));
  CHECK(lower.support().front() == doctest::Approx(0.0));
  // both match the lower-order moments
  for (int i = 0; i < mono.k; ++i) {
    CHECK(moment(upper, mono, i) ==
          doctest::Approx(mom[static_cast<std::size_t>(i)]).epsilon(1e-9));
    CHECK(moment(lower, mono, i) ==
          doctest::Approx(mom[static_cast<std::size_t>(i)]).epsilon(1e-9));
  }
}

TEST_CASE("rational-model improvement anchors at A under minus orientation") {
  // Q = 1 + x/3: roots below A, so the Psi system is CHEB_MINUS and the
  // max-d_k representation is the lower principal representation (odd k).
  ModelSpec rat = rational_model(1, 1, {1.0, 1.0 / 3.0}, kUnit);
  ChebReport cheb = verify(rat);
  REQUIRE(cheb.verdict == ChebVerdict::ChebMinus);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    Design xi = random_design(rng, kUnit, 3, 6);
    ImprovementResult res = improve_design(xi, rat, std::nullopt, cheb);
    CHECK(static_cast<int>(res.improved.size()) <= rat.p);
    CHECK(res.achieved_dk >= res.original_dk - 1e-10);
    if (res.case_tag == CaseTag::OddA)
      CHECK(res.improved.support().front() == doctest::Approx(0.0));
    CHECK(res.loewner_certificate >= -1e-8);
  }
}

TEST_CASE("an explicit direction conflicting with the verdict is rejected") {
  ModelSpec lin = polynomial_model(1, kUnit);
  ChebReport cheb = verify(lin);
  Design xi({0.0, 0.75}, {0.5, 0.5}, kUnit);
  CHECK_THROWS_AS(improve_design(xi, lin, Direction::Lower, cheb),
                  std::invalid_argument);
  CHECK_NOTHROW(improve_design(xi, lin, Direction::Upper, cheb));
}

TEST_CASE("infeasible moment vectors are rejected by the LP") {
  PsiSystem mono = monomial_system(2);
  GridLP lp = build_grid_lp(mono, kUnit, {1.0, 2.5}, 501);  // mean outside [0,1]
  CHECK_THROWS_AS(solve_grid_lp(lp, Direction::Upper), std::runtime_error);
}

TEST_CASE("indeterminate verdicts produce uncertified improvements") {
  ModelSpec lin = polynomial_model(1, kUnit);
  ChebReport indet;
  indet.verdict = ChebVerdict::Indeterminate;
  Design xi = Design::uniform({0.1, 0.5, 0.9}, kUnit);
  ImprovementResult res = improve_design(xi, lin, std::nullopt, indet);
  CHECK(res.case_tag == CaseTag::Uncertified);
  CHECK(res.achieved_dk >= res.original_dk - 1e-9);
  for (int i = 0; i < lin.psi.k; ++i)
    CHECK(moment(res.improved, lin.psi, i) ==
          doctest::Approx(res.original_moments[static_cast<std::size_t>(i)])
              .epsilon(1e-6));
}

TEST_CASE("improvement result serializes with the original echo") {
  ModelSpec lin = polynomial_model(1, kUnit);
  ChebReport cheb = verify(lin);
  Design xi({0.0, 0.75}, {0.5, 0.5}, kUnit);
  ImprovementResult res = improve_design(xi, lin, std::nullopt, cheb);
  json j = improvement_to_json(res, xi);
  CHECK(j["original"]["support"].size() == 2);
  CHECK(j["improved"]["weights"][0].get<double>() == doctest::Approx(0.625));
  CHECK(j["case_tag"] == "EVEN_AB");
  CHECK(j["support_bound_ok"] == true);
}
