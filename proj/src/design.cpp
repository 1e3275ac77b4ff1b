#include "chebdesign/design.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chebdesign {

namespace {
constexpr double kWeightFloor = 1e-12;
constexpr double kSumTol = 1e-12;

// Cluster sorted (point, weight) pairs whose neighbours are within tol and
// replace each cluster by its weighted mean.
void merge_sorted(std::vector<double>& pts, std::vector<double>& wts,
                  double tol) {
  std::vector<double> mp, mw;
  std::size_t i = 0;
  while (i < pts.size()) {
    std::size_t j = i + 1;
    double wsum = wts[i];
    double xsum = wts[i] * pts[i];
    while (j < pts.size() && pts[j] - pts[j - 1] <= tol) {
      wsum += wts[j];
      xsum += wts[j] * pts[j];
      ++j;
    }
    mp.push_back(xsum / wsum);
    mw.push_back(wsum);
    i = j;
  }
  pts = std::move(mp);
  wts = std::move(mw);
}
}  // namespace

IntervalDomain::IntervalDomain(double a, double b) : A(a), B(b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
    throw std::invalid_argument("IntervalDomain requires finite A < B");
}

Design::Design(std::vector<double> support, std::vector<double> weights,
               const IntervalDomain& domain)
    : domain_(domain) {
  if (support.empty())
    throw std::invalid_argument("Design requires at least one support point");
  if (support.size() != weights.size())
    throw std::invalid_argument("Design: support/weights size mismatch");

  std::vector<std::size_t> perm(support.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });

  for (std::size_t i : perm) {
    if (!std::isfinite(support[i]) || !domain.contains(support[i])) {
      std::ostringstream os;
      os << "Design: support point " << support[i] << " outside ["
         << domain.A << ", " << domain.B << "]";
      throw std::invalid_argument(os.str());
    }
    if (!std::isfinite(weights[i]) || weights[i] < 0.0)
      throw std::invalid_argument("Design: weights must be non-negative");
    if (weights[i] < kWeightFloor) continue;  // dropped, renormalized below
    support_.push_back(support[i]);
    weights_.push_back(weights[i]);
  }
  if (support_.empty())
    throw std::invalid_argument("Design: all weights below tolerance");

  double sum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(sum - 1.0) > kSumTol * support.size() + kSumTol &&
      std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("Design: weights must sum to 1");
  for (double& w : weights_) w /= sum;

  merge_sorted(support_, weights_, 1e-12 * domain.width());
}

Design Design::uniform(std::vector<double> support,
                       const IntervalDomain& domain) {
  std::vector<double> w(support.size(), 1.0 / support.size());
  return Design(std::move(support), std::move(w), domain);
}

Design Design::point_mass(double x, const IntervalDomain& domain) {
  return Design({x}, {1.0}, domain);
}

int Design::twice_index() const {
  const double tol = 1e-9 * domain_.width();
  int twice = 0;
  for (double x : support_) {
    bool boundary = std::abs(x - domain_.A) <= tol || std::abs(x - domain_.B) <= tol;
    twice += boundary ? 1 : 2;
  }
  return twice;
}

std::string Design::describe() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i) os << ", ";
    os << support_[i] << ": " << weights_[i];
  }
  os << "}";
  return os.str();
}

Design merge_close_support(const Design& design, double tol) {
  if (tol < 0.0) throw std::invalid_argument("merge_close_support: tol < 0");
  std::vector<double> pts = design.support();
  std::vector<double> wts = design.weights();
  merge_sorted(pts, wts, tol);
  // Merged means stay inside the original hull, hence inside the domain.
  return Design(std::move(pts), std::move(wts), design.domain());
}

Design mix(const Design& a, const Design& b, double alpha) {
  if (alpha < 0.0 || alpha > 1.0)
    throw std::invalid_argument("mix: alpha outside [0, 1]");
  std::vector<double> pts = a.support();
  std::vector<double> wts;
  wts.reserve(a.size() + b.size());
  for (double w : a.weights()) wts.push_back(alpha * w);
  pts.insert(pts.end(), b.support().begin(), b.support().end());
  for (double w : b.weights()) wts.push_back((1.0 - alpha) * w);
  return Design(std::move(pts), std::move(wts), a.domain());
}

}  // namespace chebdesign
