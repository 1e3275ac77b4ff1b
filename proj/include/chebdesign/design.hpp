#pragma once

#include <string>
#include <vector>

namespace chebdesign {

struct IntervalDomain {
  double A;
  double B;

  IntervalDomain(double a, double b);
  double width() const { return B - A; }
  bool contains(double x) const { return x >= A && x <= B; }
};

// A finitely supported probability measure on an interval. Support points
// are kept strictly increasing; weights are strictly positive and sum to 1.
class Design {
public:
  // Sorts the points, merges near-duplicates (tol 1e-12 * width), drops
  // weights below 1e-12 and renormalizes. Throws std::invalid_argument if
  // the inputs cannot form a valid design.
  Design(std::vector<double> support, std::vector<double> weights,
         const IntervalDomain& domain);

  static Design uniform(std::vector<double> support,
                        const IntervalDomain& domain);
  static Design point_mass(double x, const IntervalDomain& domain);

  const std::vector<double>& support() const { return support_; }
  const std::vector<double>& weights() const { return weights_; }
  const IntervalDomain& domain() const { return domain_; }
  std::size_t size() const { return support_.size(); }

  // Support count with boundary points counted 1/2, returned doubled so the
  // result stays integral. A point within 1e-9 * width of A or B counts as
  // a boundary point.
  int twice_index() const;
  double index() const { return 0.5 * twice_index(); }

  std::string describe() const;

private:
  std::vector<double> support_;
  std::vector<double> weights_;
  IntervalDomain domain_;
};

// Merge support points closer than tol into their weighted mean.
Design merge_close_support(const Design& design, double tol);

// Convex mixture alpha * a + (1 - alpha) * b.
Design mix(const Design& a, const Design& b, double alpha);

}  // namespace chebdesign
