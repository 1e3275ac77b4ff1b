#include "chebdesign/chebyshev.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace chebdesign {

const char* to_string(ChebVerdict v) {
  switch (v) {
    case ChebVerdict::ChebPlus: return "CHEB_PLUS";
    case ChebVerdict::ChebMinus: return "CHEB_MINUS";
    case ChebVerdict::Indeterminate: return "INDETERMINATE";
    case ChebVerdict::Fail: return "FAIL";
  }
  return "?";
}

const char* to_string(ChebMethod m) {
  switch (m) {
    case ChebMethod::Determinant: return "DETERMINANT";
    case ChebMethod::Wronskian: return "WRONSKIAN";
    case ChebMethod::Both: return "BOTH";
  }
  return "?";
}

double cheb_determinant(const PsiSystem& psi, const std::vector<int>& indices,
                        const std::vector<double>& points) {
  const std::size_t n = indices.size();
  if (points.size() != n)
    throw std::invalid_argument("cheb_determinant: point/function count mismatch");
  for (std::size_t j = 1; j < n; ++j)
    if (!(points[j - 1] < points[j]))
      throw std::invalid_argument("cheb_determinant: points not strictly increasing");
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double v = psi.value(indices[i], points[j]);
      if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "cheb_determinant: Psi_" << indices[i] << " non-finite at x = "
           << points[j];
        throw std::runtime_error(os.str());
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }
  return m.determinant();
}

namespace {

// Hadamard bound on |det|; used as the scale for sign reliability.
double det_scale(const PsiSystem& psi, const std::vector<int>& indices,
                 const std::vector<double>& points) {
  double scale = 1.0;
  for (int idx : indices) {
    double s = 0.0;
    for (double x : points) {
      double v = psi.value(idx, x);
      s += v * v;
    }
    scale *= std::sqrt(s);
  }
  return std::max(scale, 1e-300);
}

struct SignScan {
  bool pos = false, neg = false, tiny = false;
  double min_scaled = 1e300;
  std::optional<ChebWitness> first_bad;
  long samples = 0;
};

void scan_tuple(const PsiSystem& psi, const std::vector<int>& indices,
                const std::vector<double>& pts, double tol, SignScan& sc) {
  double d = cheb_determinant(psi, indices, pts);
  double rel = d / det_scale(psi, indices, pts);
  ++sc.samples;
  sc.min_scaled = std::min(sc.min_scaled, std::abs(rel));
  if (std::abs(rel) < tol) {
    sc.tiny = true;
    return;
  }
  bool was_mixed = sc.pos && sc.neg;
  (rel > 0 ? sc.pos : sc.neg) = true;
  if (!was_mixed && sc.pos && sc.neg && !sc.first_bad) {
    ChebWitness w;
    w.points = pts;
    w.value = d;
    w.what = "determinant sign change";
    sc.first_bad = w;
  }
}

SignScan sweep_system(const PsiSystem& psi, const IntervalDomain& domain,
                      const std::vector<int>& indices,
                      const SamplerConfig& cfg, std::mt19937& rng) {
  SignScan sc;
  const std::size_t t = indices.size();
  const int G = std::max(cfg.grid_points, static_cast<int>(t) + 1);
  std::vector<double> grid(static_cast<std::size_t>(G));
  for (int i = 0; i < G; ++i)
    grid[static_cast<std::size_t>(i)] =
        domain.A + domain.width() * i / static_cast<double>(G - 1);

  // Deterministic windows over the grid at a few strides, including the
  // widest stride that spans the whole interval.
  std::vector<int> strides = {1, 2, std::max(1, (G - 1) / static_cast<int>(t - 1))};
  std::sort(strides.begin(), strides.end());
  strides.erase(std::unique(strides.begin(), strides.end()), strides.end());
  for (int s : strides) {
    for (int off = 0; off + s * static_cast<int>(t - 1) < G; ++off) {
      std::vector<double> pts(t);
      for (std::size_t j = 0; j < t; ++j)
        pts[j] = grid[static_cast<std::size_t>(off + s * static_cast<int>(j))];
      scan_tuple(psi, indices, pts, cfg.tol_det, sc);
    }
  }

  std::uniform_real_distribution<double> unif(domain.A, domain.B);
  const double min_gap = 1e-10 * domain.width();
  for (int r = 0; r < cfg.random_tuples; ++r) {
    std::vector<double> pts(t);
    for (double& x : pts) x = unif(rng);
    std::sort(pts.begin(), pts.end());
    bool ok = true;
    for (std::size_t j = 1; j < t; ++j)
      if (pts[j] - pts[j - 1] < min_gap) ok = false;
    if (!ok) continue;
    scan_tuple(psi, indices, pts, cfg.tol_det, sc);
  }
  return sc;
}

}  // namespace

ChebReport check_chebyshev_determinant(const PsiSystem& psi,
                                       const IntervalDomain& domain,
                                       const SamplerConfig& config) {
  if (psi.k < 1)
    throw std::invalid_argument("check_chebyshev_determinant: k < 1");
  std::mt19937 rng(config.seed);

  std::vector<int> sub(static_cast<std::size_t>(psi.k));
  for (int i = 0; i < psi.k; ++i) sub[static_cast<std::size_t>(i)] = i;
  std::vector<int> full(static_cast<std::size_t>(psi.k) + 1);
  for (int i = 0; i <= psi.k; ++i) full[static_cast<std::size_t>(i)] = i;

  SignScan sub_scan = sweep_system(psi, domain, sub, config, rng);
  SignScan full_scan = sweep_system(psi, domain, full, config, rng);

  ChebReport rep;
  rep.method = ChebMethod::Determinant;
  rep.samples_checked = sub_scan.samples + full_scan.samples;
  rep.min_abs_det = std::min(sub_scan.min_scaled, full_scan.min_scaled);

  auto fail_with = [&](const std::optional<ChebWitness>& w, const char* note) {
    rep.verdict = ChebVerdict::Fail;
    rep.witness = w;
    rep.note = note;
    return rep;
  };

  if (sub_scan.pos && sub_scan.neg)
    return fail_with(sub_scan.first_bad, "subsystem determinant changes sign");
  if (full_scan.pos && full_scan.neg)
    return fail_with(full_scan.first_bad, "full-system determinant changes sign");
  if (sub_scan.neg) {
    ChebWitness w;
    w.what = "subsystem determinants negative";
    return fail_with(w, "first k functions are not a Chebyshev system as ordered");
  }
  // Samples below tol_det carry no reliable sign (e.g. nearly coincident
  // points) and are ignored; a verdict needs at least one reliable sample
  // of each system size.
  if (!sub_scan.pos || (!full_scan.pos && !full_scan.neg)) {
    rep.verdict = ChebVerdict::Indeterminate;
    rep.note = "no determinant sample above the reliability tolerance";
    return rep;
  }
  rep.verdict = full_scan.pos ? ChebVerdict::ChebPlus : ChebVerdict::ChebMinus;
  if (sub_scan.tiny || full_scan.tiny)
    rep.note = "near-zero determinant samples ignored";
  return rep;
}

WronskianChain::WronskianChain(const PsiSystem& psi, const IntervalDomain& domain)
    : psi_(psi), domain_(domain) {
  if (psi.k < 1) throw std::invalid_argument("WronskianChain: k < 1");
}

std::vector<double> WronskianChain::values(double x) const {
  const int k = psi_.k;
  const std::size_t order = static_cast<std::size_t>(k) + 2;
  std::vector<Taylor> s(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i)
    s[static_cast<std::size_t>(i)] = psi_.series(i, x, order);

  std::vector<double> w(static_cast<std::size_t>(k) + 1);
  w[0] = s[0].value();
  for (int j = 0; j < k; ++j) {
    const Taylor wj = s[static_cast<std::size_t>(j)];
    if (wj.value() == 0.0 || !std::isfinite(wj.value())) {
      std::ostringstream os;
      os << "Wronskian chain: w_" << j << " vanishes at x = " << x;
      throw std::domain_error(os.str());
    }
    for (int m = j + 1; m <= k; ++m) {
      auto& sm = s[static_cast<std::size_t>(m)];
      sm = (sm / wj).deriv();
    }
    w[static_cast<std::size_t>(j + 1)] = s[static_cast<std::size_t>(j + 1)].value();
  }
  return w;
}

double WronskianChain::F(double x) const {
  std::vector<double> w = values(x);
  double f = 1.0;
  for (std::size_t j = 1; j < w.size(); ++j) f *= w[j];
  return f;
}

ChebReport check_chebyshev_wronskian(const PsiSystem& psi,
                                     const IntervalDomain& domain,
                                     int grid_n) {
  WronskianChain chain(psi, domain);
  const int k = psi.k;
  grid_n = std::max(grid_n, 3);

  ChebReport rep;
  rep.method = ChebMethod::Wronskian;
  if (!psi.analytic)
    rep.note = "finite-difference derivatives (reduced accuracy)";

  std::vector<double> fvals(static_cast<std::size_t>(grid_n));
  std::vector<double> xs(static_cast<std::size_t>(grid_n));
  bool sub_ok = true;
  std::optional<ChebWitness> sub_witness;
  double max_abs_f = 0.0;

  for (int i = 0; i < grid_n; ++i) {
    double x = domain.A + domain.width() * i / static_cast<double>(grid_n - 1);
    xs[static_cast<std::size_t>(i)] = x;
    std::vector<double> w;
    try {
      w = chain.values(x);
    } catch (const std::domain_error& e) {
      rep.verdict = ChebVerdict::Indeterminate;
      ChebWitness wt;
      wt.points = {x};
      wt.what = e.what();
      rep.witness = wt;
      rep.note = "chain function vanishes on the grid";
      rep.samples_checked = i;
      return rep;
    }
    for (int j = 1; j < k; ++j) {
      if (w[static_cast<std::size_t>(j)] <= 0.0 && sub_ok) {
        sub_ok = false;
        ChebWitness wt;
        wt.points = {x};
        wt.value = w[static_cast<std::size_t>(j)];
        wt.level = j;
        wt.what = "w_j not positive for j < k";
        sub_witness = wt;
      }
    }
    double f = 1.0;
    for (int j = 1; j <= k; ++j) f *= w[static_cast<std::size_t>(j)];
    fvals[static_cast<std::size_t>(i)] = f;
    max_abs_f = std::max(max_abs_f, std::abs(f));
  }
  rep.samples_checked = grid_n;

  const double tol_f = 1e-12 * std::max(1.0, max_abs_f);
  double min_rel = 1e300;
  bool pos = false, neg = false;
  std::optional<ChebWitness> change;
  for (int i = 0; i < grid_n; ++i) {
    double f = fvals[static_cast<std::size_t>(i)];
    min_rel = std::min(min_rel, std::abs(f) / std::max(1.0, max_abs_f));
    if (std::abs(f) < tol_f) continue;
    (f > 0 ? pos : neg) = true;
    if (pos && neg && !change) {
      ChebWitness wt;
      wt.points = {xs[static_cast<std::size_t>(i > 0 ? i - 1 : 0)],
                   xs[static_cast<std::size_t>(i)]};
      wt.value = f;
      wt.what = "F changes sign";
      change = wt;
    }
  }
  rep.min_abs_det = min_rel;

  if (pos && neg) {
    rep.verdict = ChebVerdict::Fail;
    rep.witness = change;
    rep.note = "F changes sign on the grid";
    return rep;
  }
  if (min_rel * std::max(1.0, max_abs_f) < tol_f || (!pos && !neg)) {
    rep.verdict = ChebVerdict::Indeterminate;
    rep.note = "|F| within tolerance of zero";
    return rep;
  }
  if (!sub_ok) {
    rep.verdict = ChebVerdict::Indeterminate;
    rep.witness = sub_witness;
    rep.note = "subsystem chain condition w_1..w_{k-1} > 0 not met";
    return rep;
  }
  rep.verdict = pos ? ChebVerdict::ChebPlus : ChebVerdict::ChebMinus;
  return rep;
}

std::vector<double> yang_triangle_diagonal(const PsiSystem& psi, double x) {
  const int k = psi.k;
  const std::size_t order = static_cast<std::size_t>(k) + 2;
  std::vector<Taylor> f(static_cast<std::size_t>(k));
  for (int l = 1; l <= k; ++l)
    f[static_cast<std::size_t>(l - 1)] = psi.series(l, x, order).deriv();

  std::vector<double> diag(static_cast<std::size_t>(k));
  diag[0] = f[0].value();
  for (int t = 2; t <= k; ++t) {
    const Taylor prev_diag = f[static_cast<std::size_t>(t - 2)];
    if (prev_diag.value() == 0.0) {
      std::ostringstream os;
      os << "triangle array: f_{" << t - 1 << "," << t - 1 << "} vanishes at x = " << x;
      throw std::domain_error(os.str());
    }
    for (int l = t; l <= k; ++l) {
      auto& fl = f[static_cast<std::size_t>(l - 1)];
      fl = (fl / prev_diag).deriv();
    }
    diag[static_cast<std::size_t>(t - 1)] = f[static_cast<std::size_t>(t - 1)].value();
  }
  return diag;
}

double wronskian_determinant(const PsiSystem& psi, double x) {
  const int k = psi.k;
  Eigen::MatrixXd m(k + 1, k + 1);
  for (int i = 0; i <= k; ++i) {
    Taylor s = psi.series(i, x, static_cast<std::size_t>(k));
    for (int j = 0; j <= k; ++j)
      m(i, j) = s.derivative(static_cast<std::size_t>(j));
  }
  return m.determinant();
}

double wronskian_product_form(const std::vector<double>& w) {
  const std::size_t k = w.size() - 1;
  double p = 1.0;
  for (std::size_t j = 0; j <= k; ++j)
    p *= std::pow(w[j], static_cast<double>(k + 1 - j));
  return p;
}

ChebReport merge_reports(const ChebReport& det, const ChebReport& wron) {
  auto definite = [](const ChebReport& r) {
    return r.verdict == ChebVerdict::ChebPlus || r.verdict == ChebVerdict::ChebMinus;
  };
  ChebReport out;
  out.method = ChebMethod::Both;
  out.samples_checked = det.samples_checked + wron.samples_checked;
  out.min_abs_det = std::min(det.min_abs_det, wron.min_abs_det);

  if (det.verdict == ChebVerdict::Fail || wron.verdict == ChebVerdict::Fail) {
    const ChebReport& f = det.verdict == ChebVerdict::Fail ? det : wron;
    out.verdict = ChebVerdict::Fail;
    out.witness = f.witness;
    out.note = f.note;
    return out;
  }
  if (definite(det) && definite(wron)) {
    if (det.verdict != wron.verdict) {
      out.verdict = ChebVerdict::Fail;
      out.note = "determinant and Wronskian verdicts disagree";
      return out;
    }
    out.verdict = det.verdict;
    return out;
  }
  if (definite(det)) {
    out.verdict = det.verdict;
    out.note = wron.note.empty() ? "Wronskian check indeterminate" : wron.note;
    return out;
  }
  if (definite(wron)) {
    out.verdict = wron.verdict;
    out.note = det.note.empty() ? "determinant check indeterminate" : det.note;
    return out;
  }
  out.verdict = ChebVerdict::Indeterminate;
  out.note = det.note;
  return out;
}

}  // namespace chebdesign
