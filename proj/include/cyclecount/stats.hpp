#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclecount/closed_forms.hpp"
#include "cyclecount/engine.hpp"
#include "cyclecount/errors.hpp"
#include "cyclecount/graph.hpp"
#include "cyclecount/numeric.hpp"
#include "cyclecount/polynomial.hpp"
#include "cyclecount/sturm.hpp"

namespace cyclecount {

// --- Exact moments -------------------------------------------------------------

// Block count X of a uniformly random admissible partition: mean and variance
// from the derivatives of the generating polynomial at 1, kept exact.
struct MomentSummary {
  Rational mean;
  Rational variance;
  int k_min = 0;
  int k_max = 0;
  Integer total;
};

inline MomentSummary moments_from_polynomial(const Polynomial& p) {
  Integer total = p.total();
  if (p.is_zero() || total <= 0)
    throw parameter_error("moments_from_polynomial: requires p(1) > 0");
  auto [value, d1, d2] = p.eval_with_derivatives(Rational(1));
  MomentSummary m;
  m.total = total;
  m.mean = d1 / value;
  m.variance = d2 / value + m.mean - m.mean * m.mean;
  m.k_min = p.low_degree();
  m.k_max = p.degree();
  return m;
}

// --- Coefficient shape -----------------------------------------------------------

struct ShapeVerdict {
  bool log_concave = false;  // c_k^2 >= c_{k-1} c_{k+1} on a gap-free support
  bool unimodal = false;
  bool real_rooted = false;
  int first_violation = -1;  // index k of the first failed inequality, if any
};

inline ShapeVerdict shape_analysis(const Polynomial& p) {
  if (p.is_zero()) throw parameter_error("shape_analysis: zero polynomial");
  ShapeVerdict v;
  const int lo = p.low_degree();
  const int hi = p.degree();

  v.log_concave = true;
  for (int k = lo; k <= hi && v.log_concave; ++k) {
    if (p.coeff(k) == 0) {  // internal zero
      v.log_concave = false;
      v.first_violation = k;
    }
  }
  for (int k = lo + 1; k < hi && v.log_concave; ++k) {
    if (p.coeff(k) * p.coeff(k) < p.coeff(k - 1) * p.coeff(k + 1)) {
      v.log_concave = false;
      v.first_violation = k;
    }
  }

  v.unimodal = true;
  bool descending = false;
  for (int k = lo + 1; k <= hi && v.unimodal; ++k) {
    if (p.coeff(k) > p.coeff(k - 1) && descending) {
      v.unimodal = false;
      if (v.first_violation < 0) v.first_violation = k;
    }
    if (p.coeff(k) < p.coeff(k - 1)) descending = true;
  }

  v.real_rooted = sturm_real_rooted(p).real_rooted;
  return v;
}

// --- Printed moment formulas (claims) --------------------------------------------

// Printed path moment formulas, m = n - r.
inline std::pair<Rational, Rational> path_moments_claim(int n, int r) {
  if (n < 1 || r < 1 || r > n) throw parameter_error("path_moments_claim: need 1 <= r <= n");
  const long long m = n - r;
  const Integer F = fib(m + 1), L = lucas(m + 1);
  const Integer mLmF = Integer(m) * L - F;
  Rational mean = Rational(r) + Rational(mLmF, 5 * F);
  Rational var = Rational(Integer(5 * m) * (m + 1) * F * F - mLmF * mLmF - 5 * mLmF * F,
                          25 * F * F);
  return {mean, var};
}

// Printed cycle moment formulas (r >= 2), m = n - r.
inline std::pair<Rational, Rational> cycle_moments_claim(int n, int r) {
  if (r < 2 || r > n) throw parameter_error("cycle_moments_claim: need 2 <= r <= n");
  const long long m = n - r;
  if (m < 1) throw parameter_error("cycle_moments_claim: need n > r");
  const Integer F = fib(m), L = lucas(m);
  Rational ratio = Rational(Integer(m) * F, L);
  Rational mean = Rational(r) + ratio;
  Rational var = Rational(Integer(m) * (m - 1), 5) + Rational(6 * Integer(m) * F, 5 * L) -
                 ratio * ratio;
  return {mean, var};
}

// Printed complete-graph moment formulas.
inline std::pair<Rational, Rational> complete_moments_claim(int n, int r) {
  if (r < 1 || r > n) throw parameter_error("complete_moments_claim: need 1 <= r <= n");
  Rational mean = harmonic(n - 1) - harmonic(r - 1) + r;
  Rational var = 0;
  for (int i = r; i <= n - 1; ++i)
    var += Rational(1, i) - Rational(1, Integer(i) * i);
  return {mean, var};
}

// Printed star moment formulas, S_{n+1} = K_{1,n}, center restricted.
inline std::pair<Rational, Rational> star_moments_restricted_claim(int paper_n, int r) {
  if (paper_n < 1 || r < 1 || r > paper_n + 1)
    throw parameter_error("star_moments_restricted_claim: need 1 <= r <= n+1");
  const int s = paper_n - r + 1;
  return {Rational(r) + Rational(s, s + 1), Rational(s, Integer(s + 1) * (s + 1))};
}

// Printed star moment formulas, unrestricted center: degenerate at r+1 blocks.
inline std::pair<Rational, Rational> star_moments_unrestricted_claim(int r) {
  return {Rational(r + 1), Rational(0)};
}

// Printed double-star moment formulas (center-restricted case).
inline std::pair<Rational, Rational> double_star_moments_claim(int k, int m, int r1, int r2,
                                                               int r) {
  const int a = k - r1, b = m - r2;
  if (a < 0 || b < 0) throw parameter_error("double_star_moments_claim: r_i too large");
  Rational mean = Rational(r + 2) + Rational(a, a + 1) + Rational(b, b + 1);
  Rational var = Rational(a, Integer(a + 1) * (a + 1)) + Rational(b, Integer(b + 1) * (b + 1));
  return {mean, var};
}

// Printed path-complement moment formulas.
inline std::pair<Rational, Rational> pnc_moments_claim(int n, int r) {
  if (r < 1 || r > n) throw parameter_error("pnc_moments_claim: need 1 <= r <= n");
  Rational mean = Rational(r) + harmonic(n - 2) - harmonic(r - 1);
  Rational var = 0;
  for (int j = r; j <= n - 2; ++j) var += Rational(j - 1, Integer(j) * j);
  return {mean, var};
}

// --- Scalable closed-form polynomials for scans ----------------------------------
// Ground truth for moments is always polynomial-derived; these builders give
// the per-family polynomial at sizes far beyond the engine guard.

inline Polynomial scan_polynomial(Family family, int n, int r) {
  switch (family) {
    case Family::path:
      return path_polynomial(n, std::max(1, r));
    case Family::cycle: {
      if (r <= 1) return cycle_full(n);
      // Restricted form binom(k-r+2, n-k), engine-confirmed for n > r.
      if (n <= r) throw parameter_error("scan: restricted cycle needs n > r");
      std::vector<Integer> c(static_cast<size_t>(n) + 1);
      for (int k = r; k <= n; ++k) c[static_cast<size_t>(k)] = binomial(k - r + 2, n - k);
      return Polynomial(std::move(c));
    }
    case Family::complete:
      return rising_factorial(std::max(0, r), n);
    case Family::complement_path:
      return pnc_polynomial(n, std::max(1, r), PncBound::proof);
    default:
      throw parameter_error("scan: family has no scalable closed form (use path, cycle, "
                            "complete, or complement_path)");
  }
}

struct ScanPoint {
  int n = 0;
  Rational mean;
  Rational variance;
};

struct ClaimedConstant {
  std::string label;
  double value = 0.0;
  double abs_error = 0.0;  // |claimed - measured|
  bool within_band = false;
};

struct AsymptoticScanReport {
  Family family = Family::path;
  int r = 1;
  int n_lo = 0, n_hi = 0;
  std::string trend;                // "linear" or "logarithmic"
  std::vector<ScanPoint> points;    // sampled, endpoints always included
  // Linear families: mean increment mean(n) - mean(n-1) at both ends;
  // logarithmic families: mean - ln n at both ends.
  double measured_head = 0.0;
  double measured_tail = 0.0;
  bool slope_stable = false;        // |head - tail| <= 0.001
  double variance_tail_increment = 0.0;
  std::vector<ClaimedConstant> claimed;
};

inline AsymptoticScanReport asymptotic_scan(Family family, int n_lo, int n_hi, int r,
                                            double band = 1e-3) {
  if (n_lo < 3 || n_hi < n_lo) throw parameter_error("asymptotic_scan: bad range");
  AsymptoticScanReport rep;
  rep.family = family;
  rep.r = r;
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  const bool linear = (family == Family::path || family == Family::cycle);
  rep.trend = linear ? "linear" : "logarithmic";

  auto moments_at = [&](int n) { return moments_from_polynomial(scan_polynomial(family, n, r)); };

  const int step = std::max(1, (n_hi - n_lo) / 12);
  for (int n = n_lo; n <= n_hi; n += step) {
    auto m = moments_at(n);
    rep.points.push_back({n, m.mean, m.variance});
  }
  if (rep.points.back().n != n_hi) {
    auto m = moments_at(n_hi);
    rep.points.push_back({n_hi, m.mean, m.variance});
  }

  auto mean_of = [&](int n) {
    return static_cast<double>(moments_at(n).mean.convert_to<double>());
  };
  if (linear) {
    rep.measured_head = mean_of(n_lo + 1) - mean_of(n_lo);
    rep.measured_tail = mean_of(n_hi) - mean_of(n_hi - 1);
  } else {
    rep.measured_head = mean_of(n_lo) - std::log(n_lo);
    rep.measured_tail = mean_of(n_hi) - std::log(n_hi);
  }
  rep.slope_stable = std::abs(rep.measured_head - rep.measured_tail) <= band;
  rep.variance_tail_increment =
      (moments_at(n_hi).variance - moments_at(n_hi - 1).variance).convert_to<double>();

  auto add_claim = [&](const std::string& label, double value) {
    ClaimedConstant c;
    c.label = label;
    c.value = value;
    c.abs_error = std::abs(value - rep.measured_tail);
    c.within_band = c.abs_error <= band;
    rep.claimed.push_back(c);
  };
  if (family == Family::path) {
    add_claim("paper 0.276 (1/(phi+2))", 0.276);
    add_claim("paper table 1/sqrt(5)", 1.0 / std::sqrt(5.0));
  } else if (family == Family::cycle) {
    add_claim("paper 1/sqrt(5)", 1.0 / std::sqrt(5.0));
  } else if (family == Family::complete) {
    add_claim("gamma (mean - ln n limit)", 0.57721566490153286);
  } else if (family == Family::complement_path) {
    add_claim("gamma (mean - ln n limit)", 0.57721566490153286);
  }
  return rep;
}

// Exact check: mean(K_n, r=1) == H_n, n <= n_max.
inline bool complete_mean_is_harmonic(int n_max) {
  for (int n = 1; n <= n_max; ++n)
    if (moments_from_polynomial(rising_factorial(1, n)).mean != harmonic(n)) return false;
  return true;
}

// Exact check: Var is strictly increasing in n over [n_lo, n_hi] for the
// path/cycle closed forms (desk-scale substitute for the CLT's divergence).
inline bool variance_strictly_increasing(Family family, int n_lo, int n_hi, int r = 1) {
  std::optional<Rational> prev;
  for (int n = n_lo; n <= n_hi; ++n) {
    Rational var = moments_from_polynomial(scan_polynomial(family, n, r)).variance;
    if (prev && !(var > *prev)) return false;
    prev = var;
  }
  return true;
}

// --- Conjecture scanning -----------------------------------------------------------

struct ConjectureRow {
  std::string name;
  int n = 0;
  ShapeVerdict shape;              // at the graph's own r
  bool weak_r_monotone = true;     // coeff_{r+1}[k] <= coeff_r[k] for all k, r
  bool strict_r_monotone = true;   // strict somewhere for each r step (conjecture)
  bool restriction_invisible = false;  // some r >= 2 has {G k}_r == {G k} for all k
  int first_equal_r = 0;
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;
  std::vector<std::string> shape_violations;      // unimodality/log-concavity failures
  std::vector<std::string> strictness_failures;   // counterexample candidates
  std::vector<std::string> equality_graphs;       // graphs the restriction cannot see
};

template <typename CorpusRange>
ConjectureReport conjecture_scan(const CorpusRange& corpus, int r_max = 3,
                                 int engine_limit = kDefaultEngineLimit) {
  ConjectureReport report;
  for (const auto& entry : corpus) {
    const LabeledGraph& g = entry.graph;
    if (g.n < 1 || g.n > engine_limit) continue;
    ConjectureRow row;
    row.name = entry.name;
    row.n = g.n;
    BlockWeightTable table(g, engine_limit);
    std::vector<Polynomial> polys;
    const int top_r = std::min(g.n, r_max + 1);
    for (int r = 1; r <= top_r; ++r)
      polys.push_back(cycle_polynomial(g.with_r(r), table));

    row.shape = shape_analysis(polys[static_cast<size_t>(std::min(g.r, 1))]);
    if (!row.shape.log_concave || !row.shape.unimodal)
      report.shape_violations.push_back(entry.name);

    for (size_t i = 0; i + 1 < polys.size(); ++i) {
      bool strict = false;
      for (int k = 0; k <= g.n; ++k) {
        if (polys[i + 1].coeff(k) > polys[i].coeff(k)) row.weak_r_monotone = false;
        if (polys[i + 1].coeff(k) < polys[i].coeff(k)) strict = true;
      }
      if (!strict) row.strict_r_monotone = false;
    }
    if (!row.strict_r_monotone) report.strictness_failures.push_back(entry.name);

    for (size_t i = 1; i < polys.size(); ++i) {
      if (polys[i] == polys[0]) {
        row.restriction_invisible = true;
        row.first_equal_r = static_cast<int>(i) + 1;
        report.equality_graphs.push_back(entry.name + " (r=" + std::to_string(i + 1) + ")");
        break;
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace cyclecount
