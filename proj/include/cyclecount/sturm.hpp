#pragma once

#include <vector>

#include "cyclecount/errors.hpp"
#include "cyclecount/numeric.hpp"
#include "cyclecount/polynomial.hpp"

namespace cyclecount {

struct RealRootSummary {
  bool real_rooted = false;     // square-free part has deg(p*) distinct real roots
  int distinct_real_roots = 0;  // distinct real roots of the square-free part
  int square_free_degree = 0;
};

namespace detail {

// Local rational polynomial helpers for the Sturm chain. Coefficients are
// index-by-degree with trailing zeros trimmed; empty = zero polynomial.
using RatPoly = std::vector<Rational>;

inline void rp_trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int rp_degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

inline RatPoly rp_derivative(const RatPoly& p) {
  if (p.size() <= 1) return {};
  RatPoly d(p.size() - 1);
  for (size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * Rational(static_cast<int>(k));
  return d;
}

// Make the polynomial monic; keeps the Euclidean remainders small.
inline void rp_monic(RatPoly& p) {
  if (p.empty()) return;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
}

// Remainder of a by b (b nonzero).
inline RatPoly rp_rem(RatPoly a, const RatPoly& b) {
  while (rp_degree(a) >= rp_degree(b) && !a.empty()) {
    Rational factor = a.back() / b.back();
    int shift = rp_degree(a) - rp_degree(b);
    for (size_t i = 0; i < b.size(); ++i)
      a[i + static_cast<size_t>(shift)] -= factor * b[i];
    a.pop_back();
    rp_trim(a);
  }
  return a;
}

inline RatPoly rp_quot(RatPoly a, const RatPoly& b) {
  RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (rp_degree(a) >= rp_degree(b) && !a.empty()) {
    Rational factor = a.back() / b.back();
    int shift = rp_degree(a) - rp_degree(b);
    q[static_cast<size_t>(shift)] = factor;
    for (size_t i = 0; i < b.size(); ++i)
      a[i + static_cast<size_t>(shift)] -= factor * b[i];
    a.pop_back();
    rp_trim(a);
  }
  rp_trim(q);
  return q;
}

inline RatPoly rp_gcd(RatPoly a, RatPoly b) {
  rp_trim(a);
  rp_trim(b);
  while (!b.empty()) {
    RatPoly r = rp_rem(a, b);
    a = std::move(b);
    b = std::move(r);
    rp_monic(b);
  }
  rp_monic(a);
  return a;
}

inline int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace detail

// Exact real-root analysis: compute the square-free part p / gcd(p, p') and
// run a Sturm chain over the rationals. A polynomial is reported real-rooted
// iff its square-free part has as many distinct real roots as its degree
// (multiplicities cannot hide complex roots).
inline RealRootSummary sturm_real_rooted(const Polynomial& p) {
  if (p.is_zero()) throw parameter_error("sturm_real_rooted: zero polynomial");

  detail::RatPoly rp(p.coeffs().size());
  for (size_t i = 0; i < p.coeffs().size(); ++i) rp[i] = Rational(p.coeffs()[i]);
  detail::rp_trim(rp);

  RealRootSummary out;
  if (detail::rp_degree(rp) == 0) {
    out.real_rooted = true;  // nonzero constant: vacuously real-rooted
    return out;
  }

  detail::RatPoly g = detail::rp_gcd(rp, detail::rp_derivative(rp));
  detail::RatPoly sf = detail::rp_quot(rp, g);
  detail::rp_monic(sf);
  out.square_free_degree = detail::rp_degree(sf);

  // Sturm chain on the square-free part.
  std::vector<detail::RatPoly> chain;
  chain.push_back(sf);
  chain.push_back(detail::rp_derivative(sf));
  while (!chain.back().empty() && detail::rp_degree(chain.back()) > 0) {
    detail::RatPoly r = detail::rp_rem(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }

  // Sign variation count at -inf and +inf from leading terms.
  auto variations = [&chain](bool at_plus_inf) {
    int count = 0, prev = 0;
    for (const auto& q : chain) {
      if (q.empty()) continue;
      int s = detail::sign_of(q.back());
      if (!at_plus_inf && detail::rp_degree(q) % 2 == 1) s = -s;
      if (prev != 0 && s != 0 && s != prev) ++count;
      if (s != 0) prev = s;
    }
    return count;
  };

  out.distinct_real_roots = variations(false) - variations(true);
  out.real_rooted = (out.distinct_real_roots == out.square_free_degree);
  return out;
}

}  // namespace cyclecount
