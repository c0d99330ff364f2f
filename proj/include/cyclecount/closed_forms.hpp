#pragma once

#include <vector>

#include "cyclecount/errors.hpp"
#include "cyclecount/numeric.hpp"
#include "cyclecount/polynomial.hpp"

// Evaluators for the published closed forms, exactly as printed. These are
// *claims*: truth status comes from comparing them against the oracle/engine,
// never from the formulas themselves. Where a printed statement conflicts
// with its own proof, both variants are provided and registered separately.

namespace cyclecount {

// --- Paths -------------------------------------------------------------------

// {P_n brack k}_r = C(k-r+1, n-k), r >= 1.
inline Integer path_coefficient(int n, int k, int r) {
  if (n < 1 || r < 1 || r > n) throw parameter_error("path_coefficient: need 1 <= r <= n");
  return binomial(k - r + 1, n - k);
}

// C_r(P_n, x) = x^{r-1} f_{n-r+1}(x).
inline Polynomial path_polynomial(int n, int r) {
  if (n < 1 || r < 1 || r > n) throw parameter_error("path_polynomial: need 1 <= r <= n");
  return path_fib(n - r + 1).shifted(r - 1);
}

inline Integer path_total_claim(int n, int r) {  // printed: F_{n-r+1}
  if (n < 1 || r < 1 || r > n) throw parameter_error("path_total_claim: need 1 <= r <= n");
  return fib(n - r + 1);
}
inline Integer path_total_corrected(int n, int r) {  // companion: F_{n-r+2}
  if (n < 1 || r < 1 || r > n) throw parameter_error("path_total_corrected: need 1 <= r <= n");
  return fib(n - r + 2);
}

// --- Cycles ------------------------------------------------------------------

// Unrestricted (r <= 1): {C_n brack 1} = 2, {C_n brack k} = (n/k) C(k, n-k).
inline Integer cycle_coefficient_unrestricted(int n, int k) {
  if (n < 3) throw parameter_error("cycle_coefficient: need n >= 3");
  if (k < 1 || k > n) return 0;
  if (k == 1) return 2;
  return Integer(n) * binomial(k, n - k) / k;
}

// Properties-table variant for k > 1: C(k, n-k) + C(k-1, n-k-1).
inline Integer cycle_coefficient_pascal_form(int n, int k) {
  if (n < 3) throw parameter_error("cycle_coefficient_pascal_form: need n >= 3");
  if (k <= 1 || k > n) return 0;
  return binomial(k, n - k) + binomial(k - 1, n - k - 1);
}

// Restricted: {C_n brack k}_r = C(k-r+2, n-k). The proof's four cases need
// two distinct restricted boundary vertices, so the registered domain is
// r >= 2; r = 1 dispatches to the unrestricted theorem.
inline Integer cycle_coefficient(int n, int k, int r) {
  if (n < 3) throw parameter_error("cycle_coefficient: need n >= 3");
  if (r <= 1) return cycle_coefficient_unrestricted(n, k);
  if (r > n) throw parameter_error("cycle_coefficient: need r <= n");
  return binomial(k - r + 2, n - k);
}

inline Polynomial cycle_polynomial_unrestricted_claim(int n) {  // 2x + sum ...
  return cycle_full(n);
}

inline Integer cycle_total_claim(int n) {  // printed: L_n + 1
  if (n < 3) throw parameter_error("cycle_total_claim: need n >= 3");
  return lucas(n) + 1;
}
inline Integer cycle_total_corrected(int n) {  // companion: L_n + 2
  if (n < 3) throw parameter_error("cycle_total_corrected: need n >= 3");
  return lucas(n) + 2;
}

inline Integer cycle_r_total_claim(int n, int r) {  // F_{n-r+3}, r >= 2
  if (n < 3 || r < 2 || r > n) throw parameter_error("cycle_r_total_claim: need 2 <= r <= n");
  return fib(n - r + 3);
}

// Consecutive-restricted reading: C_r(C_n, x) = x^{r-1} f_{n-r+1}(x).
inline Polynomial consecutive_cycle_fib_polynomial(int n, int r) {
  if (r < 2 || r > n) throw parameter_error("consecutive_cycle_fib: need 2 <= r <= n");
  return path_fib(n - r + 1).shifted(r - 1);
}

enum class LucasVariant { full, matching };

// Periodic-structure reading: C_r(C_n, x) = x^{r-1} l_{n-r}(x). The printed
// statement leaves open whether l is the full cycle polynomial or the
// matching-only one, so both variants are evaluated.
inline Polynomial cycle_lucas_polynomial(int n, int r, LucasVariant variant) {
  if (r < 1 || n - r < 3)
    throw parameter_error("cycle_lucas_polynomial: need r >= 1 and n-r >= 3");
  Polynomial l =
      variant == LucasVariant::full ? cycle_full(n - r) : cycle_matching(n - r);
  return l.shifted(r - 1);
}

inline Integer cycle_lucas_total_claim(int n, int r) {  // L_{n-r}
  if (r < 1 || n - r < 1) throw parameter_error("cycle_lucas_total_claim: need n-r >= 1");
  return lucas(n - r);
}

// --- Complete graphs ----------------------------------------------------------

// C_r(K_n, x) = x^r prod_{i=r}^{n-1} (x+i); coefficients are the classical
// r-Stirling numbers of the first kind.
inline Polynomial complete_polynomial(int n, int r) {
  if (r < 0 || r > n) throw parameter_error("complete_polynomial: need 0 <= r <= n");
  return rising_factorial(r, n);
}

inline Integer complete_coefficient(int n, int k, int r) {
  return complete_polynomial(n, r).coeff(k);
}

inline Integer complete_total(int n, int r) {  // n! / r!
  if (r < 0 || r > n) throw parameter_error("complete_total: need 0 <= r <= n");
  Integer result = 1;
  for (int i = r + 1; i <= n; ++i) result *= i;
  return result;
}

// Broder recurrence {K_n k}_r = {K_{n-1} k-1}_r + (n-1) {K_{n-1} k}_r with
// base {K_r r}_r = 1. table[n][k] for r <= n <= n_max.
inline std::vector<std::vector<Integer>> broder_recurrence_table(int n_max, int r) {
  if (r < 0 || n_max < r || n_max > 64)
    throw parameter_error("broder_recurrence_table: need 0 <= r <= n_max <= 64");
  std::vector<std::vector<Integer>> table(static_cast<size_t>(n_max) + 1,
                                          std::vector<Integer>(static_cast<size_t>(n_max) + 1));
  table[static_cast<size_t>(r)][static_cast<size_t>(r)] = 1;
  for (int n = r + 1; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k) {
      Integer v = (k > 0) ? table[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)] : 0;
      v += Integer(n - 1) * table[static_cast<size_t>(n - 1)][static_cast<size_t>(k)];
      table[static_cast<size_t>(n)][static_cast<size_t>(k)] = v;
    }
  return table;
}

// --- Path complement ----------------------------------------------------------

enum class PncBound { statement, proof };  // product upper index n-3 vs n-2

// C_r(P_n^c, x) = x^r prod_{i=r-1}^{B} (x+i). The theorem statement prints
// B = n-3 while its own proof and recurrence give B = n-2; both are claims.
inline Polynomial pnc_polynomial(int n, int r, PncBound bound) {
  if (r < 1 || r > n) throw parameter_error("pnc_polynomial: need 1 <= r <= n");
  const int hi = bound == PncBound::statement ? n - 3 : n - 2;
  Polynomial p = Polynomial::monomial(r);
  for (int i = r - 1; i <= hi; ++i) p *= Polynomial{Integer(i), Integer(1)};
  return p;
}

// --- Stars, wheels, fans --------------------------------------------------------

// C(S_{1,n-1}, x) = x^n + (n-1) x^{n-1} for the star on n vertices.
inline Polynomial star_polynomial(int n) {
  if (n < 1) throw parameter_error("star_polynomial: need n >= 1");
  return Polynomial::monomial(n) + Polynomial::monomial(n - 1, n - 1);
}

// Star theorem indexing: S_n has n+1 vertices and a restricted center;
// {S_n k}_r is n-r+1 at k = n, 1 at k = n+1, else 0.
inline Integer star_r_coefficient(int paper_n, int k, int r) {
  if (paper_n < 1 || r < 1 || r > paper_n + 1)
    throw parameter_error("star_r_coefficient: need 1 <= r <= n+1");
  if (k == paper_n + 1) return 1;
  if (k == paper_n) return paper_n - r + 1;
  return 0;
}

inline Polynomial star_r_polynomial(int paper_n, int r) {
  if (paper_n < 1 || r < 1 || r > paper_n + 1)
    throw parameter_error("star_r_polynomial: need 1 <= r <= n+1");
  return Polynomial::monomial(paper_n + 1) +
         Polynomial::monomial(paper_n, paper_n - r + 1);
}

inline Integer star_total_claim(int paper_n, int r) {  // n - r + 2
  if (paper_n < 1 || r < 1 || r > paper_n + 1)
    throw parameter_error("star_total_claim: need 1 <= r <= n+1");
  return paper_n - r + 2;
}

// {W_n brack k}_r as printed (W_n has n+1 vertices; binomials vanish outside
// their range).
inline Integer wheel_coefficient(int n, int k, int r) {
  if (n < 3 || r < 1) throw parameter_error("wheel_coefficient: need n >= 3, r >= 1");
  Integer value = Integer(n) * binomial(k - r, n - k);
  value += Integer(n - r) * binomial(k - r + 1, n - k);
  value += 2 * binomial(k - r + 2, n - k + 1);
  Integer inner = 0;
  for (int ell = 2; ell <= n - k + 1; ++ell) inner += binomial(k, n - ell - k - r + 2);
  value += Integer(n - r + 1) * inner;
  return value;
}

inline Polynomial wheel_polynomial_claim(int n, int r) {
  std::vector<Integer> c(static_cast<size_t>(n) + 2);
  for (int k = r; k <= n + 1; ++k) c[static_cast<size_t>(k)] = wheel_coefficient(n, k, r);
  return Polynomial(std::move(c));
}

inline Integer wheel_total_claim(int n, int r) {
  if (n < 3 || r < 1) throw parameter_error("wheel_total_claim: need n >= 3, r >= 1");
  return fib(n - r + 3) + fib(n - r + 2) + Integer(n + 1) * fib(n - r + 1) +
         Integer(n - r + 1) * (fib(n - r + 1) - 1);
}

// {F_n brack k}_r as printed (F_n has n+1 vertices).
inline Integer fan_coefficient(int n, int k, int r) {
  if (n < 1 || r < 1) throw parameter_error("fan_coefficient: need n >= 1, r >= 1");
  Integer value = binomial(k - r + 1, n - k + 1);
  value += Integer(n + r - 1) * binomial(k - r, n - k);
  Integer inner = 0;
  for (int ell = 2; ell <= n - k + 1; ++ell) inner += binomial(k, n - ell - k - r + 2);
  value += Integer(n - r + 1) * inner;
  return value;
}

inline Polynomial fan_polynomial_claim(int n, int r) {
  std::vector<Integer> c(static_cast<size_t>(n) + 2);
  for (int k = r; k <= n + 1; ++k) c[static_cast<size_t>(k)] = fan_coefficient(n, k, r);
  return Polynomial(std::move(c));
}

inline Integer fan_total_claim(int n, int r) {
  if (n < 1 || r < 1) throw parameter_error("fan_total_claim: need n >= 1, r >= 1");
  return fib(n - r + 2) + fib(n - r + 1) + Integer(n + 1) * fib(n - r) +
         Integer(n - r + 1) * (fib(n - r) - 1);
}

// --- Bridge composites ----------------------------------------------------------

// C(T_{n,m}, x) = l_n(x) f_m(x) + x f_{n-1}(x) f_{m-1}(x).
inline Polynomial tadpole_polynomial(int n, int m, LucasVariant variant) {
  if (n < 3 || m < 1) throw parameter_error("tadpole_polynomial: need n >= 3, m >= 1");
  Polynomial l = variant == LucasVariant::full ? cycle_full(n) : cycle_matching(n);
  return l * path_fib(m) + (path_fib(n - 1) * path_fib(m - 1)).shifted(1);
}

// Printed coefficient convolution for the tadpole.
inline Integer tadpole_coefficient_claim(int n, int m, int k) {
  if (n < 3 || m < 1) throw parameter_error("tadpole_coefficient_claim: need n >= 3, m >= 1");
  Integer total = 0;
  for (int i = 0; i <= m; ++i) {
    total += binomial(i, m - i) *
             (binomial(k - i - 1, n - k + i) + 2 * binomial(k - i - 1, n - k + i - 1));
  }
  for (int j = 0; j <= m - 1; ++j)
    total += binomial(j, m - 1 - j) * binomial(k - j - 1, n - k + j);
  return total;
}

// C(L_{n,m}, x) = x^{rising(n-1)} [ (x+n-1) f_m(x) + x f_{m-1}(x) ].
inline Polynomial lollipop_polynomial(int n, int m) {
  if (n < 2 || m < 1) throw parameter_error("lollipop_polynomial: need n >= 2, m >= 1");
  Polynomial bracket =
      Polynomial{Integer(n - 1), Integer(1)} * path_fib(m) + path_fib(m - 1).shifted(1);
  return rising_factorial(1, n - 1) * bracket;
}

// C(B_n, x) = C(K_n, x)^2 + x C(K_{n-1}, x)^2.
inline Polynomial barbell_polynomial(int n) {
  if (n < 2) throw parameter_error("barbell_polynomial: need n >= 2");
  Polynomial kn = rising_factorial(1, n);
  Polynomial kn1 = rising_factorial(1, n - 1);
  return kn * kn + (kn1 * kn1).shifted(1);
}

// Double star S_{k,m} printed bridge decomposition with per-star restricted
// counts r1, r2 (k and m are the two star orders, k + m vertices total).
inline Polynomial double_star_polynomial_claim(int k, int m, int r1, int r2) {
  if (k < 2 || m < 2)
    throw parameter_error("double_star_polynomial_claim: need both star orders >= 2");
  Polynomial a = Polynomial::monomial(k) + Polynomial::monomial(k - 1, k - r1);
  Polynomial b = Polynomial::monomial(m) + Polynomial::monomial(m - 1, m - r2);
  Polynomial a1 = Polynomial::monomial(k - 1) + Polynomial::monomial(k - 2, k - r1 - 1);
  Polynomial b1 = Polynomial::monomial(m - 1) + Polynomial::monomial(m - 2, m - r2 - 1);
  return a * b + (a1 * b1).shifted(1);
}

}  // namespace cyclecount
