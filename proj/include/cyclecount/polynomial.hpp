#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cyclecount/errors.hpp"
#include "cyclecount/numeric.hpp"

namespace cyclecount {

// Dense univariate polynomial over arbitrary-precision integers,
// coefficient of x^k at index k. The zero polynomial has no coefficients.
// Cycle polynomials C_r(G, x) are stored in this form: coeff[k] = number of
// r-restricted cycle partitions of G into k blocks.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Integer> coeffs) : c_(coeffs) { trim(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return monomial(0); }
  // c * x^k
  static Polynomial monomial(int k, Integer coeff = 1) {
    if (coeff == 0) return Polynomial();
    std::vector<Integer> c(static_cast<size_t>(k) + 1);
    c.back() = std::move(coeff);
    return Polynomial(std::move(c));
  }

  const std::vector<Integer>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Integer coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(k)];
  }
  // Lowest index with a nonzero coefficient (-1 for the zero polynomial).
  int low_degree() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<int>(i);
    return -1;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] == 0) continue;
        c[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Polynomial(std::move(c));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // p * x^k
  Polynomial shifted(int k) const {
    if (is_zero()) return Polynomial();
    std::vector<Integer> c(c_.size() + static_cast<size_t>(k));
    std::copy(c_.begin(), c_.end(), c.begin() + k);
    return Polynomial(std::move(c));
  }
  // p / x; requires coeff[0] == 0.
  Polynomial div_x() const {
    if (is_zero()) return Polynomial();
    if (c_[0] != 0)
      throw parameter_error("div_x: polynomial has a nonzero constant term");
    return Polynomial(std::vector<Integer>(c_.begin() + 1, c_.end()));
  }
  Polynomial scaled(const Integer& s) const {
    if (s == 0) return Polynomial();
    std::vector<Integer> c(c_);
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
  }
  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Integer> c(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) c[k - 1] = c_[k] * Integer(k);
    return Polynomial(std::move(c));
  }

  Integer eval(const Integer& x) const {
    Integer acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Rational(c_[i]);
    return acc;
  }
  // Exact (p(x0), p'(x0), p''(x0)).
  std::array<Rational, 3> eval_with_derivatives(const Rational& x0) const {
    return {eval(x0), derivative().eval(x0), derivative().derivative().eval(x0)};
  }
  // Sum of coefficients = p(1).
  Integer total() const {
    Integer acc = 0;
    for (const auto& v : c_) acc += v;
    return acc;
  }

  // JSON: array of decimal strings, index 0 first.
  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : c_) arr.push_back(to_decimal(v));
    return arr;
  }
  static Polynomial from_json(const nlohmann::json& arr) {
    if (!arr.is_array()) throw parse_error("polynomial: expected JSON array");
    std::vector<Integer> c;
    c.reserve(arr.size());
    for (const auto& item : arr) {
      if (!item.is_string()) throw parse_error("polynomial: coefficients must be decimal strings");
      c.emplace_back(item.get<std::string>());
    }
    return Polynomial(std::move(c));
  }

  // Human-readable form, highest power first ("x^4 + 6x^3 + ...").
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Integer& ck = c_[static_cast<size_t>(k)];
      if (ck == 0) continue;
      if (!out.empty()) out += (ck < 0) ? " - " : " + ";
      else if (ck < 0) out += "-";
      Integer a = boost::multiprecision::abs(ck);
      if (a != 1 || k == 0) out += a.str();
      if (k > 0) out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

// --- Special families -------------------------------------------------------

// Fibonacci path polynomial f_m(x) = sum_k C(k, m-k) x^k; f_0 = 1, f_1 = x.
// f_m(1) = F_{m+1}.
inline Polynomial path_fib(int m) {
  if (m < 0) throw parameter_error("path_fib: m must be >= 0");
  if (m == 0) return Polynomial::one();
  std::vector<Integer> c(static_cast<size_t>(m) + 1);
  for (int k = (m + 1) / 2; k <= m; ++k) c[static_cast<size_t>(k)] = binomial(k, m - k);
  return Polynomial(std::move(c));
}

// Full cycle polynomial 2x + sum_{k>=2} (m/k) C(k, m-k) x^k, m >= 3.
// Includes the oriented Hamiltonian term; value at 1 is L_m + 2.
inline Polynomial cycle_full(int m) {
  if (m < 3) throw parameter_error("cycle_full: m must be >= 3");
  std::vector<Integer> c(static_cast<size_t>(m) + 1);
  c[1] = 2;
  for (int k = 2; k <= m; ++k) c[static_cast<size_t>(k)] = binomial(k, m - k) * m / k;
  return Polynomial(std::move(c));
}

// Matching-only cycle polynomial (no Hamiltonian term); value at 1 is L_m.
inline Polynomial cycle_matching(int m) {
  if (m < 3) throw parameter_error("cycle_matching: m must be >= 3");
  std::vector<Integer> c(static_cast<size_t>(m) + 1);
  for (int k = (m + 1) / 2; k <= m; ++k) c[static_cast<size_t>(k)] = binomial(k, m - k) * m / k;
  return Polynomial(std::move(c));
}

// x^r (x+r)(x+r+1)...(x+n-1); empty product for n == r.
inline Polynomial rising_factorial(int r, int n) {
  if (r < 0 || n < r) throw parameter_error("rising_factorial: need 0 <= r <= n");
  Polynomial p = Polynomial::monomial(r);
  for (int i = r; i < n; ++i) p *= Polynomial{Integer(i), Integer(1)};
  return p;
}

}  // namespace cyclecount
