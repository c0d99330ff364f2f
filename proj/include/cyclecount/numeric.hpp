#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "cyclecount/errors.hpp"

namespace cyclecount {

// All counting is exact. Integer coefficients and counts use an
// arbitrary-precision integer; moments use an exact rational kept in
// canonical reduced form (gcd(|num|, den) = 1, den > 0) by the backend.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer integer_from_u128(unsigned __int128 v) {
  const std::uint64_t lo = static_cast<std::uint64_t>(v);
  const std::uint64_t hi = static_cast<std::uint64_t>(v >> 64);
  Integer out = hi;
  out <<= 64;
  out += lo;
  return out;
}

// Fibonacci numbers with F_1 = F_2 = 1 (F_0 = 0).
inline Integer fib(long long n) {
  if (n < 0) throw parameter_error("fib: negative index");
  Integer a = 0, b = 1;  // F_0, F_1
  for (long long i = 0; i < n; ++i) {
    Integer next = a + b;
    a = b;
    b = next;
  }
  return a;
}

// Lucas numbers with L_0 = 2, L_1 = 1, L_2 = 3.
inline Integer lucas(long long n) {
  if (n < 0) throw parameter_error("lucas: negative index");
  Integer a = 2, b = 1;  // L_0, L_1
  for (long long i = 0; i < n; ++i) {
    Integer next = a + b;
    a = b;
    b = next;
  }
  return a;
}

// Binomial coefficient; 0 outside the range 0 <= k <= n.
inline Integer binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

inline Integer factorial(long long n) {
  if (n < 0) throw parameter_error("factorial: negative argument");
  Integer result = 1;
  for (long long i = 2; i <= n; ++i) result *= i;
  return result;
}

// H_n = sum_{i=1..n} 1/i, H_0 = 0.
inline Rational harmonic(long long n) {
  Rational h = 0;
  for (long long i = 1; i <= n; ++i) h += Rational(1, i);
  return h;
}

// H_n^(2) = sum_{i=1..n} 1/i^2.
inline Rational harmonic2(long long n) {
  Rational h = 0;
  for (long long i = 1; i <= n; ++i) h += Rational(1, Integer(i) * i);
  return h;
}

inline std::string to_decimal(const Integer& v) { return v.str(); }

// "p/q" (or plain "p" when q = 1), matching the report schema.
inline std::string to_fraction(const Rational& v) {
  if (boost::multiprecision::denominator(v) == 1)
    return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

// Decimal rendering of a rational with the given number of significant
// digits (presentation only; exact values travel as "p/q" strings).
inline std::string to_decimal_string(const Rational& v, int significant = 12) {
  if (v == 0) return "0";
  Integer num = boost::multiprecision::numerator(v);
  Integer den = boost::multiprecision::denominator(v);
  const bool neg = num < 0;
  if (neg) num = -num;
  // Scale so that the integer division keeps `significant` digits after
  // the leading digit of the value.
  Integer ip = num / den;
  std::string head = ip.str();
  int int_digits = (ip == 0) ? 0 : static_cast<int>(head.size());
  int frac_digits = significant - int_digits;
  if (frac_digits < 0) frac_digits = 0;
  Integer scale = 1;
  for (int i = 0; i < frac_digits; ++i) scale *= 10;
  Integer scaled = (num * scale * 2 + den) / (2 * den);  // rounded
  std::string digits = scaled.str();
  std::string out;
  if (static_cast<int>(digits.size()) <= frac_digits) {
    out = "0." + std::string(frac_digits - digits.size(), '0') + digits;
  } else {
    out = digits.substr(0, digits.size() - frac_digits);
    if (frac_digits > 0) out += "." + digits.substr(digits.size() - frac_digits);
  }
  // Trim trailing zeros after the decimal point.
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return neg ? "-" + out : out;
}

}  // namespace cyclecount
