#ifndef BELLSIM_RATIONAL_HPP
#define BELLSIM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>

namespace bellsim {

// Arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical reduced form (gcd 1, positive denominator) on every operation,
// which the exact-equality tests rely on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational frac(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("frac: zero denominator");
  return Rational(Int(num), Int(den));
}

inline Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int b = 1;
  for (int j = 1; j <= k; ++j) {
    b *= (n - k + j);
    b /= j;
  }
  return b;
}

inline Rational pow_rational(const Rational& base, int exp) {
  if (exp < 0) {
    if (base == 0) throw std::invalid_argument("pow_rational: 0 to negative power");
    return 1 / pow_rational(base, -exp);
  }
  Rational r = 1;
  Rational b = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

// Exact integer square root when `n` is a perfect square.
inline std::optional<Int> exact_sqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// "p/q" with the "/q" dropped for integers; the canonical rendering used in
// JSON and in test failure messages.
inline std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

// Fixed 12-digit decimal rendering; every floating field in CLI output goes
// through here so repeated runs are byte-identical.
inline std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return std::string(buf);
}

}  // namespace bellsim

#endif
