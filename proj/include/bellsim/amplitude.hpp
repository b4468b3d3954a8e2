#ifndef BELLSIM_AMPLITUDE_HPP
#define BELLSIM_AMPLITUDE_HPP

#include <string>
#include <utility>

#include "bellsim/rational.hpp"

namespace bellsim {

/*
 * Exact complex amplitudes for balanced beam-splitter networks.
 *
 * Every amplitude that appears in these schemes lives in the field
 * Q(i, sqrt2): a Gaussian-rational linear combination  z = a + b*sqrt2
 * with a, b in Q(i).  Addition, multiplication, conjugation and division
 * stay inside the field, so zero tests are exact and no floating point is
 * needed anywhere in the core.
 *
 * |z|^2 generally leaves Q and lands in Q(sqrt2); it is reported as the
 * pair (rational part, sqrt2 part).
 */

struct GaussianRational {
  Rational re;
  Rational im;

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x) { return {-x.re, -x.im}; }
  friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend GaussianRational operator*(const GaussianRational& x, const Rational& s) {
    return {x.re * s, x.im * s};
  }
  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re == y.re && x.im == y.im;
  }

  // 1/(re + i*im); the norm re^2 + im^2 is a positive rational for nonzero input.
  GaussianRational inverse() const {
    Rational n = re * re + im * im;
    if (n == 0) throw std::domain_error("GaussianRational: division by zero");
    return {re / n, -im / n};
  }
};

// Value of |z|^2 as an element p + q*sqrt2 of Q(sqrt2).
struct RootTwoValue {
  Rational rational_part;
  Rational sqrt2_part;

  friend bool operator==(const RootTwoValue& x, const RootTwoValue& y) {
    return x.rational_part == y.rational_part && x.sqrt2_part == y.sqrt2_part;
  }
  friend RootTwoValue operator*(const RootTwoValue& x, const RootTwoValue& y) {
    return {x.rational_part * y.rational_part + 2 * x.sqrt2_part * y.sqrt2_part,
            x.rational_part * y.sqrt2_part + x.sqrt2_part * y.rational_part};
  }
  double value() const { return to_double(rational_part) + 1.4142135623730951 * to_double(sqrt2_part); }
};

struct Amplitude {
  GaussianRational a;  // rational-coset component
  GaussianRational b;  // coefficient of sqrt2

  Amplitude() : a{0, 0}, b{0, 0} {}
  Amplitude(GaussianRational ra, GaussianRational rb) : a(std::move(ra)), b(std::move(rb)) {}

  static Amplitude zero() { return {}; }
  static Amplitude one() { return {{1, 0}, {0, 0}}; }
  static Amplitude i() { return {{0, 1}, {0, 0}}; }
  static Amplitude rational(const Rational& r) { return {{r, 0}, {0, 0}}; }
  static Amplitude imag_rational(const Rational& r) { return {{0, r}, {0, 0}}; }
  static Amplitude sqrt2() { return {{0, 0}, {1, 0}}; }
  // 1/sqrt2 = sqrt2/2.
  static Amplitude inv_sqrt2() { return {{0, 0}, {frac(1, 2), 0}}; }
  // (1/sqrt2)^m, m >= 0.
  static Amplitude inv_sqrt2_pow(int m) {
    if (m < 0) throw std::invalid_argument("inv_sqrt2_pow: negative exponent");
    Rational half_pow = pow_rational(frac(1, 2), m / 2);
    if (m % 2 == 0) return rational(half_pow);
    return {{0, 0}, {half_pow / 2, 0}};  // half_pow * sqrt2/2
  }
  // i^k for any integer k.
  static Amplitude i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return one();
      case 1: return i();
      case 2: return rational(-1);
      default: return imag_rational(-1);
    }
  }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  Amplitude conj() const { return {a.conj(), b.conj()}; }
  Amplitude times_i() const {
    return {{-a.im, a.re}, {-b.im, b.re}};
  }

  friend Amplitude operator+(const Amplitude& x, const Amplitude& y) { return {x.a + y.a, x.b + y.b}; }
  friend Amplitude operator-(const Amplitude& x, const Amplitude& y) { return {x.a - y.a, x.b - y.b}; }
  friend Amplitude operator-(const Amplitude& x) { return {-x.a, -x.b}; }
  friend Amplitude operator*(const Amplitude& x, const Amplitude& y) {
    // (a1 + b1*s)(a2 + b2*s) with s^2 = 2.
    return {x.a * y.a + (x.b * y.b) * Rational(2), x.a * y.b + x.b * y.a};
  }
  friend Amplitude operator*(const Amplitude& x, const Rational& s) { return {x.a * s, x.b * s}; }
  friend bool operator==(const Amplitude& x, const Amplitude& y) { return x.a == y.a && x.b == y.b; }

  Amplitude& operator+=(const Amplitude& y) {
    *this = *this + y;
    return *this;
  }
  Amplitude& operator*=(const Amplitude& y) {
    *this = *this * y;
    return *this;
  }

  // 1/(a + b*sqrt2).  Multiplying by (a - b*sqrt2) gives a^2 - 2 b^2 in Q(i),
  // which vanishes only for the zero amplitude (sqrt2 is irrational over Q(i)).
  Amplitude inverse() const {
    if (is_zero()) throw std::domain_error("Amplitude: division by zero");
    GaussianRational g = a * a - (b * b) * Rational(2);
    GaussianRational gi = g.inverse();
    return {a * gi, (-b) * gi};
  }
  friend Amplitude operator/(const Amplitude& x, const Amplitude& y) { return x * y.inverse(); }

  // z * conj(z) = |a|^2 + 2|b|^2 + sqrt2 * 2 Re(a * conj(b)), exact in Q(sqrt2).
  RootTwoValue norm_sq() const {
    Rational rat = a.re * a.re + a.im * a.im + 2 * (b.re * b.re + b.im * b.im);
    Rational root = 2 * (a.re * b.re + a.im * b.im);
    return {rat, root};
  }

  std::pair<double, double> to_complex() const {
    constexpr double kSqrt2 = 1.4142135623730951;
    return {to_double(a.re) + kSqrt2 * to_double(b.re), to_double(a.im) + kSqrt2 * to_double(b.im)};
  }

  // Canonical rendering: "(p/q) + (r/s)*sqrt2 + i*[...]" with zero groups
  // elided and plain "0" for the zero amplitude.
  std::string str() const {
    auto part = [](const Rational& rat, const Rational& root) -> std::string {
      std::string s;
      if (rat != 0) s += "(" + rational_str(rat) + ")";
      if (root != 0) {
        if (!s.empty()) s += " + ";
        s += "(" + rational_str(root) + ")*sqrt2";
      }
      return s;
    };
    std::string re = part(a.re, b.re);
    std::string im = part(a.im, b.im);
    std::string out;
    if (!re.empty()) out = re;
    if (!im.empty()) {
      if (!out.empty()) out += " + ";
      out += "i*[" + im + "]";
    }
    if (out.empty()) out = "0";
    return out;
  }
};

inline Amplitude operator*(const Rational& s, const Amplitude& x) { return x * s; }

}  // namespace bellsim

#endif
