#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "ga/errors.hpp"

namespace ga {

// Exact rational arithmetic on 64-bit integers. Values are kept normalized
// (gcd 1, positive denominator) and every operation that could wrap throws
// OverflowError instead of producing a wrong answer.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(runtime/explicit)
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (den_ == 0) throw Error("rational with zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sgn() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  friend Rational operator+(const Rational& x, const Rational& y) {
    std::int64_t g = std::gcd(x.den_, y.den_);
    std::int64_t yd = y.den_ / g;
    Rational r;
    r.num_ = checked_add(checked_mul(x.num_, yd), checked_mul(y.num_, x.den_ / g));
    r.den_ = checked_mul(x.den_, yd);
    r.normalize();
    return r;
  }
  friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
  Rational operator-() const {
    Rational r;
    r.num_ = checked_neg(num_);
    r.den_ = den_;
    return r;
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    // Cross-reduce before multiplying to keep intermediates small.
    std::int64_t g1 = std::gcd(std::llabs(x.num_), y.den_);
    std::int64_t g2 = std::gcd(std::llabs(y.num_), x.den_);
    Rational r;
    r.num_ = checked_mul(x.num_ / g1, y.num_ / g2);
    r.den_ = checked_mul(x.den_ / g2, y.den_ / g1);
    return r;
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw Error("rational division by zero");
    Rational inv;
    if (y.num_ < 0) {
      inv.num_ = checked_neg(y.den_);
      inv.den_ = checked_neg(y.num_);
    } else {
      inv.num_ = y.den_;
      inv.den_ = y.num_;
    }
    return x * inv;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend bool operator<(const Rational& x, const Rational& y) {
    return checked_mul(x.num_, y.den_) < checked_mul(y.num_, x.den_);
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  // Exact dyadic rational equal to the given finite double, with the
  // denominator capped at 2^62 (tiny values lose precision deterministically).
  static Rational from_double(double x) {
    if (!std::isfinite(x)) throw Error("cannot convert non-finite double to rational");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
    exp -= 53;
    while (mant != 0 && (mant % 2) == 0) {
      mant /= 2;
      ++exp;
    }
    if (exp >= 0) {
      if (exp > 62) throw OverflowError("double too large for rational");
      return Rational(checked_mul(mant, std::int64_t{1} << exp));
    }
    while (-exp > 62) {
      mant /= 2;  // deterministic truncation for denormal-scale values
      ++exp;
    }
    return Rational(mant, std::int64_t{1} << -exp);
  }

 private:
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in rational add");
    return r;
  }
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in rational mul");
    return r;
  }
  static std::int64_t checked_neg(std::int64_t a) {
    if (a == INT64_MIN) throw OverflowError("int64 overflow in rational negate");
    return -a;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = checked_neg(num_);
      den_ = checked_neg(den_);
    }
    std::int64_t g = std::gcd(std::llabs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Scalar coefficient a + b*i with exact rational parts. Real-field algebras
// keep b = 0 throughout.
struct Coeff {
  Rational re;
  Rational im;

  constexpr Coeff() = default;
  Coeff(const Rational& r) : re(r) {}  // NOLINT(runtime/explicit)
  Coeff(std::int64_t n) : re(n) {}     // NOLINT(runtime/explicit)
  Coeff(const Rational& r, const Rational& i) : re(r), im(i) {}

  static Coeff unit_i() { return Coeff(Rational(0), Rational(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  Coeff conj() const { return Coeff(re, -im); }

  friend Coeff operator+(const Coeff& x, const Coeff& y) { return {x.re + y.re, x.im + y.im}; }
  friend Coeff operator-(const Coeff& x, const Coeff& y) { return {x.re - y.re, x.im - y.im}; }
  Coeff operator-() const { return {-re, -im}; }
  friend Coeff operator*(const Coeff& x, const Coeff& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend Coeff operator*(const Coeff& x, const Rational& s) { return {x.re * s, x.im * s}; }
  friend Coeff operator*(const Rational& s, const Coeff& x) { return x * s; }
  Coeff operator/(const Rational& d) const { return {re / d, im / d}; }

  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

  friend bool operator==(const Coeff& x, const Coeff& y) { return x.re == y.re && x.im == y.im; }
  friend bool operator!=(const Coeff& x, const Coeff& y) { return !(x == y); }

  double modulus() const {
    if (im.is_zero()) return std::fabs(re.to_double());
    return std::hypot(re.to_double(), im.to_double());
  }
};

}  // namespace ga
