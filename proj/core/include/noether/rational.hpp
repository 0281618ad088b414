#ifndef NOETHER_RATIONAL_HPP
#define NOETHER_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "noether/errors.hpp"

namespace noether {

/// Exact rational arithmetic over int64 with __int128 intermediates.
/// Coefficients in this engine stay tiny (fixture Lagrangians, small random
/// polynomials), so 64 bits is plenty; overflow throws instead of wrapping.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator-(const Rational& a) {
    return Rational(-a.num_, a.den_, raw{});
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(Error::Code::domain, "rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  using i128 = __int128;
  struct raw {};
  Rational(long long n, long long d, raw) : num_(n), den_(d) {}

  static Rational make(i128 n, i128 d) {
    if (d == 0) throw Error(Error::Code::domain, "rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw Error(Error::Code::numeric, "rational coefficient overflow");
    return Rational(static_cast<long long>(n), static_cast<long long>(d), raw{});
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
  }

  void normalize() { *this = make(num_, den_); }

  long long num_;
  long long den_;
};

}  // namespace noether

#endif
