#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace frobsplit {

// Exact rational with 64-bit numerator/denominator, always normalized:
// den > 0, gcd(|num|, den) = 1, zero is 0/1. Intermediates use 128 bits and
// overflow of the normalized result is an error rather than silent wraparound.
class Rat {
 public:
  Rat() = default;
  Rat(long long num, long long den) { assign(num, den); }
  explicit Rat(long long num) { assign(num, 1); }

  long long num() const noexcept { return num_; }
  long long den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a) { return Rat(-a.num_, a.den_); }

  bool operator==(const Rat& o) const noexcept {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rat& o) const noexcept { return !(*this == o); }
  bool operator<(const Rat& o) const noexcept {
    return i128(num_) * o.den_ < i128(o.num_) * den_;
  }
  bool operator<=(const Rat& o) const noexcept { return !(o < *this); }
  bool operator>(const Rat& o) const noexcept { return o < *this; }
  bool operator>=(const Rat& o) const noexcept { return !(*this < o); }

 private:
  using i128 = __int128;

  void assign(long long num, long long den) {
    *this = from_i128(num, den);
  }

  static Rat from_i128(i128 num, i128 den) {
    if (den == 0) fail(ErrorKind::division_by_zero, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    Rat r;
    constexpr i128 lo = -i128(0x7fffffffffffffffLL) - 1;
    constexpr i128 hi = i128(0x7fffffffffffffffLL);
    if (num < lo || num > hi || den > hi)
      fail(ErrorKind::exponent_overflow, "rational overflow");
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace frobsplit
