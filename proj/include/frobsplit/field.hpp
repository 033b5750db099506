#pragma once

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace frobsplit {

// Element of F_p, stored reduced into [0, p).
using fp_t = std::uint64_t;

// Prime field context. p is restricted to [2, 2^31) so that products of two
// reduced elements fit in 64 bits without wider intermediates.
class FieldCtx {
 public:
  explicit FieldCtx(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31))
      fail(ErrorKind::not_prime,
           "characteristic must lie in [2, 2^31): got " + std::to_string(p));
    if (!is_prime(p))
      fail(ErrorKind::not_prime,
           "characteristic is not prime: " + std::to_string(p));
  }

  std::uint64_t p() const noexcept { return p_; }

  fp_t reduce(std::uint64_t v) const noexcept { return v % p_; }

  fp_t reduce_signed(long long v) const noexcept {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    return static_cast<fp_t>(m);
  }

  fp_t add(fp_t a, fp_t b) const noexcept {
    fp_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  fp_t sub(fp_t a, fp_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }

  fp_t neg(fp_t a) const noexcept { return a == 0 ? 0 : p_ - a; }

  fp_t mul(fp_t a, fp_t b) const noexcept { return (a * b) % p_; }

  fp_t pow(fp_t base, std::uint64_t exp) const noexcept {
    fp_t result = 1 % p_;
    fp_t b = base % p_;
    while (exp) {
      if (exp & 1) result = mul(result, b);
      b = mul(b, b);
      exp >>= 1;
    }
    return result;
  }

  fp_t inv(fp_t a) const {
    if (a % p_ == 0)
      fail(ErrorKind::division_by_zero, "inverse of zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
  }

  fp_t div(fp_t a, fp_t b) const { return mul(a % p_, inv(b)); }

  bool operator==(const FieldCtx& o) const noexcept { return p_ == o.p_; }
  bool operator!=(const FieldCtx& o) const noexcept { return p_ != o.p_; }

  static bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint64_t p_;
};

inline void require_same_field(const FieldCtx& a, const FieldCtx& b) {
  if (a != b)
    fail(ErrorKind::context_mismatch,
         "mixed characteristics: F_" + std::to_string(a.p()) + " vs F_" +
             std::to_string(b.p()));
}

}  // namespace frobsplit
