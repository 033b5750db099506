#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobsplit/divisor.hpp"
#include "frobsplit/errors.hpp"
#include "frobsplit/fedder.hpp"
#include "frobsplit/multipoly.hpp"
#include "frobsplit/parser.hpp"
#include "frobsplit/unifactor.hpp"
#include "frobsplit/unipoly.hpp"

namespace frobsplit {

// A one-parameter family of plane cubics E_t : a(x, y, z, t) = 0 in
// Weierstrass shape: a is homogeneous of degree 3 in the first three
// variables, with y appearing only through a u*z*y^2 term (u a nonzero
// scalar), so each fiber dehomogenizes to y^2 = f_lambda(x).
struct CubicFamily {
  FieldCtx field;
  VarCtx vars;   // positional roles: (x, y, z, t)
  MultiPoly a;
  fp_t u;        // coefficient of z*y^2
};

inline CubicFamily make_family(const MultiPoly& a) {
  const FieldCtx& field = a.field();
  const VarCtx& vars = a.vars();
  if (field.p() == 2)
    fail(ErrorKind::unsupported, "cubic families require odd characteristic");
  if (vars.size() != 4)
    fail(ErrorKind::domain_error, "cubic family needs exactly four variables (x, y, z, t)");
  if (a.is_zero()) fail(ErrorKind::zero_input, "cubic family polynomial is zero");
  fp_t u = 0;
  for (const auto& t : a.terms()) {
    std::uint64_t xyz = std::uint64_t{t.mono[0]} + t.mono[1] + t.mono[2];
    if (xyz != 3)
      fail(ErrorKind::domain_error,
           "family must be homogeneous of degree 3 in the first three variables");
    if (t.mono[1] != 0 && t.mono[1] != 2)
      fail(ErrorKind::domain_error, "y may appear only with exponent 0 or 2");
    if (t.mono[1] == 2) {
      if (t.mono[2] != 1 || t.mono[3] != 0)
        fail(ErrorKind::domain_error,
             "the y^2 part must be a nonzero scalar times z*y^2");
      u = t.coeff;
    }
  }
  if (u == 0)
    fail(ErrorKind::domain_error, "the y^2 part must be a nonzero scalar times z*y^2");
  return CubicFamily{field, vars, a, u};
}

// The built-in family of the elliptic cone: a = z*y^2 - x(x-z)(x-t z), whose
// fiber over t = lambda is y^2 = x(x-1)(x-lambda).
inline CubicFamily cone_family(const FieldCtx& field) {
  VarCtx vars({"x", "y", "z", "t"});
  return make_family(parse_poly("z*y^2-x*(x-z)*(x-t*z)", vars, field));
}

// Dehomogenized fiber: the cubic f_lambda(x) with y^2 = f_lambda(x) at z = 1,
// t = lambda.
inline UniPoly fiber_cubic(const CubicFamily& fam, fp_t lambda) {
  MultiPoly w = substitute_value(fam.a, 1, 0);       // y -> 0 keeps -u*f part
  w = substitute_value(w, 2, 1);                     // z -> 1
  w = substitute_value(w, 3, lambda);                // t -> lambda
  w = w.scaled(fam.field.neg(fam.field.inv(fam.u)));
  return to_unipoly(w, 0);
}

// A fiber is degenerate when its cubic drops degree or acquires a repeated
// root; otherwise y^2 = f_lambda(x) is a smooth projective elliptic curve.
inline bool fiber_degenerate(const CubicFamily& fam, fp_t lambda) {
  UniPoly f = fiber_cubic(fam, lambda);
  if (f.degree() < 3) return true;
  return !uni_gcd(f, uni_derivative(f)).is_one();
}

namespace fibdetail {

inline UniPoly require_good_fiber(const CubicFamily& fam, fp_t lambda) {
  UniPoly f = fiber_cubic(fam, lambda);
  if (f.degree() < 3 || !uni_gcd(f, uni_derivative(f)).is_one())
    fail(ErrorKind::degenerate_fiber,
         "fiber at lambda = " + std::to_string(lambda) + " is degenerate");
  return f;
}

}  // namespace fibdetail

// Classical splitting test for one fiber: the coefficient of x^(p-1) in
// f_lambda(x)^((p-1)/2). Zero exactly at supersingular fibers.
inline fp_t hasse_value(const CubicFamily& fam, fp_t lambda) {
  UniPoly f = fibdetail::require_good_fiber(fam, lambda);
  const std::uint64_t p = fam.field.p();
  return uni_pow(f, (p - 1) / 2).coeff(p - 1);
}

// Naive rational-point count of the fiber, including the point at infinity:
// 1 + sum over x of #{y : y^2 = f_lambda(x)}.
inline std::uint64_t point_count(const CubicFamily& fam, fp_t lambda) {
  UniPoly f = fibdetail::require_good_fiber(fam, lambda);
  const std::uint64_t p = fam.field.p();
  std::vector<std::uint32_t> sqrt_count(p, 0);
  for (fp_t y = 0; y < p; ++y) ++sqrt_count[fam.field.mul(y, y)];
  std::uint64_t n = 1;
  for (fp_t x = 0; x < p; ++x) n += sqrt_count[uni_eval(f, x)];
  return n;
}

// The degree-(p-1)/2 polynomial sum_i binom((p-1)/2, i)^2 lambda^i whose roots
// (over the algebraic closure) are the supersingular parameters of the
// Legendre-type family y^2 = x(x-1)(x-lambda).
inline UniPoly legendre_hasse_poly(const FieldCtx& field, const std::string& var = "t") {
  const std::uint64_t p = field.p();
  if (p == 2) fail(ErrorKind::unsupported, "Hasse polynomial requires odd characteristic");
  const std::uint64_t m = (p - 1) / 2;
  std::vector<fp_t> coeffs(m + 1, 0);
  for (std::uint64_t i = 0; i <= m; ++i) {
    fp_t b = binom_mod_p(field, m, i);
    coeffs[i] = field.mul(b, b);
  }
  return UniPoly(field, var, std::move(coeffs));
}

// h at level q = p^e: the coefficient of (xyz)^(q-1) in a^(q-1), a univariate
// polynomial in the parameter. Levels e >= 2 beyond q = 27 are guarded by
// default because the expansion grows quickly.
inline UniPoly family_h_poly(const CubicFamily& fam, const FrobeniusLevel& level,
                             bool allow_large = false) {
  require_same_field(fam.field, level.field);
  const std::uint64_t q = level.q;
  if (level.e >= 2 && q > 27 && !allow_large)
    fail(ErrorKind::q_guard,
         "h extraction at q = " + std::to_string(q) +
             " exceeds the default level guard (q <= 27 for e >= 2); override to proceed");
  MultiPoly apow = poly_pow(fam.a, q - 1);
  std::uint32_t e1 = static_cast<std::uint32_t>(q - 1);
  MultiPoly h = coeff_of(apow, {{0, e1}, {1, e1}, {2, e1}});
  return to_unipoly(h, 3);
}

inline UniPoly cone_h_poly(const FieldCtx& field, unsigned e = 1, bool allow_large = false) {
  CubicFamily fam = cone_family(field);
  return family_h_poly(fam, FrobeniusLevel(field, e), allow_large);
}

// The moduli-part divisor of the family on its parameter line:
// (1/(q-1)) * div(h), so the coefficient at a parameter value is
// ord(h)/(q-1). Errors out when h vanishes identically (no fiberwise
// splitting exists at all).
inline QDivisor assemble_moduli_divisor(const CubicFamily& fam, const FrobeniusLevel& level,
                                        bool allow_large = false) {
  UniPoly h = family_h_poly(fam, level, allow_large);
  if (h.is_zero())
    fail(ErrorKind::not_f_split,
         "every fiber of the family is supersingular: h vanishes identically");
  return div_scale(Rat(1, static_cast<long long>(level.q - 1)), div_of(h));
}

// Per-fiber report of the scan. Degenerate fibers carry no splitting data.
struct FiberReport {
  fp_t lambda = 0;
  bool degenerate = false;
  std::optional<fp_t> hasse;
  std::optional<std::uint64_t> count;
  bool is_split = false;
};

// Scans every F_p-rational parameter value in ascending order. For p >= 5 the
// Hasse-coefficient verdict and the point count must agree (supersingular
// means exactly p+1 points); a disagreement would be an internal bug.
inline std::vector<FiberReport> fiber_scan(const CubicFamily& fam) {
  const std::uint64_t p = fam.field.p();
  std::vector<FiberReport> out;
  out.reserve(p);
  for (fp_t lambda = 0; lambda < p; ++lambda) {
    FiberReport r;
    r.lambda = lambda;
    r.degenerate = fiber_degenerate(fam, lambda);
    if (!r.degenerate) {
      r.hasse = hasse_value(fam, lambda);
      r.count = point_count(fam, lambda);
      r.is_split = *r.hasse != 0;
      if (p >= 5 && (r.is_split == (*r.count == p + 1)))
        fail(ErrorKind::internal_error,
             "Hasse coefficient and point count disagree at lambda = " +
                 std::to_string(lambda));
    }
    out.push_back(r);
  }
  return out;
}

// One row of a multi-prime scan: the moduli divisor of the reduction mod p,
// its F_p-rational support, and whether the chosen rational parameter value
// lands in the support.
struct CharScanEntry {
  std::uint64_t p = 0;
  QDivisor moduli;
  std::vector<fp_t> rational_support;
  fp_t lambda0 = 0;  // reduced mod p
  bool lambda0_in_support = false;
};

// Reduces an integer-coefficient family modulo each listed prime and locates
// lambda0 relative to the moduli divisor's support. The family text uses the
// fixed variables (x, y, z, t).
inline std::vector<CharScanEntry> char_scan(const std::string& family_text, long long lambda0,
                                            const std::vector<std::uint64_t>& primes) {
  std::vector<CharScanEntry> out;
  out.reserve(primes.size());
  for (std::uint64_t p : primes) {
    FieldCtx field(static_cast<std::int64_t>(p));
    VarCtx vars({"x", "y", "z", "t"});
    CubicFamily fam = make_family(parse_poly(family_text, vars, field));
    long long lp = lambda0 % static_cast<long long>(p);
    if (lp < 0) lp += static_cast<long long>(p);
    fp_t l0 = static_cast<fp_t>(lp);
    if (fiber_degenerate(fam, l0))
      fail(ErrorKind::degenerate_fiber, "lambda0 reduces to a degenerate fiber at p = " +
                                            std::to_string(p));
    FrobeniusLevel level(field, 1);
    UniPoly h = family_h_poly(fam, level);
    if (h.is_zero())
      fail(ErrorKind::not_f_split, "every fiber is supersingular at p = " + std::to_string(p));
    CharScanEntry entry{p, div_scale(Rat(1, static_cast<long long>(p - 1)), div_of(h)),
                        uni_roots(h), l0, uni_eval(h, l0) == 0};
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace frobsplit
