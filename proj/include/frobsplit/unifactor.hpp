#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "unipoly.hpp"

namespace frobsplit {

// base^e reduced modulo `mod`. Exponents here never exceed p (single Frobenius
// steps) or (p-1)/2, so a 64-bit exponent suffices.
inline UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& mod) {
  if (mod.degree() == 0 || mod.is_zero())
    fail(ErrorKind::division_by_zero, "powmod: modulus must be nonconstant");
  UniPoly acc = UniPoly::constant(base.field(), base.var(), 1);
  UniPoly b = uni_divrem(base, mod).second;
  while (e) {
    if (e & 1) acc = uni_divrem(acc * b, mod).second;
    e >>= 1;
    if (e) b = uni_divrem(b * b, mod).second;
  }
  return acc;
}

// x^(p^d) mod f via d iterated Frobenius steps.
inline UniPoly frobenius_power_mod(const UniPoly& f, unsigned d) {
  const FieldCtx& field = f.field();
  UniPoly r = uni_divrem(UniPoly::monomial(field, f.var(), 1), f).second;
  for (unsigned i = 0; i < d; ++i) r = powmod(r, field.p(), f);
  return r;
}

// Irreducibility is certified only up to degree 3: f of degree d <= 3 is
// irreducible iff x^(p^d) = x (mod f) and, for d > 1, gcd(x^p - x, f) = 1.
// (The only proper divisor of 2 or 3 is 1.) Degree >= 4 returns false —
// such labels are carried as unverified rather than trusted.
inline bool certify_irreducible(const UniPoly& f) {
  if (f.is_zero() || f.is_constant()) return false;
  std::size_t d = f.degree();
  if (d == 1) return true;
  if (d > 3) return false;
  const UniPoly x = UniPoly::monomial(f.field(), f.var(), 1);
  if (!uni_gcd(frobenius_power_mod(f, 1) - x, f).is_one()) return false;
  return (frobenius_power_mod(f, static_cast<unsigned>(d)) - x).is_zero();
}

// Distinct roots in F_p, ascending. Brute force for small p; for large p the
// linear part is isolated with gcd(x^p - x, f) and split by shifted norms.
inline std::vector<fp_t> uni_roots(const UniPoly& f) {
  if (f.is_zero()) fail(ErrorKind::zero_input, "root extraction from zero");
  const FieldCtx& field = f.field();
  const std::uint64_t p = field.p();
  std::vector<fp_t> out;
  if (p <= 4096) {
    for (fp_t r = 0; r < p; ++r)
      if (uni_eval(f, r) == 0) out.push_back(r);
    return out;
  }
  if (f.is_constant()) return out;
  UniPoly x = UniPoly::monomial(field, f.var(), 1);
  UniPoly lin = uni_gcd(frobenius_power_mod(f, 1) - x, f);  // product of (x - r)
  // Split the product of distinct linear factors: gcd with (x+c)^((p-1)/2) - 1
  // peels off the roots r with r + c a quadratic residue.
  std::vector<UniPoly> stack{lin};
  fp_t shift = 0;
  while (!stack.empty()) {
    UniPoly g = stack.back();
    stack.pop_back();
    if (g.is_constant()) continue;
    if (g.degree() == 1) {
      out.push_back(field.neg(field.div(g.coeff(0), g.coeff(1))));
      continue;
    }
    bool split = false;
    while (shift < p) {
      UniPoly a = x + UniPoly::constant(field, f.var(), shift);
      ++shift;
      UniPoly s = powmod(a, (p - 1) / 2, g) - UniPoly::constant(field, f.var(), 1);
      UniPoly h = uni_gcd(s, g);
      if (!h.is_constant() && h.degree() < g.degree()) {
        stack.push_back(h);
        stack.push_back(uni_div_exact(g, h).monic());
        split = true;
        break;
      }
    }
    if (!split)
      fail(ErrorKind::internal_error, "root splitting exhausted its shift budget");
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Deterministic enumeration of monic degree-d candidates: counter n in
// [0, p^d) maps to x^d + sum digit_i(n) x^i with digit 0 the constant term.
inline UniPoly nth_monic(const FieldCtx& field, const std::string& var, std::size_t d,
                         std::uint64_t n) {
  std::vector<fp_t> c(d + 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    c[i] = n % field.p();
    n /= field.p();
  }
  c[d] = 1;
  return UniPoly(field, var, std::move(c));
}

// Splits a squarefree product of irreducibles all of degree d.
// Returns true on full split into `out`; false leaves f unsplit (caller flags it).
inline bool equal_degree_split(const UniPoly& f, std::size_t d, std::vector<UniPoly>& out) {
  const FieldCtx& field = f.field();
  const std::uint64_t p = field.p();
  if (f.degree() == d) {
    out.push_back(f);
    return true;
  }

  // Enumeration path: trial-divide every monic degree-d polynomial.
  bool pd_small = true;
  std::uint64_t pd = 1;
  for (std::size_t i = 0; i < d; ++i) {
    pd *= p;
    if (pd > 4096) {
      pd_small = false;
      break;
    }
  }
  if (pd_small) {
    UniPoly rem = f;
    for (std::uint64_t n = 0; n < pd && rem.degree() > d; ++n) {
      UniPoly cand = nth_monic(field, f.var(), d, n);
      auto [q, r] = uni_divrem(rem, cand);
      if (r.is_zero()) {
        out.push_back(cand);
        rem = q.monic();
      }
    }
    if (rem.degree() == d) {
      out.push_back(rem.monic());
      return true;
    }
    return rem.is_constant();
  }

  // Norm-based splitting (odd p): s = N(x+c)^((p-1)/2) mod g with
  // N(a) = prod_i a^(p^i); gcd(g, s - 1) separates factors by the quadratic
  // character of the norm. Deterministic shift sequence c = 0, 1, 2, ...
  if (p == 2) return false;  // p = 2 beyond the enumeration bound: give up honestly
  std::vector<UniPoly> stack{f};
  std::uint64_t shift = 0;
  const std::uint64_t shift_budget = std::min<std::uint64_t>(p, 8192);
  while (!stack.empty()) {
    UniPoly g = stack.back();
    stack.pop_back();
    if (g.degree() == d) {
      out.push_back(g.monic());
      continue;
    }
    bool split = false;
    while (shift < shift_budget) {
      UniPoly a = UniPoly::monomial(field, f.var(), 1) +
                  UniPoly::constant(field, f.var(), field.reduce(shift));
      ++shift;
      UniPoly norm = uni_divrem(a, g).second;
      UniPoly frob = norm;
      for (std::size_t i = 1; i < d; ++i) {
        frob = powmod(frob, p, g);
        norm = uni_divrem(norm * frob, g).second;
      }
      UniPoly s = powmod(norm, (p - 1) / 2, g) - UniPoly::constant(field, f.var(), 1);
      UniPoly h = uni_gcd(s, g);
      if (!h.is_constant() && h.degree() < g.degree()) {
        stack.push_back(h);
        stack.push_back(uni_div_exact(g, h).monic());
        split = true;
        break;
      }
    }
    if (!split) return false;
  }
  return true;
}

}  // namespace detail

struct UniFactorTerm {
  UniPoly prime;      // monic label
  std::uint64_t mult;
  bool certified;     // true iff the label is provably irreducible (degree <= 3)
};

struct UniFactorization {
  fp_t unit;
  std::vector<UniFactorTerm> terms;
};

// Factors f into unit * prod prime^mult. Linear factors come from root
// extraction; degree-2 and degree-3 irreducible parts are isolated with
// gcd(x^(p^d) - x, .) and split; whatever remains of degree >= 4 is kept as a
// single monic label with certified = false.
inline UniFactorization uni_factor(const UniPoly& f) {
  if (f.is_zero()) fail(ErrorKind::zero_input, "factorization of zero");
  UniFactorization result;
  result.unit = f.lead();
  if (f.is_constant()) return result;

  const FieldCtx& field = f.field();
  const UniPoly x = UniPoly::monomial(field, f.var(), 1);

  for (const auto& sq : sqfree_decomposition(f)) {
    UniPoly rem = sq.factor;  // monic squarefree
    for (fp_t r : uni_roots(rem)) {
      UniPoly lin = x - UniPoly::constant(field, f.var(), r);
      rem = uni_div_exact(rem, lin).monic();
      result.terms.push_back({lin, sq.mult, true});
    }
    for (std::size_t d = 2; d <= 3 && rem.degree() >= d; ++d) {
      UniPoly part = uni_gcd(frobenius_power_mod(rem, static_cast<unsigned>(d)) - x, rem);
      if (part.is_constant()) continue;
      std::vector<UniPoly> pieces;
      if (detail::equal_degree_split(part, d, pieces)) {
        for (auto& piece : pieces) result.terms.push_back({piece.monic(), sq.mult, true});
        rem = uni_div_exact(rem, part).monic();
      }
      // On a failed split `part` stays inside rem and ends up in the
      // unfactored residual below.
    }
    if (!rem.is_constant()) result.terms.push_back({rem, sq.mult, false});
  }

  std::sort(result.terms.begin(), result.terms.end(),
            [](const UniFactorTerm& a, const UniFactorTerm& b) {
              if (a.prime.degree() != b.prime.degree())
                return a.prime.degree() < b.prime.degree();
              if (a.prime.coeffs() != b.prime.coeffs())
                return a.prime.coeffs() < b.prime.coeffs();
              return a.mult < b.mult;
            });
  return result;
}

}  // namespace frobsplit
