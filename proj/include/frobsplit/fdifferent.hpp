#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobsplit/digest.hpp"
#include "frobsplit/divisor.hpp"
#include "frobsplit/errors.hpp"
#include "frobsplit/fedder.hpp"
#include "frobsplit/groebner.hpp"
#include "frobsplit/multipoly.hpp"
#include "frobsplit/unipoly.hpp"

namespace frobsplit {

// Output of the premultiplier extraction f = h*g_e + g with g in J^[q]:
// h_bar is h reduced modulo the center, and the induced boundary divisor on
// the center is div(h_bar) scaled by 1/(q-1), factored when h_bar is
// univariate. compat_ok certifies the representation (g really lies in the
// bracket power); center_ok records the compatibility pretest. Diagnostics for
// failed representations travel in leftover_digest.
struct FDifferentResult {
  FrobeniusLevel level;
  bool center_ok = false;
  bool compat_ok = false;
  MultiPoly h;
  MultiPoly h_bar;
  std::optional<QDivisor> divisor;
  std::string leftover_digest;
};

namespace fdifdetail {

// Index of the single variable appearing in f, if any. Constants yield
// nullopt with ok=true; genuinely multivariate input yields ok=false.
struct SingleVar {
  bool ok = false;
  std::optional<std::size_t> var;
};

inline SingleVar single_variable_of(const MultiPoly& f) {
  SingleVar out;
  out.ok = true;
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (out.var && *out.var != i) return SingleVar{};  // two distinct variables
      out.var = i;
    }
  }
  return out;
}

inline void attach_divisor(FDifferentResult& res) {
  if (res.h_bar.is_zero()) return;
  SingleVar sv = single_variable_of(res.h_bar);
  if (!sv.ok) return;  // multivariate: no factorization attempted
  QDivisor d = QDivisor::zero(res.h_bar.field());
  if (sv.var) {
    UniPoly u = to_unipoly(res.h_bar, *sv.var);
    d = div_scale(Rat(1, static_cast<long long>(res.level.q - 1)), div_of(u));
  }
  res.divisor = std::move(d);
}

}  // namespace fdifdetail

// Premultiplier extraction along a complete-intersection center. For J
// generated by distinct variables the division is exact truncation plus
// coefficient extraction; for a general complete intersection f is divided by
// {g_e} followed by a Groebner basis of J^[q], tracking the g_e cofactor.
inline FDifferentResult compute_fdifferent(const MultiPoly& f, const Ideal& J,
                                           const FrobeniusLevel& level,
                                           std::size_t degree_cap = kDefaultDegreeCap) {
  require_same_field(f.field(), J.field());
  if (J.is_zero_ideal())
    fail(ErrorKind::zero_input, "center ideal must be nonzero");
  const std::uint64_t q = level.q;

  FDifferentResult res{level,
                       false,
                       false,
                       MultiPoly::zero(f.field(), f.vars()),
                       MultiPoly::zero(f.field(), f.vars()),
                       std::nullopt,
                       std::string{}};
  res.center_ok = center_test(f, J, level, degree_cap);

  MultiPoly leftover = MultiPoly::zero(f.field(), f.vars());
  std::vector<std::size_t> jvars;
  if (generators_are_distinct_variables(J, &jvars)) {
    // g_e = prod x_i^(q-1); the multiples of g_e inside the truncation are
    // exactly the terms with every center exponent equal to q-1.
    MultiPoly trunc = truncate_mod_bracket(f, jvars, q);
    std::vector<std::pair<std::size_t, std::uint32_t>> at;
    at.reserve(jvars.size());
    for (auto v : jvars) at.emplace_back(v, static_cast<std::uint32_t>(q - 1));
    res.h = coeff_of(trunc, at);
    Monomial ge(f.vars().size(), 0);
    for (auto v : jvars) ge[v] = static_cast<std::uint32_t>(q - 1);
    MultiPoly ge_poly(f.field(), f.vars(), {Term{1, ge}});
    leftover = trunc - poly_mul(res.h, ge_poly);
    res.compat_ok = leftover.is_zero();
    res.h_bar = set_vars_zero(res.h, jvars);
  } else {
    MultiPoly prod = MultiPoly::one(J.field(), J.vars());
    for (const auto& g : J.gens()) prod = poly_mul(prod, g);
    MultiPoly g_e = poly_pow(prod, q - 1);
    Ideal bracket = buchberger(bracket_power(J, q), MonomialOrder::grevlex(), degree_cap);
    std::vector<MultiPoly> divisors{g_e};
    for (const auto& g : bracket.gens()) divisors.push_back(g);
    auto division = divide_tracked(f, divisors, MonomialOrder::grevlex());
    res.h = division.quotients[0];
    leftover = division.remainder;
    res.compat_ok = leftover.is_zero();
    res.h_bar = normal_form(res.h, J, MonomialOrder::grevlex(), degree_cap);
  }

  if (!res.compat_ok) res.leftover_digest = fnv1a64_hex(leftover.print());
  if (res.compat_ok && res.h_bar.is_zero())
    fail(ErrorKind::h_bar_zero,
         "premultiplier vanishes on the center: f lies in the bracket power and "
         "induces the zero splitting");
  fdifdetail::attach_divisor(res);
  return res;
}

// A pair (f, J) to be studied at a chosen point of the ambient affine space.
struct CenterProblem {
  MultiPoly f;
  Ideal J;
};

// Moves the chosen point to the origin: substitutes x_i -> x_i + c_i in f and
// in every generator of J, so that a maximal ideal at the point becomes
// variable-generated.
inline CenterProblem translate_center(const CenterProblem& problem,
                                      const std::vector<fp_t>& point) {
  if (point.size() != problem.f.vars().size())
    fail(ErrorKind::arity_mismatch, "translate_center: point arity mismatch");
  MultiPoly f = subst_shift(problem.f, point);
  std::vector<MultiPoly> gens;
  gens.reserve(problem.J.gens().size());
  for (const auto& g : problem.J.gens()) gens.push_back(subst_shift(g, point));
  return CenterProblem{std::move(f), Ideal(problem.J.field(), problem.J.vars(), std::move(gens))};
}

}  // namespace frobsplit
