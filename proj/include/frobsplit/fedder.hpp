#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groebner.hpp"
#include "multipoly.hpp"
#include "rational.hpp"

namespace frobsplit {

// A Frobenius level fixes q = p^e. Construction enforces the global q guard,
// so downstream code can trust q without re-checking.
struct FrobeniusLevel {
  FieldCtx field;
  unsigned e;
  std::uint64_t q;

  FrobeniusLevel(FieldCtx f, unsigned e_) : field(std::move(f)), e(e_), q(1) {
    if (e == 0) fail(ErrorKind::domain_error, "Frobenius exponent e must be positive");
    for (unsigned i = 0; i < e; ++i) {
      q *= field.p();
      if (q > kQGuard)
        fail(ErrorKind::q_guard,
             "q = p^e exceeds the guard 2^20 (p = " + std::to_string(field.p()) +
                 ", e = " + std::to_string(e) + ")");
    }
  }
};

struct FedderReport {
  std::uint64_t q = 0;
  bool fpure = false;
  std::optional<Monomial> witness;  // term of the test polynomial, all tracked exponents <= q-1
  std::string test_poly;            // canonical print of the decisive test polynomial
};

struct NuEntry {
  unsigned e;
  std::uint64_t q;
  std::uint64_t nu;
  Rat ratio;  // nu / q, exact
};

struct NuSequence {
  std::string f;                    // canonical print of the input
  std::vector<std::string> point;   // names of the maximal-ideal variables
  std::vector<NuEntry> entries;
};

namespace feddetail {

// First term (canonical storage order) with every tracked exponent <= q-1.
inline std::optional<Monomial> find_witness(const MultiPoly& f,
                                            const std::vector<std::size_t>& vars,
                                            std::uint64_t q) {
  for (const auto& t : f.terms()) {
    bool ok = true;
    for (auto v : vars)
      if (t.mono[v] >= q) {
        ok = false;
        break;
      }
    if (ok) return t.mono;
  }
  return std::nullopt;
}

inline void require_vars_in_range(const VarCtx& ctx, const std::vector<std::size_t>& vars) {
  if (vars.empty()) fail(ErrorKind::domain_error, "empty point-variable set");
  std::vector<bool> seen(ctx.size(), false);
  for (auto v : vars) {
    if (v >= ctx.size()) fail(ErrorKind::unknown_variable, "point variable out of range");
    if (seen[v]) fail(ErrorKind::domain_error, "duplicate point variable");
    seen[v] = true;
  }
}

}  // namespace feddetail

// Fedder's criterion for a hypersurface R/(a) at the origin of the listed
// variables: F-pure at level q iff a^(q-1) lies outside (x_i^q), witnessed by
// a term with all tracked exponents <= q-1.
inline FedderReport fpure_hypersurface(const MultiPoly& a,
                                       const std::vector<std::size_t>& point_ideal_vars,
                                       const FrobeniusLevel& level) {
  require_same_field(a.field(), level.field);
  feddetail::require_vars_in_range(a.vars(), point_ideal_vars);
  if (a.is_zero()) fail(ErrorKind::zero_input, "hypersurface polynomial is zero");
  MultiPoly test = poly_pow(a, level.q - 1);
  FedderReport r;
  r.q = level.q;
  r.test_poly = test.print();
  r.witness = feddetail::find_witness(test, point_ideal_vars, level.q);
  r.fpure = r.witness.has_value();
  return r;
}

// General Fedder: R/I is F-pure at m iff (I^[q] : I) is not contained in
// m^[q]; some colon generator escaping m^[q] is the (non-unique) Fedder
// polynomial and supplies the witness.
inline FedderReport fpure_general(const Ideal& I, const Ideal& m, const FrobeniusLevel& level,
                                  std::uint64_t degree_cap = kDefaultDegreeCap) {
  require_same_field(I.field(), level.field);
  require_same_vars(I.vars(), m.vars());
  std::vector<std::size_t> mvars;
  if (!generators_are_distinct_variables(m, &mvars))
    fail(ErrorKind::domain_error,
         "the point ideal must be generated by distinct variables (translate first)");
  if (I.is_zero_ideal()) fail(ErrorKind::zero_input, "F-purity of the zero ideal");

  Ideal cq = colon(bracket_power(I, level.q), I, degree_cap);
  FedderReport r;
  r.q = level.q;
  for (const auto& g : cq.gens()) {
    // Membership of g in the monomial ideal m^[q] = (x_i^q) is a per-term
    // divisibility check; a surviving term is the witness.
    MultiPoly kept = truncate_mod_bracket(g, mvars, level.q);
    if (!kept.is_zero()) {
      r.fpure = true;
      r.witness = feddetail::find_witness(g, mvars, level.q);
      r.test_poly = g.print();
      return r;
    }
  }
  r.fpure = false;
  return r;
}

// Compatibility of a center J with the splitting chosen by f: true iff
// f * J is contained in J^[q] while f itself stays outside J^[q].
inline bool center_test(const MultiPoly& f, const Ideal& J, const FrobeniusLevel& level,
                        std::uint64_t degree_cap = kDefaultDegreeCap) {
  require_same_field(f.field(), level.field);
  require_same_vars(f.vars(), J.vars());
  if (J.is_zero_ideal()) fail(ErrorKind::zero_input, "center test against the zero ideal");

  std::vector<std::size_t> jvars;
  if (generators_are_distinct_variables(J, &jvars)) {
    // Monomial bracket: membership is exponent inspection.
    auto in_bracket = [&](const MultiPoly& h) {
      return truncate_mod_bracket(h, jvars, level.q).is_zero();
    };
    if (in_bracket(f)) return false;
    for (const auto& g : J.gens())
      if (!in_bracket(poly_mul(f, g))) return false;
    return true;
  }

  Ideal Jq = buchberger(bracket_power(J, level.q), MonomialOrder::grevlex(), degree_cap);
  if (member(f, Jq, degree_cap)) return false;
  for (const auto& g : J.gens())
    if (!member(poly_mul(f, g), Jq, degree_cap)) return false;
  return true;
}

// nu(f; q) = max{a >= 0 : f^a outside (x_i^q : i in m_vars)}, located by binary
// search with a memoized ladder of f^(2^k). f must lie in m, else nu is
// infinite and the call is rejected.
inline std::uint64_t nu(const MultiPoly& f, const std::vector<std::size_t>& m_vars,
                        const FrobeniusLevel& level) {
  require_same_field(f.field(), level.field);
  feddetail::require_vars_in_range(f.vars(), m_vars);
  if (f.is_zero()) fail(ErrorKind::zero_input, "nu of the zero polynomial");
  for (const auto& t : f.terms()) {
    bool in_m = false;
    for (auto v : m_vars)
      if (t.mono[v] > 0) in_m = true;
    if (!in_m)
      fail(ErrorKind::domain_error, "nu is infinite: the polynomial is not in the point ideal");
  }

  const std::uint64_t q = level.q;
  // Any power beyond n(q-1) lands in m^[q]: a product of more than n(q-1)
  // tracked variables forces some exponent to reach q.
  const std::uint64_t hi_bound = static_cast<std::uint64_t>(m_vars.size()) * (q - 1);

  std::vector<MultiPoly> ladder{f};  // ladder[k] = f^(2^k), truncated
  auto power_in_bracket = [&](std::uint64_t a) {
    // Work with truncated representatives: dropping terms already inside the
    // monomial ideal m^[q] never changes membership of later products.
    MultiPoly acc = MultiPoly::one(f.field(), f.vars());
    std::size_t k = 0;
    while ((std::uint64_t{1} << k) <= a) {
      if (k >= ladder.size()) {
        MultiPoly next = poly_mul(ladder.back(), ladder.back());
        ladder.push_back(truncate_mod_bracket(next, m_vars, q));
      }
      if (a & (std::uint64_t{1} << k))
        acc = truncate_mod_bracket(poly_mul(acc, ladder[k]), m_vars, q);
      ++k;
    }
    return acc.is_zero();
  };

  std::uint64_t lo = 0, hi = hi_bound + 1;  // invariant: P(lo) holds, P(hi) fails
  if (power_in_bracket(1)) return 0;
  lo = 1;
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (power_in_bracket(mid))
      hi = mid;
    else
      lo = mid;
  }
  return lo;
}

// Ladder of nu values for e = 1..e_max with the exact ratios nu/q.
inline NuSequence fpt_estimate(const MultiPoly& f, const std::vector<std::size_t>& m_vars,
                               unsigned e_max) {
  if (e_max == 0) fail(ErrorKind::domain_error, "e_max must be positive");
  NuSequence seq;
  seq.f = f.print();
  for (auto v : m_vars) seq.point.push_back(f.vars().name(v));
  for (unsigned e = 1; e <= e_max; ++e) {
    FrobeniusLevel level(f.field(), e);
    std::uint64_t n = nu(f, m_vars, level);
    seq.entries.push_back(
        {e, level.q, n, Rat(static_cast<long long>(n), static_cast<long long>(level.q))});
  }
  return seq;
}

// F-purity at level e implies F-purity at level n*e; reported as the
// implication's truth value on this input (expected always true).
inline bool stability_check(const MultiPoly& a, const std::vector<std::size_t>& m_vars,
                            const FrobeniusLevel& level, unsigned n) {
  if (n == 0) fail(ErrorKind::domain_error, "stability multiplier must be positive");
  FedderReport base = fpure_hypersurface(a, m_vars, level);
  if (!base.fpure) return true;
  FrobeniusLevel scaled(level.field, level.e * n);
  return fpure_hypersurface(a, m_vars, scaled).fpure;
}

}  // namespace frobsplit
