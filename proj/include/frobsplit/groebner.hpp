#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "multipoly.hpp"

namespace frobsplit {

inline constexpr std::uint64_t kDefaultDegreeCap = 60;

// Term orders: graded reverse lexicographic (the storage order) and pure
// lexicographic through a variable priority permutation, used for elimination.
struct MonomialOrder {
  enum class Type { grevlex, lex };
  Type type = Type::grevlex;
  std::vector<std::size_t> perm;  // priority list; empty = identity

  static MonomialOrder grevlex() { return {Type::grevlex, {}}; }
  static MonomialOrder lex(std::vector<std::size_t> priority = {}) {
    return {Type::lex, std::move(priority)};
  }

  void validate(std::size_t nvars) const {
    if (perm.empty()) return;
    if (perm.size() != nvars)
      fail(ErrorKind::arity_mismatch, "order permutation arity mismatch");
    std::vector<bool> seen(nvars, false);
    for (auto i : perm) {
      if (i >= nvars || seen[i])
        fail(ErrorKind::domain_error, "order permutation is not a bijection");
      seen[i] = true;
    }
  }

  // true iff a < b.
  bool less(const Monomial& a, const Monomial& b) const {
    if (type == Type::grevlex && perm.empty()) return grevlex_less(a, b);
    if (type == Type::lex) {
      if (perm.empty()) {
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] < b[i];
        return false;
      }
      for (auto i : perm)
        if (a[i] != b[i]) return a[i] < b[i];
      return false;
    }
    // permuted grevlex
    std::uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t k = perm.size(); k-- > 0;) {
      std::size_t i = perm[k];
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  }

  bool operator==(const MonomialOrder& o) const {
    return type == o.type && perm == o.perm;
  }
};

// Leading term of a nonzero polynomial under an arbitrary order (storage is
// grevlex-descending, so non-default orders scan).
inline const Term& leading_term(const MultiPoly& f, const MonomialOrder& order) {
  if (f.is_zero()) fail(ErrorKind::zero_input, "leading term of zero");
  if (order.type == MonomialOrder::Type::grevlex && order.perm.empty())
    return f.terms().front();
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (order.less(best->mono, t.mono)) best = &t;
  return *best;
}

class Ideal;
struct GBCache {
  MonomialOrder order;
  std::vector<MultiPoly> basis;  // reduced: monic, auto-reduced, LM-ascending
};

// Finitely generated ideal of F_p[vars]. Immutable value; buchberger() returns
// a new value carrying the reduced-basis cache.
class Ideal {
 public:
  Ideal(FieldCtx field, VarCtx vars, std::vector<MultiPoly> gens)
      : field_(std::move(field)), vars_(std::move(vars)) {
    for (auto& g : gens) {
      require_same_field(field_, g.field());
      require_same_vars(vars_, g.vars());
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  const FieldCtx& field() const noexcept { return field_; }
  const VarCtx& vars() const noexcept { return vars_; }
  const std::vector<MultiPoly>& gens() const noexcept { return gens_; }
  bool is_zero_ideal() const noexcept { return gens_.empty(); }

  std::shared_ptr<const GBCache> cache() const noexcept { return cache_; }
  Ideal with_cache(std::shared_ptr<const GBCache> c) const {
    Ideal copy = *this;
    copy.cache_ = std::move(c);
    return copy;
  }

 private:
  FieldCtx field_;
  VarCtx vars_;
  std::vector<MultiPoly> gens_;
  std::shared_ptr<const GBCache> cache_;
};

namespace gbdetail {

// Multivariate division: f = sum quotients[i]*divisors[i] + remainder, where no
// remainder term is divisible by any divisor's leading monomial. Divisors must
// be nonzero; the first divisor (in list order) whose LM divides wins each step.
struct Division {
  std::vector<MultiPoly> quotients;
  MultiPoly remainder;
};

inline Division divide_tracked(const MultiPoly& f, const std::vector<MultiPoly>& divisors,
                               const MonomialOrder& order) {
  const FieldCtx& field = f.field();
  const VarCtx& vars = f.vars();
  Division out{std::vector<MultiPoly>(divisors.size(), MultiPoly::zero(field, vars)),
               MultiPoly::zero(field, vars)};
  std::vector<Term> lts;
  lts.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (d.is_zero()) fail(ErrorKind::zero_input, "division by a zero polynomial");
    lts.push_back(leading_term(d, order));
  }
  MultiPoly h = f;
  std::vector<Term> rem_terms;
  while (!h.is_zero()) {
    const Term lt = leading_term(h, order);
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!monomial_divides(lts[i].mono, lt.mono)) continue;
      Monomial mq = monomial_quotient(lt.mono, lts[i].mono);
      fp_t cq = field.div(lt.coeff, lts[i].coeff);
      MultiPoly q(field, vars, {Term{cq, mq}});
      out.quotients[i] = out.quotients[i] + q;
      h = h - poly_mul(q, divisors[i]);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem_terms.push_back(lt);
      h = h - MultiPoly(field, vars, {lt});
    }
  }
  out.remainder = MultiPoly(field, vars, std::move(rem_terms));
  return out;
}

inline MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& divisors,
                        const MonomialOrder& order) {
  if (divisors.empty()) return f;
  return divide_tracked(f, divisors, order).remainder;
}

inline MultiPoly spoly(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order) {
  const Term& lf = leading_term(f, order);
  const Term& lg = leading_term(g, order);
  Monomial l = monomial_lcm(lf.mono, lg.mono);
  const FieldCtx& field = f.field();
  MultiPoly mf(field, f.vars(), {Term{field.inv(lf.coeff), monomial_quotient(l, lf.mono)}});
  MultiPoly mg(field, f.vars(), {Term{field.inv(lg.coeff), monomial_quotient(l, lg.mono)}});
  return poly_mul(mf, f) - poly_mul(mg, g);
}

}  // namespace gbdetail

// Buchberger's algorithm with the normal pair-selection strategy (smallest lcm
// degree first) and the coprime-lcm and chain criteria; the output is the
// reduced Groebner basis (monic, auto-reduced, sorted by leading monomial), so
// it is canonical for the given order. The degree cap bounds the total degree
// of any examined S-pair lcm and aborts instead of hanging.
inline Ideal buchberger(const Ideal& I, const MonomialOrder& order = MonomialOrder::grevlex(),
                        std::uint64_t degree_cap = kDefaultDegreeCap) {
  order.validate(I.vars().size());
  if (I.cache() && I.cache()->order == order) return I;
  const FieldCtx& field = I.field();
  const VarCtx& vars = I.vars();

  std::vector<MultiPoly> basis;
  for (const auto& g : I.gens())
    basis.push_back(g.scaled(field.inv(leading_term(g, order).coeff)));

  // Pair bookkeeping: `considered` holds every pair already processed or
  // discarded by a criterion, enabling the chain criterion.
  std::set<std::pair<std::size_t, std::size_t>> pending, considered;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  while (!pending.empty()) {
    // Normal strategy: minimal lcm total degree, ties by index pair.
    auto best = pending.begin();
    std::uint64_t best_deg = UINT64_MAX;
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      std::uint64_t d = total_degree(
          monomial_lcm(leading_term(basis[it->first], order).mono,
                       leading_term(basis[it->second], order).mono));
      if (d < best_deg) {
        best_deg = d;
        best = it;
      }
    }
    auto [i, j] = *best;
    pending.erase(best);
    considered.insert({i, j});

    const Monomial& mi = leading_term(basis[i], order).mono;
    const Monomial& mj = leading_term(basis[j], order).mono;
    Monomial l = monomial_lcm(mi, mj);

    // First criterion: coprime leading monomials.
    if (l == monomial_mul(mi, mj)) continue;
    // Chain criterion: some k with LM_k | lcm and both (i,k), (j,k) done.
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!monomial_divides(leading_term(basis[k], order).mono, l)) continue;
      auto key = [&](std::size_t a, std::size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (considered.count(key(i, k)) && considered.count(key(j, k))) chained = true;
    }
    if (chained) continue;

    if (total_degree(l) > degree_cap)
      fail(ErrorKind::degree_cap,
           "Groebner pair degree " + std::to_string(total_degree(l)) +
               " exceeds cap " + std::to_string(degree_cap));

    MultiPoly s = gbdetail::reduce(gbdetail::spoly(basis[i], basis[j], order), basis, order);
    if (s.is_zero()) continue;
    s = s.scaled(field.inv(leading_term(s, order).coeff));
    basis.push_back(s);
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop polynomials whose LM is divisible by another's LM.
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = leading_term(basis[i], order).mono;
      const Monomial& mj = leading_term(basis[j], order).mono;
      if (monomial_divides(mj, mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Inter-reduce to the unique reduced basis.
  std::vector<MultiPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MultiPoly r = gbdetail::reduce(minimal[i], others, order);
    if (!r.is_zero())
      reduced.push_back(r.scaled(field.inv(leading_term(r, order).coeff)));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return order.less(leading_term(a, order).mono, leading_term(b, order).mono);
  });

  auto cache = std::make_shared<GBCache>(GBCache{order, std::move(reduced)});
  return Ideal(field, vars, cache->basis).with_cache(std::move(cache));
}

inline MultiPoly normal_form(const MultiPoly& f, const Ideal& I,
                             const MonomialOrder& order = MonomialOrder::grevlex(),
                             std::uint64_t degree_cap = kDefaultDegreeCap) {
  f.require_compat(MultiPoly::zero(I.field(), I.vars()));
  if (I.is_zero_ideal()) return f;
  if (I.cache() && I.cache()->order == order)
    return gbdetail::reduce(f, I.cache()->basis, order);
  Ideal J = buchberger(I, order, degree_cap);
  return gbdetail::reduce(f, J.cache()->basis, order);
}

inline bool member(const MultiPoly& f, const Ideal& I,
                   std::uint64_t degree_cap = kDefaultDegreeCap) {
  return normal_form(f, I, MonomialOrder::grevlex(), degree_cap).is_zero();
}

inline bool ideal_equal(const Ideal& A, const Ideal& B,
                        std::uint64_t degree_cap = kDefaultDegreeCap) {
  Ideal ga = buchberger(A, MonomialOrder::grevlex(), degree_cap);
  Ideal gb = buchberger(B, MonomialOrder::grevlex(), degree_cap);
  for (const auto& g : A.gens())
    if (!normal_form(g, gb, MonomialOrder::grevlex(), degree_cap).is_zero()) return false;
  for (const auto& g : B.gens())
    if (!normal_form(g, ga, MonomialOrder::grevlex(), degree_cap).is_zero()) return false;
  return true;
}

// Validates and decomposes q as p^e; returns e.
inline unsigned require_prime_power(const FieldCtx& field, std::uint64_t q) {
  if (q == 0) fail(ErrorKind::not_prime_power, "q must be positive");
  if (q > kQGuard)
    fail(ErrorKind::q_guard, "q = " + std::to_string(q) + " exceeds the guard 2^20");
  unsigned e = 0;
  std::uint64_t m = q;
  while (m % field.p() == 0) {
    m /= field.p();
    ++e;
  }
  if (m != 1)
    fail(ErrorKind::not_prime_power,
         "q = " + std::to_string(q) + " is not a power of p = " + std::to_string(field.p()));
  return e;
}

// Frobenius bracket power I^[q] = (g^q : g in gens I), q = p^e. Well defined
// independently of the generating set because Frobenius is a ring map.
inline Ideal bracket_power(const Ideal& I, std::uint64_t q) {
  require_prime_power(I.field(), q);
  std::vector<MultiPoly> gens;
  for (const auto& g : I.gens()) gens.push_back(poly_pow(g, q));
  return Ideal(I.field(), I.vars(), std::move(gens));
}

namespace gbdetail {

// Context extension by one auxiliary variable (prepended) for elimination.
// The auxiliary name is lengthened until it avoids every user variable.
inline VarCtx extend_vars(const VarCtx& vars, std::string aux) {
  while (vars.index(aux)) aux += "_";
  std::vector<std::string> names{aux};
  for (const auto& n : vars.names()) names.push_back(n);
  return VarCtx(names);
}

inline MultiPoly extend_poly(const MultiPoly& f, const VarCtx& bigvars) {
  std::vector<Term> ts;
  for (const auto& t : f.terms()) {
    Monomial m(bigvars.size(), 0);
    std::copy(t.mono.begin(), t.mono.end(), m.begin() + 1);
    ts.push_back({t.coeff, std::move(m)});
  }
  return MultiPoly(f.field(), bigvars, std::move(ts));
}

inline MultiPoly restrict_poly(const MultiPoly& f, const VarCtx& vars) {
  std::vector<Term> ts;
  for (const auto& t : f.terms()) {
    if (t.mono[0] != 0)
      fail(ErrorKind::internal_error, "restriction of a term containing the aux variable");
    ts.push_back({t.coeff, Monomial(t.mono.begin() + 1, t.mono.end())});
  }
  return MultiPoly(f.field(), vars, std::move(ts));
}

}  // namespace gbdetail

// I cap J by the auxiliary-variable construction: eliminate t from
// t*I + (1-t)*J using a lex order with t first.
inline Ideal intersection(const Ideal& I, const Ideal& J,
                          std::uint64_t degree_cap = kDefaultDegreeCap) {
  require_same_vars(I.vars(), J.vars());
  require_same_field(I.field(), J.field());
  if (I.is_zero_ideal()) return I;
  if (J.is_zero_ideal()) return J;
  const FieldCtx& field = I.field();
  VarCtx big = gbdetail::extend_vars(I.vars(), "_elim");
  MultiPoly t = MultiPoly::variable(field, big, 0);
  MultiPoly one_minus_t = MultiPoly::one(field, big) - t;
  std::vector<MultiPoly> gens;
  for (const auto& g : I.gens()) gens.push_back(poly_mul(t, gbdetail::extend_poly(g, big)));
  for (const auto& g : J.gens())
    gens.push_back(poly_mul(one_minus_t, gbdetail::extend_poly(g, big)));
  std::vector<std::size_t> prio(big.size());
  std::iota(prio.begin(), prio.end(), 0);  // t first, then original order
  Ideal extended = buchberger(Ideal(field, big, std::move(gens)),
                              MonomialOrder::lex(prio), degree_cap);
  std::vector<MultiPoly> kept;
  for (const auto& g : extended.cache()->basis)
    if (!g.uses_var(0)) kept.push_back(gbdetail::restrict_poly(g, I.vars()));
  return Ideal(field, I.vars(), std::move(kept));
}

// General colon ideal (I : J) = cap_j (I : g_j), each principal colon computed
// as (I cap (g_j)) / g_j. The result is self-checked: I is contained in it and
// its generators multiply J back into I.
inline Ideal colon(const Ideal& I, const Ideal& J,
                   std::uint64_t degree_cap = kDefaultDegreeCap) {
  require_same_vars(I.vars(), J.vars());
  require_same_field(I.field(), J.field());
  if (J.is_zero_ideal())
    fail(ErrorKind::zero_input, "colon by the zero ideal");
  const FieldCtx& field = I.field();
  std::optional<Ideal> acc;
  for (const auto& g : J.gens()) {
    Ideal meet = intersection(I, Ideal(field, I.vars(), {g}), degree_cap);
    std::vector<MultiPoly> quot;
    for (const auto& h : meet.gens()) {
      auto division = gbdetail::divide_tracked(h, {g}, MonomialOrder::grevlex());
      if (!division.remainder.is_zero())
        fail(ErrorKind::internal_error, "colon: intersection generator not divisible");
      quot.push_back(division.quotients[0]);
    }
    Ideal principal(field, I.vars(), std::move(quot));
    acc = acc ? intersection(*acc, principal, degree_cap) : principal;
  }
  Ideal result = buchberger(*acc, MonomialOrder::grevlex(), degree_cap);
  // Self-check: I subseteq (I : J) and result * J subseteq I.
  Ideal gI = buchberger(I, MonomialOrder::grevlex(), degree_cap);
  for (const auto& g : I.gens())
    if (!normal_form(g, result, MonomialOrder::grevlex(), degree_cap).is_zero())
      fail(ErrorKind::internal_error, "colon self-check failed: I not contained");
  for (const auto& c : result.gens())
    for (const auto& g : J.gens())
      if (!normal_form(poly_mul(c, g), gI, MonomialOrder::grevlex(), degree_cap).is_zero())
        fail(ErrorKind::internal_error, "colon self-check failed: product escapes I");
  return result;
}

struct CiColon {
  Ideal ideal;     // J^[q] + (g_e)
  MultiPoly g_e;   // (g_1 ... g_r)^(q-1)
};

// For J generated by a regular sequence, (J^[q] : J) = J^[q] + ((prod g_i)^(q-1)).
// The regular-sequence hypothesis is the caller's responsibility except when
// all generators are distinct variables, which is verified here.
inline CiColon ci_colon_shortcut(const Ideal& J, std::uint64_t q) {
  require_prime_power(J.field(), q);
  if (J.is_zero_ideal())
    fail(ErrorKind::zero_input, "complete-intersection colon of the zero ideal");
  MultiPoly prod = MultiPoly::one(J.field(), J.vars());
  for (const auto& g : J.gens()) prod = poly_mul(prod, g);
  MultiPoly g_e = poly_pow(prod, q - 1);
  Ideal bp = bracket_power(J, q);
  std::vector<MultiPoly> gens = bp.gens();
  gens.push_back(g_e);
  return {Ideal(J.field(), J.vars(), std::move(gens)), std::move(g_e)};
}

// True when every generator is a distinct single variable (x_i), the case in
// which the regular-sequence hypothesis of the shortcut is automatic.
inline bool generators_are_distinct_variables(const Ideal& J,
                                              std::vector<std::size_t>* out_vars = nullptr) {
  std::set<std::size_t> seen;
  for (const auto& g : J.gens()) {
    if (g.num_terms() != 1) return false;
    const Term& t = g.terms()[0];
    if (t.coeff != 1 || total_degree(t.mono) != 1) return false;
    std::size_t var = 0;
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i]) var = i;
    if (!seen.insert(var).second) return false;
  }
  if (out_vars) out_vars->assign(seen.begin(), seen.end());
  return true;
}

using gbdetail::divide_tracked;
using gbdetail::Division;

}  // namespace frobsplit
