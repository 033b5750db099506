#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "varctx.hpp"

namespace frobsplit {

// Frobenius powers q = p^e beyond this bound are refused everywhere: f^{q-1}
// blows up combinatorially and exact desk-scale computation stops being honest.
inline constexpr std::uint64_t kQGuard = std::uint64_t{1} << 20;

struct Term {
  fp_t coeff;
  Monomial mono;
  bool operator==(const Term& o) const noexcept {
    return coeff == o.coeff && mono == o.mono;
  }
};

// Sparse multivariate polynomial over F_p in a fixed variable context.
// Canonical form: no zero coefficients, no duplicate monomials, terms sorted
// in descending graded-reverse-lexicographic order. Instances are immutable
// values; all operations return new objects.
class MultiPoly {
 public:
  MultiPoly(FieldCtx field, VarCtx vars)
      : field_(std::move(field)), vars_(std::move(vars)) {}

  MultiPoly(FieldCtx field, VarCtx vars, std::vector<Term> terms)
      : field_(std::move(field)), vars_(std::move(vars)), terms_(std::move(terms)) {
    canonicalize();
  }

  static MultiPoly zero(const FieldCtx& f, const VarCtx& v) { return MultiPoly(f, v); }

  static MultiPoly constant(const FieldCtx& f, const VarCtx& v, fp_t c) {
    MultiPoly r(f, v);
    c = f.reduce(c);
    if (c) r.terms_.push_back({c, Monomial(v.size(), 0)});
    return r;
  }

  static MultiPoly one(const FieldCtx& f, const VarCtx& v) { return constant(f, v, 1); }

  static MultiPoly variable(const FieldCtx& f, const VarCtx& v, std::size_t i) {
    if (i >= v.size()) fail(ErrorKind::unknown_variable, "variable index out of range");
    MultiPoly r(f, v);
    Monomial m(v.size(), 0);
    m[i] = 1;
    r.terms_.push_back({1 % f.p(), m});
    return r;
  }

  const FieldCtx& field() const noexcept { return field_; }
  const VarCtx& vars() const noexcept { return vars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }

  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && is_constant_monomial(terms_[0].mono));
  }

  fp_t constant_value() const noexcept {
    return terms_.empty() ? 0 : terms_[0].coeff;
  }

  std::uint64_t degree() const noexcept {
    return terms_.empty() ? 0 : total_degree(terms_[0].mono);
  }

  std::uint64_t degree_in(std::size_t var) const noexcept {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max<std::uint64_t>(d, t.mono[var]);
    return d;
  }

  bool uses_var(std::size_t var) const noexcept {
    for (const auto& t : terms_)
      if (t.mono[var]) return true;
    return false;
  }

  // Coefficient of an exact monomial.
  fp_t coeff_at(const Monomial& m) const {
    if (m.size() != vars_.size()) fail(ErrorKind::arity_mismatch, "monomial arity mismatch");
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return 0;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.require_compat(b);
    std::vector<Term> ts = a.terms_;
    ts.insert(ts.end(), b.terms_.begin(), b.terms_.end());
    return MultiPoly(a.field_, a.vars_, std::move(ts));
  }

  friend MultiPoly operator-(const MultiPoly& a) {
    std::vector<Term> ts = a.terms_;
    for (auto& t : ts) t.coeff = a.field_.neg(t.coeff);
    MultiPoly r(a.field_, a.vars_);
    r.terms_ = std::move(ts);  // negation preserves canonical form
    return r;
  }

  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    return poly_mul(a, b);
  }

  MultiPoly scaled(fp_t c) const {
    c = field_.reduce(c);
    MultiPoly r(field_, vars_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
    return r;
  }

  bool operator==(const MultiPoly& o) const noexcept {
    return field_ == o.field_ && vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const noexcept { return !(*this == o); }

  // Canonical text form; parse_poly(print(f)) == f.
  std::string print() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      if (k) out += "+";
      out += print_term(terms_[k]);
    }
    return out;
  }

  friend MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) {
    a.require_compat(b);
    std::map<Monomial, fp_t> acc;
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) {
        Monomial m = monomial_mul(ta.mono, tb.mono);
        fp_t c = a.field_.mul(ta.coeff, tb.coeff);
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(std::move(m), c);
        else
          it->second = a.field_.add(it->second, c);
      }
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c) ts.push_back({c, m});
    std::sort(ts.begin(), ts.end(),
              [](const Term& x, const Term& y) { return grevlex_less(y.mono, x.mono); });
    MultiPoly r(a.field_, a.vars_);
    r.terms_ = std::move(ts);
    return r;
  }

  void require_compat(const MultiPoly& o) const {
    require_same_field(field_, o.field_);
    require_same_vars(vars_, o.vars_);
  }

 private:
  std::string print_term(const Term& t) const {
    if (is_constant_monomial(t.mono)) return std::to_string(t.coeff);
    std::string out;
    if (t.coeff != 1) out = std::to_string(t.coeff);
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (!t.mono[i]) continue;
      if (!out.empty()) out += "*";
      out += vars_.name(i);
      if (t.mono[i] > 1) out += "^" + std::to_string(t.mono[i]);
    }
    return out;
  }

  void canonicalize() {
    for (auto& t : terms_) {
      if (t.mono.size() != vars_.size())
        fail(ErrorKind::arity_mismatch, "term monomial arity mismatch");
      t.coeff = field_.reduce(t.coeff);
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return grevlex_less(y.mono, x.mono); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff = field_.add(out.back().coeff, t.coeff);
      else
        out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return t.coeff == 0; }),
              out.end());
    terms_ = std::move(out);
  }

  FieldCtx field_;
  VarCtx vars_;
  std::vector<Term> terms_;
};

// f^n by binary exponentiation. The p-power part of n is peeled off first and
// applied as a Frobenius exponent scaling: over F_p, (sum c_m m)^p = sum c_m m^p.
inline MultiPoly poly_pow(const MultiPoly& f, std::uint64_t n) {
  const FieldCtx& field = f.field();
  if (n == 0) return MultiPoly::one(field, f.vars());
  if (f.is_zero()) return f;

  std::uint64_t pk = 1, m = n;
  while (m % field.p() == 0) {
    m /= field.p();
    pk *= field.p();
  }

  MultiPoly base = f;
  MultiPoly acc = MultiPoly::one(field, f.vars());
  std::uint64_t mm = m;
  while (mm) {
    if (mm & 1) acc = poly_mul(acc, base);
    mm >>= 1;
    if (mm) base = poly_mul(base, base);
  }

  if (pk > 1) {
    std::vector<Term> ts = acc.terms();
    for (auto& t : ts)
      for (auto& e : t.mono) {
        std::uint64_t v = std::uint64_t{e} * pk;
        if (v > 0xffffffffULL)
          fail(ErrorKind::exponent_overflow, "monomial exponent overflow in power");
        e = static_cast<std::uint32_t>(v);
      }
    // Frobenius scaling is injective on monomials and preserves ordering of
    // distinct terms, so the term list stays canonical.
    return MultiPoly(field, f.vars(), std::move(ts));
  }
  return acc;
}

// The polynomial in the remaining variables multiplying prod_{i in S} x_i^{partial[i]}
// exactly (terms whose S-exponents all match). Result lives in the same context
// with the S-variables absent.
inline MultiPoly coeff_of(const MultiPoly& f,
                          const std::vector<std::pair<std::size_t, std::uint32_t>>& partial) {
  for (const auto& [var, _] : partial)
    if (var >= f.vars().size())
      fail(ErrorKind::unknown_variable, "coeff_of: variable index out of range");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    bool match = true;
    for (const auto& [var, exp] : partial)
      if (t.mono[var] != exp) {
        match = false;
        break;
      }
    if (!match) continue;
    Term nt = t;
    for (const auto& [var, _] : partial) nt.mono[var] = 0;
    out.push_back(std::move(nt));
  }
  return MultiPoly(f.field(), f.vars(), std::move(out));
}

// Drops every term with some center-variable exponent >= q; the result is
// congruent to f modulo (x_i^q : i in centerVars).
inline MultiPoly truncate_mod_bracket(const MultiPoly& f,
                                      const std::vector<std::size_t>& center_vars,
                                      std::uint64_t q) {
  for (auto v : center_vars)
    if (v >= f.vars().size())
      fail(ErrorKind::unknown_variable, "truncate_mod_bracket: variable index out of range");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    bool keep = true;
    for (auto v : center_vars)
      if (t.mono[v] >= q) {
        keep = false;
        break;
      }
    if (keep) out.push_back(t);
  }
  return MultiPoly(f.field(), f.vars(), std::move(out));
}

inline fp_t eval(const MultiPoly& f, const std::vector<fp_t>& point) {
  if (point.size() != f.vars().size())
    fail(ErrorKind::arity_mismatch, "eval: point arity mismatch");
  const FieldCtx& field = f.field();
  fp_t total = 0;
  for (const auto& t : f.terms()) {
    fp_t v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.mono[i]) v = field.mul(v, field.pow(field.reduce(point[i]), t.mono[i]));
    total = field.add(total, v);
  }
  return total;
}

// Substitutes x_i := value for a single variable.
inline MultiPoly substitute_value(const MultiPoly& f, std::size_t var, fp_t value) {
  if (var >= f.vars().size())
    fail(ErrorKind::unknown_variable, "substitute_value: variable index out of range");
  const FieldCtx& field = f.field();
  value = field.reduce(value);
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Term nt = t;
    if (nt.mono[var]) {
      nt.coeff = field.mul(nt.coeff, field.pow(value, nt.mono[var]));
      nt.mono[var] = 0;
    }
    if (nt.coeff) out.push_back(std::move(nt));
  }
  return MultiPoly(f.field(), f.vars(), std::move(out));
}

// Binomial coefficient mod p via Lucas' theorem.
inline fp_t binom_mod_p(const FieldCtx& field, std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  const std::uint64_t p = field.p();
  fp_t result = 1 % p;
  while (n || k) {
    std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    kd = std::min(kd, nd - kd);
    fp_t num = 1 % p, den = 1 % p;
    for (std::uint64_t j = 1; j <= kd; ++j) {
      num = field.mul(num, field.reduce(nd - kd + j));
      den = field.mul(den, field.reduce(j));
    }
    result = field.mul(result, field.div(num, den));
    n /= p;
    k /= p;
  }
  return result;
}

// Coordinate translation x_i := x_i + shift_i for every variable.
inline MultiPoly subst_shift(const MultiPoly& f, const std::vector<fp_t>& shifts) {
  if (shifts.size() != f.vars().size())
    fail(ErrorKind::arity_mismatch, "subst_shift: shift arity mismatch");
  const FieldCtx& field = f.field();
  MultiPoly cur = f;
  for (std::size_t var = 0; var < shifts.size(); ++var) {
    fp_t c = field.reduce(shifts[var]);
    if (c == 0 || !cur.uses_var(var)) continue;
    std::vector<Term> out;
    for (const auto& t : cur.terms()) {
      std::uint32_t e = t.mono[var];
      if (e == 0) {
        out.push_back(t);
        continue;
      }
      // x^e -> sum_j C(e,j) c^{e-j} x^j
      for (std::uint32_t j = 0; j <= e; ++j) {
        fp_t b = binom_mod_p(field, e, j);
        if (b == 0) continue;
        Term nt = t;
        nt.mono[var] = j;
        nt.coeff = field.mul(t.coeff, field.mul(b, field.pow(c, e - j)));
        out.push_back(std::move(nt));
      }
    }
    cur = MultiPoly(field, f.vars(), std::move(out));
  }
  return cur;
}

// Substitutes 0 for each listed variable (reduction modulo the variable ideal).
inline MultiPoly set_vars_zero(const MultiPoly& f, const std::vector<std::size_t>& vars) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    bool keep = true;
    for (auto v : vars) {
      if (v >= f.vars().size())
        fail(ErrorKind::unknown_variable, "set_vars_zero: variable index out of range");
      if (t.mono[v]) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(t);
  }
  return MultiPoly(f.field(), f.vars(), std::move(out));
}

}  // namespace frobsplit
