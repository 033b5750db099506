#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "multipoly.hpp"

namespace frobsplit {

// Dense univariate polynomial over F_p, coefficients stored ascending and
// trimmed (no trailing zeros). Carries its variable name only for printing.
class UniPoly {
 public:
  UniPoly(FieldCtx field, std::string var)
      : field_(std::move(field)), var_(std::move(var)) {}

  UniPoly(FieldCtx field, std::string var, std::vector<fp_t> coeffs)
      : field_(std::move(field)), var_(std::move(var)), c_(std::move(coeffs)) {
    for (auto& x : c_) x = field_.reduce(x);
    trim();
  }

  static UniPoly zero(const FieldCtx& f, const std::string& var) { return UniPoly(f, var); }

  static UniPoly constant(const FieldCtx& f, const std::string& var, fp_t c) {
    return UniPoly(f, var, {c});
  }

  static UniPoly monomial(const FieldCtx& f, const std::string& var, std::size_t deg,
                          fp_t c = 1) {
    std::vector<fp_t> v(deg + 1, 0);
    v[deg] = c;
    return UniPoly(f, var, std::move(v));
  }

  const FieldCtx& field() const noexcept { return field_; }
  const std::string& var() const noexcept { return var_; }
  const std::vector<fp_t>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  std::size_t degree() const noexcept { return c_.empty() ? 0 : c_.size() - 1; }
  fp_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  fp_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    a.require_compat(b);
    std::vector<fp_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = a.field_.add(a.coeff(i), b.coeff(i));
    return UniPoly(a.field_, a.var_, std::move(v));
  }

  friend UniPoly operator-(const UniPoly& a) {
    std::vector<fp_t> v = a.c_;
    for (auto& x : v) x = a.field_.neg(x);
    return UniPoly(a.field_, a.var_, std::move(v));
  }

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    a.require_compat(b);
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_, a.var_);
    std::vector<fp_t> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.c_[i]) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        v[i + j] = a.field_.add(v[i + j], a.field_.mul(a.c_[i], b.c_[j]));
    }
    return UniPoly(a.field_, a.var_, std::move(v));
  }

  UniPoly scaled(fp_t c) const {
    std::vector<fp_t> v = c_;
    c = field_.reduce(c);
    for (auto& x : v) x = field_.mul(x, c);
    return UniPoly(field_, var_, std::move(v));
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(lead()));
  }

  bool operator==(const UniPoly& o) const noexcept {
    return field_ == o.field_ && c_ == o.c_;
  }
  bool operator!=(const UniPoly& o) const noexcept { return !(*this == o); }

  std::string print() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (!c_[k]) continue;
      if (!out.empty()) out += "+";
      if (k == 0) {
        out += std::to_string(c_[k]);
      } else {
        if (c_[k] != 1) out += std::to_string(c_[k]) + "*";
        out += var_;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

  void require_compat(const UniPoly& o) const { require_same_field(field_, o.field_); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  FieldCtx field_;
  std::string var_;
  std::vector<fp_t> c_;
};

inline std::pair<UniPoly, UniPoly> uni_divrem(const UniPoly& a, const UniPoly& b) {
  a.require_compat(b);
  if (b.is_zero()) fail(ErrorKind::division_by_zero, "univariate division by zero");
  const FieldCtx& field = a.field();
  std::vector<fp_t> rem = a.coeffs();
  if (rem.size() < b.coeffs().size())
    return {UniPoly(field, a.var()), a};
  std::vector<fp_t> quo(rem.size() - b.coeffs().size() + 1, 0);
  fp_t inv_lead = field.inv(b.lead());
  for (std::size_t k = quo.size(); k-- > 0;) {
    fp_t top = rem[k + b.degree()];
    if (!top) continue;
    fp_t q = field.mul(top, inv_lead);
    quo[k] = q;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      rem[k + j] = field.sub(rem[k + j], field.mul(q, b.coeffs()[j]));
  }
  return {UniPoly(field, a.var(), std::move(quo)), UniPoly(field, a.var(), std::move(rem))};
}

inline UniPoly uni_div_exact(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = uni_divrem(a, b);
  if (!r.is_zero())
    fail(ErrorKind::internal_error, "uni_div_exact: division not exact");
  return q;
}

// Monic gcd; gcd(0,0) = 0.
inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
  a.require_compat(b);
  while (!b.is_zero()) {
    UniPoly r = uni_divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline UniPoly uni_derivative(const UniPoly& f) {
  const FieldCtx& field = f.field();
  if (f.coeffs().size() <= 1) return UniPoly(field, f.var());
  std::vector<fp_t> v(f.coeffs().size() - 1, 0);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    v[i - 1] = field.mul(f.coeffs()[i], field.reduce(i));
  return UniPoly(field, f.var(), std::move(v));
}

inline fp_t uni_eval(const UniPoly& f, fp_t x) {
  const FieldCtx& field = f.field();
  x = field.reduce(x);
  fp_t acc = 0;
  for (std::size_t k = f.coeffs().size(); k-- > 0;)
    acc = field.add(field.mul(acc, x), f.coeffs()[k]);
  return acc;
}

inline fp_t eval(const UniPoly& f, fp_t x) { return uni_eval(f, x); }

inline UniPoly uni_pow(const UniPoly& f, std::uint64_t n) {
  UniPoly acc = UniPoly::constant(f.field(), f.var(), 1);
  UniPoly base = f;
  while (n) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return acc;
}

inline UniPoly uni_compose(const UniPoly& f, const UniPoly& g) {
  f.require_compat(g);
  UniPoly acc(f.field(), g.var());
  for (std::size_t k = f.coeffs().size(); k-- > 0;)
    acc = acc * g + UniPoly::constant(f.field(), g.var(), f.coeffs()[k]);
  return acc;
}

// Over F_p every polynomial with all exponents divisible by p is a p-th power;
// this inverts Frobenius. Coefficients are fixed by x -> x^p on F_p itself.
inline UniPoly pth_root(const UniPoly& f) {
  const FieldCtx& field = f.field();
  const std::uint64_t p = field.p();
  if (f.is_zero()) return f;
  std::vector<fp_t> v((f.degree() / p) + 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (!f.coeffs()[i]) continue;
    if (i % p != 0)
      fail(ErrorKind::domain_error, "pth_root: input is not a p-th power");
    v[i / p] = f.coeffs()[i];
  }
  return UniPoly(field, f.var(), std::move(v));
}

struct SqfreeFactor {
  UniPoly factor;       // monic, squarefree, nonconstant
  std::uint64_t mult;   // multiplicity in the input
};

// Squarefree decomposition in characteristic p: Yun's algorithm on the
// separable part, recursing through p-th roots for the inseparable part.
// Product of factor^mult over all entries times the unit equals the input.
inline void sqfree_decompose_rec(const UniPoly& f, std::uint64_t scale,
                                 std::vector<SqfreeFactor>& out) {
  const FieldCtx& field = f.field();
  const std::uint64_t p = field.p();
  UniPoly fp = uni_derivative(f);
  if (fp.is_zero()) {
    // f = g(x^p); recurse on the p-th root with multiplicities scaled by p.
    if (f.is_constant()) return;
    sqfree_decompose_rec(pth_root(f).monic(), scale * p, out);
    return;
  }
  UniPoly c = uni_gcd(f, fp);           // carries repeated + inseparable part
  UniPoly w = uni_div_exact(f, c);      // product of separable factors, mult 1 each
  std::uint64_t m = 1;
  while (!w.is_constant()) {
    UniPoly y = uni_gcd(w, c);
    UniPoly star = uni_div_exact(w, y); // factors of exact multiplicity m
    if (!star.is_constant()) out.push_back({star.monic(), m * scale});
    c = uni_div_exact(c, y);
    w = std::move(y);
    ++m;
  }
  if (!c.is_constant())
    sqfree_decompose_rec(pth_root(c).monic(), scale * p, out);
}

inline std::vector<SqfreeFactor> sqfree_decomposition(const UniPoly& f) {
  if (f.is_zero()) fail(ErrorKind::zero_input, "squarefree decomposition of zero");
  std::vector<SqfreeFactor> out;
  sqfree_decompose_rec(f.monic(), 1, out);
  std::sort(out.begin(), out.end(), [](const SqfreeFactor& a, const SqfreeFactor& b) {
    if (a.mult != b.mult) return a.mult < b.mult;
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.factor.coeffs() < b.factor.coeffs();
  });
  return out;
}

// Monic product of the distinct irreducible factors (radical).
inline UniPoly squarefree_part(const UniPoly& f) {
  auto dec = sqfree_decomposition(f);
  UniPoly acc = UniPoly::constant(f.field(), f.var(), 1);
  for (const auto& s : dec) acc = acc * s.factor;
  return acc;
}

// ---- conversions between the univariate and multivariate representations ----

inline UniPoly to_unipoly(const MultiPoly& f, std::size_t var) {
  if (var >= f.vars().size())
    fail(ErrorKind::unknown_variable, "to_unipoly: variable index out of range");
  for (std::size_t i = 0; i < f.vars().size(); ++i)
    if (i != var && f.uses_var(i))
      fail(ErrorKind::domain_error,
           "to_unipoly: polynomial uses variable '" + f.vars().name(i) + "'");
  std::vector<fp_t> v(f.degree_in(var) + 1, 0);
  for (const auto& t : f.terms()) v[t.mono[var]] = t.coeff;
  return UniPoly(f.field(), f.vars().name(var), std::move(v));
}

inline MultiPoly to_multipoly(const UniPoly& f, const VarCtx& vars, std::size_t var) {
  if (var >= vars.size())
    fail(ErrorKind::unknown_variable, "to_multipoly: variable index out of range");
  std::vector<Term> ts;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (!f.coeffs()[i]) continue;
    Monomial m(vars.size(), 0);
    m[var] = static_cast<std::uint32_t>(i);
    ts.push_back({f.coeffs()[i], std::move(m)});
  }
  return MultiPoly(f.field(), vars, std::move(ts));
}

}  // namespace frobsplit
