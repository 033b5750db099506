#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "frobsplit/errors.hpp"
#include "frobsplit/rational.hpp"
#include "frobsplit/unifactor.hpp"
#include "frobsplit/unipoly.hpp"

namespace frobsplit {

// One summand of a Q-divisor on the affine line: a monic prime label with an
// exact rational coefficient. Labels of degree <= 3 carry a positive
// irreducibility certificate; higher-degree labels are kept verbatim from the
// squarefree decomposition and flagged as uncertified.
struct DivTerm {
  UniPoly prime;
  Rat coeff{0};
  bool certified = false;
};

namespace divdetail {

// Deterministic label order: degree first, then coefficient vectors compared
// from the top down (so t+1 sorts before t+2).
inline bool label_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t k = a.degree() + 1; k-- > 0;) {
    if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
  }
  return false;
}

}  // namespace divdetail

// Q-divisor on the affine line over F_p, stored as a sorted term list with no
// zero coefficients. All labels share one coordinate variable; the zero
// divisor is coordinate-free.
class QDivisor {
 public:
  explicit QDivisor(const FieldCtx& field) : field_(field) {}

  static QDivisor zero(const FieldCtx& field) { return QDivisor(field); }

  const FieldCtx& field() const noexcept { return field_; }
  const std::vector<DivTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const UniPoly& prime, const Rat& coeff, bool certified) {
    require_same_field(field_, prime.field());
    if (prime.is_constant()) fail(ErrorKind::domain_error, "divisor label must be nonconstant");
    if (prime.lead() != 1) fail(ErrorKind::domain_error, "divisor label must be monic");
    if (!terms_.empty() && terms_.front().prime.var() != prime.var())
      fail(ErrorKind::domain_error, "divisor labels use different coordinates: '" +
                                        terms_.front().prime.var() + "' vs '" + prime.var() + "'");
    if (coeff.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), prime,
                               [](const DivTerm& t, const UniPoly& p) {
                                 return divdetail::label_less(t.prime, p);
                               });
    if (it != terms_.end() && it->prime == prime) {
      it->coeff = it->coeff + coeff;
      it->certified = it->certified && certified;
      if (it->coeff.is_zero()) terms_.erase(it);
    } else {
      terms_.insert(it, DivTerm{prime, coeff, certified});
    }
  }

  bool operator==(const QDivisor& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (!(terms_[i].prime == o.terms_[i].prime) || terms_[i].coeff != o.terms_[i].coeff)
        return false;
    }
    return true;
  }
  bool operator!=(const QDivisor& o) const { return !(*this == o); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) out += " + ";
      out += "(" + terms_[i].coeff.str() + ")[" + terms_[i].prime.print() + "]";
    }
    return out;
  }

 private:
  FieldCtx field_;
  std::vector<DivTerm> terms_;
};

// div(h): the zero locus of h with multiplicities, as a Q-divisor with
// integer coefficients. The scalar unit of h is discarded.
inline QDivisor div_of(const UniPoly& h) {
  if (h.is_zero()) fail(ErrorKind::zero_input, "div of the zero polynomial is undefined");
  QDivisor D(h.field());
  if (h.is_constant()) return D;
  UniFactorization fac = uni_factor(h);
  for (const auto& t : fac.terms)
    D.add_term(t.prime, Rat(static_cast<long long>(t.mult)), t.certified);
  return D;
}

inline QDivisor div_add(const QDivisor& a, const QDivisor& b) {
  require_same_field(a.field(), b.field());
  QDivisor out = a;
  for (const auto& t : b.terms()) out.add_term(t.prime, t.coeff, t.certified);
  return out;
}

inline QDivisor div_scale(const Rat& c, const QDivisor& d) {
  QDivisor out(d.field());
  if (c.is_zero()) return out;
  for (const auto& t : d.terms()) out.add_term(t.prime, c * t.coeff, t.certified);
  return out;
}

inline QDivisor div_sub(const QDivisor& a, const QDivisor& b) {
  return div_add(a, div_scale(Rat(-1), b));
}

// Coefficient of a monic prime label; absent labels have coefficient zero.
inline Rat coeff_at(const QDivisor& d, const UniPoly& prime) {
  for (const auto& t : d.terms())
    if (t.prime == prime) return t.coeff;
  return Rat(0);
}

inline std::vector<UniPoly> support(const QDivisor& d) {
  std::vector<UniPoly> out;
  out.reserve(d.terms().size());
  for (const auto& t : d.terms()) out.push_back(t.prime);
  return out;
}

// The one-dimensional sub-F-purity test for a boundary coefficient at a DVR:
// the pair is sub-F-pure exactly when the coefficient does not exceed 1.
inline bool dvr_subfpure_ok(const Rat& coeff) { return coeff <= Rat(1); }

// A self-map of the affine line, s -> g(s). Inseparable maps (derivative
// identically zero) are rejected up front; everything downstream assumes a
// tame, separable base change.
struct BaseMap {
  UniPoly g;

  explicit BaseMap(UniPoly map) : g(std::move(map)) {
    if (g.is_zero() || g.degree() < 1)
      fail(ErrorKind::domain_error, "base map must have degree >= 1");
    if (uni_derivative(g).is_zero())
      fail(ErrorKind::wild_ramification, "base map '" + g.print() + "' is inseparable");
  }
};

// Pullback of a divisor under s -> g(s): each label pi picks up the divisor of
// pi(g(s)), whose factor multiplicities are the ramification orders. A
// multiplicity divisible by p means wild ramification and is an error rather
// than a silent pass.
inline QDivisor pullback(const QDivisor& d, const BaseMap& f) {
  require_same_field(d.field(), f.g.field());
  const std::uint64_t p = d.field().p();
  QDivisor out(d.field());
  for (const auto& t : d.terms()) {
    UniPoly composed = uni_compose(t.prime, f.g);
    UniFactorization fac = uni_factor(composed);
    for (const auto& ft : fac.terms) {
      if (ft.mult % p == 0)
        fail(ErrorKind::wild_ramification,
             "pullback of [" + t.prime.print() + "] under '" + f.g.print() +
                 "' ramifies with order divisible by p at " + ft.prime.print());
      out.add_term(ft.prime, t.coeff * Rat(static_cast<long long>(ft.mult)), ft.certified);
    }
  }
  return out;
}

// Ramification divisor of a tame map: div of the derivative.
inline QDivisor ramification_divisor(const BaseMap& f) {
  return div_of(uni_derivative(f.g));
}

// Boundary transformation rule under a tame base change of the base line:
// pullback of the boundary minus the ramification divisor.
inline QDivisor base_change_transform(const QDivisor& d, const BaseMap& f) {
  return div_sub(pullback(d, f), ramification_divisor(f));
}

}  // namespace frobsplit
