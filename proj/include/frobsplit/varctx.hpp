#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace frobsplit {

// Ordered, distinct variable names. The order fixes exponent-vector positions
// for every polynomial built over this context.
class VarCtx {
 public:
  explicit VarCtx(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
      fail(ErrorKind::domain_error, "variable context must be nonempty");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!is_identifier(names_[i]))
        fail(ErrorKind::domain_error, "invalid variable name: '" + names_[i] + "'");
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          fail(ErrorKind::domain_error, "duplicate variable name: '" + names_[i] + "'");
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> index(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  std::size_t index_or_throw(std::string_view name) const {
    auto i = index(name);
    if (!i)
      fail(ErrorKind::unknown_variable,
           "unknown variable '" + std::string(name) + "'");
    return *i;
  }

  bool operator==(const VarCtx& o) const noexcept { return names_ == o.names_; }
  bool operator!=(const VarCtx& o) const noexcept { return names_ != o.names_; }

  static bool is_identifier(std::string_view s) noexcept {
    if (s.empty()) return false;
    auto head = [](char c) {
      return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
    };
    auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
    if (!head(s[0])) return false;
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!tail(s[i])) return false;
    return true;
  }

 private:
  std::vector<std::string> names_;
};

inline void require_same_vars(const VarCtx& a, const VarCtx& b) {
  if (a != b) fail(ErrorKind::context_mismatch, "mixed variable contexts");
}

// Exponent vector; length equals the arity of its VarCtx.
using Monomial = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Monomial& m) noexcept {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

// Graded reverse lexicographic: higher total degree wins; on ties the
// monomial with the smaller exponent at the rightmost differing position wins.
inline bool grevlex_less(const Monomial& a, const Monomial& b) noexcept {
  std::uint64_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t e = std::uint64_t{a[i]} + b[i];
    if (e > 0xffffffffULL)
      fail(ErrorKind::exponent_overflow, "monomial exponent overflow");
    r[i] = static_cast<std::uint32_t>(e);
  }
  return r;
}

inline bool monomial_divides(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// b / a, assuming a | b.
inline Monomial monomial_quotient(const Monomial& b, const Monomial& a) {
  Monomial r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}

inline bool is_constant_monomial(const Monomial& m) noexcept {
  for (auto e : m)
    if (e) return false;
  return true;
}

}  // namespace frobsplit
