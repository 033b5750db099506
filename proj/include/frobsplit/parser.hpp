#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "multipoly.hpp"

namespace frobsplit {

// Recursive-descent parser for polynomial expressions over F_p.
//
// Grammar (whitespace insignificant):
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := atom ('^' integer)*          exponentiation binds tightest,
//                                           towers associate right: x^2^3 = x^8
//   atom    := integer | identifier | '(' expr ')'
//
// Integer literals reduce mod p when used as coefficients; exponents are kept
// as written (never reduced mod p). Unknown identifiers raise unknown_variable;
// any other malformed input raises syntax_error, both carrying the offset.
class PolyParser {
 public:
  PolyParser(std::string_view text, const VarCtx& vars, const FieldCtx& field)
      : text_(text), vars_(vars), field_(field) {}

  MultiPoly parse() {
    MultiPoly result = parse_expr();
    skip_ws();
    if (pos_ != text_.size())
      err("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return result;
  }

 private:
  MultiPoly parse_expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = (peek() == '-');
      ++pos_;
    }
    MultiPoly acc = parse_term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      MultiPoly t = parse_term();
      acc = (c == '+') ? acc + t : acc - t;
    }
    return acc;
  }

  MultiPoly parse_term() {
    MultiPoly acc = parse_factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc = poly_mul(acc, parse_factor());
    }
    return acc;
  }

  MultiPoly parse_factor() {
    MultiPoly base = parse_atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    std::uint64_t e = parse_exponent_tower();
    return poly_pow(base, e);
  }

  // Right-associative tower of integer exponents: 2^3^2 = 2^(3^2) = 512.
  std::uint64_t parse_exponent_tower() {
    std::uint64_t e = parse_integer("exponent");
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      std::uint64_t upper = parse_exponent_tower();
      std::uint64_t r = 1;
      for (std::uint64_t i = 0; i < upper; ++i) {
        if (e != 0 && r > (std::uint64_t{1} << 32) / (e ? e : 1))
          err("exponent tower overflow", pos_);
        r *= e;
      }
      e = r;
    }
    if (e > 0xffffffffULL) err("exponent too large", pos_);
    return e;
  }

  MultiPoly parse_atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = parse_expr();
      skip_ws();
      if (peek() != ')') err("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = parse_integer("integer literal");
      return MultiPoly::constant(field_, vars_, v % field_.p());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = vars_.index(name);
      if (!idx)
        err("unknown variable '" + std::string(name) + "'", start, ErrorKind::unknown_variable);
      return MultiPoly::variable(field_, vars_, *idx);
    }
    if (c == '\0') err("unexpected end of input", pos_);
    err("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::uint64_t parse_integer(const char* what) {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      err(std::string("expected ") + what, pos_);
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (UINT64_MAX - d) / 10) err("integer literal overflow", pos_);
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  [[noreturn]] void err(const std::string& msg, std::size_t at,
                        ErrorKind kind = ErrorKind::syntax_error) const {
    throw ParseError(kind, msg, at);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::string_view text_;
  const VarCtx& vars_;
  const FieldCtx& field_;
  std::size_t pos_ = 0;
};

inline MultiPoly parse_poly(std::string_view text, const VarCtx& vars, const FieldCtx& field) {
  return PolyParser(text, vars, field).parse();
}

}  // namespace frobsplit
