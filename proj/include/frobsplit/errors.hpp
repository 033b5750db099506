#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobsplit {

// Every failure the library raises carries one of these kinds; the CLI maps
// kinds to exit codes and machine-readable error objects.
enum class ErrorKind {
  syntax_error,       // malformed expression text
  unknown_variable,   // identifier not in the VarCtx
  context_mismatch,   // mixed fields or variable contexts
  arity_mismatch,     // wrong point / vector length
  not_prime,          // characteristic rejected
  not_prime_power,    // q is not a power of the ambient p
  q_guard,            // q = p^e beyond the supported bound
  exponent_overflow,  // monomial exponent would overflow
  degree_cap,         // Groebner pair-degree cap exceeded
  division_by_zero,
  zero_input,          // zero polynomial / ideal where nonzero required
  domain_error,        // generic precondition violation on math inputs
  h_bar_zero,          // restricted splitting multiplier vanishes
  not_f_split,         // fibration has no split fiber at the level (h = 0)
  wild_ramification,   // inseparable / wildly ramified base map
  degenerate_fiber,    // fiber is not a smooth elliptic curve
  not_irreducible,     // rejected divisor prime label
  unsupported,         // valid input outside the implemented range
  internal_error,      // broken internal invariant (a bug, not bad input)
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::syntax_error: return "syntax_error";
    case ErrorKind::unknown_variable: return "unknown_variable";
    case ErrorKind::context_mismatch: return "context_mismatch";
    case ErrorKind::arity_mismatch: return "arity_mismatch";
    case ErrorKind::not_prime: return "not_prime";
    case ErrorKind::not_prime_power: return "not_prime_power";
    case ErrorKind::q_guard: return "q_guard";
    case ErrorKind::exponent_overflow: return "exponent_overflow";
    case ErrorKind::degree_cap: return "degree_cap";
    case ErrorKind::division_by_zero: return "division_by_zero";
    case ErrorKind::zero_input: return "zero_input";
    case ErrorKind::domain_error: return "domain_error";
    case ErrorKind::h_bar_zero: return "h_bar_zero";
    case ErrorKind::not_f_split: return "not_f_split";
    case ErrorKind::wild_ramification: return "wild_ramification";
    case ErrorKind::degenerate_fiber: return "degenerate_fiber";
    case ErrorKind::not_irreducible: return "not_irreducible";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::internal_error: return "internal_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
  const char* kind_name() const noexcept { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

// Parse failures additionally carry the byte offset into the input text.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& msg, std::size_t position)
      : Error(kind, msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace frobsplit
