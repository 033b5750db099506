#pragma once

// Shared helpers for the test suites: reference implementations written as
// directly as possible (naive loops, exhaustive search) so library results are
// checked against an independent route, plus deterministic random generators.

#include <sys/wait.h>

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "frobsplit/multipoly.hpp"
#include "frobsplit/parser.hpp"

namespace oracle {

using ExpVec = std::vector<std::uint32_t>;
// Reference polynomials are bare maps exponent-vector -> coefficient; all
// arithmetic is plain % p on signed 64-bit, sidestepping the library's field
// layer entirely.
using RefPoly = std::map<ExpVec, long long>;

inline RefPoly ref_from(const frobsplit::MultiPoly& f) {
  RefPoly r;
  for (const auto& t : f.terms()) r[t.mono] = static_cast<long long>(t.coeff);
  return r;
}

inline bool ref_equal(const RefPoly& a, const frobsplit::MultiPoly& b) {
  RefPoly bb = ref_from(b);
  RefPoly aa;
  for (const auto& [m, c] : a)
    if (c % static_cast<long long>(b.field().p()) != 0) aa[m] = c;
  return aa == bb;
}

inline RefPoly ref_mul(const RefPoly& a, const RefPoly& b, long long p) {
  RefPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      ExpVec m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] = (out[m] + ca * cb) % p;
    }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second % p == 0) ? out.erase(it) : std::next(it);
  return out;
}

inline RefPoly ref_pow(const RefPoly& a, std::uint64_t n, long long p, std::size_t nvars) {
  RefPoly acc{{ExpVec(nvars, 0), 1 % p}};
  for (std::uint64_t i = 0; i < n; ++i) acc = ref_mul(acc, a, p);
  return acc;
}

// Membership of a polynomial in the monomial ideal (x_i^q : i in vars):
// every term must be divisible by some tracked x_i^q.
inline bool ref_in_bracket(const RefPoly& f, const std::vector<std::size_t>& vars,
                           std::uint64_t q, long long p) {
  for (const auto& [m, c] : f) {
    if (c % p == 0) continue;
    bool divisible = false;
    for (auto v : vars)
      if (m[v] >= q) {
        divisible = true;
        break;
      }
    if (!divisible) return false;
  }
  return true;
}

// Hypersurface F-purity at the origin, straight from the definition:
// a^(q-1) must have a term with all point-variable exponents <= q-1.
inline bool ref_fpure_hypersurface(const frobsplit::MultiPoly& a,
                                   const std::vector<std::size_t>& point_vars,
                                   std::uint64_t q) {
  RefPoly pw = ref_pow(ref_from(a), q - 1, static_cast<long long>(a.field().p()),
                       a.vars().size());
  return !ref_in_bracket(pw, point_vars, q, static_cast<long long>(a.field().p()));
}

// Largest n with f^n outside (x_i^q), by linear scan.
inline std::uint64_t ref_nu(const frobsplit::MultiPoly& f,
                            const std::vector<std::size_t>& point_vars, std::uint64_t q) {
  const long long p = static_cast<long long>(f.field().p());
  RefPoly base = ref_from(f);
  RefPoly acc{{ExpVec(f.vars().size(), 0), 1 % p}};
  std::uint64_t n = 0;
  for (;;) {
    acc = ref_mul(acc, base, p);
    if (ref_in_bracket(acc, point_vars, q, p)) return n;
    ++n;
  }
}

// Number of projective points on y^2 = g(x) (g cubic): affine solutions plus
// the point at infinity, counted by exhausting x and a squares table.
inline std::uint64_t ref_point_count(const std::vector<long long>& g_coeffs, long long p) {
  std::vector<int> num_sqrt(p, 0);
  for (long long y = 0; y < p; ++y) num_sqrt[(y * y) % p]++;
  std::uint64_t count = 1;  // infinity
  for (long long x = 0; x < p; ++x) {
    long long v = 0;
    for (std::size_t k = g_coeffs.size(); k-- > 0;) v = (v * x + g_coeffs[k]) % p;
    count += num_sqrt[((v % p) + p) % p];
  }
  return count;
}

}  // namespace oracle

namespace gen {

inline frobsplit::MultiPoly random_poly(const frobsplit::FieldCtx& field,
                                        const frobsplit::VarCtx& vars, std::mt19937_64& rng,
                                        unsigned max_exp = 4, unsigned max_terms = 6) {
  std::uniform_int_distribution<unsigned> nterms(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> expd(0, max_exp);
  std::uniform_int_distribution<std::uint64_t> coeffd(0, field.p() - 1);
  std::vector<frobsplit::Term> ts;
  unsigned n = nterms(rng);
  for (unsigned i = 0; i < n; ++i) {
    frobsplit::Monomial m(vars.size());
    for (auto& e : m) e = expd(rng);
    ts.push_back({coeffd(rng), std::move(m)});
  }
  return frobsplit::MultiPoly(field, vars, std::move(ts));
}

}  // namespace gen

namespace cliutil {

struct CliResult {
  int exit_code;
  std::string out;
};

// Runs the frobsplit binary (path from FROBSPLIT_BIN) capturing stdout.
inline CliResult run_cli(const std::string& args) {
  const char* bin = std::getenv("FROBSPLIT_BIN");
  std::string cmd = std::string(bin ? bin : "./tools/frobsplit") + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = ::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = ::pclose(pipe);
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace cliutil
