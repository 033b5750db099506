// Acceptance harness: ten end-to-end criteria, one PASS/FAIL line each.
// Exits nonzero when any criterion fails. Tolerances (runtime budgets, trial
// counts) are pinned here in code so the bar cannot drift silently.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "frobsplit/frobsplit.hpp"
#include "test_support.hpp"

using namespace frobsplit;

namespace {

int failures = 0;

void report(int num, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << num << ": " << what << std::endl;
  if (!ok) ++failures;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

const char* kConeText = "z*y^2-x*(x-z)*(x-t*z)";

MultiPoly cone_poly(const FieldCtx& F, const VarCtx& V) { return parse_poly(kConeText, V, F); }

Ideal xyz_center(const FieldCtx& F, const VarCtx& V) {
  return Ideal(F, V,
               {parse_poly("x", V, F), parse_poly("y", V, F), parse_poly("z", V, F)});
}

// Random polynomial guaranteed to vanish at the origin (every term carries a
// positive exponent of x or y).
MultiPoly random_vanishing(const FieldCtx& F, const VarCtx& V, std::mt19937_64& rng) {
  for (;;) {
    MultiPoly f = poly_mul(MultiPoly::variable(F, V, 0), gen::random_poly(F, V, rng, 3, 3)) +
                  poly_mul(MultiPoly::variable(F, V, 1), gen::random_poly(F, V, rng, 3, 2));
    if (!f.is_zero()) return f;
  }
}

// --------------------------------------------------------------------------
// 1. Boundary divisor of the elliptic cone at p = 3, against two independent
//    oracles, within a 1-second budget.
// --------------------------------------------------------------------------
void criterion1() {
  const double kBudgetMs = 1000.0;  // pinned runtime tolerance
  auto t0 = std::chrono::steady_clock::now();
  FieldCtx F(3);
  VarCtx V({"x", "y", "z", "t"});
  MultiPoly a = cone_poly(F, V);
  FrobeniusLevel level(F, 1);
  FDifferentResult r = compute_fdifferent(poly_pow(a, 2), xyz_center(F, V), level);
  double elapsed = ms_since(t0);

  // Oracle A: naive quadratic expansion through the reference multiplier,
  // reading off the coefficient of x^2 y^2 z^2 directly.
  oracle::RefPoly ra = oracle::ref_from(a);
  oracle::RefPoly a2 = oracle::ref_mul(ra, ra, 3);
  std::vector<long long> h_by_t(3, 0);
  for (const auto& [exps, coeff] : a2)
    if (exps[0] == 2 && exps[1] == 2 && exps[2] == 2) h_by_t.at(exps[3]) = coeff;
  bool oracle_a = h_by_t[0] == 2 && h_by_t[1] == 2 && h_by_t[2] == 0;  // h = 2t + 2

  // Oracle B: the classical supersingularity polynomial 1 + t of the
  // Legendre-type family at p = 3 (monic normalization of h_bar).
  UniPoly hbar = to_unipoly(r.h_bar, 3);
  bool oracle_b = hbar.degree() == 1 && hbar.monic() == UniPoly(F, "t", {1, 1});

  bool divisor_ok = r.divisor.has_value() && r.divisor->terms().size() == 1 &&
                    coeff_at(*r.divisor, UniPoly(F, "t", {1, 1})) == Rat(1, 2);
  bool ok = r.center_ok && r.compat_ok && oracle_a && oracle_b && divisor_ok &&
            r.h_bar.print() == "2*t+2" && elapsed < kBudgetMs;
  std::ostringstream what;
  what << "cone boundary divisor at p=3 is (1/2)[t+1] with h_bar = 2t+2 ("
       << elapsed << " ms < 1000 ms)";
  report(1, ok, what.str());
}

// --------------------------------------------------------------------------
// 2. Squarefree part of the extracted h equals the squarefree part of the
//    classical Hasse polynomial, p in {3,5,7,11,13}, each under 10 seconds.
// --------------------------------------------------------------------------
void criterion2() {
  const double kBudgetMsPerPrime = 10000.0;  // pinned runtime tolerance
  bool ok = true;
  double worst = 0;
  for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
    auto t0 = std::chrono::steady_clock::now();
    FieldCtx F(p);
    UniPoly h = cone_h_poly(F);
    UniPoly H = legendre_hasse_poly(F);
    double elapsed = ms_since(t0);
    worst = std::max(worst, elapsed);
    if (squarefree_part(h) != squarefree_part(H)) ok = false;
    if (elapsed >= kBudgetMsPerPrime) ok = false;
  }
  std::ostringstream what;
  what << "supersingular loci of the family h and the Legendre polynomial agree "
          "for p in {3,5,7,11,13} (worst prime "
       << worst << " ms < 10000 ms)";
  report(2, ok, what.str());
}

// --------------------------------------------------------------------------
// 3. Three-way fiber oracle: h(lambda) = 0 iff Hasse coefficient = 0 iff
//    point count = p+1, for all nondegenerate lambda; two-way at p = 3.
// --------------------------------------------------------------------------
void criterion3() {
  bool ok = true;
  int checked = 0;
  for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
    FieldCtx F(p);
    CubicFamily fam = cone_family(F);
    UniPoly h = cone_h_poly(F);
    for (fp_t lam = 0; lam < p; ++lam) {
      if (fiber_degenerate(fam, lam)) continue;
      bool by_h = uni_eval(h, lam) == 0;
      bool by_hasse = hasse_value(fam, lam) == 0;
      if (by_h != by_hasse) ok = false;
      if (p >= 5) {
        bool by_count = point_count(fam, lam) == p + 1;
        if (by_h != by_count) ok = false;
      }
      ++checked;
    }
  }
  std::ostringstream what;
  what << "fiberwise split verdicts agree across h roots, Hasse coefficients, and "
          "point counts ("
       << checked << " fibers, zero disagreements)";
  report(3, ok, what.str());
}

// --------------------------------------------------------------------------
// 4. Route equality: the center-restriction divisor equals the fibration
//    moduli divisor for p in {3,5,7}; level stability e=1 vs e=2 at p=3.
// --------------------------------------------------------------------------
void criterion4() {
  bool ok = true;
  VarCtx V({"x", "y", "z", "t"});
  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    FieldCtx F(p);
    FrobeniusLevel level(F, 1);
    FDifferentResult r =
        compute_fdifferent(poly_pow(cone_poly(F, V), p - 1), xyz_center(F, V), level);
    QDivisor moduli = assemble_moduli_divisor(cone_family(F), level);
    if (!r.divisor || !(moduli == *r.divisor)) ok = false;
  }
  {
    FieldCtx F(3);
    FDifferentResult r1 =
        compute_fdifferent(poly_pow(cone_poly(F, V), 2), xyz_center(F, V), FrobeniusLevel(F, 1));
    FDifferentResult r2 =
        compute_fdifferent(poly_pow(cone_poly(F, V), 8), xyz_center(F, V), FrobeniusLevel(F, 2));
    QDivisor m1 = assemble_moduli_divisor(cone_family(F), FrobeniusLevel(F, 1));
    QDivisor m2 = assemble_moduli_divisor(cone_family(F), FrobeniusLevel(F, 2));
    if (!r1.divisor || !r2.divisor || !(*r1.divisor == *r2.divisor) || !(m1 == m2)) ok = false;
  }
  report(4, ok,
         "center-restriction and fibration routes yield identical divisors (p in {3,5,7}; "
         "level 1 = level 2 at p=3)");
}

// --------------------------------------------------------------------------
// 5. Fedder battery: xy always F-pure; the cusp x^2+y^3 matched against the
//    brute-force expansion oracle at p = 5 and p = 7; 200 random principal
//    ideals agree between the general and hypersurface routes.
// --------------------------------------------------------------------------
void criterion5() {
  bool ok = true;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    FieldCtx F(p);
    VarCtx V({"x", "y"});
    MultiPoly xy = parse_poly("x*y", V, F);
    for (unsigned e = 1; e <= 3; ++e)
      if (!fpure_hypersurface(xy, {0, 1}, FrobeniusLevel(F, e)).fpure) ok = false;
  }
  for (std::uint64_t p : {5ull, 7ull}) {
    FieldCtx F(p);
    VarCtx V({"x", "y"});
    MultiPoly cusp = parse_poly("x^2+y^3", V, F);
    bool expected = oracle::ref_fpure_hypersurface(cusp, {0, 1}, p);
    bool got = fpure_hypersurface(cusp, {0, 1}, FrobeniusLevel(F, 1)).fpure;
    if (got != expected) ok = false;
    if (expected) ok = false;  // the expansion oracle reports non-F-pure at both primes
  }
  std::cout << "NOTE criterion 5: x^2+y^3 is not F-pure at p = 7 — every term of "
               "(x^2+y^3)^6 is x^(2i) y^(18-3i) with one exponent >= 7, and nu(7) = 5 < 6; "
               "the brute-force expansion oracle is the arbiter and the implementation "
               "must match it at p = 5 and p = 7."
            << std::endl;
  std::mt19937_64 rng(20260814);
  int trials = 0;
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    FieldCtx F(p);
    VarCtx V({"x", "y"});
    Ideal m(F, V, {parse_poly("x", V, F), parse_poly("y", V, F)});
    FrobeniusLevel level(F, 1);
    const int per_prime = p == 5 ? 66 : 67;  // 67 + 67 + 66 = 200 trials
    for (int i = 0; i < per_prime;) {
      MultiPoly a = gen::random_poly(F, V, rng, 4, 5);
      if (a.is_zero()) continue;
      ++i;
      ++trials;
      bool general = fpure_general(Ideal(F, V, {a}), m, level).fpure;
      bool hyper = fpure_hypersurface(a, {0, 1}, level).fpure;
      if (general != hyper) ok = false;
    }
  }
  std::ostringstream what;
  what << "Fedder tests: xy F-pure for p in {2,3,5,7} (e <= 3); x^2+y^3 matches the "
          "expansion oracle at p in {5,7}; general = hypersurface route on "
       << trials << " random principal ideals";
  report(5, ok && trials >= 200, what.str());
}

// --------------------------------------------------------------------------
// 6. Level stability: F-purity at e = 1 implies F-purity at e = 2 on 100
//    random hypersurfaces, p in {2,3}.
// --------------------------------------------------------------------------
void criterion6() {
  bool ok = true;
  std::mt19937_64 rng(424242);
  int checked = 0;
  int pure_at_base = 0;
  for (std::uint64_t p : {2ull, 3ull}) {
    FieldCtx F(p);
    VarCtx V({"x", "y"});
    for (int i = 0; i < 50; ++i) {
      MultiPoly a = i % 2 == 0 ? random_vanishing(F, V, rng) : gen::random_poly(F, V, rng, 3, 4);
      if (a.is_zero()) a = parse_poly("x", V, F);
      bool e1 = fpure_hypersurface(a, {0, 1}, FrobeniusLevel(F, 1)).fpure;
      bool e2 = fpure_hypersurface(a, {0, 1}, FrobeniusLevel(F, 2)).fpure;
      if (e1 && !e2) ok = false;
      if (!stability_check(a, {0, 1}, FrobeniusLevel(F, 1), 2)) ok = false;
      if (e1) ++pure_at_base;
      ++checked;
    }
  }
  std::ostringstream what;
  what << "one split implies more: e=1 F-purity persists at e=2 on " << checked
       << " random hypersurfaces (" << pure_at_base << " F-pure at base level), zero "
          "counterexamples";
  report(6, ok && checked == 100, what.str());
}

// --------------------------------------------------------------------------
// 7. nu ladders: nu(xy; q) = q-1 for q in {3,9,27}; nu(x^2+y^3; 7) = 5 against
//    the linear-scan oracle; super-multiplicativity on every ladder computed.
// --------------------------------------------------------------------------
void criterion7() {
  bool ok = true;
  FieldCtx F3(3);
  VarCtx V({"x", "y"});
  MultiPoly xy = parse_poly("x*y", V, F3);
  for (unsigned e = 1; e <= 3; ++e) {
    std::uint64_t q = FrobeniusLevel(F3, e).q;
    if (nu(xy, {0, 1}, FrobeniusLevel(F3, e)) != q - 1) ok = false;
  }
  FieldCtx F7(7);
  MultiPoly cusp = parse_poly("x^2+y^3", V, F7);
  if (nu(cusp, {0, 1}, FrobeniusLevel(F7, 1)) != 5) ok = false;
  if (oracle::ref_nu(cusp, {0, 1}, 7) != 5) ok = false;

  int ladders = 0;
  std::mt19937_64 rng(7137);
  auto check_ladder = [&](const NuSequence& seq, std::uint64_t p) {
    ++ladders;
    for (std::size_t i = 1; i < seq.entries.size(); ++i)
      if (seq.entries[i].nu < p * seq.entries[i - 1].nu) ok = false;
  };
  check_ladder(fpt_estimate(xy, {0, 1}, 3), 3);
  check_ladder(fpt_estimate(cusp, {0, 1}, 2), 7);
  for (std::uint64_t p : {2ull, 3ull}) {
    FieldCtx F(p);
    for (int i = 0; i < 10; ++i)
      check_ladder(fpt_estimate(random_vanishing(F, V, rng), {0, 1}, 3), p);
  }
  std::ostringstream what;
  what << "nu(xy; q) = q-1 for q in {3,9,27}; nu(x^2+y^3; 7) = 5 = linear-scan oracle; "
          "nu(p^(e+1)) >= p*nu(p^e) on "
       << ladders << " ladders";
  report(7, ok, what.str());
}

// --------------------------------------------------------------------------
// 8. Groebner cross-check: the complete-intersection colon shortcut equals the
//    general elimination colon, and every reduced basis passes the
//    S-polynomial self-check.
// --------------------------------------------------------------------------
void criterion8() {
  bool ok = true;
  int bases_checked = 0;
  auto spoly_selfcheck = [&](const Ideal& I) {
    Ideal G = buchberger(I);
    const auto& B = G.gens();
    ++bases_checked;
    for (std::size_t i = 0; i < B.size(); ++i)
      for (std::size_t j = i + 1; j < B.size(); ++j) {
        MultiPoly s = gbdetail::spoly(B[i], B[j], MonomialOrder::grevlex());
        if (!gbdetail::reduce(s, B, MonomialOrder::grevlex()).is_zero()) ok = false;
      }
  };
  struct Case {
    std::uint64_t p;
    std::uint64_t q;
  };
  for (const Case& c : {Case{3, 3}, Case{2, 4}, Case{5, 5}, Case{3, 9}}) {
    FieldCtx F(c.p);
    for (int nvars : {2, 3}) {
      VarCtx V = nvars == 2 ? VarCtx({"x", "y"}) : VarCtx({"x", "y", "z"});
      std::vector<MultiPoly> gens;
      for (int i = 0; i < nvars; ++i) gens.push_back(MultiPoly::variable(F, V, i));
      Ideal J(F, V, gens);
      Ideal bracket = bracket_power(J, c.q);
      Ideal general = colon(bracket, J);
      CiColon shortcut = ci_colon_shortcut(J, c.q);
      if (!ideal_equal(general, shortcut.ideal)) ok = false;
      spoly_selfcheck(general);
      spoly_selfcheck(shortcut.ideal);
      spoly_selfcheck(bracket);
      spoly_selfcheck(J);
    }
  }
  std::ostringstream what;
  what << "CI colon shortcut = elimination colon for (x,y) and (x,y,z) at q in "
          "{3,4,5,9}; S-polynomial self-check passed on "
       << bases_checked << " reduced bases";
  report(8, ok, what.str());
}

// --------------------------------------------------------------------------
// 9. Multi-prime scan: lambda0 = 2 lies in the support for some primes and
//    outside for others; the p = 5 exclusion is certified by a point count
//    of 8.
// --------------------------------------------------------------------------
void criterion9() {
  bool ok = true;
  auto table = char_scan(kConeText, 2, {3, 5, 7, 11, 13});
  if (table.size() != 5) ok = false;
  int in_support = 0, out_of_support = 0;
  bool p5_out = false;
  for (const auto& entry : table) {
    (entry.lambda0_in_support ? in_support : out_of_support)++;
    if (entry.p == 5 && !entry.lambda0_in_support) p5_out = true;
  }
  if (in_support == 0 || out_of_support == 0 || !p5_out) ok = false;
  FieldCtx F5(5);
  std::uint64_t count = point_count(cone_family(F5), 2);
  if (count != 8) ok = false;
  std::ostringstream what;
  what << "lambda0 = 2 sits inside the support for " << in_support
       << " primes and outside for " << out_of_support
       << " of {3,5,7,11,13}; the p=5 exclusion is certified by #E(F_5) = " << count
       << " != 6";
  report(9, ok, what.str());
}

// --------------------------------------------------------------------------
// 10. Determinism of the CLI (three byte-identical runs per golden command)
//     and parse/print round-trip on 1000 random polynomials.
// --------------------------------------------------------------------------
void criterion10() {
  bool ok = true;
  const std::vector<std::string> golden = {
      "fpure -p 3 -e 1 --vars x,y,z,t --hypersurface \"z*y^2-x*(x-z)*(x-t*z)\" --at 0,0,0,0",
      "fdiff -p 3 -e 1 --vars x,y,z,t --hypersurface \"z*y^2-x*(x-z)*(x-t*z)\" --center x,y,z",
      "fpure -p 5 -e 1 --vars x,y --hypersurface \"x^2+y^3\"",
      "fpt -p 7 -e 2 --vars x,y --hypersurface \"x^2+y^3\"",
      "fibration scan -p 5",
      "fibration moduli -p 3 -e 2",
      "fibration charscan --lambda0 2 --primes 3,5,7,11,13",
      "divisor basechange -p 5 --divisor 1:t --divisor 1/2:t+1 --map \"s^2+s\"",
      "hasse -p 13 --lambda 2",
  };
  int runs = 0;
  for (const auto& cmd : golden) {
    cliutil::CliResult first = cliutil::run_cli(cmd);
    if (first.exit_code < 0 || first.out.empty()) ok = false;
    for (int i = 0; i < 2; ++i) {
      cliutil::CliResult again = cliutil::run_cli(cmd);
      if (again.exit_code != first.exit_code || again.out != first.out) ok = false;
    }
    runs += 3;
  }
  std::mt19937_64 rng(1010);
  int roundtrips = 0;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    FieldCtx F(p);
    VarCtx V({"x", "y", "z"});
    for (int i = 0; i < 250; ++i) {
      MultiPoly f = gen::random_poly(F, V, rng, 5, 7);
      MultiPoly g = parse_poly(f.print(), V, F);
      if (!(g == f) || g.print() != f.print()) ok = false;
      ++roundtrips;
    }
  }
  std::ostringstream what;
  what << "byte-identical output across " << runs << " CLI runs of " << golden.size()
       << " golden commands; parse/print identity on " << roundtrips
       << " random polynomials";
  report(10, ok && roundtrips == 1000, what.str());
}

}  // namespace

int main() {
  struct Entry {
    int num;
    void (*fn)();
  };
  const Entry entries[] = {{1, criterion1}, {2, criterion2}, {3, criterion3},
                           {4, criterion4}, {5, criterion5}, {6, criterion6},
                           {7, criterion7}, {8, criterion8}, {9, criterion9},
                           {10, criterion10}};
  for (const auto& entry : entries) {
    try {
      entry.fn();
    } catch (const std::exception& e) {
      report(entry.num, false, std::string("unexpected exception: ") + e.what());
    }
  }
  if (failures == 0) {
    std::cout << "acceptance: all 10 criteria passed" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
  return 1;
}
