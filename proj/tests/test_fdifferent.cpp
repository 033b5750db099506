#include <catch_amalgamated.hpp>

#include "frobsplit/fdifferent.hpp"
#include "frobsplit/parser.hpp"
#include "test_support.hpp"

using namespace frobsplit;

namespace {

UniPoly U(const FieldCtx& F, const std::string& var, std::vector<fp_t> asc) {
  return UniPoly(F, var, std::move(asc));
}

Ideal coordinate_center(const FieldCtx& F, const VarCtx& V, std::initializer_list<const char*> vs) {
  std::vector<MultiPoly> gens;
  for (const char* v : vs) gens.push_back(parse_poly(v, V, F));
  return Ideal(F, V, std::move(gens));
}

}  // namespace

TEST_CASE("premultiplier extraction: trivial golden cases") {
  FieldCtx F(3);
  FrobeniusLevel level(F, 1);
  SECTION("f equal to g_e has unit premultiplier and empty divisor") {
    VarCtx V({"x", "y"});
    Ideal J = coordinate_center(F, V, {"x", "y"});
    FDifferentResult r = compute_fdifferent(parse_poly("x^2*y^2", V, F), J, level);
    REQUIRE(r.center_ok);
    REQUIRE(r.compat_ok);
    REQUIRE(r.h_bar.print() == "1");
    REQUIRE(r.divisor.has_value());
    REQUIRE(r.divisor->is_zero());
    REQUIRE(r.leftover_digest.empty());
  }
  SECTION("f = t*g_e reads off h_bar = t and divisor (1/2)[t]") {
    VarCtx V({"x", "y", "t"});
    Ideal J = coordinate_center(F, V, {"x", "y"});
    FDifferentResult r = compute_fdifferent(parse_poly("t*x^2*y^2", V, F), J, level);
    REQUIRE(r.center_ok);
    REQUIRE(r.compat_ok);
    REQUIRE(r.h_bar.print() == "t");
    REQUIRE(r.divisor.has_value());
    REQUIRE(r.divisor->terms().size() == 1);
    REQUIRE(coeff_at(*r.divisor, U(F, "t", {0, 1})) == Rat(1, 2));
    REQUIRE(r.divisor->terms().front().certified);
  }
}

TEST_CASE("premultiplier extraction on the elliptic-cone family") {
  FieldCtx F(3);
  VarCtx V({"x", "y", "z", "t"});
  MultiPoly a = parse_poly("z*y^2-x*(x-z)*(x-t*z)", V, F);
  Ideal J = coordinate_center(F, V, {"x", "y", "z"});
  SECTION("level one: h_bar = 2t+2, divisor (1/2)[t+1]") {
    FrobeniusLevel level(F, 1);
    MultiPoly f = poly_pow(a, 2);
    FDifferentResult r = compute_fdifferent(f, J, level);
    REQUIRE(r.center_ok);
    REQUIRE(r.compat_ok);
    REQUIRE(r.h_bar.print() == "2*t+2");
    REQUIRE(r.divisor.has_value());
    REQUIRE(r.divisor->terms().size() == 1);
    REQUIRE(coeff_at(*r.divisor, U(F, "t", {1, 1})) == Rat(1, 2));
    // Reconstruction cross-check through the Groebner route: f - h*g_e lies in
    // the bracket power of the center.
    MultiPoly ge = parse_poly("x^2*y^2*z^2", V, F);
    Ideal bracket = bracket_power(J, 3);
    REQUIRE(member(f - poly_mul(r.h, ge), bracket));
  }
  SECTION("level two agrees: the divisor is stable under e -> 2e") {
    FrobeniusLevel lvl1(F, 1), lvl2(F, 2);
    FDifferentResult r1 = compute_fdifferent(poly_pow(a, 2), J, lvl1);
    FDifferentResult r2 = compute_fdifferent(poly_pow(a, 8), J, lvl2);
    REQUIRE(r2.center_ok);
    REQUIRE(r2.compat_ok);
    REQUIRE(r2.divisor.has_value());
    REQUIRE(*r1.divisor == *r2.divisor);
    // h_bar at level two is a unit times (t+1)^4.
    UniPoly h2 = to_unipoly(r2.h_bar, 3);
    REQUIRE(squarefree_part(h2) == U(F, "t", {1, 1}));
    REQUIRE(h2.degree() == 4);
  }
  SECTION("scalar units scale h_bar and leave the divisor alone") {
    FrobeniusLevel level(F, 1);
    FDifferentResult r1 = compute_fdifferent(poly_pow(a, 2), J, level);
    FDifferentResult r2 = compute_fdifferent(poly_pow(a, 2).scaled(2), J, level);
    REQUIRE(r2.h_bar.print() == "t+1");
    REQUIRE(*r1.divisor == *r2.divisor);
  }
  SECTION("coefficients stay in (0,1] for p in {3,5,7}") {
    for (std::uint64_t p : {3ull, 5ull, 7ull}) {
      FieldCtx Fp(p);
      MultiPoly ap = parse_poly("z*y^2-x*(x-z)*(x-t*z)", V, Fp);
      Ideal Jp = coordinate_center(Fp, V, {"x", "y", "z"});
      FDifferentResult r =
          compute_fdifferent(poly_pow(ap, p - 1), Jp, FrobeniusLevel(Fp, 1));
      REQUIRE(r.center_ok);
      REQUIRE(r.compat_ok);
      REQUIRE(r.divisor.has_value());
      REQUIRE_FALSE(r.divisor->is_zero());
      for (const auto& term : r.divisor->terms()) {
        REQUIRE(term.coeff > Rat(0));
        REQUIRE(dvr_subfpure_ok(term.coeff));
        REQUIRE((term.coeff * Rat(static_cast<long long>(p - 1))).den() == 1);
      }
    }
  }
}

TEST_CASE("premultiplier extraction through the general CI path") {
  FieldCtx F(3);
  FrobeniusLevel level(F, 1);
  SECTION("sheared coordinates give the same divisor as straight ones") {
    VarCtx V({"x", "y", "t"});
    Ideal J_sheared(F, V, {parse_poly("x+y", V, F), parse_poly("y", V, F)});
    Ideal J_straight = coordinate_center(F, V, {"x", "y"});
    MultiPoly f_sheared = poly_mul(parse_poly("t", V, F), poly_pow(parse_poly("(x+y)*y", V, F), 2));
    MultiPoly f_straight = parse_poly("t*x^2*y^2", V, F);
    FDifferentResult rs = compute_fdifferent(f_sheared, J_sheared, level);
    FDifferentResult rt = compute_fdifferent(f_straight, J_straight, level);
    REQUIRE(rs.center_ok);
    REQUIRE(rs.compat_ok);
    REQUIRE(rs.h_bar.print() == "t");
    REQUIRE(rs.divisor.has_value());
    REQUIRE(*rs.divisor == *rt.divisor);
  }
  SECTION("unit premultiplier in sheared coordinates") {
    VarCtx V({"x", "y"});
    Ideal J(F, V, {parse_poly("x+y", V, F), parse_poly("y", V, F)});
    FDifferentResult r = compute_fdifferent(poly_pow(parse_poly("(x+y)*y", V, F), 2), J, level);
    REQUIRE(r.compat_ok);
    REQUIRE(r.h_bar.print() == "1");
    REQUIRE(r.divisor.has_value());
    REQUIRE(r.divisor->is_zero());
  }
}

TEST_CASE("premultiplier extraction: failure modes and diagnostics") {
  FieldCtx F(3);
  FrobeniusLevel level(F, 1);
  VarCtx V({"x", "y"});
  Ideal J = coordinate_center(F, V, {"x", "y"});
  SECTION("f inside the bracket power has zero induced splitting") {
    try {
      compute_fdifferent(parse_poly("x^3*y^2", V, F), J, level);
      FAIL("vanishing premultiplier accepted");
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::h_bar_zero);
    }
  }
  SECTION("incompatible f is reported with a leftover fingerprint, not an exception") {
    FDifferentResult r = compute_fdifferent(parse_poly("x^2*y", V, F), J, level);
    REQUIRE_FALSE(r.center_ok);
    REQUIRE_FALSE(r.compat_ok);
    REQUIRE(r.leftover_digest == fnv1a64_hex("x^2*y"));
    REQUIRE_FALSE(r.divisor.has_value());  // h_bar = 0, nothing to factor
  }
  SECTION("zero center ideal is rejected") {
    Ideal Z(F, V, std::vector<MultiPoly>{});
    REQUIRE_THROWS_AS(compute_fdifferent(parse_poly("x", V, F), Z, level), Error);
  }
}

TEST_CASE("translating the center point") {
  FieldCtx F(3);
  VarCtx V({"x", "y", "z", "t"});
  MultiPoly a = parse_poly("z*y^2-x*(x-z)*(x-t*z)", V, F);
  Ideal J = coordinate_center(F, V, {"x", "y", "z"});
  CenterProblem base{poly_pow(a, 2), J};
  SECTION("shifting t by 1 shifts the premultiplier argument") {
    CenterProblem moved = translate_center(base, {0, 0, 0, 1});
    FDifferentResult r0 = compute_fdifferent(base.f, base.J, FrobeniusLevel(F, 1));
    FDifferentResult r1 = compute_fdifferent(moved.f, moved.J, FrobeniusLevel(F, 1));
    // h_bar'(0) = h_bar(1): evaluation commutes with the substitution.
    REQUIRE(eval(r1.h_bar, {0, 0, 0, 0}) == eval(r0.h_bar, {0, 0, 0, 1}));
    REQUIRE(eval(r1.h_bar, {0, 0, 0, 2}) == eval(r0.h_bar, {0, 0, 0, 0}));
  }
  SECTION("identity translation is the identity") {
    CenterProblem same = translate_center(base, {0, 0, 0, 0});
    REQUIRE(same.f == base.f);
    REQUIRE(same.J.gens().size() == base.J.gens().size());
    for (std::size_t i = 0; i < base.J.gens().size(); ++i)
      REQUIRE(same.J.gens()[i] == base.J.gens()[i]);
  }
  SECTION("translation by c then -c round-trips") {
    CenterProblem there = translate_center(base, {1, 2, 0, 1});
    CenterProblem back = translate_center(there, {2, 1, 0, 2});
    REQUIRE(back.f == base.f);
    for (std::size_t i = 0; i < base.J.gens().size(); ++i)
      REQUIRE(back.J.gens()[i] == base.J.gens()[i]);
  }
  SECTION("arity is checked") {
    REQUIRE_THROWS_AS(translate_center(base, {0, 0}), Error);
  }
}
