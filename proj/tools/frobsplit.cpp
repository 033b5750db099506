// frobsplit: command-line front end for the Frobenius-splitting toolkit.
//
// Subcommands: fpure, center, fdiff, fpt, fibration {scan|moduli|charscan},
// divisor {add|pullback|basechange}, hasse. Reports are JSON with sorted keys
// and exact rational strings, so repeated runs are byte-identical; --text
// switches to a flat deterministic key/value rendering. Exit codes: 0 for a
// positive verdict / successful computation, 1 for negative verdicts and
// domain errors (with a machine-readable report or error object on stdout),
// 2 for usage errors.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "frobsplit/frobsplit.hpp"

namespace fs = frobsplit;
using nlohmann::json;

namespace {

constexpr const char* kToolVersion = "1.0.0";
constexpr const char* kBuiltinFamily = "z*y^2-x*(x-z)*(x-t*z)";

struct Common {
  std::int64_t p = 0;
  unsigned e = 1;
  std::string vars_csv;
  std::size_t degree_cap = fs::kDefaultDegreeCap;
  bool text = false;
  std::string manifest_path;
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  return out;
}

long long parse_integer(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size())
      fs::fail(fs::ErrorKind::syntax_error, what + ": trailing characters in '" + s + "'");
    return v;
  } catch (const fs::Error&) {
    throw;
  } catch (const std::exception&) {
    fs::fail(fs::ErrorKind::syntax_error, what + ": '" + s + "' is not an integer");
  }
}

fs::fp_t reduce_mod(long long v, const fs::FieldCtx& field) {
  long long p = static_cast<long long>(field.p());
  long long r = v % p;
  if (r < 0) r += p;
  return static_cast<fs::fp_t>(r);
}

std::vector<fs::fp_t> parse_point(const std::string& csv, const fs::FieldCtx& field,
                                  std::size_t arity) {
  if (csv.empty()) return std::vector<fs::fp_t>(arity, 0);
  std::vector<fs::fp_t> out;
  for (const auto& part : split_csv(csv)) out.push_back(reduce_mod(parse_integer(part, "--at"), field));
  if (out.size() != arity)
    fs::fail(fs::ErrorKind::arity_mismatch,
             "--at expects " + std::to_string(arity) + " coordinates, got " +
                 std::to_string(out.size()));
  return out;
}

fs::Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return fs::Rat(parse_integer(s, "rational"));
  return fs::Rat(parse_integer(s.substr(0, slash), "rational numerator"),
                 parse_integer(s.substr(slash + 1), "rational denominator"));
}

std::string monomial_print(const fs::FieldCtx& field, const fs::VarCtx& vars,
                           const fs::Monomial& m) {
  return fs::MultiPoly(field, vars, {fs::Term{1, m}}).print();
}

json divisor_json(const fs::QDivisor& d) {
  json arr = json::array();
  for (const auto& t : d.terms()) {
    arr.push_back(json{{"prime", t.prime.print()},
                       {"coeff", t.coeff.str()},
                       {"degree", t.prime.degree()},
                       {"certified", t.certified}});
  }
  return arr;
}

void render_text(const json& j, std::ostream& os, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      render_text(value, os, name);
    } else if (value.is_array()) {
      os << name << ":\n";
      for (const auto& el : value) {
        if (el.is_object()) {
          os << " ";
          for (const auto& [ek, ev] : el.items())
            os << " " << ek << "=" << (ev.is_string() ? ev.get<std::string>() : ev.dump());
          os << "\n";
        } else {
          os << "  " << (el.is_string() ? el.get<std::string>() : el.dump()) << "\n";
        }
      }
    } else {
      os << name << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
         << "\n";
    }
  }
}

// Emits the report (and the optional manifest) and returns the exit code.
int emit(const Common& c, const std::string& subcommand, const json& input_digests,
         std::chrono::steady_clock::time_point t0, const json& report, int exit_code) {
  std::string body;
  if (c.text) {
    std::ostringstream os;
    render_text(report, os);
    body = os.str();
  } else {
    body = report.dump(2) + "\n";
  }
  std::cout << body;
  if (!c.manifest_path.empty()) {
    auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    json manifest{{"tool", "frobsplit"},
                  {"version", kToolVersion},
                  {"subcommand", subcommand},
                  {"p", c.p},
                  {"e", c.e},
                  {"input_digests", input_digests},
                  {"result_digest", fs::fnv1a64_hex(body)},
                  {"wall_ms", wall}};
    std::ofstream out(c.manifest_path);
    if (!out) fs::fail(fs::ErrorKind::domain_error, "cannot write manifest: " + c.manifest_path);
    out << manifest.dump(2) << "\n";
  }
  return exit_code;
}

void warn_if_large(std::uint64_t p) {
  if (p > 13)
    std::cerr << "warning: p = " << p
              << " is beyond the tuned range (p <= 13); expect longer runtimes\n";
}

std::vector<std::size_t> all_var_indices(const fs::VarCtx& vars) {
  std::vector<std::size_t> idx(vars.size());
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

fs::Ideal parse_ideal(const std::vector<std::string>& texts, const fs::VarCtx& vars,
                      const fs::FieldCtx& field, const std::vector<fs::fp_t>& shift) {
  std::vector<fs::MultiPoly> gens;
  gens.reserve(texts.size());
  for (const auto& t : texts) gens.push_back(fs::subst_shift(fs::parse_poly(t, vars, field), shift));
  return fs::Ideal(field, vars, std::move(gens));
}

// ---------------------------------------------------------------------------
// Subcommand runners. Each returns the process exit code.
// ---------------------------------------------------------------------------

int run_fpure(const Common& c, const std::string& hyp, const std::vector<std::string>& ideal,
              const std::string& at_csv) {
  auto t0 = std::chrono::steady_clock::now();
  fs::FieldCtx field(c.p);
  fs::VarCtx vars(split_csv(c.vars_csv));
  fs::FrobeniusLevel level(field, c.e);
  std::vector<fs::fp_t> point = parse_point(at_csv, field, vars.size());
  json inputs = json::object();
  json report{{"command", "fpure"}, {"p", c.p}, {"e", c.e}, {"q", level.q}};
  report["at"] = point;

  fs::FedderReport r{0, false, std::nullopt, {}};
  if (!hyp.empty()) {
    fs::MultiPoly a = fs::parse_poly(hyp, vars, field);
    inputs["hypersurface"] = fs::fnv1a64_hex(a.print());
    r = fs::fpure_hypersurface(fs::subst_shift(a, point), all_var_indices(vars), level);
  } else {
    fs::Ideal I = parse_ideal(ideal, vars, field, point);
    for (std::size_t i = 0; i < I.gens().size(); ++i)
      inputs["ideal[" + std::to_string(i) + "]"] = fs::fnv1a64_hex(I.gens()[i].print());
    std::vector<fs::MultiPoly> mg;
    for (std::size_t i = 0; i < vars.size(); ++i)
      mg.push_back(fs::MultiPoly::variable(field, vars, i));
    r = fs::fpure_general(I, fs::Ideal(field, vars, std::move(mg)), level, c.degree_cap);
  }
  report["fpure"] = r.fpure;
  if (r.witness) report["witness"] = monomial_print(field, vars, *r.witness);
  if (r.fpure) report["test_poly_digest"] = fs::fnv1a64_hex(r.test_poly);
  return emit(c, "fpure", inputs, t0, report, r.fpure ? 0 : 1);
}

int run_center(const Common& c, const std::string& hyp, const std::string& center_csv,
               const std::string& at_csv, bool fdiff_mode) {
  auto t0 = std::chrono::steady_clock::now();
  fs::FieldCtx field(c.p);
  fs::VarCtx vars(split_csv(c.vars_csv));
  fs::FrobeniusLevel level(field, c.e);
  std::vector<fs::fp_t> point = parse_point(at_csv, field, vars.size());
  fs::MultiPoly a = fs::parse_poly(hyp, vars, field);
  fs::Ideal J = parse_ideal(split_csv(center_csv), vars, field, point);
  json inputs{{"hypersurface", fs::fnv1a64_hex(a.print())}};
  {
    json jc = json::array();
    for (const auto& g : J.gens()) jc.push_back(fs::fnv1a64_hex(g.print()));
    inputs["center"] = jc;
  }
  fs::MultiPoly f = fs::poly_pow(fs::subst_shift(a, point), level.q - 1);

  json report{{"command", fdiff_mode ? "fdiff" : "center"},
              {"p", c.p},
              {"e", c.e},
              {"q", level.q}};
  if (!fdiff_mode) {
    bool ok = fs::center_test(f, J, level, c.degree_cap);
    report["compatible"] = ok;
    return emit(c, "center", inputs, t0, report, ok ? 0 : 1);
  }
  fs::FDifferentResult r = fs::compute_fdifferent(f, J, level, c.degree_cap);
  report["center_ok"] = r.center_ok;
  report["compat_ok"] = r.compat_ok;
  report["h_bar"] = r.h_bar.print();
  if (r.divisor) report["divisor"] = divisor_json(*r.divisor);
  if (!r.leftover_digest.empty()) report["leftover_digest"] = r.leftover_digest;
  bool ok = r.center_ok && r.compat_ok;
  return emit(c, "fdiff", inputs, t0, report, ok ? 0 : 1);
}

int run_fpt(const Common& c, const std::string& hyp, const std::string& at_csv) {
  auto t0 = std::chrono::steady_clock::now();
  fs::FieldCtx field(c.p);
  fs::VarCtx vars(split_csv(c.vars_csv));
  std::vector<fs::fp_t> point = parse_point(at_csv, field, vars.size());
  fs::MultiPoly a = fs::parse_poly(hyp, vars, field);
  json inputs{{"hypersurface", fs::fnv1a64_hex(a.print())}};
  fs::NuSequence seq =
      fs::fpt_estimate(fs::subst_shift(a, point), all_var_indices(vars), c.e);
  json entries = json::array();
  for (const auto& en : seq.entries)
    entries.push_back(
        json{{"e", en.e}, {"q", en.q}, {"nu", en.nu}, {"ratio", en.ratio.str()}});
  json report{{"command", "fpt"},
              {"p", c.p},
              {"e_max", c.e},
              {"f", seq.f},
              {"entries", entries}};
  return emit(c, "fpt", inputs, t0, report, 0);
}

fs::CubicFamily family_from_text(const std::string& text, const fs::FieldCtx& field) {
  fs::VarCtx vars({"x", "y", "z", "t"});
  return fs::make_family(fs::parse_poly(text, vars, field));
}

int run_fib_scan(const Common& c, const std::string& family_text) {
  auto t0 = std::chrono::steady_clock::now();
  fs::FieldCtx field(c.p);
  warn_if_large(field.p());
  fs::CubicFamily fam = family_from_text(family_text, field);
  json inputs{{"family", fs::fnv1a64_hex(fam.a.print())}};
  json fibers = json::array();
  for (const auto& rep : fs::fiber_scan(fam)) {
    json f{{"lambda", rep.lambda}, {"degenerate", rep.degenerate}};
    if (!rep.degenerate) {
      f["hasse"] = *rep.hasse;
      f["count"] = *rep.count;
      f["split"] = rep.is_split;
    }
    fibers.push_back(std::move(f));
  }
  json report{{"command", "fibration scan"}, {"p", c.p}, {"fibers", fibers}};
  return emit(c, "fibration scan", inputs, t0, report, 0);
}

int run_fib_moduli(const Common& c, const std::string& family_text, bool allow_large) {
  auto t0 = std::chrono::steady_clock::now();
  fs::FieldCtx field(c.p);
  warn_if_large(field.p());
  fs::CubicFamily fam = family_from_text(family_text, field);
  fs::FrobeniusLevel level(field, c.e);
  json inputs{{"family", fs::fnv1a64_hex(fam.a.print())}};
  fs::UniPoly h = fs::family_h_poly(fam, level, allow_large);
  if (h.is_zero())
    fs::fail(fs::ErrorKind::not_f_split,
             "every fiber of the family is supersingular: h vanishes identically");
  fs::QDivisor moduli =
      fs::div_scale(fs::Rat(1, static_cast<long long>(level.q - 1)), fs::div_of(h));
  json report{{"command", "fibration moduli"},
              {"p", c.p},
              {"e", c.e},
              {"q", level.q},
              {"h", h.print()},
              {"divisor", divisor_json(moduli)}};
  return emit(c, "fibration moduli", inputs, t0, report, 0);
}

int run_fib_charscan(const Common& c, const std::string& family_text, long long lambda0,
                     const std::string& primes_csv) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::uint64_t> primes;
  for (const auto& part : split_csv(primes_csv)) {
    long long v = parse_integer(part, "--primes");
    if (v < 2) fs::fail(fs::ErrorKind::not_prime, "--primes: " + part + " is not a prime");
    primes.push_back(static_cast<std::uint64_t>(v));
    warn_if_large(static_cast<std::uint64_t>(v));
  }
  json inputs{{"family", fs::fnv1a64_hex(family_text)},
              {"lambda0", std::to_string(lambda0)},
              {"primes", primes_csv}};
  json entries = json::array();
  for (const auto& en : fs::char_scan(family_text, lambda0, primes)) {
    entries.push_back(json{{"p", en.p},
                           {"lambda0_mod_p", en.lambda0},
                           {"in_support", en.lambda0_in_support},
                           {"rational_support", en.rational_support},
                           {"divisor", divisor_json(en.moduli)}});
  }
  json report{{"command", "fibration charscan"}, {"lambda0", lambda0}, {"entries", entries}};
  return emit(c, "fibration charscan", inputs, t0, report, 0);
}

fs::QDivisor divisor_from_entries(const std::vector<std::string>& entries,
                                  const fs::FieldCtx& field, const std::string& base_var) {
  fs::QDivisor d = fs::QDivisor::zero(field);
  fs::VarCtx vars({base_var});
  for (const auto& entry : entries) {
    auto colon = entry.find(':');
    if (colon == std::string::npos)
      fs::fail(fs::ErrorKind::syntax_error,
               "--divisor entries use the form coeff:poly, got '" + entry + "'");
    fs::Rat coeff = parse_rat(entry.substr(0, colon));
    fs::UniPoly label =
        fs::to_unipoly(fs::parse_poly(entry.substr(colon + 1), vars, field), 0);
    d = fs::div_add(d, fs::div_scale(coeff, fs::div_of(label)));
  }
  return d;
}

int run_divisor(const Common& c, const std::string& verb,
                const std::vector<std::string>& entries, const std::string& base_var,
                const std::string& map_text, const std::string& map_var) {
  auto t0 = std::chrono::steady_clock::now();
  fs::FieldCtx field(c.p);
  fs::QDivisor d = divisor_from_entries(entries, field, base_var);
  json inputs = json::object();
  for (std::size_t i = 0; i < entries.size(); ++i)
    inputs["divisor[" + std::to_string(i) + "]"] = fs::fnv1a64_hex(entries[i]);
  json report{{"command", "divisor " + verb}, {"p", c.p}, {"input", divisor_json(d)}};
  if (verb == "add") {
    report["result"] = divisor_json(d);
    return emit(c, "divisor add", inputs, t0, report, 0);
  }
  fs::VarCtx mv({map_var});
  fs::BaseMap g(fs::to_unipoly(fs::parse_poly(map_text, mv, field), 0));
  inputs["map"] = fs::fnv1a64_hex(g.g.print());
  report["map"] = g.g.print();
  if (verb == "pullback") {
    report["result"] = divisor_json(fs::pullback(d, g));
  } else {
    report["ramification"] = divisor_json(fs::ramification_divisor(g));
    report["result"] = divisor_json(fs::base_change_transform(d, g));
  }
  return emit(c, "divisor " + verb, inputs, t0, report, 0);
}

int run_hasse(const Common& c, const std::string& family_text, const std::string& lambda_text) {
  auto t0 = std::chrono::steady_clock::now();
  fs::FieldCtx field(c.p);
  warn_if_large(field.p());
  fs::CubicFamily fam = family_from_text(family_text, field);
  json inputs{{"family", fs::fnv1a64_hex(fam.a.print())}};
  fs::UniPoly h = fs::family_h_poly(fam, fs::FrobeniusLevel(field, 1));
  json report{{"command", "hasse"},
              {"p", c.p},
              {"legendre", fs::legendre_hasse_poly(field).print()},
              {"h", h.print()}};
  if (!lambda_text.empty()) {
    fs::fp_t lambda = reduce_mod(parse_integer(lambda_text, "--lambda"), field);
    fs::fp_t hv = fs::hasse_value(fam, lambda);
    report["lambda"] = lambda;
    report["hasse_value"] = hv;
    report["split"] = hv != 0;
    report["count"] = fs::point_count(fam, lambda);
  }
  return emit(c, "hasse", inputs, t0, report, 0);
}

}  // namespace

int main(int argc, char** argv) {
  Common c;
  CLI::App app{"Frobenius-splitting invariants over F_p: F-purity tests, compatible "
               "centers, induced boundary divisors, and elliptic-fibration moduli"};
  app.require_subcommand(1);

  std::string hyp, at_csv, center_csv, family_text = kBuiltinFamily;
  std::string lambda_text, primes_csv, base_var = "t", map_text, map_var = "s";
  std::vector<std::string> ideal_texts, divisor_entries;
  long long lambda0 = 0;
  bool allow_large = false;

  auto add_common = [&](CLI::App* cmd, bool needs_vars) {
    cmd->add_option("-p,--prime", c.p, "characteristic (prime)")->required();
    cmd->add_option("--degree-cap", c.degree_cap,
                    "Groebner pair-degree cap (env FROBSPLIT_DEGREE_CAP)")
        ->envname("FROBSPLIT_DEGREE_CAP");
    cmd->add_flag("--text", c.text, "human-readable output instead of JSON");
    cmd->add_option("--manifest", c.manifest_path, "write a reproducibility manifest here");
    if (needs_vars)
      cmd->add_option("--vars", c.vars_csv, "comma-separated variable names")->required();
  };

  CLI::App* fpure = app.add_subcommand("fpure", "Fedder F-purity test at a point");
  add_common(fpure, true);
  fpure->add_option("-e,--level", c.e, "Frobenius level e (q = p^e)");
  fpure->add_option("--hypersurface", hyp, "defining polynomial of a hypersurface");
  fpure->add_option("--ideal", ideal_texts, "ideal generator (repeatable)");
  fpure->add_option("--at", at_csv, "point coordinates (default: origin)");

  CLI::App* center = app.add_subcommand("center", "compatibility test for a center");
  add_common(center, true);
  center->add_option("-e,--level", c.e, "Frobenius level e (q = p^e)");
  center->add_option("--hypersurface", hyp, "defining polynomial a; tests f = a^(q-1)")
      ->required();
  center->add_option("--center", center_csv, "comma-separated center generators")->required();
  center->add_option("--at", at_csv, "point coordinates (default: origin)");

  CLI::App* fdiff = app.add_subcommand("fdiff", "induced boundary divisor on a center");
  add_common(fdiff, true);
  fdiff->add_option("-e,--level", c.e, "Frobenius level e (q = p^e)");
  fdiff->add_option("--hypersurface", hyp, "defining polynomial a; uses f = a^(q-1)")
      ->required();
  fdiff->add_option("--center", center_csv, "comma-separated center generators")->required();
  fdiff->add_option("--at", at_csv, "point coordinates (default: origin)");

  CLI::App* fpt = app.add_subcommand("fpt", "nu-invariant ladder / F-pure threshold bounds");
  add_common(fpt, true);
  fpt->add_option("-e,--emax", c.e, "compute nu(p^e) for e = 1..emax");
  fpt->add_option("--hypersurface", hyp, "polynomial whose threshold is estimated")
      ->required();
  fpt->add_option("--at", at_csv, "point coordinates (default: origin)");

  CLI::App* fib = app.add_subcommand("fibration", "one-parameter cubic families");
  fib->require_subcommand(1);
  CLI::App* scan = fib->add_subcommand("scan", "per-fiber splitting scan over F_p");
  add_common(scan, false);
  scan->add_option("--family", family_text, "family polynomial in x,y,z,t");
  CLI::App* moduli = fib->add_subcommand("moduli", "moduli-part divisor on the base line");
  add_common(moduli, false);
  moduli->add_option("-e,--level", c.e, "Frobenius level e (q = p^e)");
  moduli->add_option("--family", family_text, "family polynomial in x,y,z,t");
  moduli->add_flag("--allow-large", allow_large, "lift the q <= 27 guard for e >= 2");
  CLI::App* charscan = fib->add_subcommand("charscan", "reduce mod several primes");
  charscan->add_option("--degree-cap", c.degree_cap,
                       "Groebner pair-degree cap (env FROBSPLIT_DEGREE_CAP)")
      ->envname("FROBSPLIT_DEGREE_CAP");
  charscan->add_flag("--text", c.text, "human-readable output instead of JSON");
  charscan->add_option("--manifest", c.manifest_path, "write a reproducibility manifest here");
  charscan->add_option("--family", family_text, "family polynomial in x,y,z,t");
  charscan->add_option("--lambda0", lambda0, "rational parameter value to locate")->required();
  charscan->add_option("--primes", primes_csv, "comma-separated primes")->required();

  CLI::App* divisor = app.add_subcommand("divisor", "Q-divisor arithmetic on the affine line");
  divisor->require_subcommand(1);
  std::vector<CLI::App*> divisor_verbs;
  for (const char* verb : {"add", "pullback", "basechange"}) {
    CLI::App* v = divisor->add_subcommand(
        verb, std::string(verb) == "add"
                  ? "sum the listed divisor contributions"
                  : (std::string(verb) == "pullback" ? "pull back along a base map"
                                                     : "pullback minus ramification"));
    add_common(v, false);
    v->add_option("--divisor", divisor_entries, "contribution coeff:poly (repeatable)")
        ->required();
    v->add_option("--base-var", base_var, "variable of the divisor labels (default t)");
    if (std::string(verb) != "add") {
      v->add_option("--map", map_text, "base map polynomial g(s)")->required();
      v->add_option("--map-var", map_var, "variable of the base map (default s)");
    }
    divisor_verbs.push_back(v);
  }

  CLI::App* hasse = app.add_subcommand("hasse", "Hasse polynomial and per-fiber values");
  add_common(hasse, false);
  hasse->add_option("--family", family_text, "family polynomial in x,y,z,t");
  hasse->add_option("--lambda", lambda_text, "evaluate the splitting data at this fiber");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\nrun 'frobsplit --help' for usage\n";
    return 2;
  }

  try {
    if (*fpure) {
      if (hyp.empty() == ideal_texts.empty()) {
        std::cerr << "fpure needs exactly one of --hypersurface or --ideal\n";
        return 2;
      }
      return run_fpure(c, hyp, ideal_texts, at_csv);
    }
    if (*center) return run_center(c, hyp, center_csv, at_csv, false);
    if (*fdiff) return run_center(c, hyp, center_csv, at_csv, true);
    if (*fpt) return run_fpt(c, hyp, at_csv);
    if (*scan) return run_fib_scan(c, family_text);
    if (*moduli) return run_fib_moduli(c, family_text, allow_large);
    if (*charscan) return run_fib_charscan(c, family_text, lambda0, primes_csv);
    if (*divisor_verbs[0])
      return run_divisor(c, "add", divisor_entries, base_var, map_text, map_var);
    if (*divisor_verbs[1])
      return run_divisor(c, "pullback", divisor_entries, base_var, map_text, map_var);
    if (*divisor_verbs[2])
      return run_divisor(c, "basechange", divisor_entries, base_var, map_text, map_var);
    if (*hasse) return run_hasse(c, family_text, lambda_text);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const fs::Error& e) {
    json err{{"error", {{"kind", e.kind_name()}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    json err{{"error", {{"kind", "internal_error"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
}
