#include <algorithm>
#include <chrono>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sl1d/construction.hpp"
#include "sl1d/error.hpp"
#include "sl1d/orbits.hpp"
#include "sl1d/parallel.hpp"
#include "sl1d/parse.hpp"
#include "sl1d/verify.hpp"
#include "sl1d/zeta.hpp"

using json = nlohmann::ordered_json;
using namespace sl1d;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kConfig = 2;
constexpr int kGuard = 3;
constexpr int kError = 4;
// verify: kSuiteFailed + index of the first failing suite in suite_names().
constexpr int kSuiteFailed = 10;

struct Config {
  std::uint64_t q = 0;
  int p = 0;
  int f = 1;
  int ell = 2;
  std::string modulus_q, modulus_qell;
  int m = 2;
  int max_level = 4;
  std::string format = "json";
  unsigned threads = 0;
  std::uint64_t seed = 1;
  std::uint64_t max_group = 3'000;
  std::uint64_t max_orbit = 1'000'000;
  bool timings = false;
};

Poly parse_poly(const std::string& s) {
  Poly out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

TowerSpec tower_spec(const Config& c, std::uint64_t q) {
  TowerSpec s = FieldTower::spec_for(q, c.ell);
  if (!c.modulus_q.empty()) s.modulus_q = parse_poly(c.modulus_q);
  if (!c.modulus_qell.empty()) s.modulus_qell = parse_poly(c.modulus_qell);
  return s;
}

std::uint64_t resolved_q(const Config& c) {
  if (c.q != 0) return c.q;
  if (c.p != 0) return ipow(static_cast<std::uint64_t>(c.p), static_cast<unsigned>(c.f));
  return 0;
}

std::string big(const BigInt& x) { return x.str(); }

json num(const BigInt& x) {
  if (x <= BigInt(std::numeric_limits<long long>::max()) && x >= BigInt(std::numeric_limits<long long>::min()))
    return json(static_cast<long long>(x));
  return json(x.str());
}

std::string rat(const BigRational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

json cplx(std::complex<double> z) {
  std::ostringstream re, im;
  re.precision(17);
  im.precision(17);
  re << z.real();
  im << z.imag();
  return json{{"re", std::stod(re.str())}, {"im", std::stod(im.str())}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_census(const Config& c, bool explicit_construction) {
  const std::uint64_t q = resolved_q(c);
  const FieldTower F(tower_spec(c, q));
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = telescoping_table(q, c.ell, c.max_level);
  const Census cen = census(F, c.max_level, explicit_construction, c.max_group);
  bool ok = cen.ok;
  for (const auto& r : rows) ok = ok && r.ok;
  if (c.format == "tsv") {
    std::cout << "m\ta_m\td_m\tsum_a\tsum_ad2\torder_next\tcheck\n";
    for (const auto& r : rows)
      std::cout << r.m << "\t" << r.a << "\t" << r.d << "\t" << r.sum_a << "\t" << r.sum_ad2 << "\t" << r.order_next
                << "\t" << (r.ok && cen.levels[r.m].ok ? "pass" : "FAIL") << "\n";
  } else {
    json j;
    j["command"] = "census";
    j["q"] = q;
    j["ell"] = c.ell;
    j["iota"] = iota(q, c.ell);
    json arr = json::array();
    for (const auto& r : rows) {
      const auto& L = cen.levels[r.m];
      json row{{"m", r.m},
               {"a_m", num(r.a)},
               {"d_m", num(r.d)},
               {"sum_a", num(r.sum_a)},
               {"sum_ad2", num(r.sum_ad2)},
               {"order_next", num(r.order_next)},
               {"orbit_count", num(L.orbit_formula_count)}};
      if (L.representatives) row["representatives"] = *L.representatives;
      if (L.explicit_count) row["explicit_count"] = *L.explicit_count;
      row["check"] = r.ok && L.ok;
      arr.push_back(row);
    }
    j["rows"] = arr;
    if (cen.class_count) j["class_count"] = *cen.class_count;
    j["pass"] = ok;
    if (c.timings) j["seconds"] = since(t0);
    emit(j);
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_verify(const Config& c, const std::string& suite) {
  std::vector<std::uint64_t> qs;
  std::vector<int> ells;
  if (resolved_q(c) != 0) {
    qs.push_back(resolved_q(c));
    ells.push_back(c.ell);
  } else {
    for (auto [q, l] : {std::pair<std::uint64_t, int>{3, 2}, {5, 3}, {7, 3}}) {
      qs.push_back(q);
      ells.push_back(l);
    }
  }
  SuiteOptions opt;
  opt.m = c.m;
  opt.max_group = c.max_group;
  opt.max_orbit = c.max_orbit;
  opt.seed = c.seed;
  bool ok = true;
  int first_failed = -1;
  const auto names = suite_names();
  json runs = json::array();
  std::vector<std::string> tsv;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    Config ci = c;
    ci.ell = ells[i];
    const FieldTower F(tower_spec(ci, qs[i]));
    const auto results = run_suite(suite, F, opt);
    json checks = json::array();
    for (const auto& r : results) {
      ok = ok && r.pass;
      if (!r.pass && first_failed < 0)
        first_failed = static_cast<int>(std::find(names.begin(), names.end(), r.suite) - names.begin());
      json cj{{"suite", r.suite}, {"name", r.name}, {"claim", r.claim}, {"pass", r.pass}, {"detail", r.detail}};
      if (c.timings) cj["seconds"] = r.seconds;
      checks.push_back(cj);
      tsv.push_back(std::to_string(qs[i]) + "\t" + std::to_string(ells[i]) + "\t" + r.suite + "\t" + r.name + "\t" +
                    (r.pass ? "pass" : "FAIL") + "\t" + r.detail);
    }
    runs.push_back(json{{"q", qs[i]}, {"ell", ells[i]}, {"checks", checks}});
  }
  if (c.format == "tsv") {
    std::cout << "q\tell\tsuite\tcheck\tresult\tdetail\n";
    for (const auto& l : tsv) std::cout << l << "\n";
  } else {
    json j{{"command", "verify"}, {"suite", suite}, {"m", c.m}, {"seed", c.seed}, {"runs", runs}, {"pass", ok}};
    if (!ok) j["first_failed_suite"] = names[first_failed];
    emit(j);
  }
  return ok ? kOk : kSuiteFailed + first_failed;
}

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) raise(ErrorKind::ConfigError, "--s: not a number: '" + s + "'");
  return v;
}

std::complex<double> parse_s(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return {parse_real(s), 0.0};
  return {parse_real(s.substr(0, comma)), parse_real(s.substr(comma + 1))};
}

int cmd_zeta(const Config& c, const std::string& s_text, int terms, bool exact) {
  const std::uint64_t q = resolved_q(c);
  FieldTower::spec_for(q, c.ell);  // validates the parameters
  const std::complex<double> s = parse_s(s_text);
  json j{{"command", "zeta"}, {"q", q}, {"ell", c.ell}, {"s", cplx(s)}, {"terms", terms}};
  const auto pl = pole(q, c.ell);
  j["pole"] = pl.denominator() == 1 ? std::to_string(pl.numerator())
                                     : std::to_string(pl.numerator()) + "/" + std::to_string(pl.denominator());
  j["pole_period_imag"] = pole_period(q, c.ell);
  if (exact) {
    if (s.imag() != 0 || s.real() != std::floor(s.real()))
      raise(ErrorKind::ConfigError, "--exact needs an integer s");
    const long si = static_cast<long>(s.real());
    const BigRational ps = zeta_partial_sum_exact(q, c.ell, si, terms);
    j["partial_sum_exact"] = rat(ps);
    try {
      const BigRational cf = zeta_closed_form_exact(q, c.ell, si);
      j["closed_form_exact"] = rat(cf);
      j["difference_exact"] = rat(cf - ps);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleAt) throw;
      j["closed_form_exact"] = nullptr;
      j["at_pole"] = true;
    }
    if (si == -2) {
      json tab = json::array();
      for (int m = 0; m <= terms; ++m)
        tab.push_back(json{{"M", m},
                           {"partial_sum", rat(zeta_partial_sum_exact(q, c.ell, -2, m))},
                           {"group_order", big(group_order(q, c.ell, m + 1))}});
      j["telescoping"] = tab;
    }
  } else {
    const auto ps = zeta_partial_sum(q, c.ell, s, terms);
    j["partial_sum"] = cplx(ps);
    try {
      const auto cf = zeta_closed_form(q, c.ell, s);
      j["closed_form"] = cplx(cf);
      j["abs_error"] = std::abs(cf - ps);
      j["at_pole"] = false;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleAt) throw;
      j["closed_form"] = nullptr;
      j["at_pole"] = true;
      j["pole_message"] = e.what();
    }
    j["convergence_rate_per_level"] = convergence_rate(q, c.ell, s.real());
  }
  emit(j);
  return kOk;
}

json elem_json(const DElem& x) {
  json j{{"series", format_elem(x)}, {"precision", x.exact() ? json("exact") : json(x.prec())}};
  if (const auto v = val(x))
    j["l_val"] = v->denominator() == 1 ? std::to_string(v->numerator())
                                       : std::to_string(v->numerator()) + "/" + std::to_string(v->denominator());
  else j["l_val"] = nullptr;
  const JumpBound jb = jump_bound(x);
  if (jb.value >= kExact)
    j["jump"] = "infinity";
  else if (jb.determined)
    j["jump"] = jb.value;
  else
    j["jump"] = ">= " + std::to_string(jb.value);
  if (jb.determined) j["kind"] = kind_name(classify(x));
  j["trd"] = format_elem(trd(x));
  return j;
}

int cmd_elem(const Config& c, const std::string& expr, int prec) {
  const std::uint64_t q = resolved_q(c);
  const FieldTower F(tower_spec(c, q));
  const DElem x = parse_elem(F, expr, prec > 0 ? prec : kExact);
  json j{{"command", "elem"}, {"q", q}, {"ell", c.ell}, {"input", expr}};
  j["value"] = elem_json(x);
  if (!x.is_zero() && x.lo() == 0) {
    try {
      j["value"]["nrd"] = format_elem(nrd(x));
      if (!x.exact()) j["value"]["in_G"] = is_group_element(x, x.prec());
    } catch (const Error& e) {
      j["value"]["nrd"] = std::string(kind_name(e.kind())) + ": " + e.what();
    }
  }
  emit(j);
  return kOk;
}

int cmd_orbits(const Config& c, const std::string& expr, bool brute) {
  const std::uint64_t q = resolved_q(c);
  const FieldTower F(tower_spec(c, q));
  const DElem y = parse_elem(F, expr, c.m);
  json j{{"command", "orbits"}, {"q", q}, {"ell", c.ell}, {"m", c.m}, {"y", format_elem(y)}};
  const StabilizerStructure st = stabilizer_structure(y, c.m);
  j["stabilizer"] = st.kase == StabilizerCase::WholeGroup ? "O^x" : "C(y) (1 + P^" + std::to_string(st.congruence_level) + ")";
  if (st.jump) j["jump"] = *st.jump;
  else j["jump"] = "infinity";
  if (st.centralizer_kind) j["centralizer"] = centralizer_kind_name(*st.centralizer_kind);
  json acts = json::object();
  for (Acting a : {Acting::Ounits, Acting::G, Acting::G1}) {
    json aj;
    try {
      aj["formula"] = num(orbit_size(y, c.m, a));
    } catch (const Error& e) {
      aj["formula"] = nullptr;
      aj["note"] = e.what();
    }
    if (brute) {
      try {
        aj["brute_force"] = brute_force_orbit(y, c.m, a, c.max_orbit).size();
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::TooLarge && e.kind() != ErrorKind::GuardExceeded) throw;
        aj["brute_force"] = nullptr;
      }
    }
    acts[acting_name(a)] = aj;
  }
  j["orbits"] = acts;
  if (st.jump && *st.jump < c.m) {
    const OrbitReport r = orbit_size_G(y, c.m);
    j["splitting_count"] = *r.splitting_count;
    if (brute) {
      try {
        json sizes = json::array();
        for (auto s : split_into_G_orbits(y, c.m, c.max_orbit)) sizes.push_back(s);
        j["G_orbit_sizes"] = sizes;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::TooLarge && e.kind() != ErrorKind::GuardExceeded) throw;
      }
    }
  }
  emit(j);
  return kOk;
}

int cmd_verify_construction(const Config& c) {
  const std::uint64_t q = resolved_q(c);
  const FieldTower F(tower_spec(c, q));
  const int m = c.m;
  const auto t0 = std::chrono::steady_clock::now();
  json j{{"command", "verify-construction"}, {"q", q}, {"ell", c.ell}, {"m", m}};
  const InducingDatum d0 = construct_inducing_datum(F, m, canonical_representative(F, m));
  j["case"] = construction_case_name(d0.kase);
  j["predicted_degree"] = num(d0.predicted_degree);
  j["predicted_inertia_index"] = num(d0.predicted_inertia_index);
  j["subgroup"] = d0.subgroup.shape;
  j["monomial"] = d0.monomial;
  j["a_m"] = num(a_m(q, c.ell, m));
  bool ok = true;
  if (group_order(q, c.ell, m + 1) > c.max_group) {
    j["explicit"] = false;
    j["group_order"] = num(d0.group_order);
    j["formula_degree"] = num(d0.formula_degree);
    ok = d0.formula_degree == d0.predicted_degree;
  } else {
    j["explicit"] = true;
    const QuotientGroup G = build_quotient_group(F, m + 1, c.max_group);
    j["group_order"] = G.size();
    json reps = json::array();
    std::size_t total = 0;
    for (const auto& y : level_representatives(F, m, c.max_orbit)) {
      const auto r = induce_and_verify(G, construct_inducing_datum(F, m, y));
      json rj{{"representative", format_elem(y)},
              {"subgroup_order", r.subgroup_order},
              {"inertia_matches", r.inertia_matches},
              {"linear_extensions", r.linear_extensions},
              {"degree", r.degree},
              {"norm_one", r.norm_one},
              {"level_exact", r.level_exact},
              {"distinct_characters", r.distinct_characters}};
      if (!r.monomial) rj["extension_values"] = r.extension_values;
      reps.push_back(rj);
      total += r.characters.size();
    }
    j["representatives"] = reps;
    j["characters"] = total;
    ok = BigInt(total) == a_m(q, c.ell, m);
  }
  j["pass"] = ok;
  if (c.timings) j["seconds"] = since(t0);
  emit(j);
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characters of SL_1 of a division algebra of prime degree: exact census and verification"};
  app.set_config("--config", "", "TOML/INI file with the same keys as the flags (flags win)");
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--q", c.q, "Residue field size q (odd prime power)");
  app.add_option("--p", c.p, "Residue characteristic (with --f)");
  app.add_option("--f", c.f, "Degree of F_q over F_p (with --p)");
  app.add_option("--ell", c.ell, "Degree l of the division algebra (prime, != p)");
  app.add_option("--modulus-q", c.modulus_q, "Defining polynomial of F_q, comma-separated little-endian");
  app.add_option("--modulus-qell", c.modulus_qell, "Defining polynomial of F_{q^l}, comma-separated little-endian");
  app.add_option("--m", c.m, "Level or precision");
  app.add_option("--max-level", c.max_level, "Highest level for census");
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--threads", c.threads, "Worker threads (0: hardware concurrency)");
  app.add_option("--seed", c.seed, "Seed for sampled checks");
  app.add_option("--max-group", c.max_group, "Largest explicit group to build");
  app.add_option("--max-orbit", c.max_orbit, "Largest orbit or enumeration");
  app.add_flag("--timings", c.timings, "Include wall-clock timings (output is then not reproducible)");

  bool explicit_census = false;
  auto* census_cmd = app.add_subcommand("census", "Character counts and degrees per level");
  census_cmd->add_flag("--explicit", explicit_census, "Also construct characters where the group is buildable");

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", suite, "Suite")->check(
      CLI::IsMember({"arith", "orbits", "duality", "construction", "zeta", "all"}));

  std::string s_text = "2";
  int terms = 200;
  bool exact = false;
  auto* zeta_cmd = app.add_subcommand("zeta", "Zeta function: closed form, partial sums, pole");
  zeta_cmd->add_option("--s", s_text, "s as RE or RE,IM");
  zeta_cmd->add_option("--terms", terms, "Number of levels in the partial sum");
  zeta_cmd->add_flag("--exact", exact, "Exact rational evaluation (integer s)");

  std::string expr;
  int prec = 0;
  auto* elem_cmd = app.add_subcommand("elem", "Evaluate a nu-series expression");
  elem_cmd->add_option("expr", expr, "Expression, e.g. '1+n*t3+p^2'")->required();
  elem_cmd->add_option("--prec", prec, "Working precision k (modulo P^k); 0 means exact");

  std::string yexpr;
  bool brute = false;
  auto* orbits_cmd = app.add_subcommand("orbits", "Similarity class of y modulo P^m");
  orbits_cmd->add_option("--y", yexpr, "Element y")->required();
  orbits_cmd->add_flag("--brute", brute, "Also enumerate orbits");

  auto* vc_cmd = app.add_subcommand("verify-construction", "Construct and verify the characters of level m");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  try {
    set_max_threads(c.threads);
    if (resolved_q(c) == 0 && !verify_cmd->parsed())
      raise(ErrorKind::ConfigError, "give --q, or --p and --f");
    if (census_cmd->parsed()) return cmd_census(c, explicit_census);
    if (verify_cmd->parsed()) return cmd_verify(c, suite);
    if (zeta_cmd->parsed()) return cmd_zeta(c, s_text, terms, exact);
    if (elem_cmd->parsed()) return cmd_elem(c, expr, prec);
    if (orbits_cmd->parsed()) return cmd_orbits(c, yexpr, brute);
    if (vc_cmd->parsed()) return cmd_verify_construction(c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ConfigError:
      case ErrorKind::BadInput: return kConfig;
      case ErrorKind::TooLarge:
      case ErrorKind::GuardExceeded: return kGuard;
      case ErrorKind::VerificationFailed: return kCheckFailed;
      default: return kError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kOk;
}
