#include "sl1d/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "sl1d/construction.hpp"
#include "sl1d/duality.hpp"
#include "sl1d/error.hpp"
#include "sl1d/group.hpp"
#include "sl1d/orbits.hpp"
#include "sl1d/zeta.hpp"

namespace sl1d {

namespace {

class Runner {
 public:
  Runner(std::string suite, std::vector<CheckResult>& out) : suite_(std::move(suite)), out_(out) {}

  /// body returns an empty string on success, a description of the failure otherwise.
  void check(const std::string& name, const std::string& claim, const std::function<std::string()>& body) {
    CheckResult r;
    r.suite = suite_;
    r.name = name;
    r.claim = claim;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.detail = body();
      r.pass = r.detail.empty() || r.detail.rfind("ok", 0) == 0 || r.detail.rfind("skipped", 0) == 0;
    } catch (const Error& e) {
      r.pass = false;
      r.detail = std::string(kind_name(e.kind())) + ": " + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out_.push_back(std::move(r));
  }

 private:
  std::string suite_;
  std::vector<CheckResult>& out_;
};

std::string str(const BigInt& x) { return x.str(); }

DElem random_elem(const FieldTower& F, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> d(0, F.size() - 1);
  std::vector<Fql> c;
  for (int e = lo; e < hi; ++e) c.push_back(static_cast<Fql>(d(rng)));
  return DElem::from_coeffs(F, lo, c, hi);
}

DElem random_unit(const FieldTower& F, std::mt19937_64& rng, int hi) {
  std::uniform_int_distribution<int> d(1, F.size() - 1);
  DElem x = random_elem(F, rng, 1, hi);
  return x + DElem::constant(F, static_cast<Fql>(d(rng)), hi);
}

void arith_suite(const FieldTower& F, const SuiteOptions& opt, std::vector<CheckResult>& out) {
  Runner R("arith", out);
  std::mt19937_64 rng(opt.seed);
  const int P = std::max(2, opt.m + 1);
  R.check("norm_one_count", "|SL_1(F_{q^l}|F_q)| = (q^l - 1)/(q - 1)", [&]() -> std::string {
    const auto n = norm_one_constants(F).size();
    const BigInt A = (BigInt(ipow(F.q(), F.ell())) - 1) / (F.q() - 1);
    return BigInt(n) == A ? "" : "found " + std::to_string(n) + ", expected " + str(A);
  });
  R.check("field_axioms", "F_{q^l} is a field; Frobenius is a field automorphism of order l over F_q",
          [&]() -> std::string {
            std::uniform_int_distribution<int> d(0, F.size() - 1);
            for (int t = 0; t < 2000; ++t) {
              const Fql a = d(rng), b = d(rng), c = d(rng);
              if (F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c))) return "distributivity";
              if (a != 0 && F.mul(a, F.inv(a)) != 1) return "inverse";
              if (F.frobenius(F.mul(a, b), 1) != F.mul(F.frobenius(a, 1), F.frobenius(b, 1))) return "frobenius";
              if (F.frobenius(a, F.ell()) != a) return "frobenius order";
            }
            return "";
          });
  R.check("ring_axioms", "D modulo P^k is an associative ring with nu^l = pi and a nu = nu sigma(a)",
          [&]() -> std::string {
            const DElem nu = DElem::nu_power(F, 1);
            for (int i = 0; i < std::min(F.size(), 200); ++i) {
              const Fql a = static_cast<Fql>(i);
              if (DElem::constant(F, a) * nu != nu * DElem::constant(F, F.frobenius(a, 1))) return "twist relation";
            }
            if (power(nu, F.ell()) != DElem::pi_power(F, 1)) return "nu^l != pi";
            for (int t = 0; t < 300; ++t) {
              const DElem x = random_elem(F, rng, -1, P), y = random_elem(F, rng, -1, P), z = random_elem(F, rng, -1, P);
              if (!congruent((x * y) * z, x * (y * z))) return "associativity";
              if (!congruent(x * (y + z), x * y + x * z)) return "distributivity";
            }
            return "";
          });
  R.check("inverse_and_norm", "nrd is multiplicative and units invert", [&]() -> std::string {
    for (int t = 0; t < 200; ++t) {
      const DElem x = random_unit(F, rng, P), y = random_unit(F, rng, P);
      if (!congruent(x * inv(x), DElem::one(F, P))) return "x inv(x) != 1";
      if (!congruent(nrd(x * y), nrd(x) * nrd(y))) return "nrd not multiplicative";
    }
    return "";
  });
  R.check("exp_log_inverse", "truncated exp and log are mutually inverse on g^1_3 and g^2_4", [&]() -> std::string {
    for (auto [r, m] : {std::pair{1, 3}, std::pair{2, 4}}) {
      if (lie_layer_size(F.q(), F.ell(), r, m) > opt.max_orbit) return "skipped: layer too large";
      for (const auto& x : enumerate_lie(F, r, m))
        if (tlog(texp({x, r, m}), r, m).x != x) return "log(exp(x)) != x";
    }
    return "";
  });
  R.check("bch", "BCH and commutator identities on g^1_3", [&]() -> std::string {
    const auto xs = enumerate_lie(F, 1, 3);
    const std::size_t n = xs.size();
    if (n * n <= 100'000) {
      for (const auto& x : xs)
        for (const auto& y : xs)
          if (!bch_check({x, 1, 3}, {y, 1, 3})) return "identity fails";
      return "";
    }
    std::uniform_int_distribution<std::size_t> d(0, n - 1);
    for (int t = 0; t < 3000; ++t)
      if (!bch_check({xs[d(rng)], 1, 3}, {xs[d(rng)], 1, 3})) return "identity fails";
    return "ok (3000 sampled pairs)";
  });
}

void orbit_suite(const FieldTower& F, const SuiteOptions& opt, std::vector<CheckResult>& out) {
  Runner R("orbits", out);
  std::mt19937_64 rng(opt.seed);
  std::vector<DElem> ys;
  for (int a = 0; a < F.size(); ++a)
    for (int b = 0; b < F.size(); ++b) ys.push_back(DElem::from_coeffs(F, 0, {Fql(a), Fql(b)}));
  const bool exhaustive = ys.size() <= 1000;
  if (!exhaustive) {
    std::shuffle(ys.begin(), ys.end(), rng);
    ys.resize(30);
  }
  const std::string scope = exhaustive ? "every residue mod P^2" : "30 sampled residues mod P^2";
  R.check("orbit_sizes", "similarity class sizes under O^x, G, G^1 equal the formula (" + scope + ")",
          [&]() -> std::string {
            int tested = 0;
            for (const auto& y : ys) {
              const JumpBound jb = jump_bound(y);
              if (jb.value >= kExact) continue;
              for (int m = jb.value + 1; m <= jb.value + std::max(2, opt.m); ++m) {
                if (orbit_size(y, m, Acting::Ounits) > opt.max_orbit) continue;
                for (Acting a : {Acting::Ounits, Acting::G, Acting::G1})
                  if (BigInt(brute_force_orbit(y, m, a, opt.max_orbit).size()) != orbit_size(y, m, a))
                    return std::string("mismatch under ") + acting_name(a) + " at m = " + std::to_string(m);
                ++tested;
              }
            }
            return "ok (" + std::to_string(tested) + " cases)";
          });
  R.check("class_splitting", "ramified O^x-classes split into iota equal G-classes, unramified ones stay whole",
          [&]() -> std::string {
            for (const auto& y : ys) {
              const JumpBound jb = jump_bound(y);
              if (jb.value >= kExact) continue;
              const int m = jb.value + 1;
              if (orbit_size(y, m, Acting::Ounits) > opt.max_orbit) continue;
              const auto split = split_into_G_orbits(y, m, opt.max_orbit);
              const OrbitReport r = orbit_size_G(y, m);
              if (static_cast<int>(split.size()) != *r.splitting_count) return "wrong number of G-classes";
              for (auto s : split)
                if (BigInt(s) != r.formula_size) return "unequal G-classes";
            }
            return "";
          });
  R.check("stabilizer_decomposition", "St^m(y) = C(y) (1 + P^{m - j}) for j < m", [&]() -> std::string {
    int tested = 0;
    for (const auto& y : ys) {
      const JumpBound jb = jump_bound(y);
      if (jb.value >= kExact || acting_precision(y, jb.value + 1) > 2) continue;
      const int m = jb.value + 1;
      if (acting_group_order(F, acting_precision(y, m), Acting::Ounits) > 100'000) continue;
      std::set<std::string> a, b;
      for (const auto& x : brute_force_stabilizer(y, m, Acting::Ounits)) a.insert(x.key());
      for (const auto& x : stabilizer_by_decomposition(y, m)) b.insert(x.key());
      if (a != b) return "stabilizer differs from C(y)(1 + P^{m-j})";
      if (++tested >= 12) break;
    }
    return tested == 0 ? "skipped: acting groups too large" : "ok (" + std::to_string(tested) + " cases)";
  });
}

void duality_suite(const FieldTower& F, const SuiteOptions& opt, std::vector<CheckResult>& out) {
  Runner R("duality", out);
  const std::pair<int, int> windows[] = {{1, 2}, {2, 3}, {2, 4}};
  R.check("nondegeneracy", "the trace pairing between g^r_m and its dual window is non-degenerate",
          [&]() -> std::string {
            for (auto [r, m] : windows) {
              if (lie_layer_size(F.q(), F.ell(), r, m) > opt.max_orbit / 10) continue;
              const auto xs = enumerate_lie(F, r, m);
              for (const auto& xe : xs) {
                if (xe.is_zero()) continue;
                const LieElem x = make_lie(xe, r, m);
                if (pairing(x, nondegeneracy_witness(x)) == 0) return "witness pairs trivially";
              }
            }
            return "";
          });
  R.check("phi_y_characters", "y -> phi_y is a bijection onto the characters of abelian layers",
          [&]() -> std::string {
            for (auto [r, m] : windows) {
              if (m > 2 * r) continue;
              const BigInt n = lie_layer_size(F.q(), F.ell(), r, m);
              if (n * n > opt.max_orbit * 10) continue;
              std::vector<DElem> gs;
              for (const auto& x : enumerate_lie(F, r, m)) gs.push_back(texp(make_lie(x, r, m)));
              std::set<std::vector<CharExp>> tables;
              for (const auto& y : enumerate_dual(F, r, m)) {
                const auto phi = phi_y_as_character(y);
                std::vector<CharExp> tab;
                for (const auto& g : gs) tab.push_back(phi(g));
                tables.insert(tab);
              }
              if (BigInt(tables.size()) != n) return "only " + std::to_string(tables.size()) + " distinct characters";
            }
            return "";
          });
  R.check("beta_commutator", "the layer form beta equals the group commutator form", [&]() -> std::string {
    const int r = 1;
    int tested = 0;
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> d(0, F.size() - 1);
    for (const auto& y : enumerate_dual(F, r + 1, 2 * r + 1)) {
      if (y.y.coeff(-2 * r) == 0) continue;
      const HeisenbergLayer L = layer_from_dual(y);
      for (int t = 0; t < 40; ++t) {
        const Fql a = d(rng), b = d(rng);
        const DElem g1 = texp(make_lie(layer_lift(L, a), r, 2 * r + 1));
        const DElem g2 = texp(make_lie(layer_lift(L, b), r, 2 * r + 1));
        const DElem c = (g1 * g2 * inv(g1) * inv(g2)).truncated(2 * r + 1);
        if (pairing(tlog(c, r + 1, 2 * r + 1), y) != F.trace_fq_to_fp(F.mul(F.psi_constant(), beta_form(L, a, b))))
          return "forms differ";
      }
      if (++tested >= 25) break;
    }
    return "";
  });
  R.check("radicals", "radical of beta is 0 for l = 2 and the Hilbert 90 line for odd l", [&]() -> std::string {
    for (int y = 1; y < F.size(); ++y) {
      if (F.ell() == 2 && F.galois_trace(y) != 0) continue;
      const HeisenbergLayer L = make_layer(F, 1, y);
      const Subspace rad = radical(L);
      if (F.ell() == 2) {
        if (rad.dim() != 0) return "nonzero radical for l = 2";
      } else {
        if (rad.dim() != 1) return "radical dimension " + std::to_string(rad.dim());
        if (rad.elements != radical_hilbert90(L).elements) return "radical differs from the Hilbert 90 line";
      }
      const Subspace J = isotropic_complete(L);
      if (J.dim() != (F.ell() + 1) / 2) return "isotropic completion has the wrong dimension";
    }
    return "";
  });
}

void construction_suite(const FieldTower& F, const SuiteOptions& opt, std::vector<CheckResult>& out) {
  Runner R("construction", out);
  const std::uint64_t q = F.q();
  const int ell = F.ell();
  const int M = std::max(1, opt.m);
  R.check("datum_degrees", "inducing subgroup orders give degree d_m at every level", [&]() -> std::string {
    for (int m = 1; m <= std::max(M, 8); ++m) {
      const auto d = construct_inducing_datum(F, m, canonical_representative(F, m));
      if (d.formula_degree != d_m(q, ell, m)) return "level " + std::to_string(m);
    }
    return "";
  });
  R.check("monomiality", "characters are induced from linear ones except for l = 2, m = 2 mod 4",
          [&]() -> std::string {
            for (int m = 1; m <= std::max(M, 8); ++m) {
              const auto d = construct_inducing_datum(F, m, canonical_representative(F, m));
              if (d.monomial != (ell > 2 || m % 4 != 2)) return "level " + std::to_string(m);
            }
            return "";
          });
  R.check("orbit_count", "orbit count times characters per orbit equals a_m", [&]() -> std::string {
    const Census c = census(F, std::max(M, 8));
    for (const auto& L : c.levels)
      if (!L.ok) return "level " + std::to_string(L.m);
    return "";
  });
  for (int m = 1; m <= M; ++m) {
    R.check("explicit_level_" + std::to_string(m),
            "induced characters of level " + std::to_string(m) + " are irreducible of degree d_m, a_m of them",
            [&, m]() -> std::string {
              if (group_order(q, ell, m + 1) > opt.max_group) return "skipped: |G_{m+1}| exceeds --max-group";
              const QuotientGroup G = build_quotient_group(F, m + 1, opt.max_group);
              std::size_t total = 0;
              for (const auto& y : level_representatives(F, m, opt.max_orbit)) {
                const auto rep = induce_and_verify(G, construct_inducing_datum(F, m, y));
                total += rep.characters.size();
              }
              // Representatives lie in distinct orbits, so their characters are distinct.
              if (BigInt(total) != a_m(q, ell, m)) return "built " + std::to_string(total) + " characters";
              return "";
            });
  }
  R.check("class_count", "number of classes of G_{m+1} equals the sum of a_k, k <= m", [&]() -> std::string {
    int m = M;
    while (m >= 0 && group_order(q, ell, m + 1) > opt.max_group) --m;
    if (m < 0) return "skipped: no buildable group";
    const QuotientGroup G = build_quotient_group(F, m + 1, opt.max_group);
    BigInt s = 0;
    for (int k = 0; k <= m; ++k) s += a_m(q, ell, k);
    return BigInt(G.class_count()) == s ? "" : "classes " + std::to_string(G.class_count()) + " vs " + str(s);
  });
  if (ell > 2)
    R.check("heisenberg_lift", "Ind_J^{Gamma^1} is irreducible of degree q^{(l-1)/2}", [&]() -> std::string {
      if (group_order(q, ell, 3) / group_order(q, ell, 1) > opt.max_orbit / 10) return "skipped: Gamma^1 too large";
      const auto h = heisenberg_check(F, 1, canonical_representative(F, 2), opt.max_orbit / 10);
      BigInt e = 1;
      for (int i = 0; i < (ell - 1) / 2; ++i) e *= q;
      if (!h.linear_on_J || !h.norm_one || BigInt(h.degree) != e) return "lift check failed";
      return "";
    });
}

void zeta_suite(const FieldTower& F, const SuiteOptions&, std::vector<CheckResult>& out) {
  Runner R("zeta", out);
  const std::uint64_t q = F.q();
  const int ell = F.ell();
  R.check("telescoping", "sum_{k<=m} a_k d_k^2 = |G_{m+1}| for m <= 40",
          [&]() -> std::string { return telescoping_check(q, ell, 40) ? "" : "identity fails"; });
  R.check("exact_negative_two", "the exact partial sum at s = -2 is the group order",
          [&]() -> std::string {
            for (int M = 0; M <= 12; ++M)
              if (zeta_partial_sum_exact(q, ell, -2, M) != BigRational(group_order(q, ell, M + 1)))
                return "M = " + std::to_string(M);
            return "";
          });
  R.check("closed_form_vs_series", "closed form equals the Dirichlet series at s = 2 and s = 1 (M = 200)",
          [&]() -> std::string {
            for (double s : {2.0, 1.0}) {
              if (s <= 2.0 / ell) continue;
              const auto cf = zeta_closed_form(q, ell, {s, 0});
              const auto ps = zeta_partial_sum(q, ell, {s, 0}, 200);
              const double err = std::abs(cf - ps);
              if (err > 1e-12 * std::max(1.0, std::abs(cf))) {
                std::ostringstream os;
                os << "s = " << s << ": error " << err;
                return os.str();
              }
            }
            return "";
          });
  R.check("pole", "the closed form has its pole at s = 2/l", [&]() -> std::string {
    const auto p = pole(q, ell);
    if (p != boost::rational<long long>(2, ell)) return "pole located at wrong s";
    try {
      zeta_closed_form(q, ell, {2.0 / ell, 0});
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::PoleAt) return "";
    }
    return "no pole reported at 2/l";
  });
  R.check("abscissa", "terms a_m d_m^{-s} do not tend to 0 below 2/l and decay above", [&]() -> std::string {
    const double lo = 2.0 / ell - 0.1, hi = 2.0 / ell + 0.1;
    if (convergence_rate(q, ell, lo) <= 1.0 || convergence_rate(q, ell, hi) >= 1.0) return "rate on wrong side";
    return "";
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"arith", "orbits", "duality", "construction", "zeta"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const FieldTower& F, const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  if (suite == "all") {
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, F, opt);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (suite == "arith")
    arith_suite(F, opt, out);
  else if (suite == "orbits")
    orbit_suite(F, opt, out);
  else if (suite == "duality")
    duality_suite(F, opt, out);
  else if (suite == "construction")
    construction_suite(F, opt, out);
  else if (suite == "zeta")
    zeta_suite(F, opt, out);
  else
    raise(ErrorKind::ConfigError, "unknown suite '" + suite + "'");
  return out;
}

}  // namespace sl1d
