// Acceptance run: one PASS/FAIL line per criterion. Exit status 1 if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "sl1d/construction.hpp"
#include "sl1d/duality.hpp"
#include "sl1d/error.hpp"
#include "sl1d/group.hpp"
#include "sl1d/orbits.hpp"
#include "sl1d/zeta.hpp"

using namespace sl1d;

namespace {

FieldTower tower(int q, int ell) { return FieldTower(FieldTower::spec_for(q, ell)); }

template <class... T>
std::string cat(const T&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<std::string()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = true;
  try {
    detail = body();
  } catch (const Failure& f) {
    pass = false;
    detail = f.what;
  } catch (const std::exception& e) {
    pass = false;
    detail = cat("exception: ", e.what());
  }
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (pass && sec > limit_seconds) {
    pass = false;
    detail = cat("runtime ", sec, " s exceeds ", limit_seconds, " s; ", detail);
  }
  failures += !pass;
  std::cout << (pass ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << std::fixed;
  std::cout.precision(2);
  std::cout << sec << " s)";
  std::cout.unsetf(std::ios::fixed);
  if (!detail.empty()) std::cout << ": " << detail;
  std::cout << std::endl;
}

Cyclo inner(const QuotientGroup& G, const std::vector<Cyclo>& a, const std::vector<Cyclo>& b) {
  const auto& cls = G.classes();
  Cyclo s(a.front().order());
  for (std::size_t c = 0; c < cls.size(); ++c) s += (a[c] * b[c].conj()).scaled(static_cast<long long>(cls[c].size()));
  return s;
}

}  // namespace

int main() {
  criterion(1, "group orders of G_m at (3,2), m = 1..4", 10, [] {
    const FieldTower F = tower(3, 2);
    const int expect[] = {4, 36, 108, 972};
    std::string got;
    for (int m = 1; m <= 4; ++m) {
      const QuotientGroup G = build_quotient_group(F, m);
      require(G.size() == expect[m - 1], cat("m=", m, ": order ", G.size()));
      require(BigInt(G.size()) == group_order(3, 2, m), cat("m=", m, ": formula ", group_order(3, 2, m)));
      got += cat(m == 1 ? "" : ", ", G.size());
    }
    return "orders " + got;
  });

  criterion(2, "class counts of G_m at (3,2) equal cumulative character counts", 60, [] {
    const FieldTower F = tower(3, 2);
    std::string got;
    for (int m = 2; m <= 4; ++m) {
      const QuotientGroup G = build_quotient_group(F, m);
      BigInt sum = 0;
      for (int k = 0; k <= m - 1; ++k) sum += a_m(3, 2, k);
      require(BigInt(G.class_count()) == sum, cat("m=", m, ": ", G.class_count(), " classes, expected ", sum));
      got += cat(m == 2 ? "" : ", ", G.class_count());
    }
    require(a_m(3, 2, 0) == 4 && a_m(3, 2, 1) == 8 && a_m(3, 2, 2) == 8 && a_m(3, 2, 3) == 24, "a-values");
    return "classes " + got;
  });

  criterion(3, "sum_{k<=m} a_k d_k^2 = |G_{m+1}| for m <= 40", 1, [] {
    for (auto [q, l] : {std::pair{3, 2}, {5, 3}, {7, 3}, {3, 5}}) {
      require(telescoping_check(q, l, 40), cat("(", q, ",", l, ")"));
      // Both iota regimes appear: iota = l for (7,3), iota = 1 otherwise.
    }
    require(iota(7, 3) == 3 && iota(5, 3) == 1 && iota(3, 2) == 2 && iota(3, 5) == 1, "iota values");
    return "4 parameter pairs, 41 levels each";
  });

  criterion(4, "orbit formulas and G-class splitting on residues mod P^2 at (3,2)", 120, [] {
    const FieldTower F = tower(3, 2);
    int cases = 0, ramified_splits = 0;
    for (int a = 0; a < F.size(); ++a)
      for (int b = 0; b < F.size(); ++b) {
        const DElem y = DElem::from_coeffs(F, 0, {Fql(a), Fql(b)});
        const JumpBound jb = jump_bound(y);
        if (jb.value >= kExact) continue;
        for (int m = jb.value + 1; m <= jb.value + 2; ++m) {
          for (Acting act : {Acting::Ounits, Acting::G, Acting::G1})
            require(BigInt(brute_force_orbit(y, m, act).size()) == orbit_size(y, m, act),
                    cat(y.key(), " m=", m, " ", acting_name(act)));
          const auto split = split_into_G_orbits(y, m);
          const OrbitReport r = orbit_size_G(y, m);
          for (auto s : split) require(BigInt(s) == r.formula_size, cat(y.key(), " m=", m, ": unequal G-classes"));
          if (classify(y) == Kind::Ramified) {
            require(static_cast<int>(split.size()) == F.iota(), cat(y.key(), " m=", m, ": split ", split.size()));
            ++ramified_splits;
          } else {
            require(static_cast<int>(split.size()) == *r.splitting_count, cat(y.key(), " m=", m));
          }
          ++cases;
        }
      }
    return cat(cases, " (y, m) pairs, ", ramified_splits, " ramified splittings into 2");
  });

  criterion(5, "exp/log inverse on g^1_3, g^2_4; BCH and commutator identities on g^1_3", 30, [] {
    const FieldTower F = tower(3, 2);
    const auto g13 = enumerate_lie(F, 1, 3), g24 = enumerate_lie(F, 2, 4);
    for (const auto& x : g13) require(tlog(texp({x, 1, 3}), 1, 3).x == x, "g^1_3 log(exp x) != x");
    for (const auto& x : g24) require(tlog(texp({x, 2, 4}), 2, 4).x == x, "g^2_4 log(exp x) != x");
    int group_layer = 0;
    const QuotientGroup G3 = build_quotient_group(F, 3);
    for (const auto& g : G3.elements())
      if (g.truncated(1) == DElem::one(F, 1)) {
        require(texp(tlog(g, 1, 3)) == g, "exp(log g) != g on G^1_3");
        ++group_layer;
      }
    require(group_layer == 27, cat("G^1_3 has ", group_layer, " elements"));
    std::size_t pairs = 0;
    for (const auto& x : g13)
      for (const auto& y : g13) {
        require(bch_check({x, 1, 3}, {y, 1, 3}), "BCH/commutator identity");
        ++pairs;
      }
    return cat(g13.size(), " + ", g24.size(), " Lie elements, ", group_layer, " group elements, ", pairs, " pairs");
  });

  criterion(6, "pairing non-degenerate on windows (1,2), (2,3), (2,4); phi_y gives every layer character", 60, [] {
    const FieldTower F = tower(3, 2);
    for (auto [r, m] : {std::pair{1, 2}, {2, 3}, {2, 4}}) {
      const auto ys = enumerate_dual(F, r, m);
      for (const auto& xe : enumerate_lie(F, r, m)) {
        if (xe.is_zero()) continue;
        bool found = false;
        const LieElem x = make_lie(xe, r, m);
        for (const auto& y : ys) found = found || pairing(x, y) != 0;
        require(found, cat("degenerate at window (", r, ",", m, ")"));
      }
    }
    std::string counts;
    for (auto [r, m] : {std::pair{1, 2}, {2, 3}, {2, 4}}) {
      std::vector<DElem> gs;
      for (const auto& x : enumerate_lie(F, r, m)) gs.push_back(texp(make_lie(x, r, m)));
      std::set<std::vector<CharExp>> tables;
      const auto ys = enumerate_dual(F, r, m);
      for (const auto& y : ys) {
        const auto phi = phi_y_as_character(y);
        std::vector<CharExp> tab;
        for (const auto& g : gs) tab.push_back(phi(g));
        for (std::size_t a = 0; a < gs.size(); ++a)
          for (std::size_t b = 0; b < gs.size(); b += 5)
            require(phi((gs[a] * gs[b]).truncated(m)) == (phi(gs[a]) + phi(gs[b])) % 3, "phi_y not a homomorphism");
        tables.insert(tab);
      }
      require(tables.size() == ys.size() && BigInt(ys.size()) == lie_layer_size(3, 2, r, m),
              cat("window (", r, ",", m, "): ", tables.size(), " distinct of ", ys.size()));
      counts += cat(counts.empty() ? "" : ", ", tables.size());
    }
    return "distinct characters " + counts;
  });

  criterion(7, "radical dimension 0 for l = 2 (q = 3, 5) and the Hilbert 90 line for l = 3, q = 5", 5, [] {
    int l2 = 0;
    for (int q : {3, 5}) {
      const FieldTower F = tower(q, 2);
      for (int y = 1; y < F.size(); ++y) {
        if (F.galois_trace(y) != 0) continue;
        require(radical(make_layer(F, 1, y)).dim() == 0, cat("q=", q, " y=", y));
        ++l2;
      }
    }
    const FieldTower F = tower(5, 3);
    int l3 = 0;
    for (int y = 1; y < F.size(); ++y) {
      const HeisenbergLayer L = make_layer(F, 1, y);
      const Subspace R = radical(L);
      require(R.dim() == 1, cat("y=", y, ": dim ", R.dim()));
      require(R.elements == radical_hilbert90(L).elements, cat("y=", y, ": not the Hilbert 90 line"));
      ++l3;
    }
    require(l3 == 124, "count");
    return cat(l2, " admissible y' for l = 2, ", l3, " for l = 3");
  });

  criterion(8, "end-to-end construction at (3,2), m = 1..3, every orbit representative", 600, [] {
    const FieldTower F = tower(3, 2);
    const std::map<int, long long> deg = {{1, 2}, {2, 3}, {3, 6}};
    std::string summary;
    for (int m = 1; m <= 3; ++m) {
      const QuotientGroup G = build_quotient_group(F, m + 1);
      std::vector<std::vector<Cyclo>> all;
      const auto reps = level_representatives(F, m);
      for (const auto& Y : reps) {
        const auto rep = induce_and_verify(G, construct_inducing_datum(F, m, Y));
        require(rep.norm_one && rep.level_exact && rep.degree == deg.at(m),
                cat("m=", m, " Y=", rep.representative, ": degree ", rep.degree));
        for (const auto& chi : rep.characters) {
          require(inner(G, chi, chi).equals_integer(G.size()), cat("m=", m, ": [chi,chi] != 1"));
          require(chi[G.class_of(0)].equals_integer(deg.at(m)), cat("m=", m, ": chi(1)"));
          all.push_back(chi);
        }
      }
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
          require(inner(G, all[i], all[j]).equals_integer(0), cat("m=", m, ": characters not distinct"));
      require(BigInt(all.size()) == a_m(3, 2, m), cat("m=", m, ": ", all.size(), " characters"));
      summary += cat(summary.empty() ? "" : "; ", "m=", m, ": ", reps.size(), " reps, ", all.size(), " chars of degree ",
                     deg.at(m));
    }
    return summary;
  });

  criterion(9, "zeta closed form vs 200-term series at (3,2) s=2 and (5,3) s=1; pole at 2/l", 60, [] {
    double worst = 0;
    for (auto [q, l, s] : {std::tuple{3, 2, 2.0}, {5, 3, 1.0}}) {
      const auto cf = zeta_closed_form(q, l, s);
      const auto ps = zeta_partial_sum(q, l, s, 200);
      const double err = std::abs(cf - ps);
      require(err <= 1e-12, cat("(", q, ",", l, ") s=", s, ": error ", err));
      worst = std::max(worst, err);
    }
    for (auto [q, l] : {std::pair{3, 2}, {5, 3}, {7, 3}, {3, 5}}) {
      const auto p = pole(q, l);
      require(p == boost::rational<long long>(2, l), cat("(", q, ",", l, "): pole ", p));
      bool threw = false;
      try {
        zeta_closed_form(q, l, 2.0 / l);
      } catch (const Error& e) {
        threw = e.kind() == ErrorKind::PoleAt;
      }
      require(threw, cat("(", q, ",", l, "): no pole reported at 2/l"));
      const double near = std::abs(zeta_closed_form(q, l, 2.0 / l + 1e-6));
      require(near > 1e4, cat("(", q, ",", l, "): |zeta| = ", near, " next to the pole"));
      require(std::isfinite(std::abs(zeta_closed_form(q, l, 2.0 / l + 0.5))), "finite right of the pole");
    }
    return cat("max error ", worst, "; pole 2/l at 4 parameter pairs");
  });

  criterion(10, "monomiality: linear inducing characters at l = 3 and (3,2) m = 1, 3, 4; m = 2 extends first", 600, [] {
    int formula = 0;
    for (int q : {5, 7}) {
      const FieldTower F = tower(q, 3);
      for (int m = 1; m <= 12; ++m) {
        const auto d = construct_inducing_datum(F, m, canonical_representative(F, m));
        require(d.monomial, cat("(", q, ",3) m=", m, ": not monomial"));
        require(d.subgroup.order * d.predicted_degree == d.group_order,
                cat("(", q, ",3) m=", m, ": index of the linear subgroup is not the degree"));
        ++formula;
      }
    }
    {
      const FieldTower F = tower(5, 3);
      const auto h = heisenberg_check(F, 1, canonical_representative(F, 2));
      require(h.linear_on_J && h.norm_one && h.degree == 5 && h.isotropic_dim == 2, "(5,3) Heisenberg lift from J");
      const QuotientGroup G = build_quotient_group(F, 2);
      for (const auto& Y : level_representatives(F, 1)) {
        const auto rep = induce_and_verify(G, construct_inducing_datum(F, 1, Y));
        require(rep.monomial && rep.linear_extensions >= 1 && rep.norm_one, "(5,3) m=1 explicit");
      }
    }
    const FieldTower F = tower(3, 2);
    for (int m = 1; m <= 4; ++m) {
      const QuotientGroup G = build_quotient_group(F, m + 1);
      const auto reps = level_representatives(F, m);
      for (const auto& Y : reps) {
        const auto d = construct_inducing_datum(F, m, Y);
        const auto rep = induce_and_verify(G, d);
        if (m == 2) {
          require(!d.monomial && !rep.monomial && rep.extension_values > 0,
                  "(3,2) m=2: datum does not report the extension step");
        } else {
          require(d.monomial && rep.monomial && rep.linear_extensions >= 1, cat("(3,2) m=", m, ": not linear"));
          require(static_cast<long long>(rep.subgroup_order) * rep.degree == G.size(),
                  cat("(3,2) m=", m, ": subgroup order ", rep.subgroup_order));
        }
      }
    }
    return cat(formula, " formula-level data at l = 3, explicit checks at (5,3) and (3,2)");
  });

  std::cout << (failures == 0 ? "ALL PASS" : cat(failures, " FAILED")) << std::endl;
  return failures == 0 ? 0 : 1;
}
