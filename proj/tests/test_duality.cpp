#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "sl1d/duality.hpp"
#include "sl1d/error.hpp"
#include "sl1d/group.hpp"

using namespace sl1d;

namespace {

FieldTower tower(int q, int ell) { return FieldTower(FieldTower::spec_for(q, ell)); }

const std::pair<int, int> kWindows[] = {{1, 2}, {2, 3}, {2, 4}};

}  // namespace

TEST_CASE("psi") {
  const FieldTower F = tower(3, 2);
  CHECK(psi(DElem::one(F)) == 0);
  CHECK(psi(DElem::pi_power(F, 1)) == 0);
  const DElem pinv = DElem::pi_power(F, -1);
  CHECK(psi(pinv) != 0);
  CHECK((psi(pinv) * 3) % 3 == 0);
  CHECK(psi(pinv + pinv + pinv) == 0);
  CHECK(psi(pinv + pinv) == (2 * psi(pinv)) % 3);
  CHECK_THROWS_AS(psi(DElem::nu_power(F, -1)), Error);
  const FieldTower H = tower(9, 2);
  CHECK(psi(DElem::pi_power(H, -1)) != 0);
}

TEST_CASE("pairing: well defined, biadditive, invariant") {
  const FieldTower F = tower(3, 2);
  const QuotientGroup G = build_quotient_group(F, 4);
  std::mt19937 rng(5);
  for (auto [r, m] : kWindows) {
    const auto xs = enumerate_lie(F, r, m);
    const auto ys = enumerate_dual(F, r, m);
    CHECK(BigInt(xs.size()) == lie_layer_size(3, 2, r, m));
    CHECK(xs.size() == ys.size());
    const auto perturb_x = enumerate_lie(F, m, m + 2);
    const auto perturb_y = enumerate_lie(F, -r + 1, -r + 3);
    std::uniform_int_distribution<std::size_t> dx(0, xs.size() - 1), dy(0, ys.size() - 1);
    std::uniform_int_distribution<std::size_t> px(0, perturb_x.size() - 1), py(0, perturb_y.size() - 1);
    std::uniform_int_distribution<int> dg(0, G.size() - 1);
    for (int t = 0; t < 300; ++t) {
      const LieElem x = make_lie(xs[dx(rng)], r, m);
      const LieElem x2 = make_lie(xs[dx(rng)], r, m);
      const DualElement y = ys[dy(rng)];
      const DualElement y2 = ys[dy(rng)];
      const CharExp v = pairing(x, y);
      // Lifts: perturbing X by g^m or Y by g^{-r+1} changes nothing.
      const LieElem xp{x.x.exact_lift() + perturb_x[px(rng)].exact_lift(), r, m};
      const DualElement yp{y.y.exact_lift() + perturb_y[py(rng)].exact_lift(), r, m};
      CHECK(pairing(xp, yp) == v);
      CHECK(pairing(make_lie(x.x + x2.x, r, m), y) == (v + pairing(x2, y)) % 3);
      CHECK(pairing(x, make_dual(y.y + y2.y, r, m)) == (v + pairing(x, y2)) % 3);
      // Conjugation by g in G_4 acts on both windows through g mod P^{m - lo}.
      const DElem g = G.element(dg(rng)).with_precision(4);
      const DElem gi = inv(g);
      const LieElem gx = make_lie((g * x.x.with_precision(m) * gi).truncated(m), r, m);
      const DElem gl = g.with_precision(m);
      const DElem gy = gl * y.y.with_precision(-r + 1) * inv(gl);
      CHECK(pairing(gx, make_dual(gy, r, m)) == v);
    }
  }
  const auto x0 = make_lie(DElem::nu_power(F, 1), 1, 2);
  CHECK_THROWS_AS(pairing(x0, make_dual(DElem::zero(F), 2, 3)), Error);
}

TEST_CASE("pairing is non-degenerate on every window") {
  const FieldTower F = tower(3, 2);
  for (auto [r, m] : kWindows) {
    const auto xs = enumerate_lie(F, r, m);
    const auto ys = enumerate_dual(F, r, m);
    for (const auto& xe : xs) {
      if (xe.is_zero()) continue;
      const LieElem x = make_lie(xe, r, m);
      bool found = false;
      for (const auto& y : ys) found = found || pairing(x, y) != 0;
      CHECK(found);
      const DualElement w = nondegeneracy_witness(x);
      CHECK(pairing(x, w) == psi(DElem::pi_power(F, -1)));
    }
    CHECK(pairing(make_lie(xs.back(), r, m), make_dual(DElem::zero(F), r, m)) == 0);
  }
}

TEST_CASE("phi_y gives all characters of abelian layers") {
  const FieldTower F = tower(3, 2);
  for (auto [r, m] : kWindows) {
    if (m > 2 * r) continue;
    const auto xs = enumerate_lie(F, r, m);
    std::vector<DElem> gs;
    for (const auto& x : xs) gs.push_back(texp(make_lie(x, r, m)));
    std::set<std::vector<CharExp>> tables;
    const auto ys = enumerate_dual(F, r, m);
    for (const auto& y : ys) {
      const auto phi = phi_y_as_character(y);
      std::vector<CharExp> tab;
      for (const auto& g : gs) tab.push_back(phi(g));
      tables.insert(tab);
      // Homomorphism on the group layer.
      for (std::size_t a = 0; a < gs.size(); a += 2)
        for (std::size_t b = 0; b < gs.size(); b += 3)
          REQUIRE(phi((gs[a] * gs[b]).truncated(m)) == (phi(gs[a]) + phi(gs[b])) % 3);
    }
    CHECK(tables.size() == ys.size());
    if (r == 2 && m == 4) CHECK(tables.size() == 27);
  }
  CHECK_THROWS_AS(phi_y_as_character(make_dual(DElem::zero(F), 1, 3)), Error);
}

TEST_CASE("beta form equals the commutator form") {
  const FieldTower F = tower(3, 2);
  const int r = 1;
  for (const auto& y : enumerate_dual(F, r + 1, 2 * r + 1)) {
    if (y.y.coeff(-2 * r) == 0) continue;
    const HeisenbergLayer L = layer_from_dual(y);
    for (int a = 0; a < F.size(); ++a)
      for (int b = 0; b < F.size(); ++b) {
        const DElem g1 = texp(make_lie(layer_lift(L, a), r, 2 * r + 1));
        const DElem g2 = texp(make_lie(layer_lift(L, b), r, 2 * r + 1));
        const DElem c = (g1 * g2 * inv(g1) * inv(g2)).truncated(2 * r + 1);
        const CharExp B = pairing(tlog(c, r + 1, 2 * r + 1), y);
        const Fql beta = beta_form(L, a, b);
        REQUIRE(B == F.trace_fq_to_fp(F.mul(F.psi_constant(), beta)));
      }
  }
}

TEST_CASE("radicals") {
  for (int q : {3, 5}) {
    const FieldTower F = tower(q, 2);
    int admissible = 0;
    for (int y = 1; y < F.size(); ++y) {
      if (F.galois_trace(y) != 0) continue;
      ++admissible;
      for (int r : {1, 3}) {
        const HeisenbergLayer L = make_layer(F, r, y);
        CHECK(radical(L).dim() == 0);
        CHECK(isotropic_complete(L).dim() == 1);
        const LiftDatum d = heisenberg_lift_data(L);
        CHECK(d.extension_count == 1);
        CHECK(d.lift_degree == q);
      }
    }
    CHECK(admissible == q - 1);
  }
  const FieldTower F = tower(5, 3);
  int lines = 0;
  for (int y = 1; y < F.size(); ++y) {
    for (int r : {1, 2}) {
      const HeisenbergLayer L = make_layer(F, r, y);
      const Subspace R = radical(L);
      CHECK(R.dim() == 1);
      CHECK(R.elements == radical_hilbert90(L).elements);
      const Subspace J = isotropic_complete(L), J2 = isotropic_complete(L, true);
      CHECK(J.dim() == 2);
      CHECK(J2.dim() == 2);
      for (Fql a : J.elements)
        for (Fql b : J.elements) REQUIRE(beta_form(L, a, b) == 0);
      const LiftDatum d = heisenberg_lift_data(L);
      CHECK(d.extension_count == 5);
      CHECK(d.lift_degree == 5);
      lines += r == 1;
    }
  }
  CHECK(lines == 124);
  CHECK_THROWS_AS(make_layer(F, 1, 0), Error);
  CHECK_THROWS_AS(make_layer(F, 3, 1), Error);
  // l = 2 with y' in F_q: beta vanishes.
  const FieldTower H = tower(3, 2);
  CHECK_THROWS_AS(radical(make_layer(H, 1, 1)), Error);
  for (Fql a = 0; a < 9; ++a)
    for (Fql b = 0; b < 9; ++b) {
      const HeisenbergLayer L = make_layer(H, 1, H.traceless()[1]);
      CHECK(beta_form(L, a, a) == 0);
      CHECK(beta_form(L, a, b) == H.neg(beta_form(L, b, a)));
    }
}
