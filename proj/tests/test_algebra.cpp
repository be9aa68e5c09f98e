#include <random>

#include "doctest.h"
#include "sl1d/algebra.hpp"
#include "sl1d/error.hpp"

using namespace sl1d;

namespace {

const FieldTower& T32() {
  static const FieldTower F(FieldTower::spec_for(3, 2));
  return F;
}
const FieldTower& T53() {
  static const FieldTower F(FieldTower::spec_for(5, 3));
  return F;
}

DElem random_elem(const FieldTower& F, std::mt19937& rng, int lo, int prec) {
  std::uniform_int_distribution<int> d(0, F.size() - 1);
  std::vector<Fql> cs;
  for (int e = lo; e < prec; ++e) cs.push_back(static_cast<Fql>(d(rng)));
  return DElem::from_coeffs(F, lo, cs, prec);
}

DElem random_unit(const FieldTower& F, std::mt19937& rng, int prec) {
  DElem x = random_elem(F, rng, 0, prec);
  std::uniform_int_distribution<int> d(1, F.size() - 1);
  return x - DElem::constant(F, x.coeff(0), prec) + DElem::constant(F, static_cast<Fql>(d(rng)), prec);
}

DElem traceless(const FieldTower& F, const DElem& x) {
  // x - (1/l) trd(x)
  int inv_ell = 1;
  while (inv_ell * F.ell() % F.p() != 1) ++inv_ell;
  return x - scale(trd(x), inv_ell).truncated(x.prec());
}

Fql non_fq(const FieldTower& F) {
  for (int x = 0; x < F.size(); ++x)
    if (!F.in_fq(x)) return static_cast<Fql>(x);
  return 0;
}

}  // namespace

TEST_CASE("defining relations") {
  const FieldTower& F = T32();
  const DElem nu = DElem::nu_power(F, 1);
  for (int t = 1; t < F.size(); ++t) {
    const DElem T = DElem::constant(F, t);
    CHECK(nu * T == DElem::monomial(F, 1, t));
    CHECK(T * nu == DElem::monomial(F, 1, F.frobenius(t, 1)));
  }
  const DElem one = DElem::one(F);
  CHECK((one + nu) * (one - nu) == one - DElem::pi_power(F, 1));
  std::mt19937 rng(1);
  const DElem pi = DElem::pi_power(F, 1);
  for (int i = 0; i < 50; ++i) {
    const DElem x = random_elem(F, rng, -2, 6);
    CHECK(pi * x == x * pi);
  }
}

TEST_CASE("ring axioms exhaustively mod P^2") {
  const FieldTower& F = T32();
  const auto all = enumerate_residues(F, 0, 2);
  REQUIRE(all.size() == 81);
  for (const auto& a : all)
    for (const auto& b : all) {
      const DElem ab = a * b;
      for (std::size_t k = 0; k < all.size(); k += 4) {
        const auto& c = all[k];
        REQUIRE(congruent(ab * c, a * (b * c)));
        REQUIRE(congruent(a * (b + c), a * b + a * c));
        REQUIRE(congruent((b + c) * a, b * a + c * a));
      }
    }
}

TEST_CASE("associativity and valuation at higher precision") {
  std::mt19937 rng(2);
  for (const FieldTower* F : {&T32(), &T53()}) {
    for (int i = 0; i < 200; ++i) {
      const DElem a = random_elem(*F, rng, -1, 6), b = random_elem(*F, rng, 1, 7), c = random_elem(*F, rng, 0, 5);
      CHECK(congruent((a * b) * c, a * (b * c)));
      if (!a.is_zero() && !b.is_zero() && !(a * b).is_zero()) CHECK(*val(a * b) == *val(a) + *val(b));
      const DElem s = a + c;
      if (!s.is_zero() && !a.is_zero() && !c.is_zero()) CHECK(*val(s) >= std::min(*val(a), *val(c)));
    }
  }
  const FieldTower& F = T32();
  CHECK(*val(DElem::pi_power(F, 1)) == boost::rational<int>(1));
  CHECK(*val(DElem::nu_power(F, 1)) == boost::rational<int>(1, 2));
  CHECK(*val(DElem::monomial(F, 3, 5)) == boost::rational<int>(3, 2));
  CHECK(!val(DElem::zero(F, 4)));
}

TEST_CASE("precision tracking") {
  const FieldTower& F = T32();
  const DElem x = DElem::one(F, 4);
  CHECK((DElem::nu_power(F, 1) * x).prec() == 5);
  CHECK((x + DElem::nu_power(F, 1)).prec() == 4);
  const FieldTower G(FieldTower::spec_for(3, 2));
  CHECK_THROWS_AS(x + DElem::one(G, 4), Error);
  CHECK(DElem::zero(F, 3).lo() == 3);
  CHECK(DElem::monomial(F, 5, 1, 4).is_zero());
}

TEST_CASE("inverse") {
  const FieldTower& F = T32();
  CHECK(inv(DElem::one(F)) == DElem::one(F));
  for (int t = 1; t < F.size(); ++t) CHECK(inv(DElem::constant(F, t)) == DElem::constant(F, F.pow(t, F.size() - 2)));
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    const DElem u = random_unit(F, rng, 6);
    CHECK(u * inv(u) == DElem::one(F, 6));
    CHECK(inv(u) * u == DElem::one(F, 6));
  }
  CHECK_THROWS_AS(inv(DElem::nu_power(F, 1)), Error);
  CHECK_THROWS_AS(inv(DElem::zero(F, 3)), Error);
  const DElem y = random_elem(F, rng, -3, 5) + DElem::monomial(F, -3, 1, 5);
  const DElem yi = inv_any(y);
  CHECK(yi.prec() == 5 + 6);
  CHECK((y * yi).truncated(2) == DElem::one(F, 2));
}

TEST_CASE("reduced trace") {
  const FieldTower& F = T32();
  CHECK(trd(DElem::nu_power(F, 1)).is_zero());
  CHECK(trd(DElem::one(F)) == DElem::constant(F, 2));
  const Fql g = F.generator();
  CHECK(trd(DElem::constant(F, g)) == DElem::constant(F, F.add(g, F.pow(g, 3))));
  CHECK(F.in_fq(trd(DElem::constant(F, g)).coeff(0)));
  std::mt19937 rng(4);
  for (const FieldTower* T : {&T32(), &T53()}) {
    for (int i = 0; i < 100; ++i) {
      const DElem x = random_elem(*T, rng, -2, 5), y = random_elem(*T, rng, 0, 7);
      CHECK(trd(x * y) == trd(y * x));
      CHECK(trd(commutator_bracket(x, y)).is_zero());
      const DElem g = random_unit(*T, rng, 8);
      CHECK(trd(g * x * inv(g)) == trd(x));
    }
  }
}

TEST_CASE("reduced norm") {
  const FieldTower& F = T32();
  CHECK(nrd(DElem::one(F)) == DElem::one(F));
  CHECK(nrd(DElem::nu_power(F, 1)) == -DElem::pi_power(F, 1));
  CHECK(nrd(DElem::nu_power(T53(), 1)) == DElem::pi_power(T53(), 1));
  for (int t = 1; t < F.size(); ++t) CHECK(nrd(DElem::constant(F, t)) == DElem::constant(F, F.galois_norm(t)));

  // Quaternion oracle: nrd(x0 + nu x1) = N(x0) - pi N(x1) for x0, x1 in L.
  std::mt19937 rng(5);
  const DElem nu = DElem::nu_power(F, 1), nui = DElem::nu_power(F, -1);
  auto random_L = [&](int prec) {
    std::uniform_int_distribution<int> d(0, F.size() - 1);
    std::vector<Fql> cs;
    for (int e = 0; e < prec; ++e) cs.push_back(e % 2 == 0 ? static_cast<Fql>(d(rng)) : 0);
    return DElem::from_coeffs(F, 0, cs);
  };
  for (int i = 0; i < 100; ++i) {
    const DElem x0 = random_L(8), x1 = random_L(8);
    const DElem N0 = x0 * (nui * x0 * nu), N1 = x1 * (nui * x1 * nu);
    CHECK(nrd(x0 + nu * x1) == N0 - DElem::pi_power(F, 1) * N1);
  }

  for (const FieldTower* T : {&T32(), &T53()}) {
    for (int i = 0; i < 60; ++i) {
      const int m = 3 + i % 5;
      const DElem x = random_unit(*T, rng, m), y = random_unit(*T, rng, m);
      const int c = ceil_div(m, T->ell());
      CHECK(nrd(x * y, c) == (nrd(x, c) * nrd(y, c)).truncated(c * T->ell()));
      const DElem a = random_elem(*T, rng, 1, m + 2), b = random_elem(*T, rng, -1, m + 2);
      if (!a.is_zero() && !b.is_zero()) {
        const DElem lhs = nrd(a * b), rhs = nrd(a) * nrd(b);
        const int k = std::min(lhs.prec(), rhs.prec());
        CHECK(lhs.truncated(k) == rhs.truncated(k));
      }
    }
  }
  // nrd(1 + P) lies in 1 + p, exhaustively mod P^2.
  for (const auto& w : enumerate_residues(F, 1, 2)) {
    const DElem n = nrd(DElem::one(F, 2) + w, 1);
    CHECK(n == DElem::one(F, 2));
  }
  CHECK_THROWS_AS(nrd(DElem::one(F, 4), 3), Error);
  CHECK_NOTHROW(nrd(DElem::one(F, 4), 2));
}

TEST_CASE("jump and classification") {
  const FieldTower& F = T32();
  const Fql w = non_fq(F);
  CHECK(!jump(DElem::pi_power(F, 1)).has_value());
  CHECK(*jump(DElem::nu_power(F, 1)) == 1);
  CHECK(*jump(DElem::monomial(F, 2, w)) == 2);
  CHECK(classify(DElem::pi_power(F, 1)) == Kind::Central);
  CHECK(classify(DElem::nu_power(F, 1)) == Kind::Ramified);
  CHECK(classify(DElem::constant(F, w)) == Kind::Unramified);
  CHECK_THROWS_AS(jump(DElem::pi_power(F, 1).truncated(5)), Error);

  std::mt19937 rng(6);
  for (const FieldTower* T : {&T32(), &T53()}) {
    for (int i = 0; i < 100; ++i) {
      const DElem y = random_elem(*T, rng, -2, 6);
      const JumpBound jb = jump_bound(y);
      if (!jb.determined) continue;
      std::vector<Fql> cen;
      for (int e = 0; e < 6; ++e) cen.push_back(e % T->ell() == 0 ? T->fq_elements()[e % T->q()] : 0);
      const DElem c = DElem::from_coeffs(*T, -T->ell(), cen, 6);
      CHECK(jump(y + c) == jump(y));
      const DElem g = random_unit(*T, rng, 6);
      CHECK(jump((g * y * inv(g)).truncated(6)) == jump(y));
    }
    int checked = 0;
    for (int i = 0; i < 300 && checked < 100; ++i) {
      const DElem y = traceless(*T, random_elem(*T, rng, -3, 6));
      if (y.is_zero()) continue;
      ++checked;
      CHECK(jump_traceless_check(y));
    }
    CHECK(checked == 100);
  }
}

TEST_CASE("ell-th roots of central units") {
  const FieldTower& F = T32();
  const DElem one = DElem::one(F);
  const DElem pi = DElem::pi_power(F, 1);
  CHECK(ell_th_root_unit(one) == one);
  CHECK(ell_th_root_unit(power(one + pi, 2)) == one + pi);
  const DElem u = (one + pi).truncated(8);
  const DElem xi = ell_th_root_unit(u);
  CHECK(power(xi, 2) == u);
  CHECK(is_central(xi));
  CHECK_THROWS_AS(ell_th_root_unit(DElem::nu_power(F, 1) + one), Error);
  CHECK_THROWS_AS(ell_th_root_unit(scale(one, 2)), Error);
  const FieldTower& G = T53();
  const DElem v = (DElem::one(G) + DElem::pi_power(G, 1) + scale(DElem::pi_power(G, 2), 3)).truncated(12);
  CHECK(power(ell_th_root_unit(v), 3) == v);
}

TEST_CASE("normalize to G1") {
  const FieldTower& F = T32();
  auto n1 = normalize_to_G1(DElem::one(F));
  CHECK(n1.h == DElem::one(F));
  CHECK(n1.t0 == 1);
  const Fql g = F.generator();
  auto n2 = normalize_to_G1(DElem::constant(F, g));
  CHECK(n2.t0 == g);
  CHECK(n2.h == DElem::one(F));
  std::mt19937 rng(7);
  for (const FieldTower* T : {&T32(), &T53()}) {
    for (int i = 0; i < 50; ++i) {
      const int m = 5;
      const DElem x = random_unit(*T, rng, m);
      const auto n = normalize_to_G1(x);
      CHECK((DElem::constant(*T, n.t0) * n.xi * n.h).truncated(m) == x);
      CHECK(n.h.coeff(0) == 1);
      CHECK(is_group_element(n.h, m));
      CHECK(is_central(n.xi));
    }
  }
  CHECK_THROWS_AS(normalize_to_G1(DElem::nu_power(F, 1)), Error);
}

TEST_CASE("conjugation of unramified elements into L") {
  const FieldTower& F = T32();
  const Fql w = non_fq(F);
  const DElem om = DElem::constant(F, w);
  auto [h0, y0] = conjugate_unramified_into_L(om);
  CHECK(y0 == om);
  CHECK(h0 == DElem::one(F, kExact));
  std::mt19937 rng(8);
  const int m = 4;
  for (int i = 0; i < 50; ++i) {
    const DElem g0 = normalize_to_G1(DElem::one(F, m) + random_elem(F, rng, 1, m)).h;
    const DElem y = (g0 * om * inv(g0)).truncated(m);
    auto [h, yL] = conjugate_unramified_into_L(y);
    CHECK((h * yL * inv(h)).truncated(m) == y);
    CHECK(is_group_element(h, m));
    for (int e = yL.lo(); e < yL.hi(); ++e)
      if (e % 2 != 0) CHECK(yL.coeff(e) == 0);
  }
  int count = 0;
  for (const auto& y : enumerate_residues(F, 0, 2)) {
    const JumpBound jb = jump_bound(y);
    if (!jb.determined || jb.value % 2 != 0) continue;
    ++count;
    auto [h, yL] = conjugate_unramified_into_L(y);
    CHECK((h * yL * inv(h)).truncated(2) == y);
    CHECK(yL.coeff(1) == 0);
  }
  CHECK(count == 54);
  CHECK_THROWS_AS(conjugate_unramified_into_L(DElem::nu_power(F, 1).truncated(3)), Error);

  const FieldTower& G = T53();
  for (int i = 0; i < 20; ++i) {
    const DElem y = DElem::constant(G, non_fq(G)).with_precision(5) + random_elem(G, rng, 1, 5);
    auto [h, yL] = conjugate_unramified_into_L(y);
    CHECK((h * yL * inv(h)).truncated(5) == y);
  }
}

TEST_CASE("truncated exp and log") {
  const FieldTower& F = T32();
  CHECK(texp(make_lie(DElem::zero(F), 1, 3)) == DElem::one(F, 3));
  CHECK(tlog(DElem::one(F, 3), 1, 3).x.is_zero());
  const auto g13 = enumerate_lie(F, 1, 3);
  CHECK(g13.size() == 27);
  for (const auto& x : g13) {
    const LieElem X{x, 1, 3};
    const DElem g = texp(X);
    CHECK(is_group_element(g, 3));
    CHECK(tlog(g, 1, 3).x == x);
  }
  const auto g24 = enumerate_lie(F, 2, 4);
  CHECK(g24.size() == 27);
  for (const auto& x : g24) {
    CHECK(tlog(texp({x, 2, 4}), 2, 4).x == x);
    for (const auto& y : g24) CHECK(texp({(x + y), 2, 4}) == (texp({x, 2, 4}) * texp({y, 2, 4})).truncated(4));
  }
  for (const auto& x : g13)
    for (const auto& y : g13) CHECK(bch_check({x, 1, 3}, {y, 1, 3}));
  CHECK_THROWS_AS(texp({DElem::zero(F), 1, 4}), Error);
  CHECK_THROWS_AS(make_lie(DElem::one(F), 0, 2), Error);
}
