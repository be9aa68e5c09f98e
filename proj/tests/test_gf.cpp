#include <random>

#include "doctest.h"
#include "sl1d/error.hpp"
#include "sl1d/gf.hpp"

using namespace sl1d;

namespace {

FieldTower tower(int q, int ell) { return FieldTower(FieldTower::spec_for(q, ell)); }

// Product computed directly on coordinate polynomials, bypassing the log tables.
Fql naive_mul(const FieldTower& F, Fql a, Fql b) {
  Poly r = fp_poly::mulmod(fp_poly::trim(F.coords(a)), fp_poly::trim(F.coords(b)), F.modulus_qell(), F.p());
  return F.from_coords(r);
}

Fql naive_pow(const FieldTower& F, Fql a, std::uint64_t e) {
  Poly r = fp_poly::powmod(fp_poly::trim(F.coords(a)), e, F.modulus_qell(), F.p());
  return F.from_coords(r);
}

}  // namespace

TEST_CASE("conway polynomials match published tables") {
  struct Row {
    int p, n;
    Poly c;
  };
  const std::vector<Row> rows = {
      {3, 1, {1, 1}},
      {3, 2, {2, 2, 1}},
      {3, 3, {1, 2, 0, 1}},
      {3, 4, {2, 0, 0, 2, 1}},
      {3, 5, {1, 2, 0, 0, 0, 1}},
      {3, 6, {2, 2, 1, 0, 2, 0, 1}},
      {5, 1, {3, 1}},
      {5, 2, {2, 4, 1}},
      {5, 3, {3, 3, 0, 1}},
      {5, 4, {2, 4, 4, 0, 1}},
      {7, 1, {4, 1}},
      {7, 2, {3, 6, 1}},
      {7, 3, {4, 0, 6, 1}},
      {11, 2, {2, 7, 1}},
      {13, 2, {2, 12, 1}},
  };
  for (const auto& r : rows) {
    CAPTURE(r.p);
    CAPTURE(r.n);
    CHECK(fp_poly::conway(r.p, r.n) == r.c);
  }
}

TEST_CASE("field arithmetic agrees with coordinate polynomial arithmetic") {
  for (auto [q, ell] : {std::pair{3, 2}, std::pair{5, 3}, std::pair{9, 2}}) {
    const FieldTower F = tower(q, ell);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(0, F.size() - 1);
    const int trials = F.size() <= 81 ? F.size() * F.size() : 4000;
    for (int t = 0; t < trials; ++t) {
      Fql a = F.size() <= 81 ? static_cast<Fql>(t / F.size()) : static_cast<Fql>(d(rng));
      Fql b = F.size() <= 81 ? static_cast<Fql>(t % F.size()) : static_cast<Fql>(d(rng));
      REQUIRE(F.mul(a, b) == naive_mul(F, a, b));
      if (a != 0) REQUIRE(F.mul(a, F.inv(a)) == 1);
      REQUIRE(F.sub(F.add(a, b), b) == a);
    }
  }
}

TEST_CASE("frobenius") {
  const FieldTower F = tower(3, 2);
  const Fql g = F.generator();
  CHECK(F.frobenius(g, 1) == naive_pow(F, g, 3));
  for (int x = 0; x < F.size(); ++x) {
    CHECK(F.frobenius(x, 0) == static_cast<Fql>(x));
    CHECK(F.frobenius(x, 2) == static_cast<Fql>(x));
    CHECK((F.frobenius(x, 1) == static_cast<Fql>(x)) == F.in_fq(x));
    CHECK(F.frobenius(F.frobenius(x, 1), -1) == static_cast<Fql>(x));
  }
  const FieldTower G = tower(5, 3);
  for (int x = 0; x < G.size(); ++x) {
    CHECK((G.frobenius(x, 1) == static_cast<Fql>(x)) == G.in_fq(x));
    for (int y = 0; y < G.size(); y += 7) {
      CHECK(G.frobenius(G.mul(x, y), 1) == G.mul(G.frobenius(x, 1), G.frobenius(y, 1)));
      CHECK(G.frobenius(G.add(x, y), 2) == G.add(G.frobenius(x, 2), G.frobenius(y, 2)));
    }
  }
}

TEST_CASE("trace and norm") {
  const FieldTower F = tower(3, 2);
  CHECK(F.galois_trace(0) == 0);
  CHECK(F.galois_trace(1) == 2);
  const FieldTower G = tower(5, 3);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(0, G.size() - 1);
  for (int i = 0; i < 20; ++i) {
    Fql x = static_cast<Fql>(d(rng));
    Fql direct = G.add(G.add(x, naive_pow(G, x, 5)), naive_pow(G, x, 25));
    CHECK(G.galois_trace(x) == direct);
    CHECK(G.in_fq(G.galois_trace(x)));
    CHECK(G.galois_trace(G.frobenius(x, 1)) == G.galois_trace(x));
    CHECK(G.galois_norm(G.frobenius(x, 1)) == G.galois_norm(x));
  }
  auto count_norm_one = [](const FieldTower& T) {
    int c = 0;
    for (int x = 1; x < T.size(); ++x) c += T.galois_norm(x) == 1;
    return c;
  };
  CHECK(count_norm_one(F) == 4);
  CHECK(count_norm_one(G) == 31);
  for (int x = 1; x < G.size(); ++x)
    CHECK(G.galois_norm(x) == G.pow(x, (G.size() - 1) / (G.q() - 1)));
}

TEST_CASE("trace pairing is non-degenerate") {
  for (auto [q, ell] : {std::pair{3, 2}, std::pair{5, 3}}) {
    const FieldTower F = tower(q, ell);
    for (int x = 1; x < F.size(); ++x) {
      bool found = false;
      for (int y = 0; y < F.size() && !found; ++y) found = F.galois_trace(F.mul(x, y)) != 0;
      CHECK(found);
    }
  }
}

TEST_CASE("hilbert 90 fibers") {
  const FieldTower F = tower(3, 2);
  CHECK(F.hilbert90_fiber(1, 1).size() == 2);
  for (int u = 1; u < F.size(); ++u)
    if (F.galois_norm(u) == 1) CHECK(F.hilbert90_fiber(u, 1).size() == 2);
  const FieldTower G = tower(5, 3);
  for (int u = 1; u < G.size(); ++u) {
    if (G.galois_norm(u) == 1)
      CHECK(G.hilbert90_fiber(u, 2).size() == 4);
    else
      CHECK_THROWS_AS(G.hilbert90_fiber(u, 2), Error);
  }
}

TEST_CASE("tower embedding and custom moduli") {
  const FieldTower F = tower(9, 2);
  CHECK(F.q() == 9);
  CHECK(F.size() == 81);
  int fixed = 0;
  for (int x = 0; x < F.size(); ++x) fixed += F.in_fq(x);
  CHECK(fixed == 9);
  for (Fql a : F.fq_elements())
    for (Fql b : F.fq_elements()) CHECK(F.in_fq(F.mul(a, b)));
  CHECK(F.embed(F.fq_coords(F.fq_elements()[5])) == F.fq_elements()[5]);

  TowerSpec s;
  s.p = 3;
  s.f = 1;
  s.ell = 2;
  s.modulus_qell = {1, 0, 1};  // x^2 + 1: irreducible, not primitive
  const FieldTower H(s);
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) CHECK(H.mul(a, b) == naive_mul(H, a, b));

  s.modulus_qell = {2, 0, 1};  // x^2 + 2 = (x-1)(x+1)
  CHECK_THROWS_AS(FieldTower{s}, Error);
}

TEST_CASE("parameter guards") {
  CHECK_THROWS_AS(FieldTower::spec_for(4, 3), Error);
  CHECK_THROWS_AS(FieldTower(FieldTower::spec_for(3, 3)), Error);
  CHECK_THROWS_AS(FieldTower(FieldTower::spec_for(5, 4)), Error);
  CHECK(tower(7, 3).iota() == 3);
  CHECK(tower(5, 3).iota() == 1);
  CHECK(tower(3, 2).iota() == 2);
  CHECK(tower(9, 2).psi_constant() != 0);
  CHECK(tower(3, 2).psi_constant() == 1);
}
