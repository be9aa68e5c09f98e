#include <set>

#include "doctest.h"
#include "sl1d/error.hpp"
#include "sl1d/group.hpp"
#include "sl1d/zeta.hpp"

using namespace sl1d;

namespace {
FieldTower tower(int q, int ell) { return FieldTower(FieldTower::spec_for(q, ell)); }
}  // namespace

TEST_CASE("quotient group orders and axioms") {
  const FieldTower F = tower(3, 2);
  const int orders[] = {4, 36, 108, 972};
  for (int m = 1; m <= 4; ++m) {
    const QuotientGroup G = build_quotient_group(F, m);
    CHECK(G.size() == orders[m - 1]);
    CHECK(G.closure(G.generators()).size() == static_cast<std::size_t>(G.size()));
    for (int i = 0; i < G.size(); ++i) {
      REQUIRE(G.mul(i, G.inv(i)) == 0);
      REQUIRE(G.mul(0, i) == i);
      REQUIRE(is_group_element(G.element(i), m));
    }
    if (m <= 3)
      for (int a = 0; a < G.size(); a += 5)
        for (int b = 0; b < G.size(); b += 3)
          for (int c = 0; c < G.size(); c += 7) REQUIRE(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
  }
  CHECK(build_quotient_group(F, 1).is_abelian());
  CHECK_FALSE(build_quotient_group(F, 2).is_abelian());
  const FieldTower H = tower(5, 3);
  CHECK(build_quotient_group(H, 2).size() == 3875);
  CHECK_THROWS_AS(build_quotient_group(H, 3), Error);
}

TEST_CASE("class counts match cumulative character counts") {
  const FieldTower F = tower(3, 2);
  const int expect[] = {4, 12, 20, 44};
  for (int m = 1; m <= 4; ++m) {
    const QuotientGroup G = build_quotient_group(F, m);
    CHECK(G.class_count() == expect[m - 1]);
    // Class sizes partition the group and divide its order.
    std::size_t total = 0;
    for (const auto& c : G.classes()) {
      total += c.size();
      CHECK(G.size() % c.size() == 0);
    }
    CHECK(total == static_cast<std::size_t>(G.size()));
  }
  const FieldTower H = tower(5, 3);
  const QuotientGroup G = build_quotient_group(H, 2);
  CHECK(G.class_count() == 35);
}

TEST_CASE("congruence subgroups and abelianization") {
  const FieldTower F = tower(3, 2);
  for (int m = 2; m <= 4; ++m) {
    const QuotientGroup G = build_quotient_group(F, m);
    for (int k = 1; k <= m; ++k) {
      const auto S = G.congruence_subgroup(k);
      CHECK(BigInt(S.size()) * group_order(3, 2, k) == G.size());
      CHECK(G.normal_closure(S) == S);
    }
    // Linear characters: |G/[G,G]| = (q^l - 1)/(q - 1).
    CHECK(G.size() / static_cast<int>(G.commutator_subgroup().size()) == 4);
  }
  const FieldTower T = tower(5, 3);
  const QuotientGroup H = build_quotient_group(T, 2);
  CHECK(H.size() / static_cast<int>(H.commutator_subgroup().size()) == 31);
  CHECK(H.exponent() == 155);
}
