#include "doctest.h"
#include "sl1d/error.hpp"
#include "sl1d/verify.hpp"

using namespace sl1d;

TEST_CASE("verification suites pass on the smallest algebra") {
  const FieldTower F(FieldTower::spec_for(3, 2));
  const auto results = run_suite("all", F, SuiteOptions{});
  CHECK(results.size() > 20);
  for (const auto& r : results) CHECK_MESSAGE(r.pass, std::string(r.suite + "/" + r.name + ": " + r.detail));
}

TEST_CASE("arithmetic suite passes for l = 3") {
  const FieldTower F(FieldTower::spec_for(5, 3));
  for (const auto& r : run_suite("arith", F, SuiteOptions{}))
    CHECK_MESSAGE(r.pass, std::string(r.suite + "/" + r.name + ": " + r.detail));
}

TEST_CASE("unknown suite") {
  const FieldTower F(FieldTower::spec_for(3, 2));
  CHECK_THROWS_AS(run_suite("nope", F, SuiteOptions{}), Error);
  CHECK(suite_names().size() == 5);
}
