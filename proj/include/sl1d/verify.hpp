#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl1d/gf.hpp"

namespace sl1d {

struct CheckResult {
  std::string suite;
  std::string name;
  std::string claim;  ///< the property being checked
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteOptions {
  int m = 2;                              ///< highest level / precision exercised
  std::uint64_t max_group = 3'000;        ///< explicit groups larger than this are skipped
  std::uint64_t max_orbit = 1'000'000;    ///< orbit and enumeration guard
  std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_names();
/// Runs one suite ("arith", "orbits", "duality", "construction", "zeta") or "all".
/// ConfigError for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, const FieldTower& F, const SuiteOptions& opt);

}  // namespace sl1d
