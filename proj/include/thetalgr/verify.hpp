#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thetalgr/json_io.hpp"

namespace thetalgr {

struct VerifyConfig {
  int n = 3;                  ///< largest rank exercised
  std::uint64_t seed = 0;
  long count = 0;             ///< random cases per rank; 0 selects each suite's default
  double tolerance = 1e-9;    ///< orbit-witness residual bound
};

struct SuiteReport {
  std::string suite;
  long checks = 0;
  bool passed = true;
  std::string failed_property;  ///< empty when passed
  Json counterexample;          ///< null when passed
};

/// weyl, lift, minors, factor, plucker, cells, orbits, closure, flow,
/// witness, boundary
const std::vector<std::string>& suite_names();

/// Throws Error(kDomain) for an unknown suite name.
SuiteReport run_suite(const std::string& name, const VerifyConfig& config);

Json to_json(const SuiteReport& r);

}  // namespace thetalgr
