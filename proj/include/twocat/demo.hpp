#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twocat/twovect.hpp"

// Worked example: f, g, l : 3 -> 2 and h, k : 2 -> 1 with
// theta : f => g, eta : g => l, xi : h => k. The entries f11, g12, l22, h11,
// k11 are split into components; every other entry is a single summand.
namespace twocat::demo {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Example {
  OneMor f, g, l, h, k;
  TwoMor theta, eta, xi;
};

/// Component dimensions are fixed; matrix entries are seeded rationals.
Example make_example(std::uint64_t seed = 7);

struct DemoResult {
  Example ex;
  OneMor hf;
  TwoMor eta_theta;
  TwoMor xi_theta;
  std::vector<Check> checks;
  std::string text;  ///< annotated printout

  bool ok() const;
};

DemoResult run_demo(std::uint64_t seed = 7);

}  // namespace twocat::demo
