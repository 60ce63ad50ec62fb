#pragma once

#include <string>
#include <vector>

#include "polybound/mpoly.hpp"
#include "polybound/rational.hpp"

namespace polybound {

// Catalog entry: exact coefficients, the global minimum over [-1,1]^2 (which
// is also the minimum over the unit ball: every minimizer lies inside it),
// and the minimizers themselves. Construction verifies f(minimizer) = f_min
// exactly.
struct TestFunction {
  std::string name;
  MPoly poly;
  Rat f_min;
  std::vector<std::vector<Rat>> minimizers;
};

const std::vector<std::string>& test_function_names();
TestFunction test_function(const std::string& name);

}  // namespace polybound
