#pragma once

#include <string>
#include <vector>

namespace cyclosynth {

struct RegressionCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // observed value
};

/// Fixed published values: valuations, sdes of the Hadamard gates, the
/// Phi_9 derivative table and the tau-basis targets.
std::vector<RegressionCheck> regression_checks();

}  // namespace cyclosynth
