#pragma once

#include "cyclosynth/gates.hpp"

namespace cyclosynth::detail {

// z' = R^epsilon X^delta z with every numerator congruent to sign mod chi.
struct QutritNormal {
  int epsilon = 0;
  int delta = 0;
  int sign = 1;
  LocVector z;
};

// Throws PreconditionViolation unless z is a unit 3-vector of sde >= 1 over
// the regime's ring.
QutritNormal normalize_qutrit(const LocVector& z, Regime regime);

// Gate matrix cache for the fixed qutrit gates.
const LocMatrix& cached_gate(const GateSym& g, Regime regime);

}  // namespace cyclosynth::detail
