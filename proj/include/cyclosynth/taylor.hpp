#pragma once

#include <vector>

#include "cyclosynth/ring.hpp"

namespace cyclosynth {

/// Taylor coefficients at zeta = 1, reduced mod p. Entry k is the
/// coefficient a_k of f(x) = sum a_k (1 - x)^k for the reduced
/// representative f of degree < phi.
struct TaylorVec {
  RingSpec spec;
  std::vector<int> entries;

  /// Number of leading zero entries.
  int leading_zeros() const;
  bool operator==(const TaylorVec&) const = default;
};

/// Binomial-transform route: a_k = (-1)^k * sum_i c_i * C(i, k) mod p.
TaylorVec taylor_mod_p(const CycInt& a);

/// Substitution route: expands f(1 - y) by repeated synthetic division.
/// Kept as an independent cross-check of taylor_mod_p.
TaylorVec taylor_mod_p_by_substitution(const CycInt& a);

/// The derivatives f^(k)(1)/k! mod p for k = 0..count-1 (no sign flip).
/// These differ from TaylorVec entries by (-1)^k and are the quantities
/// that the synthesis conditions are written in.
std::vector<int> derivatives_mod_p(const CycInt& a, int count);

/// Phi_n^(k)(1)/k! for k = 1..phi, exact.
std::vector<Int> phi_derivative_table(int n);

/// chi-adic valuation of a nonzero element (throws ZeroInput on 0).
int gde(const CycInt& a);

/// Brute-force gde: counts successive exact divisions by chi.
int gde_oracle(const CycInt& a);

}  // namespace cyclosynth
