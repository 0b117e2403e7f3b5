#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cyclosynth/gates.hpp"
#include "cyclosynth/monomial.hpp"

namespace cyclosynth {

enum class SynthStatus { Complete, Obstructed, TableIncomplete };
std::string_view status_name(SynthStatus s);

/// Invariant: word_to_matrix(word) * residual == input.
struct SynthesisResult {
  GateWord word;
  LocMatrix residual;
  SynthStatus status = SynthStatus::Complete;
  std::optional<int> delta;  // set when Obstructed
  std::vector<int> sde_trace;  // sde of the working matrix after each step, initial first
};

// ---------------------------------------------------------------------------
// Qubit Clifford+T over Z[zeta_8]

/// H T^k z.
LocVector qubit_apply_step(const LocVector& z, int k);

/// k in [0, 4) with sde(H T^k z) - sde(z) == s for s in {-1, 0, 1}.
/// Tries the derivative-based choice first, then all four k. Throws NoSuchK.
int qubit_choose_k(const LocVector& z, int s);

/// Some k in [0, 4) with sde(H T^k z) < sde(z), preferring the
/// derivative-based choice; nullopt if none exists.
std::optional<int> qubit_reducing_k(const LocVector& z);

/// Reduce while sde >= 2, then finish with a bounded search over words of
/// length <= 6 composed with a tabulated monomial.
SynthesisResult qubit_synthesize(const LocMatrix& u);
SynthesisResult qubit_synthesize(const LocMatrix& u, const MonomialTable& table);

// ---------------------------------------------------------------------------
// Qutrit Clifford+R over Z[omega]

struct QutritRStep {
  gate::Dw d;
  int epsilon = 0;  // power of R
  int delta = 0;    // power of X
  bool operator==(const QutritRStep&) const = default;
};

/// H Dw R^epsilon X^delta, and its inverse X^-delta R^epsilon Dw^-1 H^3.
GateWord step_word(const QutritRStep& s);
GateWord inverse_step_word(const QutritRStep& s);
LocVector apply_step(const QutritRStep& s, const LocVector& z);

/// A step that strictly lowers sde(z); verified before returning.
/// Throws PreconditionViolation when sde(z) == 0 or z is not a unit vector.
QutritRStep qutritR_choose_step(const LocVector& z);

SynthesisResult qutritR_synthesize(const LocMatrix& u);
SynthesisResult qutritR_synthesize(const LocMatrix& u, const MonomialTable& table);

// ---------------------------------------------------------------------------
// Qutrit Clifford+D over Z[xi]

struct QutritDNormal {
  int epsilon = 0;
  int delta = 0;
  int sign = 1;  // z' has residues sign * (1, 1, 1) mod 3
  LocVector z;   // R^epsilon X^delta z
};

/// Throws PreconditionViolation unless z is a unit vector with sde >= 1.
QutritDNormal qutritD_normalize(const LocVector& z);

/// Delta = alpha^2 - gamma in Z_3, from the first two derivatives of the
/// normalized numerators; 2 (= -1) is the obstructed value.
int qutritD_delta(const LocVector& z);
/// p1^2 + q1^2 + r1^2 mod 3 for the normalized numerators.
int qutritD_delta_closed_form(const LocVector& z);

/// The second-derivative relation among the normalized numerators, in the
/// form -pi2 + pi1 + p1^2 + q1^2 + r1^2 = 0 (mod 3).
bool secondder_identity_as_stated(const LocVector& z);
/// pi2 - pi1 + p1^2 + q1^2 + r1^2 = 0 (mod 3), which is what unit norm forces.
bool secondder_identity_derived(const LocVector& z);

struct QutritDStep {
  gate::D d;
  int epsilon = 0;
  int delta = 0;
  bool operator==(const QutritDStep&) const = default;
};

struct Obstruction {
  int delta = 2;
};

/// H D R^epsilon X^delta, and its inverse X^-delta R^epsilon D^-1 H^3.
GateWord step_word(const QutritDStep& s);
GateWord inverse_step_word(const QutritDStep& s);
LocVector apply_step(const QutritDStep& s, const LocVector& z);

/// The closed-form candidate alone, without verification; nullopt when
/// Delta = 2.
std::optional<QutritDStep> qutritD_analytic_step(const LocVector& z);

/// The analytic step: normalize, compute Delta, solve the quadratic by a
/// lexicographic scan, lift exponents with the third-derivative equation.
/// The result is verified to lower sde; if the closed form fails
/// verification the exhaustive search supplies the step.
std::variant<QutritDStep, Obstruction> qutritD_reduce_step(const LocVector& z);

/// Every (D, epsilon, delta) with + signs (9^3 * 2 * 3 = 4374 candidates)
/// whose exact application lowers sde(z).
std::vector<QutritDStep> qutritD_brute_force_steps(const LocVector& z);

SynthesisResult qutritD_greedy(const LocMatrix& u);

}  // namespace cyclosynth
