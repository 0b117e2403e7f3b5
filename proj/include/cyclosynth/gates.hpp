#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cyclosynth/localized.hpp"

namespace cyclosynth {

/// Gate alphabet; the regime fixes the ring (8, 3, 9) and the dimension.
enum class Regime { Qubit8, QutritR3, QutritD9 };

RingSpec ring_of(Regime r);
int dim_of(Regime r);
std::string_view regime_name(Regime r);  // "qubit", "qutrit-r", "qutrit-d"
Regime parse_regime(std::string_view name);

namespace gate {

struct H {
  bool operator==(const H&) const = default;
};
/// diag(1, zeta_8^k), k in [0, 8).
struct T {
  int k = 0;
  bool operator==(const T&) const = default;
};
/// diag(1, omega, 1).
struct S {
  bool operator==(const S&) const = default;
};
/// |j> -> |j+1 mod 3>.
struct X {
  bool operator==(const X&) const = default;
};
/// diag(1, 1, -1).
struct R {
  bool operator==(const R&) const = default;
};
/// diag(omega^a0, omega^a1, omega^a2), a_i in [0, 3).
struct Dw {
  std::array<int, 3> a{};
  bool operator==(const Dw&) const = default;
};
/// diag((-1)^b0, (-1)^b1, (-1)^b2), b_i in {0, 1}.
struct Rs {
  std::array<int, 3> b{};
  bool operator==(const Rs&) const = default;
};
/// diag(s0 xi^a0, s1 xi^a1, s2 xi^a2), a_i in [0, 9); negative[i] marks s_i = -1.
struct D {
  std::array<int, 3> a{};
  std::array<bool, 3> negative{};
  bool operator==(const D&) const = default;
};
/// Signed monomial: column j has (-1)^signs[j] * zeta^phases[j] in row perm[j].
struct Mono {
  std::vector<int> perm;
  std::vector<int> phases;
  std::vector<int> signs;
  bool operator==(const Mono&) const = default;
};

}  // namespace gate

using GateSym = std::variant<gate::H, gate::T, gate::S, gate::X, gate::R, gate::Dw, gate::Rs,
                             gate::D, gate::Mono>;

/// g1 g2 ... gm denotes the matrix product g1 * g2 * ... * gm.
struct GateWord {
  Regime regime = Regime::Qubit8;
  std::vector<GateSym> gates;

  bool operator==(const GateWord&) const = default;
  GateWord& append(const GateWord& other);
};

/// Throws PreconditionViolation if the symbol is not in the regime's
/// alphabet or its parameters are out of range.
void validate(const GateSym& g, Regime regime);

LocMatrix gate_matrix(const GateSym& g, Regime regime);
LocMatrix word_to_matrix(const GateWord& w);

/// Whitespace-separated tokens; see README for the grammar.
GateWord parse_word(std::string_view text, Regime regime);
/// Infers the regime from regime-specific tokens; throws ParseError when
/// the text is ambiguous (e.g. only H, X, R, M tokens).
GateWord parse_word_infer(std::string_view text);
std::string print_word(const GateWord& w);
std::string print_gate(const GateSym& g);

/// Seeded random word over the regime's non-terminal alphabet.
GateWord random_word(Regime regime, int length, std::uint64_t seed);

/// Frequently used constant numerators.
/// sqrt(2) = zeta^2 (1 - zeta)(1 - zeta^3) in Z[zeta_8].
CycInt sqrt2(RingSpec spec8);
/// sqrt(-3) in Z[omega] (= omega chi) or Z[xi] (= xi^3 (1 - xi^3)).
CycInt sqrt_minus3(RingSpec spec);

}  // namespace cyclosynth
