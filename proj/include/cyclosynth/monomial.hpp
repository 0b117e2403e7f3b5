#pragma once

#include <map>
#include <optional>
#include <string>

#include "cyclosynth/gates.hpp"

namespace cyclosynth {

/// Reads M as a signed monomial matrix: denom_exp 0 and one entry
/// (-1)^s zeta^a per column. Returns nullopt otherwise. For n = 8 the sign
/// is folded into the phase (-1 = zeta^4).
std::optional<gate::Mono> as_signed_monomial(const LocMatrix& m, Regime regime);

/// Words for every signed monomial of a regime, found by breadth-first
/// search over the gate alphabet with exact-matrix deduplication.
class MonomialTable {
 public:
  static constexpr int kDefaultDepthCap = 14;

  /// Qubit8 and QutritR3 only. The search keeps states with sde at most
  /// that of H and stops once every monomial has a word or at depth_cap.
  static MonomialTable build(Regime regime, int depth_cap = kDefaultDepthCap);

  Regime regime() const noexcept { return regime_; }
  int depth_cap() const noexcept { return depth_cap_; }
  /// Deepest BFS level expanded.
  int depth_reached() const noexcept { return depth_reached_; }
  /// Number of signed monomials in the regime (128 or 1296).
  std::size_t target_count() const;
  std::size_t size() const noexcept { return words_.size(); }
  bool complete() const { return size() == target_count(); }

  std::optional<GateWord> lookup(const gate::Mono& m) const;

  /// JSON cache: {"version", "regime", "depth_cap", "depth_reached", "words": {mono: word}}.
  std::string to_json() const;
  /// Every stored word is re-verified against its key; throws ParseError on mismatch.
  static MonomialTable from_json(const std::string& text);

 private:
  Regime regime_ = Regime::Qubit8;
  int depth_cap_ = 0;
  int depth_reached_ = 0;
  std::map<std::string, std::string> words_;  // print_gate(mono) -> word text
};

/// Process-wide table per regime, built on first use.
const MonomialTable& default_table(Regime regime);
/// Load from `path` if it exists and matches, otherwise build and write it.
const MonomialTable& cached_table(Regime regime, const std::string& path);

/// A word over the regime's non-terminal alphabet with matrix exactly M.
/// Qubit8 and QutritR3 look up the BFS table; QutritD9 solves
/// M = D X^d (H H)^t directly. Throws NotMonomial or TableIncomplete.
GateWord monomial_decompose(const LocMatrix& m, Regime regime);
GateWord monomial_decompose(const LocMatrix& m, const MonomialTable& table);

}  // namespace cyclosynth
