#include <algorithm>
#include <mutex>
#include <unordered_set>

#include "cyclosynth/errors.hpp"
#include "cyclosynth/synth.hpp"
#include "cyclosynth/taylor.hpp"

namespace cyclosynth {

std::string_view status_name(SynthStatus s) {
  switch (s) {
    case SynthStatus::Complete: return "Complete";
    case SynthStatus::Obstructed: return "Obstructed";
    case SynthStatus::TableIncomplete: return "TableIncomplete";
  }
  return "?";
}

namespace {

constexpr Regime kQubit = Regime::Qubit8;

const LocMatrix& hadamard8() {
  static const LocMatrix h = gate_matrix(gate::H{}, kQubit);
  return h;
}

LocMatrix step_matrix(int k) { return mat_mul(hadamard8(), gate_matrix(gate::T{k}, kQubit)); }

void require_qubit_vector(const LocVector& z) {
  if (z.spec().n() != 8 || z.dim() != 2) throw PreconditionViolation("expected a 2-vector over Z[zeta_8]");
  if (!is_unit_vector(z)) throw PreconditionViolation("expected a unit vector");
}

// k = 2t + e forces the first three derivatives of w1 + zeta^k w2 to vanish
// mod 2, i.e. chi^3 divides it.
int derivative_k(const LocVector& z) {
  const auto d1 = derivatives_mod_p(z.num(0), 3);
  const auto d2 = derivatives_mod_p(z.num(1), 3);
  const int e = (d1[1] + d2[1]) % 2;
  const int t = (d1[2] + d2[2] + e * d2[1]) % 2;
  return 2 * t + e;
}

bool units_only(const LocVector& z) {
  return std::all_of(z.nums().begin(), z.nums().end(), [](const CycInt& w) { return !w.is_zero() && gde(w) == 0; });
}

}  // namespace

LocVector qubit_apply_step(const LocVector& z, int k) { return mat_vec(step_matrix(((k % 8) + 8) % 8), z); }

int qubit_choose_k(const LocVector& z, int s) {
  require_qubit_vector(z);
  const int f = sde(z);
  auto change = [&](int k) { return sde(qubit_apply_step(z, k)) - f; };
  if (units_only(z)) {
    const int k0 = derivative_k(z);
    const int e = k0 % 2, t = k0 / 2;
    std::optional<int> guess;
    if (s == -1) guess = k0;
    else if (s == 0) guess = 2 * (1 - t) + e;
    else if (s == 1) guess = 1 - e;
    if (guess && change(*guess) == s) return *guess;
  }
  for (int k = 0; k < 4; ++k) {
    if (change(k) == s) return k;
  }
  throw NoSuchK("no k in [0, 4) changes sde by " + std::to_string(s), s);
}

std::optional<int> qubit_reducing_k(const LocVector& z) {
  require_qubit_vector(z);
  const int f = sde(z);
  if (units_only(z)) {
    const int k = derivative_k(z);
    if (sde(qubit_apply_step(z, k)) < f) return k;
  }
  for (int k = 0; k < 4; ++k) {
    if (sde(qubit_apply_step(z, k)) < f) return k;
  }
  return std::nullopt;
}

namespace {

struct ShortWord {
  LocMatrix m;
  GateWord w;
};

// Distinct matrices of words over {H, T^k} of length <= 6, shortest first.
const std::vector<ShortWord>& short_words() {
  static std::once_flag once;
  static std::vector<ShortWord> out;
  std::call_once(once, [] {
    std::vector<GateSym> gens{gate::H{}};
    for (int k = 1; k < 8; ++k) gens.emplace_back(gate::T{k});
    std::unordered_set<std::string> seen;
    auto key = [](const LocMatrix& m) {
      std::string s = std::to_string(m.denom_exp());
      for (const auto& w : m.nums()) s += '|' + w.to_string();
      return s;
    };
    out.push_back({LocMatrix::identity(ring_of(kQubit), 2), GateWord{kQubit, {}}});
    seen.insert(key(out.front().m));
    std::size_t begin = 0;
    for (int len = 1; len <= 6; ++len) {
      const std::size_t end = out.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (const auto& g : gens) {
          LocMatrix m = mat_mul(out[i].m, gate_matrix(g, kQubit));
          if (!seen.insert(key(m)).second) continue;
          GateWord w = out[i].w;
          w.gates.push_back(g);
          out.push_back({std::move(m), std::move(w)});
        }
      }
      begin = end;
    }
  });
  return out;
}

}  // namespace

SynthesisResult qubit_synthesize(const LocMatrix& u) { return qubit_synthesize(u, default_table(kQubit)); }

SynthesisResult qubit_synthesize(const LocMatrix& u, const MonomialTable& table) {
  if (u.spec().n() != 8 || u.dim() != 2) throw PreconditionViolation("expected a 2x2 matrix over Z[zeta_8]");
  if (!is_unitary(u)) throw PreconditionViolation("matrix is not unitary");
  SynthesisResult res{GateWord{kQubit, {}}, u, SynthStatus::Complete, std::nullopt, {sde(u)}};
  while (sde(res.residual) >= 2) {
    const auto k = qubit_reducing_k(res.residual.column(0));
    if (!k) break;
    const int before = sde(res.residual);
    res.residual = mat_mul(step_matrix(*k), res.residual);
    if (sde(res.residual) >= before) throw std::logic_error("qubit step did not lower sde");
    res.sde_trace.push_back(sde(res.residual));
    // (H T^k)^-1 = T^-k H.
    if (*k != 0) res.word.gates.emplace_back(gate::T{8 - *k});
    res.word.gates.emplace_back(gate::H{});
  }
  // Base case: residual = V * monomial for a short word V.
  static const std::vector<ShortWord> trivial{
      {LocMatrix::identity(ring_of(kQubit), 2), GateWord{kQubit, {}}}};
  const bool direct = as_signed_monomial(res.residual, kQubit).has_value();
  for (const auto& sw : direct ? trivial : short_words()) {
    const LocMatrix rest = mat_mul(dagger(sw.m), res.residual);
    if (!as_signed_monomial(rest, kQubit)) continue;
    try {
      const GateWord mono = monomial_decompose(rest, table);
      res.word.append(sw.w).append(mono);
      res.residual = LocMatrix::identity(u.spec(), 2);
      if (!sw.w.gates.empty()) res.sde_trace.push_back(0);
      return res;
    } catch (const TableIncomplete&) {
      res.word.append(sw.w);
      res.residual = rest;
      res.status = SynthStatus::TableIncomplete;
      return res;
    }
  }
  throw PreconditionViolation("qubit residual of sde " + std::to_string(sde(res.residual)) +
                              " has no short-word decomposition");
}

}  // namespace cyclosynth
