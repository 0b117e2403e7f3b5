#include <map>
#include <mutex>

#include "cyclosynth/errors.hpp"
#include "cyclosynth/synth.hpp"
#include "cyclosynth/taylor.hpp"
#include "qutrit_normal.hpp"

namespace cyclosynth {

namespace detail {

const LocMatrix& cached_gate(const GateSym& g, Regime regime) {
  static std::mutex mu;
  static std::map<std::pair<int, std::string>, LocMatrix> cache;
  std::lock_guard lock(mu);
  const auto key = std::make_pair(static_cast<int>(regime), print_gate(g));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, gate_matrix(g, regime)).first;
  return it->second;
}

QutritNormal normalize_qutrit(const LocVector& z, Regime regime) {
  const RingSpec spec = ring_of(regime);
  if (z.spec() != spec || z.dim() != 3) {
    throw PreconditionViolation("expected a 3-vector over Z[zeta_" + std::to_string(spec.n()) + "]");
  }
  if (sde(z) < 1) throw PreconditionViolation("vector has sde 0; nothing to reduce");
  if (!is_unit_vector(z)) throw PreconditionViolation("expected a unit vector");
  std::array<int, 3> res{};
  for (int j = 0; j < 3; ++j) {
    res[static_cast<std::size_t>(j)] = eval_at_one_mod_p(z.num(j));
    if (res[static_cast<std::size_t>(j)] == 0) throw PreconditionViolation("numerator divisible by chi");
  }
  QutritNormal out{0, 0, 1, z};
  int deviant = -1;
  for (int j = 0; j < 3; ++j) {
    const auto a = res[static_cast<std::size_t>((j + 1) % 3)], b = res[static_cast<std::size_t>((j + 2) % 3)];
    if (a == b && res[static_cast<std::size_t>(j)] != a) deviant = j;
  }
  const int majority = deviant < 0 ? res[0] : res[static_cast<std::size_t>((deviant + 1) % 3)];
  out.sign = majority == 1 ? 1 : -1;
  if (deviant >= 0) {
    // X moves entry j to j + 1; bring the deviant to slot 2, then R flips it.
    out.delta = (2 - deviant + 3) % 3;
    out.epsilon = 1;
    LocVector v = z;
    for (int i = 0; i < out.delta; ++i) v = mat_vec(cached_gate(gate::X{}, regime), v);
    out.z = mat_vec(cached_gate(gate::R{}, regime), v);
  }
  return out;
}

}  // namespace detail

namespace {

constexpr Regime kR = Regime::QutritR3;

void append_inverse_tail(GateWord& w, int epsilon, int delta) {
  for (int i = 0; i < (3 - delta) % 3; ++i) w.gates.emplace_back(gate::X{});
  if (epsilon) w.gates.emplace_back(gate::R{});
}

void append_h_cubed(GateWord& w) {
  for (int i = 0; i < 3; ++i) w.gates.emplace_back(gate::H{});
}

bool drops(const QutritRStep& s, const LocVector& z) { return sde(apply_step(s, z)) < sde(z); }

}  // namespace

GateWord step_word(const QutritRStep& s) {
  GateWord w{kR, {gate::H{}, s.d}};
  if (s.epsilon) w.gates.emplace_back(gate::R{});
  for (int i = 0; i < s.delta; ++i) w.gates.emplace_back(gate::X{});
  return w;
}

GateWord inverse_step_word(const QutritRStep& s) {
  GateWord w{kR, {}};
  append_inverse_tail(w, s.epsilon, s.delta);
  const gate::Dw inv{{(3 - s.d.a[0]) % 3, (3 - s.d.a[1]) % 3, (3 - s.d.a[2]) % 3}};
  if (inv != gate::Dw{}) w.gates.emplace_back(inv);
  append_h_cubed(w);
  return w;
}

LocVector apply_step(const QutritRStep& s, const LocVector& z) {
  LocVector v = z;
  for (int i = 0; i < s.delta; ++i) v = mat_vec(detail::cached_gate(gate::X{}, kR), v);
  if (s.epsilon) v = mat_vec(detail::cached_gate(gate::R{}, kR), v);
  v = mat_vec(detail::cached_gate(s.d, kR), v);
  return mat_vec(detail::cached_gate(gate::H{}, kR), v);
}

QutritRStep qutritR_choose_step(const LocVector& z) {
  const auto nz = detail::normalize_qutrit(z, kR);
  // chi^2 divides the first H row iff a0 s + pi1 = 0 with a1 = a2 = 0.
  int pi1 = 0;
  for (int j = 0; j < 3; ++j) pi1 += derivatives_mod_p(nz.z.num(j), 2)[1];
  QutritRStep step{gate::Dw{{((-nz.sign * pi1) % 3 + 3) % 3, 0, 0}}, nz.epsilon, nz.delta};
  if (drops(step, z)) return step;
  for (int e = 0; e < 2; ++e) {
    for (int d = 0; d < 3; ++d) {
      for (int i = 0; i < 27; ++i) {
        QutritRStep alt{gate::Dw{{i % 3, (i / 3) % 3, i / 9}}, e, d};
        if (drops(alt, z)) return alt;
      }
    }
  }
  throw std::logic_error("no Clifford+R step lowers sde of a unit vector");
}

SynthesisResult qutritR_synthesize(const LocMatrix& u) { return qutritR_synthesize(u, default_table(kR)); }

SynthesisResult qutritR_synthesize(const LocMatrix& u, const MonomialTable& table) {
  if (u.spec().n() != 3 || u.dim() != 3) throw PreconditionViolation("expected a 3x3 matrix over Z[omega]");
  if (!is_unitary(u)) throw PreconditionViolation("matrix is not unitary");
  SynthesisResult res{GateWord{kR, {}}, u, SynthStatus::Complete, std::nullopt, {sde(u)}};
  while (sde(res.residual) > 0) {
    const int before = sde(res.residual);
    const QutritRStep step = qutritR_choose_step(res.residual.column(0));
    res.residual = mat_mul(word_to_matrix(step_word(step)), res.residual);
    if (sde(res.residual) >= before) throw std::logic_error("Clifford+R step did not lower sde");
    res.sde_trace.push_back(sde(res.residual));
    res.word.append(inverse_step_word(step));
  }
  try {
    res.word.append(monomial_decompose(res.residual, table));
    res.residual = LocMatrix::identity(u.spec(), 3);
  } catch (const TableIncomplete&) {
    res.status = SynthStatus::TableIncomplete;
  }
  return res;
}

}  // namespace cyclosynth
