#include "cyclosynth/errors.hpp"
#include "cyclosynth/synth.hpp"
#include "cyclosynth/taylor.hpp"
#include "qutrit_normal.hpp"

namespace cyclosynth {

namespace {

constexpr Regime kD = Regime::QutritD9;

int mod3(int v) { return ((v % 3) + 3) % 3; }

// True derivatives d_0..d_3 mod 3 of sign * w for each normalized numerator.
struct NormalDerivs {
  detail::QutritNormal nz;
  std::array<std::vector<int>, 3> d;
  int pi1 = 0, pi2 = 0;
};

NormalDerivs normal_derivs(const LocVector& z) {
  NormalDerivs out{detail::normalize_qutrit(z, kD), {}, 0, 0};
  for (std::size_t j = 0; j < 3; ++j) {
    const CycInt w = out.nz.sign == 1 ? out.nz.z.num(static_cast<int>(j)) : -out.nz.z.num(static_cast<int>(j));
    out.d[j] = derivatives_mod_p(w, 4);
    out.pi1 += out.d[j][1];
    out.pi2 += out.d[j][2];
  }
  out.pi1 = mod3(out.pi1);
  out.pi2 = mod3(out.pi2);
  return out;
}

int square_sum(const NormalDerivs& nd) {
  int s = 0;
  for (const auto& d : nd.d) s += d[1] * d[1];
  return mod3(s);
}

// C(e, 2) mod 3 for e in [0, 3).
int choose2(int e) { return e * (e - 1) / 2 % 3; }

bool lowers(const QutritDStep& s, const LocVector& z) { return sde(apply_step(s, z)) < sde(z); }

}  // namespace

QutritDNormal qutritD_normalize(const LocVector& z) {
  auto nz = detail::normalize_qutrit(z, kD);
  return {nz.epsilon, nz.delta, nz.sign, std::move(nz.z)};
}

int qutritD_delta(const LocVector& z) {
  const auto nd = normal_derivs(z);
  const int p1 = nd.d[0][1], q1 = nd.d[1][1], r1 = nd.d[2][1];
  const int alpha = q1 - p1;
  const int gamma = -nd.pi1 + nd.pi2 - nd.pi1 * nd.pi1 - nd.pi1 * r1;
  return mod3(alpha * alpha - gamma);
}

int qutritD_delta_closed_form(const LocVector& z) { return square_sum(normal_derivs(z)); }

bool secondder_identity_as_stated(const LocVector& z) {
  const auto nd = normal_derivs(z);
  return mod3(-nd.pi2 + nd.pi1 + square_sum(nd)) == 0;
}

bool secondder_identity_derived(const LocVector& z) {
  const auto nd = normal_derivs(z);
  return mod3(nd.pi2 - nd.pi1 + square_sum(nd)) == 0;
}

GateWord step_word(const QutritDStep& s) {
  GateWord w{kD, {gate::H{}, s.d}};
  if (s.epsilon) w.gates.emplace_back(gate::R{});
  for (int i = 0; i < s.delta; ++i) w.gates.emplace_back(gate::X{});
  return w;
}

GateWord inverse_step_word(const QutritDStep& s) {
  GateWord w{kD, {}};
  for (int i = 0; i < (3 - s.delta) % 3; ++i) w.gates.emplace_back(gate::X{});
  if (s.epsilon) w.gates.emplace_back(gate::R{});
  gate::D inv = s.d;
  for (auto& a : inv.a) a = (9 - a) % 9;
  if (inv != gate::D{}) w.gates.emplace_back(inv);
  for (int i = 0; i < 3; ++i) w.gates.emplace_back(gate::H{});
  return w;
}

LocVector apply_step(const QutritDStep& s, const LocVector& z) {
  LocVector v = z;
  for (int i = 0; i < s.delta; ++i) v = mat_vec(detail::cached_gate(gate::X{}, kD), v);
  if (s.epsilon) v = mat_vec(detail::cached_gate(gate::R{}, kD), v);
  v = mat_vec(gate_matrix(s.d, kD), v);
  return mat_vec(detail::cached_gate(gate::H{}, kD), v);
}

std::optional<QutritDStep> qutritD_analytic_step(const LocVector& z) {
  const auto nd = normal_derivs(z);
  const int p1 = nd.d[0][1], q1 = nd.d[1][1], r1 = nd.d[2][1];
  const int alpha = mod3(q1 - p1);
  const int gamma = mod3(-nd.pi1 + nd.pi2 - nd.pi1 * nd.pi1 - nd.pi1 * r1);
  if (mod3(alpha * alpha - gamma) == 2) return std::nullopt;
  for (int e0 = 0; e0 < 3; ++e0) {
    for (int e1 = 0; e1 < 3; ++e1) {
      const int y = e0 - e1;
      if (mod3(y * y + alpha * y + gamma) != 0) continue;
      const std::array<int, 3> eps{e0, e1, mod3(-nd.pi1 - e0 - e1)};
      // Third derivative: sum k_j + sum (C(e_j,2) d1_j + e_j d2_j + d3_j) = 0.
      int c = 0;
      for (std::size_t j = 0; j < 3; ++j) {
        c += choose2(eps[j]) * nd.d[j][1] + eps[j] * nd.d[j][2] + nd.d[j][3];
      }
      const int k0 = mod3(-c);
      QutritDStep step;
      step.d.a = {3 * k0 + eps[0], eps[1], eps[2]};
      step.epsilon = nd.nz.epsilon;
      step.delta = nd.nz.delta;
      return step;
    }
  }
  return std::nullopt;
}

std::variant<QutritDStep, Obstruction> qutritD_reduce_step(const LocVector& z) {
  const int delta = qutritD_delta(z);
  if (delta == 2) return Obstruction{delta};
  if (auto step = qutritD_analytic_step(z); step && lowers(*step, z)) return *step;
  const auto all = qutritD_brute_force_steps(z);
  if (all.empty()) throw std::logic_error("Delta != -1 but no Clifford+D step lowers sde");
  return all.front();
}

std::vector<QutritDStep> qutritD_brute_force_steps(const LocVector& z) {
  if (z.spec().n() != 9 || z.dim() != 3) throw PreconditionViolation("expected a 3-vector over Z[xi]");
  const int f = sde(z);
  std::vector<QutritDStep> out;
  for (int e = 0; e < 2; ++e) {
    for (int d = 0; d < 3; ++d) {
      LocVector v = z;
      for (int i = 0; i < d; ++i) v = mat_vec(detail::cached_gate(gate::X{}, kD), v);
      if (e) v = mat_vec(detail::cached_gate(gate::R{}, kD), v);
      for (int i = 0; i < 729; ++i) {
        const std::array<int, 3> a{i % 9, (i / 9) % 9, i / 81};
        // The first entry of H D v has numerator u * sum xi^a_j v_j over
        // chi^(f+3); a lower sde needs chi^4 to divide that sum.
        CycInt sum(z.spec());
        for (int j = 0; j < 3; ++j) sum += v.num(j).mul_zeta_pow(a[static_cast<std::size_t>(j)]);
        bool divisible = true;
        for (int t = 0; t < 4 && divisible && !sum.is_zero(); ++t) {
          auto q = try_div_chi(sum);
          if (q) sum = std::move(*q);
          else divisible = false;
        }
        if (!divisible) continue;
        QutritDStep step{gate::D{a, {}}, e, d};
        if (sde(apply_step(step, z)) < f) out.push_back(step);
      }
    }
  }
  return out;
}

SynthesisResult qutritD_greedy(const LocMatrix& u) {
  if (u.spec().n() != 9 || u.dim() != 3) throw PreconditionViolation("expected a 3x3 matrix over Z[xi]");
  if (!is_unitary(u)) throw PreconditionViolation("matrix is not unitary");
  SynthesisResult res{GateWord{kD, {}}, u, SynthStatus::Complete, std::nullopt, {sde(u)}};
  while (sde(res.residual) > 0) {
    const int before = sde(res.residual);
    const auto r = qutritD_reduce_step(res.residual.column(0));
    if (const auto* ob = std::get_if<Obstruction>(&r)) {
      res.status = SynthStatus::Obstructed;
      res.delta = ob->delta;
      return res;
    }
    const auto& step = std::get<QutritDStep>(r);
    res.residual = mat_mul(word_to_matrix(step_word(step)), res.residual);
    if (sde(res.residual) >= before) throw std::logic_error("Clifford+D step did not lower sde");
    res.sde_trace.push_back(sde(res.residual));
    res.word.append(inverse_step_word(step));
  }
  res.word.append(monomial_decompose(res.residual, kD));
  res.residual = LocMatrix::identity(u.spec(), 3);
  return res;
}

}  // namespace cyclosynth
