#include "cyclosynth/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cyclosynth/errors.hpp"

namespace cyclosynth {

namespace {

const RingSpec kSpec9(9);

long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("quadratic target exceeds machine range");
  return v.get_si();
}

// sqrt(-3) = xi^3 (1 - xi^3) and the unit chi^3 / sqrt(-3).
const CycInt& sqrt_m3() {
  static const CycInt s = sqrt_minus3(kSpec9);
  return s;
}

const CycInt& hadamard_unit9() {
  static const CycInt u = *(chi_pow(kSpec9, 3) * sqrt_m3()).div_int(-3);
  return u;
}

// (sign, exponent) with x = sign * xi^exponent.
std::optional<std::pair<int, int>> signed_root(const CycInt& x) {
  for (int a = 0; a < 9; ++a) {
    const CycInt z = CycInt::zeta_pow(kSpec9, a);
    if (x == z) return std::make_pair(1, a);
    if (x == -z) return std::make_pair(-1, a);
  }
  return std::nullopt;
}

int mod9(int v) { return ((v % 9) + 9) % 9; }

}  // namespace

QuadTarget quad_target(int f, EnumMode mode) {
  if (f < 0) throw PreconditionViolation("sde must be non-negative");
  const CycInt norm_chi = abs_sq(CycInt::chi(kSpec9));
  const int r = mode == EnumMode::Rescaled ? f / 3 : 0;
  const int s = mode == EnumMode::Rescaled ? f % 3 : f;
  CycInt rhs = CycInt::from_int(kSpec9, 1);
  for (int i = 0; i < s; ++i) rhs *= norm_chi;
  for (int i = 0; i < r; ++i) rhs *= CycInt::from_int(kSpec9, 3);
  const auto abc = to_real_tau_basis(rhs);
  return QuadTarget{f, mode, abc[0], abc[1], abc[2], abc[0] + 2 * abc[2]};
}

std::array<long, 3> quad_forms(const Coeffs6& a) {
  std::array<long, 6> alpha{};
  for (int i = 0; i < 6; ++i) {
    for (int j = i; j < 6; ++j) alpha[static_cast<std::size_t>(j - i)] += a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(j)];
  }
  return {alpha[0] - 2 * alpha[2] - alpha[3] + 2 * alpha[4] + 2 * alpha[5], alpha[1] - alpha[4] - alpha[5],
          alpha[2] - alpha[4] - alpha[5]};
}

long quad_q(const Coeffs6& a) {
  const auto q = quad_forms(a);
  return q[0] + 2 * q[2];
}

std::vector<std::pair<long, long>> eisenstein_reps(long m) {
  std::vector<std::pair<long, long>> out;
  if (m < 0) return out;
  const long bound = static_cast<long>(std::ceil(2.0 * std::sqrt(static_cast<double>(m) / 3.0))) + 1;
  for (long u = -bound; u <= bound; ++u) {
    for (long v = -bound; v <= bound; ++v) {
      if (u * u + v * v - u * v == m) out.emplace_back(u, v);
    }
  }
  return out;
}

CycInt coeffs_to_elem(const Coeffs6& a) {
  return CycInt::from_coeffs(kSpec9, {a[0], a[1], a[2], a[3], a[4], a[5]});
}

std::vector<FormSolution> enumerate_form_solutions(int f, EnumMode mode) {
  const QuadTarget t = quad_target(f, mode);
  const long n = to_long(t.N);
  const std::array<long, 3> goal{to_long(t.A), to_long(t.B), to_long(t.C)};

  // Candidate entries: three Eisenstein blocks (a_i, a_{i+3}) with total norm <= N.
  std::vector<std::vector<std::pair<long, long>>> reps;
  for (long m = 0; m <= n; ++m) reps.push_back(eisenstein_reps(m));
  std::map<std::array<long, 3>, std::vector<Coeffs6>> classes;
  for (long m0 = 0; m0 <= n; ++m0) {
    for (long m1 = 0; m0 + m1 <= n; ++m1) {
      for (long m2 = 0; m0 + m1 + m2 <= n; ++m2) {
        for (const auto& b0 : reps[static_cast<std::size_t>(m0)]) {
          for (const auto& b1 : reps[static_cast<std::size_t>(m1)]) {
            for (const auto& b2 : reps[static_cast<std::size_t>(m2)]) {
              const Coeffs6 a{b0.first, b1.first, b2.first, b0.second, b1.second, b2.second};
              if (f >= 1) {
                // chi-coprime entries only: w(1) != 0 mod 3.
                const long s = a[0] + a[1] + a[2] + a[3] + a[4] + a[5];
                if (((s % 3) + 3) % 3 == 0) continue;
              }
              classes[quad_forms(a)].push_back(a);
            }
          }
        }
      }
    }
  }
  for (auto& [k, v] : classes) std::sort(v.begin(), v.end());

  std::vector<FormSolution> out;
  for (const auto& [c1, v1] : classes) {
    for (const auto& [c2, v2] : classes) {
      const std::array<long, 3> c3{goal[0] - c1[0] - c2[0], goal[1] - c1[1] - c2[1], goal[2] - c1[2] - c2[2]};
      auto it = classes.find(c3);
      if (it == classes.end()) continue;
      for (const auto& a : v1) {
        for (const auto& b : v2) {
          for (const auto& c : it->second) out.push_back(FormSolution{{a, b, c}});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EnumeratedVector> enumerate_unit_vectors(int f, EnumMode mode) {
  const int r = mode == EnumMode::Rescaled ? f / 3 : 0;
  CycInt scale = CycInt::from_int(kSpec9, 1);
  for (int i = 0; i < r; ++i) scale *= hadamard_unit9();
  std::vector<EnumeratedVector> out;
  for (auto& sol : enumerate_form_solutions(f, mode)) {
    std::vector<CycInt> nums;
    for (const auto& a : sol.entries) nums.push_back(scale * coeffs_to_elem(a));
    LocVector z(std::move(nums), f);
    if (mode == EnumMode::Exact && (!is_unit_vector(z) || sde(z) != f)) {
      throw std::logic_error("form solution is not a unit vector of the requested sde");
    }
    out.push_back({std::move(sol), std::move(z)});
  }
  return out;
}

Sde3Shape sde3_shape(const LocVector& z) {
  if (z.spec() != kSpec9 || z.dim() != 3 || sde(z) != 3) {
    throw NotSde3Form("expected a 3-vector of sde 3 over Z[xi]");
  }
  std::vector<CycInt> nums;
  for (const auto& w : z.nums()) nums.push_back(sqrt_m3() * w);
  const LocVector y(std::move(nums), 3);
  if (y.denom_exp() != 0) throw NotSde3Form("sqrt(-3) z is not integral");
  Sde3Shape shape{};
  for (int i = 0; i < 3; ++i) {
    const auto sr = signed_root(y.num(i));
    if (!sr) throw NotSde3Form("entry of sqrt(-3) z is not a signed power of xi");
    shape.signs[static_cast<std::size_t>(i)] = sr->first;
    shape.exps[static_cast<std::size_t>(i)] = sr->second;
  }
  return shape;
}

Sde3Orthogonality orthogonality_sde3(const LocVector& z1, const LocVector& z2) {
  const Sde3Shape s1 = sde3_shape(z1), s2 = sde3_shape(z2);
  // conj(y1_j) y2_j = sigma_j xi^(e_j); three such terms cancel iff they are
  // a rotated set of cube roots of unity.
  std::array<int, 3> sigma{}, e{};
  for (std::size_t j = 0; j < 3; ++j) {
    sigma[j] = s1.signs[j] * s2.signs[j];
    e[j] = mod9(s2.exps[j] - s1.exps[j]);
  }
  Sde3Orthogonality out;
  out.p = mod9(e[1] - e[0]);
  out.q = mod9(e[2] - e[0]);
  out.rule = sigma[1] == sigma[0] && sigma[2] == sigma[0] &&
             ((out.p == 3 && out.q == 6) || (out.p == 6 && out.q == 3));
  out.exact = inner(z1, z2).is_zero();
  return out;
}

bool check_orthogonal_sde3(const LocVector& z1, const LocVector& z2) {
  const auto o = orthogonality_sde3(z1, z2);
  if (o.exact != o.rule) throw std::logic_error("exponent rule disagrees with the exact inner product");
  return o.exact;
}

Sde3Factorization factor_sde3_unitary(const LocMatrix& m) {
  if (m.spec() != kSpec9 || m.dim() != 3 || sde(m) != 3) throw NotSde3Form("expected a 3x3 matrix of sde 3 over Z[xi]");
  if (!is_unitary(m)) throw NotSde3Form("matrix is not unitary");
  std::vector<CycInt> nums;
  for (const auto& w : m.nums()) nums.push_back(sqrt_m3() * w);
  const LocMatrix s(3, std::move(nums), 3);
  if (s.denom_exp() != 0) throw NotSde3Form("sqrt(-3) M is not integral");
  std::array<std::array<std::pair<int, int>, 3>, 3> ent{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto sr = signed_root(s.num(i, j));
      if (!sr) throw NotSde3Form("entry of sqrt(-3) M is not a signed power of xi");
      ent[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = *sr;
    }
  }
  std::vector<int> perm{0, 1, 2};
  do {
    auto at = [&](int i, int j) { return ent[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]; };
    Sde3Factorization fac{};
    fac.perm = perm;
    for (std::size_t i = 0; i < 3; ++i) {
      fac.d1.negative[i] = at(static_cast<int>(i), 0).first < 0;
      fac.d1.a[i] = at(static_cast<int>(i), 0).second;
      fac.d2.negative[i] = (at(0, static_cast<int>(i)).first * at(0, 0).first) < 0;
      fac.d2.a[i] = mod9(at(0, static_cast<int>(i)).second - at(0, 0).second);
    }
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      for (int j = 0; j < 3 && ok; ++j) {
        const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
        const int sign = (fac.d1.negative[ui] ? -1 : 1) * (fac.d2.negative[uj] ? -1 : 1);
        ok = at(i, j) == std::make_pair(sign, mod9(fac.d1.a[ui] + fac.d2.a[uj] + 3 * i * j));
      }
    }
    if (!ok) continue;
    const Regime rg = Regime::QutritD9;
    const LocMatrix p = gate_matrix(gate::Mono{perm, {0, 0, 0}, {0, 0, 0}}, rg);
    const LocMatrix rhs = mat_mul(mat_mul(gate_matrix(fac.d1, rg), gate_matrix(gate::H{}, rg)), gate_matrix(fac.d2, rg));
    if (mat_mul(m, p) != rhs) throw std::logic_error("sde-3 factorization failed exact reconstruction");
    return fac;
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw NotSde3Form("no column permutation brings M to the form D1 H D2");
}

}  // namespace cyclosynth
