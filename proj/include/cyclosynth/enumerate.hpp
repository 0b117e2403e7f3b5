#pragma once

#include <array>
#include <utility>
#include <vector>

#include "cyclosynth/gates.hpp"

namespace cyclosynth {

enum class EnumMode { Exact, Rescaled };

/// Right-hand side A + B tau + C tau^2 of the unit-vector equation over
/// Z[xi]: (2 - tau)^f in exact mode, 3^r (2 - tau)^s with f = 3r + s in
/// rescaled mode. N = A + 2C bounds q(a) + q(b) + q(c).
struct QuadTarget {
  int f = 0;
  EnumMode mode = EnumMode::Exact;
  Int A, B, C, N;
};

QuadTarget quad_target(int f, EnumMode mode);

using Coeffs6 = std::array<long, 6>;

/// (q0, q1, q2) with |w|^2 = q0 + q1 tau + q2 tau^2 for w = sum a_j xi^j.
std::array<long, 3> quad_forms(const Coeffs6& a);
/// q = q0 + 2 q2, a sum of three Eisenstein norms.
long quad_q(const Coeffs6& a);

/// All (u, v) with u^2 + v^2 - uv = m, sorted.
std::vector<std::pair<long, long>> eisenstein_reps(long m);

struct FormSolution {
  std::array<Coeffs6, 3> entries;
  auto operator<=>(const FormSolution&) const = default;
};

struct EnumeratedVector {
  FormSolution coeffs;
  /// Exact mode: (w1, w2, w3) / chi^f. Rescaled mode: mu^-r (w1, w2, w3) / chi^f
  /// with mu = sqrt(-3) / chi^3, which is a unit vector.
  LocVector z;
};

/// Every solution of the form system for target (f, mode) whose entries
/// are chi-coprime (f >= 1), in lexicographic order of coefficient tuples.
std::vector<FormSolution> enumerate_form_solutions(int f, EnumMode mode);

/// As above, lifted to vectors; exact-mode vectors are re-checked with
/// is_unit_vector and sde == f.
std::vector<EnumeratedVector> enumerate_unit_vectors(int f, EnumMode mode);

CycInt coeffs_to_elem(const Coeffs6& a);

/// sqrt(-3) z for a vector of sde 3: entries +-xi^a, or NotSde3Form.
struct Sde3Shape {
  std::array<int, 3> exps;
  std::array<int, 3> signs;  // +1 or -1
};
Sde3Shape sde3_shape(const LocVector& z);

struct Sde3Orthogonality {
  bool exact = false;  // <z1, z2> == 0 as ring values
  bool rule = false;   // relative signs + and (p, q) in {(3, 6), (6, 3)} mod 9
  int p = 0, q = 0;
};
Sde3Orthogonality orthogonality_sde3(const LocVector& z1, const LocVector& z2);
/// Both computations; throws std::logic_error if they disagree.
bool check_orthogonal_sde3(const LocVector& z1, const LocVector& z2);

/// M P = D1 H D2 for a column permutation P (column j of M P is column
/// perm[j] of M).
struct Sde3Factorization {
  gate::D d1;
  gate::D d2;
  std::vector<int> perm;
};
/// Throws NotSde3Form unless M is a unitary of sde 3 over Z[xi] of this shape.
Sde3Factorization factor_sde3_unitary(const LocMatrix& m);

}  // namespace cyclosynth
