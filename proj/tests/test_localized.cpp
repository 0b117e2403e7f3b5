#include <doctest.h>

#include "cyclosynth/errors.hpp"
#include "cyclosynth/gates.hpp"
#include "cyclosynth/localized.hpp"
#include "cyclosynth/taylor.hpp"
#include "test_util.hpp"

using namespace cyclosynth;

TEST_CASE("normalize") {
  const RingSpec r9(9);
  const CycInt f = CycInt::from_coeffs(r9, {1, 1, 1});
  CHECK(normalize(f, 6).denom_exp() == 4);
  const LocElem c = normalize(chi_pow(r9, 3), 3);
  CHECK(c.denom_exp() == 0);
  CHECK(c.num() == CycInt::from_int(r9, 1));
  const LocElem five = normalize(CycInt::from_int(r9, 5), 0);
  CHECK(five.denom_exp() == 0);
  CHECK(five.num() == CycInt::from_int(r9, 5));
  CHECK(normalize(CycInt(r9), 7).denom_exp() == 0);
  CHECK(sde(normalize(CycInt::from_int(r9, 1), 2)) == 2);
}

TEST_CASE("LocElem arithmetic") {
  const RingSpec r3(3);
  const LocElem inv_chi(CycInt::from_int(r3, 1), 1);
  // conj(1/chi) / chi = 1 / |chi|^2 = 1/3.
  const LocElem prod = inv_chi.conj() * inv_chi;
  CHECK(prod * LocElem(CycInt::from_int(r3, 3), 0) == LocElem(CycInt::from_int(r3, 1), 0));
  const LocElem x(CycInt::from_coeffs(r3, {2, 1}), 3);
  CHECK(x * LocElem(CycInt::from_int(r3, 1), 0) == x);
  CHECK(x - x == LocElem(r3));
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    const LocElem a(testutil::random_elem(r3, rng), static_cast<int>(rng() % 4));
    const LocElem b(testutil::random_elem(r3, rng), static_cast<int>(rng() % 4));
    const LocElem c(testutil::random_elem(r3, rng), static_cast<int>(rng() % 4));
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(a.conj().conj() == a);
  }
}

TEST_CASE("matrix plumbing") {
  std::mt19937_64 rng(32);
  for (Regime r : {Regime::Qubit8, Regime::QutritR3, Regime::QutritD9}) {
    const LocMatrix a = word_to_matrix(random_word(r, 12, rng()));
    const LocMatrix b = word_to_matrix(random_word(r, 12, rng()));
    const LocMatrix id = LocMatrix::identity(ring_of(r), dim_of(r));
    CHECK(mat_mul(a, id) == a);
    CHECK(mat_mul(id, a) == a);
    CHECK(dagger(dagger(a)) == a);
    const LocVector v = b.column(1);
    CHECK(mat_vec(mat_mul(a, b), v) == mat_vec(a, mat_vec(b, v)));
    CHECK(dagger(mat_mul(a, b)) == mat_mul(dagger(b), dagger(a)));
    std::vector<LocVector> cols;
    for (int c = 0; c < a.dim(); ++c) cols.push_back(a.column(c));
    CHECK(LocMatrix::from_columns(cols) == a);
  }
  const LocMatrix q = LocMatrix::identity(RingSpec(3), 3);
  CHECK_THROWS_AS(mat_mul(q, LocMatrix::identity(RingSpec(3), 2)), DimensionMismatch);
  CHECK_THROWS_AS(mat_mul(q, LocMatrix::identity(RingSpec(9), 3)), SpecMismatch);
}

TEST_CASE("is_unit_vector") {
  const RingSpec r3(3);
  CHECK(is_unit_vector(LocVector::basis(r3, 3, 0)));
  const LocMatrix h = gate_matrix(gate::H{}, Regime::QutritR3);
  for (int c = 0; c < 3; ++c) CHECK(is_unit_vector(h.column(c)));
  CHECK_FALSE(is_unit_vector(LocVector({CycInt::from_int(r3, 1), CycInt::from_int(r3, 1), CycInt(r3)}, 0)));
  // Invariant under exactly unitary maps.
  std::mt19937_64 rng(33);
  for (int i = 0; i < 20; ++i) {
    const LocMatrix u = word_to_matrix(random_word(Regime::QutritR3, 15, rng()));
    CHECK(is_unit_vector(mat_vec(u, h.column(1))));
  }
}

TEST_CASE("is_unitary") {
  const RingSpec r8(8);
  CHECK(is_unitary(LocMatrix::identity(r8, 2)));
  std::mt19937_64 rng(34);
  for (Regime r : {Regime::Qubit8, Regime::QutritR3, Regime::QutritD9}) {
    for (int i = 0; i < 10; ++i) {
      const LocMatrix u = word_to_matrix(random_word(r, 20, rng()));
      CHECK(is_unitary(u));
      CHECK(mat_mul(u, dagger(u)) == LocMatrix::identity(u.spec(), u.dim()));
      std::vector<CycInt> nums = u.nums();
      nums[0] += chi_pow(u.spec(), u.denom_exp());  // entry (0,0) perturbed by +1
      CHECK_FALSE(is_unitary(LocMatrix(u.dim(), nums, u.denom_exp())));
    }
  }
}

TEST_CASE("vectors pad mixed exponents and cancel common chi powers") {
  const RingSpec r9(9);
  const LocVector v = LocVector::from_entries({LocElem(CycInt::from_int(r9, 1), 2), LocElem(CycInt::from_int(r9, 1), 0)});
  CHECK(v.denom_exp() == 2);
  CHECK(v.num(1) == chi_pow(r9, 2));
  const LocVector w({chi_pow(r9, 2), CycInt(r9), chi_pow(r9, 3)}, 2);
  CHECK(w.denom_exp() == 0);
  CHECK(w.num(0) == CycInt::from_int(r9, 1));
}

TEST_CASE("sde of the Hadamard gates") {
  CHECK(sde(gate_matrix(gate::H{}, Regime::QutritD9)) == 3);
  CHECK(sde(gate_matrix(gate::H{}, Regime::QutritR3)) == 1);
  CHECK(sde(gate_matrix(gate::H{}, Regime::Qubit8)) == 2);
}

TEST_CASE("equal sde of unit-vector numerators and unitary entries") {
  std::mt19937_64 rng(35);
  for (Regime r : {Regime::Qubit8, Regime::QutritR3, Regime::QutritD9}) {
    for (int i = 0; i < 30; ++i) {
      const LocMatrix u = word_to_matrix(random_word(r, 25, rng()));
      const auto s = entry_sdes(u);
      if (sde(u) == 0) continue;
      for (int e : s) CHECK(e == sde(u));
      const LocVector c0 = u.column(0);
      for (const auto& w : c0.nums()) {
        if (!w.is_zero()) CHECK(gde(w) == 0);
      }
    }
  }
}

TEST_CASE("tau basis") {
  const RingSpec r9(9);
  const CycInt n1 = abs_sq(CycInt::chi(r9));
  CHECK(to_real_tau_basis(n1) == std::array<Int, 3>{2, -1, 0});
  CHECK(to_real_tau_basis(n1 * n1) == std::array<Int, 3>{4, -4, 1});
  CHECK(to_real_tau_basis(n1 * n1 * n1) == std::array<Int, 3>{9, -15, 6});
  CHECK_THROWS_AS(to_real_tau_basis(CycInt::zeta_pow(r9, 1)), NotReal);
  CHECK_THROWS_AS(to_real_tau_basis(CycInt::from_int(RingSpec(3), 1)), InvalidRing);
  std::mt19937_64 rng(36);
  for (int i = 0; i < 100; ++i) {
    const CycInt x = abs_sq(testutil::random_elem(r9, rng)) + CycInt::from_int(r9, static_cast<long>(rng() % 7));
    CHECK(from_real_tau_basis(to_real_tau_basis(x)) == x);
  }
}
