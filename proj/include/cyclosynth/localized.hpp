#pragma once

#include <array>
#include <vector>

#include "cyclosynth/ring.hpp"

namespace cyclosynth {

/// num / chi^denom_exp in canonical form: denom_exp == 0, num == 0, or
/// chi does not divide num. The sde is then denom_exp.
class LocElem {
 public:
  explicit LocElem(RingSpec spec) : num_(spec), denom_exp_(0) {}
  /// Normalizes on construction.
  LocElem(CycInt num, int denom_exp);

  const CycInt& num() const noexcept { return num_; }
  int denom_exp() const noexcept { return denom_exp_; }
  const RingSpec& spec() const noexcept { return num_.spec(); }
  bool is_zero() const { return num_.is_zero(); }

  LocElem conj() const;

  friend LocElem operator+(const LocElem& a, const LocElem& b);
  friend LocElem operator-(const LocElem& a, const LocElem& b);
  friend LocElem operator*(const LocElem& a, const LocElem& b);
  LocElem operator-() const;
  bool operator==(const LocElem& o) const = default;

 private:
  CycInt num_;
  int denom_exp_;
};

LocElem normalize(CycInt num, int k);
int sde(const LocElem& x);

/// A column vector sharing one denominator exponent.
class LocVector {
 public:
  LocVector(std::vector<CycInt> nums, int denom_exp);
  /// Entries with differing exponents are padded to the maximum.
  static LocVector from_entries(const std::vector<LocElem>& entries);
  static LocVector basis(RingSpec spec, int dim, int index);

  const RingSpec& spec() const noexcept { return nums_.front().spec(); }
  int dim() const noexcept { return static_cast<int>(nums_.size()); }
  int denom_exp() const noexcept { return denom_exp_; }
  const std::vector<CycInt>& nums() const noexcept { return nums_; }
  const CycInt& num(int i) const { return nums_[static_cast<std::size_t>(i)]; }
  LocElem entry(int i) const { return LocElem(num(i), denom_exp_); }

  bool operator==(const LocVector&) const = default;

 private:
  std::vector<CycInt> nums_;
  int denom_exp_;
};

/// A square matrix sharing one denominator exponent; numerators row-major.
class LocMatrix {
 public:
  LocMatrix(int dim, std::vector<CycInt> nums, int denom_exp);
  static LocMatrix identity(RingSpec spec, int dim);
  static LocMatrix from_entries(int dim, const std::vector<LocElem>& entries);
  static LocMatrix from_columns(const std::vector<LocVector>& cols);

  const RingSpec& spec() const noexcept { return nums_.front().spec(); }
  int dim() const noexcept { return dim_; }
  int denom_exp() const noexcept { return denom_exp_; }
  const CycInt& num(int r, int c) const {
    return nums_[static_cast<std::size_t>(r * dim_ + c)];
  }
  const std::vector<CycInt>& nums() const noexcept { return nums_; }
  LocElem entry(int r, int c) const { return LocElem(num(r, c), denom_exp_); }
  LocVector column(int c) const;
  LocVector row(int r) const;

  bool operator==(const LocMatrix&) const = default;

 private:
  int dim_;
  std::vector<CycInt> nums_;
  int denom_exp_;
};

int sde(const LocVector& v);
int sde(const LocMatrix& m);

LocMatrix mat_mul(const LocMatrix& a, const LocMatrix& b);
LocMatrix dagger(const LocMatrix& a);
LocVector mat_vec(const LocMatrix& a, const LocVector& v);
/// <a, b> = sum conj(a_i) b_i.
LocElem inner(const LocVector& a, const LocVector& b);

bool is_unit_vector(const LocVector& v);
bool is_unitary(const LocMatrix& m);

/// Per-entry sdes (each entry canonicalized on its own).
std::vector<int> entry_sdes(const LocMatrix& m);

/// The real element x of Z[zeta_9] as A + B tau + C tau^2, tau = xi + 1/xi.
/// Throws NotReal if conj(x) != x, InvalidRing unless n = 9.
std::array<Int, 3> to_real_tau_basis(const CycInt& x);
CycInt from_real_tau_basis(const std::array<Int, 3>& abc);

}  // namespace cyclosynth
