#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cyclosynth {

using Int = mpz_class;

/**
 * The cyclotomic ring Z[zeta_n] for n = p^l in {3, 8, 9}.
 *
 * Elements are stored in the power basis {1, zeta, ..., zeta^(phi-1)} and the
 * reduction rule is the cyclotomic polynomial:
 *   n = 3:  w^2   = -1 - w
 *   n = 8:  z^4   = -1
 *   n = 9:  x^6   = -1 - x^3
 */
class RingSpec {
 public:
  /// Throws InvalidRing for n outside {3, 8, 9}.
  explicit RingSpec(int n);

  int n() const noexcept { return n_; }
  int p() const noexcept { return p_; }
  int l() const noexcept { return l_; }
  int phi() const noexcept { return phi_; }

  /// Coefficients of Phi_n, lowest degree first; length phi + 1, monic.
  std::span<const int> cyclotomic_poly() const noexcept;

  bool operator==(const RingSpec&) const = default;

 private:
  int n_;
  int p_;
  int l_;
  int phi_;
};

/// An element of Z[zeta_n] in canonical (reduced) power-basis form.
class CycInt {
 public:
  explicit CycInt(RingSpec spec);

  static CycInt from_int(RingSpec spec, const Int& value);
  /// Any length; reduced modulo Phi_n.
  static CycInt from_coeffs(RingSpec spec, std::span<const Int> coeffs);
  static CycInt from_coeffs(RingSpec spec, std::initializer_list<long> coeffs);
  /// zeta^k for any integer k (negative allowed).
  static CycInt zeta_pow(RingSpec spec, long k);
  /// chi = 1 - zeta.
  static CycInt chi(RingSpec spec);

  const RingSpec& spec() const noexcept { return spec_; }
  std::span<const Int> coeffs() const noexcept { return coeffs_; }
  const Int& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;

  /// Image under zeta -> zeta^(n-1).
  CycInt conj() const;
  /// this * zeta^k without a general multiplication.
  CycInt mul_zeta_pow(long k) const;
  /// Exact division of every coefficient by an integer; nullopt if any
  /// coefficient is not divisible.
  std::optional<CycInt> div_int(const Int& d) const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  CycInt operator-() const;
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend bool operator==(const CycInt& a, const CycInt& b);

  /// "3 + 2z^1 - z^3" style rendering, for diagnostics.
  std::string to_string() const;

 private:
  CycInt(RingSpec spec, std::vector<Int>&& reduced) : spec_(spec), coeffs_(std::move(reduced)) {}
  friend CycInt reduce_poly(RingSpec spec, std::span<const Int> coeffs);

  RingSpec spec_;
  std::vector<Int> coeffs_;
};

CycInt reduce_poly(RingSpec spec, std::span<const Int> coeffs);

/// g with g * chi == a, or nullopt when chi does not divide a.
std::optional<CycInt> try_div_chi(const CycInt& a);

/// a / chi^k; throws NotDivisible.
CycInt div_chi_pow(const CycInt& a, int k);

CycInt chi_pow(RingSpec spec, int k);

/// The unit u with p = u * chi^phi.
const CycInt& p_unit(RingSpec spec);

CycInt abs_sq(const CycInt& a);

/// f(1) mod p, in [0, p).
int eval_at_one_mod_p(const CycInt& a);

}  // namespace cyclosynth
