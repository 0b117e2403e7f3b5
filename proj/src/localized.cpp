#include "cyclosynth/localized.hpp"

#include <algorithm>
#include <limits>

#include "cyclosynth/errors.hpp"
#include "cyclosynth/taylor.hpp"

namespace cyclosynth {

namespace {

constexpr int kNoLimit = std::numeric_limits<int>::max();

void check_spec(const RingSpec& a, const RingSpec& b) {
  if (a != b) throw SpecMismatch("operands live in different rings");
}

// Strip the common chi-power from a set of numerators, at most `k` times.
// Returns the number of chi factors removed.
int cancel_common_chi(std::vector<CycInt>& nums, int k) {
  if (k == 0) return 0;
  int common = kNoLimit;
  for (const auto& w : nums) {
    if (w.is_zero()) continue;
    common = std::min(common, gde(w));
    if (common == 0) return 0;
  }
  const int cut = std::min(common, k);  // all-zero input cancels everything
  for (auto& w : nums) {
    if (!w.is_zero()) w = div_chi_pow(w, cut);
  }
  return cut;
}

CycInt scale_up(const CycInt& w, int extra) {
  if (extra == 0 || w.is_zero()) return w;
  return w * chi_pow(w.spec(), extra);
}

}  // namespace

LocElem::LocElem(CycInt num, int denom_exp) : num_(std::move(num)), denom_exp_(denom_exp) {
  if (denom_exp < 0) throw std::invalid_argument("negative denominator exponent");
  std::vector<CycInt> tmp{num_};
  denom_exp_ -= cancel_common_chi(tmp, denom_exp_);
  num_ = std::move(tmp.front());
}

LocElem normalize(CycInt num, int k) { return LocElem(std::move(num), k); }

int sde(const LocElem& x) { return x.denom_exp(); }

LocElem LocElem::conj() const {
  // conj(chi) = -zeta^(-1) chi, hence conj(a / chi^k) = conj(a) (-zeta)^k / chi^k.
  CycInt c = num_.conj().mul_zeta_pow(denom_exp_);
  if (denom_exp_ % 2 == 1) c = -c;
  return LocElem(std::move(c), denom_exp_);
}

LocElem operator+(const LocElem& a, const LocElem& b) {
  check_spec(a.spec(), b.spec());
  const int k = std::max(a.denom_exp_, b.denom_exp_);
  return LocElem(scale_up(a.num_, k - a.denom_exp_) + scale_up(b.num_, k - b.denom_exp_), k);
}

LocElem operator-(const LocElem& a, const LocElem& b) { return a + (-b); }

LocElem operator*(const LocElem& a, const LocElem& b) {
  check_spec(a.spec(), b.spec());
  return LocElem(a.num_ * b.num_, a.denom_exp_ + b.denom_exp_);
}

LocElem LocElem::operator-() const {
  LocElem r(*this);
  r.num_ = -r.num_;
  return r;
}

LocVector::LocVector(std::vector<CycInt> nums, int denom_exp)
    : nums_(std::move(nums)), denom_exp_(denom_exp) {
  if (nums_.empty()) throw DimensionMismatch("empty vector");
  for (const auto& w : nums_) check_spec(w.spec(), nums_.front().spec());
  if (denom_exp < 0) throw std::invalid_argument("negative denominator exponent");
  denom_exp_ -= cancel_common_chi(nums_, denom_exp_);
}

LocVector LocVector::from_entries(const std::vector<LocElem>& entries) {
  if (entries.empty()) throw DimensionMismatch("empty vector");
  int k = 0;
  for (const auto& e : entries) k = std::max(k, e.denom_exp());
  std::vector<CycInt> nums;
  for (const auto& e : entries) nums.push_back(scale_up(e.num(), k - e.denom_exp()));
  return LocVector(std::move(nums), k);
}

LocVector LocVector::basis(RingSpec spec, int dim, int index) {
  std::vector<CycInt> nums(static_cast<std::size_t>(dim), CycInt(spec));
  nums[static_cast<std::size_t>(index)] = CycInt::from_int(spec, 1);
  return LocVector(std::move(nums), 0);
}

LocMatrix::LocMatrix(int dim, std::vector<CycInt> nums, int denom_exp)
    : dim_(dim), nums_(std::move(nums)), denom_exp_(denom_exp) {
  if (dim <= 0 || nums_.size() != static_cast<std::size_t>(dim * dim)) {
    throw DimensionMismatch("matrix numerator count does not match dimension");
  }
  for (const auto& w : nums_) check_spec(w.spec(), nums_.front().spec());
  if (denom_exp < 0) throw std::invalid_argument("negative denominator exponent");
  denom_exp_ -= cancel_common_chi(nums_, denom_exp_);
}

LocMatrix LocMatrix::identity(RingSpec spec, int dim) {
  std::vector<CycInt> nums(static_cast<std::size_t>(dim * dim), CycInt(spec));
  for (int i = 0; i < dim; ++i) nums[static_cast<std::size_t>(i * dim + i)] = CycInt::from_int(spec, 1);
  return LocMatrix(dim, std::move(nums), 0);
}

LocMatrix LocMatrix::from_entries(int dim, const std::vector<LocElem>& entries) {
  if (entries.size() != static_cast<std::size_t>(dim * dim)) {
    throw DimensionMismatch("entry count does not match dimension");
  }
  int k = 0;
  for (const auto& e : entries) k = std::max(k, e.denom_exp());
  std::vector<CycInt> nums;
  for (const auto& e : entries) nums.push_back(scale_up(e.num(), k - e.denom_exp()));
  return LocMatrix(dim, std::move(nums), k);
}

LocMatrix LocMatrix::from_columns(const std::vector<LocVector>& cols) {
  const int dim = static_cast<int>(cols.size());
  std::vector<LocElem> entries;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      if (cols[static_cast<std::size_t>(c)].dim() != dim) throw DimensionMismatch("column length");
      entries.push_back(cols[static_cast<std::size_t>(c)].entry(r));
    }
  }
  return from_entries(dim, entries);
}

LocVector LocMatrix::column(int c) const {
  std::vector<CycInt> nums;
  for (int r = 0; r < dim_; ++r) nums.push_back(num(r, c));
  return LocVector(std::move(nums), denom_exp_);
}

LocVector LocMatrix::row(int r) const {
  std::vector<CycInt> nums;
  for (int c = 0; c < dim_; ++c) nums.push_back(num(r, c));
  return LocVector(std::move(nums), denom_exp_);
}

int sde(const LocVector& v) { return v.denom_exp(); }
int sde(const LocMatrix& m) { return m.denom_exp(); }

LocMatrix mat_mul(const LocMatrix& a, const LocMatrix& b) {
  check_spec(a.spec(), b.spec());
  if (a.dim() != b.dim()) throw DimensionMismatch("mat_mul dimension mismatch");
  const int d = a.dim();
  std::vector<CycInt> nums;
  nums.reserve(static_cast<std::size_t>(d * d));
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      CycInt acc(a.spec());
      for (int k = 0; k < d; ++k) {
        if (a.num(r, k).is_zero() || b.num(k, c).is_zero()) continue;
        acc += a.num(r, k) * b.num(k, c);
      }
      nums.push_back(std::move(acc));
    }
  }
  return LocMatrix(d, std::move(nums), a.denom_exp() + b.denom_exp());
}

LocMatrix dagger(const LocMatrix& a) {
  const int d = a.dim();
  std::vector<LocElem> entries;
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) entries.push_back(a.entry(c, r).conj());
  }
  return LocMatrix::from_entries(d, entries);
}

LocVector mat_vec(const LocMatrix& a, const LocVector& v) {
  check_spec(a.spec(), v.spec());
  if (a.dim() != v.dim()) throw DimensionMismatch("mat_vec dimension mismatch");
  std::vector<CycInt> nums;
  for (int r = 0; r < a.dim(); ++r) {
    CycInt acc(a.spec());
    for (int k = 0; k < a.dim(); ++k) {
      if (a.num(r, k).is_zero() || v.num(k).is_zero()) continue;
      acc += a.num(r, k) * v.num(k);
    }
    nums.push_back(std::move(acc));
  }
  return LocVector(std::move(nums), a.denom_exp() + v.denom_exp());
}

LocElem inner(const LocVector& a, const LocVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("inner product dimension mismatch");
  LocElem acc(a.spec());
  for (int i = 0; i < a.dim(); ++i) acc = acc + a.entry(i).conj() * b.entry(i);
  return acc;
}

bool is_unit_vector(const LocVector& v) {
  const RingSpec spec = v.spec();
  CycInt lhs(spec);
  for (const auto& w : v.nums()) lhs += abs_sq(w);
  CycInt rhs = CycInt::from_int(spec, 1);
  const CycInt chi_norm = abs_sq(CycInt::chi(spec));
  for (int i = 0; i < v.denom_exp(); ++i) rhs *= chi_norm;
  return lhs == rhs;
}

bool is_unitary(const LocMatrix& m) {
  return mat_mul(dagger(m), m) == LocMatrix::identity(m.spec(), m.dim());
}

std::vector<int> entry_sdes(const LocMatrix& m) {
  std::vector<int> out;
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) out.push_back(sde(m.entry(r, c)));
  }
  return out;
}

namespace {

struct TauBasis {
  CycInt one, tau, tau2;
};

const TauBasis& tau_basis() {
  static const TauBasis basis = [] {
    const RingSpec spec(9);
    const CycInt tau = CycInt::zeta_pow(spec, 1) + CycInt::zeta_pow(spec, -1);
    return TauBasis{CycInt::from_int(spec, 1), tau, tau * tau};
  }();
  return basis;
}

}  // namespace

std::array<Int, 3> to_real_tau_basis(const CycInt& x) {
  if (x.spec().n() != 9) throw InvalidRing("tau basis is defined for n = 9 only");
  if (x.conj() != x) throw NotReal("element is not fixed by complex conjugation");
  // Solve x = A + B tau + C tau^2 over Q by Gaussian elimination on the six
  // power-basis coordinates, then insist on an exact integral reconstruction.
  const TauBasis& tb = tau_basis();
  std::vector<std::array<mpq_class, 4>> rows(6);
  for (std::size_t i = 0; i < 6; ++i) {
    rows[i] = {tb.one.coeffs()[i], tb.tau.coeffs()[i], tb.tau2.coeffs()[i], x.coeffs()[i]};
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) throw std::logic_error("tau basis is degenerate");
    std::swap(rows[piv], rows[r]);
    const mpq_class pv = rows[r][col];
    for (auto& v : rows[r]) v /= pv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][col] == 0) continue;
      const mpq_class f = rows[o][col];
      for (std::size_t k = 0; k < 4; ++k) rows[o][k] -= f * rows[r][k];
    }
    ++r;
  }
  std::array<Int, 3> abc;
  for (std::size_t i = 0; i < 3; ++i) {
    if (rows[i][3].get_den() != 1) throw NotReal("element is not in Z[tau]");
    abc[i] = rows[i][3].get_num();
  }
  if (from_real_tau_basis(abc) != x) throw NotReal("element is not in the span of 1, tau, tau^2");
  return abc;
}

CycInt from_real_tau_basis(const std::array<Int, 3>& abc) {
  const RingSpec spec(9);
  const TauBasis& tb = tau_basis();
  return CycInt::from_int(spec, abc[0]) + CycInt::from_int(spec, abc[1]) * tb.tau +
         CycInt::from_int(spec, abc[2]) * tb.tau2;
}

}  // namespace cyclosynth
