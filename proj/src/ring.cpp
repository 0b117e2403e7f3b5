#include "cyclosynth/ring.hpp"

#include <array>
#include <mutex>
#include <sstream>

#include "cyclosynth/errors.hpp"

namespace cyclosynth {

namespace {

constexpr std::array<int, 3> kPhi3 = {1, 1, 1};
constexpr std::array<int, 5> kPhi8 = {1, 0, 0, 0, 1};
constexpr std::array<int, 7> kPhi9 = {1, 0, 0, 1, 0, 0, 1};

void check_same(const RingSpec& a, const RingSpec& b) {
  if (a != b) {
    throw SpecMismatch("ring mismatch: Z[zeta_" + std::to_string(a.n()) + "] vs Z[zeta_" +
                       std::to_string(b.n()) + "]");
  }
}

// Reduce a coefficient vector in place, top degree first. Phi_n is monic, so
// zeta^(phi+j) = -(Phi_n - x^phi) * zeta^j.
void reduce_in_place(const RingSpec& spec, std::vector<Int>& c) {
  const int phi = spec.phi();
  const auto poly = spec.cyclotomic_poly();
  for (int d = static_cast<int>(c.size()) - 1; d >= phi; --d) {
    const auto ud = static_cast<std::size_t>(d);
    if (c[ud] == 0) continue;
    const Int lead = c[ud];
    c[ud] = 0;
    for (int i = 0; i < phi; ++i) {
      if (poly[static_cast<std::size_t>(i)] != 0) {
        c[static_cast<std::size_t>(d - phi + i)] -= lead * poly[static_cast<std::size_t>(i)];
      }
    }
  }
  c.resize(static_cast<std::size_t>(phi));
}

// Multiplication by chi as a phi x phi integer matrix, stored as its
// adjugate and determinant so that g = adj * a / det solves chi * g = a.
struct ChiInverse {
  std::vector<std::vector<Int>> adj;
  Int det;
};

ChiInverse build_chi_inverse(const RingSpec& spec) {
  const int phi = spec.phi();
  const auto uphi = static_cast<std::size_t>(phi);
  // Column j = chi * zeta^j.
  std::vector<std::vector<mpq_class>> m(uphi, std::vector<mpq_class>(2 * uphi));
  const CycInt chi = CycInt::chi(spec);
  for (int j = 0; j < phi; ++j) {
    const CycInt col = chi.mul_zeta_pow(j);
    for (std::size_t i = 0; i < uphi; ++i) m[i][static_cast<std::size_t>(j)] = col.coeffs()[i];
    m[static_cast<std::size_t>(j)][uphi + static_cast<std::size_t>(j)] = 1;
  }
  // Gauss-Jordan over Q on [M | I], tracking the determinant.
  mpq_class det = 1;
  for (std::size_t col = 0; col < uphi; ++col) {
    std::size_t pivot = col;
    while (pivot < uphi && m[pivot][col] == 0) ++pivot;
    if (pivot == uphi) throw std::logic_error("multiplication by chi is singular");
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    const mpq_class pv = m[col][col];
    det *= pv;
    for (auto& x : m[col]) x /= pv;
    for (std::size_t r = 0; r < uphi; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const mpq_class factor = m[r][col];
      for (std::size_t k = 0; k < 2 * uphi; ++k) m[r][k] -= factor * m[col][k];
    }
  }
  ChiInverse out;
  out.det = det.get_num();  // |det| is the norm of chi, i.e. p
  out.adj.assign(uphi, std::vector<Int>(uphi));
  for (std::size_t i = 0; i < uphi; ++i) {
    for (std::size_t j = 0; j < uphi; ++j) {
      mpq_class v = m[i][uphi + j] * det;
      v.canonicalize();
      if (v.get_den() != 1) throw std::logic_error("adjugate is not integral");
      out.adj[i][j] = v.get_num();
    }
  }
  return out;
}

int ring_index(int n) { return n == 3 ? 0 : (n == 8 ? 1 : 2); }

const ChiInverse& chi_inverse(const RingSpec& spec) {
  static std::once_flag flags[3];
  static ChiInverse tables[3];
  const int idx = ring_index(spec.n());
  std::call_once(flags[idx], [&] { tables[idx] = build_chi_inverse(spec); });
  return tables[idx];
}

}  // namespace

RingSpec::RingSpec(int n) : n_(n) {
  switch (n) {
    case 3: p_ = 3; l_ = 1; phi_ = 2; break;
    case 8: p_ = 2; l_ = 3; phi_ = 4; break;
    case 9: p_ = 3; l_ = 2; phi_ = 6; break;
    default:
      throw InvalidRing("unsupported cyclotomic order " + std::to_string(n) +
                        "; expected 3, 8 or 9");
  }
}

std::span<const int> RingSpec::cyclotomic_poly() const noexcept {
  switch (n_) {
    case 3: return kPhi3;
    case 8: return kPhi8;
    default: return kPhi9;
  }
}

CycInt::CycInt(RingSpec spec) : spec_(spec), coeffs_(static_cast<std::size_t>(spec.phi())) {}

CycInt CycInt::from_int(RingSpec spec, const Int& value) {
  CycInt r(spec);
  r.coeffs_[0] = value;
  return r;
}

CycInt CycInt::from_coeffs(RingSpec spec, std::span<const Int> coeffs) {
  return reduce_poly(spec, coeffs);
}

CycInt CycInt::from_coeffs(RingSpec spec, std::initializer_list<long> coeffs) {
  std::vector<Int> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return reduce_poly(spec, c);
}

CycInt CycInt::zeta_pow(RingSpec spec, long k) {
  return from_int(spec, 1).mul_zeta_pow(k);
}

CycInt CycInt::chi(RingSpec spec) { return from_coeffs(spec, {1, -1}); }

bool CycInt::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

CycInt CycInt::conj() const {
  // zeta^i -> zeta^(n - i); build the degree < n polynomial then reduce.
  const int n = spec_.n();
  std::vector<Int> c(static_cast<std::size_t>(n));
  for (int i = 0; i < spec_.phi(); ++i) {
    c[static_cast<std::size_t>((n - i) % n)] += coeffs_[static_cast<std::size_t>(i)];
  }
  return reduce_poly(spec_, c);
}

CycInt CycInt::mul_zeta_pow(long k) const {
  const long n = spec_.n();
  const long shift = ((k % n) + n) % n;
  if (shift == 0) return *this;
  std::vector<Int> c(static_cast<std::size_t>(spec_.phi() + shift));
  for (int i = 0; i < spec_.phi(); ++i) {
    c[static_cast<std::size_t>(i + shift)] = coeffs_[static_cast<std::size_t>(i)];
  }
  return reduce_poly(spec_, c);
}

std::optional<CycInt> CycInt::div_int(const Int& d) const {
  if (d == 0) throw std::invalid_argument("division by zero");
  CycInt r(spec_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    mpz_divexact(r.coeffs_[i].get_mpz_t(), coeffs_[i].get_mpz_t(), d.get_mpz_t());
  }
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same(spec_, o.spec_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check_same(spec_, o.spec_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
  *this = *this * o;
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  check_same(a.spec_, b.spec_);
  const auto phi = static_cast<std::size_t>(a.spec_.phi());
  std::vector<Int> c(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  reduce_in_place(a.spec_, c);
  return CycInt(a.spec_, std::move(c));
}

bool operator==(const CycInt& a, const CycInt& b) {
  return a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_;
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < spec_.phi(); ++i) {
    const Int& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const Int mag = abs(c);
    if (i == 0 || mag != 1) os << mag;
    if (i > 0) os << "z^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycInt reduce_poly(RingSpec spec, std::span<const Int> coeffs) {
  std::vector<Int> c(coeffs.begin(), coeffs.end());
  if (c.size() < static_cast<std::size_t>(spec.phi())) c.resize(static_cast<std::size_t>(spec.phi()));
  reduce_in_place(spec, c);
  return CycInt(spec, std::move(c));
}

std::optional<CycInt> try_div_chi(const CycInt& a) {
  const RingSpec spec = a.spec();
  const ChiInverse& inv = chi_inverse(spec);
  const auto phi = static_cast<std::size_t>(spec.phi());
  std::vector<Int> g(phi);
  for (std::size_t i = 0; i < phi; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < phi; ++j) {
      if (a.coeffs()[j] != 0) mpz_addmul(acc.get_mpz_t(), inv.adj[i][j].get_mpz_t(), a.coeffs()[j].get_mpz_t());
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), inv.det.get_mpz_t())) return std::nullopt;
    mpz_divexact(g[i].get_mpz_t(), acc.get_mpz_t(), inv.det.get_mpz_t());
  }
  return reduce_poly(spec, g);
}

CycInt chi_pow(RingSpec spec, int k) {
  CycInt r = CycInt::from_int(spec, 1);
  const CycInt chi = CycInt::chi(spec);
  for (int i = 0; i < k; ++i) r *= chi;
  return r;
}

CycInt div_chi_pow(const CycInt& a, int k) {
  const RingSpec spec = a.spec();
  CycInt r = a;
  // Whole blocks of chi^phi go through p = u * chi^phi.
  while (k >= spec.phi()) {
    auto q = (r * p_unit(spec)).div_int(spec.p());
    if (!q) throw NotDivisible("element is not divisible by chi^" + std::to_string(k));
    r = std::move(*q);
    k -= spec.phi();
  }
  for (; k > 0; --k) {
    auto q = try_div_chi(r);
    if (!q) throw NotDivisible("element is not divisible by chi");
    r = std::move(*q);
  }
  return r;
}

const CycInt& p_unit(RingSpec spec) {
  static std::once_flag flags[3];
  static std::optional<CycInt> units[3];
  const int idx = ring_index(spec.n());
  std::call_once(flags[idx], [&] {
    CycInt u = CycInt::from_int(spec, spec.p());
    for (int i = 0; i < spec.phi(); ++i) {
      auto q = try_div_chi(u);
      if (!q) throw std::logic_error("p is not divisible by chi^phi");
      u = std::move(*q);
    }
    units[idx] = std::move(u);
  });
  return *units[idx];
}

CycInt abs_sq(const CycInt& a) { return a * a.conj(); }

int eval_at_one_mod_p(const CycInt& a) {
  Int s = 0;
  for (const auto& c : a.coeffs()) s += c;
  return static_cast<int>(mpz_fdiv_ui(s.get_mpz_t(), static_cast<unsigned long>(a.spec().p())));
}

}  // namespace cyclosynth
