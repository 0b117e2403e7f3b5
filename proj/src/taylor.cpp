#include "cyclosynth/taylor.hpp"

#include "cyclosynth/errors.hpp"

namespace cyclosynth {

namespace {

int mod_p(const Int& v, int p) {
  return static_cast<int>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p)));
}

Int binomial(int n, int k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// sum_i c_i * C(i, k), exact.
Int binomial_transform(const CycInt& a, int k) {
  Int s = 0;
  for (int i = k; i < a.spec().phi(); ++i) {
    const Int& c = a[i];
    if (c != 0) s += c * binomial(i, k);
  }
  return s;
}

}  // namespace

int TaylorVec::leading_zeros() const {
  int c = 0;
  while (c < static_cast<int>(entries.size()) && entries[static_cast<std::size_t>(c)] == 0) ++c;
  return c;
}

TaylorVec taylor_mod_p(const CycInt& a) {
  const RingSpec spec = a.spec();
  TaylorVec t{spec, std::vector<int>(static_cast<std::size_t>(spec.phi()))};
  for (int k = 0; k < spec.phi(); ++k) {
    Int v = binomial_transform(a, k);
    if (k % 2 == 1) v = -v;
    t.entries[static_cast<std::size_t>(k)] = mod_p(v, spec.p());
  }
  return t;
}

TaylorVec taylor_mod_p_by_substitution(const CycInt& a) {
  // Repeated division of f(x) by (x - 1) yields the coefficients of f in
  // powers of (x - 1); then (1 - x)^k = (-1)^k (x - 1)^k.
  const RingSpec spec = a.spec();
  std::vector<Int> work(a.coeffs().begin(), a.coeffs().end());
  TaylorVec t{spec, std::vector<int>(static_cast<std::size_t>(spec.phi()))};
  for (int k = 0; k < spec.phi(); ++k) {
    // Horner: remainder of work / (x - 1) is work(1); quotient overwrites work.
    Int carry = 0;
    for (int i = static_cast<int>(work.size()) - 1; i >= 0; --i) {
      const Int cur = work[static_cast<std::size_t>(i)] + carry;
      work[static_cast<std::size_t>(i)] = carry;
      carry = cur;
    }
    // After the sweep carry = f(1), work[i] holds quotient coefficient i and
    // the top slot is zero.
    work.pop_back();
    Int v = carry;
    if (k % 2 == 1) v = -v;
    t.entries[static_cast<std::size_t>(k)] = mod_p(v, spec.p());
  }
  return t;
}

std::vector<int> derivatives_mod_p(const CycInt& a, int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    out[static_cast<std::size_t>(k)] = mod_p(binomial_transform(a, k), a.spec().p());
  }
  return out;
}

std::vector<Int> phi_derivative_table(int n) {
  const RingSpec spec(n);
  const auto poly = spec.cyclotomic_poly();
  std::vector<Int> out;
  for (int k = 1; k <= spec.phi(); ++k) {
    Int s = 0;
    for (int i = k; i < static_cast<int>(poly.size()); ++i) {
      s += poly[static_cast<std::size_t>(i)] * binomial(i, k);
    }
    out.push_back(s);
  }
  return out;
}

int gde(const CycInt& a) {
  if (a.is_zero()) throw ZeroInput("gde of zero is undefined");
  const RingSpec spec = a.spec();
  int total = 0;
  CycInt cur = a;
  for (;;) {
    const int c = taylor_mod_p(cur).leading_zeros();
    if (c < spec.phi()) return total + c;
    // chi^phi divides cur: cur / chi^phi = cur * u / p.
    auto q = (cur * p_unit(spec)).div_int(spec.p());
    if (!q) throw std::logic_error("derivative criterion and p-unit disagree");
    cur = std::move(*q);
    total += spec.phi();
  }
}

int gde_oracle(const CycInt& a) {
  if (a.is_zero()) throw ZeroInput("gde of zero is undefined");
  int count = 0;
  CycInt cur = a;
  while (auto q = try_div_chi(cur)) {
    cur = std::move(*q);
    ++count;
  }
  return count;
}

}  // namespace cyclosynth
