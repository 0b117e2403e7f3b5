#include "cyclosynth/regression.hpp"

#include <sstream>

#include "cyclosynth/gates.hpp"
#include "cyclosynth/taylor.hpp"

namespace cyclosynth {

namespace {

template <class T>
std::string show(const std::vector<T>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

template <class T>
RegressionCheck expect_eq(std::string name, const T& got, const T& want) {
  std::ostringstream os;
  if constexpr (requires { show(got); }) {
    os << show(got);
  } else {
    os << got;
  }
  return {std::move(name), got == want, os.str()};
}

}  // namespace

std::vector<RegressionCheck> regression_checks() {
  const RingSpec r3(3), r8(8), r9(9);
  std::vector<RegressionCheck> out;
  const CycInt f = CycInt::from_coeffs(r9, {1, 1, 1});
  out.push_back(expect_eq("gde(1+xi+xi^2) = 2", gde(f), 2));
  out.push_back(expect_eq("sde((1+xi+xi^2)/chi^6) = 4", sde(LocElem(f, 6)), 4));
  out.push_back(expect_eq("gde(2) = 4 in Z[zeta_8]", gde(CycInt::from_int(r8, 2)), 4));
  out.push_back(expect_eq("gde(3) = 2 in Z[omega]", gde(CycInt::from_int(r3, 3)), 2));
  out.push_back(expect_eq("sde(H) = 3 over Z[xi]", sde(gate_matrix(gate::H{}, Regime::QutritD9)), 3));
  out.push_back(expect_eq("sde(H) = 1 over Z[omega]", sde(gate_matrix(gate::H{}, Regime::QutritR3)), 1));
  out.push_back(expect_eq("sde(H) = 2 over Z[zeta_8]", sde(gate_matrix(gate::H{}, Regime::Qubit8)), 2));

  const auto table = phi_derivative_table(9);
  out.push_back(expect_eq("Phi_9 derivative table", table, std::vector<Int>{9, 36, 21, 15, 6, 1}));
  bool vanish = true;
  for (std::size_t k = 0; k + 1 < table.size(); ++k) vanish = vanish && table[k] % 3 == 0;
  vanish = vanish && table.back() % 3 != 0;
  out.push_back({"Phi_9 derivatives vanish mod 3 below phi", vanish, vanish ? "yes" : "no"});

  const CycInt norm_chi = abs_sq(CycInt::chi(r9));
  const std::vector<std::vector<Int>> want{{2, -1, 0}, {4, -4, 1}, {9, -15, 6}};
  CycInt power = CycInt::from_int(r9, 1);
  for (std::size_t i = 0; i < want.size(); ++i) {
    power *= norm_chi;
    const auto abc = to_real_tau_basis(power);
    out.push_back(expect_eq("tau basis of |chi|^" + std::to_string(2 * (i + 1)),
                            std::vector<Int>(abc.begin(), abc.end()), want[i]));
  }
  return out;
}

}  // namespace cyclosynth
