#include "cyclosynth/gates.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include "cyclosynth/errors.hpp"
#include "cyclosynth/taylor.hpp"

namespace cyclosynth {

RingSpec ring_of(Regime r) {
  switch (r) {
    case Regime::Qubit8: return RingSpec(8);
    case Regime::QutritR3: return RingSpec(3);
    case Regime::QutritD9: return RingSpec(9);
  }
  throw std::logic_error("unknown regime");
}

int dim_of(Regime r) { return r == Regime::Qubit8 ? 2 : 3; }

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::Qubit8: return "qubit";
    case Regime::QutritR3: return "qutrit-r";
    case Regime::QutritD9: return "qutrit-d";
  }
  return "?";
}

Regime parse_regime(std::string_view name) {
  if (name == "qubit") return Regime::Qubit8;
  if (name == "qutrit-r") return Regime::QutritR3;
  if (name == "qutrit-d") return Regime::QutritD9;
  throw ParseError("unknown regime '" + std::string(name) + "'; expected qubit, qutrit-r or qutrit-d");
}

GateWord& GateWord::append(const GateWord& other) {
  if (other.regime != regime && !other.gates.empty()) {
    throw SpecMismatch("cannot concatenate words from different regimes");
  }
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
  return *this;
}

CycInt sqrt2(RingSpec spec8) {
  if (spec8.n() != 8) throw InvalidRing("sqrt(2) is realized in Z[zeta_8] only");
  const CycInt one = CycInt::from_int(spec8, 1);
  return CycInt::zeta_pow(spec8, 2) * CycInt::chi(spec8) * (one - CycInt::zeta_pow(spec8, 3));
}

CycInt sqrt_minus3(RingSpec spec) {
  if (spec.n() == 3) return CycInt::zeta_pow(spec, 1) * CycInt::chi(spec);
  if (spec.n() == 9) return CycInt::zeta_pow(spec, 3) - CycInt::zeta_pow(spec, 6);
  throw InvalidRing("sqrt(-3) is realized in Z[omega] or Z[xi] only");
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionViolation(what);
}

bool in_range(const std::array<int, 3>& v, int lo, int hi) {
  return std::all_of(v.begin(), v.end(), [&](int x) { return x >= lo && x < hi; });
}

// The unit chi^h / s for the Hadamard normalization s (sqrt 2 or sqrt -3),
// where h = gde(s). Computed as chi^h * s / s^2 with s^2 an integer.
struct HadamardScale {
  CycInt unit;
  int denom_exp;
};

HadamardScale compute_hadamard_scale(RingSpec spec) {
  const CycInt s = spec.n() == 8 ? sqrt2(spec) : sqrt_minus3(spec);
  const int h = gde(s);
  const Int square = spec.n() == 8 ? Int(2) : Int(-3);
  auto u = (chi_pow(spec, h) * s).div_int(square);
  if (!u) throw std::logic_error("Hadamard normalization is not a unit multiple of chi^h");
  return {*u, h};
}

const HadamardScale& hadamard_scale(RingSpec spec) {
  static const HadamardScale scales[3] = {compute_hadamard_scale(RingSpec(3)), compute_hadamard_scale(RingSpec(8)),
                                          compute_hadamard_scale(RingSpec(9))};
  return scales[spec.n() == 3 ? 0 : spec.n() == 8 ? 1 : 2];
}

LocMatrix diagonal(RingSpec spec, const std::vector<CycInt>& d) {
  const int dim = static_cast<int>(d.size());
  std::vector<CycInt> nums(static_cast<std::size_t>(dim * dim), CycInt(spec));
  for (int i = 0; i < dim; ++i) nums[static_cast<std::size_t>(i * dim + i)] = d[static_cast<std::size_t>(i)];
  return LocMatrix(dim, std::move(nums), 0);
}

CycInt signed_zeta(RingSpec spec, long k, bool negative) {
  CycInt z = CycInt::zeta_pow(spec, k);
  return negative ? -z : z;
}

}  // namespace

void validate(const GateSym& g, Regime regime) {
  const int n = ring_of(regime).n();
  const int dim = dim_of(regime);
  const bool qubit = regime == Regime::Qubit8;
  const bool rr = regime == Regime::QutritR3;
  const bool dd = regime == Regime::QutritD9;
  const std::string rn(regime_name(regime));
  std::visit(
      overloaded{
          [&](const gate::H&) {},
          [&](const gate::T& t) {
            require(qubit, "T is a qubit gate, not in " + rn);
            require(t.k >= 0 && t.k < 8, "T exponent out of range");
          },
          [&](const gate::S&) { require(rr, "S is not in the " + rn + " alphabet"); },
          [&](const gate::X&) { require(!qubit, "X is a qutrit gate"); },
          [&](const gate::R&) { require(!qubit, "R is a qutrit gate"); },
          [&](const gate::Dw& d) {
            require(rr, "Dw is not in the " + rn + " alphabet");
            require(in_range(d.a, 0, 3), "Dw exponents must lie in [0, 3)");
          },
          [&](const gate::Rs& r) {
            require(rr, "Rs is not in the " + rn + " alphabet");
            require(in_range(r.b, 0, 2), "Rs exponents must lie in {0, 1}");
          },
          [&](const gate::D& d) {
            require(dd, "D is not in the " + rn + " alphabet");
            require(in_range(d.a, 0, 9), "D exponents must lie in [0, 9)");
          },
          [&](const gate::Mono& m) {
            require(static_cast<int>(m.perm.size()) == dim && static_cast<int>(m.phases.size()) == dim &&
                        static_cast<int>(m.signs.size()) == dim,
                    "monomial gate has the wrong dimension");
            std::vector<int> sorted = m.perm;
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i < dim; ++i) require(sorted[static_cast<std::size_t>(i)] == i, "monomial perm is not a permutation");
            for (int x : m.phases) require(x >= 0 && x < n, "monomial phase out of range");
            for (int x : m.signs) require(x == 0 || x == 1, "monomial sign must be 0 or 1");
          },
      },
      g);
}

LocMatrix gate_matrix(const GateSym& g, Regime regime) {
  validate(g, regime);
  const RingSpec spec = ring_of(regime);
  const int dim = dim_of(regime);
  const CycInt one = CycInt::from_int(spec, 1);
  return std::visit(
      overloaded{
          [&](const gate::H&) {
            const HadamardScale& hs = hadamard_scale(spec);
            std::vector<CycInt> nums;
            if (dim == 2) {
              nums = {hs.unit, hs.unit, hs.unit, -hs.unit};
            } else {
              // Fourier matrix with omega = zeta^(n/3).
              const int step = spec.n() / 3;
              for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) nums.push_back(hs.unit.mul_zeta_pow(step * i * j));
              }
            }
            return LocMatrix(dim, std::move(nums), hs.denom_exp);
          },
          [&](const gate::T& t) { return diagonal(spec, {one, CycInt::zeta_pow(spec, t.k)}); },
          [&](const gate::S&) { return diagonal(spec, {one, CycInt::zeta_pow(spec, 1), one}); },
          [&](const gate::X&) {
            std::vector<CycInt> nums(9, CycInt(spec));
            for (int j = 0; j < 3; ++j) nums[static_cast<std::size_t>(((j + 1) % 3) * 3 + j)] = one;
            return LocMatrix(3, std::move(nums), 0);
          },
          [&](const gate::R&) { return diagonal(spec, {one, one, -one}); },
          [&](const gate::Dw& d) {
            return diagonal(spec, {CycInt::zeta_pow(spec, d.a[0]), CycInt::zeta_pow(spec, d.a[1]),
                                   CycInt::zeta_pow(spec, d.a[2])});
          },
          [&](const gate::Rs& r) {
            return diagonal(spec, {signed_zeta(spec, 0, r.b[0] == 1), signed_zeta(spec, 0, r.b[1] == 1),
                                   signed_zeta(spec, 0, r.b[2] == 1)});
          },
          [&](const gate::D& d) {
            return diagonal(spec, {signed_zeta(spec, d.a[0], d.negative[0]),
                                   signed_zeta(spec, d.a[1], d.negative[1]),
                                   signed_zeta(spec, d.a[2], d.negative[2])});
          },
          [&](const gate::Mono& m) {
            std::vector<CycInt> nums(static_cast<std::size_t>(dim * dim), CycInt(spec));
            for (int j = 0; j < dim; ++j) {
              const auto uj = static_cast<std::size_t>(j);
              nums[static_cast<std::size_t>(m.perm[uj] * dim + j)] =
                  signed_zeta(spec, m.phases[uj], m.signs[uj] == 1);
            }
            return LocMatrix(dim, std::move(nums), 0);
          },
      },
      g);
}

LocMatrix word_to_matrix(const GateWord& w) {
  LocMatrix acc = LocMatrix::identity(ring_of(w.regime), dim_of(w.regime));
  for (const auto& g : w.gates) acc = mat_mul(acc, gate_matrix(g, w.regime));
  return acc;
}

// ---------------------------------------------------------------------------
// Word grammar

namespace {

int floor_mod(long v, int m) { return static_cast<int>(((v % m) + m) % m); }

class TokenParser {
 public:
  TokenParser(std::string_view tok, std::size_t offset) : tok_(tok), offset_(offset) {}

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what + " in token '" + std::string(tok_) + "'", offset_ + pos_); }

  bool done() const { return pos_ == tok_.size(); }
  char peek() const { return done() ? '\0' : tok_[pos_]; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  long integer() {
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = tok_[pos_++] == '-';
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (tok_[pos_++] - '0');
      if (v > 1'000'000'000L) fail("integer too large");
    }
    return neg ? -v : v;
  }
  // Integer with an explicit sign marker kept separately ("-0" is negative).
  std::pair<bool, long> signed_exponent() {
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = tok_[pos_++] == '-';
    return {neg, integer()};
  }
  std::array<long, 3> triple() {
    expect('[');
    std::array<long, 3> v{};
    for (int i = 0; i < 3; ++i) {
      if (i > 0) expect(',');
      v[static_cast<std::size_t>(i)] = integer();
    }
    expect(']');
    return v;
  }
  void finish() {
    if (!done()) fail("unexpected trailing characters");
  }

 private:
  std::string_view tok_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

GateSym parse_token(std::string_view tok, std::size_t offset, Regime regime) {
  TokenParser tp(tok, offset);
  const int n = ring_of(regime).n();
  GateSym g;
  if (tok == "H") {
    g = gate::H{};
  } else if (tok == "S") {
    g = gate::S{};
  } else if (tok == "X") {
    g = gate::X{};
  } else if (tok == "R") {
    g = gate::R{};
  } else if (tok.starts_with("T")) {
    tp.expect('T');
    long k = 1;
    if (tp.accept('^')) k = tp.integer();
    tp.finish();
    g = gate::T{floor_mod(k, 8)};
  } else if (tok.starts_with("Dw")) {
    tp.expect('D');
    tp.expect('w');
    const auto v = tp.triple();
    tp.finish();
    g = gate::Dw{{floor_mod(v[0], 3), floor_mod(v[1], 3), floor_mod(v[2], 3)}};
  } else if (tok.starts_with("Rs")) {
    tp.expect('R');
    tp.expect('s');
    const auto v = tp.triple();
    tp.finish();
    g = gate::Rs{{floor_mod(v[0], 2), floor_mod(v[1], 2), floor_mod(v[2], 2)}};
  } else if (tok.starts_with("D")) {
    tp.expect('D');
    tp.expect('[');
    gate::D d;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i > 0) tp.expect(',');
      const auto [neg, a] = tp.signed_exponent();
      d.negative[i] = neg;
      d.a[i] = floor_mod(a, 9);
    }
    tp.expect(']');
    tp.finish();
    g = d;
  } else if (tok.starts_with("M")) {
    tp.expect('M');
    tp.expect('(');
    gate::Mono m;
    auto int_list = [&](std::vector<int>& out) {
      do {
        out.push_back(static_cast<int>(tp.integer()));
      } while (tp.accept(','));
    };
    int_list(m.perm);
    tp.expect(';');
    int_list(m.phases);
    for (auto& ph : m.phases) ph = floor_mod(ph, n);
    tp.expect(';');
    do {
      if (tp.accept('+')) m.signs.push_back(0);
      else if (tp.accept('-')) m.signs.push_back(1);
      else tp.fail("expected '+' or '-'");
    } while (tp.accept(','));
    tp.expect(')');
    tp.finish();
    g = m;
  } else {
    throw SyntaxError("unknown gate token '" + std::string(tok) + "'", offset);
  }
  try {
    validate(g, regime);
  } catch (const PreconditionViolation& e) {
    throw SyntaxError(e.what(), offset);
  }
  return g;
}

std::vector<std::pair<std::string_view, std::size_t>> split_tokens(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start), start);
  }
  return out;
}

}  // namespace

GateWord parse_word(std::string_view text, Regime regime) {
  GateWord w{regime, {}};
  for (const auto& [tok, off] : split_tokens(text)) w.gates.push_back(parse_token(tok, off, regime));
  return w;
}

GateWord parse_word_infer(std::string_view text) {
  std::optional<Regime> found;
  auto vote = [&](Regime r, std::size_t off) {
    if (found && *found != r) throw SyntaxError("word mixes gates from different regimes", off);
    found = r;
  };
  for (const auto& [tok, off] : split_tokens(text)) {
    if (tok.starts_with("T")) vote(Regime::Qubit8, off);
    else if (tok == "S" || tok.starts_with("Dw") || tok.starts_with("Rs")) vote(Regime::QutritR3, off);
    else if (tok.starts_with("D[")) vote(Regime::QutritD9, off);
  }
  if (!found) {
    if (split_tokens(text).empty()) throw ParseError("cannot infer the regime of an empty word; pass --regime");
    throw ParseError("cannot infer the regime from '" + std::string(text) + "'; pass --regime");
  }
  return parse_word(text, *found);
}

std::string print_gate(const GateSym& g) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const gate::H&) { os << "H"; },
                 [&](const gate::T& t) { os << "T^" << t.k; },
                 [&](const gate::S&) { os << "S"; },
                 [&](const gate::X&) { os << "X"; },
                 [&](const gate::R&) { os << "R"; },
                 [&](const gate::Dw& d) { os << "Dw[" << d.a[0] << ',' << d.a[1] << ',' << d.a[2] << ']'; },
                 [&](const gate::Rs& r) { os << "Rs[" << r.b[0] << ',' << r.b[1] << ',' << r.b[2] << ']'; },
                 [&](const gate::D& d) {
                   os << "D[";
                   for (std::size_t i = 0; i < 3; ++i) {
                     if (i > 0) os << ',';
                     if (d.negative[i]) os << '-';
                     os << d.a[i];
                   }
                   os << ']';
                 },
                 [&](const gate::Mono& m) {
                   auto list = [&](const std::vector<int>& v) {
                     for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
                   };
                   os << "M(";
                   list(m.perm);
                   os << ';';
                   list(m.phases);
                   os << ';';
                   for (std::size_t i = 0; i < m.signs.size(); ++i) os << (i ? "," : "") << (m.signs[i] ? '-' : '+');
                   os << ')';
                 },
             },
             g);
  return os.str();
}

std::string print_word(const GateWord& w) {
  std::string out;
  for (const auto& g : w.gates) {
    if (!out.empty()) out += ' ';
    out += print_gate(g);
  }
  return out;
}

GateWord random_word(Regime regime, int length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };
  GateWord w{regime, {}};
  for (int i = 0; i < length; ++i) {
    if (draw(2) == 0) {
      w.gates.emplace_back(gate::H{});
      continue;
    }
    switch (regime) {
      case Regime::Qubit8:
        w.gates.emplace_back(gate::T{1 + draw(7)});
        break;
      case Regime::QutritR3:
        switch (draw(5)) {
          case 0: w.gates.emplace_back(gate::S{}); break;
          case 1: w.gates.emplace_back(gate::X{}); break;
          case 2: w.gates.emplace_back(gate::R{}); break;
          case 3: w.gates.emplace_back(gate::Dw{{draw(3), draw(3), draw(3)}}); break;
          default: w.gates.emplace_back(gate::Rs{{draw(2), draw(2), draw(2)}}); break;
        }
        break;
      case Regime::QutritD9:
        switch (draw(3)) {
          case 0: w.gates.emplace_back(gate::X{}); break;
          case 1: w.gates.emplace_back(gate::R{}); break;
          default:
            w.gates.emplace_back(gate::D{{draw(9), draw(9), draw(9)}, {draw(2) == 1, draw(2) == 1, draw(2) == 1}});
            break;
        }
        break;
    }
  }
  return w;
}

}  // namespace cyclosynth
