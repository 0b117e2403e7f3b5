#include "cyclosynth/monomial.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "cyclosynth/errors.hpp"

namespace cyclosynth {

namespace {

constexpr int kCacheVersion = 1;

std::string matrix_key(const LocMatrix& m) {
  std::string key = std::to_string(m.denom_exp());
  for (const auto& w : m.nums()) {
    for (const auto& c : w.coeffs()) {
      key += ',';
      key += c.get_str();
    }
  }
  return key;
}

std::vector<GateSym> bfs_generators(Regime regime) {
  std::vector<GateSym> gens{gate::H{}};
  if (regime == Regime::Qubit8) {
    for (int k = 1; k < 8; ++k) gens.emplace_back(gate::T{k});
    return gens;
  }
  gens.emplace_back(gate::S{});
  gens.emplace_back(gate::X{});
  gens.emplace_back(gate::R{});
  for (int i = 1; i < 27; ++i) gens.emplace_back(gate::Dw{{i % 3, (i / 3) % 3, i / 9}});
  for (int i = 1; i < 8; ++i) gens.emplace_back(gate::Rs{{i & 1, (i >> 1) & 1, (i >> 2) & 1}});
  return gens;
}

}  // namespace

std::optional<gate::Mono> as_signed_monomial(const LocMatrix& m, Regime regime) {
  const RingSpec spec = ring_of(regime);
  const int dim = dim_of(regime);
  if (m.spec() != spec || m.dim() != dim || m.denom_exp() != 0) return std::nullopt;
  gate::Mono mono;
  std::vector<bool> row_used(static_cast<std::size_t>(dim), false);
  for (int c = 0; c < dim; ++c) {
    int row = -1;
    for (int r = 0; r < dim; ++r) {
      if (m.num(r, c).is_zero()) continue;
      if (row >= 0 || row_used[static_cast<std::size_t>(r)]) return std::nullopt;
      row = r;
    }
    if (row < 0) return std::nullopt;
    row_used[static_cast<std::size_t>(row)] = true;
    const CycInt& e = m.num(row, c);
    std::optional<std::pair<int, int>> found;
    for (int sign = 0; sign < 2 && !found; ++sign) {
      for (int a = 0; a < spec.n(); ++a) {
        const CycInt z = CycInt::zeta_pow(spec, a);
        if (e == (sign ? -z : z)) {
          found = {a, sign};
          break;
        }
      }
    }
    if (!found) return std::nullopt;
    mono.perm.push_back(row);
    mono.phases.push_back(found->first);
    mono.signs.push_back(found->second);
  }
  return mono;
}

std::size_t MonomialTable::target_count() const {
  // 2 permutations x 8 x 8 phases; 6 permutations x 6^3 signed phases.
  return regime_ == Regime::Qubit8 ? 128 : 1296;
}

MonomialTable MonomialTable::build(Regime regime, int depth_cap) {
  if (regime == Regime::QutritD9) {
    throw PreconditionViolation("qutrit-d monomials are decomposed directly, not tabulated");
  }
  MonomialTable table;
  table.regime_ = regime;
  table.depth_cap_ = depth_cap;

  const auto gens = bfs_generators(regime);
  std::vector<LocMatrix> gen_mats;
  for (const auto& g : gens) gen_mats.push_back(gate_matrix(g, regime));
  const int sde_cap = sde(gate_matrix(gate::H{}, regime));

  struct Node {
    LocMatrix m;
    int parent;
    int gen;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::string> seen;
  const LocMatrix id = LocMatrix::identity(ring_of(regime), dim_of(regime));
  nodes.push_back({id, -1, -1});
  seen.insert(matrix_key(id));

  auto word_of = [&](int idx) {
    GateWord w{regime, {}};
    for (int i = idx; nodes[static_cast<std::size_t>(i)].parent >= 0; i = nodes[static_cast<std::size_t>(i)].parent) {
      w.gates.push_back(gens[static_cast<std::size_t>(nodes[static_cast<std::size_t>(i)].gen)]);
    }
    std::reverse(w.gates.begin(), w.gates.end());
    return w;
  };
  auto record = [&](int idx) {
    if (auto mono = as_signed_monomial(nodes[static_cast<std::size_t>(idx)].m, regime)) {
      table.words_.emplace(print_gate(*mono), print_word(word_of(idx)));
    }
  };
  record(0);

  std::size_t level_begin = 0;
  for (int depth = 1; depth <= depth_cap && !table.complete(); ++depth) {
    const std::size_t level_end = nodes.size();
    if (level_begin == level_end) break;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t g = 0; g < gen_mats.size(); ++g) {
        LocMatrix next = mat_mul(nodes[i].m, gen_mats[g]);
        if (sde(next) > sde_cap) continue;
        if (!seen.insert(matrix_key(next)).second) continue;
        nodes.push_back({std::move(next), static_cast<int>(i), static_cast<int>(g)});
        record(static_cast<int>(nodes.size() - 1));
      }
    }
    table.depth_reached_ = depth;
    level_begin = level_end;
  }
  return table;
}

std::optional<GateWord> MonomialTable::lookup(const gate::Mono& m) const {
  auto it = words_.find(print_gate(m));
  if (it == words_.end()) return std::nullopt;
  return parse_word(it->second, regime_);
}

std::string MonomialTable::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = kCacheVersion;
  j["regime"] = std::string(regime_name(regime_));
  j["depth_cap"] = depth_cap_;
  j["depth_reached"] = depth_reached_;
  j["words"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : words_) j["words"][k] = v;
  return j.dump(1);
}

MonomialTable MonomialTable::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("monomial cache: ") + e.what());
  }
  if (j.value("version", 0) != kCacheVersion) throw ParseError("monomial cache: unsupported version");
  MonomialTable table;
  table.regime_ = parse_regime(j.at("regime").get<std::string>());
  table.depth_cap_ = j.at("depth_cap").get<int>();
  table.depth_reached_ = j.at("depth_reached").get<int>();
  for (const auto& [key, word] : j.at("words").items()) {
    const GateWord w = parse_word(word.get<std::string>(), table.regime_);
    const auto mono = as_signed_monomial(word_to_matrix(w), table.regime_);
    if (!mono || print_gate(*mono) != key) throw ParseError("monomial cache: word does not match " + key);
    table.words_.emplace(key, word.get<std::string>());
  }
  return table;
}

const MonomialTable& default_table(Regime regime) {
  static std::once_flag flags[2];
  static std::unique_ptr<MonomialTable> tables[2];
  if (regime == Regime::QutritD9) throw PreconditionViolation("qutrit-d has no monomial table");
  const int i = regime == Regime::Qubit8 ? 0 : 1;
  std::call_once(flags[i], [&] { tables[i] = std::make_unique<MonomialTable>(MonomialTable::build(regime)); });
  return *tables[i];
}

const MonomialTable& cached_table(Regime regime, const std::string& path) {
  static std::mutex mu;
  static std::map<std::pair<int, std::string>, std::unique_ptr<MonomialTable>> tables;
  std::lock_guard lock(mu);
  auto& slot = tables[{static_cast<int>(regime), path}];
  if (slot) return *slot;
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      auto loaded = MonomialTable::from_json(ss.str());
      if (loaded.regime() == regime) {
        slot = std::make_unique<MonomialTable>(std::move(loaded));
        return *slot;
      }
    } catch (const Error&) {
      // Stale or foreign cache: rebuild below and overwrite it.
    }
  }
  slot = std::make_unique<MonomialTable>(MonomialTable::build(regime));
  std::ofstream(path) << slot->to_json() << '\n';
  return *slot;
}

namespace {

GateWord decompose_d9(const LocMatrix& m) {
  constexpr Regime rg = Regime::QutritD9;
  const LocMatrix h = gate_matrix(gate::H{}, rg);
  const LocMatrix x = gate_matrix(gate::X{}, rg);
  for (int t = 0; t < 2; ++t) {
    LocMatrix q = LocMatrix::identity(ring_of(rg), 3);
    for (int d = 0; d < 3; ++d) {
      if (d > 0) q = mat_mul(x, q);
      LocMatrix tail = t ? mat_mul(q, mat_mul(h, h)) : q;
      const auto diag = as_signed_monomial(mat_mul(m, dagger(tail)), rg);
      if (!diag || diag->perm != std::vector<int>{0, 1, 2}) continue;
      GateWord w{rg, {}};
      gate::D dg;
      for (std::size_t i = 0; i < 3; ++i) {
        dg.a[i] = diag->phases[i];
        dg.negative[i] = diag->signs[i] == 1;
      }
      if (dg != gate::D{}) w.gates.emplace_back(dg);
      for (int i = 0; i < d; ++i) w.gates.emplace_back(gate::X{});
      if (t) {
        w.gates.emplace_back(gate::H{});
        w.gates.emplace_back(gate::H{});
      }
      return w;
    }
  }
  throw std::logic_error("signed monomial without a D X (HH) decomposition");
}

}  // namespace

GateWord monomial_decompose(const LocMatrix& m, const MonomialTable& table) {
  const auto mono = as_signed_monomial(m, table.regime());
  if (!mono) throw NotMonomial("matrix is not a signed monomial over the regime's ring");
  auto w = table.lookup(*mono);
  if (!w) throw TableIncomplete("no word for monomial " + print_gate(*mono), table.depth_cap());
  if (word_to_matrix(*w) != m) throw std::logic_error("monomial table entry does not reproduce its key");
  return *w;
}

GateWord monomial_decompose(const LocMatrix& m, Regime regime) {
  if (regime != Regime::QutritD9) return monomial_decompose(m, default_table(regime));
  if (!as_signed_monomial(m, regime)) throw NotMonomial("matrix is not a signed monomial over Z[xi]");
  GateWord w = decompose_d9(m);
  if (word_to_matrix(w) != m) throw std::logic_error("qutrit-d monomial decomposition failed verification");
  return w;
}

}  // namespace cyclosynth
