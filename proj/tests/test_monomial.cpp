#include <doctest.h>

#include <cstdio>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "cyclosynth/errors.hpp"
#include "cyclosynth/monomial.hpp"

using namespace cyclosynth;

TEST_CASE("monomial tables are complete") {
  const MonomialTable& q = default_table(Regime::Qubit8);
  CHECK(q.target_count() == 128);
  CHECK(q.complete());
  const MonomialTable& r = default_table(Regime::QutritR3);
  CHECK(r.target_count() == 1296);
  CHECK(r.complete());
  CHECK(r.depth_reached() <= r.depth_cap());
}

TEST_CASE("as_signed_monomial") {
  const RingSpec r8(8), r3(3);
  CHECK(as_signed_monomial(LocMatrix::identity(r8, 2), Regime::Qubit8).has_value());
  CHECK_FALSE(as_signed_monomial(gate_matrix(gate::H{}, Regime::Qubit8), Regime::Qubit8).has_value());
  const auto m = as_signed_monomial(gate_matrix(gate::X{}, Regime::QutritR3), Regime::QutritR3);
  REQUIRE(m.has_value());
  CHECK(m->perm == std::vector<int>{1, 2, 0});
  const auto neg = as_signed_monomial(gate_matrix(gate::R{}, Regime::QutritR3), Regime::QutritR3);
  REQUIRE(neg.has_value());
  CHECK(neg->signs == std::vector<int>{0, 0, 1});
  // -1 = zeta_8^4 is absorbed into the phase.
  const auto q = as_signed_monomial(word_to_matrix(parse_word("T^4", Regime::Qubit8)), Regime::Qubit8);
  REQUIRE(q.has_value());
  CHECK(q->phases == std::vector<int>{0, 4});
}

TEST_CASE("monomial_decompose reproduces the matrix") {
  const RingSpec r8(8);
  CHECK(monomial_decompose(LocMatrix::identity(r8, 2), Regime::Qubit8).gates.empty());
  const LocMatrix t1 = gate_matrix(gate::T{1}, Regime::Qubit8);
  CHECK(print_word(monomial_decompose(t1, Regime::Qubit8)) == "T^1");
  CHECK_THROWS_AS(monomial_decompose(gate_matrix(gate::H{}, Regime::Qubit8), Regime::Qubit8), NotMonomial);
  for (Regime r : {Regime::Qubit8, Regime::QutritR3, Regime::QutritD9}) {
    const int dim = dim_of(r), n = ring_of(r).n();
    std::mt19937_64 rng(51);
    for (int i = 0; i < 60; ++i) {
      std::vector<int> perm(static_cast<std::size_t>(dim)), ph, sg;
      for (int j = 0; j < dim; ++j) perm[static_cast<std::size_t>(j)] = j;
      std::shuffle(perm.begin(), perm.end(), rng);
      for (int j = 0; j < dim; ++j) {
        ph.push_back(static_cast<int>(rng() % static_cast<unsigned>(n)));
        sg.push_back(n == 8 ? 0 : static_cast<int>(rng() % 2));
      }
      const LocMatrix m = gate_matrix(gate::Mono{perm, ph, sg}, r);
      const GateWord w = monomial_decompose(m, r);
      CHECK(word_to_matrix(w) == m);
      for (const auto& g : w.gates) CHECK_FALSE(std::holds_alternative<gate::Mono>(g));
    }
  }
}

TEST_CASE("table JSON round trip and cache") {
  const MonomialTable& t = default_table(Regime::Qubit8);
  const MonomialTable back = MonomialTable::from_json(t.to_json());
  CHECK(back.size() == t.size());
  CHECK(back.complete());
  std::string bad = t.to_json();
  const auto pos = bad.find("T^1");
  REQUIRE(pos != std::string::npos);
  bad.replace(pos, 3, "T^2");
  CHECK_THROWS_AS(MonomialTable::from_json(bad), ParseError);
  CHECK_THROWS_AS(MonomialTable::from_json("{\"version\": 1"), ParseError);

  const auto path = (std::filesystem::temp_directory_path() / "cyclosynth_test_table.json").string();
  std::remove(path.c_str());
  const MonomialTable& c = cached_table(Regime::Qubit8, path);
  CHECK(c.complete());
  CHECK(std::filesystem::exists(path));
  CHECK(MonomialTable::from_json([&] {
          std::ifstream in(path);
          return std::string(std::istreambuf_iterator<char>(in), {});
        }()).complete());
  std::remove(path.c_str());
}

TEST_CASE("shallow tables report incompleteness") {
  const MonomialTable t = MonomialTable::build(Regime::QutritR3, 1);
  CHECK_FALSE(t.complete());
  const LocMatrix x = gate_matrix(gate::X{}, Regime::QutritR3);
  CHECK_THROWS_AS(monomial_decompose(mat_mul(x, gate_matrix(gate::S{}, Regime::QutritR3)), t), TableIncomplete);
}
