#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cyclosynth/cli.hpp"
#include "cyclosynth/errors.hpp"
#include "cyclosynth/gates.hpp"
#include "cyclosynth/json_io.hpp"

using namespace cyclosynth;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto p = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST_CASE("JSON round trips") {
  const RingSpec r9(9);
  const CycInt a = CycInt::from_coeffs(r9, {3, -1, 0, 7, 0, 2});
  CHECK(elem_from_json(elem_to_json(a)) == a);
  const LocMatrix h = gate_matrix(gate::H{}, Regime::QutritD9);
  CHECK(matrix_from_json(matrix_to_json(h)) == h);
  CHECK(vector_from_json(vector_to_json(h.column(1)), 9) == h.column(1));
  CHECK_THROWS_AS(matrix_from_json(matrix_to_json(h), 3), SpecMismatch);
  CHECK_THROWS_AS(elem_from_json(parse_json_text(R"({"ring":9,"coeffs":[1,2]})")), ParseError);
  CHECK_THROWS_AS(parse_json_text("{"), ParseError);
  // Large integers travel as decimal strings.
  const CycInt big = CycInt::from_int(r9, Int("123456789012345678901234567890"));
  CHECK(elem_from_json(elem_to_json(big)) == big);
  CHECK(int_from_json(Json("-42")) == -42);
}

TEST_CASE("cli gde and sde") {
  const Run g = run({"gde", "--ring", "3", "--elem", R"({"ring":3,"coeffs":[3,0]})"});
  CHECK(g.code == 0);
  CHECK(g.out == "2\n");
  const std::string hfile = temp_file("cyclosynth_cli_h.json", matrix_to_json(gate_matrix(gate::H{}, Regime::QutritD9)).dump());
  const Run s = run({"sde", "--ring", "9", "--mat", hfile});
  CHECK(s.code == 0);
  CHECK(s.out == "3\n");
  const Run e = run({"sde", "--ring", "9", "--elem", R"({"ring":9,"coeffs":[1,0,0,0,0,0],"denom_exp":2})"});
  CHECK(e.out == "2\n");
  std::filesystem::remove(hfile);
}

TEST_CASE("cli errors") {
  const Run zero = run({"gde", "--ring", "8", "--elem", R"({"ring":8,"coeffs":[0,0,0,0]})"});
  CHECK(zero.code == 1);
  CHECK(zero.err.find("\"ZeroInput\"") != std::string::npos);
  const Run mismatch = run({"gde", "--ring", "3", "--elem", R"({"ring":9,"coeffs":[1,0,0,0,0,0]})"});
  CHECK(mismatch.code == 1);
  CHECK(mismatch.err.find("SpecMismatch") != std::string::npos);
  const Run syntax = run({"word2mat", "--regime", "qutrit-d", "--word", "H Q[foo]"});
  CHECK(syntax.code == 1);
  CHECK(syntax.err.find("SyntaxError") != std::string::npos);
  const Run usage = run({"enumerate", "--sde", "11"});
  CHECK(usage.code != 0);
  const Run missing = run({"gde", "--ring", "3", "--elem", "/nonexistent/file.json"});
  CHECK(missing.code == 1);
  CHECK(run({}).code != 0);
}

TEST_CASE("cli word2mat, verify and synth") {
  const std::string id = matrix_to_json(LocMatrix::identity(RingSpec(3), 3)).dump();
  CHECK(run({"verify", "--word", "", "--mat", id}).out == "true\n");
  CHECK(run({"verify", "--word", "X", "--mat", id}).out == "false\n");

  const Run m = run({"word2mat", "--word", "H D[1,0,2] H"});
  REQUIRE(m.code == 0);
  const LocMatrix u = matrix_from_json(parse_json_text(m.out));
  CHECK(u == word_to_matrix(parse_word("H D[1,0,2] H", Regime::QutritD9)));

  const std::string mat = matrix_to_json(u).dump();
  const Run s1 = run({"synth", "--regime", "qutrit-d", "--mat", mat});
  const Run s2 = run({"synth", "--regime", "qutrit-d", "--mat", mat});
  REQUIRE(s1.code == 0);
  CHECK(s1.out == s2.out);
  const Json j = parse_json_text(s1.out);
  CHECK(j.at("status") == "Complete");
  CHECK(run({"verify", "--word", j.at("word").get<std::string>(), "--mat", mat}).out == "true\n");

  const std::string q = matrix_to_json(word_to_matrix(parse_word("H T^3 H T^1 H", Regime::Qubit8))).dump();
  const Run sq = run({"synth", "--regime", "qubit", "--mat", q});
  REQUIRE(sq.code == 0);
  CHECK(run({"verify", "--word", parse_json_text(sq.out).at("word").get<std::string>(), "--mat", q}).out == "true\n");
}

TEST_CASE("cli reduce-step, delta, enumerate, random-word") {
  const std::string h0 = vector_to_json(gate_matrix(gate::H{}, Regime::QutritD9).column(0)).dump();
  const Run d = run({"delta", "--vec", h0});
  REQUIRE(d.code == 0);
  CHECK(parse_json_text(d.out).at("Delta") == 0);
  const Run r = run({"reduce-step", "--regime", "qutrit-d", "--vec", h0});
  CHECK(r.code == 0);
  const Run c = run({"enumerate", "--sde", "3", "--count-only"});
  REQUIRE(c.code == 0);
  CHECK(parse_json_text(c.out).at("count") == 5832);
  const Run e0 = run({"enumerate", "--sde", "0"});
  CHECK(std::count(e0.out.begin(), e0.out.end(), '\n') == 55);
  const Run w1 = run({"random-word", "--regime", "qubit", "--len", "12", "--seed", "5"});
  const Run w2 = run({"random-word", "--regime", "qubit", "--len", "12", "--seed", "5"});
  CHECK(w1.out == w2.out);
  CHECK(parse_word(w1.out, Regime::Qubit8).gates.size() == 12);
}
