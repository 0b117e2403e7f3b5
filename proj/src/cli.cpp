#include "cyclosynth/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "cyclosynth/enumerate.hpp"
#include "cyclosynth/errors.hpp"
#include "cyclosynth/json_io.hpp"
#include "cyclosynth/regression.hpp"
#include "cyclosynth/synth.hpp"
#include "cyclosynth/taylor.hpp"

namespace cyclosynth {

namespace {

// An argument is inline JSON when it starts with '{', a file path otherwise.
Json load_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return parse_json_text(arg);
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot read file '" + arg + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

Regime regime_for_ring(int n) {
  switch (n) {
    case 8: return Regime::Qubit8;
    case 3: return Regime::QutritR3;
    case 9: return Regime::QutritD9;
    default: throw InvalidRing("no regime over Z[zeta_" + std::to_string(n) + "]");
  }
}

void check_regime_ring(Regime r, const RingSpec& spec) {
  if (ring_of(r) != spec) {
    throw SpecMismatch("regime " + std::string(regime_name(r)) + " works over n = " +
                       std::to_string(ring_of(r).n()) + ", input has n = " + std::to_string(spec.n()));
  }
}

Json trace_json(const std::vector<int>& t) {
  Json a = Json::array();
  for (int v : t) a.push_back(v);
  return a;
}

void print_error(std::ostream& err, const std::string& kind, const std::string& message) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  err << j.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact gate synthesis over the cyclotomic rings Z[zeta_n], n in {3, 8, 9}", "cyclosynth"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  int ring = 0;
  std::string elem, vec, mat, word, regime_text, table_cache;
  int sde_f = 0, len = 0;
  std::uint64_t seed = 0;
  bool rescaled = false, count_only = false;
  std::map<std::string, std::function<int()>> actions;

  // ---- gde
  auto* gde_cmd = app.add_subcommand("gde", "chi-adic valuation of a ring element");
  gde_cmd->add_option("--ring", ring, "n in {3, 8, 9}")->required();
  gde_cmd->add_option("--elem", elem, "element JSON or file")->required();
  actions["gde"] = [&] {
    out << gde(elem_from_json(load_json_arg(elem), ring)) << '\n';
    return 0;
  };

  // ---- sde
  auto* sde_cmd = app.add_subcommand("sde", "smallest denominator exponent");
  sde_cmd->add_option("--ring", ring, "n in {3, 8, 9}")->required();
  auto* o_elem = sde_cmd->add_option("--elem", elem, "element JSON or file (optional denom_exp)");
  auto* o_vec = sde_cmd->add_option("--vec", vec, "vector JSON or file");
  auto* o_mat = sde_cmd->add_option("--mat", mat, "matrix JSON or file");
  o_elem->excludes(o_vec)->excludes(o_mat);
  o_vec->excludes(o_mat);
  actions["sde"] = [&] {
    if (!elem.empty()) out << sde(loc_elem_from_json(load_json_arg(elem), ring)) << '\n';
    else if (!vec.empty()) out << sde(vector_from_json(load_json_arg(vec), ring)) << '\n';
    else if (!mat.empty()) out << sde(matrix_from_json(load_json_arg(mat), ring)) << '\n';
    else throw ParseError("sde needs one of --elem, --vec, --mat");
    return 0;
  };

  // ---- taylor
  auto* taylor_cmd = app.add_subcommand("taylor", "coefficients of f in powers of (1 - x), mod p");
  taylor_cmd->add_option("--ring", ring, "n in {3, 8, 9}")->required();
  taylor_cmd->add_option("--elem", elem, "element JSON or file")->required();
  actions["taylor"] = [&] {
    const TaylorVec t = taylor_mod_p(elem_from_json(load_json_arg(elem), ring));
    Json j;
    j["ring"] = t.spec.n();
    j["entries"] = t.entries;
    out << j.dump() << '\n';
    return 0;
  };

  // ---- word2mat
  auto* w2m_cmd = app.add_subcommand("word2mat", "exact matrix of a gate word");
  w2m_cmd->add_option("--word", word, "whitespace-separated gate tokens")->required();
  w2m_cmd->add_option("--regime", regime_text, "qubit | qutrit-r | qutrit-d (inferred if omitted)");
  actions["word2mat"] = [&] {
    const GateWord w = regime_text.empty() ? parse_word_infer(word) : parse_word(word, parse_regime(regime_text));
    out << matrix_to_json(word_to_matrix(w)).dump() << '\n';
    return 0;
  };

  // ---- verify
  auto* verify_cmd = app.add_subcommand("verify", "exact equality of a word's matrix with a given matrix");
  verify_cmd->add_option("--word", word, "gate word")->required();
  verify_cmd->add_option("--mat", mat, "matrix JSON or file")->required();
  verify_cmd->add_option("--regime", regime_text, "defaults to the matrix ring's regime");
  actions["verify"] = [&] {
    const LocMatrix m = matrix_from_json(load_json_arg(mat));
    const Regime r = regime_text.empty() ? regime_for_ring(m.spec().n()) : parse_regime(regime_text);
    check_regime_ring(r, m.spec());
    const LocMatrix wm = word_to_matrix(parse_word(word, r));
    out << (wm.dim() == m.dim() && wm == m ? "true" : "false") << '\n';
    return 0;
  };

  // ---- synth
  auto* synth_cmd = app.add_subcommand("synth", "exact synthesis of a unitary");
  synth_cmd->add_option("--regime", regime_text, "qubit | qutrit-r | qutrit-d")->required();
  synth_cmd->add_option("--mat", mat, "matrix JSON or file")->required();
  synth_cmd->add_option("--table-cache", table_cache, "monomial table cache file (JSON)");
  actions["synth"] = [&] {
    const Regime r = parse_regime(regime_text);
    const LocMatrix m = matrix_from_json(load_json_arg(mat));
    check_regime_ring(r, m.spec());
    SynthesisResult res = [&] {
      switch (r) {
        case Regime::Qubit8:
          return table_cache.empty() ? qubit_synthesize(m) : qubit_synthesize(m, cached_table(r, table_cache));
        case Regime::QutritR3:
          return table_cache.empty() ? qutritR_synthesize(m) : qutritR_synthesize(m, cached_table(r, table_cache));
        case Regime::QutritD9:
          return qutritD_greedy(m);
      }
      throw std::logic_error("unknown regime");
    }();
    Json j;
    j["regime"] = std::string(regime_name(r));
    j["word"] = print_word(res.word);
    j["status"] = std::string(status_name(res.status));
    if (res.delta) j["Delta"] = *res.delta;
    j["sde_trace"] = trace_json(res.sde_trace);
    if (res.status != SynthStatus::Complete) j["residual"] = matrix_to_json(res.residual);
    out << j.dump() << '\n';
    return res.status == SynthStatus::Obstructed ? 2 : res.status == SynthStatus::Complete ? 0 : 1;
  };

  // ---- reduce-step
  auto* step_cmd = app.add_subcommand("reduce-step", "one sde-lowering step for a unit vector");
  step_cmd->add_option("--regime", regime_text, "qubit | qutrit-r | qutrit-d")->required();
  step_cmd->add_option("--vec", vec, "vector JSON or file")->required();
  actions["reduce-step"] = [&] {
    const Regime r = parse_regime(regime_text);
    const LocVector z = vector_from_json(load_json_arg(vec));
    check_regime_ring(r, z.spec());
    Json j;
    j["regime"] = std::string(regime_name(r));
    j["sde_before"] = sde(z);
    if (r == Regime::Qubit8) {
      const auto k = qubit_reducing_k(z);
      if (!k) throw NoSuchK("no k in [0, 4) lowers sde", -1);
      j["k"] = *k;
      j["step"] = print_word(GateWord{r, {gate::H{}, gate::T{*k}}});
      j["sde_after"] = sde(qubit_apply_step(z, *k));
    } else if (r == Regime::QutritR3) {
      const QutritRStep s = qutritR_choose_step(z);
      j["step"] = print_word(step_word(s));
      j["epsilon"] = s.epsilon;
      j["delta"] = s.delta;
      j["sde_after"] = sde(apply_step(s, z));
    } else {
      const auto res = qutritD_reduce_step(z);
      if (const auto* ob = std::get_if<Obstruction>(&res)) {
        j["obstructed"] = true;
        j["Delta"] = ob->delta;
        out << j.dump() << '\n';
        return 2;
      }
      const auto& s = std::get<QutritDStep>(res);
      j["step"] = print_word(step_word(s));
      j["epsilon"] = s.epsilon;
      j["delta"] = s.delta;
      j["sde_after"] = sde(apply_step(s, z));
    }
    out << j.dump() << '\n';
    return 0;
  };

  // ---- delta
  auto* delta_cmd = app.add_subcommand("delta", "the Clifford+D obstruction value of a unit vector over Z[xi]");
  delta_cmd->add_option("--vec", vec, "vector JSON or file")->required();
  actions["delta"] = [&] {
    const LocVector z = vector_from_json(load_json_arg(vec), 9);
    Json j;
    j["Delta"] = qutritD_delta(z);
    j["closed_form"] = qutritD_delta_closed_form(z);
    out << j.dump() << '\n';
    return 0;
  };

  // ---- enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "all unit vectors of a given sde over Z[xi]");
  enum_cmd->add_option("--sde", sde_f, "target sde f")->required()->check(CLI::Range(0, 6));
  enum_cmd->add_flag("--rescaled", rescaled, "use the 3^r (2 - tau)^s right-hand side");
  enum_cmd->add_flag("--count-only", count_only, "print only the summary record");
  actions["enumerate"] = [&] {
    const EnumMode mode = rescaled ? EnumMode::Rescaled : EnumMode::Exact;
    const auto vs = enumerate_unit_vectors(sde_f, mode);
    if (!count_only) {
      for (const auto& v : vs) out << vector_to_json(v.z).dump() << '\n';
    }
    Json j;
    j["f"] = sde_f;
    j["mode"] = rescaled ? "rescaled" : "exact";
    j["count"] = vs.size();
    out << j.dump() << '\n';
    return 0;
  };

  // ---- random-word
  auto* rw_cmd = app.add_subcommand("random-word", "seeded random gate word");
  rw_cmd->add_option("--regime", regime_text, "qubit | qutrit-r | qutrit-d")->required();
  rw_cmd->add_option("--len", len, "number of gates")->required()->check(CLI::NonNegativeNumber);
  rw_cmd->add_option("--seed", seed, "RNG seed")->required();
  actions["random-word"] = [&] {
    out << print_word(random_word(parse_regime(regime_text), len, seed)) << '\n';
    return 0;
  };

  // ---- selftest
  app.add_subcommand("selftest", "published-value regression suite");
  actions["selftest"] = [&] {
    bool all = true;
    for (const auto& c : regression_checks()) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
      all = all && c.pass;
    }
    return all ? 0 : 1;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    print_error(err, "UsageError", e.what());
    return 1;
  }

  try {
    return actions.at(app.get_subcommands().front()->get_name())();
  } catch (const Error& e) {
    print_error(err, e.kind(), e.what());
  } catch (const std::exception& e) {
    print_error(err, "InternalError", e.what());
  }
  return 1;
}

}  // namespace cyclosynth
