// Command-line front end: solve instances, evaluate the odds machinery,
// certify monotonicity, run the exhaustive and Monte Carlo oracles,
// reproduce the application-family tables, and advise interactively.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsp/lsp.hpp"

namespace {

using nlohmann::json;

enum class Mode { Exact, Float };

const char* mode_name(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

Mode resolve_mode(const lsp::RawInstance& raw, const std::string& flag) {
  if (flag == "exact") {
    if (!raw.exact_capable())
      throw lsp::Error(lsp::Errc::ParseError,
                       "exact mode requires fraction or integer inputs; decimal literals force float mode");
    return Mode::Exact;
  }
  if (flag == "float") return Mode::Float;
  return raw.exact_capable() ? Mode::Exact : Mode::Float;
}

json value_json(const lsp::Rational& v) { return lsp::format_rational(v); }
json value_json(double v) { return v; }

std::string value_str(const lsp::Rational& v) { return lsp::format_rational(v); }
std::string value_str(double v) { return lsp::format_double(v); }

struct CommonArgs {
  std::string input;
  std::string p_csv;
  std::string w_csv;
  std::string mode = "auto";
  std::string format = "table";
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_instance = true) {
  if (with_instance) {
    cmd->add_option("--input", args.input, "instance file: JSON {\"p\": [...], \"w\": [...]}");
    cmd->add_option("--p", args.p_csv, "inline probabilities, comma separated (fractions or decimals)");
    cmd->add_option("--w", args.w_csv, "inline payoffs, comma separated");
    cmd->add_option("--mode", args.mode, "numeric mode: exact|float (default: exact when inputs allow)")
        ->check(CLI::IsMember({"auto", "exact", "float"}));
  }
  cmd->add_option("--format", args.format, "output format")->check(CLI::IsMember({"table", "json"}));
}

lsp::RawInstance get_instance(const CommonArgs& args) {
  if (!args.input.empty()) return lsp::load_instance(args.input);
  if (!args.p_csv.empty() || !args.w_csv.empty()) {
    lsp::RawInstance raw;
    raw.p = lsp::parse_scalar_csv(args.p_csv);
    raw.w = lsp::parse_scalar_csv(args.w_csv);
    return raw;
  }
  throw lsp::Error(lsp::Errc::ParseError, "no instance given; use --input FILE or --p ... --w ...");
}

json make_report(const std::string& command, const lsp::RawInstance& raw, Mode mode, json results) {
  return json{{"command", command},
              {"version", lsp::kVersion},
              {"instance_digest", lsp::instance_digest(raw)},
              {"mode", mode_name(mode)},
              {"instance", lsp::instance_to_json(raw)},
              {"results", std::move(results)}};
}

void emit(const json& report, const CommonArgs& args, const std::vector<std::string>& table) {
  std::string out;
  if (args.format == "json") {
    out = report.dump(2);
    out += '\n';
  } else {
    for (const auto& line : table) {
      out += line;
      out += '\n';
    }
  }
  // One atomic write per report.
  std::fwrite(out.data(), 1, out.size(), stdout);
}

std::vector<std::string> header_lines(const json& report) {
  return {
      "command:  " + report.at("command").get<std::string>(),
      "mode:     " + report.at("mode").get<std::string>(),
      "digest:   " + report.at("instance_digest").get<std::string>(),
  };
}

json set_to_json(const std::vector<int>& set) {
  json a = json::array();
  for (int k : set) a.push_back(k);
  return a;
}

std::string set_to_str(const std::vector<int>& set) {
  std::string s;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(set[i]);
  }
  return s.empty() ? "(empty)" : s;
}

// ---------------------------------------------------------------- solve --

template <class T>
json run_solve(const lsp::ProblemInstance<T>& inst, std::vector<std::string>& table) {
  lsp::DpSolution<T> sol = lsp::solve(inst);
  json e_stop = json::array(), e_keep = json::array();
  e_keep.push_back(value_json(sol.e_keep[0]));
  for (int k = 1; k <= inst.n(); ++k) {
    e_stop.push_back(value_json(sol.e_stop[static_cast<std::size_t>(k)]));
    e_keep.push_back(value_json(sol.e_keep[static_cast<std::size_t>(k)]));
  }
  table.push_back("n:        " + std::to_string(inst.n()));
  table.push_back("expected profit: " + value_str(sol.expected_profit));
  table.push_back("stopping set:    " + set_to_str(sol.stopping_set));
  if (inst.n() <= 50) {
    table.push_back("  k  e_stop(k)  e_keep(k)  decision-on-success");
    for (int k = 1; k <= inst.n(); ++k) {
      table.push_back("  " + std::to_string(k) + "  " + value_str(sol.e_stop[static_cast<std::size_t>(k)]) +
                      "  " + value_str(sol.e_keep[static_cast<std::size_t>(k)]) + "  " +
                      (sol.in_stopping_set(k) ? "STOP" : "continue"));
    }
  }
  return json{{"expected_profit", value_json(sol.expected_profit)},
              {"stopping_set", set_to_json(sol.stopping_set)},
              {"e_stop", std::move(e_stop)},
              {"e_keep", std::move(e_keep)}};
}

// ----------------------------------------------------------------- odds --

template <class T>
json run_odds(const lsp::ProblemInstance<T>& inst, std::vector<std::string>& table) {
  lsp::OddsResult<T> r = lsp::extended_odds(inst);
  table.push_back("s (threshold index): " + std::to_string(r.s));
  table.push_back("degenerate (p_s = 1): " + std::string(r.degenerate ? "yes" : "no"));
  table.push_back("threshold-rule value: " + value_str(r.value));
  return json{{"s", r.s}, {"degenerate", r.degenerate}, {"value", value_json(r.value)}};
}

// ------------------------------------------------------------- monotone --

template <class T>
json run_monotone(const lsp::ProblemInstance<T>& inst, std::vector<std::string>& table) {
  lsp::DpSolution<T> sol = lsp::solve(inst);
  lsp::MonotonicityVerdict v = lsp::certify(inst, sol);
  json results{{"monotone", v.monotone}, {"certificate", lsp::certificate_name(v.certificate)}};
  table.push_back(std::string("monotone:    ") + (v.monotone ? "yes" : "no"));
  table.push_back(std::string("certificate: ") + lsp::certificate_name(v.certificate));
  if (v.monotone) {
    results["threshold"] = v.threshold;
    table.push_back("threshold:   " + std::to_string(v.threshold));
  } else {
    results["witness"] = json::array({v.witness_gap, v.witness_member});
    table.push_back("witness:     gap at " + std::to_string(v.witness_gap) + ", member " +
                    std::to_string(v.witness_member));
  }
  results["stopping_set"] = set_to_json(sol.stopping_set);
  table.push_back("stopping set: " + set_to_str(sol.stopping_set));
  return results;
}

// --------------------------------------------------------------- oracle --

template <class T>
json run_oracle(const lsp::ProblemInstance<T>& inst, std::vector<std::string>& table) {
  lsp::StopSetEvaluation<T> best = lsp::brute_force_optimal(inst);
  table.push_back("optimal set:   " + set_to_str(best.set));
  table.push_back("optimal value: " + value_str(best.value));
  return json{{"set", set_to_json(best.set)}, {"value", value_json(best.value)}};
}

// ------------------------------------------------------------- simulate --

struct SimulateArgs {
  std::string set_csv;
  std::uint64_t trials = 1000000;
  std::uint64_t seed = 0;
  int workers = 1;
};

template <class T>
json run_simulate(const lsp::ProblemInstance<T>& inst, const SimulateArgs& sargs, std::vector<std::string>& table) {
  std::vector<int> set;
  if (sargs.set_csv.empty()) {
    set = lsp::solve(inst).stopping_set;  // default: the optimal rule
  } else {
    for (const auto& tok : lsp::parse_scalar_csv(sargs.set_csv)) {
      if (!tok.exact || lsp::rational_den(tok.value) != 1)
        throw lsp::Error(lsp::Errc::ParseError, "--set must be a comma-separated list of indices");
      set.push_back(static_cast<int>(lsp::rational_num(tok.value).convert_to<long>()));
    }
  }
  lsp::SimulationResult r = lsp::simulate(inst, set, sargs.trials, sargs.seed, sargs.workers);
  table.push_back("set:     " + set_to_str(set));
  table.push_back("trials:  " + std::to_string(r.trials));
  table.push_back("seed:    " + std::to_string(r.seed));
  table.push_back("mean:    " + lsp::format_double(r.mean));
  table.push_back("stderr:  " + lsp::format_double(r.std_error));
  return json{{"set", set_to_json(set)},
              {"trials", r.trials},
              {"seed", r.seed},
              {"workers", sargs.workers},
              {"mean", r.mean},
              {"stderr", r.std_error}};
}

// --------------------------------------------------------------- family --

struct FamilyArgs {
  std::string name;
  std::int64_t n = 0;
  std::string prob;
  std::string grid_csv;
};

json run_family(const FamilyArgs& fargs, std::vector<std::string>& table) {
  lsp::Family fam = lsp::family_from_name(fargs.name);
  lsp::FamilySpec spec;
  spec.family = fam;
  if (fam == lsp::Family::ConstantP) {
    if (fargs.prob.empty())
      throw lsp::Error(lsp::Errc::ParseError, "constant-p requires --prob");
    lsp::ParsedScalar ps = lsp::parse_scalar(fargs.prob);
    spec.p = ps.exact ? ps.value : lsp::Rational();  // decimals handled below
    if (!ps.exact) {
      // A decimal probability is still an exact binary64 value; use it as a fraction.
      spec.p = lsp::Rational(ps.approx);
    }
  }

  if (!fargs.grid_csv.empty()) {
    std::vector<std::int64_t> grid;
    for (const auto& tok : lsp::parse_scalar_csv(fargs.grid_csv)) {
      if (!tok.exact || lsp::rational_den(tok.value) != 1)
        throw lsp::Error(lsp::Errc::ParseError, "--grid must be a comma-separated list of sizes");
      grid.push_back(lsp::rational_num(tok.value).convert_to<std::int64_t>());
    }
    std::vector<lsp::AsymptoticRow> rows = lsp::asymptotic_report(spec, grid);
    json jrows = json::array();
    table.push_back("        n        s_n      s_n/n          E_n        E_n/n");
    for (const auto& row : rows) {
      jrows.push_back(json{{"n", row.n},
                           {"s", row.s},
                           {"s_over_n", row.s_over_n},
                           {"value", row.value},
                           {"value_over_n", row.value_over_n}});
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%9lld %10lld %10.7f %12.4f %12.7f", static_cast<long long>(row.n),
                    static_cast<long long>(row.s), row.s_over_n, row.value, row.value_over_n);
      table.push_back(buf);
    }
    json extra;
    if (fam == lsp::Family::Duration) {
      extra = json{{"rumor_constant", lsp::rumor_constant()}};
      table.push_back("rumour's constant: " + lsp::format_double(lsp::rumor_constant()));
    }
    json results{{"family", fargs.name}, {"rows", std::move(jrows)}};
    if (!extra.is_null()) results["constants"] = extra;
    return results;
  }

  if (fargs.n < 1) throw lsp::Error(lsp::Errc::ParseError, "--n must be >= 1");
  spec.n = fargs.n;
  std::int64_t s_formula = lsp::closed_form_threshold(spec);
  json results{{"family", fargs.name}, {"n", fargs.n}, {"s", s_formula}};
  table.push_back("family: " + fargs.name);
  table.push_back("n:      " + std::to_string(fargs.n));
  if (fam == lsp::Family::ConstantP) {
    results["p"] = lsp::format_rational(spec.p);
    table.push_back("p:      " + lsp::format_rational(spec.p));
  }
  table.push_back("s:      " + std::to_string(s_formula));

  // Cross-check through the generic machinery: exact for moderate n.
  if (fargs.n <= 2000) {
    auto inst = lsp::instantiate<lsp::Rational>(spec);
    int s_odds = lsp::odds_index(inst);
    lsp::Rational value = lsp::odds_value(inst, s_odds);
    results["odds_index"] = s_odds;
    results["odds_value"] = lsp::format_rational(value);
    table.push_back("odds index (generic solver): " + std::to_string(s_odds));
    table.push_back("threshold-rule value:        " + lsp::format_rational(value));
  } else {
    auto inst = lsp::instantiate<double>(spec);
    int s_odds = lsp::odds_index(inst);
    double value = lsp::odds_value(inst, s_odds);
    results["odds_index"] = s_odds;
    results["odds_value"] = value;
    table.push_back("odds index (generic solver): " + std::to_string(s_odds));
    table.push_back("threshold-rule value:        " + lsp::format_double(value));
  }
  if (fam == lsp::Family::ConstantP) {
    lsp::Rational e = lsp::closed_form_value(spec);
    results["E"] = lsp::format_rational(e);
    table.push_back("E:      " + lsp::format_rational(e));
  }
  return results;
}

// --------------------------------------------------------------- advise --

template <class T>
int run_advise(const lsp::ProblemInstance<T>& inst) {
  std::cout << "advise session: enter one outcome (0/1) per index; the rule stops on the first\n"
               "success whose index is in the precomputed stopping set.\n";
  lsp::advise_session(inst, std::cin, std::cout);
  return 0;
}

int dispatch(const std::string& command, const CommonArgs& cargs, const SimulateArgs& sargs) {
  lsp::RawInstance raw = get_instance(cargs);
  Mode mode = resolve_mode(raw, cargs.mode);
  std::vector<std::string> table;
  json results;

  auto with_mode = [&](auto&& fn) {
    if (mode == Mode::Exact)
      return fn(lsp::materialize<lsp::Rational>(raw));
    return fn(lsp::materialize<double>(raw));
  };

  if (command == "advise") {
    if (mode == Mode::Exact) return run_advise(lsp::materialize<lsp::Rational>(raw));
    return run_advise(lsp::materialize<double>(raw));
  }

  results = with_mode([&](const auto& inst) -> json {
    if (command == "solve") return run_solve(inst, table);
    if (command == "odds") return run_odds(inst, table);
    if (command == "monotone") return run_monotone(inst, table);
    if (command == "oracle") return run_oracle(inst, table);
    if (command == "simulate") return run_simulate(inst, sargs, table);
    throw lsp::Error(lsp::Errc::ParseError, "unknown command " + command);
  });

  json report = make_report(command, raw, mode, std::move(results));
  std::vector<std::string> full = header_lines(report);
  full.insert(full.end(), table.begin(), table.end());
  emit(report, cargs, full);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted last-success stopping: solver, odds machinery, oracles"};
  app.require_subcommand(1);

  CommonArgs solve_args, odds_args, mono_args, oracle_args, sim_args_c, advise_args;
  CommonArgs family_fmt;
  SimulateArgs sim_args;
  FamilyArgs fam_args;

  CLI::App* c_solve = app.add_subcommand("solve", "backward-induction solution and stopping set");
  add_common(c_solve, solve_args);
  CLI::App* c_odds = app.add_subcommand("odds", "threshold index s and threshold-rule value");
  add_common(c_odds, odds_args);
  CLI::App* c_mono = app.add_subcommand("monotone", "certify or refute the threshold (monotone) property");
  add_common(c_mono, mono_args);
  CLI::App* c_oracle = app.add_subcommand("oracle", "exhaustive search over all stopping sets (n <= 22)");
  add_common(c_oracle, oracle_args);
  CLI::App* c_sim = app.add_subcommand("simulate", "seeded Monte Carlo of a stopping-set rule");
  add_common(c_sim, sim_args_c);
  c_sim->add_option("--set", sim_args.set_csv, "stopping set, e.g. 4,5,7,8,9 (default: optimal)");
  c_sim->add_option("--trials", sim_args.trials, "number of trials")->default_val(1000000);
  c_sim->add_option("--seed", sim_args.seed, "RNG seed")->default_val(0);
  c_sim->add_option("--workers", sim_args.workers, "worker threads (result is worker-count independent)")
      ->default_val(1);
  CLI::App* c_family = app.add_subcommand("family", "application families and asymptotics");
  add_common(c_family, family_fmt, /*with_instance=*/false);
  c_family->add_option("--name", fam_args.name,
                       "duration | minimal-duration | uniform-small-p | constant-p")
      ->required();
  c_family->add_option("--n", fam_args.n, "instance size");
  c_family->add_option("--prob", fam_args.prob, "success probability for constant-p (fraction or decimal)");
  c_family->add_option("--grid", fam_args.grid_csv, "ascending n grid for the convergence table");
  CLI::App* c_advise = app.add_subcommand("advise", "interactive application of the optimal rule");
  add_common(c_advise, advise_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_family->parsed()) {
      std::vector<std::string> table;
      json results = run_family(fam_args, table);
      json report{{"command", "family"}, {"version", lsp::kVersion}, {"results", std::move(results)}};
      if (family_fmt.format == "json") {
        std::string out = report.dump(2) + "\n";
        std::fwrite(out.data(), 1, out.size(), stdout);
      } else {
        std::string out;
        for (const auto& line : table) {
          out += line;
          out += '\n';
        }
        std::fwrite(out.data(), 1, out.size(), stdout);
      }
      return 0;
    }
    if (c_solve->parsed()) return dispatch("solve", solve_args, sim_args);
    if (c_odds->parsed()) return dispatch("odds", odds_args, sim_args);
    if (c_mono->parsed()) return dispatch("monotone", mono_args, sim_args);
    if (c_oracle->parsed()) return dispatch("oracle", oracle_args, sim_args);
    if (c_sim->parsed()) return dispatch("simulate", sim_args_c, sim_args);
    if (c_advise->parsed()) return dispatch("advise", advise_args, sim_args);
  } catch (const lsp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == lsp::Errc::InstanceTooLarge ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
