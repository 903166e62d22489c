#include "optiform/cli.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "optiform/bridge.h"
#include "optiform/io.h"
#include "optiform/oracle.h"

namespace optiform {

namespace {

using Report = nlohmann::ordered_json;

template <typename T>
T Expect(io::Document doc, const char* kind) {
  if (T* p = std::get_if<T>(&doc)) return std::move(*p);
  throw ValidationError(std::string("expected a ") + kind + " document, got " +
                        io::KindName(doc));
}

Report ValueReport(const SemiringValue& v) {
  return Report::parse(io::ValueToJson(v).dump());
}

Report ProfileJson(const std::vector<Variable>& vars, const Assignment& a) {
  Report out = Report::object();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    out[vars[i].name] = vars[i].domain[a[i]];
  }
  return out;
}

std::string Compact(const std::vector<Variable>& vars, const Assignment& a) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) s += ",";
    s += vars[i].domain[a[i]];
  }
  return s;
}

// "a,b,c" (labels in variable order) or "X=a,Y=b,Z=c".
Assignment ParseOutcome(const std::vector<Variable>& vars,
                        const std::string& text, const char* flag) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k == text.size() || text[k] == ',') {
      parts.push_back(text.substr(start, k - start));
      start = k + 1;
    }
  }
  if (parts.size() != vars.size()) {
    throw ValidationError(std::string(flag) + ": expected " +
                          std::to_string(vars.size()) + " values, got " +
                          std::to_string(parts.size()));
  }
  Assignment a(vars.size(), -1);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    std::string name;
    std::string label = parts[k];
    std::size_t var = k;
    if (auto eq = label.find('='); eq != std::string::npos) {
      name = label.substr(0, eq);
      label = label.substr(eq + 1);
      int idx = FindVariable(vars, name);
      if (idx < 0) {
        throw ValidationError(std::string(flag) + ": unknown variable '" +
                              name + "'");
      }
      var = idx;
    }
    int value = FindValue(vars[var], label);
    if (value < 0) {
      throw ValidationError(std::string(flag) + ": '" + label +
                            "' is not a value of '" + vars[var].name + "'");
    }
    a[var] = value;
  }
  if (std::find(a.begin(), a.end(), -1) != a.end()) {
    throw ValidationError(std::string(flag) + ": some variable has no value");
  }
  return a;
}

std::optional<Rational> ParseOffset(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return ParseRational(text);
}

EliminationMode ParseMode(const std::string& mode) {
  return mode == "s" ? EliminationMode::kStrictlyDominated
                     : EliminationMode::kNeverBestResponse;
}

Report StepsJson(const std::vector<Variable>& before_vars,
                 const std::vector<EliminationStep>& steps) {
  Report out = Report::array();
  for (const EliminationStep& step : steps) {
    Report removed = Report::object();
    for (std::size_t i = 0; i < step.removed.size(); ++i) {
      if (!step.removed[i].empty()) {
        removed[before_vars[i].name] = step.removed[i];
      }
    }
    out.push_back({{"removed", removed}});
  }
  return out;
}

Report DomainsJson(const std::vector<Variable>& vars) {
  Report out = Report::object();
  for (const Variable& v : vars) out[v.name] = v.domain;
  return out;
}

Report EliminationJson(const std::vector<Variable>& original,
                       const std::vector<Variable>& result,
                       const std::vector<EliminationStep>& steps,
                       const std::string& mode) {
  const bool singleton =
      std::all_of(result.begin(), result.end(),
                  [](const Variable& v) { return v.size() == 1; });
  Report r;
  r["mode"] = mode;
  r["rounds"] = steps.size();
  r["steps"] = StepsJson(original, steps);
  r["domains"] = DomainsJson(result);
  r["outcome"] = singleton
                     ? ProfileJson(result, Assignment(result.size(), 0))
                     : Report(nullptr);
  return r;
}

Report SolutionsJson(const std::vector<Variable>& vars,
                     const std::vector<Solution>& sols) {
  Report out = Report::array();
  for (const Solution& s : sols) {
    out.push_back({{"assignment", ProfileJson(vars, s.assignment)},
                   {"preference", ValueReport(s.preference)},
                   {"display", Compact(vars, s.assignment) + " @ " +
                                   s.preference.ToString()}});
  }
  return out;
}

Report PpNashJson(const PpGame& game) {
  Report eqs = Report::array();
  for (const Assignment& s : NashEquilibria(game)) {
    Report witness = Report::object();
    for (int i = 0; i < static_cast<int>(game.players.size()); ++i) {
      witness[game.players[i].name] = {
          {"plays", game.players[i].domain[s[i]]},
          {"best_response",
           game.players[i].domain[BestResponseTo(game, i, s)]}};
    }
    eqs.push_back({{"profile", ProfileJson(game.players, s)},
                   {"witness", witness}});
  }
  return eqs;
}

Report PayoffNashJson(const PayoffGame& game) {
  Report eqs = Report::array();
  for (const Assignment& s : NashEquilibria(game)) {
    Report witness = Report::object();
    for (int i = 0; i < static_cast<int>(game.players.size()); ++i) {
      Report best = Report::array();
      for (int b : BestResponses(game, i, s)) {
        best.push_back(game.players[i].domain[b]);
      }
      witness[game.players[i].name] = {
          {"plays", game.players[i].domain[s[i]]},
          {"payoff", ValueReport(Payoff(game, i, s))},
          {"best_responses", best}};
    }
    eqs.push_back({{"profile", ProfileJson(game.players, s)},
                   {"witness", witness}});
  }
  return eqs;
}

Report PayoffsJson(const PayoffGame& game, const Assignment& s) {
  Report out = Report::array();
  for (int i = 0; i < static_cast<int>(game.players.size()); ++i) {
    out.push_back(ValueReport(Payoff(game, i, s)));
  }
  return out;
}

// Parses "A..B" or a single seed.
std::pair<std::uint64_t, std::uint64_t> ParseSeeds(const std::string& text) {
  auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
      throw ValidationError("--seeds: malformed '" + text + "'");
    }
    return v;
  };
  std::string_view view = text;
  if (auto dots = view.find(".."); dots != std::string_view::npos) {
    auto lo = number(view.substr(0, dots));
    auto hi = number(view.substr(dots + 2));
    if (hi < lo) throw ValidationError("--seeds: empty range '" + text + "'");
    return {lo, hi};
  }
  auto one = number(view);
  return {one, one};
}

std::string OutcomeName(oracle::Outcome o) {
  switch (o) {
    case oracle::Outcome::kPass:
      return "pass";
    case oracle::Outcome::kFail:
      return "fail";
    case oracle::Outcome::kSkipped:
      return "skipped";
  }
  return "";
}

struct Options {
  std::string file;
  std::string file2;
  std::string mode = "nbr";
  std::string better;
  std::string worse;
  std::size_t budget = kDefaultDominanceBudget;
  std::string offset;
  int k = 2;
  std::string levels;
  bool exhaustive = false;
  std::string theorem;
  std::string seeds = "1..100";
};

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Preference reasoning across CP-nets, games and soft CSPs"};
  app.require_subcommand(1);
  Options o;
  // The action of the chosen subcommand; returns the exit code.
  std::function<int()> action;

  auto file_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "instance document")->required();
    return sub;
  };
  auto emit = [&](const Report& r) { out << r.dump(2) << "\n"; };
  auto emit_doc = [&](const io::Document& d) { out << io::Serialize(d); };
  auto on = [&](CLI::App* sub, std::function<int()> f) {
    sub->callback([&action, f] { action = f; });
  };

  on(file_cmd("format", "print the canonical form of a document"), [&] {
    emit_doc(io::ReadDocument(o.file));
    return kExitOk;
  });

  on(file_cmd("scsp-solve", "optimal solutions of a soft CSP"), [&] {
    auto csp = Expect<SoftCsp>(io::ReadDocument(o.file), "scsp");
    auto sols = OptimalSolutions(csp);
    Report r;
    r["command"] = "scsp-solve";
    r["semiring"] = csp.semiring.ToString();
    r["count"] = sols.size();
    r["optimal"] = SolutionsJson(csp.variables, sols);
    emit(r);
    return kExitOk;
  });

  {
    CLI::App* sub = file_cmd("scsp-join", "join two soft CSPs");
    sub->add_option("second", o.file2, "second document")->required();
    on(sub, [&] {
      auto a = Expect<SoftCsp>(io::ReadDocument(o.file), "scsp");
      auto b = Expect<SoftCsp>(io::ReadDocument(o.file2), "scsp");
      emit_doc(Join(a, b));
      return kExitOk;
    });
  }

  on(file_cmd("cpnet-optimal", "optimal outcomes of a cp-net"), [&] {
    auto net = Expect<CpNet>(io::ReadDocument(o.file), "cpnet");
    Report list = Report::array();
    for (const Assignment& a : OptimalOutcomes(net)) {
      list.push_back({{"outcome", ProfileJson(net.variables, a)},
                      {"improving_flips", ImprovingFlips(net, a).size()}});
    }
    Report r;
    r["command"] = "cpnet-optimal";
    r["count"] = list.size();
    r["optimal"] = list;
    emit(r);
    return kExitOk;
  });

  on(file_cmd("cpnet-sweep", "sweep an acyclic cp-net"), [&] {
    auto net = Expect<CpNet>(io::ReadDocument(o.file), "cpnet");
    Assignment a = SweepOptimal(net);
    Report order = Report::array();
    for (int v : *TopologicalOrder(DependencyGraph(net))) {
      order.push_back(net.variables[v].name);
    }
    Report r;
    r["command"] = "cpnet-sweep";
    r["order"] = order;
    r["outcome"] = ProfileJson(net.variables, a);
    r["optimal"] = IsOptimal(net, a);
    emit(r);
    return kExitOk;
  });

  on(file_cmd("cpnet-eligible", "consistency of opt(N)"), [&] {
    auto net = Expect<CpNet>(io::ReadDocument(o.file), "cpnet");
    auto solutions = PerfectSolutions(OptimalityConstraints(net));
    Report r;
    r["command"] = "cpnet-eligible";
    r["eligible"] = !solutions.empty();
    r["witness"] = solutions.empty()
                       ? Report(nullptr)
                       : ProfileJson(net.variables, solutions.front());
    emit(r);
    return kExitOk;
  });

  on(file_cmd("cpnet-opt-constraints", "opt(N) as a boolean soft CSP"), [&] {
    auto net = Expect<CpNet>(io::ReadDocument(o.file), "cpnet");
    emit_doc(OptimalityConstraints(net));
    return kExitOk;
  });

  on(file_cmd("cpnet-reduce", "remove redundant parents"), [&] {
    auto net = Expect<CpNet>(io::ReadDocument(o.file), "cpnet");
    emit_doc(Reduce(net));
    return kExitOk;
  });

  {
    CLI::App* sub = file_cmd("cpnet-eliminate", "iterated value elimination");
    sub->add_option("--mode", o.mode, "nbr or s")
        ->check(CLI::IsMember({"nbr", "s"}));
    on(sub, [&] {
      auto net = Expect<CpNet>(io::ReadDocument(o.file), "cpnet");
      NetElimination run = ReduceToFixpoint(net, ParseMode(o.mode));
      Report r;
      r["command"] = "cpnet-eliminate";
      r.update(EliminationJson(net.variables, run.result.variables, run.steps,
                               o.mode));
      emit(r);
      return kExitOk;
    });
  }

  {
    CLI::App* sub = file_cmd("cpnet-dominates", "dominance by worsening flips");
    sub->add_option("--better", o.better, "outcome, e.g. a,b,c")->required();
    sub->add_option("--worse", o.worse, "outcome")->required();
    sub->add_option("--budget", o.budget, "maximum expanded outcomes");
    on(sub, [&] {
      auto net = Expect<CpNet>(io::ReadDocument(o.file), "cpnet");
      Assignment b = ParseOutcome(net.variables, o.better, "--better");
      Assignment w = ParseOutcome(net.variables, o.worse, "--worse");
      Dominance d = Dominates(net, b, w, o.budget);
      Report r;
      r["command"] = "cpnet-dominates";
      r["better"] = ProfileJson(net.variables, b);
      r["worse"] = ProfileJson(net.variables, w);
      r["budget"] = o.budget;
      r["result"] = d == Dominance::kDominates      ? "dominates"
                    : d == Dominance::kNotDominated ? "not-dominated"
                                                    : "budget-exhausted";
      emit(r);
      return d == Dominance::kBudgetExhausted ? kExitBound : kExitOk;
    });
  }

  on(file_cmd("game-nash", "pure nash equilibria"), [&] {
    io::Document doc = io::ReadDocument(o.file);
    Report r;
    r["command"] = "game-nash";
    if (auto* pp = std::get_if<PpGame>(&doc)) {
      r["kind"] = "ppgame";
      r["equilibria"] = PpNashJson(*pp);
    } else {
      auto game = Expect<PayoffGame>(doc, "ppgame or payoffgame");
      r["kind"] = "payoffgame";
      r["equilibria"] = PayoffNashJson(game);
    }
    r["count"] = r["equilibria"].size();
    emit(r);
    return kExitOk;
  });

  on(file_cmd("game-pareto", "pareto efficient profiles"), [&] {
    auto game = Expect<PayoffGame>(io::ReadDocument(o.file), "payoffgame");
    Report list = Report::array();
    for (const Assignment& s : ParetoEfficient(game)) {
      list.push_back({{"profile", ProfileJson(game.players, s)},
                      {"payoffs", PayoffsJson(game, s)}});
    }
    Report r;
    r["command"] = "game-pareto";
    r["count"] = list.size();
    r["pareto"] = list;
    emit(r);
    return kExitOk;
  });

  {
    CLI::App* sub = file_cmd("game-eliminate", "iterated strategy elimination");
    sub->add_option("--mode", o.mode, "nbr or s")
        ->check(CLI::IsMember({"nbr", "s"}));
    on(sub, [&] {
      auto game = Expect<PpGame>(io::ReadDocument(o.file), "ppgame");
      GameElimination run = ReducePpFixpoint(game, ParseMode(o.mode));
      Report r;
      r["command"] = "game-eliminate";
      r.update(EliminationJson(game.players, run.result.players, run.steps,
                               o.mode));
      emit(r);
      return kExitOk;
    });
  }

  on(file_cmd("game-hierarchical", "minimal dependencies and levels"), [&] {
    auto game = Expect<PpGame>(io::ReadDocument(o.file), "ppgame");
    Hierarchy h = AnalyzeHierarchy(game);
    Report deps = Report::object();
    for (std::size_t i = 0; i < game.players.size(); ++i) {
      Report names = Report::array();
      for (int j : h.dependencies[i]) names.push_back(game.players[j].name);
      deps[game.players[i].name] = names;
    }
    Report levels = nullptr;
    if (h.hierarchical) {
      levels = Report::object();
      for (std::size_t i = 0; i < game.players.size(); ++i) {
        levels[game.players[i].name] = h.levels[i];
      }
    }
    Report r;
    r["command"] = "game-hierarchical";
    r["hierarchical"] = h.hierarchical;
    r["dependencies"] = deps;
    r["levels"] = levels;
    emit(r);
    return kExitOk;
  });

  on(file_cmd("to-game", "game of a cp-net"), [&] {
    emit_doc(GameOfCpnet(Expect<CpNet>(io::ReadDocument(o.file), "cpnet")));
    return kExitOk;
  });
  on(file_cmd("to-cpnet", "cp-net of a game"), [&] {
    emit_doc(CpnetOfGame(Expect<PpGame>(io::ReadDocument(o.file), "ppgame")));
    return kExitOk;
  });
  on(file_cmd("map-local", "local payoff game of a soft CSP"), [&] {
    emit_doc(LocalMap(Expect<SoftCsp>(io::ReadDocument(o.file), "scsp")));
    return kExitOk;
  });
  on(file_cmd("map-global", "global payoff game of a soft CSP"), [&] {
    emit_doc(GlobalMap(Expect<SoftCsp>(io::ReadDocument(o.file), "scsp")));
    return kExitOk;
  });

  {
    CLI::App* sub = file_cmd("map-to-scsp", "soft CSP of a payoff game");
    sub->add_option("--offset", o.offset, "M in cost = M - payoff");
    on(sub, [&] {
      auto game = Expect<PayoffGame>(io::ReadDocument(o.file), "payoffgame");
      emit_doc(ScspOfGame(game, ParseOffset(o.offset)));
      return kExitOk;
    });
  }

  on(file_cmd("regret-constraints", "no-regret hard constraints"), [&] {
    auto game = Expect<PayoffGame>(io::ReadDocument(o.file), "payoffgame");
    emit_doc(RegretConstraints(game));
    return kExitOk;
  });

  {
    CLI::App* sub = file_cmd("pareto-nash", "pareto efficient equilibria");
    sub->add_option("--offset", o.offset, "M in cost = M - payoff");
    on(sub, [&] {
      auto game = Expect<PayoffGame>(io::ReadDocument(o.file), "payoffgame");
      auto sols = ParetoNash(game, ParseOffset(o.offset));
      Report r;
      r["command"] = "pareto-nash";
      r["count"] = sols.size();
      r["pareto_nash"] = SolutionsJson(game.players, sols);
      emit(r);
      return kExitOk;
    });
  }

  {
    CLI::App* sub = file_cmd("tech-game", "technology adoption game");
    sub->add_option("--k", o.k, "number of technologies")
        ->check(CLI::PositiveNumber);
    on(sub, [&] {
      auto g = Expect<Digraph>(io::ReadDocument(o.file), "graph");
      emit_doc(TechGame(g, o.k));
      return kExitOk;
    });
  }

  {
    CLI::App* sub = file_cmd("well-structured", "well-structured graph test");
    sub->add_option("--levels", o.levels, "levels to verify, e.g. 0,1,1");
    sub->add_flag("--exhaustive", o.exhaustive,
                  "search level assignments instead of the greedy closure");
    on(sub, [&] {
      auto g = Expect<Digraph>(io::ReadDocument(o.file), "graph");
      Report r;
      r["command"] = "well-structured";
      std::optional<std::vector<int>> levels;
      std::string answer;
      if (!o.levels.empty()) {
        std::vector<int> given;
        std::size_t start = 0;
        for (std::size_t k = 0; k <= o.levels.size(); ++k) {
          if (k == o.levels.size() || o.levels[k] == ',') {
            std::string_view s(o.levels.data() + start, k - start);
            int v = -1;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc() || p != s.data() + s.size() || v < 0) {
              throw ValidationError("--levels: malformed '" + o.levels + "'");
            }
            given.push_back(v);
            start = k + 1;
          }
        }
        r["method"] = "verify";
        answer = LevelsWellStructured(g, given) ? "yes" : "no";
        if (answer == "yes") levels = given;
      } else if (o.exhaustive) {
        r["method"] = "exhaustive";
        auto ws = oracle::BruteWellStructured(g);
        answer = ws.answer == oracle::Answer::kYes  ? "yes"
                 : ws.answer == oracle::Answer::kNo ? "no"
                                                    : "unknown";
        if (ws.answer == oracle::Answer::kYes) levels = ws.levels;
      } else {
        r["method"] = "greedy";
        levels = WellStructuredLevels(g);
        answer = levels ? "yes" : "no";
      }
      r["well_structured"] = answer == "unknown" ? Report("unknown")
                                                 : Report(answer == "yes");
      Report lv = nullptr;
      if (levels) {
        lv = Report::object();
        for (int v = 0; v < g.size(); ++v) lv[g.nodes[v]] = (*levels)[v];
      }
      r["levels"] = lv;
      emit(r);
      return answer == "unknown" ? kExitBound : kExitOk;
    });
  }

  {
    CLI::App* sub = app.add_subcommand("check", "seeded theorem check");
    sub->add_option("--theorem", o.theorem, "theorem id")->required();
    sub->add_option("--seeds", o.seeds, "seed range A..B");
    on(sub, [&] {
      auto [lo, hi] = ParseSeeds(o.seeds);
      std::size_t counts[3] = {0, 0, 0};
      Report failures = Report::array();
      Report skipped = Report::array();
      for (std::uint64_t seed = lo; seed <= hi; ++seed) {
        oracle::Verdict v = oracle::RunTheorem(o.theorem, seed);
        ++counts[static_cast<int>(v.outcome)];
        if (v.outcome == oracle::Outcome::kFail) failures.push_back(v.detail);
        if (v.outcome == oracle::Outcome::kSkipped) {
          skipped.push_back({{"seed", seed}, {"reason", v.detail}});
        }
        if (seed == hi) break;
      }
      Report r;
      r["command"] = "check";
      r["theorem"] = o.theorem;
      r["seeds"] = o.seeds;
      r[OutcomeName(oracle::Outcome::kPass)] = counts[0];
      r[OutcomeName(oracle::Outcome::kFail)] = counts[1];
      r[OutcomeName(oracle::Outcome::kSkipped)] = counts[2];
      r["failures"] = failures;
      r["skipped_seeds"] = skipped;
      emit(r);
      return counts[1] == 0 ? kExitOk : kExitFailure;
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }
  try {
    return action();
  } catch (const BoundError& e) {
    err << "bound exceeded: " << e.what() << "\n";
    return kExitBound;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace optiform
