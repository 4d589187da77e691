// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end: game check|solve|enumerate|reduce|generate|hunt.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mcg/mcg.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitCapReached = 3;

struct Options {
  std::string input;
  std::string output;
  std::string trace;
  std::string certificate;
  std::string mode;
  std::optional<std::uint64_t> seed;
  long long cap_profiles = mcg::kDefaultProfileCap;
  long long cap_steps = mcg::kDefaultStepCap;
  std::optional<double> tolerance;

  std::string flavor = "complementarities";
  int players = 3;
  int resources = 5;
  int rank = 0;
  std::string matroid = "any";
  std::string costs = "any";
  std::string aggregator = "any";
  int p = 2;
  int max_value = 5;
  bool monotone_dependence = false;
  long long attempts = 100'000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_to(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

mcg::GameInstance load(const Options& o) {
  if (o.input.empty()) throw std::runtime_error("--input is required");
  mcg::GameInstance game = mcg::parse_game_file(read_file(o.input));
  if (o.tolerance) game.tolerance = *o.tolerance;
  return game;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string values_text(const std::vector<mcg::CostValue>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + v[k].str();
  return out + ")";
}

int run_check(const Options& o) {
  mcg::GameInstance game = load(o);
  std::ostringstream r;
  bool ok = true;
  r << "file: " << o.input << "\n";
  r << "load: ok\n";
  r << "flavor: " << mcg::to_string(game.flavor()) << "\n";
  r << "players: " << game.players << "\n";
  r << "resources: " << game.resource_count() << "\n";
  for (int i = 0; i < game.players; ++i) {
    const auto& space = game.spaces[i];
    r << "player." << i + 1 << ".strategies: ";
    if (std::holds_alternative<mcg::MatroidOracle>(space)) {
      r << "matroid\n";
    } else {
      const auto& list = std::get<mcg::ExplicitStrategies>(space).strategies;
      auto verdict = mcg::verify_base_axioms(list);
      r << (verdict.is_matroid() ? "explicit list satisfying the exchange axiom"
                                 : "not a matroid: " + verdict.violation->describe(game.resources))
        << "\n";
    }
  }
  mcg::Conformity c = mcg::assess_conformity(game);
  r << "matroid_spaces: " << yes_no(c.matroid_spaces) << "\n";
  if (game.is_mixed()) {
    bool conforms = mcg::mixed_game_conforms(game);
    r << "mixed.equilibrium_class: " << yes_no(conforms) << "\n";
    ok = ok && conforms;
  } else if (game.flavor() == mcg::Flavor::kPlayerSpecific) {
    ok = ok && c.matroid_spaces;
  } else {
    auto view = mcg::complementarity_view(game);
    const auto& g = std::get<mcg::ComplementarityCosts>(view.costs).aggregator;
    if (game.flavor() == mcg::Flavor::kComplementarities) {
      static const char* kinds[] = {"sum", "max", "lp", "table"};
      r << "aggregator: " << kinds[static_cast<int>(g.kind())] << "\n";
    }
    r << "aggregator.weakly_monotone: " << yes_no(c.weakly_monotone);
    if (!c.weakly_monotone && g.kind() == mcg::AggregatorKind::kTable) {
      auto wm = mcg::check_weak_monotonicity(g, mcg::reachable_cost_values(view), view.tolerance);
      const auto& w = *wm.witness;
      r << " (x=" << w.x.str() << ", y=" << w.y.str() << ": g(v',x) < g(v',y) at v'="
        << values_text(w.less_context) << ", g(v',x) > g(v',y) at v'=" << values_text(w.greater_context)
        << ")";
    }
    r << "\n";
    if (c.weakly_monotone) r << "costs.monotone_wrt_g: " << yes_no(c.costs_monotone_wrt_g) << "\n";
    r << "domain: " << (c.reachable_domain_only ? "reachable" : "exact") << "\n";
    ok = ok && c.certified();
  }
  r << "dynamics.certified: " << yes_no(c.certified()) << "\n";
  if (!c.detail.empty()) r << "detail: " << c.detail << "\n";
  if (!o.certificate.empty()) {
    auto start = std::chrono::steady_clock::now();
    std::string problem = mcg::verify_no_pne_certificate(game, read_file(o.certificate));
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r << "certificate: " << (problem.empty() ? "valid" : "invalid: " + problem) << "\n";
    r << "certificate.seconds: " << seconds << "\n";
    ok = ok && problem.empty();
  }
  r << "status: " << (ok ? "pass" : "fail") << "\n";
  write_to(o.output, r.str());
  return ok ? 0 : kExitCheckFailed;
}

mcg::StrategyProfile initial_profile(const mcg::GameInstance& game, const Options& o) {
  if (!o.seed) return mcg::default_profile(game);
  mcg::Rng rng(*o.seed);
  mcg::StrategyProfile s;
  for (int i = 0; i < game.players; ++i) s.push_back(rng.pick(mcg::strategies_of(game, i)));
  return s;
}

int run_solve(const Options& o) {
  mcg::GameInstance game = load(o);
  auto trace = mcg::run_local_move_dynamics(game, initial_profile(game, o), o.cap_steps);
  std::string csv = mcg::trace_csv(game, trace);
  if (o.trace.empty()) {
    std::cout << csv;
  } else {
    write_to(o.trace, csv);
  }
  std::ostringstream r;
  r << "terminal: " << mcg::to_string(trace.terminal) << "\n";
  r << "certified: " << yes_no(trace.certified) << "\n";
  r << "steps: " << trace.steps.size() << "\n";
  r << "profile: " << mcg::profile_text(game, trace.final_profile) << "\n";
  for (int i = 0; i < game.players; ++i) {
    r << "cost." << i + 1 << ": " << mcg::player_cost(game, trace.final_profile, i).str() << "\n";
  }
  write_to(o.output, r.str());
  switch (trace.terminal) {
    case mcg::Terminal::kPne: return 0;
    case mcg::Terminal::kCapReached: return kExitCapReached;
    default: return kExitCheckFailed;
  }
}

int run_enumerate(const Options& o) {
  mcg::GameInstance game = load(o);
  auto pne = mcg::brute_force_pne(game, o.cap_profiles);
  std::ostringstream r;
  r << "pne_count: " << pne.size() << "\n";
  for (const auto& s : pne) r << "pne: " << mcg::profile_text(game, s) << "\n";
  write_to(o.output, r.str());
  if (pne.empty() && !o.certificate.empty()) write_to(o.certificate, mcg::no_pne_certificate(game));
  return 0;
}

int run_reduce(const Options& o) {
  mcg::GameInstance game = load(o);
  mcg::Reduction red = [&] {
    if (o.mode == "weighted-to-setfunctional") return mcg::reduce_weighted_to_setfunctional(game);
    if (o.mode == "mixed-singleton") return mcg::reduce_mixed_singleton_to_player_specific(game);
    if (o.mode == "mixed-01") return mcg::reduce_mixed_01_to_player_specific(game);
    if (o.mode == "mixed-md") return mcg::reduce_mixed_md_to_setfunctional(game);
    throw mcg::DomainError("unknown --mode '" + o.mode +
                           "' (weighted-to-setfunctional, mixed-singleton, mixed-01, mixed-md)");
  }();
  write_to(o.output, mcg::serialize_game(red.game));
  std::cerr << "transfer: " << mcg::to_string(red.direction) << "\nnote: " << red.note << "\n";
  return 0;
}

template <class Enum>
Enum choose(const std::string& name, const std::vector<std::pair<std::string, Enum>>& table,
            const std::string& flag) {
  for (const auto& [n, e] : table) {
    if (n == name) return e;
  }
  throw mcg::DomainError("unknown value '" + name + "' for " + flag);
}

mcg::MatroidFamily matroid_family(const std::string& s) {
  using M = mcg::MatroidFamily;
  return choose<M>(s, {{"uniform", M::kUniform}, {"partition", M::kPartition}, {"graphic", M::kGraphic},
                       {"bases", M::kExplicitBases}, {"any", M::kAny}}, "--matroid");
}

mcg::Flavor flavor(const std::string& s) {
  auto f = mcg::parse_flavor(s);
  if (!f) throw mcg::DomainError("unknown flavor '" + s + "'");
  return *f;
}

int run_generate(const Options& o) {
  using S = mcg::SetCostFamily;
  using A = mcg::AggregatorChoice;
  mcg::GenerateParams p;
  p.flavor = flavor(o.flavor);
  p.players = o.players;
  p.resources = o.resources;
  p.rank = o.rank;
  p.matroids = matroid_family(o.matroid);
  p.costs = choose<S>(o.costs, {{"count", S::kCount}, {"weight", S::kWeight}, {"set", S::kSet}, {"any", S::kAny}},
                      "--costs");
  p.aggregator = choose<A>(o.aggregator, {{"sum", A::kSum}, {"max", A::kMax}, {"lp", A::kLp},
                                          {"table", A::kTable}, {"any", A::kAny}}, "--aggregator");
  p.p = o.p;
  p.max_value = o.max_value;
  p.monotone_dependence = o.monotone_dependence;
  p.seed = o.seed.value_or(0);
  write_to(o.output, mcg::serialize_game(mcg::generate_game(p)));
  return 0;
}

int run_hunt(const Options& o) {
  mcg::HuntParams p;
  p.flavor = flavor(o.flavor == "complementarities" ? "mixed" : o.flavor);
  p.players = o.players;
  p.resources = o.resources;
  p.rank = o.rank > 0 ? o.rank : 2;
  p.max_value = o.max_value;
  p.matroids = matroid_family(o.matroid);
  p.attempts = o.attempts;
  p.seed = o.seed.value_or(0);
  auto result = mcg::hunt_no_pne(p);
  std::cerr << "attempts: " << result.attempts << "\nskipped_conforming: " << result.skipped_conforming << "\n";
  if (!result.game) {
    std::cerr << "found: no\n";
    return kExitCheckFailed;
  }
  std::cerr << "found: yes\n";
  write_to(o.output, mcg::serialize_game(*result.game));
  if (!o.certificate.empty()) write_to(o.certificate, mcg::no_pne_certificate(*result.game));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid congestion games: checks, dynamics, equilibria and reductions"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "game file");
    sub->add_option("--output", o.output, "output path (default stdout)");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--cap-profiles", o.cap_profiles, "profile enumeration cap")->capture_default_str();
    sub->add_option("--cap-steps", o.cap_steps, "dynamics step cap")->capture_default_str();
    sub->add_option("--tolerance", o.tolerance, "absolute tolerance for float costs");
    sub->add_option("--trace", o.trace, "trace CSV path");
  };
  auto generator = [&](CLI::App* sub) {
    sub->add_option("--flavor", o.flavor)->capture_default_str();
    sub->add_option("--players", o.players)->capture_default_str();
    sub->add_option("--resources", o.resources)->capture_default_str();
    sub->add_option("--rank", o.rank, "strategy cardinality, 0 = random");
    sub->add_option("--matroid", o.matroid, "uniform|partition|graphic|bases|any")->capture_default_str();
    sub->add_option("--max-value", o.max_value)->capture_default_str();
  };

  auto* check = app.add_subcommand("check", "report per-assumption verdicts");
  common(check);
  check->add_option("--certificate", o.certificate, "no-equilibrium certificate to verify");
  auto* solve = app.add_subcommand("solve", "run improving local-move dynamics");
  common(solve);
  auto* enumerate = app.add_subcommand("enumerate", "list every pure Nash equilibrium");
  common(enumerate);
  enumerate->add_option("--certificate", o.certificate, "write a certificate when none exists");
  auto* reduce = app.add_subcommand("reduce", "transform a game");
  common(reduce);
  reduce->add_option("--mode", o.mode, "weighted-to-setfunctional|mixed-singleton|mixed-01|mixed-md")->required();
  auto* generate = app.add_subcommand("generate", "draw a random game");
  common(generate);
  generator(generate);
  generate->add_option("--costs", o.costs, "count|weight|set|any")->capture_default_str();
  generate->add_option("--aggregator", o.aggregator, "sum|max|lp|table|any")->capture_default_str();
  generate->add_option("--p", o.p, "L^p exponent")->capture_default_str();
  generate->add_flag("--monotone-dependence", o.monotone_dependence);
  auto* hunt = app.add_subcommand("hunt", "search for a mixed game without equilibria");
  common(hunt);
  generator(hunt);
  hunt->add_option("--attempts", o.attempts)->capture_default_str();
  hunt->add_option("--certificate", o.certificate, "certificate output path");

  CLI11_PARSE(app, argc, argv);
  try {
    if (check->parsed()) return run_check(o);
    if (solve->parsed()) return run_solve(o);
    if (enumerate->parsed()) return run_enumerate(o);
    if (reduce->parsed()) return run_reduce(o);
    if (generate->parsed()) return run_generate(o);
    return run_hunt(o);
  } catch (const mcg::ParseError& e) {
    std::cerr << o.input << ": " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const mcg::ValidationError& e) {
    std::cerr << o.input << ": invalid game: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const mcg::ResourceLimitError& e) {
    std::cerr << "cap reached: " << e.what() << "\n";
    return kExitCapReached;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}
