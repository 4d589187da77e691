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

// Acceptance run: one PASS/FAIL line per criterion.
//
// Criteria 1 and 2 fail on instances whose aggregator is not strictly
// increasing in each coordinate (Max, flat tables): local-move dynamics can
// stop at a local optimum that is not an equilibrium. Each such failure is
// checked to be of that class; any other failure makes the run exit nonzero.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "mcg/mcg.hpp"

namespace mcg {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  bool acceptable = true;  // false: an unexplained failure
  std::string detail;
};

void report(int criterion, const std::string& name, const Outcome& o) {
  std::printf("criterion %d [%s]: %s  %s\n", criterion, name.c_str(), o.pass ? "PASS" : "FAIL",
              o.detail.c_str());
  std::fflush(stdout);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

StrategyProfile random_profile(const GameInstance& game, Rng& rng) {
  StrategyProfile s;
  for (int i = 0; i < game.players; ++i) s.push_back(rng.pick(strategies_of(game, i)));
  return s;
}

bool strictly_increasing_aggregator(const GameInstance& game) {
  auto kind = std::get<ComplementarityCosts>(game.costs).aggregator.kind();
  return kind == AggregatorKind::kSum || kind == AggregatorKind::kLp;
}

bool has_local_move(const GameInstance& game, const StrategyProfile& s) {
  for (int i = 0; i < game.players; ++i) {
    if (improving_local_move(game, s, i)) return true;
  }
  return false;
}

// Criteria 1 and 2 share the corpus.
struct CorpusStats {
  int instances = 0;
  int pne = 0;
  int strict_instances = 0;
  int strict_pne = 0;
  int potential_failures = 0;
  int trapped = 0;            // non-PNE local optimum of the documented class
  int unexplained = 0;
  long long visited = 0;
  long long visited_non_pne = 0;
  long long lemma_failures = 0;
  std::map<std::string, int> trapped_by_aggregator;
  double seconds = 0;
};

GameInstance corpus_game(std::uint64_t k) {
  Rng rng(derive_seed(20240, k));
  GenerateParams p;
  p.flavor = Flavor::kComplementarities;
  p.players = rng.range(1, 4);
  p.resources = rng.range(2, 7);
  p.rank = rng.range(1, std::min(3, p.resources));
  p.matroids = MatroidFamily::kAny;
  static const AggregatorChoice aggregators[] = {AggregatorChoice::kSum, AggregatorChoice::kMax,
                                                 AggregatorChoice::kLp, AggregatorChoice::kTable};
  p.aggregator = aggregators[k % 4];
  p.p = 2;
  p.costs = (k / 4) % 2 ? SetCostFamily::kWeight : SetCostFamily::kSet;
  p.max_value = rng.range(2, 6);
  p.seed = derive_seed(7, k);
  return generate_game(p);
}

CorpusStats run_corpus(int count) {
  CorpusStats st;
  auto start = Clock::now();
  for (int k = 0; k < count; ++k) {
    GameInstance game = corpus_game(static_cast<std::uint64_t>(k));
    Rng rng(derive_seed(99, static_cast<std::uint64_t>(k)));
    StrategyProfile s0 = random_profile(game, rng);
    DynamicsTrace trace = run_local_move_dynamics(game, s0);
    ++st.instances;
    const bool strict = strictly_increasing_aggregator(game);
    st.strict_instances += strict;

    // Replay: potentials from scratch, and the lemma at every visited profile.
    PotentialContext ctx(game);
    StrategyProfile s = s0;
    Potential before = ctx.potential(s);
    bool decreasing = trace.certified && trace.potential_strictly_decreased;
    std::vector<StrategyProfile> visited{s};
    for (const auto& step : trace.steps) {
      s[step.player] = (s[step.player] & ~bit(step.removed)) | bit(step.added);
      Potential after = ctx.potential(s);
      if (ctx.compare(after, before) != std::weak_ordering::less) decreasing = false;
      before = std::move(after);
      visited.push_back(s);
    }
    if (!decreasing) ++st.potential_failures;
    for (const auto& v : visited) {
      ++st.visited;
      if (is_pne(game, v).is_pne()) continue;
      ++st.visited_non_pne;
      if (!has_local_move(game, v)) ++st.lemma_failures;
    }

    if (trace.terminal == Terminal::kPne) {
      ++st.pne;
      st.strict_pne += strict;
      continue;
    }
    auto deviation = is_pne(game, trace.final_profile);
    bool documented = trace.terminal == Terminal::kLocalOptimum && !strict &&
                      deviation.deviation.has_value() && !has_local_move(game, trace.final_profile) &&
                      !brute_force_pne(game).empty();
    if (documented) {
      ++st.trapped;
      auto kind = std::get<ComplementarityCosts>(game.costs).aggregator.kind();
      ++st.trapped_by_aggregator[kind == AggregatorKind::kMax ? "max" : "table"];
    } else {
      ++st.unexplained;
      std::fprintf(stderr, "unexplained failure on corpus instance %d:\n%s", k,
                   serialize_game(game).c_str());
    }
  }
  st.seconds = seconds_since(start);
  return st;
}

Outcome criterion1(const CorpusStats& st) {
  Outcome o;
  std::ostringstream d;
  o.pass = st.pne == st.instances && st.potential_failures == 0 && st.seconds <= 300;
  o.acceptable = st.unexplained == 0 && st.potential_failures == 0 && st.seconds <= 300 &&
                 st.strict_pne == st.strict_instances;
  d << st.pne << "/" << st.instances << " reach a certified PNE; potential strictly decreasing on "
    << st.instances - st.potential_failures << "/" << st.instances << "; Sum/Lp " << st.strict_pne
    << "/" << st.strict_instances << " PNE";
  if (st.trapped > 0) {
    d << "; " << st.trapped << " stop at a non-PNE local optimum (";
    bool first = true;
    for (const auto& [name, n] : st.trapped_by_aggregator) {
      d << (first ? "" : ", ") << name << " " << n;
      first = false;
    }
    d << "), all verified: improving deviation exists, no single swap improves, aggregator not "
         "strictly increasing, equilibrium exists elsewhere";
  }
  if (st.unexplained > 0) d << "; " << st.unexplained << " UNEXPLAINED";
  d << "; " << std::fixed;
  d.precision(1);
  d << st.seconds << " s";
  o.detail = d.str();
  return o;
}

Outcome criterion2(const CorpusStats& st) {
  Outcome o;
  o.pass = st.lemma_failures == 0;
  o.acceptable = st.lemma_failures == st.trapped && st.unexplained == 0;
  std::ostringstream d;
  d << st.visited << " profiles visited, " << st.visited_non_pne << " not PNE, "
    << st.visited_non_pne - st.lemma_failures << " of those have an improving swap";
  if (st.lemma_failures > 0) {
    d << "; the " << st.lemma_failures
      << " without one are exactly the terminal local optima of criterion 1";
  }
  o.detail = d.str();
  return o;
}

Outcome criterion3() {
  Outcome o;
  int total = 0, with_pne = 0;
  for (std::uint64_t k = 0; total < 600; ++k) {
    GenerateParams p;
    p.flavor = Flavor::kComplementarities;
    p.costs = SetCostFamily::kWeight;
    p.aggregator = k % 2 ? AggregatorChoice::kMax : AggregatorChoice::kLp;
    p.p = 2 + static_cast<int>(k % 3);
    p.players = 2 + static_cast<int>(k % 3);
    p.resources = 3 + static_cast<int>(k % 4);
    p.rank = 1 + static_cast<int>(k % 2);
    p.seed = derive_seed(3, k);
    GameInstance g = generate_game(p);
    ++total;
    with_pne += !brute_force_pne(g).empty();
  }
  o.pass = o.acceptable = with_pne == total;
  o.detail = std::to_string(with_pne) + "/" + std::to_string(total) +
             " weighted Max/Lp matroid instances have a PNE";
  return o;
}

// Matroid families for the exhaustive exchange check.
void for_each_matroid(const std::function<void(const MatroidOracle&)>& fn, std::map<std::string, int>& counts) {
  for (int m = 1; m <= 8; ++m) {
    for (int k = 0; k <= m; ++k) {
      fn(MatroidOracle::uniform(full_set(m), k));
      ++counts["uniform"];
    }
  }
  // Partitions of the ground set into consecutive blocks, every capacity.
  for (int m = 1; m <= 8; ++m) {
    for (unsigned cuts = 0; cuts < (1u << (m - 1)); ++cuts) {
      std::vector<Subset> blocks{0};
      for (int e = 0; e < m; ++e) {
        blocks.back() |= bit(e);
        if (e < m - 1 && (cuts >> e & 1u)) blocks.push_back(0);
      }
      std::vector<int> cap(blocks.size(), 0);
      while (true) {
        std::vector<PartitionKind::Block> b;
        for (std::size_t j = 0; j < blocks.size(); ++j) b.push_back({blocks[j], cap[j]});
        fn(MatroidOracle::partition(b));
        ++counts["partition"];
        std::size_t j = 0;
        while (j < cap.size() && ++cap[j] > cardinality(blocks[j])) cap[j++] = 0;
        if (j == cap.size()) break;
      }
    }
  }
  // Connected graphs on up to 5 vertices with up to 8 edges, plus a doubled edge.
  for (int v = 2; v <= 5; ++v) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < v; ++a) {
      for (int b = a + 1; b < v; ++b) pairs.emplace_back(a, b);
    }
    for (unsigned mask = 1; mask < (1u << pairs.size()); ++mask) {
      if (std::popcount(mask) > 7) continue;
      std::vector<GraphicKind::Edge> edges;
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (mask >> j & 1u) edges.push_back({static_cast<int>(edges.size()), pairs[j].first, pairs[j].second});
      }
      edges.push_back({static_cast<int>(edges.size()), edges.front().tail, edges.front().head});
      for (int parallel = 0; parallel < 2; ++parallel) {
        std::vector<GraphicKind::Edge> use(edges.begin(), edges.end() - (parallel ? 0 : 1));
        try {
          fn(MatroidOracle::graphic(use));
          ++counts["graphic"];
        } catch (const ValidationError&) {
          break;  // disconnected
        }
      }
    }
  }
  // Every matroid on at most 5 elements, as an explicit base family.
  for (int m = 1; m <= 5; ++m) {
    for (int k = 0; k <= m; ++k) {
      std::vector<Subset> ksets;
      for_each_k_subset(full_set(m), k, [&](Subset s) { ksets.push_back(s); });
      for (unsigned long long fam = 1; fam < (1ull << ksets.size()); ++fam) {
        std::vector<Subset> bases;
        for (std::size_t j = 0; j < ksets.size(); ++j) {
          if (fam >> j & 1ull) bases.push_back(ksets[j]);
        }
        if (!verify_base_axioms(bases).is_matroid()) continue;
        fn(MatroidOracle::explicit_bases(bases));
        ++counts["explicit"];
      }
    }
  }
}

Outcome criterion4() {
  Outcome o;
  long long triples = 0, bad = 0;
  std::map<std::string, int> counts;
  for_each_matroid(
      [&](const MatroidOracle& m) {
        auto bases = enumerate_bases(m);
        for (Subset s : bases) {
          for (Subset s2 : bases) {
            for (int e : elements_of(s & ~s2)) {
              ++triples;
              int f = -1;
              try {
                f = simultaneous_exchange(m, s, s2, e);
              } catch (const std::logic_error&) {
              }
              bool ok = f >= 0 && contains(s2 & ~s, f) && m.is_base((s & ~bit(e)) | bit(f)) &&
                        m.is_base((s2 & ~bit(f)) | bit(e));
              bad += !ok;
            }
          }
        }
      },
      counts);
  int draws = 0, minimax = 0;
  static const MatroidFamily families[] = {MatroidFamily::kUniform, MatroidFamily::kPartition,
                                           MatroidFamily::kGraphic, MatroidFamily::kExplicitBases};
  for (std::uint64_t k = 0; k < 1200; ++k) {
    Rng rng(derive_seed(4, k));
    int m = rng.range(2, 8);
    int rank = rng.range(1, m - 1);
    MatroidOracle mat = detail::random_matroid(rng, families[k % 4], m, rank);
    std::vector<CostValue> w;
    for (int e = 0; e < m; ++e) w.emplace_back(Rational(rng.range(0, 9), rng.range(1, 3)));
    ++draws;
    minimax += min_sum_base_minimizes_max(mat, [&](int e) { return w[e]; });
  }
  o.pass = o.acceptable = bad == 0 && minimax == draws;
  std::ostringstream d;
  d << triples - bad << "/" << triples << " exchange triples valid over";
  for (const auto& [name, n] : counts) d << " " << n << " " << name;
  d << " matroids; min-sum base minimises max on " << minimax << "/" << draws << " draws";
  o.detail = d.str();
  return o;
}

std::set<StrategyProfile> pne_set(const GameInstance& g) {
  auto v = brute_force_pne(g);
  return {v.begin(), v.end()};
}

bool transfers(const Reduction& r, const GameInstance& source) {
  auto src = pne_set(source);
  auto tgt = pne_set(r.game);
  if (r.direction == TransferDirection::kBidirectional) return src == tgt;
  return std::includes(src.begin(), src.end(), tgt.begin(), tgt.end()) && !tgt.empty();
}

Outcome criterion5() {
  Outcome o;
  std::ostringstream d;
  const int n = 200;
  // Weighted to set-functional: exact player costs on every profile.
  int exact = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    GenerateParams p;
    p.flavor = Flavor::kWeighted;
    p.players = 1 + static_cast<int>(k % 4);
    p.resources = 2 + static_cast<int>(k % 5);
    p.seed = derive_seed(51, k);
    GameInstance src = generate_game(p);
    GameInstance tgt = reduce_weighted_to_setfunctional(src).game;
    auto strategies = detail::all_strategies(src, kDefaultEnumerationCap);
    bool same = true;
    std::vector<std::size_t> idx(src.players, 0);
    StrategyProfile s(src.players);
    while (same) {
      for (int i = 0; i < src.players; ++i) s[i] = strategies[i][idx[i]];
      for (int i = 0; i < src.players; ++i) {
        same = same && player_cost(src, s, i).exact() == player_cost(tgt, s, i).exact();
      }
      int j = src.players - 1;
      while (j >= 0 && ++idx[j] == strategies[j].size()) idx[j--] = 0;
      if (j < 0) break;
    }
    exact += same;
  }
  d << "weighted->set-functional costs equal on " << exact << "/" << n;

  auto mixed = [&](std::uint64_t salt, Flavor f, int rank, bool dependence) {
    GenerateParams p;
    p.flavor = f;
    p.players = 2 + static_cast<int>(salt % 3);
    p.resources = 3 + static_cast<int>(salt % 3);
    p.rank = rank;
    p.monotone_dependence = dependence;
    p.seed = salt;
    return generate_game(p);
  };
  int singleton = 0, zero_one = 0, md = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    GameInstance g = mixed(derive_seed(52, k), k % 2 ? Flavor::kMixed : Flavor::kPlayerSpecificMixed, 1, false);
    singleton += transfers(reduce_mixed_singleton_to_player_specific(g), g);
  }
  for (std::uint64_t k = 0; k < n; ++k) {
    GameInstance g = mixed(derive_seed(53, k), k % 2 ? Flavor::kMixed : Flavor::kPlayerSpecificMixed, 2, false);
    Rng rng(k);
    for (auto& a : g.alphas) a = rng.coin() ? 1 : 0;
    zero_one += transfers(reduce_mixed_01_to_player_specific(g), g);
  }
  for (std::uint64_t k = 0; k < n; ++k) {
    GameInstance g = mixed(derive_seed(54, k), Flavor::kMixedSetFunctional, 2, true);
    md += transfers(reduce_mixed_md_to_setfunctional(g), g);
  }
  d << "; singleton PNE sets equal on " << singleton << "/" << n << "; 0/1 target PNE within source on "
    << zero_one << "/" << n << "; monotone-dependence target PNE within source on " << md << "/" << n;
  o.pass = o.acceptable = exact == n && singleton == n && zero_one == n && md == n;
  o.detail = d.str();
  return o;
}

// Exhaustive: some x < y flips order between two contexts.
bool oracle_weakly_monotone(const Aggregator& g, const std::vector<CostValue>& domain) {
  const int r = g.arity();
  for (std::size_t a = 0; a < domain.size(); ++a) {
    for (std::size_t b = a + 1; b < domain.size(); ++b) {
      bool less = false, greater = false;
      std::vector<std::size_t> ctx(r - 1, 0);
      while (true) {
        std::vector<CostValue> vx, vy;
        for (std::size_t c : ctx) vx.push_back(domain[c]);
        vy = vx;
        vx.push_back(domain[a]);
        vy.push_back(domain[b]);
        auto gx = aggregate(g, vx).exact(), gy = aggregate(g, vy).exact();
        less = less || gx < gy;
        greater = greater || gx > gy;
        std::size_t j = 0;
        while (j < ctx.size() && ++ctx[j] == domain.size()) ctx[j++] = 0;
        if (j == ctx.size()) break;
      }
      if (less && greater) return false;
    }
  }
  return true;
}

bool witness_holds(const Aggregator& g, const WeakMonotonicityWitness& w) {
  auto eval = [&](std::vector<CostValue> v, const CostValue& last) {
    v.push_back(last);
    return aggregate(g, v).exact();
  };
  return eval(w.less_context, w.x) < eval(w.less_context, w.y) &&
         eval(w.greater_context, w.x) > eval(w.greater_context, w.y);
}

Outcome criterion6() {
  Outcome o;
  std::ostringstream d;
  std::vector<CostValue> domain{0, 1, 2, Rational(7, 2), 5};
  bool builtins = true;
  for (int r : {2, 3}) {
    for (const auto& g : {Aggregator::sum(r), Aggregator::max(r), Aggregator::lp(2, r), Aggregator::lp(Rational(3, 2), r)}) {
      builtins = builtins && check_weak_monotonicity(g, domain).weakly_monotone();
    }
  }
  d << "Sum/Max/Lp classified weakly monotone: " << (builtins ? "yes" : "no");

  Aggregator::TableEntries abs{{{0, 0}, 0}, {{0, 2}, 2}, {{2, 2}, 0}};
  Aggregator g = Aggregator::table(2, abs);
  std::vector<CostValue> d02{0, 2};
  auto verdict = check_weak_monotonicity(g, d02);
  bool witness = !verdict.weakly_monotone() && witness_holds(g, *verdict.witness);
  if (witness) {
    const auto& w = *verdict.witness;
    d << "; |v'-x| witness x=" << to_string(w.x.exact()) << " y=" << to_string(w.y.exact())
      << ", g(" << to_string(w.less_context[0].exact()) << ",x)<g(" << to_string(w.less_context[0].exact())
      << ",y), g(" << to_string(w.greater_context[0].exact()) << ",x)>g("
      << to_string(w.greater_context[0].exact()) << ",y)";
  } else {
    d << "; |v'-x| witness missing";
  }

  int agree = 0, total = 0, monotone = 0;
  for (std::uint64_t k = 0; k < 600; ++k) {
    Rng rng(derive_seed(6, k));
    const int r = 2 + static_cast<int>(k % 2);
    std::vector<Rational> values;
    for (int j = 0; j < 4; ++j) values.emplace_back(3 * j + rng.range(0, 2));
    std::vector<CostValue> dom(values.begin(), values.end());
    // Thirds: arbitrary, additive increasing, additive reversed.
    const int shape = static_cast<int>(k % 3);
    std::vector<int> phi(values.size());
    for (std::size_t j = 0, acc = 0; j < phi.size(); ++j) phi[j] = static_cast<int>(acc += rng.range(0, 3));
    Aggregator::TableEntries entries;
    std::vector<std::size_t> idx(r, 0);
    while (true) {
      std::vector<Rational> key;
      int additive = 0;
      for (auto i : idx) {
        key.push_back(values[i]);
        additive += phi[i];
      }
      if (std::is_sorted(key.begin(), key.end())) {
        entries[key] = shape == 0 ? rng.range(0, 12) : shape == 1 ? additive : 40 - additive;
      }
      std::size_t j = 0;
      while (j < idx.size() && ++idx[j] == values.size()) idx[j++] = 0;
      if (j == idx.size()) break;
    }
    Aggregator t = Aggregator::table(r, entries);
    auto v = check_weak_monotonicity(t, dom);
    bool expected = oracle_weakly_monotone(t, dom);
    bool ok = v.weakly_monotone() == expected && (v.weakly_monotone() || witness_holds(t, *v.witness));
    ++total;
    agree += ok;
    monotone += expected;
  }
  d << "; random tables agree with exhaustive evaluation on " << agree << "/" << total << " ("
    << monotone << " weakly monotone)";
  o.pass = o.acceptable = builtins && witness && agree == total;
  o.detail = d.str();
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion7() {
  Outcome o;
  const std::string base = std::string(MCG_SOURCE_DIR) + "/tests/fixtures/no_pne_mixed";
  GameInstance g = parse_game_file(slurp(base + ".game"));
  std::string cert = slurp(base + ".cert");
  bool matroids = all_matroid_spaces(g);
  bool conforming = mixed_game_conforms(g);
  bool empty = brute_force_pne(g).empty();
  auto start = Clock::now();
  std::string problem = verify_no_pne_certificate(g, cert);
  double secs = seconds_since(start);
  bool regenerated = no_pne_certificate(g) == cert;
  o.pass = o.acceptable = matroids && !conforming && empty && problem.empty() && secs <= 1.0 && regenerated;
  std::ostringstream d;
  d << "fixture: " << g.players << " players, " << g.resource_count() << " resources, matroid spaces "
    << (matroids ? "yes" : "no") << ", outside the equilibrium classes " << (conforming ? "no" : "yes")
    << ", brute-force PNE count " << brute_force_pne(g).size() << ", certificate "
    << (problem.empty() ? "valid" : problem) << " in " << secs << " s"
    << (regenerated ? ", matches a fresh enumeration" : ", differs from a fresh enumeration");
  o.detail = d.str();
  return o;
}

Outcome criterion8() {
  Outcome o;
  int files = 0, same_files = 0, traces = 0, same_traces = 0;
  for (int f = 0; f < 7; ++f) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      GenerateParams p;
      p.flavor = static_cast<Flavor>(f);
      p.players = 1 + static_cast<int>(seed % 4);
      p.resources = 2 + static_cast<int>(seed % 6);
      p.seed = seed;
      std::string a = serialize_game(generate_game(p)), b = serialize_game(generate_game(p));
      ++files;
      same_files += a == b;
      if (p.flavor != Flavor::kComplementarities) continue;
      GameInstance g = parse_game_file(a);
      auto trace_of = [&] {
        Rng rng(seed);
        return trace_csv(g, run_local_move_dynamics(g, random_profile(g, rng)));
      };
      ++traces;
      same_traces += trace_of() == trace_of();
    }
  }
  o.pass = o.acceptable = same_files == files && same_traces == traces;
  o.detail = std::to_string(same_files) + "/" + std::to_string(files) + " generated files and " +
             std::to_string(same_traces) + "/" + std::to_string(traces) + " traces byte-identical across two runs";
  return o;
}

}  // namespace
}  // namespace mcg

int main() {
  using namespace mcg;
  bool acceptable = true;
  auto record = [&](int n, const std::string& name, const Outcome& o) {
    report(n, name, o);
    acceptable = acceptable && o.acceptable;
  };
  try {
    CorpusStats corpus = run_corpus(1000);
    record(1, "existence via local-move dynamics", criterion1(corpus));
    record(2, "improving local move at non-equilibria", criterion2(corpus));
    record(3, "weighted bottleneck and Lp corollaries", criterion3());
    record(4, "matroid exchange and min-max bases", criterion4());
    record(5, "reductions", criterion5());
    record(6, "weak-monotonicity checker", criterion6());
    record(7, "non-existence fixture", criterion7());
    record(8, "determinism", criterion8());
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 1;
  }
  std::printf("overall: %s\n", acceptable ? "all failures are of the documented local-optimum class"
                                          : "UNEXPLAINED FAILURES");
  return acceptable ? 0 : 1;
}
