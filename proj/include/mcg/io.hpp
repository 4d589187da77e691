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

#ifndef MCG_IO_HPP
#define MCG_IO_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mcg/costs.hpp"
#include "mcg/dynamics.hpp"
#include "mcg/errors.hpp"
#include "mcg/game.hpp"
#include "mcg/matroid.hpp"

// Game files are line oriented:
//
//   [game]        flavor, players, resources, seed, weights, alphas
//   [strategies]  "<player>: <kind> | ..." one line per player
//   [costs]       "[latency|bottleneck] [<player>] <resource>: <function>"
//   [aggregator]  kind, p, arity, class, "entry: v1 .. vr = value"
//   [dependence]  "d: <scalar function>"
//
// Numbers are exact rational literals ("3/2", "0.25"). '#' starts a comment.

namespace mcg {

namespace detail {

struct Token {
  std::string text;
  int column = 0;
};

inline std::vector<Token> tokenize(std::string_view s, int base_column) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && (s[k] == ' ' || s[k] == '\t')) ++k;
    std::size_t start = k;
    while (k < s.size() && s[k] != ' ' && s[k] != '\t') ++k;
    if (k > start) {
      out.push_back({std::string(s.substr(start, k - start)),
                     base_column + static_cast<int>(start)});
    }
  }
  return out;
}

inline std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

class GameParser {
 public:
  explicit GameParser(std::string_view text) : text_(text) {}

  GameInstance parse() {
    std::istringstream in{std::string(text_)};
    std::string raw;
    int line_no = 0;
    std::string section;
    while (std::getline(in, raw)) {
      ++line_no;
      line_ = line_no;
      std::string_view view(raw);
      if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
      std::string line = trim(view);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') fail(1, "unterminated section header");
        section = line.substr(1, line.size() - 2);
        if (section != "game" && section != "strategies" && section != "costs" &&
            section != "aggregator" && section != "dependence") {
          fail(1, "unknown section [" + section + "]");
        }
        continue;
      }
      auto colon = raw.find(':');
      if (colon == std::string::npos) fail(1, "expected 'key: value'");
      std::vector<Token> key = tokenize(std::string_view(raw).substr(0, colon), 1);
      std::string_view rest = std::string_view(view).substr(std::min(colon + 1, view.size()));
      std::size_t lead = std::min(rest.find_first_not_of(" \t"), rest.size());
      int value_column = static_cast<int>(colon + 1 + lead) + 1;
      std::string value = trim(rest);
      if (key.empty()) fail(1, "missing key");
      if (section.empty()) fail(1, "entry outside any section");
      if (section == "game") {
        game_entry(key, value, value_column);
      } else if (section == "strategies") {
        strategy_lines_.push_back({line_no, key, value, value_column});
      } else if (section == "costs") {
        cost_lines_.push_back({line_no, key, value, value_column});
      } else if (section == "aggregator") {
        aggregator_entry(key, value, value_column);
      } else {
        if (key.size() != 1 || key[0].text != "d") fail(key[0].column, "expected 'd: <function>'");
        line_ = line_no;
        dependence_ = scalar(tokenize(value, value_column), 0);
      }
    }
    return build();
  }

 private:
  struct Pending {
    int line;
    std::vector<Token> key;
    std::string value;
    int column;
  };

  [[noreturn]] void fail(int column, const std::string& what) const {
    throw ParseError(line_, column, what);
  }

  Rational number(const Token& t) const {
    auto r = parse_rational(t.text);
    if (!r) fail(t.column, "expected a rational number, got '" + t.text + "'");
    return *r;
  }

  int integer(const Token& t) const {
    Rational r = number(t);
    if (denominator(r) != 1 || r < 0 || r > 1'000'000) fail(t.column, "expected a count");
    return r.convert_to<int>();
  }

  void game_entry(const std::vector<Token>& key, const std::string& value, int column) {
    auto tokens = tokenize(value, column);
    const std::string& k = key[0].text;
    if (k == "flavor") {
      if (tokens.size() != 1) fail(column, "expected one flavor name");
      flavor_ = parse_flavor(tokens[0].text);
      if (!flavor_) fail(tokens[0].column, "unknown flavor '" + tokens[0].text + "'");
    } else if (k == "players") {
      if (tokens.size() != 1) fail(column, "expected a player count");
      game_.players = integer(tokens[0]);
    } else if (k == "resources") {
      for (const auto& t : tokens) {
        if (t.text.find_first_of(":|=") != std::string::npos) {
          fail(t.column, "resource names may not contain ':', '|' or '='");
        }
        if (resource_index_.count(t.text)) fail(t.column, "duplicate resource '" + t.text + "'");
        resource_index_[t.text] = static_cast<int>(game_.resources.size());
        game_.resources.push_back(t.text);
      }
      if (game_.resources.size() > static_cast<std::size_t>(kMaxResources)) {
        fail(column, "more than 64 resources");
      }
    } else if (k == "seed") {
      if (tokens.size() != 1) fail(column, "expected a seed");
      try {
        game_.seed = std::stoull(tokens[0].text);
      } catch (const std::exception&) {
        fail(tokens[0].column, "bad seed");
      }
    } else if (k == "weights") {
      for (const auto& t : tokens) game_.weights.push_back(number(t));
    } else if (k == "alphas") {
      for (const auto& t : tokens) game_.alphas.push_back(number(t));
    } else {
      fail(key[0].column, "unknown key '" + k + "'");
    }
  }

  void aggregator_entry(const std::vector<Token>& key, const std::string& value, int column) {
    auto tokens = tokenize(value, column);
    const std::string& k = key[0].text;
    if (k == "kind") {
      if (tokens.size() != 1) fail(column, "expected an aggregator kind");
      agg_kind_ = tokens[0].text;
      if (agg_kind_ != "sum" && agg_kind_ != "max" && agg_kind_ != "lp" && agg_kind_ != "table") {
        fail(tokens[0].column, "unknown aggregator '" + agg_kind_ + "'");
      }
    } else if (k == "p") {
      if (tokens.size() != 1) fail(column, "expected p");
      agg_p_ = number(tokens[0]);
    } else if (k == "arity") {
      if (tokens.size() != 1) fail(column, "expected arity");
      agg_arity_ = integer(tokens[0]);
    } else if (k == "class") {
      if (tokens.size() != 1) fail(column, "expected a monotonicity class");
      if (tokens[0].text == "weakly-monotone") {
        agg_class_ = MonotonicityClass::kDeclaredWeaklyMonotone;
      } else if (tokens[0].text == "unknown") {
        agg_class_ = MonotonicityClass::kUnknown;
      } else {
        fail(tokens[0].column, "class must be 'weakly-monotone' or 'unknown'");
      }
    } else if (k == "entry") {
      auto eq = std::find_if(tokens.begin(), tokens.end(), [](const Token& t) { return t.text == "="; });
      if (eq == tokens.end() || eq + 2 != tokens.end()) fail(column, "expected 'v1 .. vr = value'");
      std::vector<Rational> args;
      for (auto it = tokens.begin(); it != eq; ++it) args.push_back(number(*it));
      std::sort(args.begin(), args.end());
      if (!agg_entries_.emplace(args, number(*(eq + 1))).second) fail(column, "duplicate entry");
    } else {
      fail(key[0].column, "unknown key '" + k + "'");
    }
  }

  ScalarFunction scalar(const std::vector<Token>& t, std::size_t from) const {
    if (from >= t.size()) fail(t.empty() ? 1 : t.back().column, "missing function");
    const std::string& kind = t[from].text;
    if (kind == "table" || kind == "poly") {
      std::vector<Rational> values;
      for (std::size_t k = from + 1; k < t.size(); ++k) values.push_back(number(t[k]));
      if (values.empty()) fail(t[from].column, "function needs at least one value");
      return kind == "table" ? ScalarFunction::table(std::move(values))
                             : ScalarFunction::polynomial(std::move(values));
    }
    if (kind == "points") {
      std::vector<std::pair<Rational, Rational>> pts;
      for (std::size_t k = from + 1; k < t.size(); ++k) {
        auto colon = t[k].text.find(':');
        if (colon == std::string::npos) fail(t[k].column, "expected x:y");
        Token x{t[k].text.substr(0, colon), t[k].column};
        Token y{t[k].text.substr(colon + 1), t[k].column + static_cast<int>(colon) + 1};
        pts.emplace_back(number(x), number(y));
      }
      try {
        return ScalarFunction::points(std::move(pts));
      } catch (const ValidationError& e) {
        fail(t[from].column, e.what());
      }
    }
    fail(t[from].column, "unknown function kind '" + kind + "' (table, poly, points)");
  }

  SetCost set_cost(const std::vector<Token>& t) const {
    if (t.empty()) fail(1, "missing set cost");
    const std::string& kind = t[0].text;
    if (kind == "count") return SetCost::count_based(scalar(t, 1));
    if (kind == "weight") return SetCost::weight_induced(scalar(t, 1));
    if (kind == "set") {
      std::vector<Rational> values;
      for (std::size_t k = 1; k < t.size(); ++k) values.push_back(number(t[k]));
      return SetCost::table(std::move(values));
    }
    fail(t[0].column, "unknown set cost kind '" + kind + "' (count, weight, set)");
  }

  Subset resource_set(const std::vector<Token>& tokens) const {
    Subset s = 0;
    for (const auto& t : tokens) s |= bit(resource(t));
    return s;
  }

  int resource(const Token& t) const {
    auto it = resource_index_.find(t.text);
    if (it == resource_index_.end()) fail(t.column, "unknown resource '" + t.text + "'");
    return it->second;
  }

  StrategySpace space(const Pending& p) {
    line_ = p.line;
    std::vector<std::pair<std::string, int>> segments;
    std::size_t start = 0;
    while (true) {
      std::size_t bar = p.value.find('|', start);
      segments.emplace_back(p.value.substr(start, bar - start), p.column + static_cast<int>(start));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    auto head = tokenize(segments[0].first, segments[0].second);
    if (head.empty()) fail(p.column, "missing strategy space kind");
    const std::string& kind = head[0].text;
    std::vector<std::vector<Token>> parts;
    for (std::size_t k = 1; k < segments.size(); ++k) {
      parts.push_back(tokenize(segments[k].first, segments[k].second));
    }
    try {
      if (kind == "uniform") {
        if (head.size() != 2 || parts.size() != 1) fail(head[0].column, "expected 'uniform <k> | <elements>'");
        return MatroidOracle::uniform(resource_set(parts[0]), integer(head[1]));
      }
      if (kind == "partition") {
        std::vector<PartitionKind::Block> blocks;
        for (const auto& part : parts) {
          auto colon = std::find_if(part.begin(), part.end(), [](const Token& t) { return t.text == ":"; });
          if (colon == part.end() || colon + 2 != part.end()) {
            fail(head[0].column, "expected '<elements> : <capacity>' blocks");
          }
          blocks.push_back({resource_set(std::vector<Token>(part.begin(), colon)), integer(*(colon + 1))});
        }
        return MatroidOracle::partition(std::move(blocks));
      }
      if (kind == "graphic") {
        std::vector<GraphicKind::Edge> edges;
        for (const auto& part : parts) {
          if (part.size() != 3) fail(head[0].column, "expected '<edge> <tail> <head>'");
          edges.push_back({resource(part[0]), integer(part[1]), integer(part[2])});
        }
        return MatroidOracle::graphic(std::move(edges));
      }
      if (kind == "bases" || kind == "explicit") {
        std::vector<Subset> sets;
        for (const auto& part : parts) sets.push_back(resource_set(part));
        if (kind == "explicit") return make_explicit_strategies(std::move(sets));
        if (auto verdict = verify_base_axioms(sets); !verdict.is_matroid()) {
          fail(head[0].column, "not a matroid: " + verdict.violation->describe(game_.resources));
        }
        return MatroidOracle::explicit_bases(std::move(sets));
      }
    } catch (const ValidationError& e) {
      fail(head[0].column, e.what());
    }
    fail(head[0].column, "unknown strategy space '" + kind + "' (uniform, partition, graphic, bases, explicit)");
  }

  int player(const Token& t) const {
    int i = integer(t);
    if (i < 1 || i > game_.players) fail(t.column, "player index out of range");
    return i - 1;
  }

  GameInstance build() {
    line_ = 0;
    if (!flavor_) throw ParseError(0, 0, "missing 'flavor' in [game]");
    if (game_.players < 1) throw ParseError(0, 0, "missing or zero 'players' in [game]");
    if (game_.resources.empty()) throw ParseError(0, 0, "missing 'resources' in [game]");
    const int n = game_.players;
    const int m = game_.resource_count();
    std::vector<std::optional<StrategySpace>> spaces(n);
    for (const auto& p : strategy_lines_) {
      line_ = p.line;
      if (p.key.size() != 1) fail(p.key[0].column, "expected '<player>: <space>'");
      int i = player(p.key[0]);
      if (spaces[i]) fail(p.key[0].column, "player listed twice");
      spaces[i] = space(p);
    }
    for (int i = 0; i < n; ++i) {
      if (!spaces[i]) throw ParseError(0, 0, "no strategy space for player " + std::to_string(i + 1));
      game_.spaces.push_back(*spaces[i]);
    }

    const Flavor f = *flavor_;
    const bool player_specific = f == Flavor::kPlayerSpecific || f == Flavor::kPlayerSpecificMixed;
    const bool two_channels = f == Flavor::kMixed || f == Flavor::kPlayerSpecificMixed ||
                              f == Flavor::kMixedSetFunctional;
    const bool set_valued = f == Flavor::kComplementarities || f == Flavor::kMixedSetFunctional;
    // channel (0 = single/latency, 1 = bottleneck) x player x resource
    std::map<std::tuple<int, int, int>, std::pair<int, std::vector<Token>>> entries;
    for (const auto& p : cost_lines_) {
      line_ = p.line;
      std::size_t k = 0;
      int channel = 0;
      if (two_channels) {
        if (p.key.empty() || (p.key[0].text != "latency" && p.key[0].text != "bottleneck")) {
          fail(p.key[0].column, "mixed flavors need 'latency' or 'bottleneck'");
        }
        channel = p.key[0].text == "latency" ? 0 : 1;
        ++k;
      }
      int pl = 0;
      if (player_specific) {
        if (k >= p.key.size()) fail(p.column, "missing player index");
        pl = player(p.key[k++]);
      }
      if (k + 1 != p.key.size()) fail(p.key.back().column, "expected a resource name");
      int e = resource(p.key[k]);
      auto key = std::make_tuple(channel, pl, e);
      if (entries.count(key)) fail(p.key[k].column, "cost given twice");
      entries[key] = {p.line, tokenize(p.value, p.column)};
    }
    auto scalar_at = [&](int channel, int pl, int e, const std::string& what) {
      auto it = entries.find({channel, pl, e});
      if (it == entries.end()) {
        throw ParseError(0, 0, "missing " + what + " for resource " + game_.resources[e]);
      }
      line_ = it->second.first;
      return scalar(it->second.second, 0);
    };
    auto set_at = [&](int channel, int e, const std::string& what) {
      auto it = entries.find({channel, 0, e});
      if (it == entries.end()) {
        throw ParseError(0, 0, "missing " + what + " for resource " + game_.resources[e]);
      }
      line_ = it->second.first;
      return set_cost(it->second.second);
    };
    auto per_resource = [&](int channel, const std::string& what) {
      std::vector<ScalarFunction> out;
      for (int e = 0; e < m; ++e) out.push_back(scalar_at(channel, 0, e, what));
      return out;
    };
    auto per_player = [&](int channel, const std::string& what) {
      std::vector<std::vector<ScalarFunction>> out(n);
      for (int i = 0; i < n; ++i) {
        for (int e = 0; e < m; ++e) out[i].push_back(scalar_at(channel, i, e, what));
      }
      return out;
    };
    auto set_costs = [&](int channel, const std::string& what) {
      std::vector<SetCost> out;
      for (int e = 0; e < m; ++e) out.push_back(set_at(channel, e, what));
      return out;
    };
    (void)set_valued;
    switch (f) {
      case Flavor::kClassic:
        game_.costs = ClassicCosts{per_resource(0, "cost")};
        break;
      case Flavor::kWeighted:
        game_.costs = WeightedCosts{per_resource(0, "cost")};
        break;
      case Flavor::kPlayerSpecific:
        game_.costs = PlayerSpecificCosts{per_player(0, "cost")};
        break;
      case Flavor::kComplementarities:
        game_.costs = ComplementarityCosts{set_costs(0, "cost"), aggregator()};
        break;
      case Flavor::kMixed:
        game_.costs = MixedCosts{per_resource(0, "latency"), per_resource(1, "bottleneck")};
        break;
      case Flavor::kPlayerSpecificMixed:
        game_.costs = PlayerSpecificMixedCosts{per_player(0, "latency"), per_player(1, "bottleneck")};
        break;
      case Flavor::kMixedSetFunctional:
        game_.costs = MixedSetCosts{set_costs(0, "latency"), set_costs(1, "bottleneck"), dependence_};
        break;
    }
    if (entries.size() != expected_cost_lines(f, n, m)) {
      throw ParseError(0, 0, "cost entries given for unexpected channels");
    }
    if (dependence_ && f != Flavor::kMixedSetFunctional) {
      throw ParseError(0, 0, "[dependence] only applies to mixed-set-functional games");
    }
    if (!agg_kind_.empty() && f != Flavor::kComplementarities) {
      throw ParseError(0, 0, "[aggregator] only applies to complementarities games");
    }
    validate(game_);
    return game_;
  }

  static std::size_t expected_cost_lines(Flavor f, int n, int m) {
    switch (f) {
      case Flavor::kPlayerSpecific: return static_cast<std::size_t>(n) * m;
      case Flavor::kPlayerSpecificMixed: return 2 * static_cast<std::size_t>(n) * m;
      case Flavor::kMixed:
      case Flavor::kMixedSetFunctional: return 2 * static_cast<std::size_t>(m);
      default: return m;
    }
  }

  Aggregator aggregator() const {
    if (agg_kind_.empty()) throw ParseError(0, 0, "complementarities game needs an [aggregator]");
    try {
      if (agg_kind_ == "sum") return Aggregator::sum(agg_arity_);
      if (agg_kind_ == "max") return Aggregator::max(agg_arity_);
      if (agg_kind_ == "lp") return Aggregator::lp(agg_p_.value_or(Rational(1)), agg_arity_);
      return Aggregator::table(agg_arity_, agg_entries_, agg_class_);
    } catch (const ValidationError& e) {
      throw ParseError(0, 0, e.what());
    }
  }

  std::string_view text_;
  int line_ = 0;
  GameInstance game_;
  std::optional<Flavor> flavor_;
  std::map<std::string, int> resource_index_;
  std::vector<Pending> strategy_lines_;
  std::vector<Pending> cost_lines_;
  std::string agg_kind_;
  std::optional<Rational> agg_p_;
  int agg_arity_ = 0;
  MonotonicityClass agg_class_ = MonotonicityClass::kUnknown;
  Aggregator::TableEntries agg_entries_;
  std::optional<ScalarFunction> dependence_;
};

inline std::string join_rationals(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " " : "") + to_string(v[k]);
  return out;
}

inline std::string names_of(Subset s, const std::vector<std::string>& names) {
  std::string out;
  for (int e : elements_of(s)) out += (out.empty() ? "" : " ") + names[e];
  return out;
}

inline std::string scalar_text(const ScalarFunction& f) {
  if (const auto* t = std::get_if<ScalarFunction::Table>(&f.form)) return "table " + join_rationals(t->values);
  if (const auto* p = std::get_if<ScalarFunction::Polynomial>(&f.form)) {
    return "poly " + join_rationals(p->coefficients);
  }
  std::string out = "points";
  for (const auto& [x, y] : std::get<ScalarFunction::Points>(f.form).points) {
    out += " " + to_string(x) + ":" + to_string(y);
  }
  return out;
}

inline std::string set_cost_text(const SetCost& c) {
  if (const auto* cb = std::get_if<SetCost::CountBased>(&c.form)) return "count " + scalar_text(cb->f);
  if (const auto* wi = std::get_if<SetCost::WeightInduced>(&c.form)) return "weight " + scalar_text(wi->inner);
  return "set " + join_rationals(std::get<SetCost::ExplicitTable>(c.form).values);
}

inline std::string space_text(const StrategySpace& space, const std::vector<std::string>& names) {
  if (const auto* list = std::get_if<ExplicitStrategies>(&space)) {
    std::string out = "explicit";
    for (Subset s : list->strategies) out += " | " + names_of(s, names);
    return out;
  }
  const auto& m = std::get<MatroidOracle>(space);
  return std::visit(
      [&](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, UniformKind>) {
          return "uniform " + std::to_string(k.rank) + " | " + names_of(m.ground(), names);
        } else if constexpr (std::is_same_v<T, PartitionKind>) {
          std::string out = "partition";
          for (const auto& b : k.blocks) {
            out += " | " + names_of(b.elements, names) + " : " + std::to_string(b.capacity);
          }
          return out;
        } else if constexpr (std::is_same_v<T, GraphicKind>) {
          std::string out = "graphic";
          for (const auto& e : k.edges) {
            out += " | " + names[e.element] + " " + std::to_string(e.tail) + " " + std::to_string(e.head);
          }
          return out;
        } else {
          std::string out = "bases";
          for (Subset s : k.bases) out += " | " + names_of(s, names);
          return out;
        }
      },
      m.kind());
}

}  // namespace detail

// Parses and validates a game file. Syntax errors raise ParseError with
// line and column; semantic failures raise ValidationError naming the
// witness.
inline GameInstance parse_game_file(std::string_view text) {
  return detail::GameParser(text).parse();
}

inline std::string serialize_game(const GameInstance& game) {
  using detail::join_rationals;
  std::ostringstream out;
  const auto& names = game.resources;
  out << "[game]\n";
  out << "flavor: " << to_string(game.flavor()) << "\n";
  out << "players: " << game.players << "\n";
  out << "resources:";
  for (const auto& r : names) out << " " << r;
  out << "\n";
  if (game.seed) out << "seed: " << *game.seed << "\n";
  if (!game.weights.empty()) out << "weights: " << join_rationals(game.weights) << "\n";
  if (!game.alphas.empty()) out << "alphas: " << join_rationals(game.alphas) << "\n";
  out << "\n[strategies]\n";
  for (int i = 0; i < game.players; ++i) {
    out << i + 1 << ": " << detail::space_text(game.spaces[i], names) << "\n";
  }
  out << "\n[costs]\n";
  const int m = game.resource_count();
  std::visit(
      [&](const auto& channels) {
        using T = std::decay_t<decltype(channels)>;
        if constexpr (std::is_same_v<T, ClassicCosts> || std::is_same_v<T, WeightedCosts>) {
          for (int e = 0; e < m; ++e) out << names[e] << ": " << detail::scalar_text(channels.cost[e]) << "\n";
        } else if constexpr (std::is_same_v<T, PlayerSpecificCosts>) {
          for (int i = 0; i < game.players; ++i) {
            for (int e = 0; e < m; ++e) {
              out << i + 1 << " " << names[e] << ": " << detail::scalar_text(channels.cost[i][e]) << "\n";
            }
          }
        } else if constexpr (std::is_same_v<T, ComplementarityCosts>) {
          for (int e = 0; e < m; ++e) out << names[e] << ": " << detail::set_cost_text(channels.cost[e]) << "\n";
        } else if constexpr (std::is_same_v<T, MixedCosts>) {
          for (int e = 0; e < m; ++e) out << "latency " << names[e] << ": " << detail::scalar_text(channels.latency[e]) << "\n";
          for (int e = 0; e < m; ++e) out << "bottleneck " << names[e] << ": " << detail::scalar_text(channels.bottleneck[e]) << "\n";
        } else if constexpr (std::is_same_v<T, PlayerSpecificMixedCosts>) {
          for (int i = 0; i < game.players; ++i) {
            for (int e = 0; e < m; ++e) {
              out << "latency " << i + 1 << " " << names[e] << ": " << detail::scalar_text(channels.latency[i][e]) << "\n";
            }
          }
          for (int i = 0; i < game.players; ++i) {
            for (int e = 0; e < m; ++e) {
              out << "bottleneck " << i + 1 << " " << names[e] << ": " << detail::scalar_text(channels.bottleneck[i][e]) << "\n";
            }
          }
        } else {
          for (int e = 0; e < m; ++e) out << "latency " << names[e] << ": " << detail::set_cost_text(channels.latency[e]) << "\n";
          for (int e = 0; e < m; ++e) out << "bottleneck " << names[e] << ": " << detail::set_cost_text(channels.bottleneck[e]) << "\n";
        }
      },
      game.costs);
  if (const auto* channels = std::get_if<ComplementarityCosts>(&game.costs)) {
    const Aggregator& g = channels->aggregator;
    out << "\n[aggregator]\n";
    switch (g.kind()) {
      case AggregatorKind::kSum: out << "kind: sum\n"; break;
      case AggregatorKind::kMax: out << "kind: max\n"; break;
      case AggregatorKind::kLp: out << "kind: lp\np: " << to_string(g.p()) << "\n"; break;
      case AggregatorKind::kTable: out << "kind: table\n"; break;
    }
    if (g.arity() > 0) out << "arity: " << g.arity() << "\n";
    if (g.kind() == AggregatorKind::kTable) {
      if (g.monotonicity_class() == MonotonicityClass::kDeclaredWeaklyMonotone) {
        out << "class: weakly-monotone\n";
      }
      for (const auto& [key, value] : g.entries()) {
        out << "entry: " << join_rationals(key) << " = " << to_string(value) << "\n";
      }
    }
  }
  if (const auto* channels = std::get_if<MixedSetCosts>(&game.costs)) {
    if (channels->dependence) out << "\n[dependence]\nd: " << detail::scalar_text(*channels->dependence) << "\n";
  }
  return out.str();
}

// step,player,removed,added,gamma_before,gamma_after,potential; row 0 holds
// the initial potential and the last line is the terminal status.
inline std::string trace_csv(const GameInstance& game, const DynamicsTrace& trace) {
  std::ostringstream out;
  out << "step,player,removed,added,gamma_before,gamma_after,potential\n";
  out << "0,,,,,," << (trace.initial_potential ? trace.initial_potential->str() : "") << "\n";
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const auto& s = trace.steps[k];
    out << k + 1 << "," << s.player + 1 << "," << game.resources[s.removed] << ","
        << game.resources[s.added] << "," << s.gamma_before.str() << "," << s.gamma_after.str()
        << "," << (s.potential ? s.potential->str() : "") << "\n";
  }
  out << "#terminal=" << to_string(trace.terminal)
      << ";certified=" << (trace.certified ? "true" : "false")
      << ";domain=" << (trace.reachable_domain_only ? "reachable" : "exact")
      << ";steps=" << trace.steps.size() << "\n";
  return out.str();
}

inline std::string profile_text(const GameInstance& game, const StrategyProfile& profile) {
  std::string out;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    out += (i ? " | " : "") + detail::names_of(profile[i], game.resources);
  }
  return out;
}

inline StrategyProfile parse_profile(const GameInstance& game, std::string_view text) {
  std::map<std::string, int> index;
  for (int e = 0; e < game.resource_count(); ++e) index[game.resources[e]] = e;
  StrategyProfile profile;
  std::size_t start = 0;
  while (true) {
    std::size_t bar = text.find('|', start);
    Subset s = 0;
    for (const auto& t : detail::tokenize(text.substr(start, bar == std::string_view::npos ? text.npos : bar - start), 1)) {
      auto it = index.find(t.text);
      if (it == index.end()) throw DomainError("unknown resource '" + t.text + "' in profile");
      s |= bit(it->second);
    }
    profile.push_back(s);
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  if (static_cast<int>(profile.size()) != game.players) {
    throw DomainError("profile lists " + std::to_string(profile.size()) + " strategies for " +
                      std::to_string(game.players) + " players");
  }
  return profile;
}

// Exhaustive certificate that no profile is an equilibrium: one line per
// profile naming a strictly improving deviation.
inline std::string no_pne_certificate(const GameInstance& game,
                                      int enumeration_cap = kDefaultEnumerationCap) {
  std::vector<std::vector<Subset>> strategies;
  for (int i = 0; i < game.players; ++i) strategies.push_back(strategies_of(game, i, enumeration_cap));
  std::ostringstream out;
  long long total = 1;
  for (const auto& s : strategies) total *= static_cast<long long>(s.size());
  out << "# profile => deviating player : new strategy ; cost before > cost after\n";
  out << "profiles: " << total << "\n";
  std::vector<std::size_t> idx(game.players, 0);
  StrategyProfile profile(game.players);
  while (true) {
    for (int i = 0; i < game.players; ++i) profile[i] = strategies[i][idx[i]];
    auto verdict = detail::check_pne(game, profile, strategies);
    if (verdict.is_pne()) {
      throw ContractError("profile " + format_profile(game, profile) + " is an equilibrium");
    }
    const auto& d = *verdict.deviation;
    StrategyProfile moved = detail::with_strategy(profile, d.player, d.strategy);
    out << profile_text(game, profile) << " => " << d.player + 1 << " : "
        << detail::names_of(d.strategy, game.resources) << " ; "
        << player_cost(game, profile, d.player).str() << " > "
        << player_cost(game, moved, d.player).str() << "\n";
    int k = game.players - 1;
    while (k >= 0 && ++idx[k] == strategies[k].size()) idx[k--] = 0;
    if (k < 0) break;
  }
  return out.str();
}

// Re-checks a certificate against the game: every profile appears exactly
// once and each listed deviation strictly lowers the deviator's cost.
// Returns an empty string on success, otherwise the first problem found.
inline std::string verify_no_pne_certificate(const GameInstance& game, std::string_view text,
                                             int enumeration_cap = kDefaultEnumerationCap) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<long long> declared;
  std::set<StrategyProfile> seen;
  long long total = 1;
  for (int i = 0; i < game.players; ++i) {
    total *= static_cast<long long>(strategies_of(game, i, enumeration_cap).size());
  }
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("profiles:", 0) == 0) {
      declared = std::stoll(line.substr(9));
      continue;
    }
    auto arrow = line.find("=>");
    auto colon = line.find(':', arrow);
    auto semi = line.find(';', colon);
    if (arrow == std::string::npos || colon == std::string::npos || semi == std::string::npos) {
      return "line " + std::to_string(line_no) + ": malformed";
    }
    StrategyProfile profile;
    StrategyProfile alt;
    int deviator = 0;
    try {
      profile = parse_profile(game, std::string_view(line).substr(0, arrow));
      deviator = std::stoi(line.substr(arrow + 2, colon - arrow - 2)) - 1;
      if (deviator < 0 || deviator >= game.players) return "line " + std::to_string(line_no) + ": bad player";
      alt = profile;
      alt[deviator] = parse_profile(game, std::string(game.players - 1, '|').insert(0, line.substr(colon + 1, semi - colon - 1)))[0];
      congestion_of(game, profile);
      congestion_of(game, alt);
    } catch (const std::exception& e) {
      return "line " + std::to_string(line_no) + ": " + e.what();
    }
    if (!less_than(player_cost_key(game, alt, deviator), player_cost_key(game, profile, deviator),
                   game.tolerance)) {
      return "line " + std::to_string(line_no) + ": deviation does not improve";
    }
    if (!seen.insert(profile).second) return "line " + std::to_string(line_no) + ": repeated profile";
  }
  if (!declared || *declared != total) return "declared profile count does not match the game";
  if (static_cast<long long>(seen.size()) != total) return "certificate does not cover every profile";
  return "";
}

}  // namespace mcg

#endif  // MCG_IO_HPP
