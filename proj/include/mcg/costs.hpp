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

#ifndef MCG_COSTS_HPP
#define MCG_COSTS_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mcg/errors.hpp"
#include "mcg/numeric.hpp"
#include "mcg/subset.hpp"

namespace mcg {

// A function of one nonnegative scalar (a player count or a total weight).
struct ScalarFunction {
  // f(k) = values[k] for integer k in [0, values.size()).
  struct Table {
    std::vector<Rational> values;
    bool operator==(const Table&) const = default;
  };
  // f(x) = sum_k coefficients[k] * x^k.
  struct Polynomial {
    std::vector<Rational> coefficients;
    bool operator==(const Polynomial&) const = default;
  };
  // f(x) = y for each listed (x, y); undefined elsewhere. Sorted by x.
  struct Points {
    std::vector<std::pair<Rational, Rational>> points;
    bool operator==(const Points&) const = default;
  };

  std::variant<Table, Polynomial, Points> form;

  static ScalarFunction table(std::vector<Rational> values) {
    return {Table{std::move(values)}};
  }
  static ScalarFunction polynomial(std::vector<Rational> coefficients) {
    return {Polynomial{std::move(coefficients)}};
  }
  static ScalarFunction points(std::vector<std::pair<Rational, Rational>> pts) {
    std::sort(pts.begin(), pts.end());
    for (std::size_t k = 1; k < pts.size(); ++k) {
      if (pts[k].first == pts[k - 1].first) {
        throw ValidationError("point function lists x=" + to_string(pts[k].first) + " twice");
      }
    }
    return {Points{std::move(pts)}};
  }

  Rational operator()(const Rational& x) const {
    if (const auto* t = std::get_if<Table>(&form)) {
      if (denominator(x) != 1 || x < 0 || x >= static_cast<long>(t->values.size())) {
        throw DomainError("table cost undefined at " + to_string(x));
      }
      return t->values[x.convert_to<std::size_t>()];
    }
    if (const auto* p = std::get_if<Polynomial>(&form)) {
      Rational acc = 0;
      for (auto it = p->coefficients.rbegin(); it != p->coefficients.rend(); ++it) {
        acc = acc * x + *it;
      }
      return acc;
    }
    const auto& pts = std::get<Points>(form).points;
    auto it = std::lower_bound(pts.begin(), pts.end(), x,
                               [](const auto& pt, const Rational& v) { return pt.first < v; });
    if (it == pts.end() || it->first != x) {
      throw DomainError("point function undefined at " + to_string(x));
    }
    return it->second;
  }

  bool operator==(const ScalarFunction&) const = default;
};

// Monotone set function c : 2^N -> R+ over player subsets.
struct SetCost {
  // c(X) = f(|X|).
  struct CountBased {
    ScalarFunction f;
    bool operator==(const CountBased&) const = default;
  };
  // c(X) = inner(sum of the weights of X).
  struct WeightInduced {
    ScalarFunction inner;
    bool operator==(const WeightInduced&) const = default;
  };
  // c(X) = values[mask of X]; total over 2^N.
  struct ExplicitTable {
    std::vector<Rational> values;
    bool operator==(const ExplicitTable&) const = default;
  };

  std::variant<CountBased, WeightInduced, ExplicitTable> form;

  static SetCost count_based(ScalarFunction f) { return {CountBased{std::move(f)}}; }
  static SetCost weight_induced(ScalarFunction inner) { return {WeightInduced{std::move(inner)}}; }
  static SetCost table(std::vector<Rational> values) { return {ExplicitTable{std::move(values)}}; }

  bool needs_weights() const { return std::holds_alternative<WeightInduced>(form); }

  bool operator==(const SetCost&) const = default;
};

inline Rational total_weight(PlayerSet players, std::span<const Rational> weights) {
  Rational sum = 0;
  for (int i : elements_of(players)) {
    if (i >= static_cast<int>(weights.size())) throw DomainError("player without a weight");
    sum += weights[i];
  }
  return sum;
}

inline CostValue eval_set_cost(const SetCost& c, PlayerSet players,
                               std::span<const Rational> weights = {}) {
  if (const auto* cb = std::get_if<SetCost::CountBased>(&c.form)) {
    return CostValue(cb->f(Rational(cardinality(players))));
  }
  if (const auto* wi = std::get_if<SetCost::WeightInduced>(&c.form)) {
    if (weights.empty()) throw ContractError("weight-induced cost evaluated without weights");
    return CostValue(wi->inner(total_weight(players, weights)));
  }
  const auto& values = std::get<SetCost::ExplicitTable>(c.form).values;
  if (players >= values.size()) {
    throw DomainError("cost table has no entry for player set " + std::to_string(players));
  }
  return CostValue(values[players]);
}

// A covering pair X subset Y = X + {i} with c(X) > c(Y), if one exists.
struct SetMonotoneVerdict {
  std::optional<std::pair<PlayerSet, PlayerSet>> witness;
  bool monotone() const { return !witness.has_value(); }
};

inline SetMonotoneVerdict check_monotone_set_cost(const SetCost& c, int players,
                                                  std::span<const Rational> weights = {}) {
  if (players > kMaxPlayers) throw ResourceLimitError("too many players for a set-cost check");
  if (const auto* cb = std::get_if<SetCost::CountBased>(&c.form)) {
    for (int k = 0; k < players; ++k) {
      if (cb->f(Rational(k)) > cb->f(Rational(k + 1))) {
        auto first = static_cast<PlayerSet>(full_set(k));
        return {std::make_pair(first, static_cast<PlayerSet>(first | bit(k)))};
      }
    }
    return {};
  }
  const PlayerSet limit = PlayerSet{1} << players;
  std::vector<Rational> value(limit);
  for (PlayerSet x = 0; x < limit; ++x) value[x] = eval_set_cost(c, x, weights).exact();
  for (PlayerSet x = 0; x < limit; ++x) {
    for (int i = 0; i < players; ++i) {
      PlayerSet y = x | static_cast<PlayerSet>(bit(i));
      if (y != x && value[x] > value[y]) return {std::make_pair(x, y)};
    }
  }
  return {};
}

enum class AggregatorKind { kSum, kMax, kLp, kTable };
enum class MonotonicityClass { kCoordinateMonotone, kDeclaredWeaklyMonotone, kUnknown };

// The aggregation function g : R+^r -> R. Built-ins are symmetric and
// coordinate-monotone; tables are looked up after sorting the argument.
class Aggregator {
 public:
  using TableEntries = std::map<std::vector<Rational>, Rational>;

  static Aggregator sum(int arity = 0) { return Aggregator(AggregatorKind::kSum, arity); }
  static Aggregator max(int arity = 0) { return Aggregator(AggregatorKind::kMax, arity); }
  static Aggregator lp(Rational p, int arity = 0) {
    if (p < 1) throw ValidationError("L^p aggregation needs p >= 1, got " + to_string(p));
    Aggregator g(AggregatorKind::kLp, arity);
    g.p_ = std::move(p);
    return g;
  }
  // Keys of `entries` are sorted argument tuples of length `arity`.
  static Aggregator table(int arity, TableEntries entries,
                          MonotonicityClass declared = MonotonicityClass::kUnknown) {
    if (arity < 1) throw ValidationError("table aggregator needs arity >= 1");
    for (const auto& [key, value] : entries) {
      if (static_cast<int>(key.size()) != arity) {
        throw ValidationError("table aggregator entry has wrong arity");
      }
      if (!std::is_sorted(key.begin(), key.end())) {
        throw ValidationError("table aggregator keys must be sorted");
      }
    }
    Aggregator g(AggregatorKind::kTable, arity);
    g.entries_ = std::move(entries);
    g.class_ = declared;
    return g;
  }

  AggregatorKind kind() const { return kind_; }
  // 0 means "any arity" (built-ins only).
  int arity() const { return arity_; }
  const Rational& p() const { return p_; }
  const TableEntries& entries() const { return entries_; }
  MonotonicityClass monotonicity_class() const { return class_; }

  bool integer_p() const { return denominator(p_) == 1; }

  // Distinct values appearing in table keys, sorted.
  std::vector<Rational> grid() const {
    std::vector<Rational> out;
    for (const auto& [key, value] : entries_) out.insert(out.end(), key.begin(), key.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Aggregator with_arity(int arity) const {
    Aggregator g = *this;
    g.arity_ = arity;
    return g;
  }

  bool operator==(const Aggregator&) const = default;

 private:
  Aggregator(AggregatorKind kind, int arity)
      : kind_(kind),
        arity_(arity),
        class_(kind == AggregatorKind::kTable ? MonotonicityClass::kUnknown
                                              : MonotonicityClass::kCoordinateMonotone) {}

  AggregatorKind kind_;
  int arity_;
  Rational p_ = 1;
  TableEntries entries_;
  MonotonicityClass class_;
};

namespace detail {

inline void check_arity(const Aggregator& g, std::size_t size) {
  if (g.arity() > 0 && static_cast<int>(size) != g.arity()) {
    throw ContractError("aggregator of arity " + std::to_string(g.arity()) + " applied to " +
                        std::to_string(size) + " values");
  }
}

inline CostValue table_lookup(const Aggregator& g, std::span<const CostValue> v) {
  std::vector<Rational> key;
  key.reserve(v.size());
  for (const auto& x : v) key.push_back(x.exact());
  std::sort(key.begin(), key.end());
  auto it = g.entries().find(key);
  if (it == g.entries().end()) {
    std::string text;
    for (const auto& k : key) text += (text.empty() ? "" : " ") + to_string(k);
    throw DomainError("aggregator table has no entry for (" + text + ")");
  }
  return CostValue(it->second);
}

inline CostValue power_sum(std::span<const CostValue> v, const Rational& p) {
  if (denominator(p) == 1) {
    auto exponent = numerator(p).convert_to<unsigned>();
    CostValue acc(0);
    for (const auto& x : v) acc += power(x, exponent);
    return acc;
  }
  double e = p.convert_to<double>();
  double acc = 0;
  for (const auto& x : v) acc += std::pow(x.to_double(), e);
  return CostValue::approx(acc);
}

}  // namespace detail

inline CostValue aggregate(const Aggregator& g, std::span<const CostValue> v) {
  detail::check_arity(g, v.size());
  switch (g.kind()) {
    case AggregatorKind::kSum: {
      CostValue acc(0);
      for (const auto& x : v) acc += x;
      return acc;
    }
    case AggregatorKind::kMax: {
      CostValue best(0);
      for (const auto& x : v) best = max_of(best, x);
      return best;
    }
    case AggregatorKind::kLp: {
      CostValue s = detail::power_sum(v, g.p());
      if (g.integer_p() && s.is_exact()) {
        auto p = numerator(g.p()).convert_to<unsigned>();
        if (auto root = exact_root(s.exact(), p)) return CostValue(*root);
      }
      return CostValue::approx(std::pow(s.to_double(), 1.0 / g.p().convert_to<double>()));
    }
    case AggregatorKind::kTable:
      return detail::table_lookup(g, v);
  }
  throw std::logic_error("unknown aggregator kind");
}

// A strictly increasing transform of aggregate(); comparisons of player
// costs go through this so that integer-p L^p never takes a root.
inline CostValue aggregate_key(const Aggregator& g, std::span<const CostValue> v) {
  if (g.kind() == AggregatorKind::kLp && g.integer_p()) {
    detail::check_arity(g, v.size());
    return detail::power_sum(v, g.p());
  }
  return aggregate(g, v);
}

// Relation of x to y under g, quantified over contexts v'. kStrictLess means
// g(v',x) < g(v',y) for every context; kLessEq means <= everywhere with
// both strict and equal cases present. The induced relation x <=_g y holds
// for kEquivalent, kStrictLess and kLessEq.
enum class PreorderVerdict { kEquivalent, kStrictLess, kLessEq, kStrictGreater, kGreaterEq };

inline bool precedes_or_equivalent(PreorderVerdict v) {
  return v == PreorderVerdict::kEquivalent || v == PreorderVerdict::kStrictLess ||
         v == PreorderVerdict::kLessEq;
}
inline bool strictly_precedes(PreorderVerdict v) {
  return v == PreorderVerdict::kStrictLess || v == PreorderVerdict::kLessEq;
}

inline std::string to_string(PreorderVerdict v) {
  switch (v) {
    case PreorderVerdict::kEquivalent: return "Equivalent";
    case PreorderVerdict::kStrictLess: return "StrictLess";
    case PreorderVerdict::kLessEq: return "LessEq";
    case PreorderVerdict::kStrictGreater: return "StrictGreater";
    case PreorderVerdict::kGreaterEq: return "GreaterEq";
  }
  return "?";
}

namespace detail {

// Arity used when quantifying contexts; "any arity" built-ins use r = 2.
inline int effective_arity(const Aggregator& g) { return g.arity() > 0 ? g.arity() : 2; }

// Calls fn(context) for every context in domain^(r-1), odometer order.
template <class Fn>
void for_each_context(std::span<const CostValue> domain, int length, Fn&& fn) {
  std::vector<CostValue> context(length);
  if (length == 0) {
    fn(std::span<const CostValue>(context));
    return;
  }
  if (domain.empty()) return;
  std::vector<std::size_t> idx(length, 0);
  while (true) {
    for (int k = 0; k < length; ++k) context[k] = domain[idx[k]];
    if (!fn(std::span<const CostValue>(context))) return;
    int k = length - 1;
    while (k >= 0 && ++idx[k] == domain.size()) idx[k--] = 0;
    if (k < 0) return;
  }
}

struct ContextOutcome {
  std::optional<std::vector<CostValue>> less;     // a context with g(v',x) < g(v',y)
  std::optional<std::vector<CostValue>> greater;  // a context with g(v',x) > g(v',y)
  bool equal = false;
  bool evaluated = false;
};

inline ContextOutcome compare_in_contexts(const Aggregator& g, const CostValue& x,
                                          const CostValue& y,
                                          std::span<const CostValue> domain,
                                          double tolerance) {
  ContextOutcome out;
  const int r = effective_arity(g);
  std::vector<CostValue> with_x(r), with_y(r);
  for_each_context(domain, r - 1, [&](std::span<const CostValue> ctx) {
    std::copy(ctx.begin(), ctx.end(), with_x.begin());
    std::copy(ctx.begin(), ctx.end(), with_y.begin());
    with_x[r - 1] = x;
    with_y[r - 1] = y;
    out.evaluated = true;
    auto c = compare(aggregate_key(g, with_x), aggregate_key(g, with_y), tolerance);
    if (c == std::weak_ordering::less) {
      if (!out.less) out.less.emplace(ctx.begin(), ctx.end());
    } else if (c == std::weak_ordering::greater) {
      if (!out.greater) out.greater.emplace(ctx.begin(), ctx.end());
    } else {
      out.equal = true;
    }
    return !(out.less && out.greater && out.equal);
  });
  return out;
}

}  // namespace detail

// Classifies x against y under g. Sum and L^p are strictly increasing in
// every coordinate, so they compare numerically; Max and tables quantify the
// context over `domain`.
inline PreorderVerdict preorder_compare(const Aggregator& g, const CostValue& x,
                                        const CostValue& y, std::span<const CostValue> domain,
                                        double tolerance = kDefaultTolerance) {
  auto numeric = compare(x, y, tolerance);
  if (numeric == std::weak_ordering::equivalent &&
      (g.kind() != AggregatorKind::kTable || x == y)) {
    return PreorderVerdict::kEquivalent;
  }
  if (g.kind() == AggregatorKind::kSum || g.kind() == AggregatorKind::kLp) {
    return numeric == std::weak_ordering::less ? PreorderVerdict::kStrictLess
                                               : PreorderVerdict::kStrictGreater;
  }
  if (g.kind() == AggregatorKind::kMax) {
    const bool x_low = numeric == std::weak_ordering::less;
    const CostValue& high = x_low ? y : x;
    if (detail::effective_arity(g) == 1) {
      return x_low ? PreorderVerdict::kStrictLess : PreorderVerdict::kStrictGreater;
    }
    bool ties = std::any_of(domain.begin(), domain.end(),
                            [&](const CostValue& d) { return !less_than(d, high, tolerance); });
    bool strict = std::any_of(domain.begin(), domain.end(),
                              [&](const CostValue& d) { return less_than(d, high, tolerance); });
    if (!strict) return PreorderVerdict::kEquivalent;
    if (x_low) return ties ? PreorderVerdict::kLessEq : PreorderVerdict::kStrictLess;
    return ties ? PreorderVerdict::kGreaterEq : PreorderVerdict::kStrictGreater;
  }
  auto out = detail::compare_in_contexts(g, x, y, domain, tolerance);
  if (out.less && out.greater) {
    throw NotWeaklyMonotoneError("aggregator orders " + x.str() + " and " + y.str() +
                                 " differently in different contexts");
  }
  if (out.less) return out.equal ? PreorderVerdict::kLessEq : PreorderVerdict::kStrictLess;
  if (out.greater) return out.equal ? PreorderVerdict::kGreaterEq : PreorderVerdict::kStrictGreater;
  return PreorderVerdict::kEquivalent;
}

// Witness that g is not weakly monotone on the domain: g(v1, x) < g(v1, y)
// and g(v2, x) > g(v2, y).
struct WeakMonotonicityWitness {
  CostValue x;
  CostValue y;
  std::vector<CostValue> less_context;
  std::vector<CostValue> greater_context;
};

struct WeakMonotonicityVerdict {
  std::optional<WeakMonotonicityWitness> witness;
  bool weakly_monotone() const { return !witness.has_value(); }
};

inline WeakMonotonicityVerdict check_weak_monotonicity(const Aggregator& g,
                                                       std::span<const CostValue> domain,
                                                       double tolerance = kDefaultTolerance) {
  for (std::size_t a = 0; a < domain.size(); ++a) {
    for (std::size_t b = a + 1; b < domain.size(); ++b) {
      auto out = detail::compare_in_contexts(g, domain[a], domain[b], domain, tolerance);
      if (out.less && out.greater) {
        return {WeakMonotonicityWitness{domain[a], domain[b], *out.less, *out.greater}};
      }
    }
  }
  return {};
}

// A pair X subset Y whose costs are not ordered c(X) <=_g c(Y).
struct CostMonotoneVerdict {
  std::optional<std::pair<PlayerSet, PlayerSet>> witness;
  bool monotone() const { return !witness.has_value(); }
};

inline CostMonotoneVerdict check_cost_monotone_wrt_g(const SetCost& c, const Aggregator& g,
                                                     int players,
                                                     std::span<const CostValue> domain,
                                                     std::span<const Rational> weights = {},
                                                     double tolerance = kDefaultTolerance) {
  if (players > kMaxPlayers) throw ResourceLimitError("too many players for a set-cost check");
  const PlayerSet limit = PlayerSet{1} << players;
  std::vector<CostValue> value(limit);
  for (PlayerSet x = 0; x < limit; ++x) value[x] = eval_set_cost(c, x, weights);
  for (PlayerSet x = 0; x < limit; ++x) {
    for (int i = 0; i < players; ++i) {
      PlayerSet y = x | static_cast<PlayerSet>(bit(i));
      if (y == x) continue;
      if (!precedes_or_equivalent(preorder_compare(g, value[x], value[y], domain, tolerance))) {
        return {std::make_pair(x, y)};
      }
    }
  }
  return {};
}

// The total preorder <=_g as a comparator. Built-ins order numerically;
// tables rank the given finite domain, and only values in it are comparable.
class CostOrder {
 public:
  explicit CostOrder(Aggregator g, std::vector<CostValue> domain = {},
                     double tolerance = kDefaultTolerance)
      : tolerance_(tolerance) {
    if (g.kind() != AggregatorKind::kTable) return;
    tabular_ = true;
    std::sort(domain.begin(), domain.end(),
              [](const CostValue& a, const CostValue& b) { return a.exact() < b.exact(); });
    domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
    std::vector<CostValue> sorted = domain;
    std::stable_sort(sorted.begin(), sorted.end(), [&](const CostValue& a, const CostValue& b) {
      return strictly_precedes(preorder_compare(g, a, b, domain, tolerance));
    });
    int rank = 0;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      if (k > 0 && strictly_precedes(preorder_compare(g, sorted[k - 1], sorted[k], domain,
                                                      tolerance))) {
        ++rank;
      }
      rank_.emplace(sorted[k].exact(), rank);
    }
  }

  std::weak_ordering compare(const CostValue& x, const CostValue& y) const {
    if (!tabular_) return mcg::compare(x, y, tolerance_);
    return rank_of(x) <=> rank_of(y);
  }

  bool tabular() const { return tabular_; }

 private:
  int rank_of(const CostValue& v) const {
    auto it = rank_.find(v.exact());
    if (it == rank_.end()) throw DomainError("cost value " + v.str() + " outside the ranked domain");
    return it->second;
  }

  double tolerance_;
  bool tabular_ = false;
  std::map<Rational, int> rank_;
};

}  // namespace mcg

#endif  // MCG_COSTS_HPP
