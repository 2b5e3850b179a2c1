#pragma once

#include <optional>
#include <vector>

#include "didp/eval.hpp"
#include "didp/model.hpp"

namespace didp {

inline bool check_constraints(const Model& m, const State& s) {
  for (const auto& c : m.constraints)
    if (!eval_condition(c, s, m.tables)) return false;
  return true;
}

inline bool conditions_hold(const std::vector<Condition>& cs, const State& s, const TableRegistry& t) {
  for (const auto& c : cs)
    if (!eval_condition(c, s, t)) return false;
  return true;
}

// Best base cost over all satisfied base cases, or nothing if none holds.
inline std::optional<Number> base_cost(const Model& m, const State& s) {
  std::optional<Number> best;
  for (const auto& b : m.base_cases) {
    if (!conditions_hold(b.conditions, s, m.tables)) continue;
    Number c = eval_numeric(b.cost, s, m.tables);
    if (!best || m.cost.better(c, *best)) best = c;
  }
  return best;
}

inline bool is_applicable(const Model& m, const Transition& t, const State& s) {
  return conditions_hold(t.preconditions, s, m.tables);
}

// Indices of applicable transitions. With forced restriction, the first
// declared applicable forced transition replaces the whole set.
inline std::vector<std::size_t> applicable_transitions(const Model& m, const State& s, bool forced_restriction = true) {
  std::vector<std::size_t> out;
  if (forced_restriction) {
    for (std::size_t k = 0; k < m.transitions.size(); ++k)
      if (m.transitions[k].forced && is_applicable(m, m.transitions[k], s)) return {k};
    for (std::size_t k = 0; k < m.transitions.size(); ++k)
      if (!m.transitions[k].forced && is_applicable(m, m.transitions[k], s)) out.push_back(k);
    return out;
  }
  for (std::size_t k = 0; k < m.transitions.size(); ++k)
    if (is_applicable(m, m.transitions[k], s)) out.push_back(k);
  return out;
}

// All effects read the pre-state.
inline State successor(const Model& m, const Transition& t, const State& s) {
  State r = s;
  for (const auto& [i, e] : t.set_effects) r.sets.at(i) = eval_set(e, s, m.tables);
  for (const auto& [i, e] : t.element_effects) r.elements.at(i) = eval_element(e, s, m.tables);
  for (const auto& [i, e] : t.integer_effects) r.integers.at(i) = eval_numeric(e, s, m.tables).as_int();
  for (const auto& [i, e] : t.real_effects) {
    Number v = eval_numeric(e, s, m.tables);
    if (v.is_infinite()) throw EvalError("continuous variable assigned an infinite value");
    r.reals.at(i) = v.as_double();
  }
  return r;
}

inline Number combine(const CostStructure& c, const Number& w, const Number& x) {
  if (x.is_infinite()) return x;
  if (w.is_infinite()) return w;
  return c.op == CostOp::Add ? w + x : max(w, x);
}

inline Number transition_weight(const Model& m, const Transition& t, const State& s) {
  return eval_numeric(t.weight, s, m.tables);
}

enum class Dominance { FirstDominates, SecondDominates, Equal, Incomparable };

namespace detail {
// -1: a preferred, 1: b preferred, 0: equal.
template <class T>
int prefer(Preference p, T a, T b) {
  if (a == b) return 0;
  bool a_smaller = a < b;
  return (p == Preference::Less) == a_smaller ? -1 : 1;
}
}  // namespace detail

inline Dominance dominance_compare(const StateMetadata& meta, const State& a, const State& b) {
  if (a.sets != b.sets) return Dominance::Incomparable;
  bool a_better = false, b_better = false;
  auto visit = [&](int r) {
    if (r < 0) a_better = true;
    if (r > 0) b_better = true;
  };
  for (const auto& v : meta.variables()) {
    switch (v.kind) {
      case VarKind::Set: break;
      case VarKind::Element: {
        auto x = a.elements[v.index], y = b.elements[v.index];
        if (v.preference == Preference::None) {
          if (x != y) return Dominance::Incomparable;
        } else {
          visit(detail::prefer(v.preference, x, y));
        }
        break;
      }
      case VarKind::Integer: {
        auto x = a.integers[v.index], y = b.integers[v.index];
        if (v.preference == Preference::None) {
          if (x != y) return Dominance::Incomparable;
        } else {
          visit(detail::prefer(v.preference, x, y));
        }
        break;
      }
      case VarKind::Continuous: {
        auto x = a.reals[v.index], y = b.reals[v.index];
        if (v.preference == Preference::None) {
          if (x != y) return Dominance::Incomparable;
        } else {
          visit(detail::prefer(v.preference, x, y));
        }
        break;
      }
    }
  }
  if (a_better && b_better) return Dominance::Incomparable;
  if (a_better) return Dominance::FirstDominates;
  if (b_better) return Dominance::SecondDominates;
  return Dominance::Equal;
}

// a is at least as good as b under the dominance preorder.
inline bool weakly_dominates(const StateMetadata& meta, const State& a, const State& b) {
  auto d = dominance_compare(meta, a, b);
  return d == Dominance::Equal || d == Dominance::FirstDominates;
}

// State with resource variables zeroed: the key dominance is allowed to act under.
inline State non_resource_key(const StateMetadata& meta, const State& s) {
  State k = s;
  for (const auto& v : meta.variables()) {
    if (v.preference == Preference::None) continue;
    switch (v.kind) {
      case VarKind::Element: k.elements[v.index] = 0; break;
      case VarKind::Integer: k.integers[v.index] = 0; break;
      case VarKind::Continuous: k.reals[v.index] = 0; break;
      case VarKind::Set: break;
    }
  }
  return k;
}

// Tightest declared dual bound: max for minimization, min for maximization.
inline std::optional<Number> eval_dual_bound(const Model& m, const State& s) {
  std::optional<Number> best;
  for (const auto& b : m.dual_bounds) {
    Number v = eval_numeric(b, s, m.tables);
    if (!best || m.cost.better(*best, v)) best = v;
  }
  return best;
}

// Cost of a transition sequence from the target, following the recursive
// definition (w1 (+) (w2 (+) ... (+) base)). Nothing if the sequence is not a
// solution: an inapplicable step, a constraint violation, or no base case at
// the end, or a base state passed through before the end.
inline std::optional<Number> solution_cost(const Model& m, const std::vector<std::size_t>& seq) {
  std::vector<State> states{m.target};
  if (!check_constraints(m, m.target)) return std::nullopt;
  std::vector<Number> weights;
  for (auto k : seq) {
    const State& s = states.back();
    if (base_cost(m, s)) return std::nullopt;
    if (k >= m.transitions.size() || !is_applicable(m, m.transitions[k], s)) return std::nullopt;
    weights.push_back(transition_weight(m, m.transitions[k], s));
    State next = successor(m, m.transitions[k], s);
    if (!check_constraints(m, next)) return std::nullopt;
    states.push_back(std::move(next));
  }
  auto base = base_cost(m, states.back());
  if (!base) return std::nullopt;
  Number x = *base;
  for (std::size_t k = weights.size(); k > 0; --k) x = combine(m.cost, weights[k - 1], x);
  return x;
}

}  // namespace didp
