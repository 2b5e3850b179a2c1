#pragma once

#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "didp/model_ops.hpp"

namespace didp {

struct OracleResult {
  std::optional<Number> cost;  // nothing when the model is infeasible
  std::size_t memo_size = 0;
};

// Memoized evaluation of the Bellman equation by exhaustive recursion.
// Uses an explicit stack, so deep models do not exhaust the call stack.
class BellmanOracle {
 public:
  explicit BellmanOracle(const Model& m, bool forced_restriction = false, std::size_t depth_limit = 1000000)
      : m_(m), forced_(forced_restriction), depth_limit_(depth_limit) {}

  // Optimal cost from s; +inf (-inf when maximizing) if no s-solution exists.
  Number value(const State& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    struct Frame {
      State state;
      std::vector<std::size_t> transitions;
      std::size_t next = 0;
      Number best;
      bool started = false;
    };
    std::vector<Frame> stack;
    std::unordered_set<State, StateHash> on_path;
    stack.push_back({s, {}, 0, m_.cost.infeasible(), false});
    on_path.insert(s);
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (!f.started) {
        f.started = true;
        if (!check_constraints(m_, f.state)) {
          finish(stack, on_path, m_.cost.infeasible());
          continue;
        }
        if (auto b = base_cost(m_, f.state)) {
          finish(stack, on_path, *b);
          continue;
        }
        f.transitions = applicable_transitions(m_, f.state, forced_);
      }
      if (f.next == f.transitions.size()) {
        finish(stack, on_path, f.best);
        continue;
      }
      const Transition& t = m_.transitions[f.transitions[f.next]];
      State succ = successor(m_, t, f.state);
      auto it = memo_.find(succ);
      if (it == memo_.end()) {
        if (on_path.count(succ)) throw ModelError("cycle detected: a state is reachable from itself");
        if (stack.size() >= depth_limit_) throw ModelError("oracle depth limit exceeded");
        on_path.insert(succ);
        stack.push_back({std::move(succ), {}, 0, m_.cost.infeasible(), false});
        continue;
      }
      Number c = combine(m_.cost, transition_weight(m_, t, f.state), it->second);
      f.best = m_.cost.best(f.best, c);
      ++f.next;
    }
    return memo_.at(s);
  }

  OracleResult solve() {
    Number v = value(m_.target);
    OracleResult r;
    if (!v.is_infinite() || !(v == m_.cost.infeasible())) r.cost = v;
    r.memo_size = memo_.size();
    return r;
  }

  std::size_t memo_size() const { return memo_.size(); }
  const std::unordered_map<State, Number, StateHash>& memo() const { return memo_; }

 private:
  template <class Stack, class Path>
  void finish(Stack& stack, Path& on_path, const Number& v) {
    on_path.erase(stack.back().state);
    memo_.emplace(std::move(stack.back().state), v);
    stack.pop_back();
  }

  const Model& m_;
  bool forced_;
  std::size_t depth_limit_;
  std::unordered_map<State, Number, StateHash> memo_;
};

inline OracleResult bellman_oracle(const Model& m, std::size_t depth_limit = 1000000, bool forced_restriction = false) {
  BellmanOracle o(m, forced_restriction, depth_limit);
  return o.solve();
}

}  // namespace didp
