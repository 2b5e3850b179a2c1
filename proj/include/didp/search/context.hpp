#pragma once

#include <chrono>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "didp/model_ops.hpp"
#include "didp/search/solution.hpp"

namespace didp {

struct SearchNode {
  State state;
  Number g;
  Number h;
  Number f;
  SearchNode* parent = nullptr;
  std::size_t transition = 0;
  std::size_t depth = 0;
  std::uint64_t id = 0;      // insertion order, for LIFO tie-breaking
  std::size_t discrepancy = 0;
  bool removed = false;      // evicted by a dominating state
  bool counted = false;      // f is held by the open-list bound tracker
};

// Priority shared by all policies: f, then h, then most recently inserted.
struct NodeOrder {
  const CostStructure* cost;
  bool better(const SearchNode* a, const SearchNode* b) const {
    if (cost->better(a->f, b->f)) return true;
    if (cost->better(b->f, a->f)) return false;
    if (cost->better(a->h, b->h)) return true;
    if (cost->better(b->h, a->h)) return false;
    return a->id > b->id;
  }
  // Comparator for std heaps: true when a has lower priority than b.
  bool operator()(const SearchNode* a, const SearchNode* b) const { return better(b, a); }
};

// Bookkeeping shared by the generic engine and beam search: clock, incumbent,
// primal/dual event logs and the heuristic.
class SearchContext {
 public:
  SearchContext(const Model& m, const SolverParams& p)
      : model(m), params(p), meta(p.use_dominance ? m.meta : m.meta.without_resources()),
        start_(std::chrono::steady_clock::now()) {
    has_bound = p.bound_mode == BoundMode::Trivial || !m.dual_bounds.empty();
    if (p.primal_bound) primal = *p.primal_bound;
  }

  const Model& model;
  const SolverParams& params;
  StateMetadata meta;  // resource preferences stripped when dominance is off
  bool has_bound = false;
  std::optional<Number> primal;  // gamma-bar (input bound or incumbent)
  bool found = false;            // an incumbent exists
  std::vector<std::size_t> best_path;
  std::optional<Number> dual;
  Statistics stats;
  std::vector<PrimalEvent> primal_events;
  std::vector<DualEvent> dual_events;
  std::optional<Number> first_solution_cost;

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  bool time_up() const { return params.time_limit && elapsed() >= *params.time_limit; }

  const CostStructure& cost() const { return model.cost; }

  Number heuristic(const State& s) const {
    if (params.bound_mode == BoundMode::Trivial)
      return model.cost.minimize() ? model.cost.identity : Number::infinity();
    auto h = eval_dual_bound(model, s);
    return h ? *h : model.cost.identity;
  }

  // f for guidance and pruning: g alone when no dual bound is declared.
  Number f_value(const Number& g, const Number& h) const { return has_bound ? combine(model.cost, g, h) : g; }

  // Strictly better than the current primal bound (always true without one).
  bool beats_primal(const Number& v) const { return !primal || model.cost.better(v, *primal); }

  void new_solution(const Number& c, std::vector<std::size_t> path) {
    primal = c;
    found = true;
    best_path = std::move(path);
    if (!first_solution_cost) first_solution_cost = c;
    double t = elapsed();
    primal_events.push_back({t, c});
    if (params.on_primal) params.on_primal(t, c, names(best_path));
  }

  // Offer a candidate dual bound: the best f over the frontier (or nothing
  // when the frontier is empty). Clipped by the primal bound, reported only
  // when it tightens the previous one.
  void offer_dual(const std::optional<Number>& frontier_best) {
    if (!has_bound && frontier_best) return;
    std::optional<Number> d;
    if (frontier_best && primal)
      d = model.cost.best(*frontier_best, *primal);
    else if (frontier_best)
      d = frontier_best;
    else if (primal)
      d = primal;
    else
      d = model.cost.infeasible();
    set_dual(*d);
  }

  void set_dual(const Number& d) {
    if (dual && !model.cost.better(*dual, d)) return;
    dual = d;
    double t = elapsed();
    dual_events.push_back({t, d});
    if (params.on_dual) params.on_dual(t, d);
  }

  std::vector<std::string> names(const std::vector<std::size_t>& path) const {
    std::vector<std::string> out;
    for (auto k : path) out.push_back(model.transitions[k].name);
    return out;
  }

  static std::vector<std::size_t> path_of(const SearchNode* n) {
    std::vector<std::size_t> p;
    for (; n && n->parent; n = n->parent) p.push_back(n->transition);
    return {p.rbegin(), p.rend()};
  }

  // exhausted: the search space was fully explored (proof complete).
  Solution finish(bool exhausted) {
    Solution s;
    stats.elapsed = elapsed();
    s.stats = stats;
    s.primal_events = primal_events;
    s.first_solution_cost = first_solution_cost;
    if (found) {
      s.cost = primal;
      s.transitions = best_path;
      s.transition_names = names(best_path);
    }
    if (exhausted) {
      if (found) {
        set_dual(*primal);
        s.status = Status::Optimal;
      } else if (params.primal_bound) {
        // Nothing better than the given bound exists.
        set_dual(*params.primal_bound);
        s.status = Status::NoSolutionFound;
      } else {
        set_dual(model.cost.infeasible());
        s.status = Status::Infeasible;
      }
    } else {
      s.status = found ? Status::FeasibleNotProved : Status::NoSolutionFound;
    }
    s.bound = dual;
    s.dual_events = dual_events;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Dominance registry keyed by the values of non-resource variables.
class StateRegistry {
 public:
  StateRegistry(const StateMetadata& meta, const CostStructure& cost) : meta_(meta), cost_(cost) {}

  State key(const State& s) const { return non_resource_key(meta_, s); }

  // Some registered state is at least as good and reached at least as cheaply.
  bool dominated(const State& key, const State& s, const Number& g) const {
    auto it = buckets_.find(key);
    if (it == buckets_.end()) return false;
    for (const SearchNode* n : it->second)
      if (cost_.better_or_equal(n->g, g) && weakly_dominates(meta_, n->state, s)) return true;
    return false;
  }

  // Evicts every node the new one dominates with a weakly better g, then
  // registers it. on_evict sees each evicted node.
  template <class F>
  void insert(const State& key, SearchNode* node, F&& on_evict) {
    auto& bucket = buckets_[key];
    std::size_t w = 0;
    for (std::size_t r = 0; r < bucket.size(); ++r) {
      SearchNode* n = bucket[r];
      if (cost_.better_or_equal(node->g, n->g) && weakly_dominates(meta_, node->state, n->state)) {
        n->removed = true;
        on_evict(n);
      } else {
        bucket[w++] = n;
      }
    }
    bucket.resize(w);
    bucket.push_back(node);
  }

  void clear() { buckets_.clear(); }

 private:
  const StateMetadata& meta_;
  const CostStructure& cost_;
  std::unordered_map<State, std::vector<SearchNode*>, StateHash> buckets_;
};

// Multiset of f-values of frontier nodes whose f beats the primal bound.
class BoundTracker {
 public:
  explicit BoundTracker(const CostStructure& c) : cost_(c) {}
  void add(SearchNode* n, const std::optional<Number>& primal) {
    if (primal && !cost_.better(n->f, *primal)) return;
    values_.insert(n->f);
    n->counted = true;
  }
  void remove(SearchNode* n, const std::optional<Number>& primal) {
    if (!n->counted) return;
    n->counted = false;
    // Entries at or beyond the primal bound were already purged by prune().
    if (primal && !cost_.better(n->f, *primal)) return;
    auto it = values_.find(n->f);
    if (it != values_.end()) values_.erase(it);
  }
  void prune(const Number& primal) {
    if (cost_.minimize())
      values_.erase(values_.lower_bound(primal), values_.end());
    else
      values_.erase(values_.begin(), values_.upper_bound(primal));
  }
  std::optional<Number> best() const {
    if (values_.empty()) return std::nullopt;
    return cost_.minimize() ? *values_.begin() : *values_.rbegin();
  }
  bool empty() const { return values_.empty(); }

 private:
  const CostStructure& cost_;
  std::multiset<Number> values_;
};

}  // namespace didp
