#pragma once

#include <deque>
#include <vector>

#include "didp/search/context.hpp"
#include "didp/search/policies.hpp"

namespace didp {

// Heuristic search over the state transition graph with a pluggable open
// list. Maximization flips every comparison through CostStructure.
template <class Policy>
Solution generic_search(const Model& m, Policy& policy, const SolverParams& params) {
  SearchContext ctx(m, params);
  const CostStructure& cost = m.cost;

  if (!check_constraints(m, m.target)) return ctx.finish(true);

  std::deque<SearchNode> arena;
  StateRegistry registry(ctx.meta, cost);
  BoundTracker tracker(cost);
  std::uint64_t next_id = 0;

  auto make_node = [&](State s, Number g, SearchNode* parent, std::size_t t) -> SearchNode* {
    arena.emplace_back();
    SearchNode& n = arena.back();
    n.state = std::move(s);
    n.g = g;
    n.h = ctx.heuristic(n.state);
    n.f = ctx.f_value(n.g, n.h);
    n.parent = parent;
    n.transition = t;
    n.depth = parent ? parent->depth + 1 : 0;
    n.id = next_id++;
    return &n;
  };

  {
    SearchNode* root = make_node(m.target, cost.identity, nullptr, 0);
    registry.insert(registry.key(root->state), root, [](SearchNode*) {});
    if (ctx.has_bound) tracker.add(root, ctx.primal);
    policy.push(nullptr, {root});
  }

  // Dead: evicted, or (with a dual bound) no longer able to beat the incumbent.
  LivePredicate live = [&](const SearchNode* n) {
    return !n->removed && (!ctx.has_bound || ctx.beats_primal(n->f));
  };
  auto evict = [&](SearchNode* n) { tracker.remove(n, ctx.primal); };

  bool exhausted = false;
  std::vector<SearchNode*> children;
  while (true) {
    if (ctx.has_bound) {
      auto best = tracker.best();
      if (best) ctx.offer_dual(best);
    }
    if (ctx.time_up()) break;
    SearchNode* node = policy.pop(live);
    if (!node) {
      exhausted = true;
      break;
    }
    tracker.remove(node, ctx.primal);

    if (auto base = base_cost(m, node->state)) {
      Number c = combine(cost, node->g, *base);
      if (ctx.beats_primal(c)) {
        ctx.new_solution(c, SearchContext::path_of(node));
        if (ctx.has_bound) tracker.prune(c);
        policy.on_new_solution();
      }
      continue;
    }

    ++ctx.stats.expanded;
    children.clear();
    for (std::size_t t : applicable_transitions(m, node->state, true)) {
      const Transition& tr = m.transitions[t];
      State succ = successor(m, tr, node->state);
      if (!check_constraints(m, succ)) continue;
      ++ctx.stats.generated;
      Number g = combine(cost, node->g, transition_weight(m, tr, node->state));
      State key = registry.key(succ);
      if (registry.dominated(key, succ, g)) continue;
      SearchNode* child = make_node(std::move(succ), g, node, t);
      if (ctx.has_bound && !ctx.beats_primal(child->f)) {
        child->removed = true;
        continue;
      }
      registry.insert(key, child, evict);
      if (ctx.has_bound) tracker.add(child, ctx.primal);
      children.push_back(child);
    }
    if (!children.empty()) policy.push(node, children);
  }
  return ctx.finish(exhausted);
}

}  // namespace didp
