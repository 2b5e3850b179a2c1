#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <utility>
#include <vector>

#include "didp/search/context.hpp"

namespace didp {

namespace detail {

struct BeamPassResult {
  bool complete = true;
  bool timed_out = false;
};

// One beam pass of width b. The incumbent, statistics and event logs live in
// ctx so that CABS can chain passes.
inline BeamPassResult beam_pass(SearchContext& ctx, std::size_t width) {
  const Model& m = ctx.model;
  const CostStructure& cost = m.cost;
  BeamPassResult res;
  if (!check_constraints(m, m.target)) return res;

  std::deque<SearchNode> arena;
  std::uint64_t next_id = 0;
  NodeOrder order{&cost};
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
  auto consider = [&](std::optional<Number>& acc, const Number& v) {
    if (!acc || cost.better(v, *acc)) acc = v;
  };

  std::vector<SearchNode*> open{make_node(m.target, cost.identity, nullptr, 0)};
  std::optional<Number> dropped_best;
  bool solved = false;

  while (!open.empty() && !solved) {
    StateRegistry layer(ctx.meta, cost);
    std::vector<SearchNode*> next;
    for (SearchNode* node : open) {
      if (ctx.time_up()) {
        res.timed_out = true;
        res.complete = false;
        return res;
      }
      if (auto base = base_cost(m, node->state)) {
        Number c = combine(cost, node->g, *base);
        if (ctx.beats_primal(c)) {
          ctx.new_solution(c, SearchContext::path_of(node));
          solved = true;
        }
        continue;
      }
      ++ctx.stats.expanded;
      for (std::size_t t : applicable_transitions(m, node->state, true)) {
        const Transition& tr = m.transitions[t];
        State succ = successor(m, tr, node->state);
        if (!check_constraints(m, succ)) continue;
        ++ctx.stats.generated;
        Number g = combine(cost, node->g, transition_weight(m, tr, node->state));
        State key = layer.key(succ);
        if (layer.dominated(key, succ, g)) continue;
        SearchNode* child = make_node(std::move(succ), g, node, t);
        if (ctx.has_bound && !ctx.beats_primal(child->f)) continue;
        layer.insert(key, child, [](SearchNode*) {});
        next.push_back(child);
      }
    }

    open.clear();
    for (SearchNode* n : next)
      if (!n->removed && (!ctx.has_bound || ctx.beats_primal(n->f))) open.push_back(n);
    if (open.size() > width) {
      std::sort(open.begin(), open.end(), [&](SearchNode* a, SearchNode* b) { return order.better(a, b); });
      for (std::size_t k = width; k < open.size(); ++k) consider(dropped_best, open[k]->f);
      open.resize(width);
      res.complete = false;
    }
  }
  if (!open.empty()) res.complete = false;

  // Everything not explored is covered by the dropped states and what is
  // left in the beam.
  std::optional<Number> frontier = dropped_best;
  for (SearchNode* n : open) consider(frontier, n->f);
  ctx.offer_dual(frontier);
  return res;
}

}  // namespace detail

// Single beam pass with width b and an optional input primal bound. The
// solution is present only if it improves on that bound.
inline std::pair<Solution, bool> beam_search(const Model& m, std::size_t width, const SolverParams& params) {
  SearchContext ctx(m, params);
  auto r = detail::beam_pass(ctx, std::max<std::size_t>(width, 1));
  return {ctx.finish(r.complete), r.complete};
}

// Complete anytime beam search: widths b0, b0*g, b0*g^2, ... until a pass
// finishes without losing anything.
inline Solution cabs(const Model& m, const SolverParams& params) {
  SearchContext ctx(m, params);
  if (ctx.has_bound && check_constraints(m, m.target))
    ctx.offer_dual(ctx.f_value(m.cost.identity, ctx.heuristic(m.target)));
  std::size_t width = std::max<std::size_t>(params.beam_initial_width, 1);
  std::size_t growth = std::max<std::size_t>(params.beam_growth, 2);
  while (true) {
    auto r = detail::beam_pass(ctx, width);
    if (r.complete) return ctx.finish(true);
    if (r.timed_out || ctx.time_up()) return ctx.finish(false);
    if (width <= SIZE_MAX / growth) width *= growth;
  }
}

}  // namespace didp
