#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "didp/search/context.hpp"

namespace didp {

// Open-list policies for the generic engine. Each one provides
//   push(parent, children)  insert the root (parent == nullptr) or successors
//   pop(live)               next node to expand, skipping nodes live() rejects
//   on_new_solution()       reaction to an improved incumbent
// Dead nodes (evicted or pruned by bound) are discarded lazily.

using NodeHeap = std::priority_queue<SearchNode*, std::vector<SearchNode*>, NodeOrder>;
using LivePredicate = std::function<bool(const SearchNode*)>;

namespace detail {

inline bool clean(NodeHeap& h, const LivePredicate& live) {
  while (!h.empty() && !live(h.top())) h.pop();
  return !h.empty();
}

inline bool clean(std::vector<SearchNode*>& stack, const LivePredicate& live) {
  while (!stack.empty() && !live(stack.back())) stack.pop_back();
  return !stack.empty();
}

inline void sort_best_first(std::vector<SearchNode*>& v, const NodeOrder& order) {
  std::stable_sort(v.begin(), v.end(), [&](SearchNode* a, SearchNode* b) { return order.better(a, b); });
}

// Push so that the best node ends on top of the stack.
inline void push_sorted(std::vector<SearchNode*>& stack, std::vector<SearchNode*> nodes, const NodeOrder& order) {
  sort_best_first(nodes, order);
  for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) stack.push_back(*it);
}

}  // namespace detail

// Best-first on f (A*-like).
class CaasdyPolicy {
 public:
  explicit CaasdyPolicy(NodeOrder order) : open_(order) {}
  void push(SearchNode*, const std::vector<SearchNode*>& nodes) {
    for (auto* n : nodes) open_.push(n);
  }
  SearchNode* pop(const LivePredicate& live) {
    if (!detail::clean(open_, live)) return nullptr;
    SearchNode* n = open_.top();
    open_.pop();
    return n;
  }
  void on_new_solution() {}

 private:
  NodeHeap open_;
};

// Depth-first with successors ordered by f.
class DfbnbPolicy {
 public:
  explicit DfbnbPolicy(NodeOrder order) : order_(order) {}
  void push(SearchNode*, const std::vector<SearchNode*>& nodes) { detail::push_sorted(stack_, nodes, order_); }
  SearchNode* pop(const LivePredicate& live) {
    if (!detail::clean(stack_, live)) return nullptr;
    SearchNode* n = stack_.back();
    stack_.pop_back();
    return n;
  }
  void on_new_solution() {}

 private:
  NodeOrder order_;
  std::vector<SearchNode*> stack_;
};

// Depth layers visited cyclically. With budget == 1 and no growth this is
// CBFS; with a growing budget it is ACPS.
class LayeredPolicy {
 public:
  LayeredPolicy(NodeOrder order, std::size_t budget, std::size_t growth)
      : order_(order), budget_(budget), growth_(growth) {}

  void push(SearchNode*, const std::vector<SearchNode*>& nodes) {
    for (auto* n : nodes) {
      while (layers_.size() <= n->depth) layers_.emplace_back(order_);
      layers_[n->depth].push(n);
    }
  }

  SearchNode* pop(const LivePredicate& live) {
    if (reset_pending_) {
      reset();
      reset_pending_ = false;
    }
    while (true) {
      if (!any_live_from(i_, live)) {
        if (i_ == 0) return nullptr;
        reset();
        continue;
      }
      if (i_ < layers_.size() && detail::clean(layers_[i_], live)) {
        SearchNode* n = layers_[i_].top();
        layers_[i_].pop();
        if (++taken_ >= budget_) advance();
        return n;
      }
      advance();
    }
  }

  void on_new_solution() { reset_pending_ = true; }
  std::size_t budget() const { return budget_; }

 private:
  bool any_live_from(std::size_t i, const LivePredicate& live) {
    for (std::size_t j = i; j < layers_.size(); ++j)
      if (detail::clean(layers_[j], live)) return true;
    return false;
  }
  void advance() {
    ++i_;
    taken_ = 0;
  }
  void reset() {
    i_ = 0;
    taken_ = 0;
    budget_ += growth_;
  }

  NodeOrder order_;
  std::size_t budget_;
  std::size_t growth_;
  std::vector<NodeHeap> layers_;
  std::size_t i_ = 0;
  std::size_t taken_ = 0;
  bool reset_pending_ = false;
};

inline LayeredPolicy make_cbfs_policy(NodeOrder order) { return LayeredPolicy(order, 1, 0); }
inline LayeredPolicy make_acps_policy(NodeOrder order, std::size_t b0, std::size_t step) {
  return LayeredPolicy(order, b0, step);
}

// Progressive pack search: expand the whole pack O_b; the best b successors
// form the next pack O_c, the rest are suspended in O_s.
class AppsPolicy {
 public:
  AppsPolicy(NodeOrder order, std::size_t b0, std::size_t step, std::optional<std::size_t> max_width)
      : order_(order), b_(b0), step_(step), max_(max_width), pack_(order), suspended_(order) {}

  void push(SearchNode* parent, const std::vector<SearchNode*>& nodes) {
    if (!parent) {
      for (auto* n : nodes) pack_.push(n);
      return;
    }
    for (auto* n : nodes) {
      next_.push_back(n);
      if (next_.size() > b_) {
        // Move the worst of the candidate pack to the suspend list.
        auto worst = std::min_element(next_.begin(), next_.end(),
                                      [&](SearchNode* a, SearchNode* c) { return order_.better(c, a); });
        suspended_.push(*worst);
        next_.erase(worst);
      }
    }
  }

  SearchNode* pop(const LivePredicate& live) {
    while (true) {
      if (detail::clean(pack_, live)) {
        SearchNode* n = pack_.top();
        pack_.pop();
        return n;
      }
      std::erase_if(next_, [&](SearchNode* n) { return !live(n); });
      if (!next_.empty()) {
        for (auto* n : next_) pack_.push(n);
        next_.clear();
        continue;
      }
      if (!detail::clean(suspended_, live)) return nullptr;
      for (std::size_t k = 0; k < b_ && detail::clean(suspended_, live); ++k) {
        pack_.push(suspended_.top());
        suspended_.pop();
      }
      if (!max_ || b_ < *max_) b_ += step_;
    }
  }

  void on_new_solution() {}

 private:
  NodeOrder order_;
  std::size_t b_;
  std::size_t step_;
  std::optional<std::size_t> max_;
  NodeHeap pack_;
  std::vector<SearchNode*> next_;
  NodeHeap suspended_;
};

// Discrepancy-bounded depth-first search.
class DbdfsPolicy {
 public:
  DbdfsPolicy(NodeOrder order, std::size_t k) : order_(order), k_(k) {}

  void push(SearchNode* parent, const std::vector<SearchNode*>& nodes) {
    if (!parent) {
      for (auto* n : nodes) current_.push_back(n);
      return;
    }
    std::vector<SearchNode*> sorted = nodes;
    detail::sort_best_first(sorted, order_);
    std::vector<SearchNode*> in_range, deferred;
    for (std::size_t r = 0; r < sorted.size(); ++r) {
      SearchNode* n = sorted[r];
      n->discrepancy = parent->discrepancy + (r == 0 ? 0 : 1);
      if (n->discrepancy <= i_ * k_ - 1)
        in_range.push_back(n);
      else
        deferred.push_back(n);
    }
    detail::push_sorted(current_, in_range, order_);
    detail::push_sorted(later_, deferred, order_);
  }

  SearchNode* pop(const LivePredicate& live) {
    while (true) {
      if (detail::clean(current_, live)) {
        SearchNode* n = current_.back();
        current_.pop_back();
        return n;
      }
      if (!detail::clean(later_, live)) return nullptr;
      std::swap(current_, later_);
      ++i_;
    }
  }

  void on_new_solution() {}

 private:
  NodeOrder order_;
  std::size_t k_;
  std::size_t i_ = 1;
  std::vector<SearchNode*> current_;
  std::vector<SearchNode*> later_;
};

}  // namespace didp
