#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "didp/expr.hpp"
#include "didp/state.hpp"
#include "didp/tables.hpp"

namespace didp {

namespace detail {

inline std::int64_t eval_element_node(const Node& n, const State& s, const TableRegistry& t);
inline Set eval_set_node(const Node& n, const State& s, const TableRegistry& t);
inline Number eval_numeric_node(const Node& n, const State& s, const TableRegistry& t);
inline bool eval_condition_node(const Node& n, const State& s, const TableRegistry& t);

inline std::vector<std::int64_t> eval_indices(const Node& n, const State& s, const TableRegistry& t) {
  std::vector<std::int64_t> idx;
  idx.reserve(n.children.size());
  for (const auto& c : n.children) idx.push_back(eval_element_node(*c, s, t));
  return idx;
}

inline std::int64_t checked_element(std::int64_t v) {
  if (v < 0) throw EvalError("element expression evaluated to negative value " + std::to_string(v));
  return v;
}

inline std::int64_t eval_element_node(const Node& n, const State& s, const TableRegistry& t) {
  switch (n.op) {
    case Op::Constant: return n.value;
    case Op::Variable:
      if (n.index >= s.elements.size()) throw EvalError("unknown element variable");
      return s.elements[n.index];
    case Op::Table: {
      const Table& tab = t.get(n.index);
      if (tab.type != ValueType::Element) throw EvalError("table " + tab.name + " is not element-valued");
      auto idx = eval_indices(n, s, t);
      return tab.ints[tab.offset(idx)];
    }
    case Op::If:
      return eval_condition_node(*n.children[0], s, t) ? eval_element_node(*n.children[1], s, t)
                                                       : eval_element_node(*n.children[2], s, t);
    default: break;
  }
  std::int64_t a = eval_element_node(*n.children[0], s, t);
  std::int64_t b = eval_element_node(*n.children[1], s, t);
  std::int64_t r = 0;
  switch (n.op) {
    case Op::Add:
      if (__builtin_add_overflow(a, b, &r)) throw EvalError("integer overflow in element addition");
      return r;
    case Op::Sub: return checked_element(a - b);
    case Op::Mul:
      if (__builtin_mul_overflow(a, b, &r)) throw EvalError("integer overflow in element multiplication");
      return r;
    case Op::Div:
      if (b == 0) throw EvalError("division by zero");
      return a / b;
    case Op::Mod:
      if (b == 0) throw EvalError("modulo by zero");
      return a % b;
    case Op::Min: return std::min(a, b);
    case Op::Max: return std::max(a, b);
    default: throw EvalError("invalid element operation");
  }
}

inline Set eval_set_node(const Node& n, const State& s, const TableRegistry& t) {
  switch (n.op) {
    case Op::Constant: return n.set;
    case Op::Variable:
      if (n.index >= s.sets.size()) throw EvalError("unknown set variable");
      return s.sets[n.index];
    case Op::Table: {
      const Table& tab = t.get(n.index);
      if (tab.type != ValueType::Set) throw EvalError("table " + tab.name + " is not set-valued");
      auto idx = eval_indices(n, s, t);
      return tab.sets[tab.offset(idx)];
    }
    case Op::If:
      return eval_condition_node(*n.children[0], s, t) ? eval_set_node(*n.children[1], s, t)
                                                       : eval_set_node(*n.children[2], s, t);
    case Op::SetAdd: {
      Set r = eval_set_node(*n.children[1], s, t);
      r.insert(eval_element_node(*n.children[0], s, t));
      return r;
    }
    case Op::SetRemove: {
      Set r = eval_set_node(*n.children[1], s, t);
      std::int64_t e = eval_element_node(*n.children[0], s, t);
      if (r.contains(e)) r.erase(e);
      return r;
    }
    case Op::Union: return eval_set_node(*n.children[0], s, t) | eval_set_node(*n.children[1], s, t);
    case Op::Intersection: return eval_set_node(*n.children[0], s, t) & eval_set_node(*n.children[1], s, t);
    case Op::Difference: return eval_set_node(*n.children[0], s, t) - eval_set_node(*n.children[1], s, t);
    case Op::Complement: return eval_set_node(*n.children[0], s, t).complement();
    case Op::UnionOver: {
      const Table& tab = t.get(n.index);
      if (tab.type != ValueType::Set || tab.arity() != 1)
        throw EvalError("table " + tab.name + " is not a one-argument set table");
      Set r(tab.set_capacity);
      for (auto i : eval_set_node(*n.children[0], s, t).members()) r |= tab.sets[tab.offset(&i, 1)];
      return r;
    }
    default: throw EvalError("invalid set operation");
  }
}

inline Number reduce_table(const Node& n, const State& s, const TableRegistry& t) {
  const Table& tab = t.get(n.index);
  if (tab.type == ValueType::Set || tab.type == ValueType::Bool)
    throw EvalError("table " + tab.name + " cannot be reduced numerically");
  if (n.children.size() != tab.arity())
    throw EvalError("table " + tab.name + " expects " + std::to_string(tab.arity()) + " indices");
  // Candidate indices per argument position.
  std::vector<std::vector<std::int64_t>> ranges;
  for (const auto& c : n.children) {
    if (c->sort == Sort::Set)
      ranges.push_back(eval_set_node(*c, s, t).members());
    else
      ranges.push_back({eval_element_node(*c, s, t)});
  }
  bool any_empty = false;
  for (auto& r : ranges) any_empty = any_empty || r.empty();
  bool integer = tab.type != ValueType::Continuous;
  if (any_empty) {
    switch (n.reduction) {
      case Reduction::Sum: return integer ? Number(std::int64_t{0}) : Number(0.0);
      case Reduction::Product: return integer ? Number(std::int64_t{1}) : Number(1.0);
      default: throw EvalError("max/min reduction of table " + tab.name + " over an empty set");
    }
  }
  std::vector<std::size_t> pos(ranges.size(), 0);
  std::vector<std::int64_t> idx(ranges.size());
  bool first = true;
  Number acc;
  while (true) {
    for (std::size_t k = 0; k < ranges.size(); ++k) idx[k] = ranges[k][pos[k]];
    Number v = tab.number_at(tab.offset(idx));
    if (first) {
      acc = v;
      first = false;
    } else {
      switch (n.reduction) {
        case Reduction::Sum: acc = acc + v; break;
        case Reduction::Product: acc = acc * v; break;
        case Reduction::Max: acc = max(acc, v); break;
        case Reduction::Min: acc = min(acc, v); break;
      }
    }
    std::size_t k = ranges.size();
    while (k > 0) {
      --k;
      if (++pos[k] < ranges[k].size()) break;
      pos[k] = 0;
      if (k == 0) return acc;
    }
    if (ranges.empty()) return acc;
  }
}

inline Number round_to_integer(double d, bool up) {
  double r = up ? std::ceil(d) : std::floor(d);
  if (std::isinf(r)) return Number(r);
  if (r < -9.2e18 || r > 9.2e18) throw EvalError("rounded value out of integer range");
  return Number(static_cast<std::int64_t>(r));
}

inline Number eval_numeric_node(const Node& n, const State& s, const TableRegistry& t) {
  switch (n.op) {
    case Op::Constant: return n.number;
    case Op::Variable:
      if (n.integer) {
        if (n.index >= s.integers.size()) throw EvalError("unknown integer variable");
        return Number(s.integers[n.index]);
      }
      if (n.index >= s.reals.size()) throw EvalError("unknown continuous variable");
      return Number(s.reals[n.index]);
    case Op::FromElement: return Number(eval_element_node(*n.children[0], s, t));
    case Op::Table: {
      const Table& tab = t.get(n.index);
      if (tab.type == ValueType::Set || tab.type == ValueType::Bool)
        throw EvalError("table " + tab.name + " is not numeric");
      auto idx = eval_indices(n, s, t);
      return tab.number_at(tab.offset(idx));
    }
    case Op::Reduce: return reduce_table(n, s, t);
    case Op::Cardinality: return Number(static_cast<std::int64_t>(eval_set_node(*n.children[0], s, t).size()));
    case Op::If:
      return eval_condition_node(*n.children[0], s, t) ? eval_numeric_node(*n.children[1], s, t)
                                                       : eval_numeric_node(*n.children[2], s, t);
    case Op::CostPlaceholder: throw EvalError("the successor cost placeholder cannot be evaluated");
    case Op::Abs: {
      Number v = eval_numeric_node(*n.children[0], s, t);
      return v < Number(0) ? -v : v;
    }
    case Op::Floor:
    case Op::Ceil: {
      bool up = n.op == Op::Ceil;
      const Node& c = *n.children[0];
      // Exact quotient of two integers.
      if (c.op == Op::Div && c.children[0]->integer && c.children[1]->integer) {
        Number a = eval_numeric_node(*c.children[0], s, t);
        Number b = eval_numeric_node(*c.children[1], s, t);
        if (a.is_integer() && b.is_integer())
          return Number(up ? ceil_div(a.as_int(), b.as_int()) : floor_div(a.as_int(), b.as_int()));
      }
      Number v = eval_numeric_node(c, s, t);
      if (v.is_integer()) return v;
      return round_to_integer(v.as_double(), up);
    }
    default: break;
  }
  Number a = eval_numeric_node(*n.children[0], s, t);
  Number b = eval_numeric_node(*n.children[1], s, t);
  switch (n.op) {
    case Op::Add: return a + b;
    case Op::Sub: return a - b;
    case Op::Mul: return a * b;
    case Op::Div: return a / b;
    case Op::Min: return min(a, b);
    case Op::Max: return max(a, b);
    default: throw EvalError("invalid numeric operation");
  }
}

inline bool compare_values(Op op, const Number& a, const Number& b) {
  switch (op) {
    case Op::Eq: return a == b;
    case Op::Ne: return !(a == b);
    case Op::Lt: return a < b;
    case Op::Le: return a <= b;
    case Op::Gt: return a > b;
    case Op::Ge: return a >= b;
    default: throw EvalError("invalid comparison");
  }
}

inline bool eval_condition_node(const Node& n, const State& s, const TableRegistry& t) {
  switch (n.op) {
    case Op::Constant: return n.value != 0;
    case Op::Table: {
      const Table& tab = t.get(n.index);
      if (tab.type != ValueType::Bool) throw EvalError("table " + tab.name + " is not boolean");
      auto idx = eval_indices(n, s, t);
      return tab.ints[tab.offset(idx)] != 0;
    }
    case Op::Eq:
    case Op::Ne:
    case Op::Lt:
    case Op::Le:
    case Op::Gt:
    case Op::Ge: {
      const Node& a = *n.children[0];
      const Node& b = *n.children[1];
      if (a.sort == Sort::Set || b.sort == Sort::Set) {
        bool eq = eval_set_node(a, s, t) == eval_set_node(b, s, t);
        return n.op == Op::Eq ? eq : !eq;
      }
      auto value = [&](const Node& x) {
        return x.sort == Sort::Element ? Number(eval_element_node(x, s, t)) : eval_numeric_node(x, s, t);
      };
      return compare_values(n.op, value(a), value(b));
    }
    case Op::In:
      return eval_set_node(*n.children[1], s, t).contains(eval_element_node(*n.children[0], s, t));
    case Op::Subset: return eval_set_node(*n.children[0], s, t).is_subset_of(eval_set_node(*n.children[1], s, t));
    case Op::IsEmpty: return eval_set_node(*n.children[0], s, t).empty();
    case Op::Not: return !eval_condition_node(*n.children[0], s, t);
    case Op::And:
      for (const auto& c : n.children)
        if (!eval_condition_node(*c, s, t)) return false;
      return true;
    case Op::Or:
      for (const auto& c : n.children)
        if (eval_condition_node(*c, s, t)) return true;
      return false;
    default: throw EvalError("invalid condition");
  }
}

}  // namespace detail

inline std::int64_t eval_element(const ElementExpr& e, const State& s, const TableRegistry& t) {
  return detail::eval_element_node(e.node(), s, t);
}
inline Set eval_set(const SetExpr& e, const State& s, const TableRegistry& t) {
  return detail::eval_set_node(e.node(), s, t);
}
inline Number eval_numeric(const NumericExpr& e, const State& s, const TableRegistry& t) {
  return detail::eval_numeric_node(e.node(), s, t);
}
inline bool eval_condition(const Condition& c, const State& s, const TableRegistry& t) {
  return detail::eval_condition_node(c.node(), s, t);
}

}  // namespace didp
