#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "didp/number.hpp"
#include "didp/set.hpp"
#include "didp/tables.hpp"

namespace didp {

enum class Sort { Element, Set, Numeric, Condition };

enum class Op {
  Constant,
  Variable,
  Table,
  If,
  // arithmetic (element and numeric)
  Add,
  Sub,
  Mul,
  Div,
  Mod,
  Min,
  Max,
  // numeric only
  Abs,
  Floor,
  Ceil,
  FromElement,
  Cardinality,
  Reduce,
  CostPlaceholder,
  // set
  SetAdd,
  SetRemove,
  Union,
  Intersection,
  Difference,
  Complement,
  UnionOver,
  // conditions
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  In,
  Subset,
  IsEmpty,
  Not,
  And,
  Or,
};

enum class Reduction { Sum, Product, Max, Min };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// One node of an expression tree. Which fields are meaningful depends on
// (sort, op); the typed wrappers below keep the combinations consistent.
struct Node {
  Sort sort = Sort::Numeric;
  Op op = Op::Constant;
  bool integer = true;        // numeric sort: result is an exact integer
  std::int64_t value = 0;     // element / boolean constants
  Number number;              // numeric constants
  Set set;                    // constant sets
  std::size_t index = 0;      // variable index within its kind, or table id
  Reduction reduction = Reduction::Sum;
  std::vector<NodePtr> children;
};

namespace detail {
inline NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }
inline Node blank(Sort sort, Op op) {
  Node n;
  n.sort = sort;
  n.op = op;
  return n;
}
}  // namespace detail

class ElementExpr {
 public:
  ElementExpr() = default;
  explicit ElementExpr(NodePtr n) : n_(std::move(n)) {}
  const Node& node() const { return *n_; }
  const NodePtr& ptr() const { return n_; }
  explicit operator bool() const { return static_cast<bool>(n_); }

 private:
  NodePtr n_;
};

class SetExpr {
 public:
  SetExpr() = default;
  explicit SetExpr(NodePtr n) : n_(std::move(n)) {}
  const Node& node() const { return *n_; }
  const NodePtr& ptr() const { return n_; }
  explicit operator bool() const { return static_cast<bool>(n_); }

 private:
  NodePtr n_;
};

class NumericExpr {
 public:
  NumericExpr() = default;
  explicit NumericExpr(NodePtr n) : n_(std::move(n)) {}
  const Node& node() const { return *n_; }
  const NodePtr& ptr() const { return n_; }
  bool is_integer() const { return n_->integer; }
  explicit operator bool() const { return static_cast<bool>(n_); }

 private:
  NodePtr n_;
};

class Condition {
 public:
  Condition() = default;
  explicit Condition(NodePtr n) : n_(std::move(n)) {}
  const Node& node() const { return *n_; }
  const NodePtr& ptr() const { return n_; }
  explicit operator bool() const { return static_cast<bool>(n_); }

 private:
  NodePtr n_;
};

// Factories. They do not check table arity or variable ranges; that is the
// job of model validation, so malformed trees can still be reported.
namespace ex {

// ---- element ----
inline ElementExpr element(std::int64_t v) {
  if (v < 0) throw ModelError("element constants must be nonnegative");
  Node n = detail::blank(Sort::Element, Op::Constant);
  n.value = v;
  return ElementExpr(detail::make(std::move(n)));
}
inline ElementExpr element_var(std::size_t index) {
  Node n = detail::blank(Sort::Element, Op::Variable);
  n.index = index;
  return ElementExpr(detail::make(std::move(n)));
}
inline ElementExpr element_table(std::size_t table, std::vector<ElementExpr> args) {
  Node n = detail::blank(Sort::Element, Op::Table);
  n.index = table;
  for (auto& a : args) n.children.push_back(a.ptr());
  return ElementExpr(detail::make(std::move(n)));
}
inline ElementExpr arith(Op op, const ElementExpr& a, const ElementExpr& b) {
  Node n = detail::blank(Sort::Element, op);
  n.children = {a.ptr(), b.ptr()};
  return ElementExpr(detail::make(std::move(n)));
}
inline ElementExpr if_then_else(const Condition& c, const ElementExpr& a, const ElementExpr& b) {
  Node n = detail::blank(Sort::Element, Op::If);
  n.children = {c.ptr(), a.ptr(), b.ptr()};
  return ElementExpr(detail::make(std::move(n)));
}

// ---- set ----
inline SetExpr set_const(Set s) {
  Node n = detail::blank(Sort::Set, Op::Constant);
  n.set = std::move(s);
  return SetExpr(detail::make(std::move(n)));
}
inline SetExpr set_var(std::size_t index) {
  Node n = detail::blank(Sort::Set, Op::Variable);
  n.index = index;
  return SetExpr(detail::make(std::move(n)));
}
inline SetExpr set_table(std::size_t table, std::vector<ElementExpr> args) {
  Node n = detail::blank(Sort::Set, Op::Table);
  n.index = table;
  for (auto& a : args) n.children.push_back(a.ptr());
  return SetExpr(detail::make(std::move(n)));
}
inline SetExpr set_element_op(Op op, const ElementExpr& e, const SetExpr& s) {
  Node n = detail::blank(Sort::Set, op);
  n.children = {e.ptr(), s.ptr()};
  return SetExpr(detail::make(std::move(n)));
}
inline SetExpr set_add(const ElementExpr& e, const SetExpr& s) { return set_element_op(Op::SetAdd, e, s); }
inline SetExpr set_remove(const ElementExpr& e, const SetExpr& s) { return set_element_op(Op::SetRemove, e, s); }
inline SetExpr set_binary(Op op, const SetExpr& a, const SetExpr& b) {
  Node n = detail::blank(Sort::Set, op);
  n.children = {a.ptr(), b.ptr()};
  return SetExpr(detail::make(std::move(n)));
}
inline SetExpr set_union(const SetExpr& a, const SetExpr& b) { return set_binary(Op::Union, a, b); }
inline SetExpr set_intersection(const SetExpr& a, const SetExpr& b) { return set_binary(Op::Intersection, a, b); }
inline SetExpr set_difference(const SetExpr& a, const SetExpr& b) { return set_binary(Op::Difference, a, b); }
inline SetExpr set_complement(const SetExpr& a) {
  Node n = detail::blank(Sort::Set, Op::Complement);
  n.children = {a.ptr()};
  return SetExpr(detail::make(std::move(n)));
}
// Union of the entries of a one-argument set table over an index set.
inline SetExpr union_over(std::size_t table, const SetExpr& index_set) {
  Node n = detail::blank(Sort::Set, Op::UnionOver);
  n.index = table;
  n.children = {index_set.ptr()};
  return SetExpr(detail::make(std::move(n)));
}
inline SetExpr if_then_else(const Condition& c, const SetExpr& a, const SetExpr& b) {
  Node n = detail::blank(Sort::Set, Op::If);
  n.children = {c.ptr(), a.ptr(), b.ptr()};
  return SetExpr(detail::make(std::move(n)));
}

// ---- numeric ----
inline NumericExpr number(Number v) {
  Node n = detail::blank(Sort::Numeric, Op::Constant);
  n.integer = v.is_integer() || v.is_infinite();
  n.number = v;
  return NumericExpr(detail::make(std::move(n)));
}
inline NumericExpr integer_var(std::size_t index) {
  Node n = detail::blank(Sort::Numeric, Op::Variable);
  n.index = index;
  n.integer = true;
  return NumericExpr(detail::make(std::move(n)));
}
inline NumericExpr real_var(std::size_t index) {
  Node n = detail::blank(Sort::Numeric, Op::Variable);
  n.index = index;
  n.integer = false;
  return NumericExpr(detail::make(std::move(n)));
}
inline NumericExpr from_element(const ElementExpr& e) {
  Node n = detail::blank(Sort::Numeric, Op::FromElement);
  n.children = {e.ptr()};
  return NumericExpr(detail::make(std::move(n)));
}
inline NumericExpr numeric_table(std::size_t table, bool integer, std::vector<ElementExpr> args) {
  Node n = detail::blank(Sort::Numeric, Op::Table);
  n.index = table;
  n.integer = integer;
  for (auto& a : args) n.children.push_back(a.ptr());
  return NumericExpr(detail::make(std::move(n)));
}
inline NumericExpr numeric_table(const TableRegistry& reg, std::size_t table, std::vector<ElementExpr> args) {
  return numeric_table(table, reg.get(table).type != ValueType::Continuous, std::move(args));
}
// Reduction of a numeric table over the Cartesian product of its arguments;
// each argument is either an element (fixed index) or a set (ranged index).
inline NumericExpr reduce(Reduction r, std::size_t table, bool integer, std::vector<NodePtr> args) {
  Node n = detail::blank(Sort::Numeric, Op::Reduce);
  n.reduction = r;
  n.index = table;
  n.integer = integer;
  n.children = std::move(args);
  return NumericExpr(detail::make(std::move(n)));
}
inline NumericExpr arith(Op op, const NumericExpr& a, const NumericExpr& b) {
  Node n = detail::blank(Sort::Numeric, op);
  n.integer = op != Op::Div && a.is_integer() && b.is_integer();
  n.children = {a.ptr(), b.ptr()};
  return NumericExpr(detail::make(std::move(n)));
}
inline NumericExpr unary(Op op, const NumericExpr& a) {
  Node n = detail::blank(Sort::Numeric, op);
  n.integer = (op == Op::Floor || op == Op::Ceil) ? true : a.is_integer();
  n.children = {a.ptr()};
  return NumericExpr(detail::make(std::move(n)));
}
inline NumericExpr cardinality(const SetExpr& s) {
  Node n = detail::blank(Sort::Numeric, Op::Cardinality);
  n.children = {s.ptr()};
  return NumericExpr(detail::make(std::move(n)));
}
inline NumericExpr if_then_else(const Condition& c, const NumericExpr& a, const NumericExpr& b) {
  Node n = detail::blank(Sort::Numeric, Op::If);
  n.integer = a.is_integer() && b.is_integer();
  n.children = {c.ptr(), a.ptr(), b.ptr()};
  return NumericExpr(detail::make(std::move(n)));
}
// Stand-in for the successor cost inside a cost expression; never evaluable.
inline NumericExpr cost_placeholder() {
  Node n = detail::blank(Sort::Numeric, Op::CostPlaceholder);
  return NumericExpr(detail::make(std::move(n)));
}

// ---- conditions ----
inline Condition boolean(bool b) {
  Node n = detail::blank(Sort::Condition, Op::Constant);
  n.value = b ? 1 : 0;
  return Condition(detail::make(std::move(n)));
}
inline Condition compare_nodes(Op op, NodePtr a, NodePtr b) {
  Node n = detail::blank(Sort::Condition, op);
  n.children = {std::move(a), std::move(b)};
  return Condition(detail::make(std::move(n)));
}
inline Condition compare(Op op, const ElementExpr& a, const ElementExpr& b) { return compare_nodes(op, a.ptr(), b.ptr()); }
inline Condition compare(Op op, const NumericExpr& a, const NumericExpr& b) { return compare_nodes(op, a.ptr(), b.ptr()); }
inline Condition compare(Op op, const SetExpr& a, const SetExpr& b) {
  if (op != Op::Eq && op != Op::Ne) throw ModelError("sets can only be compared for (in)equality");
  return compare_nodes(op, a.ptr(), b.ptr());
}
inline Condition is_in(const ElementExpr& e, const SetExpr& s) { return compare_nodes(Op::In, e.ptr(), s.ptr()); }
inline Condition is_subset(const SetExpr& a, const SetExpr& b) { return compare_nodes(Op::Subset, a.ptr(), b.ptr()); }
inline Condition is_empty(const SetExpr& s) {
  Node n = detail::blank(Sort::Condition, Op::IsEmpty);
  n.children = {s.ptr()};
  return Condition(detail::make(std::move(n)));
}
inline Condition negate(const Condition& c) {
  Node n = detail::blank(Sort::Condition, Op::Not);
  n.children = {c.ptr()};
  return Condition(detail::make(std::move(n)));
}
inline Condition junction(Op op, const std::vector<Condition>& cs) {
  Node n = detail::blank(Sort::Condition, op);
  for (auto& c : cs) n.children.push_back(c.ptr());
  return Condition(detail::make(std::move(n)));
}
inline Condition conj(const std::vector<Condition>& cs) { return junction(Op::And, cs); }
inline Condition disj(const std::vector<Condition>& cs) { return junction(Op::Or, cs); }
inline Condition bool_table(std::size_t table, std::vector<ElementExpr> args) {
  Node n = detail::blank(Sort::Condition, Op::Table);
  n.index = table;
  for (auto& a : args) n.children.push_back(a.ptr());
  return Condition(detail::make(std::move(n)));
}

}  // namespace ex

// True if the tree contains the successor-cost placeholder anywhere.
inline bool contains_cost_placeholder(const Node& n) {
  if (n.op == Op::CostPlaceholder) return true;
  for (const auto& c : n.children)
    if (contains_cost_placeholder(*c)) return true;
  return false;
}

}  // namespace didp
