#pragma once

#include <string>

#include "didp/expr.hpp"
#include "didp/model.hpp"

namespace didp::io {

// Renders expression trees back into the s-expression grammar accepted by
// ExprParser. Parameters no longer exist after grounding, so the output
// only mentions variables, tables and constants.
class ExprPrinter {
 public:
  ExprPrinter(const StateMetadata& meta, const TableRegistry& tables) : meta_(meta), tables_(tables) {}

  std::string print(const Node& n) const {
    switch (n.sort) {
      case Sort::Element: return element(n);
      case Sort::Set: return set(n);
      case Sort::Numeric: return numeric(n);
      case Sort::Condition: return condition(n);
    }
    return "?";
  }
  std::string print(const ElementExpr& e) const { return print(e.node()); }
  std::string print(const SetExpr& e) const { return print(e.node()); }
  std::string print(const NumericExpr& e) const { return print(e.node()); }
  std::string print(const Condition& e) const { return print(e.node()); }

 private:
  std::string list(const std::string& head, const Node& n, std::size_t from = 0) const {
    std::string s = "(" + head;
    for (std::size_t k = from; k < n.children.size(); ++k) s += " " + print(*n.children[k]);
    return s + ")";
  }
  std::string table_access(const Node& n) const {
    const Table& t = tables_.get(n.index);
    if (n.children.empty()) return t.name;
    return list(t.name, n);
  }
  static const char* arith(Op op) {
    switch (op) {
      case Op::Add: return "+";
      case Op::Sub: return "-";
      case Op::Mul: return "*";
      case Op::Div: return "/";
      case Op::Mod: return "%";
      case Op::Min: return "min";
      case Op::Max: return "max";
      default: throw ModelError("not an arithmetic operator");
    }
  }

  std::string element(const Node& n) const {
    switch (n.op) {
      case Op::Constant: return std::to_string(n.value);
      case Op::Variable: return meta_.variable(VarKind::Element, n.index).name;
      case Op::Table: return table_access(n);
      case Op::If: return list("if", n);
      default: return list(arith(n.op), n);
    }
  }

  std::string set(const Node& n) const {
    switch (n.op) {
      case Op::Constant: {
        std::string s = "(set " + object_with_count(n.set.capacity());
        for (auto m : n.set.members()) s += " " + std::to_string(m);
        return s + ")";
      }
      case Op::Variable: return meta_.variable(VarKind::Set, n.index).name;
      case Op::Table: return table_access(n);
      case Op::If: return list("if", n);
      case Op::SetAdd: return list("add", n);
      case Op::SetRemove: return list("remove", n);
      case Op::Union: return list("union", n);
      case Op::Intersection: return list("intersection", n);
      case Op::Difference: return list("difference", n);
      case Op::Complement: return list("complement", n);
      case Op::UnionOver: return "(union_all " + tables_.get(n.index).name + " " + print(*n.children[0]) + ")";
      default: throw ModelError("cannot print set operation");
    }
  }

  std::string numeric(const Node& n) const {
    switch (n.op) {
      case Op::Constant: return n.number.to_string();
      case Op::Variable:
        return meta_.variable(n.integer ? VarKind::Integer : VarKind::Continuous, n.index).name;
      case Op::Table: return table_access(n);
      case Op::FromElement: return print(*n.children[0]);
      case Op::If: return list("if", n);
      case Op::Abs: return list("abs", n);
      case Op::Floor: return list("floor", n);
      case Op::Ceil: return list("ceil", n);
      case Op::Cardinality: return list("cardinality", n);
      case Op::CostPlaceholder: return "cost";
      case Op::Reduce: {
        static const char* names[] = {"sum", "product", "max", "min"};
        return list(std::string(names[static_cast<int>(n.reduction)]) + " " + tables_.get(n.index).name, n);
      }
      default: return list(arith(n.op), n);
    }
  }

  std::string condition(const Node& n) const {
    switch (n.op) {
      case Op::Constant: return n.value ? "true" : "false";
      case Op::Table: return table_access(n);
      case Op::Eq: return list("=", n);
      case Op::Ne: return list("!=", n);
      case Op::Lt: return list("<", n);
      case Op::Le: return list("<=", n);
      case Op::Gt: return list(">", n);
      case Op::Ge: return list(">=", n);
      case Op::In: return list("is_in", n);
      case Op::Subset: return list("is_subset", n);
      case Op::IsEmpty: return list("is_empty", n);
      case Op::Not: return list("not", n);
      case Op::And: return n.children.empty() ? "true" : list("and", n);
      case Op::Or: return n.children.empty() ? "false" : list("or", n);
      default: throw ModelError("cannot print condition");
    }
  }

  std::string object_with_count(std::size_t count) const {
    for (const auto& o : meta_.objects())
      if (o.count == count) return o.name;
    throw ModelError("no object type with " + std::to_string(count) + " objects for a constant set");
  }

  const StateMetadata& meta_;
  const TableRegistry& tables_;
};

}  // namespace didp::io
