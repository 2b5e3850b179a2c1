#pragma once

#include <string>
#include <vector>

#include "didp/model.hpp"

namespace didp {

enum class Severity { Error, Warning, Info };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string message;
};

struct ValidateOptions {
  bool claims_first_solution_optimal = false;  // caller relies on CAASDy's first solution being optimal
  bool beam_requested = false;
};

inline bool has_errors(const std::vector<Diagnostic>& ds) {
  for (const auto& d : ds)
    if (d.severity == Severity::Error) return true;
  return false;
}

namespace detail {

class Validator {
 public:
  explicit Validator(const Model& m) : m_(m) {}

  void node(const Node& n, const std::string& where) {
    switch (n.op) {
      case Op::Variable: variable(n, where); break;
      case Op::Table: table(n, where, n.children.size()); break;
      case Op::Reduce: {
        if (table(n, where, n.children.size())) {
          auto type = m_.tables.get(n.index).type;
          if (type == ValueType::Set || type == ValueType::Bool)
            error(where + ": table " + m_.tables.get(n.index).name + " cannot be reduced numerically");
        }
        break;
      }
      case Op::UnionOver:
        if (table(n, where, 1) && m_.tables.get(n.index).type != ValueType::Set)
          error(where + ": table " + m_.tables.get(n.index).name + " is not set-valued");
        break;
      case Op::CostPlaceholder: error(where + ": cost term must be w (+) cost; the successor cost appears inside w"); break;
      default: break;
    }
    for (const auto& c : n.children) node(*c, where);
  }

  void error(std::string msg) { out.push_back({Severity::Error, std::move(msg)}); }
  void warning(std::string msg) { out.push_back({Severity::Warning, std::move(msg)}); }
  void info(std::string msg) { out.push_back({Severity::Info, std::move(msg)}); }

  std::vector<Diagnostic> out;

 private:
  void variable(const Node& n, const std::string& where) {
    VarKind kind = n.sort == Sort::Element ? VarKind::Element
                   : n.sort == Sort::Set   ? VarKind::Set
                   : n.integer             ? VarKind::Integer
                                           : VarKind::Continuous;
    if (n.index >= m_.meta.count(kind)) error(where + ": undeclared variable (index " + std::to_string(n.index) + ")");
  }

  bool table(const Node& n, const std::string& where, std::size_t nargs) {
    if (n.index >= m_.tables.size()) {
      error(where + ": undeclared table (id " + std::to_string(n.index) + ")");
      return false;
    }
    const Table& t = m_.tables.get(n.index);
    if (t.arity() != nargs) {
      error(where + ": table " + t.name + " has arity " + std::to_string(t.arity()) + " but is accessed with " +
            std::to_string(nargs) + " index(es)");
      return false;
    }
    if (n.op == Op::Table) {
      bool ok = (n.sort == Sort::Element && t.type == ValueType::Element) ||
                (n.sort == Sort::Set && t.type == ValueType::Set) ||
                (n.sort == Sort::Condition && t.type == ValueType::Bool) ||
                (n.sort == Sort::Numeric && t.type != ValueType::Set && t.type != ValueType::Bool);
      if (!ok) error(where + ": table " + t.name + " of type " + to_string(t.type) + " used in the wrong context");
    }
    return true;
  }

  const Model& m_;
};

}  // namespace detail

inline std::vector<Diagnostic> validate(const Model& m, const ValidateOptions& opt = {}) {
  detail::Validator v(m);
  const auto& meta = m.meta;

  if (m.target.sets.size() != meta.count(VarKind::Set) || m.target.elements.size() != meta.count(VarKind::Element) ||
      m.target.integers.size() != meta.count(VarKind::Integer) ||
      m.target.reals.size() != meta.count(VarKind::Continuous)) {
    v.error("target state does not match the declared variables");
  } else {
    for (const auto& d : meta.variables())
      if (d.kind == VarKind::Set && m.target.sets[d.index].capacity() != meta.objects()[*d.object].count)
        v.error("target value of " + d.name + " has the wrong universe size");
  }

  bool integer_cost = m.cost.type == CostType::Integer;
  auto cost_expr = [&](const NumericExpr& e, const std::string& where) {
    if (!e) {
      v.error(where + ": missing expression");
      return;
    }
    v.node(e.node(), where);
    if (integer_cost && !e.is_integer()) v.error(where + ": continuous expression in an integer cost model");
  };

  bool seen_plain = false;
  for (const auto& t : m.transitions) {
    std::string where = "transition '" + t.name + "'";
    for (std::size_t k = 0; k < t.preconditions.size(); ++k)
      v.node(t.preconditions[k].node(), where + " precondition " + std::to_string(k));
    if (t.weight && t.weight.node().op == Op::CostPlaceholder)
      v.error(where + ": cost term must be w (+) cost, not the successor cost alone");
    else
      cost_expr(t.weight, where + " cost");
    for (const auto& [i, e] : t.set_effects) {
      if (i >= meta.count(VarKind::Set)) v.error(where + ": effect on undeclared set variable");
      v.node(e.node(), where + " effect");
    }
    for (const auto& [i, e] : t.element_effects) {
      if (i >= meta.count(VarKind::Element)) v.error(where + ": effect on undeclared element variable");
      v.node(e.node(), where + " effect");
    }
    for (const auto& [i, e] : t.integer_effects) {
      if (i >= meta.count(VarKind::Integer)) v.error(where + ": effect on undeclared integer variable");
      v.node(e.node(), where + " effect");
      if (!e.is_integer()) v.error(where + ": continuous expression assigned to an integer variable");
    }
    for (const auto& [i, e] : t.real_effects) {
      if (i >= meta.count(VarKind::Continuous)) v.error(where + ": effect on undeclared continuous variable");
      v.node(e.node(), where + " effect");
    }
    if (t.forced && seen_plain) v.info(where + ": forced transition declared after non-forced ones");
    if (!t.forced) seen_plain = true;
  }
  for (std::size_t k = 0; k < m.base_cases.size(); ++k) {
    std::string where = "base case " + std::to_string(k);
    for (const auto& c : m.base_cases[k].conditions) v.node(c.node(), where);
    cost_expr(m.base_cases[k].cost, where + " cost");
  }
  for (std::size_t k = 0; k < m.constraints.size(); ++k)
    v.node(m.constraints[k].node(), "state constraint " + std::to_string(k));
  for (std::size_t k = 0; k < m.dual_bounds.size(); ++k) cost_expr(m.dual_bounds[k], "dual bound " + std::to_string(k));

  if (opt.claims_first_solution_optimal && !m.cost.minimize())
    v.error("the first solution of CAASDy is only guaranteed optimal for minimization");
  if (opt.beam_requested && !m.acyclic) v.error("beam search requires a model declared acyclic");
  return v.out;
}

}  // namespace didp
