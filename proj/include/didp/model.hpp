#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "didp/errors.hpp"
#include "didp/expr.hpp"
#include "didp/number.hpp"
#include "didp/state.hpp"
#include "didp/tables.hpp"

namespace didp {

enum class VarKind { Element, Set, Integer, Continuous };
enum class Preference { None, Less, More };

struct ObjectType {
  std::string name;
  std::size_t count = 0;
};

struct VariableDecl {
  std::string name;
  VarKind kind = VarKind::Element;
  std::optional<std::size_t> object;  // object type id (element and set kinds)
  Preference preference = Preference::None;
  std::size_t index = 0;  // position among variables of the same kind
};

class StateMetadata {
 public:
  std::size_t add_object_type(const std::string& name, std::size_t count) {
    for (const auto& o : objects_)
      if (o.name == name) throw ModelError("duplicate object type: " + name);
    objects_.push_back({name, count});
    return objects_.size() - 1;
  }

  std::size_t add_variable(const std::string& name, VarKind kind, std::optional<std::size_t> object = std::nullopt,
                           Preference pref = Preference::None) {
    if (by_name_.count(name)) throw ModelError("duplicate variable name: " + name);
    if ((kind == VarKind::Element || kind == VarKind::Set) && !object)
      throw ModelError("variable " + name + " needs an object type");
    if (object && *object >= objects_.size()) throw ModelError("variable " + name + " refers to unknown object type");
    if (kind == VarKind::Set && pref != Preference::None)
      throw ModelError("set variable " + name + " cannot be a resource variable");
    VariableDecl d{name, kind, object, pref, count(kind)};
    by_name_[name] = vars_.size();
    vars_.push_back(d);
    return d.index;
  }

  std::size_t count(VarKind kind) const {
    std::size_t n = 0;
    for (const auto& v : vars_) n += v.kind == kind;
    return n;
  }

  const std::vector<VariableDecl>& variables() const { return vars_; }
  const std::vector<ObjectType>& objects() const { return objects_; }

  const VariableDecl* find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : &vars_[it->second];
  }
  const VariableDecl& variable(VarKind kind, std::size_t index) const {
    for (const auto& v : vars_)
      if (v.kind == kind && v.index == index) return v;
    throw ModelError("no variable with that kind and index");
  }
  std::optional<std::size_t> find_object(const std::string& name) const {
    for (std::size_t k = 0; k < objects_.size(); ++k)
      if (objects_[k].name == name) return k;
    return std::nullopt;
  }

  bool has_resources() const {
    for (const auto& v : vars_)
      if (v.preference != Preference::None) return true;
    return false;
  }

  // Copy with every preference cleared (dominance then degenerates to equality).
  StateMetadata without_resources() const {
    StateMetadata m = *this;
    for (auto& v : m.vars_) v.preference = Preference::None;
    return m;
  }

 private:
  std::vector<ObjectType> objects_;
  std::vector<VariableDecl> vars_;
  std::unordered_map<std::string, std::size_t> by_name_;
};

struct Transition {
  std::string name;  // includes bound parameter values, e.g. "visit 2"
  std::vector<Condition> preconditions;
  std::vector<std::pair<std::size_t, SetExpr>> set_effects;
  std::vector<std::pair<std::size_t, ElementExpr>> element_effects;
  std::vector<std::pair<std::size_t, NumericExpr>> integer_effects;
  std::vector<std::pair<std::size_t, NumericExpr>> real_effects;
  NumericExpr weight;  // w in "w (+) cost"
  bool forced = false;
};

struct BaseCase {
  std::vector<Condition> conditions;
  NumericExpr cost;
};

enum class CostOp { Add, Max };
enum class Direction { Minimize, Maximize };
enum class CostType { Integer, Continuous };

struct CostStructure {
  CostOp op = CostOp::Add;
  Number identity = Number(std::int64_t{0});
  Direction direction = Direction::Minimize;
  CostType type = CostType::Integer;

  // Identity: 0 for addition; for max the smallest representable value
  // unless the caller knows costs are nonnegative.
  static CostStructure make(CostOp op, Direction dir, CostType type, bool nonnegative = false) {
    CostStructure c;
    c.op = op;
    c.direction = dir;
    c.type = type;
    if (op == CostOp::Add || nonnegative)
      c.identity = type == CostType::Integer ? Number(std::int64_t{0}) : Number(0.0);
    else
      c.identity = type == CostType::Integer ? Number(std::numeric_limits<std::int64_t>::min())
                                             : Number::neg_infinity();
    return c;
  }

  bool minimize() const { return direction == Direction::Minimize; }
  // Cost of an infeasible state.
  Number infeasible() const { return minimize() ? Number::infinity() : Number::neg_infinity(); }
  // a strictly better than b.
  bool better(const Number& a, const Number& b) const { return minimize() ? a < b : a > b; }
  bool better_or_equal(const Number& a, const Number& b) const { return minimize() ? a <= b : a >= b; }
  Number best(const Number& a, const Number& b) const { return better(b, a) ? b : a; }
};

struct Model {
  StateMetadata meta;
  TableRegistry tables;
  State target;
  std::vector<Transition> transitions;
  std::vector<BaseCase> base_cases;
  std::vector<Condition> constraints;
  std::vector<NumericExpr> dual_bounds;
  CostStructure cost;
  bool acyclic = false;

  // Allocates a variable and its target value in one step.
  std::size_t add_set_var(const std::string& name, std::size_t object, const Set& init) {
    std::size_t i = meta.add_variable(name, VarKind::Set, object);
    if (init.capacity() != meta.objects()[object].count)
      throw ModelError("initial value of " + name + " has the wrong universe size");
    target.sets.push_back(init);
    return i;
  }
  std::size_t add_element_var(const std::string& name, std::size_t object, std::int64_t init,
                              Preference pref = Preference::None) {
    if (init < 0) throw ModelError("element variable " + name + " needs a nonnegative value");
    std::size_t i = meta.add_variable(name, VarKind::Element, object, pref);
    target.elements.push_back(init);
    return i;
  }
  std::size_t add_integer_var(const std::string& name, std::int64_t init, Preference pref = Preference::None) {
    std::size_t i = meta.add_variable(name, VarKind::Integer, std::nullopt, pref);
    target.integers.push_back(init);
    return i;
  }
  std::size_t add_real_var(const std::string& name, double init, Preference pref = Preference::None) {
    std::size_t i = meta.add_variable(name, VarKind::Continuous, std::nullopt, pref);
    target.reals.push_back(init);
    return i;
  }
};

}  // namespace didp
