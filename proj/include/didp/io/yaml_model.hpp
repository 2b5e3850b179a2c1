#pragma once

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "didp/io/parse_expr.hpp"
#include "didp/io/print_expr.hpp"
#include "didp/model.hpp"

namespace didp::io {

// ---- documents ----

struct VariableDoc {
  std::string name;
  std::string type;  // element | set | integer | continuous
  std::optional<std::string> object;
  std::string preference;  // "", less, greater
};

struct TableDoc {
  std::string name;
  std::string type;  // integer | continuous | element | bool | set
  std::vector<std::string> args;
  std::optional<std::string> object;  // universe of set-valued entries
  std::optional<YAML::Node> default_value;
};

struct ParameterDoc {
  std::string name;
  std::string object;  // object type or set variable
};

struct TransitionDoc {
  std::string name;
  std::vector<ParameterDoc> parameters;
  std::vector<std::string> preconditions;
  std::vector<std::pair<std::string, std::string>> effects;
  std::string cost;
  bool forced = false;
};

struct ConstraintDoc {
  std::string condition;
  std::optional<ParameterDoc> forall;
};

struct BaseCaseDoc {
  std::vector<std::string> conditions;
  std::string cost;
};

struct DomainDocument {
  std::string cost_type;
  std::string reduce;
  std::vector<std::string> objects;
  std::vector<VariableDoc> state_variables;
  std::vector<TableDoc> tables;
  std::vector<TransitionDoc> transitions;
  std::vector<ConstraintDoc> constraints;
  std::vector<BaseCaseDoc> base_cases;
  std::vector<std::string> dual_bounds;
};

struct ProblemDocument {
  std::map<std::string, std::int64_t> object_numbers;
  std::map<std::string, YAML::Node> target;
  std::map<std::string, YAML::Node> table_values;
};

namespace detail {

inline YAML::Node load_yaml(const std::string& text) {
  try {
    return YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ParseError(std::string("YAML syntax error: ") + e.what());
  }
}

inline void check_keys(const YAML::Node& n, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!n.IsMap()) throw ParseError(where + " must be a map");
  for (const auto& kv : n) {
    std::string k = kv.first.as<std::string>();
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }))
      throw ParseError("unknown key '" + k + "' in " + where);
  }
}

inline const YAML::Node require(const YAML::Node& n, const char* key, const std::string& where) {
  YAML::Node v = n[key];
  if (!v) throw ParseError("missing " + std::string(key) + (where.empty() ? "" : " in " + where));
  return v;
}

inline std::string scalar(const YAML::Node& n, const std::string& what) {
  if (!n.IsScalar()) throw ParseError(what + " must be a scalar");
  return n.as<std::string>();
}

inline std::vector<std::string> scalar_list(const YAML::Node& n, const std::string& what) {
  std::vector<std::string> out;
  if (!n || n.IsNull()) return out;
  if (!n.IsSequence()) throw ParseError(what + " must be a list");
  for (const auto& x : n) out.push_back(scalar(x, "entry of " + what));
  return out;
}

inline bool boolean(const YAML::Node& n, const std::string& what) {
  std::string s = scalar(n, what);
  if (s == "true" || s == "True") return true;
  if (s == "false" || s == "False") return false;
  throw ParseError(what + " must be true or false, got '" + s + "'");
}

inline std::int64_t integer(const YAML::Node& n, const std::string& what) {
  std::string s = scalar(n, what);
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError(what + " must be an integer, got '" + s + "'");
  return v;
}

inline Number number(const YAML::Node& n, const std::string& what, bool integer_only) {
  std::string s = scalar(n, what);
  std::int64_t i = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), i);
  if (ec == std::errc() && p == s.data() + s.size()) return Number(i);
  if (integer_only) throw ParseError(what + " must be an integer, got '" + s + "'");
  if (s == ".inf" || s == "inf") return Number::infinity();
  if (s == "-.inf" || s == "-inf") return Number::neg_infinity();
  double d = 0;
  auto [q, ec2] = std::from_chars(s.data(), s.data() + s.size(), d);
  if (ec2 != std::errc() || q != s.data() + s.size() || std::isnan(d))
    throw ParseError(what + " must be a number, got '" + s + "'");
  return Number(d);
}

inline ParameterDoc parameter(const YAML::Node& n, const std::string& where) {
  check_keys(n, {"name", "object"}, where);
  return {scalar(require(n, "name", where), where + " name"), scalar(require(n, "object", where), where + " object")};
}

}  // namespace detail

inline DomainDocument parse_domain(const std::string& text) {
  using namespace detail;
  YAML::Node root = load_yaml(text);
  if (!root || root.IsNull()) throw ParseError("missing cost_type");
  check_keys(root, {"cost_type", "reduce", "objects", "state_variables", "tables", "transitions", "constraints",
                    "base_cases", "dual_bounds"},
             "domain");
  DomainDocument d;
  d.cost_type = scalar(require(root, "cost_type", ""), "cost_type");
  if (d.cost_type != "integer" && d.cost_type != "continuous")
    throw ParseError("cost_type must be integer or continuous, got '" + d.cost_type + "'");
  d.reduce = root["reduce"] ? scalar(root["reduce"], "reduce") : "min";
  if (d.reduce != "min" && d.reduce != "max") throw ParseError("reduce must be min or max, got '" + d.reduce + "'");
  d.objects = scalar_list(root["objects"], "objects");

  if (auto vs = root["state_variables"]) {
    if (!vs.IsSequence()) throw ParseError("state_variables must be a list");
    for (const auto& v : vs) {
      const std::string where = "state variable";
      check_keys(v, {"name", "type", "object", "preference"}, where);
      VariableDoc vd;
      vd.name = scalar(require(v, "name", where), "variable name");
      const std::string w = "state variable " + vd.name;
      vd.type = scalar(require(v, "type", w), w + " type");
      if (vd.type != "element" && vd.type != "set" && vd.type != "integer" && vd.type != "continuous")
        throw ParseError("bad type '" + vd.type + "' for " + w);
      if (v["object"]) vd.object = scalar(v["object"], w + " object");
      if (v["preference"]) {
        vd.preference = scalar(v["preference"], w + " preference");
        if (vd.preference != "less" && vd.preference != "greater")
          throw ParseError("preference of " + w + " must be less or greater, got '" + vd.preference + "'");
      }
      d.state_variables.push_back(vd);
    }
  }

  if (auto ts = root["tables"]) {
    if (!ts.IsSequence()) throw ParseError("tables must be a list");
    for (const auto& t : ts) {
      check_keys(t, {"name", "type", "args", "object", "default"}, "table");
      TableDoc td;
      td.name = scalar(require(t, "name", "table"), "table name");
      const std::string w = "table " + td.name;
      td.type = scalar(require(t, "type", w), w + " type");
      if (td.type != "integer" && td.type != "continuous" && td.type != "element" && td.type != "bool" &&
          td.type != "set")
        throw ParseError("bad type '" + td.type + "' for " + w);
      td.args = scalar_list(t["args"], w + " args");
      if (t["object"]) td.object = scalar(t["object"], w + " object");
      if (td.type == "set" && !td.object) throw ParseError(w + " is set-valued and needs an object");
      if (t["default"]) td.default_value = YAML::Clone(t["default"]);
      d.tables.push_back(td);
    }
  }

  if (auto trs = root["transitions"]) {
    if (!trs.IsSequence()) throw ParseError("transitions must be a list");
    for (const auto& t : trs) {
      check_keys(t, {"name", "parameters", "preconditions", "effect", "cost", "forced"}, "transition");
      TransitionDoc td;
      td.name = scalar(require(t, "name", "transition"), "transition name");
      const std::string w = "transition " + td.name;
      if (auto ps = t["parameters"]) {
        if (!ps.IsSequence()) throw ParseError("parameters of " + w + " must be a list");
        for (const auto& p : ps) td.parameters.push_back(parameter(p, "parameter of " + w));
      }
      td.preconditions = scalar_list(t["preconditions"], "preconditions of " + w);
      if (auto eff = t["effect"]) {
        if (!eff.IsMap()) throw ParseError("effect of " + w + " must be a map");
        for (const auto& kv : eff)
          td.effects.emplace_back(kv.first.as<std::string>(), scalar(kv.second, "effect of " + w));
      }
      td.cost = scalar(require(t, "cost", w), "cost of " + w);
      if (t["forced"]) td.forced = boolean(t["forced"], "forced of " + w);
      d.transitions.push_back(td);
    }
  }

  if (auto cs = root["constraints"]) {
    if (!cs.IsSequence()) throw ParseError("constraints must be a list");
    for (const auto& c : cs) {
      ConstraintDoc cd;
      if (c.IsScalar()) {
        cd.condition = c.as<std::string>();
      } else {
        check_keys(c, {"condition", "forall"}, "constraint");
        cd.condition = scalar(require(c, "condition", "constraint"), "constraint condition");
        if (auto f = c["forall"]) {
          if (f.IsSequence()) {
            if (f.size() != 1) throw ParseError("forall binds exactly one parameter");
            cd.forall = parameter(f[0], "forall");
          } else {
            cd.forall = parameter(f, "forall");
          }
        }
      }
      d.constraints.push_back(cd);
    }
  }

  if (auto bs = root["base_cases"]) {
    if (!bs.IsSequence()) throw ParseError("base_cases must be a list");
    for (const auto& b : bs) {
      BaseCaseDoc bd;
      if (b.IsSequence()) {
        // shorthand: a bare list of conditions with zero cost
        bd.conditions = scalar_list(b, "base case conditions");
        bd.cost = "0";
      } else {
        check_keys(b, {"conditions", "cost"}, "base case");
        bd.conditions = scalar_list(require(b, "conditions", "base case"), "base case conditions");
        bd.cost = b["cost"] ? scalar(b["cost"], "base case cost") : "0";
      }
      d.base_cases.push_back(bd);
    }
  }
  d.dual_bounds = scalar_list(root["dual_bounds"], "dual_bounds");
  return d;
}

inline ProblemDocument parse_problem(const std::string& text) {
  using namespace detail;
  YAML::Node root = load_yaml(text);
  if (!root || root.IsNull()) throw ParseError("missing object_numbers");
  check_keys(root, {"object_numbers", "target", "table_values"}, "problem");
  ProblemDocument p;
  if (auto on = root["object_numbers"]) {
    if (!on.IsMap()) throw ParseError("object_numbers must be a map");
    for (const auto& kv : on) {
      std::string k = kv.first.as<std::string>();
      std::int64_t v = integer(kv.second, "object number of " + k);
      if (v < 0) throw ParseError("object number of " + k + " must be nonnegative");
      p.object_numbers[k] = v;
    }
  }
  YAML::Node tg = require(root, "target", "problem");
  if (!tg.IsMap()) throw ParseError("target must be a map");
  for (const auto& kv : tg) p.target[kv.first.as<std::string>()] = YAML::Clone(kv.second);
  if (auto tv = root["table_values"]) {
    if (!tv.IsMap()) throw ParseError("table_values must be a map");
    for (const auto& kv : tv) p.table_values[kv.first.as<std::string>()] = YAML::Clone(kv.second);
  }
  return p;
}

// ---- instantiation ----

namespace detail {

// The set expression can only produce subsets of variable v.
inline bool shrinks(const SExpr& e, const std::string& v) {
  if (e.atom) return e.text == v;
  const std::string& h = e.head();
  if (h == "remove" && e.items.size() == 3) return shrinks(e.items[2], v);
  if (h == "difference" && e.items.size() >= 3) return shrinks(e.items[1], v);
  if (h == "intersection")
    return std::any_of(e.items.begin() + 1, e.items.end(), [&](const SExpr& x) { return shrinks(x, v); });
  if (h == "if" && e.items.size() == 4) return shrinks(e.items[2], v) && shrinks(e.items[3], v);
  return false;
}

inline ValueType value_type(const std::string& s) {
  if (s == "integer") return ValueType::Integer;
  if (s == "continuous") return ValueType::Continuous;
  if (s == "element") return ValueType::Element;
  if (s == "bool") return ValueType::Bool;
  return ValueType::Set;
}

class Instantiator {
 public:
  Instantiator(const DomainDocument& d, const ProblemDocument& p) : d_(d), p_(p) {}

  Model run() {
    objects();
    variables();
    tables();
    cost_structure();
    ExprContext ctx{m_.meta, m_.tables, {}};
    transitions(ctx);
    constraints(ctx);
    ExprParser parser(ctx);
    for (const auto& b : d_.base_cases) {
      BaseCase bc;
      for (const auto& c : b.conditions) bc.conditions.push_back(parser.condition(parse_sexpr(c)));
      bc.cost = parser.numeric(parse_sexpr(b.cost));
      m_.base_cases.push_back(bc);
    }
    for (const auto& e : d_.dual_bounds) m_.dual_bounds.push_back(parser.numeric(parse_sexpr(e)));
    m_.acyclic = true;
    return std::move(m_);
  }

 private:
  void objects() {
    for (const auto& o : d_.objects) {
      auto it = p_.object_numbers.find(o);
      if (it == p_.object_numbers.end()) throw ParseError("object_numbers lacks object type " + o);
      m_.meta.add_object_type(o, static_cast<std::size_t>(it->second));
    }
    for (const auto& [k, v] : p_.object_numbers)
      if (!m_.meta.find_object(k)) throw ParseError("object_numbers names undeclared object type " + k);
  }

  std::size_t object_id(const std::string& name, const std::string& where) const {
    auto o = m_.meta.find_object(name);
    if (!o) throw ParseError("unknown object type '" + name + "' in " + where);
    return *o;
  }
  std::size_t object_count(std::size_t id) const { return m_.meta.objects()[id].count; }

  void variables() {
    for (const auto& v : d_.state_variables) {
      auto it = p_.target.find(v.name);
      if (it == p_.target.end()) throw ParseError("target lacks a value for variable " + v.name);
      const YAML::Node& val = it->second;
      const std::string w = "target value of " + v.name;
      Preference pref = v.preference == "less" ? Preference::Less
                        : v.preference == "greater" ? Preference::More
                                                    : Preference::None;
      if (v.type == "set" || v.type == "element") {
        if (!v.object) throw ParseError(v.type + " variable " + v.name + " needs an object");
        std::size_t obj = object_id(*v.object, "variable " + v.name);
        if (v.type == "set") {
          if (pref != Preference::None) throw ParseError("set variable " + v.name + " cannot have a preference");
          Set s(object_count(obj));
          if (!val.IsSequence()) throw ParseError(w + " must be a list");
          for (const auto& x : val) {
            std::int64_t e = integer(x, "member of " + w);
            if (e < 0 || static_cast<std::size_t>(e) >= s.capacity())
              throw ParseError("member " + std::to_string(e) + " of " + w + " is out of range");
            s.insert(e);
          }
          m_.add_set_var(v.name, obj, s);
        } else {
          std::int64_t e = integer(val, w);
          if (e < 0) throw ParseError(w + " must be nonnegative");
          m_.add_element_var(v.name, obj, e, pref);
        }
      } else if (v.type == "integer") {
        m_.add_integer_var(v.name, integer(val, w), pref);
      } else {
        m_.add_real_var(v.name, number(val, w, false).as_double(), pref);
      }
    }
    for (const auto& [k, v] : p_.target)
      if (!m_.meta.find(k)) throw ParseError("target names undeclared variable " + k);
  }

  void assign(Table& t, std::size_t off, const YAML::Node& v, const std::string& w) {
    switch (t.type) {
      case ValueType::Integer: t.ints[off] = integer(v, w); break;
      case ValueType::Element: {
        std::int64_t e = integer(v, w);
        if (e < 0) throw ParseError(w + " must be nonnegative");
        t.ints[off] = e;
        break;
      }
      case ValueType::Bool: t.ints[off] = boolean(v, w) ? 1 : 0; break;
      case ValueType::Continuous: t.reals[off] = number(v, w, false).as_double(); break;
      case ValueType::Set: {
        Set s(t.set_capacity);
        if (!v.IsSequence()) throw ParseError(w + " must be a list");
        for (const auto& x : v) {
          std::int64_t e = integer(x, "member of " + w);
          if (e < 0 || static_cast<std::size_t>(e) >= s.capacity())
            throw ParseError("member " + std::to_string(e) + " of " + w + " is out of range");
          s.insert(e);
        }
        t.sets[off] = s;
        break;
      }
    }
  }

  void tables() {
    for (const auto& td : d_.tables) {
      std::vector<std::size_t> dims;
      for (const auto& a : td.args) dims.push_back(object_count(object_id(a, "table " + td.name)));
      ValueType type = value_type(td.type);
      Table t = type == ValueType::Set ? make_set_table(td.name, td.args, dims, *td.object,
                                                        object_count(object_id(*td.object, "table " + td.name)))
                                       : make_table(td.name, type, td.args, dims);
      std::vector<char> filled(t.size(), 0);
      if (td.default_value) {
        for (std::size_t off = 0; off < t.size(); ++off) assign(t, off, *td.default_value, "default of table " + td.name);
        std::fill(filled.begin(), filled.end(), 1);
      }
      auto it = p_.table_values.find(td.name);
      if (it != p_.table_values.end()) {
        const YAML::Node& vals = it->second;
        const std::string w = "value of table " + td.name;
        if (t.arity() == 0) {
          assign(t, 0, vals, w);
          filled[0] = 1;
        } else {
          if (!vals.IsMap()) throw ParseError("values of table " + td.name + " must be a map");
          for (const auto& kv : vals) {
            std::vector<std::int64_t> idx;
            if (kv.first.IsSequence()) {
              for (const auto& x : kv.first) idx.push_back(integer(x, "key of table " + td.name));
            } else {
              idx.push_back(integer(kv.first, "key of table " + td.name));
            }
            std::size_t off;
            try {
              off = t.offset(idx);
            } catch (const EvalError& e) {
              throw ParseError(std::string("bad key for table ") + td.name + ": " + e.what());
            }
            assign(t, off, kv.second, w);
            filled[off] = 1;
          }
        }
      }
      auto missing = std::find(filled.begin(), filled.end(), 0);
      if (missing != filled.end())
        throw ParseError("table " + td.name + " has no value for some keys and no default");
      m_.tables.add(std::move(t));
    }
    for (const auto& [k, v] : p_.table_values)
      if (!m_.tables.find(k)) throw ParseError("table_values names undeclared table " + k);
  }

  void cost_structure() {
    std::optional<CostOp> op;
    for (const auto& t : d_.transitions) {
      SExpr e = parse_sexpr(t.cost);
      CostOp here = e.head() == "max" ? CostOp::Max : CostOp::Add;
      if (op && *op != here) throw ParseError("transitions mix + and max cost operators");
      op = here;
    }
    m_.cost = CostStructure::make(op.value_or(CostOp::Add), d_.reduce == "max" ? Direction::Maximize : Direction::Minimize,
                                  d_.cost_type == "continuous" ? CostType::Continuous : CostType::Integer);
  }

  // Values a parameter ranges over, and the set variable it is tied to.
  struct Range {
    std::vector<std::int64_t> values;
    std::optional<std::size_t> set_var;
  };

  Range range(const ParameterDoc& p, const std::string& where) const {
    Range r;
    if (const VariableDecl* v = m_.meta.find(p.object); v && v->kind == VarKind::Set) {
      r.set_var = v->index;
      if (set_only_shrinks(p.object)) {
        for (auto x : m_.target.sets[v->index].members()) r.values.push_back(static_cast<std::int64_t>(x));
      } else {
        for (std::size_t k = 0; k < object_count(*v->object); ++k) r.values.push_back(static_cast<std::int64_t>(k));
      }
      return r;
    }
    std::size_t obj = object_id(p.object, where);
    for (std::size_t k = 0; k < object_count(obj); ++k) r.values.push_back(static_cast<std::int64_t>(k));
    return r;
  }

  bool set_only_shrinks(const std::string& var) const {
    for (const auto& t : d_.transitions)
      for (const auto& [name, text] : t.effects)
        if (name == var && !shrinks(parse_sexpr(text), var)) return false;
    return true;
  }

  void transitions(ExprContext& ctx) {
    for (const auto& td : d_.transitions) {
      std::vector<Range> ranges;
      for (const auto& p : td.parameters) ranges.push_back(range(p, "transition " + td.name));
      std::vector<std::size_t> pos(ranges.size(), 0);
      bool empty = std::any_of(ranges.begin(), ranges.end(), [](const Range& r) { return r.values.empty(); });
      while (!empty) {
        ctx.params.clear();
        std::string name = td.name;
        Transition t;
        ExprParser parser(ctx);
        for (std::size_t k = 0; k < ranges.size(); ++k) {
          std::int64_t v = ranges[k].values[pos[k]];
          ctx.params[td.parameters[k].name] = v;
          name += " " + std::to_string(v);
          if (ranges[k].set_var) t.preconditions.push_back(ex::is_in(ex::element(v), ex::set_var(*ranges[k].set_var)));
        }
        t.name = name;
        t.forced = td.forced;
        for (const auto& c : td.preconditions) t.preconditions.push_back(parser.condition(parse_sexpr(c)));
        for (const auto& [var, text] : td.effects) effect(t, var, text, parser);
        t.weight = parser.cost_weight(parse_sexpr(td.cost), m_.cost.op);
        m_.transitions.push_back(std::move(t));
        // odometer, last parameter fastest
        std::size_t k = ranges.size();
        while (k > 0) {
          --k;
          if (++pos[k] < ranges[k].values.size()) break;
          pos[k] = 0;
          if (k == 0) empty = true;
        }
        if (ranges.empty()) empty = true;
      }
    }
    ctx.params.clear();
  }

  void effect(Transition& t, const std::string& var, const std::string& text, const ExprParser& parser) const {
    const VariableDecl* v = m_.meta.find(var);
    if (!v) throw ParseError("effect on undeclared variable " + var + " in transition " + t.name);
    SExpr e = parse_sexpr(text);
    switch (v->kind) {
      case VarKind::Set: t.set_effects.emplace_back(v->index, parser.set(e)); break;
      case VarKind::Element: t.element_effects.emplace_back(v->index, parser.element(e)); break;
      case VarKind::Integer: t.integer_effects.emplace_back(v->index, parser.numeric(e)); break;
      case VarKind::Continuous: t.real_effects.emplace_back(v->index, parser.numeric(e)); break;
    }
  }

  void constraints(ExprContext& ctx) {
    for (const auto& cd : d_.constraints) {
      if (!cd.forall) {
        m_.constraints.push_back(ExprParser(ctx).condition(parse_sexpr(cd.condition)));
        continue;
      }
      Range r = range(*cd.forall, "forall");
      for (std::int64_t v : r.values) {
        ctx.params = {{cd.forall->name, v}};
        Condition c = ExprParser(ctx).condition(parse_sexpr(cd.condition));
        if (r.set_var)  // only binds while the object is in the set
          c = ex::disj({ex::negate(ex::is_in(ex::element(v), ex::set_var(*r.set_var))), c});
        m_.constraints.push_back(c);
      }
    }
    ctx.params.clear();
  }

  const DomainDocument& d_;
  const ProblemDocument& p_;
  Model m_;
};

}  // namespace detail

inline Model instantiate(const DomainDocument& d, const ProblemDocument& p) {
  return detail::Instantiator(d, p).run();
}

inline Model load_model(const std::string& domain_text, const std::string& problem_text) {
  return instantiate(parse_domain(domain_text), parse_problem(problem_text));
}

// ---- export ----

struct ExportedModel {
  std::string domain;
  std::string problem;
};

namespace detail {

inline const char* kind_name(VarKind k) {
  switch (k) {
    case VarKind::Element: return "element";
    case VarKind::Set: return "set";
    case VarKind::Integer: return "integer";
    case VarKind::Continuous: return "continuous";
  }
  return "?";
}

inline void emit_table_value(YAML::Emitter& out, const Table& t, std::size_t off) {
  switch (t.type) {
    case ValueType::Bool: out << (t.ints[off] ? "true" : "false"); break;
    case ValueType::Continuous: out << Number(t.reals[off]).to_string(); break;
    case ValueType::Set: {
      out << YAML::Flow << YAML::BeginSeq;
      for (auto m : t.sets[off].members()) out << m;
      out << YAML::EndSeq;
      break;
    }
    default: out << t.ints[off]; break;
  }
}

}  // namespace detail

// Writes a fully ground domain (one transition per ground transition, no
// parameters) and a matching problem document.
inline ExportedModel export_model(const Model& m) {
  ExprPrinter pr(m.meta, m.tables);
  const auto& objs = m.meta.objects();
  YAML::Emitter d;
  d << YAML::BeginMap;
  d << YAML::Key << "cost_type" << YAML::Value << (m.cost.type == CostType::Integer ? "integer" : "continuous");
  d << YAML::Key << "reduce" << YAML::Value << (m.cost.minimize() ? "min" : "max");
  d << YAML::Key << "objects" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (const auto& o : objs) d << o.name;
  d << YAML::EndSeq;

  d << YAML::Key << "state_variables" << YAML::Value << YAML::BeginSeq;
  for (const auto& v : m.meta.variables()) {
    d << YAML::Flow << YAML::BeginMap << YAML::Key << "name" << YAML::Value << v.name;
    d << YAML::Key << "type" << YAML::Value << detail::kind_name(v.kind);
    if (v.object) d << YAML::Key << "object" << YAML::Value << objs[*v.object].name;
    if (v.preference != Preference::None)
      d << YAML::Key << "preference" << YAML::Value << (v.preference == Preference::Less ? "less" : "greater");
    d << YAML::EndMap;
  }
  d << YAML::EndSeq;

  if (m.tables.size()) {
    d << YAML::Key << "tables" << YAML::Value << YAML::BeginSeq;
    for (const auto& t : m.tables.all()) {
      d << YAML::Flow << YAML::BeginMap << YAML::Key << "name" << YAML::Value << t.name;
      d << YAML::Key << "type" << YAML::Value << to_string(t.type);
      if (!t.arg_objects.empty()) {
        d << YAML::Key << "args" << YAML::Value << YAML::Flow << YAML::BeginSeq;
        for (const auto& a : t.arg_objects) d << a;
        d << YAML::EndSeq;
      }
      if (t.type == ValueType::Set) d << YAML::Key << "object" << YAML::Value << t.set_object;
      d << YAML::EndMap;
    }
    d << YAML::EndSeq;
  }

  const char* op = m.cost.op == CostOp::Add ? "+" : "max";
  d << YAML::Key << "transitions" << YAML::Value << YAML::BeginSeq;
  for (const auto& t : m.transitions) {
    d << YAML::BeginMap << YAML::Key << "name" << YAML::Value << t.name;
    if (!t.preconditions.empty()) {
      d << YAML::Key << "preconditions" << YAML::Value << YAML::BeginSeq;
      for (const auto& c : t.preconditions) d << pr.print(c);
      d << YAML::EndSeq;
    }
    d << YAML::Key << "effect" << YAML::Value << YAML::BeginMap;
    for (const auto& [i, e] : t.set_effects) d << YAML::Key << m.meta.variable(VarKind::Set, i).name << YAML::Value << pr.print(e);
    for (const auto& [i, e] : t.element_effects)
      d << YAML::Key << m.meta.variable(VarKind::Element, i).name << YAML::Value << pr.print(e);
    for (const auto& [i, e] : t.integer_effects)
      d << YAML::Key << m.meta.variable(VarKind::Integer, i).name << YAML::Value << pr.print(e);
    for (const auto& [i, e] : t.real_effects)
      d << YAML::Key << m.meta.variable(VarKind::Continuous, i).name << YAML::Value << pr.print(e);
    d << YAML::EndMap;
    d << YAML::Key << "cost" << YAML::Value << (std::string("(") + op + " " + pr.print(t.weight) + " cost)");
    if (t.forced) d << YAML::Key << "forced" << YAML::Value << true;
    d << YAML::EndMap;
  }
  d << YAML::EndSeq;

  if (!m.constraints.empty()) {
    d << YAML::Key << "constraints" << YAML::Value << YAML::BeginSeq;
    for (const auto& c : m.constraints) d << pr.print(c);
    d << YAML::EndSeq;
  }
  d << YAML::Key << "base_cases" << YAML::Value << YAML::BeginSeq;
  for (const auto& b : m.base_cases) {
    d << YAML::BeginMap << YAML::Key << "conditions" << YAML::Value << YAML::BeginSeq;
    for (const auto& c : b.conditions) d << pr.print(c);
    d << YAML::EndSeq << YAML::Key << "cost" << YAML::Value << pr.print(b.cost) << YAML::EndMap;
  }
  d << YAML::EndSeq;
  if (!m.dual_bounds.empty()) {
    d << YAML::Key << "dual_bounds" << YAML::Value << YAML::BeginSeq;
    for (const auto& e : m.dual_bounds) d << pr.print(e);
    d << YAML::EndSeq;
  }
  d << YAML::EndMap;

  YAML::Emitter p;
  p << YAML::BeginMap;
  p << YAML::Key << "object_numbers" << YAML::Value << YAML::BeginMap;
  for (const auto& o : objs) p << YAML::Key << o.name << YAML::Value << o.count;
  p << YAML::EndMap;
  p << YAML::Key << "target" << YAML::Value << YAML::BeginMap;
  for (const auto& v : m.meta.variables()) {
    p << YAML::Key << v.name << YAML::Value;
    switch (v.kind) {
      case VarKind::Set: {
        p << YAML::Flow << YAML::BeginSeq;
        for (auto x : m.target.sets[v.index].members()) p << x;
        p << YAML::EndSeq;
        break;
      }
      case VarKind::Element: p << m.target.elements[v.index]; break;
      case VarKind::Integer: p << m.target.integers[v.index]; break;
      case VarKind::Continuous: p << Number(m.target.reals[v.index]).to_string(); break;
    }
  }
  p << YAML::EndMap;
  if (m.tables.size()) {
    p << YAML::Key << "table_values" << YAML::Value << YAML::BeginMap;
    for (const auto& t : m.tables.all()) {
      p << YAML::Key << t.name << YAML::Value;
      if (t.arity() == 0) {
        detail::emit_table_value(p, t, 0);
        continue;
      }
      p << YAML::Flow << YAML::BeginMap;
      std::vector<std::int64_t> idx(t.arity(), 0);
      for (std::size_t off = 0; off < t.size(); ++off) {
        // decode off into the index tuple (row-major)
        std::size_t r = off;
        for (std::size_t k = t.arity(); k-- > 0;) {
          idx[k] = static_cast<std::int64_t>(r % t.dims[k]);
          r /= t.dims[k];
        }
        p << YAML::Key;
        if (t.arity() == 1) {
          p << idx[0];
        } else {
          p << YAML::Flow << YAML::BeginSeq;
          for (auto x : idx) p << x;
          p << YAML::EndSeq;
        }
        p << YAML::Value;
        detail::emit_table_value(p, t, off);
      }
      p << YAML::EndMap;
    }
    p << YAML::EndMap;
  }
  p << YAML::EndMap;
  return {std::string(d.c_str()) + "\n", std::string(p.c_str()) + "\n"};
}

}  // namespace didp::io
