#pragma once

#include <charconv>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "didp/expr.hpp"
#include "didp/io/sexpr.hpp"
#include "didp/model.hpp"

namespace didp::io {

// Symbols visible to an expression: declared variables, tables, and the
// values of bound parameters (after grounding every parameter is a constant).
struct ExprContext {
  const StateMetadata& meta;
  const TableRegistry& tables;
  std::map<std::string, std::int64_t> params;
};

class ExprParser {
 public:
  explicit ExprParser(const ExprContext& ctx) : ctx_(ctx) {}

  ElementExpr element(const SExpr& e) const {
    if (e.atom) {
      if (auto p = param(e.text)) return ex::element(*p);
      if (auto v = var(e.text, VarKind::Element)) return ex::element_var(v->index);
      if (auto t = table(e.text); t && table_is(*t, ValueType::Element) && arity(*t) == 0)
        return ex::element_table(*t, {});
      if (auto i = parse_int(e.text)) {
        if (*i < 0) fail("element constants must be nonnegative", e);
        return ex::element(*i);
      }
      unknown(e);
    }
    const std::string& h = e.head();
    if (h == "+" || h == "-" || h == "*" || h == "/" || h == "%" || h == "mod" || h == "max" || h == "min") {
      Op op = arith_op(h);
      need_at_least(e, 2);
      ElementExpr acc = element(e.items[1]);
      if (e.items.size() == 2 && op != Op::Max && op != Op::Min) fail("'" + h + "' needs two operands", e);
      for (std::size_t k = 2; k < e.items.size(); ++k) acc = ex::arith(op, acc, element(e.items[k]));
      return acc;
    }
    if (h == "if") {
      need_args(e, 3);
      return ex::if_then_else(condition(e.items[1]), element(e.items[2]), element(e.items[3]));
    }
    if (auto t = table(h)) {
      if (!table_is(*t, ValueType::Element)) fail("table " + h + " is not an element table", e);
      return ex::element_table(*t, element_args(e, *t));
    }
    unknown_op(e, "element");
  }

  SetExpr set(const SExpr& e) const {
    if (e.atom) {
      if (auto v = var(e.text, VarKind::Set)) return ex::set_var(v->index);
      if (auto t = table(e.text); t && table_is(*t, ValueType::Set) && arity(*t) == 0)
        return ex::set_table(*t, {});
      unknown(e);
    }
    const std::string& h = e.head();
    if (h == "add" || h == "remove") {
      need_args(e, 2);
      ElementExpr x = element(e.items[1]);
      SetExpr s = set(e.items[2]);
      return h == "add" ? ex::set_add(x, s) : ex::set_remove(x, s);
    }
    if (h == "union" || h == "intersection" || h == "difference") {
      need_at_least(e, 3);
      Op op = h == "union" ? Op::Union : h == "intersection" ? Op::Intersection : Op::Difference;
      SetExpr acc = set(e.items[1]);
      for (std::size_t k = 2; k < e.items.size(); ++k) acc = ex::set_binary(op, acc, set(e.items[k]));
      return acc;
    }
    if (h == "complement") {
      need_args(e, 1);
      return ex::set_complement(set(e.items[1]));
    }
    if (h == "union_all") {
      need_args(e, 2);
      auto t = table_named(e.items[1]);
      if (!table_is(t, ValueType::Set) || arity(t) != 1)
        fail("union_all needs a one-argument set table", e);
      return ex::union_over(t, set(e.items[2]));
    }
    if (h == "if") {
      need_args(e, 3);
      return ex::if_then_else(condition(e.items[1]), set(e.items[2]), set(e.items[3]));
    }
    if (h == "set") {
      // (set <object type> e ...): constant set over that object's universe
      need_at_least(e, 2);
      if (!e.items[1].atom) fail("set literal needs an object type name", e);
      auto obj = ctx_.meta.find_object(e.items[1].text);
      if (!obj) fail("unknown object type " + e.items[1].text, e);
      Set s(ctx_.meta.objects()[*obj].count);
      for (std::size_t k = 2; k < e.items.size(); ++k) {
        auto i = e.items[k].atom ? param_or_int(e.items[k].text) : std::nullopt;
        if (!i) fail("set literal members must be constants", e.items[k]);
        if (*i < 0 || static_cast<std::size_t>(*i) >= s.capacity())
          fail("set literal member out of range", e.items[k]);
        s.insert(*i);
      }
      return ex::set_const(std::move(s));
    }
    if (auto t = table(h)) {
      if (!table_is(*t, ValueType::Set)) fail("table " + h + " is not a set table", e);
      return ex::set_table(*t, element_args(e, *t));
    }
    unknown_op(e, "set");
  }

  NumericExpr numeric(const SExpr& e) const {
    if (e.atom) {
      if (auto p = param(e.text)) return ex::from_element(ex::element(*p));
      if (auto v = var(e.text, VarKind::Integer)) return ex::integer_var(v->index);
      if (auto v = var(e.text, VarKind::Continuous)) return ex::real_var(v->index);
      if (auto v = var(e.text, VarKind::Element)) return ex::from_element(ex::element_var(v->index));
      if (auto t = table(e.text); t && arity(*t) == 0) return scalar_table(*t, {}, e);
      if (e.text == "cost") fail("'cost' may only appear as the second operand of the outermost cost operator", e);
      if (auto n = parse_number(e.text)) return ex::number(*n);
      unknown(e);
    }
    const std::string& h = e.head();
    if ((h == "sum" || h == "product" || h == "max" || h == "min") && e.items.size() >= 2 && e.items[1].atom) {
      if (auto t = table(e.items[1].text); t && arity(*t) > 0) return reduction(e, *t);
    }
    if (h == "+" || h == "-" || h == "*" || h == "/" || h == "max" || h == "min") {
      Op op = arith_op(h);
      need_at_least(e, 2);
      NumericExpr acc = numeric(e.items[1]);
      if (e.items.size() == 2) {
        if (op == Op::Sub) return ex::arith(Op::Sub, ex::number(Number(std::int64_t{0})), acc);
        if (op != Op::Max && op != Op::Min) fail("'" + h + "' needs two operands", e);
      }
      for (std::size_t k = 2; k < e.items.size(); ++k) acc = ex::arith(op, acc, numeric(e.items[k]));
      return acc;
    }
    if (h == "abs" || h == "floor" || h == "ceil") {
      need_args(e, 1);
      return ex::unary(h == "abs" ? Op::Abs : h == "floor" ? Op::Floor : Op::Ceil, numeric(e.items[1]));
    }
    if (h == "cardinality") {
      need_args(e, 1);
      return ex::cardinality(set(e.items[1]));
    }
    if (h == "if") {
      need_args(e, 3);
      return ex::if_then_else(condition(e.items[1]), numeric(e.items[2]), numeric(e.items[3]));
    }
    if (h == "%" || h == "mod") return ex::from_element(element(e));
    if (auto t = table(h)) return scalar_table(*t, element_args(e, *t), e);
    unknown_op(e, "numeric");
  }

  Condition condition(const SExpr& e) const {
    if (e.atom) {
      if (e.text == "true") return ex::boolean(true);
      if (e.text == "false") return ex::boolean(false);
      if (auto t = table(e.text); t && table_is(*t, ValueType::Bool) && arity(*t) == 0)
        return ex::bool_table(*t, {});
      unknown(e);
    }
    const std::string& h = e.head();
    if (h == "=" || h == "!=" || h == "<" || h == "<=" || h == ">" || h == ">=") {
      need_args(e, 2);
      Op op = h == "=" ? Op::Eq : h == "!=" ? Op::Ne : h == "<" ? Op::Lt : h == "<=" ? Op::Le : h == ">" ? Op::Gt : Op::Ge;
      if (looks_like_set(e.items[1]) || looks_like_set(e.items[2])) {
        if (op != Op::Eq && op != Op::Ne) fail("sets can only be compared with = or !=", e);
        return ex::compare(op, set(e.items[1]), set(e.items[2]));
      }
      return ex::compare(op, numeric(e.items[1]), numeric(e.items[2]));
    }
    if (h == "is_in") {
      need_args(e, 2);
      return ex::is_in(element(e.items[1]), set(e.items[2]));
    }
    if (h == "is_subset") {
      need_args(e, 2);
      return ex::is_subset(set(e.items[1]), set(e.items[2]));
    }
    if (h == "is_empty") {
      need_args(e, 1);
      return ex::is_empty(set(e.items[1]));
    }
    if (h == "not") {
      need_args(e, 1);
      return ex::negate(condition(e.items[1]));
    }
    if (h == "and" || h == "or") {
      need_at_least(e, 2);
      std::vector<Condition> cs;
      for (std::size_t k = 1; k < e.items.size(); ++k) cs.push_back(condition(e.items[k]));
      return h == "and" ? ex::conj(cs) : ex::disj(cs);
    }
    if (auto t = table(h)) {
      if (!table_is(*t, ValueType::Bool)) fail("table " + h + " is not a bool table", e);
      return ex::bool_table(*t, element_args(e, *t));
    }
    unknown_op(e, "condition");
  }

  // Transition cost "(op w cost)": returns w. The operator has to be the
  // model's cost operator.
  NumericExpr cost_weight(const SExpr& e, CostOp op) const {
    const char* want = op == CostOp::Add ? "+" : "max";
    if (e.atom && e.text == "cost") fail("cost term must be w (+) cost, not the successor cost alone", e);
    if (e.atom || e.head() != want || e.items.size() != 3 || !e.items[2].atom || e.items[2].text != "cost")
      fail(std::string("cost expression must have the form (") + want + " w cost)", e);
    return numeric(e.items[1]);
  }

 private:
  [[noreturn]] static void fail(const std::string& msg, const SExpr& e) {
    throw ParseError(msg + " in '" + e.to_string() + "'");
  }
  [[noreturn]] static void unknown(const SExpr& e) { throw ParseError("unknown symbol '" + e.text + "'"); }
  [[noreturn]] static void unknown_op(const SExpr& e, const char* sort) {
    if (e.items[0].atom)
      throw ParseError("unknown " + std::string(sort) + " operator or table '" + e.head() + "' in '" + e.to_string() + "'");
    throw ParseError("operator position holds a list in '" + e.to_string() + "'");
  }
  static void need_args(const SExpr& e, std::size_t n) {
    if (e.items.size() != n + 1)
      fail("'" + e.head() + "' expects " + std::to_string(n) + " argument(s), got " + std::to_string(e.items.size() - 1), e);
  }
  static void need_at_least(const SExpr& e, std::size_t n) {
    if (e.items.size() < n) fail("'" + e.head() + "' has too few arguments", e);
  }

  static std::optional<std::int64_t> parse_int(const std::string& s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
  }
  static std::optional<Number> parse_number(const std::string& s) {
    if (auto i = parse_int(s)) return Number(*i);
    if (s == "inf" || s == "+inf") return Number::infinity();
    if (s == "-inf") return Number::neg_infinity();
    double d = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), d);
    if (ec != std::errc() || p != s.data() + s.size() || std::isnan(d)) return std::nullopt;
    return Number(d);
  }

  std::optional<std::int64_t> param(const std::string& s) const {
    auto it = ctx_.params.find(s);
    if (it == ctx_.params.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::int64_t> param_or_int(const std::string& s) const {
    if (auto p = param(s)) return p;
    return parse_int(s);
  }
  const VariableDecl* var(const std::string& s, VarKind kind) const {
    const VariableDecl* d = ctx_.meta.find(s);
    return d && d->kind == kind ? d : nullptr;
  }
  std::optional<std::size_t> table(const std::string& s) const {
    if (s.empty()) return std::nullopt;
    return ctx_.tables.find(s);
  }
  std::size_t table_named(const SExpr& e) const {
    if (!e.atom) fail("expected a table name", e);
    auto t = table(e.text);
    if (!t) throw ParseError("unknown table '" + e.text + "'");
    return *t;
  }
  bool table_is(std::size_t t, ValueType type) const { return ctx_.tables.get(t).type == type; }
  std::size_t arity(std::size_t t) const { return ctx_.tables.get(t).arity(); }

  std::vector<ElementExpr> element_args(const SExpr& e, std::size_t t) const {
    std::size_t n = e.items.size() - 1;
    if (n != arity(t))
      fail("table " + ctx_.tables.get(t).name + " takes " + std::to_string(arity(t)) + " argument(s), got " +
               std::to_string(n),
           e);
    std::vector<ElementExpr> args;
    for (std::size_t k = 1; k < e.items.size(); ++k) args.push_back(element(e.items[k]));
    return args;
  }

  NumericExpr scalar_table(std::size_t t, std::vector<ElementExpr> args, const SExpr& e) const {
    ValueType ty = ctx_.tables.get(t).type;
    if (ty == ValueType::Element) return ex::from_element(ex::element_table(t, std::move(args)));
    if (ty != ValueType::Integer && ty != ValueType::Continuous)
      fail("table " + ctx_.tables.get(t).name + " is not numeric", e);
    return ex::numeric_table(t, ty == ValueType::Integer, std::move(args));
  }

  NumericExpr reduction(const SExpr& e, std::size_t t) const {
    const Table& tab = ctx_.tables.get(t);
    if (tab.type != ValueType::Integer && tab.type != ValueType::Continuous)
      fail("reduction over non-numeric table " + tab.name, e);
    std::size_t n = e.items.size() - 2;
    if (n != tab.arity())
      fail("table " + tab.name + " takes " + std::to_string(tab.arity()) + " argument(s), got " + std::to_string(n), e);
    const std::string& h = e.head();
    Reduction r = h == "sum" ? Reduction::Sum : h == "product" ? Reduction::Product : h == "max" ? Reduction::Max : Reduction::Min;
    std::vector<NodePtr> args;
    for (std::size_t k = 2; k < e.items.size(); ++k)
      args.push_back(looks_like_set(e.items[k]) ? set(e.items[k]).ptr() : element(e.items[k]).ptr());
    return ex::reduce(r, t, tab.type == ValueType::Integer, std::move(args));
  }

  bool looks_like_set(const SExpr& e) const {
    if (e.atom) {
      if (param(e.text)) return false;
      if (var(e.text, VarKind::Set)) return true;
      auto t = table(e.text);
      return t && table_is(*t, ValueType::Set);
    }
    static const char* ops[] = {"add", "remove", "union", "intersection", "difference", "complement", "union_all", "set"};
    const std::string& h = e.head();
    for (const char* o : ops)
      if (h == o) return true;
    if (h == "if" && e.items.size() == 4) return looks_like_set(e.items[2]);
    auto t = table(h);
    return t && table_is(*t, ValueType::Set);
  }

  static Op arith_op(const std::string& h) {
    if (h == "+") return Op::Add;
    if (h == "-") return Op::Sub;
    if (h == "*") return Op::Mul;
    if (h == "/") return Op::Div;
    if (h == "%" || h == "mod") return Op::Mod;
    if (h == "max") return Op::Max;
    return Op::Min;
  }

  const ExprContext& ctx_;
};

inline ElementExpr parse_element(std::string_view text, const ExprContext& ctx) {
  return ExprParser(ctx).element(parse_sexpr(text));
}
inline SetExpr parse_set(std::string_view text, const ExprContext& ctx) { return ExprParser(ctx).set(parse_sexpr(text)); }
inline NumericExpr parse_numeric(std::string_view text, const ExprContext& ctx) {
  return ExprParser(ctx).numeric(parse_sexpr(text));
}
inline Condition parse_condition(std::string_view text, const ExprContext& ctx) {
  return ExprParser(ctx).condition(parse_sexpr(text));
}
inline NumericExpr parse_cost_weight(std::string_view text, const ExprContext& ctx, CostOp op) {
  return ExprParser(ctx).cost_weight(parse_sexpr(text), op);
}

}  // namespace didp::io
