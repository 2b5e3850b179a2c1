#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "didp/benchmarks/instances.hpp"
#include "didp/io/parse_expr.hpp"
#include "didp/model.hpp"

namespace didp::bench {

namespace detail {

inline std::string str(std::int64_t v) { return std::to_string(v); }
inline std::string str(std::size_t v) { return std::to_string(v); }

// Shortest text that reads back to the same double, always with a
// fraction or exponent so the parser keeps it continuous.
inline std::string str(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, p);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

// "(op a b c ...)" or `empty` when there are no operands.
inline std::string fold(const std::string& op, const std::vector<std::string>& xs, const std::string& empty) {
  if (xs.empty()) return empty;
  if (xs.size() == 1) return xs[0];
  std::string s = "(" + op;
  for (const auto& x : xs) s += " " + x;
  return s + ")";
}

inline std::string set_literal(const std::string& object, const std::vector<std::size_t>& members) {
  std::string s = "(set " + object;
  for (auto m : members) s += " " + str(m);
  return s + ")";
}

struct TransitionText {
  std::string name;
  std::vector<std::string> pre;
  std::vector<std::pair<std::string, std::string>> effects;  // variable, expression
  std::string cost;
  bool forced = false;
};

// Assembles a Model from tables filled in C++ and expressions written in the
// same s-expression grammar as YAML models.
class Builder {
 public:
  Model m;

  std::size_t object(const std::string& name, std::size_t count) { return m.meta.add_object_type(name, count); }

  void int_table(const std::string& name, const std::vector<std::string>& objs, std::vector<std::int64_t> values,
                 ValueType type = ValueType::Integer) {
    Table t = make_table(name, type, objs, dims(objs));
    t.ints = std::move(values);
    m.tables.add(std::move(t));
  }
  void int_table(const std::string& name, const std::string& obj, const std::vector<std::int64_t>& values) {
    int_table(name, std::vector<std::string>{obj}, values);
  }
  void int_table(const std::string& name, const std::string& obj, const Matrix& values) {
    std::vector<std::int64_t> flat;
    for (const auto& r : values) flat.insert(flat.end(), r.begin(), r.end());
    int_table(name, {obj, obj}, flat);
  }
  void real_table(const std::string& name, const std::vector<std::string>& objs, std::vector<double> values) {
    Table t = make_table(name, ValueType::Continuous, objs, dims(objs));
    t.reals = std::move(values);
    m.tables.add(std::move(t));
  }
  void set_table(const std::string& name, const std::string& arg_obj, const std::string& set_obj,
                 const std::vector<std::vector<std::size_t>>& members) {
    std::size_t cap = count(set_obj);
    Table t = make_set_table(name, {arg_obj}, {count(arg_obj)}, set_obj, cap);
    for (std::size_t k = 0; k < members.size(); ++k)
      for (auto e : members[k]) t.sets[k].insert(static_cast<std::int64_t>(e));
    m.tables.add(std::move(t));
  }

  Condition cond(const std::string& s) const { return io::parse_condition(s, ctx()); }
  NumericExpr num(const std::string& s) const { return io::parse_numeric(s, ctx()); }

  void transition(const TransitionText& tt) {
    Transition t;
    t.name = tt.name;
    t.forced = tt.forced;
    for (const auto& p : tt.pre) t.preconditions.push_back(cond(p));
    for (const auto& [var, text] : tt.effects) {
      const VariableDecl* v = m.meta.find(var);
      if (!v) throw ModelError("builder refers to unknown variable " + var);
      switch (v->kind) {
        case VarKind::Set: t.set_effects.emplace_back(v->index, io::parse_set(text, ctx())); break;
        case VarKind::Element: t.element_effects.emplace_back(v->index, io::parse_element(text, ctx())); break;
        case VarKind::Integer: t.integer_effects.emplace_back(v->index, num(text)); break;
        case VarKind::Continuous: t.real_effects.emplace_back(v->index, num(text)); break;
      }
    }
    t.weight = io::parse_cost_weight(tt.cost, ctx(), m.cost.op);
    m.transitions.push_back(std::move(t));
  }

  void constraint(const std::string& s) { m.constraints.push_back(cond(s)); }
  void base_case(const std::vector<std::string>& conds, const std::string& cost) {
    BaseCase b;
    for (const auto& c : conds) b.conditions.push_back(cond(c));
    b.cost = num(cost);
    m.base_cases.push_back(std::move(b));
  }
  void dual_bound(const std::string& s) { m.dual_bounds.push_back(num(s)); }

  Model finish() {
    m.acyclic = true;
    return std::move(m);
  }

 private:
  io::ExprContext ctx() const { return {m.meta, m.tables, {}}; }
  std::size_t count(const std::string& obj) const {
    auto id = m.meta.find_object(obj);
    if (!id) throw ModelError("builder refers to unknown object type " + obj);
    return m.meta.objects()[*id].count;
  }
  std::vector<std::size_t> dims(const std::vector<std::string>& objs) const {
    std::vector<std::size_t> d;
    for (const auto& o : objs) d.push_back(count(o));
    return d;
  }
};

inline Set range_set(std::size_t capacity, std::size_t from, std::size_t to) {
  Set s(capacity);
  for (std::size_t k = from; k < to; ++k) s.insert(static_cast<std::int64_t>(k));
  return s;
}

// Routing dual bounds: every remaining customer is entered once and left
// once, plus the final arrival at `end` (entering) or the departure from the
// current location (leaving).
inline void routing_bounds(Builder& b, const std::string& end) {
  b.dual_bound("(+ (sum cin U) (cin " + end + "))");
  b.dual_bound("(+ (sum cout U) (cout i))");
}

// The three bin-packing lower bounds over remaining set U and residual r;
// coefficient tables are scaled to integers (b by 2, c by 6).
inline void packing_bounds(Builder& b, const std::string& obj, const std::vector<std::int64_t>& w, std::int64_t q) {
  std::vector<std::int64_t> a2, b2, c6;
  for (auto x : w) {
    a2.push_back(2 * x > q ? 1 : 0);
    b2.push_back(2 * x == q ? 1 : 0);
    c6.push_back(3 * x > 2 * q ? 6 : 3 * x == 2 * q ? 4 : 3 * x > q ? 3 : 3 * x == q ? 2 : 0);
  }
  b.int_table("lb2a", obj, a2);
  b.int_table("lb2b", obj, b2);
  b.int_table("lb3c", obj, c6);
  std::string qs = str(q);
  b.dual_bound("(ceil (/ (- (sum w U) r) " + qs + "))");
  b.dual_bound("(- (+ (sum lb2a U) (ceil (/ (sum lb2b U) 2))) (if (>= (* 2 r) " + qs + ") 1 0))");
  b.dual_bound("(- (ceil (/ (sum lb3c U) 6)) (if (>= (* 3 r) " + qs + ") 1 0))");
}

}  // namespace detail

// U: unvisited customers, i: location, t: time (less is better).
inline Model build_tsptw(const TsptwInstance& x) {
  using namespace detail;
  Builder b;
  b.m.cost = CostStructure::make(CostOp::Add, Direction::Minimize, CostType::Integer);
  std::size_t obj = b.object("customer", x.n);
  b.m.add_set_var("U", obj, range_set(x.n, 1, x.n));
  b.m.add_element_var("i", obj, 0);
  b.m.add_integer_var("t", 0, Preference::Less);
  b.int_table("a", "customer", x.a);
  b.int_table("b", "customer", x.b);
  b.int_table("c", "customer", x.c);
  b.int_table("cstar", "customer", x.cstar);
  b.int_table("cin", "customer", x.cin);
  b.int_table("cout", "customer", x.cout);
  for (std::size_t j = 1; j < x.n; ++j) {
    std::string s = str(j);
    b.transition({"visit " + s,
                  {"(is_in " + s + " U)", "(<= (+ t (c i " + s + ")) (b " + s + "))"},
                  {{"U", "(remove " + s + " U)"}, {"i", s}, {"t", "(max (+ t (c i " + s + ")) (a " + s + "))"}},
                  "(+ (c i " + s + ") cost)"});
  }
  for (std::size_t j = 1; j < x.n; ++j) {
    std::string s = str(j);
    b.constraint("(or (not (is_in " + s + " U)) (<= (+ t (cstar i " + s + ")) (b " + s + ")))");
  }
  b.base_case({"(is_empty U)"}, "(c i 0)");
  routing_bounds(b, "0");
  return b.finish();
}

// Giant tour: l is the load of the current vehicle, k the number of
// vehicles used so far.
inline Model build_cvrp(const CvrpInstance& x) {
  using namespace detail;
  Builder b;
  b.m.cost = CostStructure::make(CostOp::Add, Direction::Minimize, CostType::Integer);
  std::size_t obj = b.object("customer", x.n);
  b.m.add_set_var("U", obj, range_set(x.n, 1, x.n));
  b.m.add_element_var("i", obj, 0);
  b.m.add_integer_var("l", 0, Preference::Less);
  b.m.add_integer_var("k", 1, Preference::Less);
  b.int_table("d", "customer", x.demand);
  b.int_table("c", "customer", x.c);
  b.int_table("cin", "customer", x.cin);
  b.int_table("cout", "customer", x.cout);
  std::string q = str(x.q), m = str(x.m);
  b.constraint("(<= (+ l (sum d U)) (* (+ (- " + m + " k) 1) " + q + "))");
  for (std::size_t j = 1; j < x.n; ++j) {
    std::string s = str(j);
    b.transition({"visit " + s,
                  {"(is_in " + s + " U)", "(<= (+ l (d " + s + ")) " + q + ")"},
                  {{"U", "(remove " + s + " U)"}, {"i", s}, {"l", "(+ l (d " + s + "))"}},
                  "(+ (c i " + s + ") cost)"});
  }
  for (std::size_t j = 1; j < x.n; ++j) {
    std::string s = str(j);
    b.transition({"visit-via-depot " + s,
                  {"(is_in " + s + " U)", "(< k " + m + ")"},
                  {{"U", "(remove " + s + " U)"}, {"i", s}, {"l", "(d " + s + ")"}, {"k", "(+ k 1)"}},
                  "(+ (+ (c i 0) (c 0 " + s + ")) cost)"});
  }
  b.base_case({"(is_empty U)"}, "(c i 0)");
  routing_bounds(b, "0");
  return b.finish();
}

// Tour from node 0 to node n-1 through every other node; l is the load.
inline Model build_mpdtsp(const MpdtspInstance& x) {
  using namespace detail;
  Builder b;
  b.m.cost = CostStructure::make(CostOp::Add, Direction::Minimize, CostType::Integer);
  std::size_t obj = b.object("node", x.n);
  b.m.add_set_var("U", obj, range_set(x.n, 1, x.n - 1));
  b.m.add_element_var("i", obj, 0);
  // Goods picked up at the start are on board from the outset.
  b.m.add_integer_var("l", x.delta[0], Preference::Less);
  b.int_table("c", "node", x.c);
  std::vector<std::int64_t> edges;
  for (const auto& r : x.edge)
    for (bool e : r) edges.push_back(e ? 1 : 0);
  b.int_table("edge", {"node", "node"}, edges, ValueType::Bool);
  b.int_table("delta", "node", x.delta);
  b.set_table("P", "node", "node", x.preds);
  b.int_table("cin", "node", x.cin);
  b.int_table("cout", "node", x.cout);
  std::string q = str(x.q), end = str(x.n - 1);
  b.constraint("(<= l " + q + ")");
  for (std::size_t j = 1; j + 1 < x.n; ++j) {
    std::string s = str(j);
    b.transition({"visit " + s,
                  {"(is_in " + s + " U)", "(edge i " + s + ")", "(<= (+ l (delta " + s + ")) " + q + ")",
                   "(is_empty (intersection (P " + s + ") U))"},
                  {{"U", "(remove " + s + " U)"}, {"i", s}, {"l", "(+ l (delta " + s + "))"}},
                  "(+ (c i " + s + ") cost)"});
  }
  b.base_case({"(is_empty U)", "(edge i " + end + ")"}, "(c i " + end + ")");
  routing_bounds(b, end);
  return b.finish();
}

// Maximize collected profit. Customers that can no longer be reached in
// time are discarded by forced removals before any visit is considered.
inline Model build_optw(const OptwInstance& x) {
  using namespace detail;
  Builder b;
  b.m.cost = CostStructure::make(CostOp::Add, Direction::Maximize, CostType::Integer, true);
  std::size_t obj = b.object("customer", x.n);
  b.m.add_set_var("U", obj, range_set(x.n, 1, x.n));
  b.m.add_element_var("i", obj, 0);
  b.m.add_integer_var("t", 0, Preference::Less);
  b.int_table("a", "customer", x.a);
  b.int_table("b", "customer", x.b);
  b.int_table("p", "customer", x.profit);
  b.int_table("c", "customer", x.c);
  b.int_table("cstar", "customer", x.cstar);
  b.int_table("cin", "customer", x.cin);
  b.int_table("cout", "customer", x.cout);

  // Both tests include the wait for the window to open; otherwise a customer
  // whose opening time is too late to get home could never be discarded.
  auto unreachable = [](const std::string& j) {
    return "(or (> (+ t (cstar i " + j + ")) (b " + j + ")) (> (+ (max (+ t (cstar i " + j + ")) (a " + j +
           ")) (cstar " + j + " 0)) (b 0)))";
  };
  auto visit_ok = [](const std::string& j) {
    return std::vector<std::string>{"(<= (+ t (c i " + j + ")) (b " + j + "))",
                                    "(<= (+ (max (+ t (c i " + j + ")) (a " + j + ")) (cstar " + j + " 0)) (b 0))"};
  };
  std::vector<std::string> visitable;
  for (std::size_t j = 1; j < x.n; ++j) {
    std::string s = str(j);
    auto ok = visit_ok(s);
    visitable.push_back("(and (is_in " + s + " U) " + ok[0] + " " + ok[1] + ")");
  }
  std::string none_visitable = "(not " + fold("or", visitable, "false") + ")";

  for (std::size_t j = 1; j < x.n; ++j) {
    std::string s = str(j);
    b.transition({"remove-unreachable " + s, {"(is_in " + s + " U)", unreachable(s)}, {{"U", "(remove " + s + " U)"}},
                  "(+ 0 cost)", true});
  }
  for (std::size_t j = 1; j < x.n; ++j) {
    std::string s = str(j);
    b.transition({"remove-stuck " + s, {"(is_in " + s + " U)", none_visitable}, {{"U", "(remove " + s + " U)"}},
                  "(+ 0 cost)", true});
  }
  for (std::size_t j = 1; j < x.n; ++j) {
    std::string s = str(j);
    auto ok = visit_ok(s);
    b.transition({"visit " + s,
                  {"(is_in " + s + " U)", ok[0], ok[1]},
                  {{"U", "(remove " + s + " U)"}, {"i", s}, {"t", "(max (+ t (c i " + s + ")) (a " + s + "))"}},
                  "(+ (p " + s + ") cost)"});
  }
  b.base_case({"(is_empty U)", "(<= (+ t (c i 0)) (b 0))"}, "0");

  // Profit of the customers still worth considering, and two knapsack-style
  // bounds: remaining time divided among cheapest arcs in / out.
  std::vector<std::string> profit, eff_in, eff_out;
  bool in_ok = true, out_ok = true;
  std::string cap_in = "(max 0 (- (- (b 0) t) (cin 0)))";
  std::string cap_out = "(max 0 (- (- (b 0) t) (cout i)))";
  for (std::size_t j = 1; j < x.n; ++j) {
    std::string s = str(j);
    std::string live = "(and (is_in " + s + " U) (not " + unreachable(s) + "))";
    profit.push_back("(if " + live + " (p " + s + ") 0)");
    if (x.cin[j] > 0)
      eff_in.push_back("(if " + live + " (floor (/ (* " + cap_in + " (p " + s + ")) (cin " + s + "))) 0)");
    else
      in_ok = false;
    if (x.cout[j] > 0)
      eff_out.push_back("(if " + live + " (floor (/ (* " + cap_out + " (p " + s + ")) (cout " + s + "))) 0)");
    else
      out_ok = false;
  }
  b.dual_bound(profit.empty() ? "0" : "(+ 0 " + fold("+", profit, "0") + ")");
  if (in_ok && !eff_in.empty()) b.dual_bound("(max 0 " + fold("max", eff_in, "0") + ")");
  if (out_ok && !eff_out.empty()) b.dual_bound("(max 0 " + fold("max", eff_out, "0") + ")");
  return b.finish();
}

// Items are decided in index order; i is the next item, r_j the remaining
// capacity of dimension j (more is better).
inline Model build_mdkp(const MdkpInstance& x) {
  using namespace detail;
  Builder b;
  CostType type = x.continuous ? CostType::Continuous : CostType::Integer;
  b.m.cost = CostStructure::make(CostOp::Add, Direction::Maximize, type, true);
  std::size_t pos = b.object("position", x.n + 1);
  b.object("dimension", x.m);
  b.m.add_element_var("i", pos, 0);
  std::vector<std::string> r;
  for (std::size_t j = 0; j < x.m; ++j) {
    r.push_back("r" + str(j));
    if (x.continuous)
      b.m.add_real_var(r.back(), x.capacity[j], Preference::More);
    else
      b.m.add_integer_var(r.back(), std::llround(x.capacity[j]), Preference::More);
  }
  // Tables over positions 0..n; position n is the past-the-end sentinel.
  std::vector<double> p(x.n + 1, 0.0), psum(x.n + 1, 0.0), w((x.n + 1) * x.m, 0.0);
  for (std::size_t k = x.n; k-- > 0;) {
    p[k] = x.profit[k];
    psum[k] = psum[k + 1] + x.profit[k];
    for (std::size_t j = 0; j < x.m; ++j) w[k * x.m + j] = x.weight[k][j];
  }
  auto put = [&](const std::string& name, std::vector<std::string> objs, const std::vector<double>& v) {
    if (x.continuous) {
      b.real_table(name, objs, v);
    } else {
      std::vector<std::int64_t> iv;
      for (double d : v) iv.push_back(std::llround(d));
      b.int_table(name, objs, iv);
    }
  };
  put("p", {"position"}, p);
  put("psum", {"position"}, psum);
  put("w", {"position", "dimension"}, w);

  std::string n = str(x.n);
  TransitionText take{"include", {"(< i " + n + ")"}, {{"i", "(+ i 1)"}}, "(+ (p i) cost)"};
  for (std::size_t j = 0; j < x.m; ++j) {
    take.pre.push_back("(<= (w i " + str(j) + ") " + r[j] + ")");
    take.effects.emplace_back(r[j], "(- " + r[j] + " (w i " + str(j) + "))");
  }
  b.transition(take);
  b.transition({"skip", {"(< i " + n + ")"}, {{"i", "(+ i 1)"}}, x.continuous ? "(+ 0.0 cost)" : "(+ 0 cost)"});
  b.base_case({"(>= i " + n + ")"}, x.continuous ? "0.0" : "0");

  b.dual_bound("(psum i)");
  // Per dimension: best remaining profit-to-weight ratio times the residual
  // capacity. Zero-weight items make the ratio unbounded; the remaining
  // profit sum stands in for them.
  for (std::size_t j = 0; j < x.m; ++j) {
    std::string cap = "(max " + r[j] + (x.continuous ? " 1.0)" : " 1)");
    std::vector<std::string> terms;
    for (std::size_t k = 0; k < x.n; ++k) {
      std::string term;
      if (x.weight[k][j] == 0)
        term = "(psum i)";
      else if (x.continuous)
        term = "(/ (* " + cap + " " + str(x.profit[k]) + ") " + str(x.weight[k][j]) + ")";
      else
        term = "(floor (/ (* " + cap + " " + str(static_cast<std::int64_t>(std::llround(x.profit[k]))) + ") " +
               str(static_cast<std::int64_t>(std::llround(x.weight[k][j]))) + "))";
      terms.push_back("(if (<= i " + str(k) + ") " + term + " 0)");
    }
    if (!terms.empty()) b.dual_bound("(max 0 " + fold("max", terms, "0") + ")");
  }
  return b.finish();
}

// U: unpacked items, r: residual capacity of the open bin (more is better),
// k: bins used so far (less is better). Item i may only go into one of the
// first i+1 bins.
inline Model build_binpacking(const BinPackingInstance& x) {
  using namespace detail;
  Builder b;
  b.m.cost = CostStructure::make(CostOp::Add, Direction::Minimize, CostType::Integer);
  std::size_t n = x.w.size();
  std::size_t item = b.object("item", n);
  std::size_t bin = b.object("bin", n + 1);
  b.m.add_set_var("U", item, Set::full(n));
  b.m.add_integer_var("r", 0, Preference::More);
  b.m.add_element_var("k", bin, 0, Preference::Less);
  b.int_table("w", "item", x.w);
  std::string q = str(x.q);
  std::vector<std::string> nothing_fits;
  for (std::size_t j = 0; j < n; ++j)
    nothing_fits.push_back("(or (not (is_in " + str(j) + " U)) (< r (w " + str(j) + ")))");
  std::string stuck = fold("and", nothing_fits, "true");
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = str(i);
    b.transition({"open-bin " + s,
                  {"(is_in " + s + " U)", "(<= k " + s + ")", stuck},
                  {{"U", "(remove " + s + " U)"}, {"r", "(- " + q + " (w " + s + "))"}, {"k", "(+ k 1)"}},
                  "(+ 1 cost)",
                  true});
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = str(i);
    b.transition({"pack " + s,
                  {"(is_in " + s + " U)", "(>= r (w " + s + "))", "(<= k " + str(i + 1) + ")"},
                  {{"U", "(remove " + s + " U)"}, {"r", "(- r (w " + s + "))"}},
                  "(+ 0 cost)"});
  }
  b.base_case({"(is_empty U)"}, "0");
  packing_bounds(b, "item", x.w, x.q);
  return b.finish();
}

// U: unscheduled tasks, r: idle time left in the current station. A new
// station is opened only when no task fits (maximum load rule).
inline Model build_salbp1(const Salbp1Instance& x) {
  using namespace detail;
  Builder b;
  b.m.cost = CostStructure::make(CostOp::Add, Direction::Minimize, CostType::Integer);
  std::size_t task = b.object("task", x.n);
  b.m.add_set_var("U", task, Set::full(x.n));
  b.m.add_integer_var("r", 0, Preference::More);
  b.int_table("w", "task", x.w);
  b.set_table("P", "task", "task", x.preds);
  std::vector<std::string> blocked;
  std::vector<TransitionText> schedule;
  for (std::size_t i = 0; i < x.n; ++i) {
    std::string s = str(i);
    std::vector<std::string> pre{"(is_in " + s + " U)", "(>= r (w " + s + "))",
                                 "(is_empty (intersection (P " + s + ") U))"};
    blocked.push_back("(not (and " + pre[0] + " " + pre[1] + " " + pre[2] + "))");
    schedule.push_back({"schedule " + s, pre, {{"U", "(remove " + s + " U)"}, {"r", "(- r (w " + s + "))"}},
                        "(+ 0 cost)"});
  }
  std::vector<std::string> open_pre{"(not (is_empty U))"};
  open_pre.insert(open_pre.end(), blocked.begin(), blocked.end());
  b.transition({"open-station", open_pre, {{"r", str(x.q)}}, "(+ 1 cost)", true});
  for (const auto& t : schedule) b.transition(t);
  b.base_case({"(is_empty U)"}, "0");
  packing_bounds(b, "task", x.w, x.q);
  return b.finish();
}

// F: jobs already scheduled, in order from time 0.
inline Model build_wt(const WtInstance& x) {
  using namespace detail;
  Builder b;
  b.m.cost = CostStructure::make(CostOp::Add, Direction::Minimize, CostType::Integer);
  std::size_t job = b.object("job", x.n);
  b.m.add_set_var("F", job, Set(x.n));
  b.int_table("p", "job", x.p);
  b.int_table("d", "job", x.d);
  b.int_table("w", "job", x.w);
  b.set_table("P", "job", "job", x.preds);
  for (std::size_t i = 0; i < x.n; ++i) {
    std::string s = str(i);
    b.transition({"schedule " + s,
                  {"(not (is_in " + s + " F))", "(is_subset (P " + s + ") F)"},
                  {{"F", "(add " + s + " F)"}},
                  "(+ (* (w " + s + ") (max 0 (- (+ (sum p F) (p " + s + ")) (d " + s + ")))) cost)"});
  }
  b.base_case({"(is_empty (complement F))"}, "0");
  b.dual_bound("0");
  return b.finish();
}

// Q: scenes not yet shot. L(Q) is the set of actors already on location who
// are still needed later.
inline Model build_talent(const TalentInstance& x) {
  using namespace detail;
  Builder b;
  b.m.cost = CostStructure::make(CostOp::Add, Direction::Minimize, CostType::Integer);
  std::size_t n = x.scenes();
  std::size_t scene = b.object("scene", n);
  b.object("actor", x.actors);
  b.m.add_set_var("Q", scene, Set::full(n));
  b.set_table("A", "scene", "actor", x.cast);
  b.int_table("d", "scene", x.duration);
  b.int_table("bs", "scene", x.base);
  b.int_table("ac", "actor", x.cost);
  const std::string shot_actors = "(union_all A (complement Q))";
  const std::string L = "(intersection (union_all A Q) " + shot_actors + ")";
  for (std::size_t s = 0; s < n; ++s) {
    std::string ss = str(s);
    b.transition({"shoot-now " + ss, {"(is_in " + ss + " Q)", "(= (A " + ss + ") " + L + ")"},
                  {{"Q", "(remove " + ss + " Q)"}}, "(+ (bs " + ss + ") cost)", true});
  }
  auto subset = [&](std::size_t s1, std::size_t s2) {
    return std::includes(x.cast[s2].begin(), x.cast[s2].end(), x.cast[s1].begin(), x.cast[s1].end());
  };
  for (std::size_t s = 0; s < n; ++s) {
    std::string ss = str(s);
    std::vector<std::string> pre{"(is_in " + ss + " Q)"};
    // s is not a candidate while some s2 in Q with a superset cast is
    // covered by the actors already used plus s's own cast.
    for (std::size_t s2 = 0; s2 < n; ++s2) {
      if (s2 == s || !subset(s, s2)) continue;
      std::string t = str(s2);
      pre.push_back("(not (and (is_in " + t + " Q) (is_subset (A " + t + ") (union " + shot_actors + " (A " + ss +
                    ")))))");
    }
    b.transition({"shoot " + ss, pre, {{"Q", "(remove " + ss + " Q)"}},
                  "(+ (* (d " + ss + ") (sum ac (union (A " + ss + ") " + L + "))) cost)"});
  }
  b.base_case({"(is_empty Q)"}, "0");
  b.dual_bound("(sum bs Q)");
  return b.finish();
}

// R: customers whose orders are not complete, O: customers whose stack has
// been opened. The cost is the largest number of simultaneously open stacks.
inline Model build_mosp(const MospInstance& x) {
  using namespace detail;
  Builder b;
  b.m.cost = CostStructure::make(CostOp::Max, Direction::Minimize, CostType::Integer, true);
  std::size_t cust = b.object("customer", x.customers);
  b.m.add_set_var("R", cust, Set::full(x.customers));
  b.m.add_set_var("O", cust, Set(x.customers));
  b.set_table("N", "customer", "customer", x.neighbors);
  for (std::size_t c = 0; c < x.customers; ++c) {
    std::string s = str(c);
    b.transition({"complete " + s,
                  {"(is_in " + s + " R)"},
                  {{"R", "(remove " + s + " R)"}, {"O", "(union O (N " + s + "))"}},
                  "(max (cardinality (union (intersection O R) (difference (N " + s + ") O))) cost)"});
  }
  b.base_case({"(is_empty R)"}, "0");
  b.dual_bound("0");
  return b.finish();
}

// C: swept nodes. The cost is the largest number of robots needed by any
// single sweep.
inline Model build_graphclear(const GraphClearInstance& x) {
  using namespace detail;
  Builder b;
  b.m.cost = CostStructure::make(CostOp::Max, Direction::Minimize, CostType::Integer, true);
  std::size_t node = b.object("node", x.n);
  b.m.add_set_var("C", node, Set(x.n));
  b.int_table("a", "node", x.a);
  b.int_table("b", "node", x.b);
  std::vector<std::size_t> all;
  for (std::size_t k = 0; k < x.n; ++k) all.push_back(k);
  std::string everything = set_literal("node", all);
  for (std::size_t c = 0; c < x.n; ++c) {
    std::string s = str(c);
    b.transition({"sweep " + s,
                  {"(not (is_in " + s + " C))"},
                  {{"C", "(add " + s + " C)"}},
                  "(max (+ (+ (a " + s + ") (sum b " + s + " " + everything + ")) (sum b C (remove " + s +
                      " (complement C)))) cost)"});
  }
  b.base_case({"(is_empty (complement C))"}, "0");
  b.dual_bound("0");
  return b.finish();
}

}  // namespace didp::bench
