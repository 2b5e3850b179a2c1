#include <gtest/gtest.h>

#include <random>

#include "didp/benchmarks/benchmarks.hpp"
#include "didp/model_ops.hpp"
#include "didp/oracle.hpp"
#include "didp/validate.hpp"

using namespace didp;

namespace {

const char* kDeskTsptw =
    "3\n"
    "0 2 3\n2 0 1\n3 1 0\n"
    "0 10\n0 10\n0 10\n";

std::size_t idx(const Model& m, const char* name) { return m.meta.find(name)->index; }

State tsptw_state(const Model& m, std::initializer_list<std::int64_t> U, std::int64_t i, std::int64_t t) {
  State s = m.target;
  s.sets[idx(m, "U")] = Set(m.meta.objects()[0].count, U);
  s.elements[idx(m, "i")] = i;
  s.integers[idx(m, "t")] = t;
  return s;
}

std::vector<std::string> names(const Model& m, const std::vector<std::size_t>& ts) {
  std::vector<std::string> out;
  for (auto k : ts) out.push_back(m.transitions[k].name);
  return out;
}

std::size_t find_transition(const Model& m, const std::string& name) {
  for (std::size_t k = 0; k < m.transitions.size(); ++k)
    if (m.transitions[k].name == name) return k;
  ADD_FAILURE() << "no transition " << name;
  return 0;
}

// One integer variable, no transitions; base cases are added by the tests.
Model bare_model() {
  Model m;
  m.cost = CostStructure::make(CostOp::Add, Direction::Minimize, CostType::Integer);
  m.add_integer_var("x", 0);
  return m;
}

}  // namespace

TEST(CheckConstraints, EmptyConjunctionHolds) {
  Model m = bare_model();
  EXPECT_TRUE(check_constraints(m, m.target));
}

TEST(CheckConstraints, TsptwDeadlineConstraint) {
  Model m = bench::build_tsptw(bench::parse_tsptw(kDeskTsptw));
  EXPECT_TRUE(check_constraints(m, tsptw_state(m, {1}, 0, 8)));   // 8 + 2 <= 10
  EXPECT_FALSE(check_constraints(m, tsptw_state(m, {1}, 0, 9)));  // 9 + 2 > 10
  EXPECT_TRUE(check_constraints(m, tsptw_state(m, {}, 0, 9)));    // nothing left to reach
  Model tight = bench::build_tsptw(bench::parse_tsptw("3\n0 3 3\n2 0 1\n3 1 0\n0 10\n0 10\n0 10\n"));
  EXPECT_FALSE(check_constraints(tight, tsptw_state(tight, {1}, 0, 9)));  // 9 + 3 > 10
}

TEST(BaseCost, TsptwReturnArc) {
  Model m = bench::build_tsptw(bench::parse_tsptw(kDeskTsptw));
  auto c = base_cost(m, tsptw_state(m, {}, 2, 17));
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, Number(3));
  EXPECT_FALSE(base_cost(m, tsptw_state(m, {1}, 2, 0)));
}

TEST(BaseCost, BestOfSeveralSatisfiedCases) {
  Model m = bare_model();
  m.base_cases.push_back({{ex::boolean(true)}, ex::number(5)});
  m.base_cases.push_back({{ex::boolean(true)}, ex::number(2)});
  m.base_cases.push_back({{ex::boolean(false)}, ex::number(1)});
  EXPECT_EQ(*base_cost(m, m.target), Number(2));
  m.cost = CostStructure::make(CostOp::Add, Direction::Maximize, CostType::Integer);
  EXPECT_EQ(*base_cost(m, m.target), Number(5));
}

TEST(ApplicableTransitions, TsptwBothVisits) {
  Model m = bench::build_tsptw(bench::parse_tsptw(kDeskTsptw));
  auto ts = applicable_transitions(m, tsptw_state(m, {1, 2}, 0, 0));
  EXPECT_EQ(names(m, ts), (std::vector<std::string>{"visit 1", "visit 2"}));
  EXPECT_TRUE(applicable_transitions(m, tsptw_state(m, {}, 1, 3)).empty());
}

TEST(ApplicableTransitions, TalentForcedSceneReplacesTheRest) {
  // Casts {a}, {a,b}, {a,c}. With scene 2 shot, only a is on location for
  // both sides, and scene 0 needs exactly a.
  Model m = bench::build_talent(bench::parse_talent("3 3\n1 1 1 1\n0 1 0 1\n0 0 1 1\n1 1 1\n"));
  State s = m.target;
  s.sets[idx(m, "Q")] = Set(3, {0, 1});
  auto ts = applicable_transitions(m, s);
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_TRUE(m.transitions[ts[0]].forced);
  EXPECT_EQ(m.transitions[ts[0]].name, "shoot-now 0");
  EXPECT_GT(applicable_transitions(m, s, false).size(), 1u);
}

TEST(Successor, TsptwVisitUsesPreState) {
  Model m = bench::build_tsptw(bench::parse_tsptw(kDeskTsptw));
  State s = tsptw_state(m, {1, 2}, 0, 0);
  // t is computed with the old i = 0, so c01 = 2 (not c11 = 0).
  EXPECT_EQ(successor(m, m.transitions[find_transition(m, "visit 1")], s), tsptw_state(m, {2}, 1, 2));
}

TEST(Successor, NoEffectsLeavesStateUnchanged) {
  Model m = bare_model();
  m.target.integers[0] = 4;
  Transition t;
  t.name = "noop";
  t.weight = ex::number(1);
  EXPECT_EQ(successor(m, t, m.target), m.target);
}

TEST(Successor, BinPackingOpenBin) {
  Model m = bench::build_binpacking(bench::parse_binpacking("8\n4\n5 4 3 3\n"));
  State s = m.target;
  s.sets[idx(m, "U")] = Set(4, {0});
  s.integers[idx(m, "r")] = 0;
  s.elements[idx(m, "k")] = 0;
  State next = successor(m, m.transitions[find_transition(m, "open-bin 0")], s);
  EXPECT_TRUE(next.sets[idx(m, "U")].empty());
  EXPECT_EQ(next.integers[idx(m, "r")], 3);
  EXPECT_EQ(next.elements[idx(m, "k")], 1);
}

TEST(Combine, Examples) {
  auto add = CostStructure::make(CostOp::Add, Direction::Minimize, CostType::Integer);
  auto mx = CostStructure::make(CostOp::Max, Direction::Minimize, CostType::Integer, true);
  EXPECT_EQ(combine(add, 2, 3), Number(5));
  EXPECT_EQ(combine(add, 7, add.identity), Number(7));
  EXPECT_EQ(combine(mx, 4, 2), Number(4));
  EXPECT_EQ(combine(mx, 0, mx.identity), Number(0));
}

// Identity and isotonicity of both operators on random values.
TEST(Combine, MonoidLaws) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> v(-1000, 1000);
  for (auto op : {CostOp::Add, CostOp::Max}) {
    auto c = CostStructure::make(op, Direction::Minimize, CostType::Integer);
    for (int k = 0; k < 500; ++k) {
      Number x = v(rng), y = v(rng), z = v(rng);
      EXPECT_EQ(combine(c, x, c.identity), x);
      if (x <= y) { EXPECT_LE(combine(c, z, x), combine(c, z, y)); }
    }
  }
}

TEST(Dominance, TsptwTimeIsAResource) {
  Model m = bench::build_tsptw(bench::parse_tsptw(kDeskTsptw));
  auto a = tsptw_state(m, {1}, 1, 3), b = tsptw_state(m, {1}, 1, 5), c = tsptw_state(m, {2}, 1, 3);
  EXPECT_EQ(dominance_compare(m.meta, a, b), Dominance::FirstDominates);
  EXPECT_EQ(dominance_compare(m.meta, b, a), Dominance::SecondDominates);
  EXPECT_EQ(dominance_compare(m.meta, a, a), Dominance::Equal);
  EXPECT_EQ(dominance_compare(m.meta, a, c), Dominance::Incomparable);
  // Without resource preferences only equality remains.
  EXPECT_EQ(dominance_compare(m.meta.without_resources(), a, b), Dominance::Incomparable);
}

TEST(DualBound, TsptwTarget) {
  Model m = bench::build_tsptw(bench::parse_tsptw(kDeskTsptw));
  auto h = eval_dual_bound(m, tsptw_state(m, {1, 2}, 0, 0));
  ASSERT_TRUE(h);
  EXPECT_EQ(*h, Number(4));
}

TEST(DualBound, ZeroBoundAndNoBound) {
  Model m = bare_model();
  EXPECT_FALSE(eval_dual_bound(m, m.target));
  m.dual_bounds.push_back(ex::number(0));
  EXPECT_EQ(*eval_dual_bound(m, m.target), Number(0));
}

TEST(Validate, BuiltModelsAreClean) {
  Model m = bench::build_tsptw(bench::parse_tsptw(kDeskTsptw));
  EXPECT_FALSE(has_errors(validate(m, {true, true})));
}

TEST(Validate, BareCostPlaceholderIsRejected) {
  Model m = bare_model();
  Transition t;
  t.name = "loop";
  t.weight = ex::cost_placeholder();
  m.transitions.push_back(t);
  auto ds = validate(m);
  ASSERT_TRUE(has_errors(ds));
  EXPECT_NE(ds[0].message.find("cost term must be w (+) cost"), std::string::npos);
}

TEST(Validate, TableArityMismatch) {
  Model m = bench::build_tsptw(bench::parse_tsptw(kDeskTsptw));
  std::size_t c = *m.tables.find("c");
  m.constraints.push_back(ex::compare(Op::Le, ex::numeric_table(c, true, {ex::element(1)}), ex::number(3)));
  auto ds = validate(m);
  ASSERT_TRUE(has_errors(ds));
  bool mentions_arity = false;
  for (const auto& d : ds) mentions_arity |= d.message.find("arity") != std::string::npos;
  EXPECT_TRUE(mentions_arity);
}

TEST(Validate, CaasdyClaimNeedsMinimization) {
  Model m = bench::build_optw(bench::parse_optw("2\n0 2\n2 0\n0 10 0\n0 10 5\n"));
  EXPECT_FALSE(has_errors(validate(m)));
  EXPECT_TRUE(has_errors(validate(m, {true, false})));
}

TEST(Oracle, DeskExamples) {
  Model tsp = bench::build_tsptw(bench::parse_tsptw(kDeskTsptw));
  EXPECT_EQ(*bellman_oracle(tsp).cost, Number(6));
  Model empty = bench::build_tsptw(bench::parse_tsptw("1\n0\n0 10\n"));
  EXPECT_EQ(*bellman_oracle(empty).cost, Number(0));
  Model gc = bench::build_graphclear(bench::parse_graphclear("2\n1 1\n0 1\n1 0\n"));
  EXPECT_EQ(*bellman_oracle(gc).cost, Number(2));
}

TEST(Oracle, InfeasibleAndDepthLimit) {
  Model tsp = bench::build_tsptw(bench::parse_tsptw("3\n0 2 3\n2 0 1\n3 1 0\n0 10\n0 1\n0 10\n"));
  auto r = bellman_oracle(tsp);
  EXPECT_FALSE(r.cost);
  EXPECT_GE(r.memo_size, 1u);
  Model desk = bench::build_tsptw(bench::parse_tsptw(kDeskTsptw));
  EXPECT_THROW(bellman_oracle(desk, 1), ModelError);  // two visits are needed
}

// Fold of the transition weights plus the base cost, checked on the two
// tours of the desk instance.
TEST(SolutionCost, DeskTours) {
  Model m = bench::build_tsptw(bench::parse_tsptw(kDeskTsptw));
  std::size_t v1 = find_transition(m, "visit 1"), v2 = find_transition(m, "visit 2");
  EXPECT_EQ(*solution_cost(m, {v1, v2}), Number(6));
  EXPECT_EQ(*solution_cost(m, {v2, v1}), Number(6));
  EXPECT_FALSE(solution_cost(m, {v1}));      // does not end in a base state
  EXPECT_FALSE(solution_cost(m, {v1, v1}));  // second visit not applicable
}
