#include <gtest/gtest.h>

#include <map>

#include "didp/benchmarks/benchmarks.hpp"
#include "didp/eval.hpp"
#include "didp/io/parse_expr.hpp"
#include "didp/oracle.hpp"
#include "didp/search/solvers.hpp"
#include "didp/validate.hpp"
#include "support/suite.hpp"

using namespace didp;
using bench::ProblemClass;

namespace {

const char* kDeskC = "0 2 3\n2 0 1\n3 1 0\n";

std::optional<Number> optimum(ProblemClass cls, const std::string& text, bench::ParseOptions opt = {}) {
  Model m = bench::build(bench::parse_instance(cls, text, opt));
  EXPECT_FALSE(has_errors(validate(m))) << text;
  auto o = bellman_oracle(m).cost;
  // The solvers must agree with the oracle on every desk instance as well.
  for (auto k : kAllSolvers) {
    auto s = solve(m, k, {});
    EXPECT_EQ(s.cost.has_value(), o.has_value()) << to_string(k) << "\n" << text;
    if (o && s.cost) { EXPECT_EQ(*s.cost, *o) << to_string(k) << "\n" << text; }
  }
  return o;
}

std::string with_desk_c(const std::string& head, const std::string& tail) { return head + kDeskC + tail; }

}  // namespace

TEST(Tsptw, DeskExamples) {
  EXPECT_EQ(*optimum(ProblemClass::Tsptw, with_desk_c("3\n", "0 10\n0 10\n0 10\n")), Number(6));
  EXPECT_FALSE(optimum(ProblemClass::Tsptw, with_desk_c("3\n", "0 10\n0 1\n0 10\n")));
  EXPECT_EQ(*optimum(ProblemClass::Tsptw, "1\n0\n0 10\n"), Number(0));
}

TEST(Cvrp, DeskExamples) {
  EXPECT_EQ(*optimum(ProblemClass::Cvrp, with_desk_c("3 2 1\n0 1 1\n", "")), Number(10));
  EXPECT_EQ(*optimum(ProblemClass::Cvrp, with_desk_c("3 1 5\n0 1 1\n", "")), Number(6));
  EXPECT_FALSE(optimum(ProblemClass::Cvrp, with_desk_c("3 1 1\n0 1 1\n", "")));
}

TEST(Mpdtsp, DeskExamples) {
  EXPECT_EQ(*optimum(ProblemClass::Mpdtsp, with_desk_c("3 0 1\n", "")), Number(3));
  EXPECT_EQ(*optimum(ProblemClass::Mpdtsp, with_desk_c("3 1 1\n", "1 2 1\n")), Number(3));
  EXPECT_FALSE(optimum(ProblemClass::Mpdtsp, with_desk_c("3 1 0\n", "1 2 1\n")));
}

TEST(Mpdtsp, PickupAtTheStartDepotCountsTowardsTheLoad) {
  // Commodity from 0 to 2 of size 2 with capacity 1 can never be carried.
  EXPECT_FALSE(optimum(ProblemClass::Mpdtsp, with_desk_c("3 1 1\n", "0 2 2\n")));
  EXPECT_EQ(*optimum(ProblemClass::Mpdtsp, with_desk_c("3 1 2\n", "0 2 2\n")), Number(3));
}

TEST(Mpdtsp, EdgePreprocessingKeepsTheOptimum) {
  bench::ParseOptions opt;
  opt.preprocess_edges = true;
  for (const auto& c : suite::cases(ProblemClass::Mpdtsp, 30, 5)) {
    auto plain = bellman_oracle(c.model).cost;
    auto pre = bellman_oracle(bench::build(bench::parse_instance(ProblemClass::Mpdtsp, c.text, opt))).cost;
    ASSERT_EQ(plain.has_value(), pre.has_value()) << c.text;
    if (plain) { EXPECT_EQ(*plain, *pre) << c.text; }
  }
}

TEST(Optw, DeskExamples) {
  EXPECT_EQ(*optimum(ProblemClass::Optw, "2\n0 2\n2 0\n0 10 0\n0 10 5\n"), Number(5));
  EXPECT_EQ(*optimum(ProblemClass::Optw, "2\n0 2\n2 0\n0 3 0\n0 10 5\n"), Number(0));
  EXPECT_EQ(*optimum(ProblemClass::Optw, "1\n0\n0 10 0\n"), Number(0));
}

TEST(Optw, LateOpeningCustomerIsDiscarded) {
  // Reachable by its deadline, but waiting until 30 leaves no time to return.
  EXPECT_EQ(*optimum(ProblemClass::Optw, "2\n0 14\n14 0\n0 32 0\n30 65 7\n"), Number(0));
}

TEST(Mdkp, DeskExamples) {
  EXPECT_EQ(*optimum(ProblemClass::Mdkp, "2 1\n3 4\n2 3\n4\n"), Number(4));
  EXPECT_EQ(*optimum(ProblemClass::Mdkp, "2 1\n3 4\n2 3\n5\n"), Number(7));
  EXPECT_EQ(*optimum(ProblemClass::Mdkp, "0 1\n4\n"), Number(0));
}

TEST(Mdkp, FractionalDataNeedsTheContinuousFlag) {
  const char* text = "2 1\n3 4\n2.5 3\n4\n";
  EXPECT_THROW(bench::parse_instance(ProblemClass::Mdkp, text), ModelError);
  bench::ParseOptions opt;
  opt.continuous = true;
  EXPECT_EQ(*optimum(ProblemClass::Mdkp, text, opt), Number(4.0));
}

TEST(BinPacking, DeskExamples) {
  EXPECT_EQ(*optimum(ProblemClass::BinPacking, "8\n4\n5 4 3 3\n"), Number(2));
  EXPECT_EQ(*optimum(ProblemClass::BinPacking, "8\n1\n5\n"), Number(1));
}

TEST(BinPacking, FirstBoundAtTarget) {
  Model m = bench::build_binpacking(bench::parse_binpacking("8\n4\n5 4 3 3\n"));
  io::ExprContext ctx{m.meta, m.tables, {}};
  auto lb1 = io::parse_numeric("(ceil (/ (- (sum w U) r) 8))", ctx);
  EXPECT_EQ(eval_numeric(lb1, m.target, m.tables), Number(2));
  EXPECT_EQ(*eval_dual_bound(m, m.target), Number(2));
}

TEST(Salbp1, DeskExamples) {
  EXPECT_EQ(*optimum(ProblemClass::Salbp1, "3\n6\n3 3 3\n"), Number(2));
  EXPECT_EQ(*optimum(ProblemClass::Salbp1, "3\n6\n3 3 3\n0 1\n1 2\n"), Number(2));
  EXPECT_EQ(*optimum(ProblemClass::Salbp1, "3\n6\n6 6 6\n"), Number(3));
}

TEST(Salbp1, CyclicPrecedenceIsRejected) {
  EXPECT_THROW(bench::parse_salbp1("2\n6\n3 3\n0 1\n1 0\n"), ModelError);
}

TEST(Wt, DeskExamples) {
  EXPECT_EQ(*optimum(ProblemClass::Wt, "2\n2 3\n2 2\n1 1\n"), Number(3));
  EXPECT_EQ(*optimum(ProblemClass::Wt, "2\n2 3\n5 5\n1 1\n"), Number(0));
  EXPECT_EQ(*optimum(ProblemClass::Wt, "1\n5\n0\n2\n"), Number(10));
}

TEST(Talent, DeskExamples) {
  EXPECT_EQ(*optimum(ProblemClass::Talent, "2 2\n1 1 1\n0 1 1\n1 1\n"), Number(3));
  // One scene: duration times the cost of its cast.
  EXPECT_EQ(*optimum(ProblemClass::Talent, "1 2\n1 3\n1 4\n5\n"), Number(35));
}

TEST(Talent, OnLocationSet) {
  Model m = bench::build_talent(bench::parse_talent("2 2\n1 1 1\n0 1 1\n1 1\n"));
  io::ExprContext ctx{m.meta, m.tables, {}};
  auto L = io::parse_set("(intersection (union_all A Q) (union_all A (complement Q)))", ctx);
  State s = m.target;
  s.sets[m.meta.find("Q")->index] = Set(2, {1});
  EXPECT_EQ(eval_set(L, s, m.tables), Set(2, {0}));
}

TEST(Talent, IdenticalCastsAreMerged) {
  auto x = bench::parse_talent("3 2\n1 1 1 1\n0 0 1 1\n1 2 3\n");
  EXPECT_EQ(x.cast.size(), 2u);
  EXPECT_EQ(x.duration[0], 3);  // scenes 0 and 1 share the cast {a}
}

TEST(Mosp, DeskExamples) {
  EXPECT_EQ(*optimum(ProblemClass::Mosp, "2 2\n1 0\n0 1\n"), Number(1));
  EXPECT_EQ(*optimum(ProblemClass::Mosp, "2 1\n1\n1\n"), Number(2));
  EXPECT_EQ(*optimum(ProblemClass::Mosp, "1 1\n1\n"), Number(1));
}

TEST(GraphClear, DeskExamples) {
  EXPECT_EQ(*optimum(ProblemClass::GraphClear, "2\n1 1\n0 1\n1 0\n"), Number(2));
  EXPECT_EQ(*optimum(ProblemClass::GraphClear, "1\n3\n0\n"), Number(3));
}

TEST(GraphClear, TriangleUnderTheLiteralSweepCost) {
  // First sweep: a = 1 plus both incident edges = 3. Second sweep: 1 + 2 for
  // its own edges + 1 for the edge from the swept node to the last one = 4.
  std::string text = "3\n1 1 1\n0 1 1\n1 0 1\n1 1 0\n";
  auto x = bench::parse_graphclear(text);
  EXPECT_EQ(*bf::graphclear(x), 4);
  EXPECT_EQ(*optimum(ProblemClass::GraphClear, text), Number(4));
}

TEST(ParseInstance, TsptwShortestPaths) {
  auto x = bench::parse_tsptw("3\n0 2 5\n2 0 1\n3 1 0\n0 10\n0 10\n0 10\n");
  EXPECT_EQ(x.cstar[0][2], 3);  // 0 -> 1 -> 2
  EXPECT_EQ(x.cstar[2][0], 3);
  EXPECT_EQ(x.cin[0], 2);
  EXPECT_EQ(x.cout[2], 1);
}

TEST(ParseInstance, BinPackingBoundCoefficients) {
  auto x = bench::parse_binpacking("8\n4\n5 4 3 3");
  EXPECT_EQ(x.lb2_a, (std::vector<std::int64_t>{1, 0, 0, 0}));
  EXPECT_EQ(x.lb2_b, (std::vector<double>{0, 0.5, 0, 0}));
}

TEST(ParseInstance, Errors) {
  for (auto cls : bench::kAllClasses) EXPECT_THROW(bench::parse_instance(cls, ""), ParseError) << bench::to_string(cls);
  EXPECT_THROW(bench::parse_tsptw("2\n0 1\n1 0\n0 10\n"), ParseError);            // missing window
  EXPECT_THROW(bench::parse_tsptw("1\n0\n0 10\n7\n"), ParseError);                 // trailing data
  EXPECT_THROW(bench::parse_binpacking("8\n2\n5 x\n"), ParseError);                // malformed number
  EXPECT_THROW(bench::parse_binpacking("8\n2\n5 9\n"), ModelError);                // item larger than a bin
  EXPECT_THROW(bench::parse_graphclear("2\n1 1\n0 1\n2 0\n"), ModelError);         // asymmetric
  EXPECT_EQ(bench::parse_problem_class("tsp2"), std::nullopt);
  for (auto cls : bench::kAllClasses) EXPECT_EQ(bench::parse_problem_class(bench::to_string(cls)), cls);
}

// Every builder against enumeration on the raw data, plus structural checks
// on every state the oracle visits:
//  - the dual bound never cuts off the optimum of that state,
//  - restricting to forced transitions does not change the state's value,
//  - a state that dominates another is at least as good.
class ClassProperties : public ::testing::TestWithParam<ProblemClass> {};

TEST_P(ClassProperties, OracleBoundsForcedAndDominance) {
  ProblemClass cls = GetParam();
  for (const auto& c : suite::cases(cls, 100, 424242)) {
    const Model& m = c.model;
    ASSERT_FALSE(has_errors(validate(m))) << c.text;
    BellmanOracle oracle(m);
    BellmanOracle forced(m, true);
    auto r = oracle.solve();
    std::optional<std::int64_t> got;
    if (r.cost) got = r.cost->as_int();
    EXPECT_EQ(got, c.expected) << c.text;

    std::map<std::size_t, std::vector<std::pair<const State*, Number>>> by_key;
    for (const auto& [s, v] : oracle.memo()) {
      if (!check_constraints(m, s)) continue;
      if (auto h = eval_dual_bound(m, s)) {
        EXPECT_TRUE(m.cost.better_or_equal(*h, v)) << "bound " << h->to_string() << " vs " << v.to_string() << "\n"
                                                   << c.text;
      }
      EXPECT_EQ(forced.value(s), v) << c.text;
      by_key[non_resource_key(m.meta, s).hash()].push_back({&s, v});
    }
    for (const auto& [key, group] : by_key)
      for (const auto& [a, va] : group)
        for (const auto& [b, vb] : group)
          if (non_resource_key(m.meta, *a) == non_resource_key(m.meta, *b) && weakly_dominates(m.meta, *a, *b)) {
            EXPECT_TRUE(m.cost.better_or_equal(va, vb)) << c.text;
          }
  }
}

INSTANTIATE_TEST_SUITE_P(AllClasses, ClassProperties, ::testing::ValuesIn(bench::kAllClasses),
                         [](const auto& info) { return std::string(bench::to_string(info.param)); });
