#include <gtest/gtest.h>

#include "didp/benchmarks/benchmarks.hpp"
#include "didp/oracle.hpp"
#include "didp/search/solvers.hpp"
#include "support/suite.hpp"

using namespace didp;
using bench::ProblemClass;

namespace {

const char* kDeskTsptw =
    "3\n"
    "0 2 3\n2 0 1\n3 1 0\n"
    "0 10\n0 10\n0 10\n";
const char* kInfeasibleTsptw =
    "3\n"
    "0 2 3\n2 0 1\n3 1 0\n"
    "0 10\n0 0\n0 10\n";

Model desk() { return bench::build_tsptw(bench::parse_tsptw(kDeskTsptw)); }
Model model_of(ProblemClass cls, const char* text) { return bench::build(bench::parse_instance(cls, text)); }

void expect_optimal(const Solution& s, std::int64_t cost) {
  EXPECT_EQ(s.status, Status::Optimal);
  ASSERT_TRUE(s.cost);
  EXPECT_EQ(*s.cost, Number(cost));
  ASSERT_TRUE(s.bound);
  EXPECT_EQ(*s.bound, Number(cost));
}

}  // namespace

TEST(GenericSearch, CaasdyDeskTsptw) {
  Model m = desk();
  auto s = caasdy(m, {});
  expect_optimal(s, 6);
  EXPECT_EQ(s.transitions.size(), 2u);
  EXPECT_EQ(*solution_cost(m, s.transitions), Number(6));
  EXPECT_EQ(*s.first_solution_cost, Number(6));
}

TEST(GenericSearch, EverySolverReportsInfeasibility) {
  Model m = bench::build_tsptw(bench::parse_tsptw(kInfeasibleTsptw));
  for (auto k : kAllSolvers) {
    auto s = solve(m, k, {});
    EXPECT_EQ(s.status, Status::Infeasible) << to_string(k);
    EXPECT_FALSE(s.cost) << to_string(k);
    EXPECT_TRUE(s.transitions.empty()) << to_string(k);
  }
}

TEST(GenericSearch, TargetViolatingAConstraintIsInfeasible) {
  Model m = desk();
  m.constraints.push_back(ex::boolean(false));
  for (auto k : kAllSolvers) EXPECT_EQ(solve(m, k, {}).status, Status::Infeasible) << to_string(k);
}

TEST(Solvers, DeskExamples) {
  expect_optimal(dfbnb(model_of(ProblemClass::BinPacking, "8\n4\n5 4 3 3\n"), {}), 2);
  expect_optimal(cbfs(model_of(ProblemClass::Talent, "2 2\n1 1 1\n0 1 1\n1 1\n"), {}), 3);
  expect_optimal(acps(model_of(ProblemClass::Wt, "2\n2 3\n2 2\n1 1\n"), {}), 3);
  expect_optimal(apps(model_of(ProblemClass::Mosp, "2 2\n1 0\n0 1\n"), {}), 1);
  expect_optimal(dbdfs(desk(), {}), 6);
}

TEST(Solvers, AllSolversOnDeskTsptwAreDeterministic) {
  Model m = desk();
  for (auto k : kAllSolvers) {
    auto a = solve(m, k, {}), b = solve(m, k, {});
    expect_optimal(a, 6);
    EXPECT_EQ(a.transitions, b.transitions) << to_string(k);
    EXPECT_EQ(a.stats.expanded, b.stats.expanded) << to_string(k);
  }
}

TEST(BeamSearch, WidthOneOnDesk) {
  auto [s, complete] = beam_search(desk(), 1, {});
  ASSERT_TRUE(s.cost);
  EXPECT_EQ(*s.cost, Number(6));
  (void)complete;
}

TEST(BeamSearch, WideBeamIsComplete) {
  Model m = desk();
  std::size_t reachable = bellman_oracle(m).memo_size;
  auto [s, complete] = beam_search(m, reachable, {});
  EXPECT_TRUE(complete);
  expect_optimal(s, 6);
}

TEST(BeamSearch, OptimalInputBoundLeavesNothingToFind) {
  Model m = desk();
  SolverParams p;
  p.primal_bound = Number(6);
  auto [s, complete] = beam_search(m, bellman_oracle(m).memo_size, p);
  EXPECT_TRUE(complete);
  EXPECT_FALSE(s.cost);
  EXPECT_TRUE(s.transitions.empty());
  EXPECT_EQ(s.status, Status::NoSolutionFound);
}

TEST(Cabs, DeskExamples) {
  expect_optimal(cabs(desk(), {}), 6);
  EXPECT_EQ(cabs(bench::build_tsptw(bench::parse_tsptw(kInfeasibleTsptw)), {}).status, Status::Infeasible);
  expect_optimal(cabs(model_of(ProblemClass::Salbp1, "3\n6\n3 3 3\n"), {}), 2);
}

TEST(Cabs, MaximizationModels) {
  expect_optimal(cabs(model_of(ProblemClass::Mdkp, "2 1\n3 4\n2 3\n4\n"), {}), 4);
  expect_optimal(cabs(model_of(ProblemClass::Optw, "2\n0 2\n2 0\n0 10 0\n0 10 5\n"), {}), 5);
}

TEST(DualBound, InitialAndFinal) {
  for (auto k : kAllSolvers) {
    auto s = solve(desk(), k, {});
    ASSERT_FALSE(s.dual_events.empty()) << to_string(k);
    EXPECT_EQ(s.dual_events.front().bound, Number(4)) << to_string(k);
    EXPECT_EQ(s.dual_events.back().bound, Number(6)) << to_string(k);
  }
}

TEST(DualBound, ImmediateTimeoutKeepsTheRootBound) {
  SolverParams p;
  p.time_limit = 0.0;
  for (auto k : kAllSolvers) {
    auto s = solve(desk(), k, p);
    EXPECT_EQ(s.status, Status::NoSolutionFound) << to_string(k);
    ASSERT_TRUE(s.bound) << to_string(k);
    EXPECT_EQ(*s.bound, Number(4)) << to_string(k);
  }
}

TEST(DualBound, AbsentWithoutBoundFunctions) {
  Model m = desk();
  m.dual_bounds.clear();
  SolverParams p;
  p.time_limit = 0.0;
  for (auto k : kAllSolvers) EXPECT_FALSE(solve(m, k, p).bound) << to_string(k);
  // Exhaustive search still proves optimality.
  for (auto k : kAllSolvers) expect_optimal(solve(m, k, {}), 6);
}

TEST(PrimalBound, GenericSearchWithOptimalInputBound) {
  SolverParams p;
  p.primal_bound = Number(6);
  for (auto k : kAllSolvers) {
    auto s = solve(desk(), k, p);
    EXPECT_FALSE(s.cost) << to_string(k);
    EXPECT_EQ(s.status, Status::NoSolutionFound) << to_string(k);
  }
  p.primal_bound = Number(7);
  for (auto k : kAllSolvers) expect_optimal(solve(desk(), k, p), 6);
}

TEST(Callbacks, ReceiveEveryEvent) {
  SolverParams p;
  std::size_t primal = 0, dual = 0;
  p.on_primal = [&](double, const Number&, const std::vector<std::string>& names) {
    EXPECT_EQ(names.size(), 2u);
    ++primal;
  };
  p.on_dual = [&](double, const Number&) { ++dual; };
  auto s = cabs(desk(), p);
  EXPECT_EQ(primal, s.primal_events.size());
  EXPECT_EQ(dual, s.dual_events.size());
}

// Non-default widths and depths, on a few random instances of every class.
TEST(Solvers, ParameterVariantsAgreeWithOracle) {
  for (auto cls : bench::kAllClasses) {
    for (const auto& c : suite::cases(cls, 8, 99)) {
      auto want = bellman_oracle(c.model).cost;
      SolverParams p;
      p.beam_initial_width = 3;
      p.beam_growth = 3;
      p.acps_initial_width = 2;
      p.acps_step = 2;
      p.apps_initial_width = 2;
      p.apps_step = 3;
      p.apps_max_width = 4;
      p.dbdfs_k = 3;
      for (auto k : kAllSolvers) {
        auto s = solve(c.model, k, p);
        EXPECT_EQ(s.cost.has_value(), want.has_value()) << to_string(k) << "\n" << c.text;
        if (want && s.cost) { EXPECT_EQ(*s.cost, *want) << to_string(k) << "\n" << c.text; }
      }
    }
  }
}
