#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "didp/eval.hpp"
#include "didp/io/parse_expr.hpp"
#include "didp/io/solver_io.hpp"
#include "didp/io/yaml_model.hpp"
#include "didp/oracle.hpp"
#include "support/suite.hpp"

using namespace didp;

namespace {

std::string fixture(const char* name) {
  std::ifstream in(std::string(DIDP_FIXTURES) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Model fixture_model() { return io::load_model(fixture("tsptw_domain.yaml"), fixture("tsptw_problem.yaml")); }

// A set of items that can be removed one at a time, each at cost 1.
const char* kItemsDomain = R"(
cost_type: integer
objects: [item]
state_variables:
  - {name: U, type: set, object: item}
transitions:
  - name: take
    parameters: [{name: j, object: U}]
    effect: {U: (remove j U)}
    cost: (+ 1 cost)
base_cases:
  - conditions: [(is_empty U)]
    cost: 0
)";

}  // namespace

TEST(ParseExpression, CostWeight) {
  Model m = fixture_model();
  io::ExprContext ctx{m.meta, m.tables, {{"j", 1}}};
  auto w = io::parse_cost_weight("(+ (c i j) cost)", ctx, CostOp::Add);
  EXPECT_EQ(eval_numeric(w, m.target, m.tables), Number(3));
  EXPECT_THROW(io::parse_cost_weight("cost", ctx, CostOp::Add), ParseError);
  EXPECT_THROW(io::parse_cost_weight("(max (c i j) cost)", ctx, CostOp::Add), ParseError);
}

TEST(ParseExpression, EffectAndCondition) {
  Model m = fixture_model();
  io::ExprContext ctx{m.meta, m.tables, {{"j", 1}}};
  auto e = io::parse_numeric("(max (+ t (c i j)) (a j))", ctx);
  EXPECT_TRUE(e.is_integer());
  EXPECT_EQ(eval_numeric(e, m.target, m.tables), Number(5));  // max(0 + 3, 5)
  auto c = io::parse_condition("(is_empty U)", ctx);
  EXPECT_FALSE(eval_condition(c, m.target, m.tables));
}

TEST(ParseExpression, Errors) {
  Model m = fixture_model();
  io::ExprContext ctx{m.meta, m.tables, {}};
  EXPECT_THROW(io::parse_numeric("(+ 1", ctx), ParseError);
  EXPECT_THROW(io::parse_numeric("(nosuch 1 2)", ctx), ParseError);
  EXPECT_THROW(io::parse_numeric("(c 1)", ctx), ParseError);
  EXPECT_THROW(io::parse_condition("(is_empty t)", ctx), ParseError);
  EXPECT_THROW(io::parse_numeric("j", ctx), ParseError);  // unbound parameter
}

TEST(ParseDomain, FixtureCounts) {
  auto d = io::parse_domain(fixture("tsptw_domain.yaml"));
  EXPECT_EQ(d.cost_type, "integer");
  EXPECT_EQ(d.objects.size(), 1u);
  EXPECT_EQ(d.state_variables.size(), 3u);
  EXPECT_EQ(d.tables.size(), 6u);
  EXPECT_EQ(d.transitions.size(), 1u);
  EXPECT_EQ(d.constraints.size(), 1u);
  EXPECT_TRUE(d.constraints[0].forall);
  EXPECT_EQ(d.base_cases.size(), 1u);
  EXPECT_EQ(d.dual_bounds.size(), 2u);
}

TEST(ParseProblem, FixtureMatchesDomain) {
  auto p = io::parse_problem(fixture("tsptw_problem.yaml"));
  EXPECT_EQ(p.object_numbers.at("customer"), 4);
  EXPECT_EQ(p.target.size(), 3u);
  EXPECT_EQ(p.table_values.size(), 6u);
}

TEST(ParseDomain, Errors) {
  try {
    io::parse_domain("");
    FAIL() << "empty domain accepted";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("missing cost_type"), std::string::npos);
  }
  try {
    io::parse_domain("cost_type: integer\nfoo: 1\n");
    FAIL() << "unknown key accepted";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("foo"), std::string::npos);
  }
  EXPECT_THROW(io::parse_domain("cost_type: [oops"), ParseError);
}

TEST(Instantiate, FixtureGroundsThreeVisits) {
  Model m = fixture_model();
  ASSERT_EQ(m.transitions.size(), 3u);
  EXPECT_EQ(m.transitions[0].name, "visit 1");
  EXPECT_EQ(m.transitions[1].name, "visit 2");
  EXPECT_EQ(m.transitions[2].name, "visit 3");
  // U never grows, so the forall only needs the members of the target set.
  EXPECT_EQ(m.constraints.size(), 3u);
  EXPECT_EQ(m.base_cases.size(), 1u);
  EXPECT_EQ(m.dual_bounds.size(), 2u);
  EXPECT_EQ(m.cost.op, CostOp::Add);
  EXPECT_TRUE(m.cost.minimize());
}

TEST(Instantiate, FixtureOptimum) {
  // Tours from the depot; the cheapest feasible one is 0-2-3-1-0 = 4+3+4+3.
  EXPECT_EQ(*bellman_oracle(fixture_model()).cost, Number(14));
}

TEST(Instantiate, ZeroObjects) {
  Model m = io::load_model(kItemsDomain, "object_numbers: {item: 0}\ntarget: {U: []}\n");
  EXPECT_TRUE(m.transitions.empty());
  EXPECT_TRUE(m.target.sets[0].empty());
  EXPECT_EQ(*bellman_oracle(m).cost, Number(0));
  Model three = io::load_model(kItemsDomain, "object_numbers: {item: 3}\ntarget: {U: [0, 1, 2]}\n");
  EXPECT_EQ(three.transitions.size(), 3u);
  EXPECT_EQ(*bellman_oracle(three).cost, Number(3));
}

TEST(Instantiate, ProblemErrors) {
  EXPECT_THROW(io::load_model(kItemsDomain, "object_numbers: {item: 2}\ntarget: {U: [0, 5]}\n"), std::exception);
  EXPECT_THROW(io::load_model(kItemsDomain, "object_numbers: {item: 2}\ntarget: {}\n"), std::exception);
  EXPECT_THROW(io::load_model(kItemsDomain, "object_numbers: {}\ntarget: {U: []}\n"), std::exception);
}

TEST(SolverConfig, Parse) {
  auto c = io::parse_solver_config("{solver: cabs, time_limit: 10}");
  EXPECT_EQ(c.solver, SolverKind::Cabs);
  ASSERT_TRUE(c.params.time_limit);
  EXPECT_EQ(*c.params.time_limit, 10.0);
  auto d = io::parse_solver_config("{solver: dbdfs, dbdfs_k: 4, dominance: false, trivial_bound: true}");
  EXPECT_EQ(d.solver, SolverKind::Dbdfs);
  EXPECT_EQ(d.params.dbdfs_k, 4u);
  EXPECT_FALSE(d.params.use_dominance);
  EXPECT_EQ(d.params.bound_mode, BoundMode::Trivial);
  EXPECT_THROW(io::parse_solver_config("{solver: nosuch}"), ParseError);
  EXPECT_THROW(io::parse_solver_config("{solver: cabs, widht: 3}"), ParseError);
  EXPECT_THROW(io::parse_solver_config("{time_limit: -1}"), ParseError);
}

TEST(WriteSolution, SevenLinesPlusStatistics) {
  Solution s;
  s.status = Status::Optimal;
  s.cost = Number(6);
  s.bound = Number(6);
  s.transition_names = {"visit 1", "visit 2", "visit 3"};
  s.stats.expanded = 5;
  s.stats.generated = 9;
  EXPECT_EQ(io::write_solution(s),
            "status: optimal\ncost: 6\nbound: 6\ntransitions: 3\nvisit 1\nvisit 2\nvisit 3\n"
            "expanded: 5\ngenerated: 9\n");
}

// Exporting a built model and loading it back must give a model that
// evaluates identically, and exporting that again must give the same text.
TEST(ExportModel, RoundTripOnEveryClass) {
  for (auto cls : bench::kAllClasses) {
    for (const auto& c : suite::cases(cls, 10, 7)) {
      auto files = io::export_model(c.model);
      Model back = io::load_model(files.domain, files.problem);
      EXPECT_EQ(back.transitions.size(), c.model.transitions.size()) << bench::to_string(cls);
      EXPECT_EQ(back.target, c.model.target) << bench::to_string(cls);
      auto a = bellman_oracle(c.model).cost, b = bellman_oracle(back).cost;
      ASSERT_EQ(a.has_value(), b.has_value()) << c.text;
      if (a) { EXPECT_EQ(*a, *b) << c.text; }
      auto again = io::export_model(back);
      EXPECT_EQ(again.domain, files.domain) << bench::to_string(cls);
      EXPECT_EQ(again.problem, files.problem) << bench::to_string(cls);
    }
  }
}

TEST(ExportModel, ContinuousMdkp) {
  bench::ParseOptions opt;
  opt.continuous = true;
  Model m = bench::build(bench::parse_instance(bench::ProblemClass::Mdkp, "2 1\n3.5 4\n2 3.25\n4\n", opt));
  auto files = io::export_model(m);
  Model back = io::load_model(files.domain, files.problem);
  EXPECT_EQ(*bellman_oracle(back).cost, *bellman_oracle(m).cost);
  EXPECT_EQ(*bellman_oracle(m).cost, Number(4.0));
}
