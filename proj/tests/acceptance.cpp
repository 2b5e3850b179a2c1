// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes. Details of the first few failures go to stderr.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "didp/benchmarks/benchmarks.hpp"
#include "didp/io/solver_io.hpp"
#include "didp/io/yaml_model.hpp"
#include "didp/metrics.hpp"
#include "didp/oracle.hpp"
#include "didp/search/solvers.hpp"
#include "didp/validate.hpp"
#include "support/suite.hpp"

using namespace didp;
using bench::ProblemClass;

namespace {

constexpr std::size_t kInstancesPerClass = 100;

struct Tally {
  std::size_t checks = 0, failures = 0;
  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (++failures <= 5) std::cerr << "  " << what << "\n";
  }
};

bool report(int id, const char* name, const Tally& t, const std::string& detail = "") {
  bool ok = t.checks > 0 && t.failures == 0;
  std::printf("%s criterion %d (%s): %zu checks, %zu failures%s%s\n", ok ? "PASS" : "FAIL", id, name, t.checks,
              t.failures, detail.empty() ? "" : "; ", detail.c_str());
  std::fflush(stdout);
  return ok;
}

std::string show(const std::optional<Number>& n) { return n ? n->to_string() : "none"; }

bool same_cost(const std::optional<Number>& a, const std::optional<Number>& b) {
  return a.has_value() == b.has_value() && (!a || *a == *b);
}

std::optional<double> as_double(const std::optional<Number>& n) {
  if (!n || n->is_infinite()) return std::nullopt;
  return n->as_double();
}

bool first_solution_class(ProblemClass c) {
  switch (c) {
    case ProblemClass::BinPacking:
    case ProblemClass::Salbp1:
    case ProblemClass::Wt:
    case ProblemClass::Talent:
    case ProblemClass::Mosp:
    case ProblemClass::GraphClear: return true;
    default: return false;
  }
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  bool all = true;

  // Criteria 1-4 and 6 share one pass over the oracle suites.
  Tally c1, c2, c3, c4, c6;
  std::size_t brute_mismatch = 0, instances = 0, trivial_more = 0, nodom_more = 0;
  for (auto cls : bench::kAllClasses) {
    for (const auto& c : suite::cases(cls, kInstancesPerClass)) {
      ++instances;
      const Model& m = c.model;
      std::string where = std::string(bench::to_string(cls)) + " instance:\n" + c.text;
      auto opt = bellman_oracle(m).cost;
      std::optional<std::int64_t> opt_int;
      if (opt) opt_int = opt->as_int();
      if (opt_int != c.expected) {
        ++brute_mismatch;
        c1.check(false, "oracle " + show(opt) + " differs from enumeration on " + where);
      }
      const CostStructure& cost = m.cost;

      for (auto k : kAllSolvers) {
        std::string who = std::string(to_string(k)) + " on " + where;
        Solution s = solve(m, k, {});
        c1.check(same_cost(s.cost, opt), who + ": got " + show(s.cost) + ", oracle " + show(opt));
        if (s.cost) c1.check(solution_cost(m, s.transitions) == s.cost, who + ": reported path does not cost " + show(s.cost));

        if (k == SolverKind::Caasdy && first_solution_class(cls))
          c2.check(same_cost(s.first_solution_cost, opt),
                   who + ": first solution " + show(s.first_solution_cost) + ", optimum " + show(opt));

        for (const auto& e : s.primal_events)
          c3.check(opt && cost.better_or_equal(*opt, e.cost), who + ": primal event " + e.cost.to_string() +
                                                                  " beats optimum " + show(opt));
        for (const auto& e : s.dual_events)
          c3.check(!opt || cost.better_or_equal(e.bound, *opt),
                   who + ": dual event " + e.bound.to_string() + " cuts off optimum " + show(opt));

        for (std::size_t j = 1; j < s.primal_events.size(); ++j)
          c4.check(cost.better(s.primal_events[j].cost, s.primal_events[j - 1].cost), who + ": primal not improving");
        for (std::size_t j = 1; j < s.dual_events.size(); ++j)
          c4.check(cost.better_or_equal(s.dual_events[j - 1].bound, s.dual_events[j].bound) &&
                       s.dual_events[j].time >= s.dual_events[j - 1].time,
                   who + ": dual bound moved backwards");
        double gap = optimality_gap(as_double(s.cost), as_double(s.bound), s.status == Status::Infeasible);
        c4.check(gap == 0.0 && (s.status == Status::Optimal || s.status == Status::Infeasible),
                 who + ": natural termination with gap " + std::to_string(gap));
      }

      SolverParams full_p, trivial_p, nodom_p;
      trivial_p.bound_mode = BoundMode::Trivial;
      nodom_p.use_dominance = false;
      Solution full = cabs(m, full_p), trivial = cabs(m, trivial_p), nodom = cabs(m, nodom_p);
      c6.check(same_cost(trivial.cost, opt), "cabs with trivial bound on " + where + ": " + show(trivial.cost));
      c6.check(same_cost(nodom.cost, opt), "cabs without dominance on " + where + ": " + show(nodom.cost));
      trivial_more += trivial.stats.expanded >= full.stats.expanded;
      nodom_more += nodom.stats.expanded >= full.stats.expanded;
    }
  }
  double trivial_share = static_cast<double>(trivial_more) / static_cast<double>(instances);
  double nodom_share = static_cast<double>(nodom_more) / static_cast<double>(instances);
  c6.check(trivial_share >= 0.9, "trivial bound expands at least as much in only " + std::to_string(trivial_share));
  c6.check(nodom_share >= 0.9, "no dominance expands at least as much in only " + std::to_string(nodom_share));

  all &= report(1, "oracle equivalence", c1,
                std::to_string(instances) + " instances x 7 solvers, oracle vs enumeration mismatches " +
                    std::to_string(brute_mismatch));
  all &= report(2, "CAASDy first solution optimal", c2);
  all &= report(3, "dual <= optimum <= primal at every event", c3);
  all &= report(4, "anytime contract", c4);

  {
    Tally t;
    Model m = bench::build_tsptw(bench::parse_tsptw("3\n0 2 3\n2 0 1\n3 1 0\n0 10\n0 10\n0 10\n"));
    std::size_t reachable = bellman_oracle(m).memo_size;
    auto [s, complete] = beam_search(m, reachable, {});
    t.check(complete, "wide beam not complete");
    t.check(s.cost && *s.cost == Number(6) && s.status == Status::Optimal, "wide beam cost " + show(s.cost));
    SolverParams p;
    p.primal_bound = Number(6);
    auto [none, complete2] = beam_search(m, reachable, p);
    t.check(complete2, "bounded beam not complete");
    t.check(!none.cost && none.transitions.empty() && none.status == Status::NoSolutionFound,
            "bounded beam returned " + show(none.cost));
    all &= report(5, "beam completeness", t, "width " + std::to_string(reachable));
  }

  all &= report(6, "pruning ablations", c6,
                "trivial bound >= full expansions in " + std::to_string(trivial_share * 100) +
                    "%, no dominance in " + std::to_string(nodom_share * 100) + "%");

  {
    Tally t;
    std::string fx = DIDP_FIXTURES;
    std::string domain = read(fx + "/tsptw_domain.yaml"), problem = read(fx + "/tsptw_problem.yaml");
    Model m = io::load_model(domain, problem);
    t.check(m.transitions.size() == 3, "ground transitions: " + std::to_string(m.transitions.size()));
    t.check(!has_errors(validate(m, {false, true})), "fixture does not validate");
    Model built = bench::build_tsptw(bench::parse_tsptw(
        "4\n0 3 4 5\n3 0 5 4\n4 5 0 3\n5 4 3 0\n0 100\n5 16\n0 10\n8 14\n"));
    Solution a = cabs(m, {}), b = cabs(m, {}), ref = cabs(built, {});
    t.check(a.cost && same_cost(a.cost, ref.cost), "yaml " + show(a.cost) + " vs builder " + show(ref.cost));
    t.check(same_cost(a.cost, bellman_oracle(built).cost), "builder oracle disagrees");
    t.check(io::write_solution(a) == io::write_solution(b), "solution files differ between runs");
    auto files = io::export_model(built);
    Model back = io::load_model(files.domain, files.problem);
    t.check(same_cost(cabs(back, {}).cost, ref.cost), "exported builder model solves differently");
    t.check(io::export_model(back).domain == files.domain && io::export_model(back).problem == files.problem,
            "export is not a fixpoint");
    all &= report(7, "YAML round trip", t, "cost " + show(a.cost));
  }

  {
    Tally t;
    t.check(optimality_gap(10.0, 5.0) == 0.5, "gap(10,5)");
    t.check(optimality_gap(0.0, 0.0) == 0.0, "gap(0,0)");
    t.check(optimality_gap(6.0, std::nullopt) == 1.0, "gap(6,none)");
    t.check(primal_integral({{2.0, 12.0}, {6.0, 6.0}}, 6.0, 10.0) == 4.0, "three-phase integral");
    t.check(primal_integral({{0.0, 6.0}}, 6.0, 10.0) == 0.0, "immediate optimum");
    t.check(primal_integral({}, 6.0, 10.0) == 10.0, "no events");
    all &= report(8, "metrics", t);
  }

  {
    // Random walks from the target through states that satisfy the
    // constraints, stopping at base states; the path cost is recomputed here
    // step by step and compared with solution_cost.
    Tally t;
    std::mt19937_64 rng(2024);
    std::vector<suite::Case> pool;
    for (auto cls : bench::kAllClasses)
      for (auto& c : suite::cases(cls, 10, 77)) pool.push_back(std::move(c));
    std::size_t produced = 0, attempts = 0;
    while (produced < 1000 && attempts < 200000) {
      ++attempts;
      const Model& m = pool[rng() % pool.size()].model;
      if (!check_constraints(m, m.target)) continue;
      State s = m.target;
      std::vector<std::size_t> seq;
      std::vector<Number> weights;
      bool dead = false;
      while (!base_cost(m, s)) {
        std::vector<std::size_t> options;
        for (auto k : applicable_transitions(m, s, false))
          if (check_constraints(m, successor(m, m.transitions[k], s))) options.push_back(k);
        if (options.empty()) {
          dead = true;
          break;
        }
        std::size_t k = options[rng() % options.size()];
        weights.push_back(transition_weight(m, m.transitions[k], s));
        s = successor(m, m.transitions[k], s);
        seq.push_back(k);
      }
      if (dead) continue;
      Number folded = *base_cost(m, s);
      for (std::size_t j = weights.size(); j > 0; --j) folded = combine(m.cost, weights[j - 1], folded);
      auto reported = solution_cost(m, seq);
      t.check(reported && *reported == folded, "path cost " + show(reported) + " vs fold " + folded.to_string());
      ++produced;
    }
    t.check(produced == 1000, "only " + std::to_string(produced) + " solutions generated");
    all &= report(9, "path cost is the fold of the weights", t, std::to_string(produced) + " random solutions");
  }

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s (%.1f s)\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL", secs);
  return all ? 0 : 1;
}
