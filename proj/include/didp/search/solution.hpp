#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "didp/number.hpp"

namespace didp {

enum class Status { Optimal, Infeasible, FeasibleNotProved, NoSolutionFound };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::FeasibleNotProved: return "feasible-not-proved";
    case Status::NoSolutionFound: return "no-solution-found";
  }
  return "?";
}

struct PrimalEvent {
  double time = 0;
  Number cost;
};

struct DualEvent {
  double time = 0;
  Number bound;
};

struct Statistics {
  std::uint64_t expanded = 0;
  std::uint64_t generated = 0;
  double elapsed = 0;
};

struct Solution {
  Status status = Status::NoSolutionFound;
  std::optional<Number> cost;   // primal bound
  std::optional<Number> bound;  // dual bound
  std::vector<std::size_t> transitions;
  std::vector<std::string> transition_names;
  Statistics stats;
  std::vector<PrimalEvent> primal_events;
  std::vector<DualEvent> dual_events;
  std::optional<Number> first_solution_cost;
};

// How dual bounds are obtained during search. Trivial replaces the model's
// bounds by the weakest valid one (used for ablations).
enum class BoundMode { Model, Trivial };

struct SolverParams {
  std::optional<double> time_limit;   // wall-clock seconds
  std::optional<Number> primal_bound;  // only strictly better solutions are sought

  std::size_t beam_initial_width = 1;
  std::size_t beam_growth = 2;
  std::size_t acps_initial_width = 1;
  std::size_t acps_step = 1;
  std::size_t apps_initial_width = 1;
  std::size_t apps_step = 1;
  std::optional<std::size_t> apps_max_width;  // unbounded when absent
  std::size_t dbdfs_k = 1;

  bool use_dominance = true;
  BoundMode bound_mode = BoundMode::Model;

  std::function<void(double, const Number&, const std::vector<std::string>&)> on_primal;
  std::function<void(double, const Number&)> on_dual;
};

}  // namespace didp
