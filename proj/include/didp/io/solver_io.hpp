#pragma once

#include <yaml-cpp/yaml.h>

#include <string>

#include "didp/io/yaml_model.hpp"
#include "didp/search/solvers.hpp"

namespace didp::io {

struct SolverConfig {
  SolverKind solver = SolverKind::Cabs;
  SolverParams params;
};

inline SolverConfig parse_solver_config(const std::string& text) {
  using namespace detail;
  SolverConfig c;
  YAML::Node root = load_yaml(text);
  if (!root || root.IsNull()) return c;
  check_keys(root,
             {"solver", "time_limit", "primal_bound", "beam_initial_width", "beam_growth", "acps_initial_width",
              "acps_step", "apps_initial_width", "apps_step", "apps_max_width", "dbdfs_k", "dominance",
              "trivial_bound"},
             "solver config");
  if (auto s = root["solver"]) {
    std::string name = scalar(s, "solver");
    auto k = parse_solver_kind(name);
    if (!k) throw ParseError("unknown solver '" + name + "'");
    c.solver = *k;
  }
  auto& p = c.params;
  if (auto t = root["time_limit"]) {
    double v = number(t, "time_limit", false).as_double();
    if (v < 0) throw ParseError("time_limit must be nonnegative");
    p.time_limit = v;
  }
  if (auto b = root["primal_bound"]) p.primal_bound = number(b, "primal_bound", false);
  auto width = [&](const char* key, std::size_t& dst, std::size_t min) {
    if (auto n = root[key]) {
      std::int64_t v = integer(n, key);
      if (v < static_cast<std::int64_t>(min)) throw ParseError(std::string(key) + " must be at least " + std::to_string(min));
      dst = static_cast<std::size_t>(v);
    }
  };
  width("beam_initial_width", p.beam_initial_width, 1);
  width("beam_growth", p.beam_growth, 2);
  width("acps_initial_width", p.acps_initial_width, 1);
  width("acps_step", p.acps_step, 1);
  width("apps_initial_width", p.apps_initial_width, 1);
  width("apps_step", p.apps_step, 1);
  width("dbdfs_k", p.dbdfs_k, 1);
  if (auto n = root["apps_max_width"]) {
    std::size_t v = 1;
    width("apps_max_width", v, 1);
    p.apps_max_width = v;
  }
  if (auto n = root["dominance"]) p.use_dominance = boolean(n, "dominance");
  if (auto n = root["trivial_bound"]) p.bound_mode = boolean(n, "trivial_bound") ? BoundMode::Trivial : BoundMode::Model;
  return c;
}

// Line-oriented record. Timing is left out so that repeated runs produce
// identical files.
inline std::string write_solution(const Solution& s) {
  std::string out;
  out += "status: " + std::string(to_string(s.status)) + "\n";
  out += "cost: " + (s.cost ? s.cost->to_string() : std::string("none")) + "\n";
  out += "bound: " + (s.bound ? s.bound->to_string() : std::string("none")) + "\n";
  out += "transitions: " + std::to_string(s.transition_names.size()) + "\n";
  for (const auto& n : s.transition_names) out += n + "\n";
  out += "expanded: " + std::to_string(s.stats.expanded) + "\n";
  out += "generated: " + std::to_string(s.stats.generated) + "\n";
  return out;
}

}  // namespace didp::io
