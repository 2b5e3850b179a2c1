#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "didp/benchmarks/benchmarks.hpp"
#include "didp/io/solver_io.hpp"
#include "didp/io/yaml_model.hpp"
#include "didp/metrics.hpp"
#include "didp/validate.hpp"

namespace didp::cli {

enum ExitCode : int { kProved = 0, kUsageError = 1, kFeasibleNotProved = 2, kNothingFound = 3 };

inline int exit_code(Status s) {
  switch (s) {
    case Status::Optimal:
    case Status::Infeasible: return kProved;
    case Status::FeasibleNotProved: return kFeasibleNotProved;
    case Status::NoSolutionFound: return kNothingFound;
  }
  return kUsageError;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
  if (!out) throw ParseError("failed writing " + path);
}

inline std::optional<double> to_double(const std::optional<Number>& n) {
  if (!n || n->is_infinite()) return std::nullopt;
  return n->as_double();
}

struct SolveOptions {
  std::string domain_path, problem_path;
  std::optional<std::string> config_path;  // falls back to DIDP_SOLVER_CONFIG
  std::optional<std::string> output_path;
  std::optional<std::string> events_path;  // CSV "time,cost" of improving solutions
  std::optional<double> time_limit;        // overrides the config file
  std::optional<double> reference;         // best known cost, enables the primal integral
  bool quiet = false;
};

struct RunReport {
  std::string instance;
  std::string solver;
  SolverParams params;
  Solution solution;
  double gap = 1;
  std::optional<double> primal_integral;
};

inline std::string format_report(const RunReport& r) {
  std::ostringstream o;
  const auto& p = r.params;
  o << "instance: " << r.instance << "\n";
  o << "solver: " << r.solver << "\n";
  o << "time_limit: " << (p.time_limit ? std::to_string(*p.time_limit) : std::string("none")) << "\n";
  o << "beam_initial_width: " << p.beam_initial_width << "\n";
  o << "beam_growth: " << p.beam_growth << "\n";
  o << "dominance: " << (p.use_dominance ? "true" : "false") << "\n";
  o << "trivial_bound: " << (p.bound_mode == BoundMode::Trivial ? "true" : "false") << "\n";
  o << io::write_solution(r.solution);
  o << "elapsed: " << r.solution.stats.elapsed << "\n";
  o << "gap: " << r.gap << "\n";
  if (r.primal_integral) o << "primal_integral: " << *r.primal_integral << "\n";
  return o.str();
}

inline io::SolverConfig load_config(const std::optional<std::string>& path) {
  std::optional<std::string> p = path;
  if (!p)
    if (const char* env = std::getenv("DIDP_SOLVER_CONFIG"); env && *env) p = env;
  if (!p) return {};
  return io::parse_solver_config(read_file(*p));
}

// Loads, validates and solves a YAML model. Diagnostics go to `err`.
inline int run_solve(const SolveOptions& opt, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  Model model;
  io::SolverConfig cfg;
  try {
    model = io::load_model(read_file(opt.domain_path), read_file(opt.problem_path));
    cfg = load_config(opt.config_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  if (opt.time_limit) {
    if (*opt.time_limit < 0) {
      err << "error: time limit must be nonnegative\n";
      return kUsageError;
    }
    cfg.params.time_limit = *opt.time_limit;
  }
  ValidateOptions vopt;
  vopt.claims_first_solution_optimal = cfg.solver == SolverKind::Caasdy;
  vopt.beam_requested = cfg.solver == SolverKind::Cabs;
  auto diags = validate(model, vopt);
  for (const auto& d : diags) {
    if (d.severity == Severity::Info && opt.quiet) continue;
    const char* tag = d.severity == Severity::Error ? "error" : d.severity == Severity::Warning ? "warning" : "info";
    err << tag << ": " << d.message << "\n";
  }
  if (has_errors(diags)) return kUsageError;

  RunReport r;
  r.instance = opt.problem_path;
  r.solver = to_string(cfg.solver);
  r.params = cfg.params;
  try {
    r.solution = solve(model, cfg.solver, cfg.params);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  const Solution& s = r.solution;
  r.gap = optimality_gap(to_double(s.cost), to_double(s.bound), s.status == Status::Infeasible);
  if (opt.reference) {
    double horizon = cfg.params.time_limit.value_or(s.stats.elapsed);
    std::vector<CostEvent> ev;
    for (const auto& e : s.primal_events) ev.push_back({std::min(e.time, horizon), e.cost.as_double()});
    std::optional<double> infeasible_at;
    if (s.status == Status::Infeasible) infeasible_at = std::min(s.stats.elapsed, horizon);
    r.primal_integral = primal_integral(ev, *opt.reference, horizon, infeasible_at);
  }
  try {
    if (opt.output_path) write_file(*opt.output_path, io::write_solution(s));
    if (opt.events_path) {
      std::string csv;
      for (const auto& e : s.primal_events) csv += std::to_string(e.time) + "," + e.cost.to_string() + "\n";
      write_file(*opt.events_path, csv);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  if (!opt.quiet) out << format_report(r);
  return exit_code(s.status);
}

struct ConvertOptions {
  std::string problem_class;
  std::string input_path;
  std::string domain_out, problem_out;
  bench::ParseOptions parse;
};

inline int run_convert(const ConvertOptions& opt, std::ostream& err = std::cerr) {
  auto cls = bench::parse_problem_class(opt.problem_class);
  if (!cls) {
    err << "error: unknown problem class '" << opt.problem_class << "' (expected one of:";
    for (auto c : bench::kAllClasses) err << " " << bench::to_string(c);
    err << ")\n";
    return kUsageError;
  }
  try {
    Model m = bench::build(bench::parse_instance(*cls, read_file(opt.input_path), opt.parse));
    auto files = io::export_model(m);
    write_file(opt.domain_out, files.domain);
    write_file(opt.problem_out, files.problem);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kProved;
}

// "none", "inf" and "-inf" mean that no bound is available.
inline std::optional<double> parse_bound(const std::string& s) {
  if (s == "none" || s == "inf" || s == "-inf" || s == "+inf") return std::nullopt;
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) throw ParseError("not a number: '" + s + "'");
  return v;
}

// CSV lines "time,cost"; blank lines and lines starting with '#' are skipped.
inline std::vector<CostEvent> parse_events(const std::string& text) {
  std::vector<CostEvent> ev;
  std::istringstream in(text);
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("line " + std::to_string(no) + ": expected 'time,cost'");
    auto t = parse_bound(line.substr(0, comma));
    auto c = parse_bound(line.substr(comma + 1));
    if (!t || !c) throw ParseError("line " + std::to_string(no) + ": time and cost must be finite");
    ev.push_back({*t, *c});
  }
  return ev;
}

}  // namespace didp::cli
