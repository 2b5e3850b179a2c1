#include <CLI11.hpp>

#include <iostream>

#include "didp/cli.hpp"

int main(int argc, char** argv) {
  using namespace didp;
  CLI::App app{"Domain-independent dynamic programming solver"};
  app.require_subcommand(1);

  cli::SolveOptions so;
  std::string config, output, events;
  double time_limit = -1, reference = 0;
  auto* solve = app.add_subcommand("solve", "Solve a YAML model");
  solve->add_option("--domain", so.domain_path, "Domain file")->required()->check(CLI::ExistingFile);
  solve->add_option("--problem", so.problem_path, "Problem file")->required()->check(CLI::ExistingFile);
  auto* cfg_opt = solve->add_option("--config", config, "Solver configuration (default: $DIDP_SOLVER_CONFIG)");
  auto* out_opt = solve->add_option("--output", output, "Write the solution file here");
  auto* ev_opt = solve->add_option("--events", events, "Write improving solutions as time,cost CSV");
  auto* tl_opt = solve->add_option("--time-limit", time_limit, "Wall-clock limit in seconds");
  auto* ref_opt = solve->add_option("--reference", reference, "Best known cost for the primal integral");
  solve->add_flag("--quiet", so.quiet, "Only print errors");

  cli::ConvertOptions co;
  auto* convert = app.add_subcommand("convert", "Convert a raw benchmark instance to YAML");
  convert->add_option("--class", co.problem_class, "Problem class")->required();
  convert->add_option("--input", co.input_path, "Instance text")->required()->check(CLI::ExistingFile);
  convert->add_option("--domain", co.domain_out, "Domain file to write")->required();
  convert->add_option("--problem", co.problem_out, "Problem file to write")->required();
  convert->add_flag("--continuous", co.parse.continuous, "Allow fractional MDKP data");
  convert->add_flag("--preprocess-edges", co.parse.preprocess_edges, "Drop unusable m-PDTSP arcs");

  std::string primal, dual;
  bool infeasible = false;
  auto* gap = app.add_subcommand("gap", "Optimality gap of a primal and a dual bound ('none' if absent)");
  gap->add_option("primal", primal)->required();
  gap->add_option("dual", dual)->required();
  gap->add_flag("--infeasible", infeasible, "Infeasibility was proved");

  std::string events_in;
  double ref = 0, horizon = 0, infeasible_at = -1;
  auto* integral = app.add_subcommand("integral", "Primal integral of a time,cost event log");
  integral->add_option("--events", events_in, "CSV file")->required()->check(CLI::ExistingFile);
  integral->add_option("--reference", ref, "Best known cost")->required();
  integral->add_option("--horizon", horizon, "Time limit T")->required();
  auto* inf_opt = integral->add_option("--infeasible-at", infeasible_at, "Time infeasibility was proved");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kUsageError;
  }

  try {
    if (*solve) {
      if (*cfg_opt) so.config_path = config;
      if (*out_opt) so.output_path = output;
      if (*ev_opt) so.events_path = events;
      if (*tl_opt) so.time_limit = time_limit;
      if (*ref_opt) so.reference = reference;
      return cli::run_solve(so);
    }
    if (*convert) return cli::run_convert(co);
    if (*gap) {
      std::cout << optimality_gap(cli::parse_bound(primal), cli::parse_bound(dual), infeasible) << "\n";
      return cli::kProved;
    }
    if (*integral) {
      auto ev = cli::parse_events(cli::read_file(events_in));
      std::optional<double> inf;
      if (*inf_opt) inf = infeasible_at;
      std::cout << primal_integral(ev, ref, horizon, inf) << "\n";
      return cli::kProved;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsageError;
  }
  return cli::kUsageError;
}
